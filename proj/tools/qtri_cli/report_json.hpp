#ifndef QTRI_CLI_REPORT_JSON_HPP
#define QTRI_CLI_REPORT_JSON_HPP

#include <json.hpp>

#include <qtri/conditions.hpp>
#include <qtri/properties.hpp>
#include <qtri/report.hpp>
#include <qtri/transforms.hpp>

namespace qtri::cli
{

// Insertion-ordered so that identical runs serialize byte-identically.
using Json = nlohmann::ordered_json;

Json to_json(const Rational &r);
Json to_json(const Poly &p);
Json to_json(const PolySeq &ps);
Json to_json(const PropertyReport &r);
Json to_json(const ConditionReport &r);
Json to_json(const PreservationReport &r);

} // namespace qtri::cli

#endif
