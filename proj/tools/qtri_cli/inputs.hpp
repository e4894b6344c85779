#ifndef QTRI_CLI_INPUTS_HPP
#define QTRI_CLI_INPUTS_HPP

#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include <qtri/properties.hpp>
#include <qtri/triangles.hpp>

namespace qtri::cli
{

// One polynomial per line, coefficients lowest degree first, separated by
// whitespace. "0" is the zero polynomial; blank lines and '#' comments are
// skipped. Throws qtri::ParseError with the line number.
PolySeq parse_poly_file(std::string_view text);
std::string format_poly_file(const PolySeq &ps);

// Coefficient scheme in JSON: {"constant": c}, {"affine": [slope, intercept]}
// or {"table": [...], "start": k0, "tail": c}. Numbers may be JSON integers or
// strings such as "3/2".
CoeffScheme parse_scheme(const nlohmann::json &j);

struct RecursiveSpec {
    CoeffScheme f, g;
};

// {"recurrence": "recursive", "f": ..., "g": ...} or
// {"recurrence": "penta", "gamma": ..., "e": ..., "f": ..., "g": ..., "h": ...}
using SchemeFile = std::variant<RecursiveSpec, PentaSchemes>;
SchemeFile parse_scheme_file(std::string_view text);

std::string read_text_file(const std::string &path);

} // namespace qtri::cli

#endif
