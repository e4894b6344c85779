#include "qtri_cli/report_json.hpp"

namespace qtri::cli
{

Json to_json(const Rational &r)
{
    return to_string(r);
}

Json to_json(const Poly &p)
{
    Json coeffs = Json::array();
    for (const auto &c : p.coeffs()) {
        coeffs.push_back(to_json(c));
    }
    return coeffs;
}

Json to_json(const PolySeq &ps)
{
    Json out = Json::array();
    for (const auto &p : ps.polys()) {
        out.push_back(to_json(p));
    }
    return out;
}

namespace
{

Json range_json(const CheckedRange &r)
{
    return Json{{"what", r.what}, {"first", r.first}, {"last", r.last}};
}

} // namespace

Json to_json(const PropertyReport &r)
{
    Json j;
    j["kind"] = "property";
    j["property"] = r.property;
    j["range"] = range_json(r.range);
    j["verdict"] = std::string(to_string(r.verdict));
    if (r.witness) {
        const Witness &w = *r.witness;
        Json wj;
        wj["indices"] = w.indices;
        wj["rows"] = w.rows;
        wj["cols"] = w.cols;
        wj["coefficient"] = w.coefficient ? Json(*w.coefficient) : Json(nullptr);
        wj["value"] = to_json(w.value);
        wj["detail"] = w.detail;
        j["witness"] = std::move(wj);
    } else {
        j["witness"] = nullptr;
    }
    j["notes"] = r.notes;
    return j;
}

Json to_json(const ConditionReport &r)
{
    Json j;
    j["kind"] = "conditions";
    j["theorem"] = r.theorem;
    j["range"] = r.range.what.empty() ? Json(nullptr) : range_json(r.range);
    j["verdict"] = r.all_established() ? "established" : "not-established";
    Json conds = Json::array();
    for (const auto &c : r.conditions) {
        Json cj;
        cj["id"] = c.id;
        cj["established"] = c.established;
        Json clauses = Json::array();
        for (const auto &cl : c.clauses) {
            Json k;
            k["clause"] = cl.text;
            k["holds"] = cl.holds;
            k["k"] = cl.k ? Json(*cl.k) : Json(nullptr);
            k["lhs"] = cl.lhs ? to_json(*cl.lhs) : Json(nullptr);
            k["rhs"] = cl.rhs ? to_json(*cl.rhs) : Json(nullptr);
            clauses.push_back(std::move(k));
        }
        cj["clauses"] = std::move(clauses);
        conds.push_back(std::move(cj));
    }
    j["conditions"] = std::move(conds);
    Json hyps = Json::array();
    for (const auto &h : r.hypotheses) {
        hyps.push_back(to_json(h));
    }
    j["hypotheses"] = std::move(hyps);
    j["annotations"] = r.annotations;
    return j;
}

Json to_json(const PreservationReport &r)
{
    Json j;
    j["kind"] = "preservation";
    j["direction"] = r.direction == PropertyDirection::convex ? "convex" : "concave";
    j["s"] = r.s;
    j["n_max"] = r.n_max;
    j["verdict"] = std::string(to_string(r.verdict));
    j["input"] = to_json(r.input);
    j["transformed"] = r.verdict == Verdict::inapplicable ? Json(nullptr) : to_json(r.transformed);
    j["output"] = to_json(r.output);
    return j;
}

} // namespace qtri::cli
