#include "qtri_cli/inputs.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <qtri/errors.hpp>

namespace qtri::cli
{

PolySeq parse_poly_file(std::string_view text)
{
    std::vector<Poly> polys;
    std::istringstream is{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream ls(line);
        std::vector<Rational> coeffs;
        std::string tok;
        while (ls >> tok) {
            try {
                coeffs.push_back(parse_rational(tok));
            } catch (const std::invalid_argument &e) {
                throw ParseError(lineno, e.what());
            }
        }
        polys.emplace_back(std::move(coeffs));
    }
    if (polys.empty()) {
        throw ParseError(lineno, "no polynomials in input");
    }
    return PolySeq(std::move(polys));
}

std::string format_poly_file(const PolySeq &ps)
{
    std::ostringstream os;
    for (const auto &p : ps.polys()) {
        if (p.is_zero()) {
            os << "0\n";
            continue;
        }
        for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
            os << (i ? " " : "") << to_string(p.coeffs()[i]);
        }
        os << '\n';
    }
    return os.str();
}

namespace
{

Rational number(const nlohmann::json &j)
{
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    throw ConfigError("expected an integer or a rational string, got " + j.dump());
}

CoeffScheme member_scheme(const nlohmann::json &j, const char *name)
{
    if (!j.contains(name)) {
        throw ConfigError(std::string("scheme file lacks \"") + name + "\"");
    }
    try {
        return parse_scheme(j.at(name));
    } catch (const ConfigError &e) {
        throw ConfigError(std::string(name) + ": " + e.what());
    }
}

} // namespace

CoeffScheme parse_scheme(const nlohmann::json &j)
{
    try {
        if (j.is_number_integer() || j.is_string()) {
            return CoeffScheme::constant(number(j));
        }
        if (!j.is_object()) {
            throw ConfigError("scheme must be an object, got " + j.dump());
        }
        if (j.contains("constant")) {
            return CoeffScheme::constant(number(j.at("constant")));
        }
        if (j.contains("affine")) {
            const auto &a = j.at("affine");
            if (!a.is_array() || a.size() != 2) {
                throw ConfigError("affine scheme needs [slope, intercept]");
            }
            return CoeffScheme::affine(number(a[0]), number(a[1]));
        }
        if (j.contains("table")) {
            std::vector<Rational> values;
            for (const auto &v : j.at("table")) {
                values.push_back(number(v));
            }
            const long start = j.value("start", 0L);
            std::optional<Rational> tail;
            if (j.contains("tail")) {
                tail = number(j.at("tail"));
            }
            return CoeffScheme::table(std::move(values), start, std::move(tail));
        }
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError(e.what());
    }
    throw ConfigError("unknown scheme kind in " + j.dump());
}

SchemeFile parse_scheme_file(std::string_view text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ConfigError(std::string("scheme file is not valid JSON: ") + e.what());
    }
    const std::string kind = j.value("recurrence", "");
    if (kind == "recursive") {
        return RecursiveSpec{member_scheme(j, "f"), member_scheme(j, "g")};
    }
    if (kind == "penta") {
        return PentaSchemes{member_scheme(j, "gamma"), member_scheme(j, "e"), member_scheme(j, "f"),
                            member_scheme(j, "g"), member_scheme(j, "h")};
    }
    throw ConfigError("scheme file needs \"recurrence\": \"recursive\" or \"penta\"");
}

std::string read_text_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace qtri::cli
