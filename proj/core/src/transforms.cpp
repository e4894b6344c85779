#include <qtri/transforms.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <qtri/errors.hpp>
#include <qtri/triangles.hpp>

namespace qtri
{

PolySeq bisnomial_transform(const PolySeq &ps, std::size_t s, std::size_t n_max)
{
    if (s == 0) {
        throw ConfigError("bi^s-nomial transform needs s >= 1");
    }
    const std::size_t needed = s * n_max + 1;
    if (ps.size() < needed) {
        throw RangeError("bi^s-nomial transform with s = " + std::to_string(s) + ", n_max = " + std::to_string(n_max)
                         + " needs " + std::to_string(needed) + " input polynomials, got "
                         + std::to_string(ps.size()));
    }
    const auto &f = ps.polys();
    std::vector<Poly> out;
    out.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        const auto row = bisnomial_row(n, s);
        Poly b;
        for (std::size_t k = 0; k < row.size(); ++k) {
            b += row[k] * f[k];
        }
        out.push_back(std::move(b));
    }
    return PolySeq(std::move(out));
}

PolySeq window_sum(const PolySeq &ps, std::size_t s)
{
    if (ps.size() < s + 1) {
        throw RangeError("window sum of width " + std::to_string(s + 1) + " needs at least " + std::to_string(s + 1)
                         + " polynomials, got " + std::to_string(ps.size()));
    }
    const auto &x = ps.polys();
    std::vector<Poly> out;
    out.reserve(x.size() - s);
    for (std::size_t k = 0; k + s < x.size(); ++k) {
        Poly y;
        for (std::size_t j = 0; j <= s; ++j) {
            y += x[k + j];
        }
        out.push_back(std::move(y));
    }
    return PolySeq(std::move(out), ps.offset());
}

void BilinearForm::add(std::size_t i, std::size_t j, const Integer &c)
{
    if (c == 0) {
        return;
    }
    const Key key = std::minmax(i, j);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second == 0) {
        terms_.erase(it);
    }
}

Integer BilinearForm::coeff(std::size_t i, std::size_t j) const
{
    auto it = terms_.find(std::minmax(i, j));
    return it == terms_.end() ? Integer(0) : it->second;
}

Poly BilinearForm::evaluate(const PolySeq &ps) const
{
    Poly out;
    for (const auto &[key, c] : terms_) {
        if (key.second >= ps.size()) {
            throw RangeError("form uses f_" + std::to_string(key.second) + " but only "
                             + std::to_string(ps.size()) + " polynomials were given");
        }
        out += Rational(c) * (ps.polys()[key.first] * ps.polys()[key.second]);
    }
    return out;
}

std::string format_bilinear_form(const BilinearForm &form)
{
    std::ostringstream os;
    for (const auto &[key, c] : form.terms()) {
        os << key.first << ' ' << key.second << ' ' << c.get_str() << '\n';
    }
    return os.str();
}

BilinearForm parse_bilinear_form(std::string_view text)
{
    BilinearForm form;
    std::istringstream is{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream ls(line);
        long i = -1;
        long j = -1;
        std::string c;
        std::string extra;
        if (!(ls >> i >> j >> c) || (ls >> extra) || i < 0 || j < 0) {
            throw ParseError(lineno, "expected 'i j coeff'");
        }
        Integer value;
        if (value.set_str(c, 10) != 0) {
            throw ParseError(lineno, "bad coefficient '" + c + "'");
        }
        form.add(static_cast<std::size_t>(i), static_cast<std::size_t>(j), value);
    }
    return form;
}

BilinearForm transform_minor_form(std::size_t n, std::size_t m, std::size_t s)
{
    if (n == 0 || m < n) {
        throw RangeError("minor form needs 1 <= n <= m");
    }
    BilinearForm form;
    auto accumulate = [&form, s](std::size_t a, std::size_t b, int sign) {
        const auto ra = bisnomial_row(a, s);
        const auto rb = bisnomial_row(b, s);
        for (std::size_t i = 0; i < ra.size(); ++i) {
            for (std::size_t j = 0; j < rb.size(); ++j) {
                Integer c = ra[i].get_num() * rb[j].get_num();
                if (sign < 0) {
                    c = -c;
                }
                form.add(i, j, c);
            }
        }
    };
    accumulate(n - 1, m + 1, 1);
    accumulate(n, m, -1);
    return form;
}

PreservationReport check_preservation(const PolySeq &ps, std::size_t s, std::size_t n_max,
                                      PropertyDirection direction)
{
    auto check = [direction](const PolySeq &x) {
        return direction == PropertyDirection::convex ? is_strongly_q_log_convex(x) : is_strongly_q_log_concave(x);
    };

    PreservationReport rep;
    rep.direction = direction;
    rep.s = s;
    rep.n_max = n_max;
    rep.input = check(ps);
    if (!rep.input.holds()) {
        rep.verdict = Verdict::inapplicable;
        rep.output.property = rep.input.property;
        rep.output.verdict = Verdict::inapplicable;
        rep.output.notes.emplace_back("input does not have the property; transform not checked");
        return rep;
    }
    rep.transformed = bisnomial_transform(ps, s, n_max);
    rep.output = check(rep.transformed);
    rep.verdict = rep.output.verdict;
    return rep;
}

} // namespace qtri
