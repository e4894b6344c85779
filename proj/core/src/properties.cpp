#include <qtri/properties.hpp>

#include <algorithm>
#include <functional>
#include <string>
#include <utility>

#include <qtri/errors.hpp>

namespace qtri
{

std::string_view to_string(Verdict v) noexcept
{
    switch (v) {
    case Verdict::holds:
        return "holds";
    case Verdict::fails:
        return "fails";
    case Verdict::precondition:
        return "precondition-failed";
    case Verdict::inapplicable:
        return "inapplicable";
    }
    return "unknown";
}

NumSeq::NumSeq(std::vector<Rational> values, long offset) : values_(std::move(values)), offset_(offset)
{
    if (values_.empty()) {
        throw RangeError("numeric sequence must be non-empty");
    }
}

const Rational &NumSeq::at(long n) const
{
    if (n < offset_ || n > last_index()) {
        throw RangeError("sequence index " + std::to_string(n) + " outside [" + std::to_string(offset_) + ", "
                         + std::to_string(last_index()) + "]");
    }
    return values_[static_cast<std::size_t>(n - offset_)];
}

PolySeq::PolySeq(std::vector<Poly> polys, long offset) : polys_(std::move(polys)), offset_(offset)
{
    if (polys_.empty()) {
        throw RangeError("polynomial sequence must be non-empty");
    }
}

const Poly &PolySeq::at(long n) const
{
    if (n < offset_ || n > last_index()) {
        throw RangeError("sequence index " + std::to_string(n) + " outside [" + std::to_string(offset_) + ", "
                         + std::to_string(last_index()) + "]");
    }
    return polys_[static_cast<std::size_t>(n - offset_)];
}

namespace
{

enum class Direction { concave, convex };

PropertyReport check_log_triples(const NumSeq &s, Direction dir)
{
    PropertyReport rep;
    rep.property = dir == Direction::concave ? "log-concave" : "log-convex";
    rep.range = {"n", s.offset() + 1, s.last_index() - 1};

    const auto &x = s.values();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < 0) {
            rep.verdict = Verdict::precondition;
            Witness w;
            w.indices = {s.offset() + static_cast<long>(i)};
            w.value = x[i];
            w.detail = "negative term";
            rep.witness = std::move(w);
            return rep;
        }
    }
    if (x.size() < 3) {
        rep.notes.emplace_back("fewer than three terms: holds vacuously");
        return rep;
    }
    for (std::size_t i = 1; i + 1 < x.size(); ++i) {
        Rational d = x[i] * x[i] - x[i - 1] * x[i + 1];
        if (dir == Direction::convex) {
            d = -d;
        }
        if (d < 0) {
            rep.verdict = Verdict::fails;
            Witness w;
            w.indices = {s.offset() + static_cast<long>(i)};
            w.value = x[i] * x[i] - x[i - 1] * x[i + 1];
            w.detail = dir == Direction::concave ? "x_n^2 < x_{n-1} x_{n+1}" : "x_n^2 > x_{n-1} x_{n+1}";
            rep.witness = std::move(w);
            return rep;
        }
    }
    return rep;
}

// Visits the pairs (n, m), 1 <= n <= m <= len - 2 (positions), n-major.
PropertyReport check_q_pairs(const PolySeq &ps, Direction dir, bool strong)
{
    PropertyReport rep;
    const std::string base = dir == Direction::concave ? "q-log-concave" : "q-log-convex";
    rep.property = strong ? "strongly " + base : base;
    const auto &f = ps.polys();
    const long len = static_cast<long>(f.size());
    rep.range = {strong ? "(n,m)" : "n", ps.offset() + 1, ps.offset() + len - 2};
    if (len < 3) {
        rep.notes.emplace_back("fewer than three terms: holds vacuously");
        return rep;
    }

    for (long n = 1; n + 1 < len; ++n) {
        const long m_last = strong ? len - 2 : n;
        for (long m = n; m <= m_last; ++m) {
            const auto un = static_cast<std::size_t>(n);
            const auto um = static_cast<std::size_t>(m);
            Poly outer = f[un - 1] * f[um + 1];
            Poly inner = f[un] * f[um];
            QOrderResult r = dir == Direction::convex ? poly_geq_q(outer, inner) : poly_geq_q(inner, outer);
            if (!r) {
                rep.verdict = Verdict::fails;
                Witness w;
                w.indices = {ps.offset() + n, ps.offset() + m};
                w.coefficient = r.index;
                w.value = r.value;
                w.detail = dir == Direction::convex ? "f_{n-1} f_{m+1} - f_n f_m has a negative coefficient"
                                                    : "f_n f_m - f_{n-1} f_{m+1} has a negative coefficient";
                rep.witness = std::move(w);
                return rep;
            }
        }
    }
    return rep;
}

} // namespace

PropertyReport is_log_concave(const NumSeq &s)
{
    return check_log_triples(s, Direction::concave);
}

PropertyReport is_log_convex(const NumSeq &s)
{
    return check_log_triples(s, Direction::convex);
}

PropertyReport is_strongly_q_log_convex(const PolySeq &ps)
{
    return check_q_pairs(ps, Direction::convex, true);
}

PropertyReport is_strongly_q_log_concave(const PolySeq &ps)
{
    return check_q_pairs(ps, Direction::concave, true);
}

PropertyReport is_q_log_convex(const PolySeq &ps)
{
    return check_q_pairs(ps, Direction::convex, false);
}

PropertyReport is_q_log_concave(const PolySeq &ps)
{
    return check_q_pairs(ps, Direction::concave, false);
}

namespace
{

const Rational &term(const NumSeq &s, long k, const char *who)
{
    if (k < s.offset() || k > s.last_index()) {
        throw RangeError(std::string(who) + ": sequence has no term a_" + std::to_string(k));
    }
    return s.at(k);
}

} // namespace

RatMatrix toeplitz(const NumSeq &s, std::size_t size)
{
    RatMatrix m(size, size);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            m(i, j) = term(s, static_cast<long>(i - j), "toeplitz");
        }
    }
    return m;
}

RatMatrix hankel(const NumSeq &s, std::size_t size)
{
    RatMatrix m(size, size);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            m(i, j) = term(s, static_cast<long>(i + j), "hankel");
        }
    }
    return m;
}

PropertyReport is_TP_r(const RatMatrix &m, std::size_t r)
{
    if (r == 0) {
        throw RangeError("TP_r needs r >= 1");
    }
    PropertyReport rep;
    rep.property = "TP_" + std::to_string(r);
    const std::size_t cap = std::min(m.rows(), m.cols());
    if (r > cap) {
        rep.notes.push_back("order " + std::to_string(r) + " clamped to " + std::to_string(cap) + " for a "
                            + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
        r = cap;
    }
    rep.range = {"minor order", 1, static_cast<long>(r)};
    rep.notes.push_back("finite " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " truncation");

    for (std::size_t order = 1; order <= r; ++order) {
        const bool done = for_each_subset(m.rows(), order, [&](const std::vector<std::size_t> &rows) {
            return for_each_subset(m.cols(), order, [&](const std::vector<std::size_t> &cols) {
                Rational minor = order == 1 ? m(rows[0], cols[0]) : det_exact(m.submatrix(rows, cols));
                if (minor < 0) {
                    rep.verdict = Verdict::fails;
                    Witness w;
                    w.rows = rows;
                    w.cols = cols;
                    w.value = minor;
                    w.detail = "negative minor of order " + std::to_string(order);
                    rep.witness = std::move(w);
                    return false;
                }
                return true;
            });
        });
        if (!done) {
            break;
        }
    }
    return rep;
}

PropertyReport is_PF_r(const NumSeq &s, std::size_t r, std::size_t window)
{
    for (const auto &v : s.values()) {
        if (v < 0) {
            PropertyReport rep;
            rep.property = "PF_" + std::to_string(r);
            rep.verdict = Verdict::precondition;
            Witness w;
            w.value = v;
            w.detail = "negative term";
            rep.witness = std::move(w);
            return rep;
        }
    }
    PropertyReport rep = is_TP_r(toeplitz(s, window), r);
    rep.property = "PF_" + std::to_string(r);
    rep.notes.push_back("verdict covers the Toeplitz window of size " + std::to_string(window) + " only");
    return rep;
}

PropertyReport is_q_TP2(const PolyMatrix &m)
{
    PropertyReport rep;
    rep.property = "q-TP_2";
    rep.range = {"minor order", 2, 2};
    rep.notes.push_back("finite " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " truncation");
    for_each_subset(m.rows(), 2, [&](const std::vector<std::size_t> &rows) {
        return for_each_subset(m.cols(), 2, [&](const std::vector<std::size_t> &cols) {
            Poly minor = m(rows[0], cols[0]) * m(rows[1], cols[1]) - m(rows[0], cols[1]) * m(rows[1], cols[0]);
            QOrderResult r = nonnegative_coeffs(minor);
            if (!r) {
                rep.verdict = Verdict::fails;
                Witness w;
                w.rows = rows;
                w.cols = cols;
                w.coefficient = r.index;
                w.value = r.value;
                w.detail = "2x2 minor " + minor.to_string() + " is not >=_q 0";
                rep.witness = std::move(w);
                return false;
            }
            return true;
        });
    });
    return rep;
}

} // namespace qtri
