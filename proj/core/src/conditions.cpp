#include <qtri/conditions.hpp>

#include <array>
#include <functional>
#include <utility>

#include <qtri/errors.hpp>
#include <qtri/properties.hpp>

namespace qtri
{

bool ConditionReport::all_established() const noexcept
{
    for (const auto &c : conditions) {
        if (!c.established) {
            return false;
        }
    }
    for (const auto &h : hypotheses) {
        if (!h.holds()) {
            return false;
        }
    }
    return true;
}

const ConditionResult &ConditionReport::condition(const std::string &id) const
{
    for (const auto &c : conditions) {
        if (c.id == id) {
            return c;
        }
    }
    throw RangeError(theorem + " has no condition '" + id + "'");
}

namespace
{

struct Inequality {
    std::string text;
    Rational lhs;
    Rational rhs;
};

ClauseResult eval(Inequality q)
{
    ClauseResult c;
    c.text = std::move(q.text);
    c.holds = q.lhs >= q.rhs;
    c.lhs = std::move(q.lhs);
    c.rhs = std::move(q.rhs);
    return c;
}

ConditionResult condition(std::string id, std::vector<Inequality> clauses)
{
    ConditionResult r;
    r.id = std::move(id);
    for (auto &q : clauses) {
        r.clauses.push_back(eval(std::move(q)));
        r.established = r.established && r.clauses.back().holds;
    }
    return r;
}

// Sequence view that reads 0 below the domain start.
struct Seq {
    const CoeffScheme *scheme;
    long start;
    const char *name;

    Rational operator()(long k) const
    {
        return k < start ? Rational(0) : scheme->at(k);
    }
};

// 2 x_k y_k >= x_{k-1} y_{k+1} + x_{k+1} y_{k-1}
Inequality cross(const Seq &x, const Seq &y, long k)
{
    return {std::string("2 ") + x.name + "_k " + y.name + "_k >= " + x.name + "_{k-1} " + y.name + "_{k+1} + "
                + x.name + "_{k+1} " + y.name + "_{k-1}",
            Rational(2 * x(k) * y(k)), Rational(x(k - 1) * y(k + 1) + x(k + 1) * y(k - 1))};
}

// a_{k+1} b_{k-1} >= c_{k+1} d_{k-1}
Inequality shifted(const Seq &a, const Seq &b, const Seq &c, const Seq &d, long k)
{
    return {std::string(a.name) + "_{k+1} " + b.name + "_{k-1} >= " + c.name + "_{k+1} " + d.name + "_{k-1}",
            Rational(a(k + 1) * b(k - 1)), Rational(c(k + 1) * d(k - 1))};
}

} // namespace

ConditionReport check_thm21(const PentaSchemes &s, long k_max)
{
    const Seq gamma{&s.gamma, 2, "gamma"};
    const Seq e{&s.e, 1, "e"};
    const Seq f{&s.f, 0, "f"};
    const Seq g{&s.g, 0, "g"};
    const Seq h{&s.h, 0, "h"};
    const std::array<Seq, 5> seqs{gamma, e, f, g, h};

    for (const auto &q : seqs) {
        if (auto gap = q.scheme->first_gap(q.start, k_max + 1)) {
            throw ConfigError(std::string("scheme ") + q.name + " is undefined at k = " + std::to_string(*gap));
        }
    }

    using Clauses = std::function<std::vector<Inequality>(long)>;
    const std::vector<std::pair<std::string, Clauses>> system{
        {"1", [&](long k) { return std::vector<Inequality>{cross(gamma, e, k)}; }},
        {"2", [&](long k) { return std::vector<Inequality>{cross(gamma, f, k)}; }},
        {"3", [&](long k) { return std::vector<Inequality>{cross(gamma, g, k)}; }},
        {"4", [&](long k) { return std::vector<Inequality>{cross(gamma, h, k)}; }},
        {"5", [&](long k) { return std::vector<Inequality>{cross(e, f, k), shifted(e, e, gamma, f, k)}; }},
        {"6", [&](long k) { return std::vector<Inequality>{cross(e, g, k), shifted(f, e, gamma, g, k)}; }},
        {"7", [&](long k) { return std::vector<Inequality>{cross(e, h, k), shifted(g, e, gamma, h, k)}; }},
        {"8", [&](long k) { return std::vector<Inequality>{cross(f, g, k), shifted(f, f, e, g, k)}; }},
        {"9", [&](long k) { return std::vector<Inequality>{cross(f, h, k), shifted(g, f, e, h, k)}; }},
        {"10", [&](long k) { return std::vector<Inequality>{cross(g, h, k), shifted(g, g, f, h, k)}; }},
    };

    ConditionReport rep;
    rep.theorem = "thm21";
    rep.range = {"k", 2, k_max};
    if (k_max < 2) {
        rep.annotations.emplace_back("k_max < 2: the conditions are vacuous");
    }

    for (const auto &[id, clauses_at] : system) {
        ConditionResult res;
        res.id = id;
        for (long k = 2; k <= k_max; ++k) {
            auto ineqs = clauses_at(k);
            if (res.clauses.empty()) {
                for (auto &q : ineqs) {
                    ClauseResult c;
                    c.text = q.text;
                    res.clauses.push_back(std::move(c));
                }
            }
            for (std::size_t i = 0; i < ineqs.size(); ++i) {
                auto &c = res.clauses[i];
                if (c.holds && ineqs[i].lhs < ineqs[i].rhs) {
                    c.holds = false;
                    c.k = k;
                    c.lhs = ineqs[i].lhs;
                    c.rhs = ineqs[i].rhs;
                    res.established = false;
                }
            }
        }
        if (res.clauses.empty()) {
            for (auto &q : clauses_at(2)) {
                ClauseResult c;
                c.text = q.text;
                res.clauses.push_back(std::move(c));
            }
        }
        rep.conditions.push_back(std::move(res));
    }

    for (const auto &q : seqs) {
        std::vector<Rational> values;
        for (long k = q.start; k <= k_max + 1; ++k) {
            values.push_back(q(k));
        }
        PropertyReport hyp = is_log_concave(NumSeq(std::move(values), q.start));
        hyp.property = std::string(q.name) + "_k nonnegative and log-concave";
        rep.hypotheses.push_back(std::move(hyp));
    }
    return rep;
}

ConditionReport check_cor22(const ConstParams &p)
{
    const auto &[alpha, beta, gamma, e, f, g, h] = p;
    ConditionReport rep;
    rep.theorem = "cor22";
    rep.conditions.push_back(condition("1", {{"g^2 >= f h", g * g, f * h}, {"f >= alpha", f, alpha}}));
    rep.conditions.push_back(condition(
        "2", {{"beta^2 >= alpha gamma", beta * beta, alpha * gamma}, {"2 beta h >= alpha g", 2 * beta * h, alpha * g}}));
    rep.conditions.push_back(condition("3", {{"f e >= gamma g", f * e, gamma * g}, {"f g >= e h", f * g, e * h}}));
    rep.conditions.push_back(condition(
        "4", {{"f^2 >= e g", f * f, e * g}, {"e g >= gamma h", e * g, gamma * h}, {"e^2 >= gamma f", e * e, gamma * f}}));
    rep.conditions.push_back(condition("5", {{"2 beta f >= alpha e + gamma g", 2 * beta * f, alpha * e + gamma * g},
                                             {"2 beta g >= g e + gamma h", 2 * beta * g, g * e + gamma * h}}));

    const bool literal = 2 * beta * g >= g * e + gamma * h;
    const bool candidate = 2 * beta * g >= alpha * f + gamma * h;
    if (literal != candidate) {
        rep.annotations.push_back(std::string("condition (5), second clause: read literally (2 beta g >= g e + gamma h) it ")
                                  + (literal ? "holds" : "fails") + ", but the reading 2 beta g >= alpha f + gamma h "
                                  + (candidate ? "holds" : "fails"));
    }
    return rep;
}

ConditionReport check_thm34(const ConstParams &p)
{
    const auto &[alpha, beta, gamma, e, f, g, h] = p;
    const Rational zero(0);
    ConditionReport rep;
    rep.theorem = "thm34";
    rep.conditions.push_back(
        condition("1", {{"f >= alpha", f, alpha}, {"e >= beta", e, beta}, {"g >= 0", g, zero}, {"h >= 0", h, zero}}));
    rep.conditions.push_back(condition("2", {{"alpha f >= beta g", alpha * f, beta * g},
                                             {"beta g >= gamma h", beta * g, gamma * h},
                                             {"f^2 >= e g", f * f, e * g},
                                             {"e g >= gamma h", e * g, gamma * h}}));
    rep.conditions.push_back(condition("3", {{"alpha e >= gamma g", alpha * e, gamma * g},
                                             {"e f >= gamma g", e * f, gamma * g},
                                             {"beta f >= gamma g", beta * f, gamma * g}}));
    rep.conditions.push_back(condition("4", {{"beta e >= gamma f", beta * e, gamma * f},
                                             {"alpha g >= beta h", alpha * g, beta * h},
                                             {"g^2 >= f h", g * g, f * h},
                                             {"f g >= e h", f * g, e * h}}));
    return rep;
}

PropertyReport verify_eq5_recurrence(const ConstParams &p, std::size_t n_max)
{
    PropertyReport rep;
    rep.property = "b-matrix recurrence (cleared by q^2)";
    rep.range = {"n", 1, static_cast<long>(n_max)};

    const Triangle t = gen_const(p, n_max);
    const PolyMatrix b = b_matrix(t, n_max);
    auto at = [&b](std::size_t n, long k) -> Poly {
        if (k < 0 || static_cast<std::size_t>(k) >= b.cols()) {
            return {};
        }
        return b(n, static_cast<std::size_t>(k));
    };
    auto fail = [&rep](long n, long k, const Poly &lhs, const Poly &rhs, std::string what) {
        const Poly d = lhs - rhs;
        std::size_t i = 0;
        while (i < d.coeffs().size() && d.coeffs()[i] == 0) {
            ++i;
        }
        rep.verdict = Verdict::fails;
        Witness w;
        w.indices = {n, k};
        w.coefficient = i;
        w.value = d.coeff(i);
        w.detail = std::move(what);
        rep.witness = std::move(w);
    };

    if (at(0, 0) != Poly{1}) {
        fail(0, 0, at(0, 0), Poly{1}, "b_{0,0} != 1");
        return rep;
    }
    for (long k = 1; k < static_cast<long>(b.cols()); ++k) {
        if (!at(0, k).is_zero()) {
            fail(0, k, at(0, k), {}, "b_{0,k} != 0");
            return rep;
        }
    }

    const Poly q1 = Poly::monomial(1, 1);
    const Poly q2 = Poly::monomial(1, 2);
    const Poly q3 = Poly::monomial(1, 3);
    const Poly q4 = Poly::monomial(1, 4);
    const Poly head = Poly::monomial(p.alpha, 2) + Poly::monomial(p.beta, 3) + Poly::monomial(p.gamma, 4);
    const Poly mid = Poly::monomial(p.g, 1) + Poly::monomial(Rational(p.f - p.alpha), 2)
                     + Poly::monomial(Rational(p.e - p.beta), 3);

    for (std::size_t n = 1; n <= n_max; ++n) {
        const long sn = static_cast<long>(n);
        if (at(n, 0) != row_gen_fn(t, n)) {
            fail(sn, 0, at(n, 0), row_gen_fn(t, n), "b_{n,0} != A_n(q)");
            return rep;
        }
        {
            const Poly lhs = q2 * at(n, 0);
            const Poly rhs = head * at(n - 1, 0) + mid * at(n - 1, 1) + p.h * at(n - 1, 2);
            if (lhs != rhs) {
                fail(sn, 0, lhs, rhs, "k = 0 identity");
                return rep;
            }
        }
        for (long k = 2; k <= 2 * sn; ++k) {
            const Poly lhs = q2 * at(n, k);
            const Poly rhs = p.gamma * (q4 * at(n - 1, k - 2)) + p.e * (q3 * at(n - 1, k - 1))
                             + p.f * (q2 * at(n - 1, k)) + p.g * (q1 * at(n - 1, k + 1)) + p.h * at(n - 1, k + 2);
            if (lhs != rhs) {
                fail(sn, k, lhs, rhs, "k >= 2 identity");
                return rep;
            }
        }
    }
    return rep;
}

} // namespace qtri
