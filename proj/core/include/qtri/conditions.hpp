#ifndef QTRI_CONDITIONS_HPP
#define QTRI_CONDITIONS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <qtri/algebra.hpp>
#include <qtri/report.hpp>
#include <qtri/triangles.hpp>

namespace qtri
{

// One inequality "lhs >= rhs". For k-indexed systems, k/lhs/rhs describe the
// lowest failing k (unset when the clause holds on the whole range).
struct ClauseResult {
    std::string text;
    bool holds = true;
    std::optional<long> k;
    std::optional<Rational> lhs;
    std::optional<Rational> rhs;
};

struct ConditionResult {
    std::string id;
    bool established = true;
    std::vector<ClauseResult> clauses;
};

// Sufficient-condition check. A condition that fails is reported as "not
// established"; nothing is claimed about the property itself.
struct ConditionReport {
    std::string theorem;
    CheckedRange range;
    std::vector<ConditionResult> conditions;
    // Standing hypotheses, e.g. log-concavity of the coefficient sequences.
    std::vector<PropertyReport> hypotheses;
    std::vector<std::string> annotations;

    bool all_established() const noexcept;
    const ConditionResult &condition(const std::string &id) const;
};

// Conditions (1)-(10) of the five-term recurrence for every k in [2, k_max],
// plus nonnegativity and log-concavity of each sequence on its domain
// (gamma from 2, e from 1, f/g/h from 0, up to k_max + 1). Sequence values
// below their domain start count as 0.
ConditionReport check_thm21(const PentaSchemes &schemes, long k_max);

// Five conditions for log-concave rows of the constant-coefficient array.
// Condition (5) is evaluated literally ("2 beta g >= g e + gamma h"); an
// annotation is added whenever "2 beta g >= alpha f + gamma h" would give a
// different answer.
ConditionReport check_cor22(const ConstParams &p);

// Four conditions for strong q-log-convexity of the row generating
// functions, each compound inequality split into its clauses.
ConditionReport check_thm34(const ConstParams &p);

// Checks, for 1 <= n <= n_max, on the array gen_const(p, n_max):
//   b_{n,0} = A_n(q),
//   q^2 b_{n,0} = (alpha q^2 + beta q^3 + gamma q^4) b_{n-1,0}
//                 + (g q + (f - alpha) q^2 + (e - beta) q^3) b_{n-1,1} + h b_{n-1,2},
//   q^2 b_{n,k} = gamma q^4 b_{n-1,k-2} + e q^3 b_{n-1,k-1} + f q^2 b_{n-1,k}
//                 + g q b_{n-1,k+1} + h b_{n-1,k+2}           (2 <= k <= 2n),
// and the initial row b_{0,0} = 1, b_{0,k} = 0.
PropertyReport verify_eq5_recurrence(const ConstParams &p, std::size_t n_max);

} // namespace qtri

#endif
