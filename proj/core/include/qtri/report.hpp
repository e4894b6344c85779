#ifndef QTRI_REPORT_HPP
#define QTRI_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <qtri/algebra.hpp>

namespace qtri
{

enum class Verdict {
    holds,          // property holds on the certified range
    fails,          // a counterexample was found; see the witness
    precondition,   // input violates the checker's precondition
    inapplicable,   // a hypothesis gate failed, so nothing is claimed
};

std::string_view to_string(Verdict v) noexcept;

// Closed index interval [first, last] that a verdict covers. `what` names the
// indexed quantity ("n", "k", "(n,m)", "minor order", ...).
struct CheckedRange {
    std::string what;
    long first = 0;
    long last = -1;
};

// Location and size of the first failure.
struct Witness {
    // Sequence positions involved: n for a triple test, (n, m) for the
    // pairwise test, (n, k) for triangle entries.
    std::vector<long> indices;
    // Row and column sets of an offending minor.
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    // Coefficient of q where a polynomial comparison went negative.
    std::optional<std::size_t> coefficient;
    // The offending value: x_n^2 - x_{n-1}x_{n+1}, the minor, the negative
    // coefficient, ...
    Rational value;
    std::string detail;
};

struct PropertyReport {
    std::string property;
    CheckedRange range;
    Verdict verdict = Verdict::holds;
    std::optional<Witness> witness;
    std::vector<std::string> notes;

    bool holds() const noexcept
    {
        return verdict == Verdict::holds;
    }
};

} // namespace qtri

#endif
