#ifndef QTRI_PROPERTIES_HPP
#define QTRI_PROPERTIES_HPP

#include <cstddef>
#include <vector>

#include <qtri/algebra.hpp>
#include <qtri/matrix.hpp>
#include <qtri/report.hpp>

namespace qtri
{

// Finite window x_offset, ..., x_{offset + size - 1} of a numeric sequence.
class NumSeq
{
public:
    explicit NumSeq(std::vector<Rational> values, long offset = 0);

    const std::vector<Rational> &values() const noexcept
    {
        return values_;
    }
    long offset() const noexcept
    {
        return offset_;
    }
    long last_index() const noexcept
    {
        return offset_ + static_cast<long>(values_.size()) - 1;
    }
    std::size_t size() const noexcept
    {
        return values_.size();
    }
    // Value at absolute index n; throws RangeError outside the window.
    const Rational &at(long n) const;

private:
    std::vector<Rational> values_;
    long offset_;
};

// Finite window of a polynomial sequence, indexed like NumSeq.
class PolySeq
{
public:
    explicit PolySeq(std::vector<Poly> polys, long offset = 0);

    const std::vector<Poly> &polys() const noexcept
    {
        return polys_;
    }
    long offset() const noexcept
    {
        return offset_;
    }
    long last_index() const noexcept
    {
        return offset_ + static_cast<long>(polys_.size()) - 1;
    }
    std::size_t size() const noexcept
    {
        return polys_.size();
    }
    const Poly &at(long n) const;

private:
    std::vector<Poly> polys_;
    long offset_;
};

// x_n^2 >= x_{n-1} x_{n+1} at every interior n. Negative entries give a
// precondition verdict; fewer than three values hold vacuously.
PropertyReport is_log_concave(const NumSeq &s);
// x_n^2 <= x_{n-1} x_{n+1} at every interior n.
PropertyReport is_log_convex(const NumSeq &s);

// f_{n-1} f_{m+1} - f_n f_m >=_q 0 for every m >= n >= 1 inside the window
// (indices relative to the first element). Pairs are visited n-major, so the
// witness is the lexicographically least failing (n, m).
PropertyReport is_strongly_q_log_convex(const PolySeq &ps);
// f_n f_m - f_{n-1} f_{m+1} >=_q 0 for every m >= n >= 1.
PropertyReport is_strongly_q_log_concave(const PolySeq &ps);
// Adjacent-triple variants (m = n only).
PropertyReport is_q_log_convex(const PolySeq &ps);
PropertyReport is_q_log_concave(const PolySeq &ps);

// size x size lower-triangular matrix [a_{i-j}], using a_0..a_{size-1}.
RatMatrix toeplitz(const NumSeq &s, std::size_t size);
// size x size matrix [a_{i+j}], using a_0..a_{2 size - 2}.
RatMatrix hankel(const NumSeq &s, std::size_t size);

// All minors of order 1..r are nonnegative. Minors are enumerated by order,
// then lexicographically by row set, then by column set; the first negative
// one is the witness. r above min(rows, cols) is clamped (noted).
PropertyReport is_TP_r(const RatMatrix &m, std::size_t r);

// Polya frequency of order r on a finite window: TP_r of toeplitz(s, window).
PropertyReport is_PF_r(const NumSeq &s, std::size_t r, std::size_t window);

// Every 2x2 minor of a polynomial matrix is >=_q 0.
PropertyReport is_q_TP2(const PolyMatrix &m);

// Calls visit(subset) for each k-subset of {0..n-1} in lexicographic order;
// stops early when visit returns false. Returns false if stopped.
template <typename Visit>
bool for_each_subset(std::size_t n, std::size_t k, Visit &&visit)
{
    if (k > n) {
        return true;
    }
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) {
        idx[i] = i;
    }
    while (true) {
        if (!visit(static_cast<const std::vector<std::size_t> &>(idx))) {
            return false;
        }
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) {
            --i;
        }
        if (i == 0) {
            return true;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

} // namespace qtri

#endif
