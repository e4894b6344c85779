#ifndef QTRI_TRANSFORMS_HPP
#define QTRI_TRANSFORMS_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include <qtri/algebra.hpp>
#include <qtri/properties.hpp>
#include <qtri/report.hpp>

namespace qtri
{

// B_n(q) = sum_{k=0}^{s n} C(n,k)_s f_k(q) for n = 0..n_max, where f_k is the
// k-th element of ps counted from its first element. Throws RangeError unless
// ps has at least s n_max + 1 elements.
PolySeq bisnomial_transform(const PolySeq &ps, std::size_t s, std::size_t n_max);

// y_k = x_k + x_{k+1} + ... + x_{k+s}; the output is s elements shorter.
PolySeq window_sum(const PolySeq &ps, std::size_t s);

// Integer quadratic form sum c_ij f_i f_j over formal symbols f_0, f_1, ...,
// keyed with i <= j. The coefficient of a key (i, j), i < j, already merges
// f_i f_j and f_j f_i.
class BilinearForm
{
public:
    using Key = std::pair<std::size_t, std::size_t>;

    void add(std::size_t i, std::size_t j, const Integer &c);
    Integer coeff(std::size_t i, std::size_t j) const;
    const std::map<Key, Integer> &terms() const noexcept
    {
        return terms_;
    }
    bool empty() const noexcept
    {
        return terms_.empty();
    }

    // Substitutes concrete polynomials for the symbols.
    Poly evaluate(const PolySeq &ps) const;

    friend bool operator==(const BilinearForm &, const BilinearForm &) = default;

private:
    std::map<Key, Integer> terms_;
};

// Lines "i j coeff" in increasing (i, j) order.
std::string format_bilinear_form(const BilinearForm &form);
// Accepts the format above; blank lines and '#' comments are skipped.
BilinearForm parse_bilinear_form(std::string_view text);

// B_{n-1} B_{m+1} - B_n B_m expanded over the symbols f_i, using only
// bi^s-nomial coefficients.
BilinearForm transform_minor_form(std::size_t n, std::size_t m, std::size_t s);

enum class PropertyDirection { convex, concave };

struct PreservationReport {
    PropertyDirection direction = PropertyDirection::convex;
    std::size_t s = 1;
    std::size_t n_max = 0;
    // Overall: inapplicable when the input lacks the property, otherwise the
    // output verdict.
    Verdict verdict = Verdict::holds;
    PropertyReport input;
    PolySeq transformed{std::vector<Poly>{Poly{}}};
    PropertyReport output;
};

// Gate on the input property, apply the bi^s-nomial transform, then check the
// same strong property on B_0..B_{n_max}.
PreservationReport check_preservation(const PolySeq &ps, std::size_t s, std::size_t n_max,
                                      PropertyDirection direction);

} // namespace qtri

#endif
