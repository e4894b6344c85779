#ifndef QTRI_ALGEBRA_HPP
#define QTRI_ALGEBRA_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace qtri
{

// Exact rational scalar. GMP keeps mpq_class values canonical (positive
// denominator, reduced) after every arithmetic operation; values built from
// strings go through parse_rational, which canonicalizes.
//
// NOTE: gmpxx uses expression templates, so never bind an arithmetic
// expression to `auto`.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "7", "-3", "6/4" (stored as 3/2). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// Integer form when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational &value);

// Dense univariate polynomial in q with rational coefficients. Index i of
// coeffs() holds the coefficient of q^i; the zero polynomial has no
// coefficients and every nonzero polynomial has a nonzero leading one.
class Poly
{
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<long> coeffs);

    static Poly constant(const Rational &c);
    // c * q^degree
    static Poly monomial(const Rational &c, std::size_t degree);

    bool is_zero() const noexcept
    {
        return coeffs_.empty();
    }
    // -1 for the zero polynomial.
    long degree() const noexcept
    {
        return static_cast<long>(coeffs_.size()) - 1;
    }
    const std::vector<Rational> &coeffs() const noexcept
    {
        return coeffs_;
    }
    // Zero past the degree.
    Rational coeff(std::size_t i) const;

    // Multiplication by q^k.
    Poly shifted(std::size_t k) const;

    Poly &operator+=(const Poly &other);
    Poly &operator-=(const Poly &other);
    Poly &operator*=(const Poly &other);
    Poly &operator*=(const Rational &scalar);

    friend Poly operator+(Poly lhs, const Poly &rhs)
    {
        return lhs += rhs;
    }
    friend Poly operator-(Poly lhs, const Poly &rhs)
    {
        return lhs -= rhs;
    }
    friend Poly operator*(const Poly &lhs, const Poly &rhs);
    friend Poly operator*(Poly lhs, const Rational &scalar)
    {
        return lhs *= scalar;
    }
    friend Poly operator*(const Rational &scalar, Poly rhs)
    {
        return rhs *= scalar;
    }
    Poly operator-() const;

    friend bool operator==(const Poly &, const Poly &) = default;

    // Human-readable form such as "2 + 2q + q^2".
    std::string to_string() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

std::ostream &operator<<(std::ostream &os, const Poly &p);

enum class PolyOp { add, sub, mul };

Poly poly_arith(const Poly &f, const Poly &g, PolyOp op);

// Outcome of the coefficientwise comparison f >=_q g.
struct QOrderResult {
    bool holds = true;
    // Smallest index whose coefficient of f - g is negative, and that value.
    std::optional<std::size_t> index;
    Rational value;

    explicit operator bool() const noexcept
    {
        return holds;
    }
};

// First negative coefficient of d, if any.
QOrderResult nonnegative_coeffs(const Poly &d);

// f >=_q g: every coefficient of f - g is nonnegative.
QOrderResult poly_geq_q(const Poly &f, const Poly &g);

} // namespace qtri

#endif
