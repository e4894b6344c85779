#ifndef QTRI_TRIANGLES_HPP
#define QTRI_TRIANGLES_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <qtri/algebra.hpp>
#include <qtri/matrix.hpp>
#include <qtri/properties.hpp>

namespace qtri
{

// Jagged array whose row n holds arity * n + 1 entries.
class Triangle
{
public:
    Triangle(std::size_t arity, std::vector<std::vector<Rational>> rows);

    std::size_t arity() const noexcept
    {
        return arity_;
    }
    std::size_t n_max() const noexcept
    {
        return rows_.size() - 1;
    }
    std::size_t num_rows() const noexcept
    {
        return rows_.size();
    }
    const std::vector<std::vector<Rational>> &rows() const noexcept
    {
        return rows_;
    }
    // Throws RangeError for n > n_max().
    const std::vector<Rational> &row(std::size_t n) const;
    // Entry (n, k), zero outside the row.
    Rational at(std::size_t n, long k) const;
    std::vector<Rational> column(std::size_t k) const;

    friend bool operator==(const Triangle &, const Triangle &) = default;

private:
    std::size_t arity_;
    std::vector<std::vector<Rational>> rows_;
};

// Text form: "# arity=<a> n_max=<n>" then one row per line, entries separated
// by single spaces.
void write_triangle(std::ostream &os, const Triangle &t);
std::string format_triangle(const Triangle &t);
Triangle read_triangle(std::istream &is);
Triangle parse_triangle(std::string_view text);

// Per-index coefficient sequence c_k.
class CoeffScheme
{
public:
    struct Constant {
        Rational value;
    };
    // slope * k + intercept
    struct Affine {
        Rational slope;
        Rational intercept;
    };
    // values[k - start] for start <= k < start + values.size(); beyond the end,
    // `tail` if set. Indices before `start` are never covered.
    struct Table {
        std::vector<Rational> values;
        long start = 0;
        std::optional<Rational> tail;
    };

    CoeffScheme() : kind_(Constant{Rational(0)})
    {
    }
    static CoeffScheme constant(const Rational &c);
    static CoeffScheme affine(const Rational &slope, const Rational &intercept);
    static CoeffScheme table(std::vector<Rational> values, long start = 0,
                             std::optional<Rational> tail = std::nullopt);
    // Table with a fixed head followed by a constant tail, e.g. 1, 2, 2, ...
    static CoeffScheme head_then(std::vector<Rational> head, const Rational &tail);

    bool covers(long k) const noexcept;
    // Throws ConfigError if k is not covered.
    Rational at(long k) const;
    // First index k for which covers(k) fails inside [first, last], if any.
    std::optional<long> first_gap(long first, long last) const;

    const std::variant<Constant, Affine, Table> &kind() const noexcept
    {
        return kind_;
    }
    std::string describe() const;

private:
    explicit CoeffScheme(std::variant<Constant, Affine, Table> kind) : kind_(std::move(kind))
    {
    }

    std::variant<Constant, Affine, Table> kind_;
};

// Constants of the five-term recurrence with modified first two rows:
//   A_{n,0} = alpha A_{n-1,0} + g A_{n-1,1} + h A_{n-1,2}
//   A_{n,1} = beta A_{n-1,0} + f A_{n-1,1} + g A_{n-1,2} + h A_{n-1,3}
//   A_{n,k} = gamma A_{n-1,k-2} + e A_{n-1,k-1} + f A_{n-1,k}
//             + g A_{n-1,k+1} + h A_{n-1,k+2}            (k >= 2)
struct ConstParams {
    Rational alpha, beta, gamma, e, f, g, h;

    // Throws ConfigError if any constant is negative.
    ConstParams(Rational alpha, Rational beta, Rational gamma, Rational e, Rational f, Rational g, Rational h);
    // Parses "alpha,beta,gamma,e,f,g,h".
    static ConstParams parse(std::string_view csv);

    std::vector<Rational> as_vector() const;
    friend bool operator==(const ConstParams &, const ConstParams &) = default;
};

// Coefficient of x^k in (1 + x + ... + x^s)^n; zero unless 0 <= k <= s n.
Rational bisnomial(std::size_t n, long k, std::size_t s);
// Row n of the s-Pascal triangle (width s n + 1), built with the
// longitudinal recurrence C(n,k) = sum_{j=0..s} C(n-1,k-j).
std::vector<Rational> bisnomial_row(std::size_t n, std::size_t s);
// Rows 0..n_max of the s-Pascal triangle, arity s.
Triangle s_pascal(std::size_t s, std::size_t n_max);

// C_{n,k} = C_{n-1,k-1} + f_k C_{n-1,k} + g_k C_{n-1,k+1}, C_{0,0} = 1.
// Arity 1. The schemes must cover [0, n_max].
Triangle gen_recursive(const CoeffScheme &f, const CoeffScheme &g, std::size_t n_max);

struct PentaSchemes {
    CoeffScheme gamma; // used for k >= 2
    CoeffScheme e;     // used for k >= 1
    CoeffScheme f, g, h;
};

// A_{n,k} = gamma_k A_{n-1,k-2} + e_k A_{n-1,k-1} + f_k A_{n-1,k}
//           + g_k A_{n-1,k+1} + h_k A_{n-1,k+2}, A_{0,0} = 1. Arity 2.
// Terms whose coefficient index lies below its domain start (gamma: 2,
// e: 1) or whose A-reference falls outside row n-1 contribute zero.
Triangle gen_penta(const PentaSchemes &schemes, std::size_t n_max);

// The constant-coefficient array described by ConstParams. Arity 2.
Triangle gen_const(const ConstParams &p, std::size_t n_max);

// Named arrays. Recursive-matrix presets are generated in arity 1;
// s_pascal with the bi^s-nomial recurrence.
struct Preset {
    enum class Kind { recursive, s_pascal };

    std::string name;
    Kind kind = Kind::recursive;
    CoeffScheme f, g;     // recursive presets
    std::size_t s = 1;    // s_pascal
    // Equivalent constant parameters, when the array is expressible that way.
    std::optional<ConstParams> params;
};

// pascal, s_pascal, stirling2, aigner_catalan, shapiro_catalan, motzkin,
// bell, schroder_large. `s` only matters for s_pascal. Throws ConfigError for
// unknown names.
Preset preset(std::string_view name, std::size_t s = 2);
const std::vector<std::string> &preset_names();
Triangle generate(const Preset &p, std::size_t n_max);

// A_n(q) = sum_k A_{n,k} q^k.
Poly row_gen_fn(const Triangle &t, std::size_t n);
// A_0(q), ..., A_{n_max}(q).
PolySeq row_gen_fns(const Triangle &t);

// (n_max + 1) x (a n_max + 1) matrix of entries A_{n,k}, zero-padded.
RatMatrix triangle_matrix(const Triangle &t, std::size_t n_max);
// b_{n,k}(q) = sum_{i >= k} A_{n,i} q^i for 0 <= n <= n_max,
// 0 <= k <= a n_max.
PolyMatrix b_matrix(const Triangle &t, std::size_t n_max);
// size x size lower-triangular matrix with entry (i, j) = q^i for i >= j.
PolyMatrix t_matrix(std::size_t size);
// Leading size x size block of the banded matrix
//   [alpha beta gamma 0 ...; g f e gamma 0 ...; h g f e gamma ...; 0 h g f e ...].
RatMatrix j_matrix(const ConstParams &p, std::size_t size);

} // namespace qtri

#endif
