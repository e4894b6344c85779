#include <qtri/matrix.hpp>

#include <utility>

namespace qtri
{

PolyMatrix to_poly_matrix(const RatMatrix &m)
{
    PolyMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out(i, j) = Poly::constant(m(i, j));
        }
    }
    return out;
}

Rational det_exact(const RatMatrix &m)
{
    if (!m.is_square()) {
        throw DimensionError("determinant of a non-square " + std::to_string(m.rows()) + "x"
                             + std::to_string(m.cols()) + " matrix");
    }
    const std::size_t n = m.rows();
    if (n == 0) {
        return Rational(1);
    }

    // Scale every row by the lcm of its denominators.
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    Integer scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < n; ++j) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        }
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
        }
        scale *= l;
    }

    // Bareiss: after step k every entry below/right of the pivot is a
    // (k+1)-order minor, so the division by the previous pivot is exact.
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) {
                ++p;
            }
            if (p == n) {
                return Rational(0);
            }
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }

    Integer num = a[n - 1][n - 1];
    if (sign < 0) {
        num = -num;
    }
    Rational det(num, scale);
    det.canonicalize();
    return det;
}

} // namespace qtri
