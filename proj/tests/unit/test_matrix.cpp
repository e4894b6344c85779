#include <gtest/gtest.h>

#include <qtri/errors.hpp>
#include <qtri/matrix.hpp>

#include "oracles.hpp"

using qtri::RatMatrix;
using qtri::Rational;

TEST(DetExact, SmallCases)
{
    EXPECT_EQ(qtri::det_exact(RatMatrix{{1, 2}, {3, 4}}), -2);
    EXPECT_EQ(qtri::det_exact(RatMatrix{{0, 1}, {1, 0}}), -1);
    EXPECT_EQ(qtri::det_exact(RatMatrix{{2, 4}, {1, 2}}), 0);
    EXPECT_EQ(qtri::det_exact(RatMatrix{{Rational(1, 2), Rational(1, 3)}, {Rational(1, 4), Rational(1, 5)}}),
              Rational(1, 60));
    EXPECT_EQ(qtri::det_exact(RatMatrix{}), 1);
}

TEST(DetExact, NeedsPivotSwap)
{
    const RatMatrix m{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
    EXPECT_EQ(qtri::det_exact(m), -1);
}

TEST(DetExact, RejectsNonSquare)
{
    EXPECT_THROW(qtri::det_exact(RatMatrix(2, 3)), qtri::DimensionError);
}

TEST(Matrix, MultiplyChecksShapes)
{
    const RatMatrix a{{1, 2, 3}};
    const RatMatrix b{{1}, {1}, {1}};
    EXPECT_EQ(a * b, (RatMatrix{{6}}));
    EXPECT_THROW(a * a, qtri::DimensionError);
    EXPECT_THROW((RatMatrix{{1, 2}, {3}}), qtri::DimensionError);
}

TEST(Matrix, SubmatrixAndLeading)
{
    const RatMatrix m{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    EXPECT_EQ(m.submatrix({0, 2}, {1, 2}), (RatMatrix{{2, 3}, {8, 9}}));
    EXPECT_EQ(m.leading(2, 1), (RatMatrix{{1}, {4}}));
    EXPECT_THROW(m.leading(4, 1), qtri::DimensionError);
}

TEST(DetProperty, AgreesWithLaplaceExpansion)
{
    oracle::Gen gen(20240611);
    for (int trial = 0; trial < 300; ++trial) {
        const auto n = static_cast<std::size_t>(gen.uniform(1, 6));
        RatMatrix m = gen.matrix(n, n, -6, 6);
        if (trial % 3 == 0) {
            m(0, 0) = oracle::frac(gen.uniform(-5, 5), gen.uniform(1, 7));
        }
        EXPECT_EQ(qtri::det_exact(m), oracle::det(oracle::to_rows(m)));
    }
}

TEST(DetProperty, MultiplicativeOnProducts)
{
    oracle::Gen gen(77);
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = static_cast<std::size_t>(gen.uniform(1, 5));
        const RatMatrix a = gen.matrix(n, n, -4, 4);
        const RatMatrix b = gen.matrix(n, n, -4, 4);
        EXPECT_EQ(qtri::det_exact(a * b), qtri::det_exact(a) * qtri::det_exact(b));
    }
}
