#include <gtest/gtest.h>

#include <qtri/errors.hpp>
#include <qtri/properties.hpp>
#include <qtri/triangles.hpp>

#include "oracles.hpp"

using qtri::CoeffScheme;
using qtri::Integer;
using qtri::ConstParams;
using qtri::Poly;
using qtri::RatMatrix;
using qtri::Rational;
using qtri::Triangle;

namespace
{

std::vector<Rational> R(std::initializer_list<long> v)
{
    return {v.begin(), v.end()};
}

const ConstParams two_pascal(1, 1, 1, 1, 1, 0, 0);
const ConstParams motzkin_params(1, 1, 0, 1, 1, 1, 0);

qtri::PentaSchemes const_schemes(long gamma, long e, long f, long g, long h)
{
    return {CoeffScheme::constant(gamma), CoeffScheme::constant(e), CoeffScheme::constant(f),
            CoeffScheme::constant(g), CoeffScheme::constant(h)};
}

} // namespace

TEST(Bisnomial, Rows)
{
    EXPECT_EQ(qtri::bisnomial_row(2, 2), R({1, 2, 3, 2, 1}));
    EXPECT_EQ(qtri::bisnomial_row(3, 2), R({1, 3, 6, 7, 6, 3, 1}));
    EXPECT_EQ(qtri::bisnomial_row(4, 1), R({1, 4, 6, 4, 1}));
    EXPECT_EQ(qtri::bisnomial_row(0, 3), R({1}));
    EXPECT_EQ(qtri::bisnomial(3, -1, 2), 0);
    EXPECT_EQ(qtri::bisnomial(3, 7, 2), 0);
    EXPECT_EQ(qtri::bisnomial(3, 3, 2), 7);
    EXPECT_THROW(qtri::bisnomial_row(2, 0), qtri::ConfigError);
}

TEST(Bisnomial, SymmetryAndExpansionOracle)
{
    for (std::size_t s = 1; s <= 3; ++s) {
        for (std::size_t n = 0; n <= 30; ++n) {
            const auto row = qtri::bisnomial_row(n, s);
            ASSERT_EQ(row.size(), s * n + 1);
            for (std::size_t k = 0; k < row.size(); ++k) {
                EXPECT_EQ(row[k], row[s * n - k]);
            }
            if (n <= 15) {
                EXPECT_EQ(row, oracle::to_rationals(oracle::poly_power_row(n, s))) << "n=" << n << " s=" << s;
            }
        }
    }
}

TEST(Bisnomial, RowSumsArePowers)
{
    for (std::size_t s = 1; s <= 3; ++s) {
        const Triangle t = qtri::s_pascal(s, 20);
        for (std::size_t n = 0; n <= 20; ++n) {
            Rational sum = 0;
            for (const auto &v : t.row(n)) {
                sum += v;
            }
            Integer expect;
            mpz_ui_pow_ui(expect.get_mpz_t(), s + 1, n);
            EXPECT_EQ(sum, Rational(expect));
        }
    }
}

TEST(Triangle, ValidatesShape)
{
    EXPECT_THROW(Triangle(2, {R({1}), R({1, 1})}), qtri::ConfigError);
    EXPECT_THROW(Triangle(0, {R({1})}), qtri::ConfigError);
    EXPECT_THROW(Triangle(1, {}), qtri::ConfigError);
    const Triangle t(1, {R({1}), R({1, 1})});
    EXPECT_EQ(t.at(1, 5), 0);
    EXPECT_EQ(t.at(1, -1), 0);
    EXPECT_THROW(t.row(2), qtri::RangeError);
    EXPECT_EQ(t.column(1), R({0, 1}));
}

TEST(Triangle, TextRoundTrip)
{
    const Triangle t(1, {R({1}), {Rational(1, 2), Rational(-3)}});
    const std::string text = qtri::format_triangle(t);
    EXPECT_EQ(text, "# arity=1 n_max=1\n1\n1/2 -3\n");
    EXPECT_EQ(qtri::parse_triangle(text), t);
    const Triangle big = qtri::s_pascal(3, 6);
    EXPECT_EQ(qtri::parse_triangle(qtri::format_triangle(big)), big);
}

TEST(Triangle, ParseErrorsCarryLineNumbers)
{
    auto line_of = [](const std::string &text) -> std::size_t {
        try {
            qtri::parse_triangle(text);
        } catch (const qtri::ParseError &e) {
            return e.line();
        }
        return 0;
    };
    EXPECT_EQ(line_of("# arity=1 n_max=1\n1\n1 x\n"), 3u);
    EXPECT_EQ(line_of("# arity=2 n_max=1\n1\n1 1\n"), 3u);
    EXPECT_EQ(line_of("1\n"), 1u);
    EXPECT_EQ(line_of("# arity=1 n_max=2\n1\n1 1\n"), 3u);
    EXPECT_EQ(line_of("# arity=one n_max=2\n"), 1u);
}

TEST(CoeffScheme, Kinds)
{
    EXPECT_EQ(CoeffScheme::constant(3).at(100), 3);
    EXPECT_EQ(CoeffScheme::affine(2, 1).at(5), 11);
    const auto table = CoeffScheme::table(R({4, 5}), 2);
    EXPECT_EQ(table.at(3), 5);
    EXPECT_FALSE(table.covers(1));
    EXPECT_FALSE(table.covers(4));
    EXPECT_THROW(table.at(4), qtri::ConfigError);
    EXPECT_EQ(table.first_gap(2, 5), 4);
    const auto ht = CoeffScheme::head_then(R({1}), 2);
    EXPECT_EQ(ht.at(0), 1);
    EXPECT_EQ(ht.at(9), 2);
    EXPECT_FALSE(ht.first_gap(0, 1000));
}

TEST(ConstParams, ParseAndValidate)
{
    EXPECT_EQ(ConstParams::parse("1,1,0,1,1,1,0"), motzkin_params);
    EXPECT_EQ(ConstParams::parse("1/2,1,0,1,1,1,0").alpha, Rational(1, 2));
    EXPECT_THROW(ConstParams::parse("1,1,1"), qtri::ConfigError);
    EXPECT_THROW(ConstParams::parse("1,1,0,1,1,x,0"), qtri::ConfigError);
    EXPECT_THROW(ConstParams(1, 1, 0, 1, -1, 1, 0), qtri::ConfigError);
}

TEST(GenRecursive, Examples)
{
    const auto motzkin = qtri::gen_recursive(CoeffScheme::constant(1), CoeffScheme::constant(1), 5);
    EXPECT_EQ(motzkin.column(0), R({1, 1, 2, 4, 9, 21}));
    const auto aigner =
        qtri::gen_recursive(CoeffScheme::head_then(R({1}), 2), CoeffScheme::constant(1), 5);
    EXPECT_EQ(aigner.column(0), R({1, 1, 2, 5, 14, 42}));
    const auto pascal = qtri::gen_recursive(CoeffScheme::constant(1), CoeffScheme::constant(0), 4);
    EXPECT_EQ(pascal.row(4), R({1, 4, 6, 4, 1}));
}

TEST(GenRecursive, TableTooShortIsAConfigError)
{
    EXPECT_THROW(qtri::gen_recursive(CoeffScheme::table(R({1, 1, 1})), CoeffScheme::constant(1), 5),
                 qtri::ConfigError);
    EXPECT_NO_THROW(qtri::gen_recursive(CoeffScheme::table(R({1, 1, 1})), CoeffScheme::constant(1), 2));
}

TEST(GenPenta, Examples)
{
    const auto tp = qtri::gen_penta(const_schemes(1, 1, 1, 0, 0), 6);
    EXPECT_EQ(tp.row(2), R({1, 2, 3, 2, 1}));
    EXPECT_EQ(tp, qtri::s_pascal(2, 6));

    const auto only_f = qtri::gen_penta(const_schemes(0, 0, 1, 0, 0), 3);
    EXPECT_EQ(only_f.row(3), R({1, 0, 0, 0, 0, 0, 0}));

    const auto ones = qtri::gen_penta(const_schemes(1, 1, 1, 1, 1), 2);
    EXPECT_EQ(ones.row(1), R({1, 1, 1}));
    EXPECT_EQ(ones.row(2)[0], 3);
}

TEST(GenPenta, GammaOutsideDomainIsIgnored)
{
    // gamma is only read for k >= 2, so a table starting there is enough.
    qtri::PentaSchemes s = const_schemes(0, 1, 1, 0, 0);
    s.gamma = CoeffScheme::table(std::vector<Rational>(7, 1), 2);
    EXPECT_EQ(qtri::gen_penta(s, 3), qtri::s_pascal(2, 3));
    s.gamma = CoeffScheme::table(std::vector<Rational>(3, 1), 2);
    EXPECT_THROW(qtri::gen_penta(s, 3), qtri::ConfigError);
}

TEST(GenConst, Examples)
{
    EXPECT_EQ(qtri::gen_const(two_pascal, 40), qtri::gen_penta(const_schemes(1, 1, 1, 0, 0), 40));
    const Triangle tp = qtri::gen_const(two_pascal, 40);
    for (std::size_t n = 0; n <= 40; ++n) {
        EXPECT_EQ(tp.row(n), qtri::bisnomial_row(n, 2));
    }

    const auto motzkin = qtri::gen_const(motzkin_params, 10);
    const auto m = oracle::motzkin(11);
    for (std::size_t n = 0; n <= 10; ++n) {
        EXPECT_EQ(motzkin.at(n, 0), Rational(m[n]));
        for (std::size_t k = n + 1; k <= 2 * n; ++k) {
            EXPECT_EQ(motzkin.at(n, static_cast<long>(k)), 0);
        }
    }

    const auto identity = qtri::gen_const(ConstParams(1, 0, 0, 0, 1, 0, 0), 3);
    EXPECT_EQ(identity.row(1), R({1, 0, 0}));
    EXPECT_EQ(identity.row(3), R({1, 0, 0, 0, 0, 0, 0}));
}

TEST(Presets, Names)
{
    const auto &names = qtri::preset_names();
    EXPECT_EQ(names.size(), 8u);
    EXPECT_THROW(qtri::preset("fibonacci"), qtri::ConfigError);
    EXPECT_THROW(qtri::preset("s_pascal", 0), qtri::ConfigError);
}

TEST(Presets, ColumnZeroMatchesClosedForms)
{
    const std::size_t n_max = 20;
    const auto motzkin = oracle::motzkin(n_max + 1);
    const auto schroder = oracle::large_schroder(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        const long ln = static_cast<long>(n);
        EXPECT_EQ(qtri::generate(qtri::preset("pascal"), n_max).at(n, 0), 1);
        EXPECT_EQ(qtri::generate(qtri::preset("aigner_catalan"), n_max).at(n, 0), Rational(oracle::catalan(ln)));
        EXPECT_EQ(qtri::generate(qtri::preset("shapiro_catalan"), n_max).at(n, 0),
                  Rational(oracle::catalan(ln + 1)));
        EXPECT_EQ(qtri::generate(qtri::preset("motzkin"), n_max).at(n, 0), Rational(motzkin[n]));
        EXPECT_EQ(qtri::generate(qtri::preset("bell"), n_max).at(n, 0), Rational(oracle::bell(ln)));
        EXPECT_EQ(qtri::generate(qtri::preset("schroder_large"), n_max).at(n, 0), Rational(schroder[n]));
        EXPECT_EQ(qtri::generate(qtri::preset("stirling2"), n_max).at(n, 0), 1);
    }
}

TEST(Presets, WholeTrianglesMatchClosedForms)
{
    const auto stirling = qtri::generate(qtri::preset("stirling2"), 15);
    const auto shapiro = qtri::generate(qtri::preset("shapiro_catalan"), 15);
    const auto pascal = qtri::generate(qtri::preset("pascal"), 15);
    for (long n = 0; n <= 15; ++n) {
        for (long k = 0; k <= n; ++k) {
            const auto un = static_cast<std::size_t>(n);
            EXPECT_EQ(stirling.at(un, k), Rational(oracle::stirling2(n + 1, k + 1)));
            EXPECT_EQ(shapiro.at(un, k), Rational(oracle::shapiro(n, k)));
            EXPECT_EQ(pascal.at(un, k), Rational(oracle::binomial(n, k)));
        }
    }
    EXPECT_EQ(shapiro.row(3), R({14, 14, 6, 1}));
    EXPECT_EQ(qtri::generate(qtri::preset("bell"), 5).column(0), R({1, 1, 2, 5, 15, 52}));
    EXPECT_EQ(qtri::generate(qtri::preset("schroder_large"), 4).column(0), R({1, 2, 6, 22, 90}));
}

TEST(Presets, ParamsReproduceTheRecursiveTriangle)
{
    for (const auto &name : qtri::preset_names()) {
        const auto p = qtri::preset(name);
        if (!p.params) {
            continue;
        }
        const Triangle arity1 = qtri::generate(p, 12);
        const Triangle arity2 = qtri::gen_const(*p.params, 12);
        for (std::size_t n = 0; n <= 12; ++n) {
            for (long k = 0; k <= static_cast<long>(2 * n); ++k) {
                EXPECT_EQ(arity2.at(n, k), arity1.at(n, k)) << name << " n=" << n << " k=" << k;
            }
        }
    }
}

TEST(RowGenFn, Examples)
{
    const auto motzkin = qtri::generate(qtri::preset("motzkin"), 3);
    EXPECT_EQ(qtri::row_gen_fn(motzkin, 2), (Poly{2, 2, 1}));
    EXPECT_EQ(qtri::row_gen_fn(motzkin, 0), (Poly{1}));
    EXPECT_EQ(qtri::row_gen_fn(qtri::s_pascal(2, 2), 1), (Poly{1, 1, 1}));
    EXPECT_THROW(qtri::row_gen_fn(motzkin, 4), qtri::RangeError);
    EXPECT_EQ(qtri::row_gen_fns(motzkin).size(), 4u);
}

TEST(BMatrix, Examples)
{
    const auto motzkin = qtri::generate(qtri::preset("motzkin"), 3);
    const auto b = qtri::b_matrix(motzkin, 3);
    EXPECT_EQ(b(2, 0), (Poly{2, 2, 1}));
    EXPECT_EQ(b(2, 1), (Poly{0, 2, 1}));
    EXPECT_EQ(b(2, 2), (Poly{0, 0, 1}));
    EXPECT_EQ(b(0, 0), Poly{1});
    for (std::size_t k = 1; k < b.cols(); ++k) {
        EXPECT_TRUE(b(0, k).is_zero());
    }
}

TEST(BMatrix, FactorsAsTriangleTimesT)
{
    for (const char *name : {"motzkin", "schroder_large", "bell", "stirling2"}) {
        const auto t = qtri::generate(qtri::preset(name), 15);
        const auto a = qtri::to_poly_matrix(qtri::triangle_matrix(t, 15));
        EXPECT_EQ(qtri::b_matrix(t, 15), a * qtri::t_matrix(a.cols())) << name;
    }
    const auto tp = qtri::gen_const(two_pascal, 15);
    const auto a = qtri::to_poly_matrix(qtri::triangle_matrix(tp, 15));
    EXPECT_EQ(qtri::b_matrix(tp, 15), a * qtri::t_matrix(a.cols()));
}

TEST(JMatrix, Examples)
{
    const ConstParams p(2, 3, 5, 7, 11, 13, 17);
    EXPECT_EQ(qtri::j_matrix(p, 3), (RatMatrix{{2, 3, 5}, {13, 11, 7}, {17, 13, 11}}));
    EXPECT_EQ(qtri::j_matrix(motzkin_params, 3), (RatMatrix{{1, 1, 0}, {1, 1, 1}, {0, 1, 1}}));
    const RatMatrix j5 = qtri::j_matrix(p, 5);
    EXPECT_EQ(j5(1, 3), 5);
    EXPECT_EQ(j5(4, 2), 17);
    EXPECT_EQ(j5(4, 0), 0);
}

TEST(JMatrix, ShiftedTriangleFactorsThroughJ)
{
    // Rows 1..n of A equal rows 0..n-1 of A times J, within the leading n x n block.
    for (const auto &name : qtri::preset_names()) {
        const auto p = qtri::preset(name);
        if (!p.params) {
            continue;
        }
        for (std::size_t n = 1; n <= 15; ++n) {
            const Triangle t = qtri::gen_const(*p.params, n);
            const RatMatrix a = qtri::triangle_matrix(t, n);
            RatMatrix a_bar(n, n), a_n(n, n);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    a_bar(i, j) = a(i + 1, j);
                    a_n(i, j) = a(i, j);
                }
            }
            EXPECT_EQ(a_bar, a_n * qtri::j_matrix(*p.params, n)) << name << " n=" << n;
        }
    }
}

TEST(JMatrix, FullWidthFactorizationForRandomParams)
{
    oracle::Gen gen(0x3a7);
    for (int trial = 0; trial < 40; ++trial) {
        const ConstParams p(gen.uniform(0, 3), gen.uniform(0, 3), gen.uniform(0, 3), gen.uniform(0, 3),
                            gen.uniform(0, 3), gen.uniform(0, 3), gen.uniform(0, 3));
        const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 8));
        const Triangle t = qtri::gen_const(p, n);
        const RatMatrix a = qtri::triangle_matrix(t, n);
        const std::size_t w = 2 * n + 2;
        RatMatrix a_bar(n, w), a_n(n, w);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < w; ++j) {
                a_bar(i, j) = t.at(i + 1, static_cast<long>(j));
                a_n(i, j) = j < a.cols() ? a(i, j) : Rational(0);
            }
        }
        EXPECT_EQ(a_bar, a_n * qtri::j_matrix(p, w)) << "trial " << trial;
    }
}
