#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <qtri/errors.hpp>
#include <qtri/properties.hpp>
#include <qtri/transforms.hpp>
#include <qtri/triangles.hpp>

#include "oracles.hpp"

using qtri::BilinearForm;
using qtri::Integer;
using qtri::Poly;
using qtri::PolySeq;
using qtri::PropertyDirection;
using qtri::Rational;
using qtri::Verdict;

namespace
{

BilinearForm form_of(std::initializer_list<std::tuple<std::size_t, std::size_t, long>> terms)
{
    BilinearForm f;
    for (const auto &[i, j, c] : terms) {
        f.add(i, j, c);
    }
    return f;
}

std::string read_data(const std::string &name)
{
    std::ifstream in(std::string(QTRI_TEST_DATA_DIR) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

PolySeq constants(std::size_t len, long c)
{
    return PolySeq(std::vector<Poly>(len, Poly::constant(c)));
}

PolySeq powers(std::size_t len, const Poly &base)
{
    std::vector<Poly> v{Poly{1}};
    while (v.size() < len) {
        v.push_back(v.back() * base);
    }
    return PolySeq(v);
}

PolySeq gaussian_family(std::size_t first, std::size_t count)
{
    std::vector<Poly> v;
    for (std::size_t n = first; n < first + count; ++n) {
        v.push_back(oracle::to_poly(oracle::gaussian(n, 2)));
    }
    return PolySeq(v);
}

} // namespace

TEST(BisnomialTransform, Examples)
{
    const auto ones = qtri::bisnomial_transform(constants(21, 1), 2, 10);
    ASSERT_EQ(ones.size(), 11u);
    Integer three_n = 1;
    for (std::size_t n = 0; n <= 10; ++n) {
        EXPECT_EQ(ones.at(static_cast<long>(n)), Poly::constant(Rational(three_n)));
        three_n *= 3;
    }

    const auto qk = qtri::bisnomial_transform(powers(13, Poly{0, 1}), 2, 6);
    EXPECT_EQ(qk.at(6), powers(7, Poly{1, 1, 1}).at(6));

    const PolySeq f({Poly{1}, Poly{0, 1}, Poly{2}, Poly{5}, Poly{7}});
    EXPECT_EQ(qtri::bisnomial_transform(f, 2, 1).at(1), (Poly{3, 1}));
}

TEST(BisnomialTransform, ShortInputNamesRequiredLength)
{
    try {
        qtri::bisnomial_transform(constants(5, 1), 2, 3);
        FAIL() << "expected a range error";
    } catch (const qtri::RangeError &e) {
        EXPECT_NE(std::string(e.what()).find("7"), std::string::npos) << e.what();
    }
}

TEST(BisnomialTransform, SEqualsOneIsTheBinomialTransform)
{
    oracle::Gen gen(0xB1);
    std::vector<Poly> f;
    for (int i = 0; i < 12; ++i) {
        f.push_back(gen.poly(3, -3, 3));
    }
    const auto b = qtri::bisnomial_transform(PolySeq(f), 1, 11);
    for (long n = 0; n <= 11; ++n) {
        Poly direct;
        for (long k = 0; k <= n; ++k) {
            direct += Rational(oracle::binomial(n, k)) * f[static_cast<std::size_t>(k)];
        }
        EXPECT_EQ(b.at(n), direct);
    }
}

TEST(WindowSum, Examples)
{
    EXPECT_EQ(qtri::window_sum(constants(3, 1), 1).polys(), constants(2, 2).polys());
    const PolySeq f({Poly{1}, Poly{0, 1}, Poly{0, 0, 1}, Poly{0, 0, 0, 1}});
    const auto w = qtri::window_sum(f, 2);
    ASSERT_EQ(w.size(), 2u);
    EXPECT_EQ(w.at(0), (Poly{1, 1, 1}));
    EXPECT_EQ(w.at(1), (Poly{0, 1, 1, 1}));
    EXPECT_THROW(qtri::window_sum(constants(2, 1), 2), qtri::RangeError);
}

TEST(WindowSum, PreservesStrongQLogConvexity)
{
    const auto motzkin = qtri::row_gen_fns(qtri::generate(qtri::preset("motzkin"), 12));
    ASSERT_TRUE(qtri::is_strongly_q_log_convex(motzkin).holds());
    for (std::size_t s = 1; s <= 3; ++s) {
        EXPECT_TRUE(qtri::is_strongly_q_log_convex(qtri::window_sum(motzkin, s)).holds()) << "s=" << s;
    }
}

TEST(MinorForm, BaseCases)
{
    EXPECT_EQ(qtri::transform_minor_form(1, 1, 2),
              form_of({{0, 2, 1}, {1, 1, -1}, {0, 3, 2}, {1, 2, -2}, {0, 4, 1}, {2, 2, -1}}));
    EXPECT_EQ(qtri::transform_minor_form(1, 1, 1), form_of({{0, 2, 1}, {1, 1, -1}}));
    EXPECT_EQ(qtri::transform_minor_form(1, 2, 2),
              form_of({{0, 2, 2}, {1, 1, -2}, {0, 3, 5}, {1, 2, -5}, {0, 4, 5}, {2, 2, -3}, {1, 3, -2},
                       {0, 5, 3}, {2, 3, -2}, {1, 4, -1}, {0, 6, 1}, {2, 4, -1}}));
    EXPECT_THROW(qtri::transform_minor_form(0, 1, 2), qtri::RangeError);
    EXPECT_THROW(qtri::transform_minor_form(3, 2, 2), qtri::RangeError);
}

TEST(MinorForm, MatchesStoredExpansions)
{
    EXPECT_EQ(qtri::transform_minor_form(1, 2, 2), qtri::parse_bilinear_form(read_data("forms/form_1_2_s2.txt")));
    EXPECT_EQ(qtri::transform_minor_form(2, 2, 2), qtri::parse_bilinear_form(read_data("forms/form_2_2_s2.txt")));
}

TEST(MinorForm, TextFormat)
{
    BilinearForm f;
    f.add(3, 1, 4);
    f.add(1, 3, -4);
    EXPECT_TRUE(f.empty());
    f.add(2, 0, 5);
    f.add(0, 0, -1);
    EXPECT_EQ(qtri::format_bilinear_form(f), "0 0 -1\n0 2 5\n");
    EXPECT_EQ(qtri::parse_bilinear_form("# c\n\n0 0 -1\n0 2 5\n"), f);
    try {
        qtri::parse_bilinear_form("0 0 1\n0 x 1\n");
        FAIL() << "expected a parse error";
    } catch (const qtri::ParseError &e) {
        EXPECT_EQ(e.line(), 2u);
    }
}

TEST(MinorForm, EvaluationMatchesConcreteTransform)
{
    oracle::Gen gen(0xF0);
    for (std::size_t s = 1; s <= 3; ++s) {
        std::vector<Poly> f;
        for (std::size_t i = 0; i <= 6 * s; ++i) {
            f.push_back(gen.poly(2, -3, 3));
        }
        const PolySeq ps(f);
        const auto b = qtri::bisnomial_transform(ps, s, 6);
        for (long n = 1; n <= 5; ++n) {
            for (long m = n; m <= 5; ++m) {
                const Poly concrete = b.at(n - 1) * b.at(m + 1) - b.at(n) * b.at(m);
                const auto form = qtri::transform_minor_form(static_cast<std::size_t>(n),
                                                             static_cast<std::size_t>(m), s);
                EXPECT_EQ(form.evaluate(ps), concrete) << "n=" << n << " m=" << m << " s=" << s;
            }
        }
    }
}

TEST(Preservation, Examples)
{
    const auto aigner = qtri::row_gen_fns(qtri::generate(qtri::preset("aigner_catalan"), 20));
    const auto rep = qtri::check_preservation(aigner, 2, 10, PropertyDirection::convex);
    EXPECT_EQ(rep.verdict, Verdict::holds);
    EXPECT_TRUE(rep.input.holds());
    EXPECT_TRUE(rep.output.holds());
    EXPECT_EQ(rep.transformed.size(), 11u);

    for (std::size_t s = 1; s <= 3; ++s) {
        const auto r = qtri::check_preservation(powers(3 * 10 + 1, Poly{1, 1}), s, 10, PropertyDirection::concave);
        EXPECT_EQ(r.verdict, Verdict::holds) << "s=" << s;
    }

    const auto gauss = gaussian_family(2, 13);
    ASSERT_TRUE(qtri::is_strongly_q_log_concave(gauss).holds());
    EXPECT_EQ(qtri::check_preservation(gauss, 1, 10, PropertyDirection::concave).verdict, Verdict::holds);
}

TEST(Preservation, FailingInputIsInapplicable)
{
    const PolySeq bad({Poly{1}, Poly{1, 1}, Poly{1}, Poly{1}, Poly{1}});
    const auto rep = qtri::check_preservation(bad, 1, 4, PropertyDirection::convex);
    EXPECT_EQ(rep.verdict, Verdict::inapplicable);
    EXPECT_EQ(rep.input.verdict, Verdict::fails);
}
