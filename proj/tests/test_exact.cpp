#include <algleg/exact.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace algleg;

TEST(Pochhammer, Examples)
{
    EXPECT_EQ(pochhammer(rat(5, 12), 0), 1);
    EXPECT_EQ(pochhammer(rat(5, 12), -1), rat(-12, 7));
    EXPECT_EQ(pochhammer(rat(1, 4), 2), rat(5, 16));
    EXPECT_THROW(pochhammer(Rational(2), -3), DomainError);
}

TEST(Pochhammer, Composition)
{
    for (Rational d : {rat(1, 4), rat(5, 12), rat(13, 12)})
        for (int k = -5; k <= 5; ++k)
            for (int j = -5; j <= 5; ++j)
                EXPECT_EQ(pochhammer(d, k) * pochhammer(d + k, j), pochhammer(d, k + j));
}

TEST(Invariants, Coefficients)
{
    const auto& p = invariant_polys();
    EXPECT_EQ(p.pf, (Poly{1, 14, 1}));
    EXPECT_EQ(p.pe, (Poly{1, -33, -33, 1}));
    EXPECT_EQ(p.pv, (Poly{0, 1} * Poly{1, -1}.pow(4)));
}

TEST(Invariants, Syzygy)
{
    const auto& p = invariant_polys();
    EXPECT_TRUE((p.pe * p.pe - p.pf.pow(3) + Rational(108) * p.pv).is_zero());
}

TEST(Maps, R)
{
    EXPECT_EQ(map_R(Rational(0)), 0);
    const auto& p = invariant_polys();
    Rational u = rat(1, 3);
    Rational e = p.pe(u), f = p.pf(u);
    EXPECT_EQ(map_R(u), 1 - f * f * f / (e * e));
}

TEST(Maps, TripleAngle)
{
    double xi = 1.0;
    double T = std::pow(std::tanh(xi / 3), 2);
    // T = -12u/(1+u)^2 has the root u in (-1, 0)
    double u = (-(2 * T + 12) + std::sqrt((2 * T + 12) * (2 * T + 12) - 4 * T * T)) / (2 * T);
    EXPECT_NEAR(map_T(u), T, 1e-13);
    EXPECT_NEAR(map_R(u), std::pow(std::tanh(xi), 2), 1e-12);
    EXPECT_NEAR(map_R(u), T * (3 + T) * (3 + T) / ((1 + 3 * T) * (1 + 3 * T)), 1e-12);
    EXPECT_THROW(map_T(-1.0), DomainError);
}

TEST(Maps, S)
{
    Rational t = rat(1, 5);
    Rational a = 1 + 3 * t * t, b = 1 + 6 * t - 3 * t * t;
    EXPECT_EQ(map_S(t), 36 * t * a * a / (b * b * b));
}

TEST(RationalFunction, CancelsProducts)
{
    std::mt19937 g(7);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Rational> a(4), b(3);
        for (auto& v : a)
            v = rat(c(g), 1 + std::abs(c(g)));
        for (auto& v : b)
            v = rat(c(g), 1 + std::abs(c(g)));
        b[2] = 1;
        RationalFunction f{Poly(a), Poly{1, 2}};
        RationalFunction h{Poly(b)};
        if (h.is_zero())
            continue;
        EXPECT_EQ((f * h) / h, f);
    }
}

TEST(RationalFunction, NormalForm)
{
    RationalFunction f(Poly{-1, 0, 1}, Poly{-2, 2});
    EXPECT_EQ(f.den(), (Poly{1}));
    EXPECT_EQ(f.num(), (Poly({rat(1, 2), rat(1, 2)})));
    RationalFunction g(Poly{1, 1}, Poly{-2, 2});
    EXPECT_EQ(g.den(), (Poly{-1, 1}));
    EXPECT_EQ(g.num(), (Poly({rat(1, 2), rat(1, 2)})));
}

TEST(Poly, Printing)
{
    EXPECT_EQ(Poly({Rational(1), rat(1, 7)}).str(), "1 + (1/7)u");
    EXPECT_EQ((Poly{1, -26, -39}).str(), "1 - 26u - 39u^2");
}
