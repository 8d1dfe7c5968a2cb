#include "dlw/analytic/families.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace dlw;

namespace {

using E = AnalyticExpr;
E X() { return E::x(); }
E T() { return E::t(); }
EvolutionSystem const& sys() { return model::dispersive_long_wave(); }

double central(E const& e, ParamBinding const& b, double x, double t, Coord c)
{
    double h = 1e-5;
    if (c == Coord::x) return (eval(e, b, x + h, t) - eval(e, b, x - h, t)) / (2 * h);
    return (eval(e, b, x, t + h) - eval(e, b, x, t - h)) / (2 * h);
}

} // namespace

TEST(Expr, DiffTanh)
{
    E mu = E::param("mu");
    E e = tanh(X() - mu * T());
    ParamBinding b{{"mu", 0.7}};
    for (double x : {-1.0, 0.2, 2.0}) {
        double s = 1 / std::cosh(x - 0.7 * 0.5);
        EXPECT_NEAR(eval(diff(e, Coord::x), b, x, 0.5), s * s, 1e-14);
    }
    EXPECT_TRUE(diff(E(3.5), Coord::x).is_constant(0));
}

TEST(Expr, DiffMatchesFiniteDifferences)
{
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> d(-1.5, 1.5);
    ParamBinding b{{"a", 0.8}, {"mu", 1.3}};
    E a = E::param("a");
    std::vector<E> exprs{
        sech(a * X() + T()) * exp(X() / 3.0),
        pow(tanh(X() - E::param("mu") * T()), 3) / (2.0 + X() * X()),
        sqrt(4.0 + T() * T() + X()),
        (1.0 + exp(X() - T())) / (3.0 + pow(X(), 2)),
    };
    for (auto const& e : exprs) {
        for (int k = 0; k < 20; ++k) {
            double x = d(rng), t = d(rng);
            for (Coord c : {Coord::x, Coord::t}) {
                double exact = eval(diff(e, c), b, x, t);
                double fd = central(e, b, x, t, c);
                if (std::abs(exact) > 1e-3) EXPECT_NEAR(fd / exact, 1.0, 1e-6);
            }
        }
    }
}

TEST(Expr, Eq93TimeDerivative)
{
    auto const& f = find_family("eq93");
    ParamBinding b{{"mu", 1.0}};
    for (auto p : sample_points(20, -3, 3, 0, 2, 9)) {
        double s = 1 / std::cosh(p.t - p.x);
        EXPECT_NEAR(eval(diff(f.u, Coord::t), b, p.x, p.t), -2 * std::sqrt(3.0) / 3 * s * s, 1e-12);
    }
}

TEST(Expr, DomainAndBinding)
{
    EXPECT_THROW(eval(1.0 / X(), {}, 0.0, 0.0), DomainError);
    EXPECT_THROW(eval(sqrt(X()), {}, -1.0, 0.0), DomainError);
    EXPECT_THROW(eval(E::param("k"), {}, 0.0, 0.0), UnboundParameter);
    EXPECT_DOUBLE_EQ(eval(pow(X(), -2), {}, 2.0, 0.0), 0.25);
}

TEST(Expr, Compose)
{
    E e = X() * X() + T();
    E c = compose(e, X() + 1.0, 2.0 * T());
    EXPECT_DOUBLE_EQ(eval(c, {}, 1.0, 3.0), 4.0 + 6.0);
}

TEST(Residual, Eq93)
{
    auto const& f = find_family("eq93");
    for (double mu : {0.5, 1.0, 2.0}) {
        auto r = residual_max(sys(), {f.u, f.v}, {{"mu", mu}}, sample_points(50, -5, 5, 0, 2));
        EXPECT_LT(r.max_residual, 1e-10) << mu;
        EXPECT_EQ(r.samples_used, 50u);
    }
}

TEST(Residual, NonSolutionControl)
{
    auto r = residual_max(sys(), {X(), E(0.0)}, {}, {{1.0, 0.0}, {2.0, 0.0}});
    EXPECT_DOUBLE_EQ(r.per_equation[0], 2.0);
    EXPECT_DOUBLE_EQ(r.per_equation[1], 0.0);
}

TEST(Residual, Eq22)
{
    auto const& f = find_family("eq22");
    auto r = residual_max(sys(), {f.u, f.v}, {{"c1", 2.0}}, sample_points(50, -5, 5, 0.5, 2));
    EXPECT_LT(r.max_residual, 1e-12);
}

TEST(Residual, Eq19LeavesC1)
{
    auto const& f = find_family("eq19");
    for (double c1 : {1.0, -2.5}) {
        auto r = residual_max(sys(), {f.u, f.v}, {{"c1", c1}, {"c2", 0.3}}, sample_points(30, -5, 5, 0, 2));
        EXPECT_LT(r.per_equation[0], 1e-12);
        EXPECT_NEAR(r.per_equation[1], std::abs(c1), 1e-12);
    }
}

TEST(Residual, Eq96)
{
    auto const& f = find_family("eq96");
    for (double a0 : {0.0, 1.0}) {
        auto r = residual_max(sys(), {f.u, f.v}, {{"a0", a0}}, sample_points(50, -5, 5, 0, 2));
        EXPECT_LT(r.max_residual, 1e-10);
    }
}

TEST(Residual, SingularSamplesAreSkipped)
{
    auto r = residual_max(sys(), {1.0 / X(), E(0.0)}, {}, {{0.0, 0.0}, {1.0, 0.0}});
    EXPECT_EQ(r.samples_skipped, 1u);
    EXPECT_EQ(r.samples_used, 1u);
}

TEST(Orbit, Examples)
{
    OrbitPoint<double> p{0.5, 1.0, 2.0, 3.0};
    auto g1 = group_orbit(1, 0.25, p);
    EXPECT_DOUBLE_EQ(g1.t, 1.25);
    EXPECT_DOUBLE_EQ(g1.x, 0.5);
    auto g4 = group_orbit(4, 0.4, p);
    EXPECT_DOUBLE_EQ(g4.t, std::exp(0.4));
    EXPECT_DOUBLE_EQ(g4.x, 0.5 * std::exp(0.2));
    EXPECT_DOUBLE_EQ(g4.u, 2.0 * std::exp(-0.2));
    EXPECT_DOUBLE_EQ(g4.v, 3.0 * std::exp(-0.4));
    for (int g = 1; g <= 4; ++g) {
        auto id = group_orbit(g, 0.0, p);
        EXPECT_DOUBLE_EQ(id.x, p.x);
        EXPECT_DOUBLE_EQ(id.u, p.u);
    }
    EXPECT_THROW(group_orbit(5, 0.1, p), std::invalid_argument);
}

TEST(Orbit, InverseRoundTrip)
{
    std::mt19937 rng(4);
    std::uniform_real_distribution<double> d(-2, 2);
    for (int k = 0; k < 100; ++k) {
        OrbitPoint<double> p{d(rng), d(rng), d(rng), d(rng)};
        double eps = d(rng);
        for (int g = 1; g <= 4; ++g) {
            auto back = group_orbit(g, -eps, group_orbit(g, eps, p));
            EXPECT_NEAR(back.x, p.x, 1e-12);
            EXPECT_NEAR(back.t, p.t, 1e-12);
            EXPECT_NEAR(back.u, p.u, 1e-12);
            EXPECT_NEAR(back.v, p.v, 1e-12);
        }
    }
}

TEST(Orbit, GeneratorIsTangent)
{
    // d/de of the orbit at e = 0 reproduces the generator coefficients
    OrbitPoint<double> p{0.7, 1.3, -0.4, 0.9};
    double h = 1e-6;
    auto dp = [&](int g) {
        auto a = group_orbit(g, h, p), b = group_orbit(g, -h, p);
        return std::array<double, 4>{(a.x - b.x) / (2 * h), (a.t - b.t) / (2 * h), (a.u - b.u) / (2 * h),
                                     (a.v - b.v) / (2 * h)};
    };
    auto d3 = dp(3);
    EXPECT_NEAR(d3[0], p.t, 1e-8);
    EXPECT_NEAR(d3[2], 1.0, 1e-8);
    auto d4 = dp(4);
    EXPECT_NEAR(d4[0], p.x / 2, 1e-8);
    EXPECT_NEAR(d4[1], p.t, 1e-8);
    EXPECT_NEAR(d4[2], -p.u / 2, 1e-8);
    EXPECT_NEAR(d4[3], -p.v, 1e-8);
}

TEST(Orbit, TransportedSolutionsStaySolutions)
{
    auto const& f = find_family("eq93");
    for (int g = 1; g <= 4; ++g) {
        for (double eps : {-0.3, 0.3}) {
            auto [u, v] = transported_solution(g, eps, f.u, f.v);
            auto r = residual_max(sys(), {u, v}, {{"mu", 1.0}}, sample_points(50, -5, 5, 0.1, 2));
            EXPECT_LT(r.max_residual, 1e-8) << g << " " << eps;
        }
    }
}

TEST(Families, Registry)
{
    for (auto id : {"eq19", "eq22", "eq82", "eq83", "eq86", "eq87", "eq88", "eq89", "eq90", "eq93", "eq96"}) {
        EXPECT_EQ(find_family(id).id, id);
    }
    EXPECT_THROW(find_family("eq99"), UnknownFamily);
}

TEST(Families, ScanBindingsCoverGrid)
{
    auto const& f = find_family("eq86");
    auto bs = scan_bindings(f, family_scan("eq86"));
    EXPECT_EQ(bs.size(), 16u * 3u);
    for (auto const& [name, b] : bs) {
        if (name == "c2 = -C1^2/2") EXPECT_DOUBLE_EQ(b.at("c2"), -b.at("C1") * b.at("C1") / 2);
    }
}
