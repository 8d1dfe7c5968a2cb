#include "dlw/jet/io.hpp"
#include "dlw/waves/waves.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace dlw;
using namespace dlw::wave;
using model::rat;

TEST(Traveling, ReducedEquations)
{
    auto ode = reduce_traveling();
    EXPECT_EQ(ode.equations[0], -mu() * U(1) + U() * U(1) + V(1));
    EXPECT_EQ(ode.equations[1], -mu() * V(1) + U() * V(1) + V() * U(1) + rat(1, 3) * U(3));
}

TEST(Traveling, StationaryReduction)
{
    auto ode = reduce_traveling(JetPoly());
    EXPECT_EQ(ode.equations[0], U() * U(1) + V(1));
    EXPECT_EQ(ode.equations[1], U() * V(1) + V() * U(1) + rat(1, 3) * U(3));
}

TEST(Traveling, SolvedForm)
{
    auto ode = reduce_traveling();
    EXPECT_EQ(reduce_on_shell(V(1), ode.system), mu() * U(1) - U() * U(1));
    for (auto const& E : ode.equations) EXPECT_TRUE(reduce_on_shell(E, ode.system).is_zero());
}

TEST(FirstIntegrals, PrintedC2C3C4)
{
    auto printed = printed_first_integrals();
    auto src = first_integral_sources();
    for (int i = 1; i < 4; ++i) {
        auto fi = first_integral(src[i]);
        EXPECT_EQ(fi.expr, printed[i + 1]) << src[i].label;
        EXPECT_TRUE(fi.conserved()) << src[i].label;
    }
}

TEST(FirstIntegrals, ExplicitCoordinatesRejected)
{
    EXPECT_THROW(first_integral(model::law_eq30()), ExplicitCoordinateError);
}

TEST(FirstIntegrals, C1Reconstruction)
{
    auto r = reconstruct_c1();
    auto printed = printed_first_integrals();
    EXPECT_EQ(printed[0], printed[1]);
    EXPECT_FALSE(r.matches_line1);
    EXPECT_FALSE(r.matches_line2);
    EXPECT_EQ(r.difference_from_line2, -mu() * V() * U(2));
    EXPECT_FALSE(r.residual.is_zero());
    EXPECT_TRUE(r.printed_residual.is_zero());
    EXPECT_TRUE(r.corrected_law_matches);
}

TEST(FirstIntegrals, NonIntegralControl)
{
    EXPECT_EQ(xi_derivative_mod_ode(U(), reduce_traveling()), U(1));
    EXPECT_TRUE(xi_derivative_mod_ode(JetPoly(5), reduce_traveling()).is_zero());
}

TEST(FirstIntegrals, ConstantAlongNumericalProfile)
{
    auto p = printed_first_integrals();
    auto d = first_integral_drift({p[1], p[2], p[3], p[4]}, {"C1", "C2", "C3", "C4"});
    EXPECT_EQ(d.steps, 20000u);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_LT(d.max_drift[i], 1e-8) << d.labels[i];
    EXPECT_NEAR(d.initial[3], 1.0 / 6.0, 1e-12);
}

TEST(FirstIntegrals, KinkProfileSolvesOde)
{
    ProfileODE ode(1.0);
    double h = 1e-4, xi = 0.37;
    auto a = kink_profile(1.0, xi + h), b = kink_profile(1.0, xi - h);
    auto d = ode.derivative(kink_profile(1.0, xi));
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(d[i], (a[i] - b[i]) / (2 * h), 1e-7);
}

TEST(TanhAnsatz, KinkPointSolvesSystem)
{
    auto sys = tanh_ansatz_system();
    ASSERT_EQ(sys.coefficients.size(), 2u);
    for (auto const& c : sys.flat()) EXPECT_TRUE(at_point(c, kink_point()).is_zero()) << c;
}

TEST(TanhAnsatz, HighestPowerBalance)
{
    auto sys = tanh_ansatz_system();
    auto const& top = sys.coefficients[1].back();
    EXPECT_EQ(sys.coefficients[1].size(), 5u);
    JetPoly a1 = JetPoly::param(sym::a1), b2 = JetPoly::param(sym::b2);
    EXPECT_EQ(top, -2 * a1 - 3 * a1 * b2);
}

TEST(TanhAnsatz, ZeroAmplitudes)
{
    std::map<int, JetPoly> zero{{sym::a1, JetPoly()}, {sym::b1, JetPoly()}, {sym::b2, JetPoly()}};
    for (auto const& c : tanh_ansatz_system().flat()) EXPECT_TRUE(at_point(c, zero).is_zero());
}

TEST(TanhAnsatz, PrintedSystemAtKinkPoint)
{
    auto printed = printed_tanh_system();
    EXPECT_EQ(at_point(printed[3], kink_point()), JetPoly(rat(16, 3)));
    for (int i : {0, 1, 2, 4}) EXPECT_TRUE(at_point(printed[i], kink_point()).is_zero());
}

TEST(Sqrt3, Reduction)
{
    JetPoly s = JetPoly::param(sym::s3);
    EXPECT_EQ(reduce_sqrt3(s * s), JetPoly(3));
    EXPECT_EQ(reduce_sqrt3(pow(s, 3)), 3 * s);
}

TEST(VerifyFamily, Examples)
{
    EXPECT_LT(verify_family("eq93", {{"mu", 1.0}}).report.max_residual, 1e-10);
    auto e22 = verify_family("eq22", {{"c1", 2.0}});
    EXPECT_LT(e22.report.max_residual, 1e-12);
    EXPECT_TRUE(e22.passed);
    auto e19 = verify_family("eq19", {{"c1", 1.0}});
    EXPECT_NEAR(e19.report.per_equation[1], 1.0, 1e-12);
    EXPECT_FALSE(e19.passed);
    EXPECT_THROW(verify_family("eq00"), UnknownFamily);
}

TEST(VerifyFamily, LineSolitonsHoldOnWholeGrid)
{
    for (auto id : {"eq82", "eq83"}) {
        for (auto const& r : scan_family(id)) {
            EXPECT_TRUE(r.passed) << id << " mu=" << r.binding.at("mu") << " C1=" << r.binding.at("C1");
            EXPECT_GT(r.report.samples_used, 0u);
        }
    }
}

TEST(VerifyFamily, KudryashovOnlyDegenerate)
{
    EXPECT_FALSE(verify_family("eq86").passed);
    for (auto const& r : scan_family("eq86")) {
        if (r.passed) {
            EXPECT_EQ(r.binding.at("C1"), 0.0);
        }
    }
}

TEST(SolveFirstIntegrals, RegistersLineSolitons)
{
    auto fams = solve_first_integrals(1.5);
    ASSERT_EQ(fams.size(), 2u);
    EXPECT_EQ(fams[0].id, "eq82");
    EXPECT_EQ(fams[1].id, "eq83");
    EXPECT_EQ(fams[0].params, (std::vector<std::string>{"mu", "C1"}));
    EXPECT_DOUBLE_EQ(fams[0].defaults.at("mu"), 1.5);
}

TEST(SolveFirstIntegrals, ZeroSpeedIsSingular)
{
    // at mu = 0 both exponentials equal 1 and the printed denominators vanish
    auto r = verify_family("eq82", {{"mu", 0.0}});
    EXPECT_EQ(r.report.samples_used, 0u);
    EXPECT_FALSE(r.passed);
}

TEST(ProfileCsv, Rows)
{
    std::ostringstream os;
    auto const& f = find_family("eq93");
    write_profile_csv(os, f, f.defaults, -1, 1, 3);
    std::string s = os.str();
    EXPECT_EQ(s.substr(0, 7), "xi,U,V\n");
    EXPECT_EQ(std::count(s.begin(), s.end(), '\n'), 4);
    EXPECT_NE(s.find("\n0,1,0.666666666667\n"), std::string::npos);
}
