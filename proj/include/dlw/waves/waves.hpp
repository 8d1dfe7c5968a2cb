#pragma once

#include "dlw/analytic/families.hpp"
#include "dlw/analytic/solutions.hpp"
#include "dlw/conslaw/law.hpp"
#include "dlw/jet/evolution_system.hpp"
#include "dlw/jet/poly.hpp"
#include "dlw/model/catalog.hpp"

#include <array>
#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dlw {

class ExplicitCoordinateError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Profile ring: U[k] = d^k U / dxi^k, stored in the x slot.
namespace wave {
inline JetPoly U(int k = 0) { return JetPoly::var(sym::U, k, 0); }
inline JetPoly V(int k = 0) { return JetPoly::var(sym::V, k, 0); }
inline JetPoly mu() { return JetPoly::param(sym::mu); }
} // namespace wave

struct TravelingWaveODE {
    JetPoly mu;
    JetTuple equations;
    EvolutionSystem system; ///< solved for U''' and V'
};

struct FirstIntegral {
    JetPoly expr;
    std::string source_law;
    JetPoly residual; ///< d/dxi expr reduced modulo the ODE
    bool conserved() const { return residual.is_zero(); }
};

namespace detail {

inline Derivation xi_derivation(JetPoly const& factor)
{
    Derivation d;
    d.of_var = [factor](JetVar const& var) -> JetPoly {
        if (is_param(var.dep)) return {};
        return factor * JetPoly::var(var.dep, var.dx + 1, 0);
    };
    return d;
}

/// D_x -> d/dxi, D_t -> -mu d/dxi, u -> U, v -> V.
inline JetPoly to_traveling(JetPoly const& p, JetPoly const& mu)
{
    return substitute_dependents(p, {{sym::u, wave::U()}, {sym::v, wave::V()}}, xi_derivation(JetPoly(1)),
                                 xi_derivation(-mu));
}

inline bool uses_var(JetPoly const& p, JetVar var)
{
    for (auto const& [m, c] : p.terms()) {
        if (m.exponent_of(var) > 0) return true;
    }
    return false;
}

/// rhs for `lead` when eq = c lead + rest with rational c != 0.
inline JetPoly solve_for(JetPoly const& eq, JetVar lead)
{
    JetPoly rest = eq;
    Rational c = eq.coefficient(Monomial::of(lead));
    if (c == 0) throw std::logic_error("leading derivative missing from traveling equation");
    rest.add_term(Monomial::of(lead), -c);
    if (uses_var(rest, lead)) throw std::logic_error("traveling equation is not linear in its leading derivative");
    return rest / c;
}

} // namespace detail

inline TravelingWaveODE reduce_traveling(EvolutionSystem const& sys, JetPoly const& mu = wave::mu())
{
    if (sys.deps != model::physical_deps()) throw std::invalid_argument("traveling reduction expects the (u, v) system");
    TravelingWaveODE ode;
    ode.mu = mu;
    for (auto const& G : sys.equations()) ode.equations.push_back(detail::to_traveling(G, mu));
    ode.system.deps = {sym::U, sym::V};
    ode.system.leading = {{3, 0}, {1, 0}};
    ode.system.rhs = {detail::solve_for(ode.equations[1], JetVar{sym::U, 3, 0}),
                      detail::solve_for(ode.equations[0], JetVar{sym::V, 1, 0})};
    return ode;
}

inline TravelingWaveODE reduce_traveling(JetPoly const& mu = wave::mu())
{
    return reduce_traveling(model::dispersive_long_wave(), mu);
}

/// The traveling-wave ODE as printed.
inline std::vector<JetPoly> printed_traveling_ode()
{
    using namespace wave;
    return {-mu() * U(1) + U() * U(1) + V(1), -mu() * V(1) + U() * V(1) + V() * U(1) + model::rat(1, 3) * U(3)};
}

/// d/dxi p reduced modulo the ODE.
inline JetPoly xi_derivative_mod_ode(JetPoly const& p, TravelingWaveODE const& ode)
{
    return reduce_on_shell(apply_derivation(p, detail::xi_derivation(JetPoly(1))), ode.system);
}

/// flux - mu density along u = U(x - mu t), v = V(x - mu t).
inline FirstIntegral first_integral(ConservationLaw const& cl, JetPoly const& mu = wave::mu())
{
    if (cl.family != Family::physical) throw std::invalid_argument("first integrals need a law of the (u, v) system");
    if (has_explicit_xt(cl.density) || has_explicit_xt(cl.flux)) {
        throw ExplicitCoordinateError("law " + cl.label + " depends explicitly on x or t");
    }
    auto ode = reduce_traveling(mu);
    FirstIntegral fi;
    fi.expr = detail::to_traveling(cl.flux, mu) - mu * detail::to_traveling(cl.density, mu);
    fi.source_law = cl.label;
    fi.residual = xi_derivative_mod_ode(fi.expr, ode);
    return fi;
}

/// C1..C4 as printed; C1's two display lines are returned separately.
inline std::vector<JetPoly> printed_first_integrals()
{
    using namespace wave;
    using model::rat;
    JetPoly m = mu();
    JetPoly c1_line1 =
        rat(27, 8) * U() * U() * V() * V() + rat(1, 2) * V(1) * V(1) + rat(3, 4) * pow(V(), 3) +
        rat(1, 6) * U(2) * U(2) + m * U() * V(2) + m * V() * U(2) + rat(3, 4) * pow(U(), 4) * V() +
        rat(3, 8) * U() * U() * U(1) * U(1) + rat(1, 4) * pow(U(), 3) * U(2) + rat(3, 2) * U() * V() * U(2) +
        U() * U(1) * V(1) - rat(1, 4) * V() * U(1) * U(1) + rat(3, 4) * m * U() * U() * U(2) -
        m * (U(1) * V(1) + V() * U(2) + V(2) * U() + rat(3, 4) * pow(U(), 3) * V() + rat(9, 4) * V() * V() * U() +
             rat(3, 4) * U() * U(1) * U(1) + rat(3, 4) * U() * U() * U(2));
    JetPoly c1_line2 = rat(3, 4) * pow(U(), 4) * V() - rat(3, 4) * pow(U(), 3) * V() * m + rat(1, 4) * pow(U(), 3) * U(2) +
                       rat(27, 8) * U() * U() * V() * V() + rat(3, 8) * U() * U() * U(1) * U(1) -
                       rat(9, 4) * U() * V() * V() * m - rat(3, 4) * U() * U(1) * U(1) * m +
                       rat(3, 2) * U() * V() * U(2) + U() * U(1) * V(1) + rat(3, 4) * pow(V(), 3) -
                       rat(1, 4) * V() * U(1) * U(1) - U(1) * V(1) * m + rat(1, 6) * U(2) * U(2) +
                       rat(1, 2) * V(1) * V(1);
    JetPoly c2 = rat(1, 2) * pow(U(), 3) * V() - rat(1, 2) * U() * U() * V() * m + rat(1, 6) * U() * U() * U(2) +
                 V() * V() * U() - rat(1, 2) * V() * V() * m - rat(1, 6) * m * U(1) * U(1) + rat(1, 3) * V() * U(2);
    JetPoly c3 = rat(1, 2) * V() * V() + U() * U() * V() + rat(1, 3) * U() * U(2) - rat(1, 6) * U(1) * U(1) -
                 m * U() * V();
    JetPoly c4 = U() * V() + rat(1, 3) * U(2) + rat(1, 2) * U() * U() + V() - m * U() - m * V();
    return {c1_line1, c1_line2, c2, c3, c4};
}

struct C1Reconstruction {
    JetPoly reconstructed;
    bool matches_line1 = false;
    bool matches_line2 = false;
    JetPoly difference_from_line2; ///< reconstructed - line 2
    JetPoly residual;              ///< d/dxi reconstructed mod ODE
    JetPoly printed_residual;      ///< d/dxi line 2 mod ODE
    bool corrected_law_matches = false; ///< eq29 with -v u_xt in the flux gives line 2
};

inline C1Reconstruction reconstruct_c1()
{
    auto printed = printed_first_integrals();
    auto fi = first_integral(model::law_eq29());
    C1Reconstruction r;
    r.reconstructed = fi.expr;
    r.matches_line1 = fi.expr == printed[0];
    r.matches_line2 = fi.expr == printed[1];
    r.difference_from_line2 = fi.expr - printed[1];
    r.residual = fi.residual;
    r.printed_residual = xi_derivative_mod_ode(printed[1], reduce_traveling());
    r.corrected_law_matches = first_integral(model::law_eq29_corrected()).expr == printed[1];
    return r;
}

/// Laws feeding C1..C4: eq29, the conserved orientation of eq31, eq32, eq33.
inline std::vector<ConservationLaw> first_integral_sources()
{
    return {model::law_eq29(), model::law_eq31_swapped(), model::law_eq32(), model::law_eq33()};
}

// ---------------------------------------------------------------------------
// Numerical check along a profile
// ---------------------------------------------------------------------------

/// ODE state (U, U', U'', V).
using ProfileState = std::array<double, 4>;

class ProfileODE {
public:
    explicit ProfileODE(double mu)
      : mu_(mu)
      , ode_(reduce_traveling())
    {
        u3_ = reduce_on_shell(wave::U(3), ode_.system);
        v1_ = reduce_on_shell(wave::V(1), ode_.system);
    }

    double value(JetPoly const& p, ProfileState const& s) const
    {
        JetPoly r = reduce_on_shell(p, ode_.system);
        return eval_jet(r, [&](JetVar const& var) { return lookup(var, s); }, 0, 0);
    }

    ProfileState derivative(ProfileState const& s) const
    {
        auto f = [&](JetVar const& var) { return lookup(var, s); };
        return {s[1], s[2], eval_jet(u3_, f, 0, 0), eval_jet(v1_, f, 0, 0)};
    }

    ProfileState rk4_step(ProfileState const& s, double h) const
    {
        auto axpy = [](ProfileState a, ProfileState const& b, double c) {
            for (std::size_t i = 0; i < a.size(); ++i) a[i] += c * b[i];
            return a;
        };
        auto k1 = derivative(s);
        auto k2 = derivative(axpy(s, k1, h / 2));
        auto k3 = derivative(axpy(s, k2, h / 2));
        auto k4 = derivative(axpy(s, k3, h));
        ProfileState out = s;
        for (std::size_t i = 0; i < s.size(); ++i) out[i] += h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
        return out;
    }

    TravelingWaveODE const& ode() const { return ode_; }

private:
    double lookup(JetVar const& var, ProfileState const& s) const
    {
        if (var.dep == sym::mu) return mu_;
        if (var.dep == sym::U && var.dx <= 2) return s[var.dx];
        if (var.dep == sym::V && var.dx == 0) return s[3];
        throw std::logic_error("profile state lacks a jet variable");
    }

    double mu_;
    TravelingWaveODE ode_;
    JetPoly u3_, v1_;
};

/// Profile of the tanh kink at xi: u = mu + (2/sqrt3) tanh xi, v = (2/3) sech^2 xi.
inline ProfileState kink_profile(double mu, double xi)
{
    double a = 2 / std::sqrt(3.0), T = std::tanh(xi), S2 = 1 - T * T;
    return {mu + a * T, a * S2, -2 * a * T * S2, 2.0 / 3.0 * S2};
}

struct DriftReport {
    std::vector<std::string> labels;
    std::vector<double> initial;
    std::vector<double> max_drift;
    std::size_t steps = 0;
};

/// Integrates the ODE with RK4 from the kink at xi0 and tracks each quantity.
inline DriftReport first_integral_drift(std::vector<JetPoly> const& quantities, std::vector<std::string> labels,
                                        double mu = 1.0, double xi0 = -10, double xi1 = 10, double h = 1e-3)
{
    ProfileODE ode(mu);
    DriftReport rep;
    rep.labels = std::move(labels);
    ProfileState s = kink_profile(mu, xi0);
    for (auto const& q : quantities) rep.initial.push_back(ode.value(q, s));
    rep.max_drift.assign(quantities.size(), 0.0);
    auto n = static_cast<std::size_t>(std::llround((xi1 - xi0) / h));
    for (std::size_t k = 0; k < n; ++k) {
        s = ode.rk4_step(s, h);
        for (std::size_t i = 0; i < quantities.size(); ++i) {
            rep.max_drift[i] = std::max(rep.max_drift[i], std::abs(ode.value(quantities[i], s) - rep.initial[i]));
        }
    }
    rep.steps = n;
    return rep;
}

// ---------------------------------------------------------------------------
// tanh ansatz
// ---------------------------------------------------------------------------

namespace detail {

inline Derivation tanh_derivation()
{
    Derivation d;
    d.of_var = [](JetVar const& var) -> JetPoly {
        if (var.dep == sym::T) return 1 - JetPoly::param(sym::T) * JetPoly::param(sym::T);
        return {};
    };
    return d;
}

inline std::vector<JetPoly> coefficients_in(JetPoly const& p, int symbol)
{
    JetVar var{symbol, 0, 0};
    std::vector<JetPoly> out;
    for (auto const& [m, c] : p.terms()) {
        auto k = static_cast<std::size_t>(m.exponent_of(var));
        if (out.size() <= k) out.resize(k + 1);
        out[k].add_term(m.with_exponent_delta(var, -static_cast<int>(k)), c);
    }
    return out;
}

} // namespace detail

struct TanhAnsatzSystem {
    /// coefficients[j][k]: coefficient of T^k in traveling equation j
    std::vector<std::vector<JetPoly>> coefficients;

    std::vector<JetPoly> flat() const
    {
        std::vector<JetPoly> out;
        for (auto const& eq : coefficients) {
            for (auto const& c : eq) {
                if (!c.is_zero()) out.push_back(c);
            }
        }
        return out;
    }
};

/// u = a0 + a1 T, v = b0 + b1 T + b2 T^2 with T = tanh xi, T' = 1 - T^2.
inline TanhAnsatzSystem tanh_ansatz_system()
{
    using P = JetPoly;
    P T = P::param(sym::T);
    P Uimg = P::param(sym::a0) + P::param(sym::a1) * T;
    P Vimg = P::param(sym::b0) + P::param(sym::b1) * T + P::param(sym::b2) * T * T;
    auto ode = reduce_traveling();
    Derivation d = detail::tanh_derivation();
    TanhAnsatzSystem sys;
    for (auto const& E : ode.equations) {
        P sub = substitute_dependents(E, {{sym::U, Uimg}, {sym::V, Vimg}}, d, Derivation{[](JetVar const&) { return P(); }, {}, {}});
        sys.coefficients.push_back(detail::coefficients_in(sub, sym::T));
    }
    return sys;
}

/// Replaces s3^k by 3^(k/2) s3^(k mod 2).
inline JetPoly reduce_sqrt3(JetPoly const& p)
{
    JetVar var{sym::s3, 0, 0};
    JetPoly out;
    for (auto const& [m, c] : p.terms()) {
        int k = m.exponent_of(var);
        Rational scale = 1;
        for (int i = 0; i < k / 2; ++i) scale *= 3;
        out.add_term(m.with_exponent_delta(var, -2 * (k / 2)), c * scale);
    }
    return out;
}

/// Substitutes parameter images, then reduces sqrt(3) powers.
inline JetPoly at_point(JetPoly const& p, std::map<int, JetPoly> const& point)
{
    return reduce_sqrt3(substitute(p, [&](JetVar const& var) -> std::optional<JetPoly> {
        auto it = point.find(var.dep);
        if (it == point.end()) return std::nullopt;
        return it->second;
    }));
}

/// a0 = mu, a1 = 2 sqrt3 / 3, b0 = 2/3, b1 = 0, b2 = -2/3.
inline std::map<int, JetPoly> kink_point()
{
    using model::rat;
    return {{sym::a0, wave::mu()},
            {sym::a1, rat(2, 3) * JetPoly::param(sym::s3)},
            {sym::b0, JetPoly(rat(2, 3))},
            {sym::b1, JetPoly()},
            {sym::b2, JetPoly(rat(-2, 3))}};
}

/// The five coefficient equations as printed.
inline std::vector<JetPoly> printed_tanh_system()
{
    using model::rat;
    JetPoly a0 = JetPoly::param(sym::a0), a1 = JetPoly::param(sym::a1), b0 = JetPoly::param(sym::b0),
            b1 = JetPoly::param(sym::b1), b2 = JetPoly::param(sym::b2), m = wave::mu();
    return {
        rat(-64, 3) * a1 - 8 * m * b1 + 8 * a1 * b0 + 8 * b1 * a0 - 24 * a1 * b2,
        -4 * m * b1 - 8 * m * b2 + 4 * a1 * b0 + 8 * a1 * b1 + 12 * a1 * b2 + 4 * a0 * b1 + 8 * b2 * a0 + rat(16, 3) * a1,
        -4 * m * b1 + 8 * m * b2 + 4 * a1 * b0 - 8 * a1 * b1 + 12 * a1 * b2 + 4 * a0 * b1 - 8 * b2 * a0 + rat(16, 3) * a1,
        4 * a0 * a1 - 4 * m * a1 + 4 * b1 + 4 * a1 * a1 + 8 * b2 + 4 * a1 * a1,
        4 * a0 * a1 - 4 * a1 * a1 + 4 * b1 - 4 * m * a1 - 8 * b2,
    };
}

// ---------------------------------------------------------------------------
// Family verification
// ---------------------------------------------------------------------------

inline constexpr double family_tolerance = 1e-8;

struct FamilyVerification {
    std::string id;
    std::string constraint;
    ParamBinding binding;
    ResidualReport report;
    bool passed = false;
};

/// Residual of a registered family on n deterministic samples of its window;
/// `binding` overrides the family defaults. The verdict uses the residual
/// relative to the size of the cancelling terms, so samples near a pole
/// do not fail on rounding alone.
inline FamilyVerification verify_family(std::string const& id, ParamBinding const& binding = {},
                                        std::size_t n_samples = 50, double tol = family_tolerance)
{
    auto const& fam = find_family(id);
    FamilyVerification out;
    out.id = id;
    out.binding = fam.defaults;
    for (auto const& [k, v] : binding) out.binding[k] = v;
    out.report = residual_max(model::dispersive_long_wave(), {fam.u, fam.v}, out.binding,
                              sample_points(n_samples, fam.x_min, fam.x_max, fam.t_min, fam.t_max));
    out.passed = out.report.samples_used > 0 && out.report.max_relative < tol;
    return out;
}

/// Every binding of the family's scan grid.
inline std::vector<FamilyVerification> scan_family(std::string const& id, std::size_t n_samples = 50)
{
    auto const& fam = find_family(id);
    std::vector<FamilyVerification> out;
    for (auto const& [name, b] : scan_bindings(fam, family_scan(id))) {
        auto r = verify_family(id, b, n_samples);
        r.constraint = name;
        out.push_back(std::move(r));
    }
    return out;
}

/// The decaying-profile families obtained from C1..C4 = 0, bound at speed mu.
inline std::vector<SolitonFamily> solve_first_integrals(double mu)
{
    std::vector<SolitonFamily> out;
    for (auto id : {"eq82", "eq83"}) {
        SolitonFamily f = find_family(id);
        f.defaults["mu"] = mu;
        out.push_back(std::move(f));
    }
    return out;
}

/// CSV rows xi,U,V of a family at t = 0.
inline void write_profile_csv(std::ostream& os, SolitonFamily const& fam, ParamBinding const& binding, double xi0,
                              double xi1, std::size_t n)
{
    os << "xi,U,V\n";
    os.precision(12);
    for (std::size_t k = 0; k < n; ++k) {
        double xi = n > 1 ? xi0 + (xi1 - xi0) * static_cast<double>(k) / static_cast<double>(n - 1) : xi0;
        double t = fam.t_min > 0 ? fam.t_min : 0.0;
        try {
            os << xi << "," << eval(fam.u, binding, xi, t) << "," << eval(fam.v, binding, xi, t) << "\n";
        } catch (DomainError const&) {
            os << xi << ",nan,nan\n";
        }
    }
}

} // namespace dlw
