#pragma once

#include "dlw/jet/poly.hpp"
#include "dlw/model/systems.hpp"

#include <stdexcept>

namespace dlw {

/// Reduced ring for similarity reductions: profiles f, g of one variable Z
/// stored as f[k,0], g[k,0]; Z occupies the explicit x slot.
namespace reduced {
inline JetPoly f(int k = 0) { return JetPoly::var(sym::f, k, 0); }
inline JetPoly g(int k = 0) { return JetPoly::var(sym::g, k, 0); }
inline JetPoly Z(int p = 1) { return JetPoly::x(p); }
} // namespace reduced

/// Divides every term by symbol^k; throws if some term has a lower power.
inline JetPoly divide_by_power(JetPoly const& p, int symbol, int k)
{
    JetPoly out;
    JetVar var{symbol, 0, 0};
    for (auto const& [m, c] : p.terms()) {
        if (m.exponent_of(var) < k) throw std::domain_error("polynomial is not divisible by " + std::string(symbol_name(symbol)));
        out.add_term(m.with_exponent_delta(var, -k), c);
    }
    return out;
}

namespace detail {

inline Derivation profile_derivation(JetPoly const& dZ, JetPoly const& dt_of_t, JetPoly const& dlam = {})
{
    Derivation d;
    d.of_var = [dZ, dlam](JetVar const& var) -> JetPoly {
        if (var.dep == sym::lam) return dlam;
        if (is_param(var.dep)) return {};
        return dZ * JetPoly::var(var.dep, var.dx + 1, 0);
    };
    d.of_x = dZ;
    d.of_t = dt_of_t;
    return d;
}

} // namespace detail

/// Invariant form for X1 + X3: Z = t^2/2 - x, u = t + f(Z), v = g(Z).
inline JetTuple reduce_by_x1_plus_x3()
{
    using namespace reduced;
    Derivation dx = detail::profile_derivation(JetPoly(-1), JetPoly());
    Derivation dt = detail::profile_derivation(JetPoly::t(), JetPoly(1));
    JetTuple out;
    for (auto const& G : model::dispersive_long_wave().equations()) {
        out.push_back(substitute_dependents(G, {{sym::u, JetPoly::t() + f()}, {sym::v, g()}}, dx, dt));
    }
    return out;
}

/// Invariant form for X2 + X4: Z = (x + 2) lam, u = lam f(Z), v = lam^2 g(Z)
/// with lam = t^(-1/2), so D_x Z = lam, D_t Z = -Z lam^2 / 2, D_t lam = -lam^3 / 2.
/// The substituted equations carry factors lam^3 and lam^4, which are removed.
inline JetTuple reduce_by_x2_plus_x4()
{
    using namespace reduced;
    JetPoly lam = JetPoly::param(sym::lam);
    Derivation dx = detail::profile_derivation(lam, JetPoly());
    Derivation dt = detail::profile_derivation(-Z() * lam * lam / 2, JetPoly(1), -pow(lam, 3) / 2);
    auto const eqs = model::dispersive_long_wave().equations();
    std::map<int, JetPoly> images{{sym::u, lam * f()}, {sym::v, lam * lam * g()}};
    return {divide_by_power(substitute_dependents(eqs[0], images, dx, dt), sym::lam, 3),
            divide_by_power(substitute_dependents(eqs[1], images, dx, dt), sym::lam, 4)};
}

/// Reduced equations for X1 + X3 as printed.
inline JetTuple printed_reduction_x1_plus_x3()
{
    using namespace reduced;
    JetPoly t = JetPoly::t();
    return {1 + f(1) * t + (t + f()) * (-f(1)) - g(1), t * g(1) - f(1) * g() + (t + f()) * (-g(1)) - model::rat(1, 3) * f(3)};
}

/// Reduced equations for X2 + X4 as printed.
inline JetTuple printed_reduction_x2_plus_x4()
{
    using namespace reduced;
    using model::rat;
    return {rat(-1, 2) * Z() * f(1) - rat(1, 2) * f() + f() * f(1) + g(1),
            -g() - rat(1, 2) * Z() * g(1) + g() * f(1) + f() * g(1) + rat(1, 3) * f(3)};
}

} // namespace dlw
