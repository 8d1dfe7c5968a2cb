#pragma once

#include "dlw/jet/evolution_system.hpp"
#include "dlw/jet/poly.hpp"

namespace dlw::model {

inline JetPoly u(int dx = 0, int dt = 0) { return JetPoly::var(sym::u, dx, dt); }
inline JetPoly v(int dx = 0, int dt = 0) { return JetPoly::var(sym::v, dx, dt); }
inline JetPoly q(int dx = 0, int dt = 0) { return JetPoly::var(sym::q, dx, dt); }
inline JetPoly r(int dx = 0, int dt = 0) { return JetPoly::var(sym::r, dx, dt); }
inline JetPoly w1(int dx = 0, int dt = 0) { return JetPoly::var(sym::w1, dx, dt); }
inline JetPoly w2(int dx = 0, int dt = 0) { return JetPoly::var(sym::w2, dx, dt); }
inline JetPoly x(int p = 1) { return JetPoly::x(p); }
inline JetPoly t(int p = 1) { return JetPoly::t(p); }
inline Rational rat(long n, long d = 1) { return make_rational(n, d); }

inline std::vector<int> const& physical_deps()
{
    static std::vector<int> const deps{sym::u, sym::v};
    return deps;
}

inline std::vector<int> const& potential_deps()
{
    static std::vector<int> const deps{sym::q, sym::r};
    return deps;
}

/// u_t + u u_x + v_x = 0,  v_t + u_x v + u v_x + u_xxx/3 = 0.
inline EvolutionSystem const& dispersive_long_wave()
{
    static EvolutionSystem const sys =
        make_evolution_system(physical_deps(), {u() * u(1) + v(1), u(1) * v() + u() * v(1) + rat(1, 3) * u(3)});
    return sys;
}

/// Potentials with q_x = u, r_x = v, solved for q_xt and r_xt.
inline EvolutionSystem const& potential_system()
{
    static EvolutionSystem const sys = [] {
        EvolutionSystem s;
        s.deps = potential_deps();
        s.leading = {{1, 1}, {1, 1}};
        s.rhs = {q(1) * q(2) + r(2), q(2) * r(1) + q(1) * r(2) + rat(1, 3) * q(4)};
        return s;
    }();
    return sys;
}

/// u -> q_x, v -> r_x.
inline JetPoly to_potential(JetPoly const& p)
{
    return substitute_dependents(p, {{sym::u, q(1)}, {sym::v, r(1)}});
}

inline JetTuple to_potential(JetTuple const& w)
{
    JetTuple out;
    for (auto const& p : w) out.push_back(to_potential(p));
    return out;
}

} // namespace dlw::model
