#pragma once

#include "dlw/jet/poly.hpp"

namespace dlw {

/// Variational derivative E_dep(p) = sum over a,b of (-1)^(a+b) D_x^a D_t^b dp/d(dep_{a,b}).
inline JetPoly euler_operator(JetPoly const& p, int dep)
{
    JetPoly out;
    for (auto const& var : jet_vars(p)) {
        if (var.dep != dep) continue;
        JetPoly term = total_derivative(partial(p, var), var.dx, var.dt);
        if (var.order() % 2 == 0) {
            out += term;
        } else {
            out -= term;
        }
    }
    return out;
}

inline JetTuple euler_operator(JetPoly const& p, std::vector<int> const& deps)
{
    JetTuple out;
    for (int dep : deps) out.push_back(euler_operator(p, dep));
    return out;
}

/// True when every Euler operator over `deps` annihilates p.
inline bool is_null_lagrangian(JetPoly const& p, std::vector<int> const& deps)
{
    for (int dep : deps) {
        if (!euler_operator(p, dep).is_zero()) return false;
    }
    return true;
}

/// Directional (Frechet) derivative of p along w: d/de p[u + e w] at e = 0.
inline JetPoly frechet(JetPoly const& p, std::vector<int> const& deps, JetTuple const& w)
{
    JetPoly out;
    for (auto const& var : jet_vars(p)) {
        for (std::size_t j = 0; j < deps.size(); ++j) {
            if (var.dep != deps[j]) continue;
            if (w[j].is_zero()) break;
            out += partial(p, var) * total_derivative(w[j], var.dx, var.dt);
            break;
        }
    }
    return out;
}

inline JetTuple frechet(JetTuple const& F, std::vector<int> const& deps, JetTuple const& w)
{
    JetTuple out;
    for (auto const& p : F) out.push_back(frechet(p, deps, w));
    return out;
}

/// Pairing sum_i a_i b_i.
inline JetPoly dot(JetTuple const& a, JetTuple const& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("tuple size mismatch");
    JetPoly out;
    for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
    return out;
}

} // namespace dlw
