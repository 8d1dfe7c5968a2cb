#pragma once

#include "dlw/conslaw/law.hpp"
#include "dlw/jet/euler.hpp"
#include "dlw/jet/evolution_system.hpp"
#include "dlw/jet/linear_op.hpp"
#include "dlw/model/catalog.hpp"
#include "dlw/symmetry/point_symmetry.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace dlw {

class InvalidA : public std::runtime_error {
public:
    InvalidA(std::string const& what, JetPoly residual)
      : std::runtime_error(what)
      , residual_(std::move(residual))
    {}
    JetPoly const& residual() const { return residual_; }

private:
    JetPoly residual_;
};

inline JetPoly divergence(ConservationLaw const& cl)
{
    return Dt(cl.density) + Dx(cl.flux);
}

/// D_t density + D_x flux on shell.
inline JetPoly divergence_residual(ConservationLaw const& cl, EvolutionSystem const& sys)
{
    return reduce_on_shell(divergence(cl), sys);
}

inline EvolutionSystem const& system_for(Family f)
{
    return f == Family::physical ? model::dispersive_long_wave() : model::potential_system();
}

inline JetPoly divergence_residual(ConservationLaw const& cl)
{
    return divergence_residual(cl, system_for(cl.family));
}

/// G . Lambda - D_t density - D_x flux, off shell.
inline JetPoly multiplier_pairing_check(JetTuple const& lambda, ConservationLaw const& cl, EvolutionSystem const& sys)
{
    return dot(sys.equations(), lambda) - divergence(cl);
}

/// Density vanishing on shell up to a total x-derivative.
inline bool is_trivial_law(ConservationLaw const& cl, EvolutionSystem const& sys)
{
    return is_null_lagrangian(reduce_on_shell(cl.density, sys), sys.deps) &&
           divergence_residual(cl, sys).is_zero();
}

// Formal Lagrangian and strict self-adjointness.

inline std::vector<int> const& adjoint_deps()
{
    static std::vector<int> const deps{sym::w1, sym::w2};
    return deps;
}

/// w1 * G2 + w2 * G1.
inline JetPoly formal_lagrangian(EvolutionSystem const& sys)
{
    auto G = sys.equations();
    if (G.empty()) return {};
    return model::w1() * G.at(1) + model::w2() * G.at(0);
}

/// Replaces w1, w2 by the given images.
inline JetPoly substitute_w(JetPoly const& p, JetPoly const& w1_image, JetPoly const& w2_image)
{
    return substitute_dependents(p, {{sym::w1, w1_image}, {sym::w2, w2_image}});
}

struct SelfAdjointness {
    JetTuple adjoint_system; ///< (dL/du, dL/dv) after substitution
    JetTuple equations;      ///< (G1, G2)
    bool holds = false;
};

/// F* = (E_u L, E_v L) after substituting w1, w2; strict self-adjointness
/// means F* = -F, where E_u L pairs with G2 and E_v L with G1.
inline SelfAdjointness self_adjointness_check(EvolutionSystem const& sys, JetPoly const& w1_image, JetPoly const& w2_image)
{
    SelfAdjointness out;
    auto L = formal_lagrangian(sys);
    out.equations = sys.equations();
    for (int dep : sys.deps) out.adjoint_system.push_back(substitute_w(euler_operator(L, dep), w1_image, w2_image));
    if (out.equations.empty()) {
        out.holds = true;
        return out;
    }
    out.holds = out.adjoint_system.at(0) == -out.equations.at(1) && out.adjoint_system.at(1) == -out.equations.at(0);
    return out;
}

inline SelfAdjointness self_adjointness_check(EvolutionSystem const& sys)
{
    return self_adjointness_check(sys, model::u(), model::v());
}

// Conserved currents.

namespace detail {

inline Rational factorial(int n)
{
    Rational f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

} // namespace detail

/// Current of a Lagrangian density L along (W, xi):
///   C^i = xi^i L + sum_{J + M + e_i = alpha} (-1)^|M| D^J W * D^M (dL/du_alpha),
/// the sum running over ordered index sequences. Returns (C^t, C^x) as a law.
inline ConservationLaw lagrangian_current(JetPoly const& L, std::vector<int> const& deps, JetTuple const& W,
                                          JetPoly const& xi_t, JetPoly const& xi_x, Family family, std::string label)
{
    JetPoly C[2] = {xi_x * L, xi_t * L}; // [x, t]
    for (auto const& var : jet_vars(L)) {
        std::size_t a = deps.size();
        for (std::size_t k = 0; k < deps.size(); ++k) {
            if (deps[k] == var.dep) a = k;
        }
        if (a == deps.size() || var.order() == 0 || W[a].is_zero()) continue;
        JetPoly Lp = partial(L, var);
        // symmetric-sequence weight
        Lp *= detail::factorial(var.dx) * detail::factorial(var.dt) / detail::factorial(var.order());
        for (int axis = 0; axis < 2; ++axis) {
            int rx = var.dx - (axis == 0 ? 1 : 0);
            int rt = var.dt - (axis == 1 ? 1 : 0);
            if (rx < 0 || rt < 0) continue;
            for (int jx = 0; jx <= rx; ++jx) {
                for (int jt = 0; jt <= rt; ++jt) {
                    int mx = rx - jx, mt = rt - jt;
                    Rational weight = detail::binomial(jx + jt, jx) * detail::binomial(mx + mt, mx);
                    if ((mx + mt) % 2 == 1) weight = -weight;
                    C[axis] += weight * total_derivative(W[a], jx, jt) * total_derivative(Lp, mx, mt);
                }
            }
        }
    }
    return {C[1], C[0], family, std::move(label)};
}

/// Conserved vector of the formal Lagrangian for a point symmetry, with w1 = u, w2 = v
/// when `substitute` is set.
inline ConservationLaw ibragimov_flow(PointSymmetry const& X, EvolutionSystem const& sys, bool substitute = true,
                                      std::string label = "")
{
    auto law = lagrangian_current(formal_lagrangian(sys), sys.deps, characteristic(X), X.xi_t, X.xi_x,
                                  Family::physical, std::move(label));
    if (substitute) {
        law.density = substitute_w(law.density, model::u(), model::v());
        law.flux = substitute_w(law.flux, model::u(), model::v());
    }
    return law;
}

/// Boundary terms (W^x, W^t) with pr V(L) = V . E(L) + D_x W^x + D_t W^t.
inline JetTuple noether_W(JetTuple const& V, JetPoly const& L = model::lagrangian())
{
    auto law = lagrangian_current(L, model::potential_deps(), V, JetPoly(), JetPoly(), Family::potential, "");
    return {law.flux, law.density};
}

/// E(pr V(L)) = 0 over the potentials.
inline bool variational_symmetry_test(JetTuple const& V, JetPoly const& L = model::lagrangian())
{
    return is_null_lagrangian(frechet(L, model::potential_deps(), V), model::potential_deps());
}

/// Flow (W^t - A^t, W^x - A^x) from a variational symmetry and its gauge A = (A^x, A^t).
inline ConservationLaw noether_flow(JetTuple const& V, JetTuple const& A, JetPoly const& L = model::lagrangian(),
                                    std::string label = "")
{
    JetPoly check = frechet(L, model::potential_deps(), V) - Dx(A.at(0)) - Dt(A.at(1));
    if (!check.is_zero()) throw InvalidA("pr V(L) differs from the divergence of A", check);
    auto W = noether_W(V, L);
    return {W[1] - A[1], W[0] - A[0], Family::potential, std::move(label)};
}

// Hamiltonian structure.

struct HamiltonianCheck {
    JetTuple gradient;
    JetTuple flow; ///< D applied to the gradient
    bool reproduces_system = false;
    bool skew_adjoint = false;
};

inline HamiltonianCheck hamiltonian_check(JetPoly const& H, LinearDiffOp const& D, EvolutionSystem const& sys)
{
    HamiltonianCheck out;
    out.gradient = euler_operator(H, sys.deps);
    out.flow = apply_op(D, out.gradient);
    out.reproduces_system = out.flow == sys.rhs;
    out.skew_adjoint = formal_adjoint(D) == -D;
    return out;
}

namespace detail {

/// D(Q) for D = [[0, D_x], [D_x, 0]] with q_x -> u, r_x -> v afterwards.
inline JetTuple presymplectic_image(JetTuple const& Q)
{
    JetTuple Qp = model::to_potential(Q);
    auto back = [](JetPoly const& p) {
        return substitute(p, [](JetVar const& var) -> std::optional<JetPoly> {
            if (var.dx == 0) return std::nullopt;
            if (var.dep == sym::q) return JetPoly::var(sym::u, var.dx - 1, var.dt);
            if (var.dep == sym::r) return JetPoly::var(sym::v, var.dx - 1, var.dt);
            return std::nullopt;
        });
    };
    return {back(Dx(Qp.at(1))), back(Dx(Qp.at(0)))};
}

} // namespace detail

/// Sign s with D(Q) = s P; 0 when neither sign works.
inline int presymplectic_check(JetTuple const& P, JetTuple const& Q)
{
    JetTuple image = detail::presymplectic_image(Q);
    if (image == P) return 1;
    if (image == -P) return -1;
    return 0;
}

/// D(Q) - P, for reporting.
inline JetTuple presymplectic_defect(JetTuple const& P, JetTuple const& Q)
{
    return detail::presymplectic_image(Q) - P;
}

} // namespace dlw
