#pragma once

#include "dlw/jet/euler.hpp"
#include "dlw/jet/evolution_system.hpp"
#include "dlw/jet/linalg.hpp"
#include "dlw/jet/poly.hpp"
#include "dlw/model/systems.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <vector>

namespace dlw {

/// X = xi_t d/dt + xi_x d/dx + eta[0] d/du + eta[1] d/dv with coefficients in (t, x, u, v).
struct PointSymmetry {
    JetPoly xi_t;
    JetPoly xi_x;
    JetTuple eta{JetPoly(), JetPoly()};

    friend bool operator==(PointSymmetry const&, PointSymmetry const&) = default;

    /// Coefficients as one tuple (xi_t, xi_x, eta_u, eta_v).
    JetTuple as_tuple() const { return {xi_t, xi_x, eta[0], eta[1]}; }

    static PointSymmetry from_tuple(JetTuple const& c) { return {c.at(0), c.at(1), {c.at(2), c.at(3)}}; }

    /// Point symmetries may only depend on order-zero jets.
    bool is_point() const
    {
        for (auto const& p : as_tuple()) {
            for (auto const& var : jet_vars(p)) {
                if (var.order() > 0) return false;
            }
        }
        return true;
    }
};

inline PointSymmetry operator+(PointSymmetry const& a, PointSymmetry const& b)
{
    return PointSymmetry::from_tuple(a.as_tuple() + b.as_tuple());
}

inline PointSymmetry operator*(Rational const& s, PointSymmetry const& a)
{
    return PointSymmetry::from_tuple(s * a.as_tuple());
}

/// Evolutionary form eta - xi_t u_t - xi_x u_x.
inline JetTuple characteristic(PointSymmetry const& X)
{
    auto const& deps = model::physical_deps();
    JetTuple out;
    for (std::size_t a = 0; a < deps.size(); ++a) {
        out.push_back(X.eta[a] - X.xi_t * JetPoly::var(deps[a], 0, 1) - X.xi_x * JetPoly::var(deps[a], 1, 0));
    }
    return out;
}

/// Prolongation coefficients eta_J computed by
///   eta_{J,i} = D_i eta_J - (D_i xi^j) u_{J,j}.
class Prolongation {
public:
    explicit Prolongation(PointSymmetry X)
      : X_(std::move(X))
      , dxi_{{{Dx(X_.xi_t), Dx(X_.xi_x)}, {Dt(X_.xi_t), Dt(X_.xi_x)}}}
    {}

    /// Coefficient of d/d(var) in the prolonged field.
    JetPoly const& coefficient(JetVar const& var)
    {
        auto it = memo_.find(var);
        if (it != memo_.end()) return it->second;
        JetPoly value;
        if (var.order() == 0) {
            value = X_.eta.at(dep_index(var.dep));
        } else {
            Axis axis = var.dx > 0 ? Axis::x : Axis::t;
            JetVar parent = axis == Axis::x ? JetVar{var.dep, var.dx - 1, var.dt} : JetVar{var.dep, var.dx, var.dt - 1};
            auto const& d = dxi_[axis == Axis::x ? 0 : 1];
            value = total_derivative(coefficient(parent), axis) - d[0] * JetPoly::var(parent.lifted(Axis::t)) -
                    d[1] * JetPoly::var(parent.lifted(Axis::x));
        }
        return memo_.emplace(var, std::move(value)).first->second;
    }

    /// pr X applied to F.
    JetPoly apply(JetPoly const& F)
    {
        JetPoly out = X_.xi_t * partial_explicit(F, Axis::t) + X_.xi_x * partial_explicit(F, Axis::x);
        for (auto const& var : jet_vars(F)) {
            if (is_param(var.dep)) continue;
            out += coefficient(var) * partial(F, var);
        }
        return out;
    }

private:
    static std::size_t dep_index(int dep)
    {
        auto const& deps = model::physical_deps();
        for (std::size_t a = 0; a < deps.size(); ++a) {
            if (deps[a] == dep) return a;
        }
        throw std::invalid_argument("point symmetry does not act on " + std::string(symbol_name(dep)));
    }

    PointSymmetry X_;
    std::array<std::array<JetPoly, 2>, 2> dxi_;
    std::map<JetVar, JetPoly> memo_;
};

/// Prolongation coefficients for the slots u_t, u_x, v_t, v_x and x-derivatives up to `order`.
inline std::map<JetVar, JetPoly> prolong(PointSymmetry const& X, int order = 3)
{
    Prolongation pr(X);
    std::map<JetVar, JetPoly> out;
    for (int dep : model::physical_deps()) {
        out.emplace(JetVar{dep, 0, 1}, pr.coefficient(JetVar{dep, 0, 1}));
        for (int k = 1; k <= order; ++k) out.emplace(JetVar{dep, k, 0}, pr.coefficient(JetVar{dep, k, 0}));
    }
    return out;
}

/// pr X(G) reduced on shell, one entry per equation.
inline JetTuple determining_residual(PointSymmetry const& X, EvolutionSystem const& sys)
{
    Prolongation pr(X);
    JetTuple out;
    for (auto const& G : sys.equations()) out.push_back(pr.apply(G));
    return reduce_on_shell(out, sys);
}

/// X applied to a function of (t, x, u, v).
inline JetPoly apply_field(PointSymmetry const& X, JetPoly const& f)
{
    JetPoly out = X.xi_t * partial_explicit(f, Axis::t) + X.xi_x * partial_explicit(f, Axis::x);
    auto const& deps = model::physical_deps();
    for (std::size_t a = 0; a < deps.size(); ++a) out += X.eta[a] * partial(f, JetVar{deps[a], 0, 0});
    return out;
}

/// [X, Y] = X(Y) - Y(X) coefficientwise.
inline PointSymmetry lie_bracket(PointSymmetry const& X, PointSymmetry const& Y)
{
    JetTuple cx = X.as_tuple();
    JetTuple cy = Y.as_tuple();
    JetTuple out;
    for (std::size_t k = 0; k < cx.size(); ++k) out.push_back(apply_field(X, cy[k]) - apply_field(Y, cx[k]));
    return PointSymmetry::from_tuple(out);
}

/// [P, Q] = Q'(P) - P'(Q), reduced on shell.
inline JetTuple char_bracket(JetTuple const& P, JetTuple const& Q, EvolutionSystem const& sys)
{
    return reduce_on_shell(frechet(Q, sys.deps, P) - frechet(P, sys.deps, Q), sys);
}

/// c[i][j][k] with [X_i, X_j] = c^k_ij X_k over the given basis.
using StructureConstants = std::vector<std::vector<RationalVector>>;

inline StructureConstants structure_constants(std::vector<PointSymmetry> const& basis)
{
    std::vector<JetTuple> tuples;
    for (auto const& X : basis) tuples.push_back(X.as_tuple());
    StructureConstants c(basis.size(), std::vector<RationalVector>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            c[i][j] = decompose(lie_bracket(basis[i], basis[j]).as_tuple(), tuples);
        }
    }
    return c;
}

/// E_i = c^k_ij l^j d/dl^k as a matrix acting on l: (E_i l)^k = sum_j c^k_ij l^j.
inline RationalMatrix adjoint_generator(StructureConstants const& c, std::size_t i)
{
    std::size_t n = c.size();
    RationalMatrix E(n, RationalVector(n, 0));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) E[k][j] = c[i][j][k];
    }
    return E;
}

} // namespace dlw
