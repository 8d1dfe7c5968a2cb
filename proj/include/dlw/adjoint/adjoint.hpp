#pragma once

#include "dlw/jet/euler.hpp"
#include "dlw/jet/evolution_system.hpp"
#include "dlw/jet/linalg.hpp"
#include "dlw/jet/linear_op.hpp"
#include "dlw/model/catalog.hpp"
#include "dlw/symmetry/point_symmetry.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dlw {

class NotInRange : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class AmbiguousPreimage : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// G' of the system map G = (u_t + g^1, v_t + g^2).
inline LinearDiffOp linearization(EvolutionSystem const& sys)
{
    return linearization(sys.equations(), sys.deps);
}

/// G'*(Q) reduced on shell.
inline JetTuple adjoint_determining_residual(JetTuple const& Q, EvolutionSystem const& sys)
{
    return reduce_on_shell(apply_op(formal_adjoint(linearization(sys)), Q), sys);
}

/// Q is a multiplier iff the Euler operators annihilate G . Q off shell.
inline bool multiplier_test(JetTuple const& Q, EvolutionSystem const& sys)
{
    return is_null_lagrangian(dot(sys.equations(), Q), sys.deps);
}

/// R_P with G'(P) = R_P(G) for the characteristic P of a point symmetry X:
/// R_P = Lambda - xi_t D_t - xi_x D_x, Lambda_ij the u^j_t coefficient of pr X(G_i).
inline LinearDiffOp r_p(PointSymmetry const& X, EvolutionSystem const& sys)
{
    Prolongation pr(X);
    auto const G = sys.equations();
    LinearDiffOp R(G.size(), sys.deps.size());
    for (std::size_t i = 0; i < G.size(); ++i) {
        JetPoly image = pr.apply(G[i]);
        for (std::size_t j = 0; j < sys.deps.size(); ++j) {
            R.add(i, j, partial(image, JetVar{sys.deps[j], 0, 1}), 0, 0);
        }
        R.add(i, i, -X.xi_t, 0, 1);
        R.add(i, i, -X.xi_x, 1, 0);
    }
    return R;
}

/// R_Q with G'*(Q) = R_Q(G); for a multiplier this is -(Q')*.
inline LinearDiffOp r_q(JetTuple const& Q, EvolutionSystem const& sys)
{
    return -formal_adjoint(linearization(Q, sys.deps));
}

/// Q'(P) + R_P*(Q) on shell.
inline JetTuple action1(JetTuple const& P, LinearDiffOp const& RP, JetTuple const& Q, EvolutionSystem const& sys)
{
    return reduce_on_shell(frechet(Q, sys.deps, P) + apply_op(formal_adjoint(RP), Q), sys);
}

inline JetTuple action1(PointSymmetry const& X, JetTuple const& Q, EvolutionSystem const& sys)
{
    return action1(characteristic(X), r_p(X, sys), Q, sys);
}

/// R_P*(Q) - R_Q*(P) on shell.
inline JetTuple action2(JetTuple const& P, LinearDiffOp const& RP, JetTuple const& Q, EvolutionSystem const& sys)
{
    return reduce_on_shell(apply_op(formal_adjoint(RP), Q) - apply_op(formal_adjoint(r_q(Q, sys)), P), sys);
}

inline JetTuple action2(PointSymmetry const& X, JetTuple const& Q, EvolutionSystem const& sys)
{
    return action2(characteristic(X), r_p(X, sys), Q, sys);
}

struct ActionCell {
    JetTuple value;
    std::optional<RationalVector> coords; ///< in the Q basis; empty when outside the span
    JetTuple residue;
    bool matches_printed = false;
};

/// Rows Q1..Q6, columns P1..P4.
struct ActionTable {
    std::vector<std::vector<ActionCell>> cells;
    int mismatches() const
    {
        int n = 0;
        for (auto const& row : cells) {
            for (auto const& c : row) n += c.matches_printed ? 0 : 1;
        }
        return n;
    }
};

/// Table entries as printed, in Q coordinates.
inline std::vector<std::vector<RationalVector>> printed_action_table()
{
    auto e = [](int k, Rational c) {
        RationalVector v(6, 0);
        if (k > 0) v[k - 1] = c;
        return v;
    };
    auto z = e(0, 0);
    return {
        {z, z, e(3, make_rational(9, 2)), e(1, -2)},
        {e(4, 1), e(6, -1), z, z},
        {z, z, e(4, 1), e(3, make_rational(-3, 2))},
        {z, z, e(6, 1), e(4, -1)},
        {z, z, z, z},
        {z, z, z, z},
    };
}

inline ActionTable build_action_table(std::vector<JetTuple> const& Q = model::adjoint_basis())
{
    auto const& sys = model::dispersive_long_wave();
    auto const printed = printed_action_table();
    ActionTable table;
    for (std::size_t i = 0; i < Q.size(); ++i) {
        std::vector<ActionCell> row;
        for (std::size_t j = 0; j < model::generators().size(); ++j) {
            ActionCell cell;
            cell.value = action1(model::generators()[j], Q[i], sys);
            try {
                cell.coords = decompose(cell.value, Q);
                cell.matches_printed = *cell.coords == printed[i][j];
            } catch (DecompositionError const& e) {
                cell.residue = e.residue();
            }
            row.push_back(std::move(cell));
        }
        table.cells.push_back(std::move(row));
    }
    return table;
}

/// Bracket induced on the range of S_Q(P) = action1(P, Q) for a fixed Q.
class InducedBracket {
public:
    InducedBracket(ActionTable const& table, std::size_t fix)
      : fix_(fix)
    {
        auto const& sys = model::dispersive_long_wave();
        std::size_t np = model::generators().size();
        std::size_t nq = table.cells.size();
        S_.assign(nq, RationalVector(np, 0));
        for (std::size_t j = 0; j < np; ++j) {
            auto const& c = table.cells.at(fix).at(j).coords;
            if (!c) throw NotInRange("S_Q image outside the adjoint basis");
            for (std::size_t k = 0; k < nq; ++k) S_[k][j] = (*c)[k];
        }
        std::vector<JetTuple> P;
        for (auto const& X : model::generators()) P.push_back(reduce_on_shell(characteristic(X), sys));
        C_.assign(np, std::vector<RationalVector>(np));
        for (std::size_t a = 0; a < np; ++a) {
            for (std::size_t b = 0; b < np; ++b) C_[a][b] = decompose(char_bracket(P[a], P[b], sys), P);
        }
        kernel_ = null_space(S_, np);
    }

    std::size_t fixed() const { return fix_; }
    std::vector<RationalVector> const& kernel() const { return kernel_; }

    /// [a, b] on P coordinates.
    RationalVector p_bracket(RationalVector const& a, RationalVector const& b) const
    {
        RationalVector out(a.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t j = 0; j < b.size(); ++j) {
                if (a[i] == 0 || b[j] == 0) continue;
                for (std::size_t k = 0; k < out.size(); ++k) out[k] += a[i] * b[j] * C_[i][j][k];
            }
        }
        return out;
    }

    RationalVector apply_s(RationalVector const& p) const
    {
        RationalVector out(S_.size(), 0);
        for (std::size_t k = 0; k < S_.size(); ++k) {
            for (std::size_t j = 0; j < p.size(); ++j) out[k] += S_[k][j] * p[j];
        }
        return out;
    }

    /// ker S_Q is an ideal of span{P1..P4}.
    bool kernel_is_ideal() const
    {
        for (auto const& k : kernel_) {
            for (std::size_t j = 0; j < C_.size(); ++j) {
                RationalVector e(C_.size(), 0);
                e[j] = 1;
                for (auto const& x : apply_s(p_bracket(k, e))) {
                    if (x != 0) return false;
                }
            }
        }
        return true;
    }

    /// Preimage with free (kernel) coordinates set to zero.
    RationalVector preimage(RationalVector const& q) const
    {
        auto p = solve(S_, q);
        if (!p) throw NotInRange("adjoint symmetry is not in the range of S_Q");
        return *p;
    }

    /// S_Q([S_Q^-1 a, S_Q^-1 b]) in Q coordinates.
    RationalVector operator()(RationalVector const& a, RationalVector const& b) const
    {
        if (!kernel_is_ideal()) throw AmbiguousPreimage("kernel of S_Q is not an ideal");
        return apply_s(p_bracket(preimage(a), preimage(b)));
    }

private:
    std::size_t fix_;
    RationalMatrix S_;
    std::vector<std::vector<RationalVector>> C_;
    std::vector<RationalVector> kernel_;
};

/// Convenience: bracket of Q_a and Q_b (1-based) with Q_fix held.
inline RationalVector sq_bracket(int fix, int a, int b, ActionTable const& table = build_action_table())
{
    InducedBracket br(table, static_cast<std::size_t>(fix - 1));
    RationalVector qa(table.cells.size(), 0), qb(table.cells.size(), 0);
    qa.at(a - 1) = 1;
    qb.at(b - 1) = 1;
    return br(qa, qb);
}

} // namespace dlw
