#pragma once

#include "dlw/conslaw/law.hpp"
#include "dlw/jet/linear_op.hpp"
#include "dlw/model/systems.hpp"
#include "dlw/symmetry/point_symmetry.hpp"

#include <string>
#include <vector>

/// Printed objects of the dispersive long-wave study, as exact polynomials.
namespace dlw::model {

// Point symmetries X1..X4.
inline std::vector<PointSymmetry> const& generators()
{
    static std::vector<PointSymmetry> const X{
        {JetPoly(1), JetPoly(), {JetPoly(), JetPoly()}},
        {JetPoly(), JetPoly(1), {JetPoly(), JetPoly()}},
        {JetPoly(), t(), {JetPoly(1), JetPoly()}},
        {t(), rat(1, 2) * x(), {rat(-1, 2) * u(), -v()}},
    };
    return X;
}

/// Nonzero brackets [X_i, X_j] (i < j, 1-based) as printed, in X coordinates.
struct PrintedBracket {
    int i, j;
    std::vector<Rational> coords;
};

inline std::vector<PrintedBracket> printed_commutators()
{
    return {{1, 2, {0, 0, 0, 0}},          {1, 3, {0, 1, 0, 0}},          {1, 4, {1, 0, 0, 0}},
            {2, 3, {0, 0, 0, 0}},          {2, 4, {0, rat(1, 2), 0, 0}}, {3, 4, {0, 0, rat(-1, 2), 0}}};
}

/// The same table for the characteristics P1..P4 as printed.
inline std::vector<PrintedBracket> printed_char_commutators()
{
    return {{1, 2, {0, 0, 0, 0}},          {1, 3, {0, 0, 0, 1}},          {1, 4, {1, 0, 0, 0}},
            {2, 3, {0, 0, 0, 0}},          {2, 4, {0, rat(1, 2), 0, 0}}, {3, 4, {0, 0, rat(-1, 2), 0}}};
}

// Characteristics P1..P4 as printed.
inline std::vector<JetTuple> const& printed_characteristics()
{
    static std::vector<JetTuple> const P{
        {-u(0, 1), -v(0, 1)},
        {-u(1), -v(1)},
        {1 - t() * u(1), -t() * v(1)},
        {rat(-1, 2) * u() - rat(1, 2) * x() * u(1) - t() * u(0, 1), -v() - rat(1, 2) * x() * v(1) - t() * v(0, 1)},
    };
    return P;
}

// Adjoint symmetries Q1..Q6 as printed.
inline std::vector<JetTuple> const& printed_adjoint_symmetries()
{
    static std::vector<JetTuple> const Q{
        {v(2) + rat(9, 4) * v() * v() + rat(9, 4) * u() * u() * v() + rat(6, 4) * u() * u(2) + rat(3, 4) * u(1) * u(1),
         u(2) + rat(3, 4) * pow(u(), 3) + rat(9, 2) * u() * v()},
        {t() * v(), t() * u() - x()},
        {t() * v(), rat(1, 2) * u() * u() + v()},
        {v(), u()},
        {JetPoly(1), JetPoly()},
        {JetPoly(), JetPoly(1)},
    };
    return Q;
}

/// Q3 with first component uv + u_xx/3, the gradient of the Hamiltonian density.
inline JetTuple corrected_q3()
{
    return {u() * v() + rat(1, 3) * u(2), rat(1, 2) * u() * u() + v()};
}

/// Q1..Q6 with Q3 replaced by its corrected form.
inline std::vector<JetTuple> adjoint_basis()
{
    auto Q = printed_adjoint_symmetries();
    Q[2] = corrected_q3();
    return Q;
}

// Conservation laws of the physical system.
inline ConservationLaw law_eq29()
{
    JetPoly dens = u(1) * v(1) + v() * u(2) + u() * v(2) + rat(3, 4) * pow(u(), 3) * v() + rat(9, 4) * v() * v() * u() +
                   rat(3, 4) * u() * u(1) * u(1) + rat(3, 4) * u() * u() * u(2);
    JetPoly flux = rat(27, 8) * u() * u() * v() * v() + rat(1, 2) * v(1) * v(1) + rat(3, 4) * pow(v(), 3) +
                   rat(1, 6) * u(2) * u(2) - u() * v(1, 1) + rat(3, 4) * pow(u(), 4) * v() +
                   rat(3, 8) * u() * u() * u(1) * u(1) + rat(1, 4) * pow(u(), 3) * u(2) + rat(3, 2) * u() * v() * u(2) +
                   u() * u(1) * v(1) - rat(1, 4) * u(1) * u(1) * v() - rat(3, 4) * u() * u() * u(1, 1);
    return {dens, flux, Family::physical, "eq29"};
}

/// eq29 with the missing flux term -v u_xt restored.
inline ConservationLaw law_eq29_corrected()
{
    auto c = law_eq29();
    c.flux -= v() * u(1, 1);
    c.label = "eq29-corrected";
    return c;
}

inline ConservationLaw law_eq30()
{
    return {t() * u() * v() - x() * v(),
            rat(1, 2) * t() * v() * v() - x() * u() * v() + t() * u() * u() * v() + rat(1, 3) * t() * u() * u(2) -
                rat(1, 6) * t() * u(1) * u(1) - rat(1, 3) * x() * u(2) + rat(1, 3) * u(1),
            Family::physical, "eq30"};
}

inline JetPoly hamiltonian_density()
{
    return rat(1, 2) * v() * v() + rat(1, 2) * u() * u() * v() - rat(1, 6) * u(1) * u(1);
}

inline JetPoly eq31_printed_density()
{
    return v() * v() * u() + rat(1, 2) * pow(u(), 3) * v() + rat(1, 6) * u() * u() * u(2) + rat(1, 3) * v() * u(2) +
           rat(1, 3) * u(1) * u(0, 1);
}

inline ConservationLaw law_eq31()
{
    return {eq31_printed_density(), hamiltonian_density(), Family::physical, "eq31"};
}

/// Eq31 with density and flux exchanged: the Hamiltonian density is conserved.
inline ConservationLaw law_eq31_swapped()
{
    return {hamiltonian_density(), eq31_printed_density(), Family::physical, "eq31-swapped"};
}

inline ConservationLaw law_eq32()
{
    return {u() * v(),
            rat(1, 2) * v() * v() + v() * u() * u() + rat(1, 3) * u() * u(2) - rat(1, 6) * u(1) * u(1),
            Family::physical, "eq32"};
}

inline ConservationLaw law_eq33()
{
    return {u() + v(), rat(1, 2) * u() * u() + v() + u() * v() + rat(1, 3) * u(2), Family::physical, "eq33"};
}

// Potential formulation.
inline JetPoly lagrangian()
{
    return -q(1) * r(0, 1) - rat(1, 2) * r(1) * r(1) - rat(1, 2) * q(1) * q(1) * r(1) + rat(1, 6) * q(2) * q(2);
}

inline std::vector<JetTuple> const& potential_symmetries()
{
    static std::vector<JetTuple> const V{
        {q(1), r(1)},
        {q(0, 1), r(0, 1)},
        {x() - t() * q(1), -t() * r(1)},
        {t() * q(0, 1) + rat(1, 2) * x() * q(1), rat(1, 2) * r() + t() * r(0, 1) + rat(1, 2) * x() * r(1)},
    };
    return V;
}

/// (A^x, A^t) with pr V(L) = D_x A^x + D_t A^t for V1..V3.
inline std::vector<JetTuple> noether_gauges()
{
    JetPoly L = lagrangian();
    return {
        {L, JetPoly()},
        {JetPoly(), L},
        {t() * q(1) * r(0, 1) + rat(1, 2) * t() * r(1) * r(1) + rat(1, 2) * t() * q(1) * q(1) * r(1) -
             rat(1, 6) * t() * q(2) * q(2),
         -r()},
    };
}

inline std::vector<ConservationLaw> printed_noether_flows()
{
    return {
        {-q(1) * r(1),
         rat(-1, 2) * r(1) * r(1) - q(1) * q(1) * r(1) - rat(1, 3) * q(1) * q(3) + rat(1, 6) * q(2) * q(2),
         Family::potential, "eq54"},
        {rat(1, 2) * r(1) * r(1) + rat(1, 2) * q(1) * q(1) * r(1) - rat(1, 6) * q(2) * q(2),
         -q(0, 1) * r(0, 1) - r(0, 1) * r(1) - rat(1, 2) * q(1) * q(1) * r(0, 1) - q(0, 1) * q(1) * r(1) -
             rat(1, 3) * q(0, 1) * q(3) + rat(1, 3) * q(2) * q(1, 1),
         Family::potential, "eq55"},
        {t() * q(1) * r(1) + r(),
         -x() * r(0, 1) + rat(1, 2) * t() * r(1) * r(1) - q(1) * r(1) * x() + t() * q(1) * q(1) * r(1) -
             rat(1, 3) * x() * q(3) + rat(1, 3) * t() * q(1) * q(3) + rat(1, 3) * q(2) - rat(1, 6) * t() * q(2) * q(2),
         Family::potential, "eq56"},
    };
}

// Formal-Lagrangian flows printed with multipliers w1, w2.
inline std::vector<ConservationLaw> printed_ibragimov_flows()
{
    return {
        {-u(1) * w2() - v(1) * w1(),
         w1() * v(0, 1) + w2() * u(0, 1) - rat(1, 3) * u(1) * w1(2) + rat(1, 3) * w1(1) * u(2), Family::physical,
         "eq67"},
        {w1() * u(1) * v() + w1() * v(1) * u() + rat(1, 3) * w1() * u(3) + u() * w2() * u(1) + w2() * v(1),
         -u(0, 1) * v() * w1() - u() * u(0, 1) * w2() - rat(1, 3) * u(0, 1) * w1(2) - u() * v(0, 1) * w1() -
             v(0, 1) * w2() + rat(1, 3) * u(1, 1) * w1(1) - rat(1, 3) * u(2, 1) * w1(),
         Family::physical, "eq68"},
        {w2() - w2() * t() * u(1) - t() * v(1) * w1(),
         t() * w1() * v(0, 1) + t() * w2() * u(0, 1) + v() * w1() + u() * w2() + rat(1, 3) * w1(2) -
             rat(1, 3) * t() * u(1) * w1(2) + rat(1, 3) * t() * u(2) * w1(1),
         Family::physical, "eq69"},
        {t() * w1() * u(1) * v() + t() * w1() * v(1) * u() + rat(1, 3) * t() * w1() * u(3) + t() * w2() * u() * u(1) +
             t() * w2() * v(1) - rat(1, 2) * u() * w2() - rat(1, 2) * w2() * x() * u(1) - v() * w1() -
             rat(1, 2) * w1() * x() * v(1),
         -t() * v() * u(0, 1) * w1() - t() * u(0, 1) * u() * w2() - t() * v(0, 1) * u() * w1() - t() * v(0, 1) * w2() +
             rat(1, 6) * w1(1) * x() * u(2) + rat(1, 3) * w1(1) * t() * u(1, 1) - rat(1, 3) * w1() * t() * u(2, 1) +
             rat(1, 2) * x() * w1() * v(0, 1) + rat(1, 2) * x() * w2() * u(0, 1) - rat(3, 2) * u() * v() * w1() -
             rat(1, 6) * x() * u(1) * w1(2) - rat(1, 3) * t() * u(0, 1) * w1(2) - rat(1, 2) * w2() * u() * u() -
             rat(1, 6) * u() * w1(2) - v() * w2() + rat(1, 3) * w1(1) * u(1) - rat(1, 2) * w1() * u(2),
         Family::physical, "eq70"},
    };
}

// Hamiltonian operator [[0, D_x], [D_x, 0]].
inline LinearDiffOp hamiltonian_operator()
{
    LinearDiffOp D(2, 2);
    D.add(0, 1, 1, 1, 0).add(1, 0, 1, 1, 0);
    return D;
}

// Adjoint symmetries obtained from P1..P4 through D^{-1}, in potentials.
inline std::vector<JetTuple> printed_presymplectic_images()
{
    return {
        {-r(0, 1), -q(0, 1)},
        {v(), u()},
        {-t() * v(), x() - t() * u()},
        {-r() - t() * r(0, 1) - rat(1, 2) * x() * v() + r(), rat(-1, 2) * q() - rat(1, 2) * x() * u() + q() - t() * q(0, 1)},
    };
}

inline JetTuple corrected_presymplectic_q4()
{
    return {rat(-1, 2) * r() - rat(1, 2) * x() * v() - t() * r(0, 1), rat(-1, 2) * x() * u() - t() * q(0, 1)};
}

} // namespace dlw::model
