#pragma once

#include "dlw/rational.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace dlw {

template <typename Scalar>
using SubalgebraVector = std::array<Scalar, 4>;

/// Inner automorphisms of span{X1..X4} acting on the coordinates l of
/// l^1 X1 + l^2 X2 + l^3 X3 + l^4 X4, integrated from the generators E_i:
///   T1: l1 + a l4,  l2 + a l3
///   T2: l2 + a l4 / 2
///   T3: l2 - a l1,  l3 - a l4 / 2
///   T4: l1 / s^2,  l2 / s,  l3 s   (s = e^(a/2) > 0)
/// T4 takes the scale s instead of a so that rational inputs stay rational.
template <typename Scalar>
SubalgebraVector<Scalar> adjoint_transformation(int generator, Scalar const& a, SubalgebraVector<Scalar> l)
{
    switch (generator) {
    case 1:
        l[0] += a * l[3];
        l[1] += a * l[2];
        break;
    case 2:
        l[1] += a * l[3] / Scalar(2);
        break;
    case 3:
        l[1] -= a * l[0];
        l[2] -= a * l[3] / Scalar(2);
        break;
    case 4:
        if (!(a > Scalar(0))) throw std::invalid_argument("T4 scale must be positive");
        l[0] /= a * a;
        l[1] /= a;
        l[2] *= a;
        break;
    default:
        throw std::invalid_argument("unknown adjoint transformation T" + std::to_string(generator));
    }
    return l;
}

/// Applies T1..T4 in order with parameters (a1, a2, a3, s4).
template <typename Scalar>
SubalgebraVector<Scalar> adjoint_transformations(SubalgebraVector<Scalar> l, std::array<Scalar, 4> const& a)
{
    for (int g = 1; g <= 4; ++g) l = adjoint_transformation(g, a[g - 1], l);
    return l;
}

enum class SubalgebraClass { X1, X2, X3, X4, X1_plus_X3, X1_minus_X3 };

inline std::string to_string(SubalgebraClass c)
{
    switch (c) {
    case SubalgebraClass::X1: return "X1";
    case SubalgebraClass::X2: return "X2";
    case SubalgebraClass::X3: return "X3";
    case SubalgebraClass::X4: return "X4";
    case SubalgebraClass::X1_plus_X3: return "X1+X3";
    case SubalgebraClass::X1_minus_X3: return "X1-X3";
    }
    return "?";
}

inline std::vector<SubalgebraClass> const& optimal_classes()
{
    static std::vector<SubalgebraClass> const all{SubalgebraClass::X1,         SubalgebraClass::X2,
                                                  SubalgebraClass::X3,         SubalgebraClass::X4,
                                                  SubalgebraClass::X1_plus_X3, SubalgebraClass::X1_minus_X3};
    return all;
}

inline SubalgebraVector<Rational> representative(SubalgebraClass c)
{
    switch (c) {
    case SubalgebraClass::X1: return {1, 0, 0, 0};
    case SubalgebraClass::X2: return {0, 1, 0, 0};
    case SubalgebraClass::X3: return {0, 0, 1, 0};
    case SubalgebraClass::X4: return {0, 0, 0, 1};
    case SubalgebraClass::X1_plus_X3: return {1, 0, 1, 0};
    case SubalgebraClass::X1_minus_X3: return {1, 0, -1, 0};
    }
    return {0, 0, 0, 0};
}

/// One step of a reduction. T1..T3 parameters are exact; the T4 scale is a
/// real cube root in general and is kept as a double.
struct TransformStep {
    int generator = 0;
    Rational a;
    double scale = 1.0;
};

struct OptimalReduction {
    SubalgebraClass cls = SubalgebraClass::X1;
    std::vector<TransformStep> log;
    SubalgebraVector<Rational> reduced; ///< exact vector after T1..T3, before T4 and normalization
};

/// Case tree: l4 != 0 reaches X4; otherwise l1 != 0 gives X1 or X1 +- X3
/// (the sign of l3/l1 is invariant), and l1 = 0 gives X3 or X2.
inline OptimalReduction optimal_reduce(SubalgebraVector<Rational> l)
{
    if (l[0] == 0 && l[1] == 0 && l[2] == 0 && l[3] == 0) throw std::invalid_argument("zero subalgebra vector");
    OptimalReduction out;
    auto step = [&](int g, Rational const& a) {
        out.log.push_back({g, a, 1.0});
        l = adjoint_transformation<Rational>(g, a, l);
    };
    if (l[3] != 0) {
        if (l[2] != 0) step(3, 2 * l[2] / l[3]);
        if (l[0] != 0) step(1, -l[0] / l[3]);
        if (l[1] != 0) step(2, -2 * l[1] / l[3]);
        out.cls = SubalgebraClass::X4;
    } else if (l[0] != 0) {
        if (l[1] != 0) step(3, l[1] / l[0]);
        if (l[2] == 0) {
            out.cls = SubalgebraClass::X1;
        } else {
            Rational ratio = l[0] / l[2];
            double s = std::cbrt(std::abs(ratio.get_d()));
            out.log.push_back({4, Rational(0), s});
            out.cls = (l[2] / l[0] > 0) ? SubalgebraClass::X1_plus_X3 : SubalgebraClass::X1_minus_X3;
        }
    } else if (l[2] != 0) {
        if (l[1] != 0) step(1, -l[1] / l[2]);
        out.cls = SubalgebraClass::X3;
    } else {
        out.cls = SubalgebraClass::X2;
    }
    out.reduced = l;
    return out;
}

/// Replays a reduction log in floating point and normalizes by the leading nonzero entry.
inline SubalgebraVector<double> replay(SubalgebraVector<Rational> const& l, std::vector<TransformStep> const& log)
{
    SubalgebraVector<double> x{l[0].get_d(), l[1].get_d(), l[2].get_d(), l[3].get_d()};
    for (auto const& s : log) x = adjoint_transformation<double>(s.generator, s.generator == 4 ? s.scale : s.a.get_d(), x);
    double big = 0;
    for (double e : x) big = std::max(big, std::abs(e));
    for (double& e : x) {
        if (std::abs(e) <= 1e-12 * big) e = 0;
    }
    for (double lead : x) {
        if (lead != 0) {
            for (double& e : x) e /= lead;
            break;
        }
    }
    return x;
}

} // namespace dlw
