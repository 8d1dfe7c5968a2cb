#pragma once

#include "dlw/analytic/expr.hpp"
#include "dlw/jet/evolution_system.hpp"
#include "dlw/jet/poly.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dlw {

struct SamplePoint {
    double x = 0;
    double t = 0;
};

/// Deterministic pseudo-random points in [x0,x1] x [t0,t1].
inline std::vector<SamplePoint> sample_points(std::size_t n, double x0, double x1, double t0, double t1,
                                              unsigned seed = 1)
{
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dx(x0, x1), dt(t0, t1);
    std::vector<SamplePoint> out(n);
    for (auto& p : out) {
        p.x = dx(rng);
        p.t = dt(rng);
    }
    return out;
}

/// Value of a jet polynomial given values of its jet variables.
/// `magnitude`, when given, receives the sum of absolute term values.
template <typename VarValue>
double eval_jet(JetPoly const& p, VarValue&& value_of, double x, double t, double* magnitude = nullptr)
{
    double out = 0, mag = 0;
    for (auto const& [m, c] : p.terms()) {
        double term = c.get_d() * std::pow(x, m.xpow()) * std::pow(t, m.tpow());
        for (auto const& [var, e] : m.factors()) term *= std::pow(value_of(var), e);
        out += term;
        mag += std::abs(term);
    }
    if (magnitude) *magnitude = mag;
    return out;
}

struct ResidualReport {
    double max_residual = 0;
    double max_relative = 0; ///< |residual| / max(1, sum of |terms|)
    std::vector<double> per_equation;
    std::size_t samples_used = 0;
    std::size_t samples_skipped = 0;
};

/// Substitutes the candidate fields into the system and takes the largest
/// absolute residual over samples; singular samples are skipped and counted.
inline ResidualReport residual_max(EvolutionSystem const& sys, std::vector<AnalyticExpr> const& candidate,
                                   ParamBinding const& binding, std::vector<SamplePoint> const& samples)
{
    if (candidate.size() != sys.deps.size()) throw std::invalid_argument("candidate size does not match the system");
    auto const eqs = sys.equations();
    std::map<JetVar, AnalyticExpr> derivs;
    for (auto const& G : eqs) {
        for (auto const& var : jet_vars(G)) {
            auto it = std::find(sys.deps.begin(), sys.deps.end(), var.dep);
            if (it == sys.deps.end()) throw std::invalid_argument("equation uses a variable outside the system");
            derivs.try_emplace(var, diff(candidate[it - sys.deps.begin()], var.dx, var.dt));
        }
    }
    ResidualReport rep;
    rep.per_equation.assign(eqs.size(), 0.0);
    for (auto const& s : samples) {
        std::vector<double> r(eqs.size()), mag(eqs.size());
        try {
            std::map<JetVar, double> values;
            for (auto const& [var, e] : derivs) values[var] = eval(e, binding, s.x, s.t);
            for (std::size_t i = 0; i < eqs.size(); ++i) {
                r[i] = eval_jet(eqs[i], [&](JetVar const& v) { return values.at(v); }, s.x, s.t, &mag[i]);
            }
        } catch (DomainError const&) {
            ++rep.samples_skipped;
            continue;
        }
        ++rep.samples_used;
        for (std::size_t i = 0; i < eqs.size(); ++i) {
            double a = std::abs(r[i]);
            if (!std::isfinite(a)) a = std::numeric_limits<double>::infinity();
            rep.per_equation[i] = std::max(rep.per_equation[i], a);
            rep.max_residual = std::max(rep.max_residual, a);
            rep.max_relative = std::max(rep.max_relative, a / std::max(1.0, mag[i]));
        }
    }
    return rep;
}

template <typename Scalar>
struct OrbitPoint {
    Scalar x, t, u, v;
};

/// One-parameter groups of X1..X4:
///   G1: t + e    G2: x + e    G3: x + e t, u + e
///   G4: x e^(e/2), t e^e, u e^(-e/2), v e^(-e)
template <typename Scalar>
OrbitPoint<Scalar> group_orbit(int generator, double eps, OrbitPoint<Scalar> p)
{
    switch (generator) {
    case 1: p.t = p.t + eps; break;
    case 2: p.x = p.x + eps; break;
    case 3:
        p.x = p.x + eps * p.t;
        p.u = p.u + eps;
        break;
    case 4:
        p.x = p.x * std::exp(eps / 2);
        p.t = p.t * std::exp(eps);
        p.u = p.u * std::exp(-eps / 2);
        p.v = p.v * std::exp(-eps);
        break;
    default: throw std::invalid_argument("generator id must be 1..4");
    }
    return p;
}

/// Image of the solution (u, v) under G_generator(eps).
inline std::pair<AnalyticExpr, AnalyticExpr> transported_solution(int generator, double eps, AnalyticExpr const& u,
                                                                  AnalyticExpr const& v)
{
    auto base = group_orbit<AnalyticExpr>(generator, -eps, {AnalyticExpr::x(), AnalyticExpr::t(), 0.0, 0.0});
    OrbitPoint<AnalyticExpr> start{base.x, base.t, compose(u, base.x, base.t), compose(v, base.x, base.t)};
    auto image = group_orbit<AnalyticExpr>(generator, eps, start);
    return {image.u, image.v};
}

} // namespace dlw
