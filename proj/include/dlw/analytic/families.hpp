#pragma once

#include "dlw/analytic/expr.hpp"
#include "dlw/analytic/solutions.hpp"
#include "dlw/model/systems.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dlw {

class UnknownFamily : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A closed-form candidate solution (u, v) with its sampling window.
struct SolitonFamily {
    std::string id;
    AnalyticExpr u, v;
    std::vector<std::string> params;
    std::string constraints;
    ParamBinding defaults;
    double x_min = -5, x_max = 5, t_min = 0, t_max = 2;
};

/// One scan axis: a parameter and its trial values.
struct ScanAxis {
    std::string param;
    std::vector<double> values;
};

/// A relation imposed on a binding before it is tested.
struct ScanConstraint {
    std::string name;
    std::function<void(ParamBinding&)> apply;
};

struct FamilyScan {
    std::vector<ScanAxis> axes;
    std::vector<ScanConstraint> constraints; ///< empty means the bare grid
};

namespace detail {

inline AnalyticExpr P(char const* name) { return AnalyticExpr::param(name); }

/// (R2 + R1 e^(R1 xi + xi0)) / R1 with xi = k1 x + w1 t.
inline AnalyticExpr bernoulli_factor()
{
    AnalyticExpr xi = P("k1") * AnalyticExpr::x() + P("w1") * AnalyticExpr::t();
    return (P("R2") + P("R1") * exp(P("R1") * xi + P("xi0"))) / P("R1");
}

inline AnalyticExpr eta() { return P("k2") * AnalyticExpr::x() + P("w2") * AnalyticExpr::t(); }

inline ParamBinding kudryashov_defaults()
{
    return {{"A0", 0.5}, {"C1", 1.0}, {"R1", 1.0},  {"R2", 0.5},  {"xi0", 0.0}, {"k1", 1.0},
            {"w1", -1.0}, {"a0", 0.2}, {"c1", 0.3}, {"c2", -0.5}, {"b1", 0.4},  {"k2", 1.0},
            {"w2", 0.5},  {"eta0", 0.1}, {"S2", 0.7}, {"mu", 1.0},  {"a01", 0.3}};
}

inline std::vector<SolitonFamily> build_families()
{
    using E = AnalyticExpr;
    E x = E::x(), t = E::t();
    E s3 = std::sqrt(3.0);
    std::vector<SolitonFamily> f;

    f.push_back({"eq19", t + P("c1"), t * t / 2.0 - x + P("c2"), {"c1", "c2"}, "", {{"c1", 1.0}, {"c2", 0.5}}});
    f.push_back({"eq22", (x + 2.0) / t, P("c1") / t, {"c1"}, "t > 0", {{"c1", 2.0}}, -5, 5, 0.5, 2});

    {
        E xi = x - P("mu") * t;
        E ea = exp(P("C1") * P("mu") * s3), eb = exp(P("mu") * xi * s3);
        E V = -(2.0 * eb * pow(P("mu"), 2) * ea) / pow(ea - eb, 2);
        f.push_back({"eq82", 2.0 * ea * P("mu") / (eb * (-1.0 + ea / eb)), V, {"mu", "C1"}, "xi = x - mu t",
                     {{"mu", 1.0}, {"C1", 0.3}}});
        f.push_back({"eq83", 2.0 * eb * P("mu") / (ea * (-1.0 + eb / ea)), V, {"mu", "C1"}, "xi = x - mu t",
                     {{"mu", 1.0}, {"C1", 0.3}}});
    }

    {
        E phi = bernoulli_factor();
        E A0 = P("A0"), C1 = P("C1");
        std::vector<std::string> kp{"A0", "C1", "R1", "R2", "xi0", "k1", "w1", "k2", "w2", "a0", "c1", "c2",
                                    "b1", "eta0", "S2", "mu", "a01"};
        std::string where = "xi = k1 x + w1 t, eta = k2 x + w2 t";
        E lin = -(C1 * (A0 * P("k1") + P("w1")) / P("k1")) * phi;
        f.push_back({"eq86", A0 + C1 * phi, P("a0") + lin + P("c2") * pow(phi, 2), kp, where, kudryashov_defaults()});
        f.push_back({"eq87", A0,
                     P("a0") + P("b1") * (P("R2") * P("c1") * P("k1") / (P("b1") * P("k2")) * eta() + P("eta0")) +
                         P("c1") * phi + P("c2") * pow(phi, 2),
                     kp, where, kudryashov_defaults()});
        E sm = sqrt(P("mu"));
        E den = C1 * P("R2") * P("k1") / P("w2") - sm * tanh(sm / 2.0 * eta() + P("eta0"));
        f.push_back({"eq88", A0 + C1 * phi, P("a0") + P("b1") * (2.0 * P("S2") / den) + lin + P("c2") * pow(phi, 2),
                     kp, where, kudryashov_defaults()});
        f.push_back({"eq89", A0 + C1 * phi,
                     P("a0") + P("b1") * (P("R2") * C1 * P("w1") / (P("b1") * P("k2")) * eta() + P("eta0")) +
                         P("c1") * phi + P("c2") * pow(phi, 2),
                     kp, where, kudryashov_defaults()});
        f.push_back({"eq90", A0,
                     P("a0") - P("a01") / (P("R2") * P("c1") * P("k1") / (P("a01") * P("k2")) * eta() + P("eta0")) +
                         P("c1") * phi + P("c2") * pow(phi, 2),
                     kp, where, kudryashov_defaults()});
    }

    {
        E ph = P("mu") * t - x;
        f.push_back({"eq93", P("mu") - 2.0 * s3 / 3.0 * tanh(ph), 2.0 / 3.0 - 2.0 / 3.0 * pow(tanh(ph), 2), {"mu"}, "",
                     {{"mu", 1.0}}});
    }
    {
        E den = 1.0 + exp(x - (P("a0") + s3 / 3.0) * t);
        f.push_back({"eq96", P("a0") + 2.0 * s3 / (3.0 * den), 2.0 / (3.0 * den) - 2.0 / (3.0 * pow(den, 2)), {"a0"},
                     "mu = a0 + sqrt(3)/3", {{"a0", 0.0}}});
    }
    return f;
}

} // namespace detail

inline std::vector<SolitonFamily> const& solution_families()
{
    static std::vector<SolitonFamily> const all = detail::build_families();
    return all;
}

inline SolitonFamily const& find_family(std::string const& id)
{
    for (auto const& f : solution_families()) {
        if (f.id == id) return f;
    }
    throw UnknownFamily("unknown solution family " + id);
}

/// Parameter grids for families whose constraint set is not printed.
inline FamilyScan family_scan(std::string const& id)
{
    find_family(id);
    FamilyScan s;
    if (id == "eq82" || id == "eq83") {
        s.axes = {{"mu", {0.5, 1.0, 2.0}}, {"C1", {-1.0, 0.3, 2.0}}};
        return s;
    }
    if (id == "eq86" || id == "eq88" || id == "eq89") {
        s.axes = {{"C1", {0.0, 1.0}}, {"w1", {-1.0, 1.0}}, {"R1", {1.0, -1.0}}, {"b1", {0.0, 0.4}}};
        // first equation balances the phi^2 terms when c2 = -C1^2/2
        s.constraints = {{"c2 = -C1^2/2", [](ParamBinding& b) { b["c2"] = -b["C1"] * b["C1"] / 2; }},
                         {"c2 = +C1^2/2", [](ParamBinding& b) { b["c2"] = b["C1"] * b["C1"] / 2; }},
                         {"c1 = c2 = 0", [](ParamBinding& b) { b["c1"] = b["c2"] = 0; }}};
        return s;
    }
    if (id == "eq87" || id == "eq90") {
        s.axes = {{"k2", {1.0, -1.0}}, {"w2", {0.5, -0.5}}, {"c1", {0.0, 0.3}}};
        s.constraints = {{"c2 = 0", [](ParamBinding& b) { b["c2"] = 0; }},
                         {"k1 = k2 = 0", [](ParamBinding& b) { b["k1"] = b["k2"] = 0; }}};
        return s;
    }
    if (id == "eq93") {
        s.axes = {{"mu", {0.5, 1.0, 2.0}}};
        return s;
    }
    if (id == "eq96") {
        s.axes = {{"a0", {0.0, 1.0}}};
        return s;
    }
    if (id == "eq19") {
        s.axes = {{"c1", {0.0, 1.0}}, {"c2", {0.0, 0.5}}};
        return s;
    }
    if (id == "eq22") {
        s.axes = {{"c1", {-1.0, 2.0}}};
        return s;
    }
    return s;
}

/// Every binding generated by a scan, on top of the family defaults.
inline std::vector<std::pair<std::string, ParamBinding>> scan_bindings(SolitonFamily const& fam, FamilyScan const& scan)
{
    std::vector<ParamBinding> grid{fam.defaults};
    for (auto const& axis : scan.axes) {
        std::vector<ParamBinding> next;
        for (auto const& b : grid) {
            for (double v : axis.values) {
                auto c = b;
                c[axis.param] = v;
                next.push_back(std::move(c));
            }
        }
        grid = std::move(next);
    }
    std::vector<std::pair<std::string, ParamBinding>> out;
    for (auto const& b : grid) {
        if (scan.constraints.empty()) {
            out.emplace_back("", b);
            continue;
        }
        for (auto const& c : scan.constraints) {
            auto bc = b;
            c.apply(bc);
            out.emplace_back(c.name, std::move(bc));
        }
    }
    return out;
}

} // namespace dlw
