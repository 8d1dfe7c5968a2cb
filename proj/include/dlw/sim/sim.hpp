#pragma once

#include "dlw/analytic/families.hpp"
#include "dlw/conslaw/law.hpp"
#include "dlw/jet/evolution_system.hpp"
#include "dlw/model/catalog.hpp"
#include "dlw/waves/waves.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dlw::sim {

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NonFiniteState : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BlowupError : public std::runtime_error {
public:
    BlowupError(double time, std::size_t step, double magnitude)
      : std::runtime_error("field magnitude " + std::to_string(magnitude) + " exceeds 1e6 at t = " +
                           std::to_string(time))
      , time(time)
      , step(step)
      , magnitude(magnitude)
    {}
    double time;
    std::size_t step;
    double magnitude;
};

class NoExactReference : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr double blowup_threshold = 1e6;

struct Grid1D {
    double x_min = -20, x_max = 20;
    std::size_t n = 512;

    double dx() const { return (x_max - x_min) / static_cast<double>(n); }
    double x(std::ptrdiff_t i) const { return x_min + static_cast<double>(i) * dx(); }
    void validate() const
    {
        if (n < 16) throw ConfigError("grid needs at least 16 cells");
        if (!(x_max > x_min)) throw ConfigError("grid needs x_max > x_min");
    }
};

struct FieldState {
    std::vector<double> u, v;
    double time = 0;
};

enum class BoundaryKind { periodic, dirichlet };

/// Periodic wrap, or ghost cells filled from a bound closed-form solution.
struct Boundary {
    BoundaryKind kind = BoundaryKind::periodic;
    SolitonFamily const* family = nullptr;
    ParamBinding binding;
};

inline constexpr std::ptrdiff_t ghosts = 2;

/// Field with two ghost cells on each side; index i maps to node i.
class Extended {
public:
    Extended(std::vector<double> const& f, Grid1D const& g, Boundary const& b, AnalyticExpr const* exact, double t)
      : data_(f.size() + 2 * ghosts)
    {
        auto n = static_cast<std::ptrdiff_t>(f.size());
        std::copy(f.begin(), f.end(), data_.begin() + ghosts);
        for (std::ptrdiff_t k = 1; k <= ghosts; ++k) {
            if (b.kind == BoundaryKind::periodic) {
                at(-k) = f[static_cast<std::size_t>(n - k)];
                at(n - 1 + k) = f[static_cast<std::size_t>(k - 1)];
            } else {
                at(-k) = eval(*exact, b.binding, g.x(-k), t);
                at(n - 1 + k) = eval(*exact, b.binding, g.x(n - 1 + k), t);
            }
        }
    }

    double operator[](std::ptrdiff_t i) const { return data_[static_cast<std::size_t>(i + ghosts)]; }

    /// Central difference of order k in {0,1,2,3} at node i.
    double deriv(std::ptrdiff_t i, int k, double dx) const
    {
        auto const& f = *this;
        switch (k) {
        case 0: return f[i];
        case 1: return (f[i + 1] - f[i - 1]) / (2 * dx);
        case 2: return (f[i + 1] - 2 * f[i] + f[i - 1]) / (dx * dx);
        case 3: return (f[i + 2] - 2 * f[i + 1] + 2 * f[i - 1] - f[i - 2]) / (2 * dx * dx * dx);
        default: throw std::invalid_argument("stencils cover derivatives up to order 3");
        }
    }

private:
    double& at(std::ptrdiff_t i) { return data_[static_cast<std::size_t>(i + ghosts)]; }
    std::vector<double> data_;
};

namespace detail {

inline void check_finite(FieldState const& s)
{
    for (std::size_t i = 0; i < s.u.size(); ++i) {
        if (!std::isfinite(s.u[i]) || !std::isfinite(s.v[i])) {
            std::ostringstream os;
            os << "non-finite field at node " << i << " (u = " << s.u[i] << ", v = " << s.v[i] << ", t = " << s.time
               << ")";
            throw NonFiniteState(os.str());
        }
    }
}

inline std::pair<Extended, Extended> extend(FieldState const& s, Grid1D const& g, Boundary const& b)
{
    if (b.kind == BoundaryKind::dirichlet && !b.family) throw ConfigError("dirichlet boundary needs a family");
    AnalyticExpr const* eu = b.family ? &b.family->u : nullptr;
    AnalyticExpr const* ev = b.family ? &b.family->v : nullptr;
    return {Extended(s.u, g, b, eu, s.time), Extended(s.v, g, b, ev, s.time)};
}

} // namespace detail

/// u_t = -(u u_x + v_x),  v_t = -(u_x v + u v_x + u_xxx/3).
inline std::pair<std::vector<double>, std::vector<double>> rhs(FieldState const& s, Grid1D const& g,
                                                               Boundary const& b)
{
    detail::check_finite(s);
    auto [U, V] = detail::extend(s, g, b);
    double dx = g.dx();
    std::size_t n = s.u.size();
    std::vector<double> du(n), dv(n);
    for (std::size_t k = 0; k < n; ++k) {
        auto i = static_cast<std::ptrdiff_t>(k);
        double ux = U.deriv(i, 1, dx), vx = V.deriv(i, 1, dx), uxxx = U.deriv(i, 3, dx);
        du[k] = -(U[i] * ux + vx);
        dv[k] = -(ux * V[i] + U[i] * vx + uxxx / 3);
    }
    return {du, dv};
}

// ---------------------------------------------------------------------------
// Monitors
// ---------------------------------------------------------------------------

/// Conserved density (and flux, for open boundaries) in discrete form.
struct Monitor {
    std::string label;
    JetPoly density, flux; ///< reduced on shell, x-derivatives only

    static Monitor from_law(ConservationLaw const& cl)
    {
        auto const& sys = model::dispersive_long_wave();
        Monitor m{cl.label, reduce_on_shell(cl.density, sys), reduce_on_shell(cl.flux, sys)};
        for (auto const& p : {m.density, m.flux}) {
            if (max_order(p) > 3) throw ConfigError("monitor " + cl.label + " needs derivatives beyond the stencils");
        }
        return m;
    }

    double pointwise(JetPoly const& p, Extended const& U, Extended const& V, std::ptrdiff_t i, Grid1D const& g,
                     double t) const
    {
        double dx = g.dx();
        return eval_jet(
            p,
            [&](JetVar const& var) {
                if (var.dep == sym::u) return U.deriv(i, var.dx, dx);
                if (var.dep == sym::v) return V.deriv(i, var.dx, dx);
                throw std::logic_error("monitor depends on a foreign symbol");
            },
            g.x(i), t);
    }

    /// Trapezoid rule: periodic sum, or open interval [x_0, x_{n-1}].
    double integral(FieldState const& s, Grid1D const& g, Boundary const& b) const
    {
        auto [U, V] = detail::extend(s, g, b);
        auto n = static_cast<std::ptrdiff_t>(s.u.size());
        double sum = 0;
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            double w = (b.kind == BoundaryKind::dirichlet && (i == 0 || i == n - 1)) ? 0.5 : 1.0;
            sum += w * pointwise(density, U, V, i, g, s.time);
        }
        return sum * g.dx();
    }

    /// Flux out of the open interval, F(x_{n-1}) - F(x_0).
    double outflow(FieldState const& s, Grid1D const& g, Boundary const& b) const
    {
        if (b.kind == BoundaryKind::periodic) return 0;
        auto [U, V] = detail::extend(s, g, b);
        auto n = static_cast<std::ptrdiff_t>(s.u.size());
        return pointwise(flux, U, V, n - 1, g, s.time) - pointwise(flux, U, V, 0, g, s.time);
    }
};

inline ConservationLaw monitor_law(std::string const& label)
{
    if (label == "eq30") return model::law_eq30();
    if (label == "eq32") return model::law_eq32();
    if (label == "eq33") return model::law_eq33();
    if (label == "eq31-swapped" || label == "hamiltonian") return model::law_eq31_swapped();
    throw ConfigError("unknown monitor " + label);
}

struct MonitorSample {
    double time, value, relative_drift;
};

struct MonitorSeries {
    std::string label;
    std::vector<MonitorSample> samples;

    double max_drift() const
    {
        double d = 0;
        for (auto const& s : samples) d = std::max(d, std::abs(s.relative_drift));
        return d;
    }
};

// ---------------------------------------------------------------------------
// Configuration
// ---------------------------------------------------------------------------

enum class Initial { family, zero, sine };

struct SimConfig {
    Grid1D grid;
    double dt = 0;    ///< 0 selects cfl * dx^3
    double cfl = 0.2;
    double t_end = 1;
    BoundaryKind boundary = BoundaryKind::dirichlet;
    Initial initial = Initial::family;
    std::string family = "eq93";
    ParamBinding binding{{"mu", 1.0}};
    double sine_k = 1;
    double sine_amplitude = 1;
    std::vector<std::string> monitors{"eq32", "eq33"};
    std::size_t output_stride = 100;

    double step() const { return dt > 0 ? dt : cfl * std::pow(grid.dx(), 3); }

    void validate() const
    {
        grid.validate();
        if (!(t_end > 0)) throw ConfigError("t_end must be positive");
        if (dt < 0 || !(cfl > 0)) throw ConfigError("dt and cfl must be positive");
        if (dt > cfl * std::pow(grid.dx(), 3) * (1 + 1e-12)) throw ConfigError("dt exceeds cfl * dx^3");
        if (output_stride == 0) throw ConfigError("output_stride must be positive");
        if (boundary == BoundaryKind::dirichlet || initial == Initial::family) find_family(family);
        for (auto const& m : monitors) monitor_law(m);
    }
};

namespace detail {

inline std::string trim(std::string s)
{
    auto ws = [](unsigned char c) { return std::isspace(c) != 0; };
    s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
    s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
    return s;
}

inline double to_double(std::string const& key, std::string const& value)
{
    try {
        std::size_t pos = 0;
        double d = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("");
        return d;
    } catch (std::exception const&) {
        throw ConfigError("bad number for " + key + ": " + value);
    }
}

} // namespace detail

/// Flat key = value text; '#' starts a comment; param.NAME binds a parameter.
inline SimConfig parse_config(std::istream& in)
{
    SimConfig c;
    std::string line;
    bool params_reset = false;
    while (std::getline(in, line)) {
        line = detail::trim(line.substr(0, line.find('#')));
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("expected key = value: " + line);
        std::string key = detail::trim(line.substr(0, eq)), value = detail::trim(line.substr(eq + 1));
        auto num = [&] { return detail::to_double(key, value); };
        if (key == "x_min") c.grid.x_min = num();
        else if (key == "x_max") c.grid.x_max = num();
        else if (key == "n") c.grid.n = static_cast<std::size_t>(num());
        else if (key == "dt") c.dt = num();
        else if (key == "cfl") c.cfl = num();
        else if (key == "t_end") c.t_end = num();
        else if (key == "output_stride") c.output_stride = static_cast<std::size_t>(num());
        else if (key == "sine_k") c.sine_k = num();
        else if (key == "sine_amplitude") c.sine_amplitude = num();
        else if (key == "family") c.family = value;
        else if (key == "boundary") {
            if (value == "periodic") c.boundary = BoundaryKind::periodic;
            else if (value == "dirichlet" || value == "dirichlet-from-exact") c.boundary = BoundaryKind::dirichlet;
            else throw ConfigError("unknown boundary " + value);
        } else if (key == "initial") {
            if (value == "family") c.initial = Initial::family;
            else if (value == "zero") c.initial = Initial::zero;
            else if (value == "sine") c.initial = Initial::sine;
            else throw ConfigError("unknown initial data " + value);
        } else if (key == "monitors") {
            c.monitors.clear();
            std::stringstream ss(value);
            for (std::string m; std::getline(ss, m, ',');) {
                m = detail::trim(m);
                if (!m.empty()) c.monitors.push_back(m);
            }
        } else if (key.rfind("param.", 0) == 0) {
            if (!params_reset) c.binding.clear();
            params_reset = true;
            c.binding[key.substr(6)] = num();
        } else {
            throw ConfigError("unknown key " + key);
        }
    }
    c.validate();
    return c;
}

inline SimConfig load_config(std::string const& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path);
    return parse_config(in);
}

// ---------------------------------------------------------------------------
// Integration
// ---------------------------------------------------------------------------

inline Boundary make_boundary(SimConfig const& c)
{
    Boundary b;
    b.kind = c.boundary;
    if (c.boundary == BoundaryKind::dirichlet || c.initial == Initial::family) {
        b.family = &find_family(c.family);
        b.binding = b.family->defaults;
        for (auto const& [k, v] : c.binding) b.binding[k] = v;
    }
    return b;
}

inline FieldState initial_state(SimConfig const& c, Boundary const& b)
{
    FieldState s;
    s.u.assign(c.grid.n, 0.0);
    s.v.assign(c.grid.n, 0.0);
    for (std::size_t i = 0; i < c.grid.n; ++i) {
        double x = c.grid.x(static_cast<std::ptrdiff_t>(i));
        if (c.initial == Initial::family) {
            s.u[i] = eval(b.family->u, b.binding, x, 0);
            s.v[i] = eval(b.family->v, b.binding, x, 0);
        } else if (c.initial == Initial::sine) {
            s.u[i] = c.sine_amplitude * std::sin(c.sine_k * x);
        }
    }
    return s;
}

struct SimResult {
    FieldState final_state;
    std::vector<MonitorSeries> monitors;
    std::size_t steps = 0;
    double dt = 0;
    std::optional<double> l2_error; ///< against the bound family, when it is the initial data
};

/// Discrete L2 distance to the exact family at the state's time.
inline double l2_error(FieldState const& s, Grid1D const& g, SolitonFamily const& fam, ParamBinding const& b)
{
    double sum = 0;
    for (std::size_t i = 0; i < s.u.size(); ++i) {
        double x = g.x(static_cast<std::ptrdiff_t>(i));
        double eu = s.u[i] - eval(fam.u, b, x, s.time), ev = s.v[i] - eval(fam.v, b, x, s.time);
        sum += eu * eu + ev * ev;
    }
    return std::sqrt(sum * g.dx());
}

/// Classical RK4 method of lines; throws BlowupError past 1e6.
inline SimResult integrate(SimConfig const& cfg)
{
    cfg.validate();
    Boundary b = make_boundary(cfg);
    FieldState s = initial_state(cfg, b);
    Grid1D const& g = cfg.grid;
    double dt = cfg.step();
    auto n_steps = static_cast<std::size_t>(std::ceil(cfg.t_end / dt - 1e-9));
    dt = cfg.t_end / static_cast<double>(n_steps);

    std::vector<Monitor> mons;
    SimResult res;
    for (auto const& label : cfg.monitors) {
        mons.push_back(Monitor::from_law(monitor_law(label)));
        res.monitors.push_back({label, {}});
    }
    std::vector<double> base(mons.size()), outflow(mons.size(), 0.0);
    auto record = [&] {
        for (std::size_t k = 0; k < mons.size(); ++k) {
            double value = mons[k].integral(s, g, b) + outflow[k];
            if (res.monitors[k].samples.empty()) base[k] = value;
            // absolute drift when the initial integral vanishes
            double scale = std::abs(base[k]) > 1e-12 ? std::abs(base[k]) : 1.0;
            double drift = (value - base[k]) / scale;
            res.monitors[k].samples.push_back({s.time, value, drift});
        }
    };
    record();

    std::size_t n = g.n;
    auto stage = [&](FieldState const& at, double w) {
        for (std::size_t k = 0; k < mons.size(); ++k) outflow[k] += w * dt * mons[k].outflow(at, g, b);
        return rhs(at, g, b);
    };
    auto shifted = [&](FieldState const& from, std::vector<double> const& du, std::vector<double> const& dv,
                       double h) {
        FieldState out = from;
        for (std::size_t i = 0; i < n; ++i) {
            out.u[i] += h * du[i];
            out.v[i] += h * dv[i];
        }
        out.time = from.time + h;
        return out;
    };

    for (std::size_t step = 1; step <= n_steps; ++step) {
        auto [k1u, k1v] = stage(s, 1.0 / 6);
        auto s2 = shifted(s, k1u, k1v, dt / 2);
        auto [k2u, k2v] = stage(s2, 2.0 / 6);
        auto s3 = shifted(s, k2u, k2v, dt / 2);
        auto [k3u, k3v] = stage(s3, 2.0 / 6);
        auto s4 = shifted(s, k3u, k3v, dt);
        auto [k4u, k4v] = stage(s4, 1.0 / 6);
        double peak = 0;
        for (std::size_t i = 0; i < n; ++i) {
            s.u[i] += dt / 6 * (k1u[i] + 2 * k2u[i] + 2 * k3u[i] + k4u[i]);
            s.v[i] += dt / 6 * (k1v[i] + 2 * k2v[i] + 2 * k3v[i] + k4v[i]);
            peak = std::max({peak, std::abs(s.u[i]), std::abs(s.v[i])});
        }
        s.time = static_cast<double>(step) * dt;
        if (!(peak <= blowup_threshold)) throw BlowupError(s.time, step, peak);
        if (step % cfg.output_stride == 0 || step == n_steps) record();
    }
    res.final_state = s;
    res.steps = n_steps;
    res.dt = dt;
    if (cfg.initial == Initial::family) res.l2_error = l2_error(s, g, *b.family, b.binding);
    return res;
}

struct ConvergenceRow {
    std::size_t n = 0;
    std::optional<double> l2_error;
    std::optional<double> order;       ///< against the previous row
    std::optional<double> blowup_time; ///< set when the run diverged
};

/// Error table against the family's closed form; the family must verify.
inline std::vector<ConvergenceRow> convergence_study(SimConfig base, std::vector<std::size_t> const& n_list)
{
    base.initial = Initial::family;
    base.monitors.clear();
    auto check = verify_family(base.family, base.binding);
    if (!check.passed) throw NoExactReference("family " + base.family + " is not an exact solution for this binding");
    std::vector<ConvergenceRow> rows;
    for (std::size_t n : n_list) {
        base.grid.n = n;
        base.dt = 0;
        base.output_stride = std::numeric_limits<std::size_t>::max();
        ConvergenceRow row;
        row.n = n;
        try {
            row.l2_error = integrate(base).l2_error;
        } catch (BlowupError const& e) {
            row.blowup_time = e.time;
        } catch (NonFiniteState const&) {
            row.blowup_time = base.t_end;
        }
        if (!rows.empty() && rows.back().l2_error && row.l2_error) {
            row.order = std::log(*rows.back().l2_error / *row.l2_error) /
                        std::log(static_cast<double>(n) / static_cast<double>(rows.back().n));
        }
        rows.push_back(row);
    }
    return rows;
}

/// Max nodal difference between runs with dt and dt/2.
inline double dt_halving_difference(SimConfig cfg)
{
    cfg.monitors.clear();
    cfg.output_stride = std::numeric_limits<std::size_t>::max();
    double dt = cfg.step();
    cfg.dt = dt;
    auto a = integrate(cfg).final_state;
    cfg.dt = dt / 2;
    auto b = integrate(cfg).final_state;
    double d = 0;
    for (std::size_t i = 0; i < a.u.size(); ++i) d = std::max({d, std::abs(a.u[i] - b.u[i]), std::abs(a.v[i] - b.v[i])});
    return d;
}

/// Largest exponential growth rate of the linearized semi-discrete scheme
/// about a constant state with elevation v0: modes with
/// k1 (k3/3 - v0 k1) > 0 grow, k1 and k3 being the stencil symbols.
inline double discrete_growth_rate(double dx, double v0)
{
    double best = 0;
    for (int j = 1; j < 2000; ++j) {
        double th = std::numbers::pi * j / 2000;
        double k1 = std::sin(th) / dx;
        double k3 = 2 * std::sin(th) * (1 - std::cos(th)) / (dx * dx * dx);
        best = std::max(best, std::sqrt(std::max(0.0, k1 * (k3 / 3 - v0 * k1))));
    }
    return best;
}

// ---------------------------------------------------------------------------
// Output
// ---------------------------------------------------------------------------

inline void write_monitor_csv(std::ostream& os, MonitorSeries const& m)
{
    os << "time,value,relative_drift\n";
    os.precision(15);
    for (auto const& s : m.samples) os << s.time << "," << s.value << "," << s.relative_drift << "\n";
}

inline void write_snapshot_csv(std::ostream& os, FieldState const& s, Grid1D const& g)
{
    os << "x,u,v\n";
    os.precision(15);
    for (std::size_t i = 0; i < s.u.size(); ++i) os << g.x(static_cast<std::ptrdiff_t>(i)) << "," << s.u[i] << "," << s.v[i] << "\n";
}

} // namespace dlw::sim
