#pragma once

#include "dlw/report/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace dlw::cli {

inline constexpr int exit_pass = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// "mu=0.5,1,2;C1=-1,0.3" -> scan axes.
inline std::vector<ScanAxis> parse_grid_spec(std::string const& spec)
{
    std::vector<ScanAxis> axes;
    std::stringstream ss(spec);
    for (std::string item; std::getline(ss, item, ';');) {
        item = sim::detail::trim(item);
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("grid axis needs NAME=v1,v2: " + item);
        ScanAxis axis{sim::detail::trim(item.substr(0, eq)), {}};
        std::stringstream vs(item.substr(eq + 1));
        for (std::string v; std::getline(vs, v, ',');) {
            try {
                std::size_t used = 0;
                auto t = sim::detail::trim(v);
                axis.values.push_back(std::stod(t, &used));
                if (used != t.size()) throw std::invalid_argument(t);
            } catch (std::exception const&) {
                throw UsageError("bad grid value '" + v + "' for " + axis.param);
            }
        }
        if (axis.param.empty() || axis.values.empty()) throw UsageError("empty grid axis: " + item);
        axes.push_back(std::move(axis));
    }
    if (axes.empty()) throw UsageError("empty grid spec");
    return axes;
}

/// "1,-2/3,0,5" -> subalgebra vector.
inline SubalgebraVector<Rational> parse_subalgebra_vector(std::string const& text)
{
    SubalgebraVector<Rational> l;
    std::stringstream ss(text);
    std::size_t k = 0;
    for (std::string item; std::getline(ss, item, ',');) {
        if (k == 4) throw UsageError("subalgebra vector needs 4 entries");
        try {
            l[k++] = parse_rational(sim::detail::trim(item));
        } catch (std::invalid_argument const& e) {
            throw UsageError(e.what());
        }
    }
    if (k != 4) throw UsageError("subalgebra vector needs 4 entries");
    return l;
}

inline nlohmann::ordered_json config_to_json(sim::SimConfig const& c)
{
    nlohmann::ordered_json j;
    j["x_min"] = c.grid.x_min;
    j["x_max"] = c.grid.x_max;
    j["n"] = c.grid.n;
    j["dt"] = c.step();
    j["cfl"] = c.cfl;
    j["t_end"] = c.t_end;
    j["boundary"] = c.boundary == sim::BoundaryKind::periodic ? "periodic" : "dirichlet-from-exact";
    j["initial"] = c.initial == sim::Initial::family ? "family" : c.initial == sim::Initial::zero ? "zero" : "sine";
    j["family"] = c.family;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (auto const& [k, v] : c.binding) params[k] = v;
    j["params"] = params;
    j["sine_k"] = c.sine_k;
    j["sine_amplitude"] = c.sine_amplitude;
    j["monitors"] = c.monitors;
    j["output_stride"] = c.output_stride;
    return j;
}

struct Options {
    std::string json_path;
    bool reproducible = false;
};

/// Writes `j` to the --json path ("-" is the output stream).
inline void emit_json(Options const& o, nlohmann::ordered_json const& j, std::ostream& out)
{
    if (o.json_path.empty()) return;
    if (o.json_path == "-") {
        out << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(o.json_path);
    if (!f) throw std::runtime_error("cannot write " + o.json_path);
    f << j.dump(2) << "\n";
}

inline void print_entries(report::Entries const& entries, std::ostream& out)
{
    for (auto const& e : entries) {
        out << std::left << std::setw(8) << report::to_string(e.verdict) << " " << std::setw(34) << e.label << " ["
            << e.paper_eq << "] " << e.detail << "\n";
    }
}

inline int finish(std::string const& suite, report::Entries entries, Options const& o, std::ostream& out)
{
    auto rep = report::make_report(suite, std::move(entries), o.reproducible);
    if (o.json_path != "-") {
        print_entries(rep.entries, out);
        out << rep.count(report::Verdict::pass) << " pass, " << rep.count(report::Verdict::fail) << " fail, "
            << rep.count(report::Verdict::flagged) << " flagged\n";
    }
    emit_json(o, report::to_json(rep), out);
    return rep.ok() ? exit_pass : exit_failure;
}

inline report::Entries waves_family_scan(std::string const& id, std::string const& grid, std::size_t samples,
                                         std::string const& csv)
{
    auto const& fam = find_family(id);
    FamilyScan scan = family_scan(id);
    if (!grid.empty()) scan = {parse_grid_spec(grid), {}};
    report::Entries out;
    auto bindings = scan_bindings(fam, scan);
    for (auto const& [name, b] : bindings) {
        auto r = verify_family(id, b, samples);
        std::string text;
        for (auto const& p : scan.axes) text += p.param + "=" + report::detail::num(r.binding.at(p.param)) + " ";
        if (!name.empty()) text += "[" + name + "] ";
        out.push_back({id + " " + text, id.substr(2), report::detail::verdict(r.passed),
                       "relative residual " + report::detail::num(r.report.max_relative) + ", absolute " +
                           report::detail::num(r.report.max_residual) + ", samples " +
                           std::to_string(r.report.samples_used) + " used / " +
                           std::to_string(r.report.samples_skipped) + " singular"});
    }
    if (!csv.empty()) {
        std::ofstream f(csv);
        if (!f) throw std::runtime_error("cannot write " + csv);
        ParamBinding b = fam.defaults;
        if (!bindings.empty()) b = bindings.front().second;
        write_profile_csv(f, fam, b, fam.x_min, fam.x_max, 401);
    }
    return out;
}

inline report::Entries waves_first_integrals_at(double mu, std::string const& csv)
{
    report::Entries out;
    auto printed = printed_first_integrals();
    auto src = first_integral_sources();
    char const* names[] = {"C1", "C2", "C3", "C4"};
    std::vector<JetPoly> exprs{printed[1]};
    for (int i = 1; i < 4; ++i) exprs.push_back(first_integral(src[i]).expr);
    auto ode = reduce_traveling();
    for (std::size_t i = 0; i < exprs.size(); ++i) {
        auto r = xi_derivative_mod_ode(exprs[i], ode);
        out.push_back({names[i], std::to_string(78 + i), report::detail::verdict(r.is_zero()), to_string(exprs[i])});
    }
    if (mu > 0) {
        auto d = first_integral_drift({exprs[0], exprs[1], exprs[2], exprs[3]}, {"C1", "C2", "C3", "C4"}, mu);
        for (std::size_t i = 0; i < 4; ++i) {
            out.push_back({std::string(names[i]) + " drift", "77", report::detail::verdict(d.max_drift[i] < 1e-8),
                           "kink start, mu=" + report::detail::num(mu) + ": initial " +
                               report::detail::num(d.initial[i]) + ", max drift " +
                               report::detail::num(d.max_drift[i])});
        }
    }
    for (auto const& f : solve_first_integrals(mu)) {
        auto r = verify_family(f.id, f.defaults);
        out.push_back({f.id + " mu=" + report::detail::num(mu), f.id.substr(2), report::detail::verdict(r.passed),
                       r.report.samples_used == 0
                           ? "every sample singular at this speed"
                           : "relative residual " + report::detail::num(r.report.max_relative)});
        if (!csv.empty()) {
            std::ofstream os(csv + "_" + f.id + ".csv");
            if (!os) throw std::runtime_error("cannot write " + csv);
            write_profile_csv(os, f, f.defaults, f.x_min, f.x_max, 401);
        }
    }
    return out;
}

inline int sim_run(std::string const& config_path, std::string const& out_dir, Options const& o, std::ostream& out)
{
    auto cfg = sim::load_config(config_path);
    nlohmann::ordered_json j;
    j["config"] = config_to_json(cfg);
    int code = exit_pass;
    try {
        auto r = sim::integrate(cfg);
        j["steps"] = r.steps;
        j["dt"] = r.dt;
        j["final_time"] = r.final_state.time;
        j["l2_error"] = r.l2_error ? nlohmann::ordered_json(*r.l2_error) : nlohmann::ordered_json(nullptr);
        nlohmann::ordered_json drift = nlohmann::ordered_json::object();
        for (auto const& m : r.monitors) drift[m.label] = m.max_drift();
        j["max_drift"] = drift;
        j["blowup"] = nullptr;
        out << "steps " << r.steps << ", dt " << r.dt << "\n";
        if (r.l2_error) out << "L2 error " << *r.l2_error << "\n";
        for (auto const& m : r.monitors) out << "monitor " << m.label << " max relative drift " << m.max_drift() << "\n";
        if (!out_dir.empty()) {
            std::filesystem::create_directories(out_dir);
            for (auto const& m : r.monitors) {
                std::ofstream f(std::filesystem::path(out_dir) / ("monitor_" + m.label + ".csv"));
                sim::write_monitor_csv(f, m);
            }
            std::ofstream f(std::filesystem::path(out_dir) / "snapshot.csv");
            sim::write_snapshot_csv(f, r.final_state, cfg.grid);
        }
    } catch (sim::BlowupError const& e) {
        j["blowup"] = {{"time", e.time}, {"step", e.step}, {"magnitude", e.magnitude}};
        out << "blow-up at t = " << e.time << " (step " << e.step << ")\n";
        code = exit_failure;
    }
    emit_json(o, j, out);
    return code;
}

inline report::Entries sim_converge(std::string const& config_path, std::vector<std::size_t> const& ns, double t_end)
{
    sim::SimConfig base = config_path.empty() ? report::soliton_benchmark() : sim::load_config(config_path);
    if (t_end > 0) base.t_end = t_end;
    report::Entries out;
    for (auto const& r : sim::convergence_study(base, ns)) {
        std::string text = r.l2_error ? "L2 " + report::detail::num(*r.l2_error)
                                      : "blow-up at t=" + report::detail::num(r.blowup_time.value_or(0));
        if (r.order) text += ", order " + report::detail::num(*r.order);
        bool ok = r.l2_error.has_value() && (!r.order || *r.order >= 1.8);
        out.push_back({"n=" + std::to_string(r.n), base.family.substr(2), report::detail::verdict(ok), text});
    }
    return out;
}

/// Entry point shared by the executable and the tests.
inline int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Differential-algebra lab for the dispersive long-wave system", "dlwlab"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--json", o.json_path, "write a JSON report to PATH ('-' for stdout)");
    app.add_flag("--reproducible", o.reproducible, "omit the timestamp from JSON");

    int code = exit_pass;
    std::function<int()> action;

    auto* sym = app.add_subcommand("symmetry", "point symmetries, brackets, optimal system");
    sym->require_subcommand(1);
    sym->add_subcommand("verify", "determining equations and reductions")->callback([&] {
        action = [&] {
            auto e = report::symmetry_generator_entries();
            auto r = report::symmetry_reduction_entries();
            e.insert(e.end(), r.begin(), r.end());
            return finish("symmetry verify", e, o, out);
        };
    });
    sym->add_subcommand("brackets", "commutator tables")->callback([&] {
        action = [&] { return finish("symmetry brackets", report::symmetry_bracket_entries(), o, out); };
    });
    auto* opt = sym->add_subcommand("optimal", "optimal system of one-dimensional subalgebras");
    std::size_t n_vectors = 1000;
    unsigned seed = 2024;
    std::string vector_text;
    opt->add_option("--vectors", n_vectors, "random vectors in the closure check")->check(CLI::PositiveNumber);
    opt->add_option("--seed", seed, "random seed");
    opt->add_option("--vector", vector_text, "reduce one vector l1,l2,l3,l4 (rationals)");
    opt->callback([&] {
        action = [&] {
            if (!vector_text.empty()) {
                auto l = parse_subalgebra_vector(vector_text);
                auto red = optimal_reduce(l);
                std::string log;
                for (auto const& s : red.log) {
                    log += "T" + std::to_string(s.generator) + "(" +
                           (s.generator == 4 ? report::detail::num(s.scale) : s.a.get_str()) + ") ";
                }
                return finish("symmetry optimal", {{vector_text, "Thm 2", report::Verdict::pass,
                                                    "class " + to_string(red.cls) + "; steps " + log}},
                              o, out);
            }
            return finish("symmetry optimal", report::symmetry_optimal_entries(n_vectors, seed), o, out);
        };
    });

    auto* adj = app.add_subcommand("adjoint", "adjoint symmetries, Table 1, induced brackets");
    adj->require_subcommand(1);
    adj->add_subcommand("verify", "adjoint determining equations and multipliers")->callback([&] {
        action = [&] { return finish("adjoint verify", report::adjoint_verify_entries(), o, out); };
    });
    adj->add_subcommand("table", "symmetry action on adjoint symmetries")->callback([&] {
        action = [&] { return finish("adjoint table", report::adjoint_table_entries(), o, out); };
    });
    auto* br = adj->add_subcommand("bracket", "bracket induced by a fixed adjoint symmetry");
    int fix = 0, qa = 0, qb = 0;
    br->add_option("--fix", fix, "index of the fixed Q")->check(CLI::Range(1, 6));
    br->add_option("--a", qa, "first argument Q index")->check(CLI::Range(1, 6));
    br->add_option("--b", qb, "second argument Q index")->check(CLI::Range(1, 6));
    br->callback([&] {
        action = [&] {
            if (fix == 0) return finish("adjoint bracket", report::adjoint_bracket_entries(), o, out);
            if (qa == 0 || qb == 0) throw UsageError("--fix needs --a and --b");
            auto c = sq_bracket(fix, qa, qb);
            std::string label = "Q" + std::to_string(fix) + "[Q" + std::to_string(qa) + ",Q" + std::to_string(qb) + "]";
            return finish("adjoint bracket", {{label, "43", report::Verdict::pass, report::detail::combination(c, "Q")}},
                          o, out);
        };
    });

    auto* cl = app.add_subcommand("conslaw", "conservation laws and Hamiltonian structure");
    cl->require_subcommand(1);
    cl->add_subcommand("verify", "divergence checks, Ibragimov and Noether flows")->callback([&] {
        action = [&] { return finish("conslaw verify", report::conslaw_verify_entries(), o, out); };
    });
    cl->add_subcommand("hamiltonian", "Hamiltonian and presymplectic operators")->callback([&] {
        action = [&] { return finish("conslaw hamiltonian", report::conslaw_hamiltonian_entries(), o, out); };
    });

    auto* wv = app.add_subcommand("waves", "traveling waves and exact solutions");
    wv->require_subcommand(1);
    auto* wverify = wv->add_subcommand("verify", "residual of a solution family");
    std::string family, grid, csv;
    std::size_t samples = 50;
    wverify->add_option("--family", family, "family id, e.g. eq93; omitted runs the whole waves suite");
    wverify->add_option("--grid", grid, "parameter grid NAME=v1,v2;NAME=...");
    wverify->add_option("--samples", samples, "sample points per binding")->check(CLI::PositiveNumber);
    wverify->add_option("--csv", csv, "write (xi,U,V) of the first binding");
    wverify->callback([&] {
        action = [&] {
            if (family.empty()) {
                if (!grid.empty()) throw UsageError("--grid needs --family");
                return finish("waves", report::waves_entries(), o, out);
            }
            return finish("waves verify", waves_family_scan(family, grid, samples, csv), o, out);
        };
    });
    auto* wfi = wv->add_subcommand("first-integrals", "C1..C4 and the decaying profiles at speed mu");
    double mu = 1.0;
    std::string fi_csv;
    wfi->add_option("--mu", mu, "wave speed")->required();
    wfi->add_option("--csv", fi_csv, "write profile CSVs with this path prefix");
    wfi->callback([&] {
        action = [&] { return finish("waves first-integrals", waves_first_integrals_at(mu, fi_csv), o, out); };
    });

    auto* sm = app.add_subcommand("sim", "finite-difference integration");
    sm->require_subcommand(1);
    auto* srun = sm->add_subcommand("run", "integrate one configuration");
    std::string config, out_dir;
    srun->add_option("--config", config, "key = value configuration file")->required();
    srun->add_option("--out", out_dir, "directory for monitor and snapshot CSVs");
    srun->callback([&] { action = [&] { return sim_run(config, out_dir, o, out); }; });
    auto* sconv = sm->add_subcommand("converge", "spatial convergence against the exact family");
    std::string conv_config;
    std::vector<std::size_t> ns{128, 256, 512};
    double t_end = 0;
    sconv->add_option("--config", conv_config, "base configuration (default: kink benchmark)");
    sconv->add_option("--n", ns, "cell counts")->delimiter(',');
    sconv->add_option("--t-end", t_end, "final time override");
    sconv->callback([&] { action = [&] { return finish("sim converge", sim_converge(conv_config, ns, t_end), o, out); }; });

    auto* rp = app.add_subcommand("report", "run verification suites");
    std::string suite = "all";
    rp->add_option("suite", suite, "symmetry|adjoint|conslaw|waves|sim|all");
    rp->callback([&] {
        action = [&] {
            auto r = report::run_suite(suite, o.reproducible);
            return finish(r.suite, r.entries, o, out);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
        return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
        return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
        app.exit(e, out, err);
        return exit_usage;
    }
    try {
        code = action ? action() : exit_usage;
    } catch (UsageError const& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (report::UnknownSuite const& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (UnknownFamily const& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (sim::ConfigError const& e) {
        err << "configuration error: " << e.what() << "\n";
        return exit_usage;
    } catch (std::exception const& e) {
        err << "error: " << e.what() << "\n";
        return exit_failure;
    }
    return code;
}

} // namespace dlw::cli
