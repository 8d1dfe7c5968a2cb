#pragma once

#include "dlw/jet/poly.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dlw {

class ReductionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// PDE system in solved form: for each dependent variable deps[j],
///   D_x^kx D_t^kt deps[j] + rhs[j] = 0
/// with (kx, kt) = leading[j]. For Cauchy-Kovalevskaya systems the leading
/// derivative is (0,1); the potential system uses (1,1) and ODE rings
/// such as the traveling-wave reduction use (k,0).
struct EvolutionSystem {
    struct Leading {
        int kx = 0;
        int kt = 1;
    };

    std::vector<int> deps;
    std::vector<Leading> leading;
    JetTuple rhs;

    std::size_t size() const { return deps.size(); }

    /// Equation j as a polynomial, leading derivative plus rhs.
    JetPoly equation(std::size_t j) const
    {
        return JetPoly::var(deps[j], leading[j].kx, leading[j].kt) + rhs[j];
    }

    JetTuple equations() const
    {
        JetTuple out;
        for (std::size_t j = 0; j < size(); ++j) out.push_back(equation(j));
        return out;
    }

    /// Index into deps of the equation whose leading term divides `var`.
    std::optional<std::size_t> reducer_for(JetVar const& var) const
    {
        for (std::size_t j = 0; j < size(); ++j) {
            if (deps[j] == var.dep && var.dx >= leading[j].kx && var.dt >= leading[j].kt) return j;
        }
        return std::nullopt;
    }
};

inline EvolutionSystem make_evolution_system(std::vector<int> deps, JetTuple rhs)
{
    EvolutionSystem sys;
    sys.leading.assign(deps.size(), EvolutionSystem::Leading{});
    sys.deps = std::move(deps);
    sys.rhs = std::move(rhs);
    return sys;
}

namespace detail {

// (dt, dx) lexicographic: t-derivatives are eliminated first.
inline bool rank_less(JetVar const& a, JetVar const& b)
{
    if (a.dt != b.dt) return a.dt < b.dt;
    return a.dx < b.dx;
}

class OnShellReducer {
public:
    explicit OnShellReducer(EvolutionSystem const& sys)
      : sys_(sys)
    {}

    JetPoly reduce(JetPoly const& p)
    {
        return substitute(p, [&](JetVar const& var) -> std::optional<JetPoly> {
            if (!sys_.reducer_for(var)) return std::nullopt;
            return image(var);
        });
    }

private:
    JetPoly const& image(JetVar const& var)
    {
        auto it = memo_.find(var);
        if (it != memo_.end()) return it->second;
        std::size_t j = *sys_.reducer_for(var);
        JetPoly raw = -total_derivative(sys_.rhs[j], var.dx - sys_.leading[j].kx, var.dt - sys_.leading[j].kt);
        for (auto const& w : jet_vars(raw)) {
            if (sys_.reducer_for(w) && !rank_less(w, var)) {
                throw ReductionError("on-shell replacement of " + std::string(symbol_name(var.dep)) + "[" +
                                     std::to_string(var.dx) + "," + std::to_string(var.dt) +
                                     "] does not lower the rank");
            }
        }
        JetPoly reduced = reduce(raw);
        return memo_.emplace(var, std::move(reduced)).first->second;
    }

    EvolutionSystem const& sys_;
    std::map<JetVar, JetPoly> memo_;
};

} // namespace detail

/// Eliminates every jet variable that is a derivative of a leading term.
inline JetPoly reduce_on_shell(JetPoly const& p, EvolutionSystem const& sys)
{
    return detail::OnShellReducer(sys).reduce(p);
}

inline JetTuple reduce_on_shell(JetTuple const& w, EvolutionSystem const& sys)
{
    detail::OnShellReducer reducer(sys);
    JetTuple out;
    out.reserve(w.size());
    for (auto const& p : w) out.push_back(reducer.reduce(p));
    return out;
}

inline bool is_reduced(JetPoly const& p, EvolutionSystem const& sys)
{
    for (auto const& var : jet_vars(p)) {
        if (sys.reducer_for(var)) return false;
    }
    return true;
}

} // namespace dlw
