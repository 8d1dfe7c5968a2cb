#pragma once

#include "dlw/jet/symbols.hpp"
#include "dlw/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dlw {

enum class Axis { x, t };

/// Jet coordinate: dependent variable `dep` differentiated `dx` times in x
/// and `dt` times in t. Parameters always have dx = dt = 0.
struct JetVar {
    int dep = 0;
    int dx = 0;
    int dt = 0;

    constexpr int order() const { return dx + dt; }
    constexpr JetVar lifted(Axis axis) const
    {
        return axis == Axis::x ? JetVar{dep, dx + 1, dt} : JetVar{dep, dx, dt + 1};
    }

    friend constexpr auto operator<=>(JetVar const&, JetVar const&) = default;
};

/// Product of jet variables and explicit powers of x and t.
///
/// Factors are sorted by JetVar and carry positive exponents only, so two
/// monomials are equal exactly when their representations are.
class Monomial {
public:
    using Factor = std::pair<JetVar, int>;

    Monomial() = default;
    Monomial(std::vector<Factor> factors, int xpow, int tpow)
      : factors_(std::move(factors))
      , xpow_(xpow)
      , tpow_(tpow)
    {
        normalize();
    }

    static Monomial of(JetVar var, int power = 1) { return Monomial({{var, power}}, 0, 0); }

    std::vector<Factor> const& factors() const { return factors_; }
    int xpow() const { return xpow_; }
    int tpow() const { return tpow_; }
    bool is_one() const { return factors_.empty() && xpow_ == 0 && tpow_ == 0; }

    int degree() const
    {
        int d = xpow_ + tpow_;
        for (auto const& [var, e] : factors_) d += e;
        return d;
    }

    int exponent_of(JetVar var) const
    {
        auto it = std::lower_bound(factors_.begin(), factors_.end(), var,
                                   [](Factor const& f, JetVar const& key) { return f.first < key; });
        return (it != factors_.end() && it->first == var) ? it->second : 0;
    }

    /// Copy with the exponent of `var` changed by `delta` (dropped at zero).
    Monomial with_exponent_delta(JetVar var, int delta) const
    {
        Monomial out = *this;
        auto it = std::lower_bound(out.factors_.begin(), out.factors_.end(), var,
                                   [](Factor const& f, JetVar const& key) { return f.first < key; });
        if (it != out.factors_.end() && it->first == var) {
            it->second += delta;
            if (it->second == 0) out.factors_.erase(it);
        } else if (delta != 0) {
            out.factors_.insert(it, {var, delta});
        }
        return out;
    }

    Monomial with_xpow(int p) const
    {
        Monomial out = *this;
        out.xpow_ = p;
        return out;
    }
    Monomial with_tpow(int p) const
    {
        Monomial out = *this;
        out.tpow_ = p;
        return out;
    }

    friend Monomial operator*(Monomial const& a, Monomial const& b)
    {
        std::vector<Factor> merged;
        merged.reserve(a.factors_.size() + b.factors_.size());
        auto ia = a.factors_.begin();
        auto ib = b.factors_.begin();
        while (ia != a.factors_.end() || ib != b.factors_.end()) {
            if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first)) {
                merged.push_back(*ia++);
            } else if (ia == a.factors_.end() || ib->first < ia->first) {
                merged.push_back(*ib++);
            } else {
                merged.emplace_back(ia->first, ia->second + ib->second);
                ++ia;
                ++ib;
            }
        }
        Monomial out;
        out.factors_ = std::move(merged);
        out.xpow_ = a.xpow_ + b.xpow_;
        out.tpow_ = a.tpow_ + b.tpow_;
        return out;
    }

    friend bool operator==(Monomial const&, Monomial const&) = default;

    /// Graded lexicographic: total degree, then factors, then x and t powers.
    friend bool operator<(Monomial const& a, Monomial const& b)
    {
        int da = a.degree();
        int db = b.degree();
        if (da != db) return da < db;
        if (a.factors_ != b.factors_) {
            return std::lexicographical_compare(a.factors_.begin(), a.factors_.end(), b.factors_.begin(),
                                                b.factors_.end());
        }
        if (a.xpow_ != b.xpow_) return a.xpow_ < b.xpow_;
        return a.tpow_ < b.tpow_;
    }

private:
    void normalize()
    {
        std::sort(factors_.begin(), factors_.end());
        std::vector<Factor> merged;
        for (auto const& f : factors_) {
            if (!merged.empty() && merged.back().first == f.first) {
                merged.back().second += f.second;
            } else {
                merged.push_back(f);
            }
        }
        std::erase_if(merged, [](Factor const& f) { return f.second == 0; });
        factors_ = std::move(merged);
    }

    std::vector<Factor> factors_;
    int xpow_ = 0;
    int tpow_ = 0;
};

/// Differential polynomial with exact rational coefficients.
class JetPoly {
public:
    using TermMap = std::map<Monomial, Rational>;

    JetPoly() = default;
    JetPoly(Rational const& c) // NOLINT: implicit constants read naturally in formulas
    {
        if (c != 0) terms_.emplace(Monomial{}, c);
    }
    JetPoly(long c)
      : JetPoly(Rational(c))
    {}
    JetPoly(int c)
      : JetPoly(Rational(c))
    {}

    static JetPoly var(JetVar v, int power = 1) { return term(Monomial::of(v, power), 1); }
    static JetPoly var(int dep, int dx = 0, int dt = 0) { return var(JetVar{dep, dx, dt}); }
    static JetPoly param(int symbol) { return var(JetVar{symbol, 0, 0}); }
    static JetPoly x(int power = 1) { return term(Monomial({}, power, 0), 1); }
    static JetPoly t(int power = 1) { return term(Monomial({}, 0, power), 1); }
    static JetPoly term(Monomial m, Rational c)
    {
        JetPoly p;
        p.add_term(std::move(m), std::move(c));
        return p;
    }

    TermMap const& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
    Rational constant_term() const
    {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? Rational(0) : it->second;
    }
    Rational coefficient(Monomial const& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(Monomial const& m, Rational const& c)
    {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    JetPoly& operator+=(JetPoly const& o)
    {
        if (&o == this) return *this *= Rational(2);
        for (auto const& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    JetPoly& operator-=(JetPoly const& o)
    {
        if (&o == this) {
            terms_.clear();
            return *this;
        }
        for (auto const& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    JetPoly& operator*=(Rational const& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    friend JetPoly operator+(JetPoly a, JetPoly const& b) { return a += b; }
    friend JetPoly operator-(JetPoly a, JetPoly const& b) { return a -= b; }
    friend JetPoly operator-(JetPoly a)
    {
        for (auto& [m, c] : a.terms_) c = -c;
        return a;
    }
    friend JetPoly operator*(JetPoly a, Rational const& s) { return a *= s; }
    friend JetPoly operator*(Rational const& s, JetPoly a) { return a *= s; }
    friend JetPoly operator*(JetPoly a, long s) { return a *= Rational(s); }
    friend JetPoly operator*(long s, JetPoly a) { return a *= Rational(s); }
    friend JetPoly operator*(JetPoly a, int s) { return a *= Rational(s); }
    friend JetPoly operator*(int s, JetPoly a) { return a *= Rational(s); }
    friend JetPoly operator/(JetPoly a, Rational const& s) { return a *= Rational(1) / s; }

    friend JetPoly operator*(JetPoly const& a, JetPoly const& b)
    {
        JetPoly out;
        for (auto const& [ma, ca] : a.terms_) {
            for (auto const& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
        }
        return out;
    }
    JetPoly& operator*=(JetPoly const& o) { return *this = *this * o; }

    friend bool operator==(JetPoly const&, JetPoly const&) = default;

private:
    TermMap terms_;
};

inline JetPoly pow(JetPoly base, unsigned exponent)
{
    JetPoly result = 1;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return result;
}

/// Tuple of polynomials, one per dependent variable of a family.
using JetTuple = std::vector<JetPoly>;

inline bool is_zero(JetTuple const& w)
{
    return std::all_of(w.begin(), w.end(), [](JetPoly const& p) { return p.is_zero(); });
}

inline JetTuple operator+(JetTuple a, JetTuple const& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("tuple size mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}
inline JetTuple operator-(JetTuple a, JetTuple const& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("tuple size mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}
inline JetTuple operator*(Rational const& s, JetTuple a)
{
    for (auto& p : a) p *= s;
    return a;
}
inline JetTuple operator-(JetTuple a)
{
    for (auto& p : a) p = -p;
    return a;
}

// ---------------------------------------------------------------------------
// Queries
// ---------------------------------------------------------------------------

inline std::set<JetVar> jet_vars(JetPoly const& p)
{
    std::set<JetVar> out;
    for (auto const& [m, c] : p.terms()) {
        for (auto const& [var, e] : m.factors()) out.insert(var);
    }
    return out;
}

inline bool has_explicit_xt(JetPoly const& p)
{
    return std::any_of(p.terms().begin(), p.terms().end(),
                       [](auto const& kv) { return kv.first.xpow() > 0 || kv.first.tpow() > 0; });
}

inline int max_order(JetPoly const& p)
{
    int order = 0;
    for (auto const& var : jet_vars(p)) order = std::max(order, var.order());
    return order;
}

inline bool uses_symbol(JetPoly const& p, int dep)
{
    for (auto const& var : jet_vars(p)) {
        if (var.dep == dep) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Differentiation
// ---------------------------------------------------------------------------

/// Partial derivative with respect to one jet coordinate.
inline JetPoly partial(JetPoly const& p, JetVar var)
{
    JetPoly out;
    for (auto const& [m, c] : p.terms()) {
        int e = m.exponent_of(var);
        if (e > 0) out.add_term(m.with_exponent_delta(var, -1), c * e);
    }
    return out;
}

/// Partial derivative with respect to the explicit coordinate only.
inline JetPoly partial_explicit(JetPoly const& p, Axis axis)
{
    JetPoly out;
    for (auto const& [m, c] : p.terms()) {
        int e = axis == Axis::x ? m.xpow() : m.tpow();
        if (e == 0) continue;
        out.add_term(axis == Axis::x ? m.with_xpow(e - 1) : m.with_tpow(e - 1), c * e);
    }
    return out;
}

/// Total derivative D_x or D_t. Parameters are constants.
inline JetPoly total_derivative(JetPoly const& p, Axis axis)
{
    JetPoly out;
    for (auto const& [m, c] : p.terms()) {
        for (auto const& [var, e] : m.factors()) {
            if (is_param(var.dep)) continue;
            Monomial lifted = m.with_exponent_delta(var, -1).with_exponent_delta(var.lifted(axis), 1);
            out.add_term(lifted, c * e);
        }
        int e = axis == Axis::x ? m.xpow() : m.tpow();
        if (e > 0) out.add_term(axis == Axis::x ? m.with_xpow(e - 1) : m.with_tpow(e - 1), c * e);
    }
    return out;
}

inline JetPoly total_derivative(JetPoly p, int nx, int nt)
{
    for (int i = 0; i < nx; ++i) p = total_derivative(p, Axis::x);
    for (int i = 0; i < nt; ++i) p = total_derivative(p, Axis::t);
    return p;
}

inline JetPoly Dx(JetPoly const& p) { return total_derivative(p, Axis::x); }
inline JetPoly Dt(JetPoly const& p) { return total_derivative(p, Axis::t); }

/// User-specified derivation: the image of every atom, extended by Leibniz.
///
/// Used for reduced jet rings where the independent variables have been
/// changed (traveling waves, similarity variables, tanh phases).
struct Derivation {
    std::function<JetPoly(JetVar const&)> of_var;
    JetPoly of_x;
    JetPoly of_t;
};

inline JetPoly apply_derivation(JetPoly const& p, Derivation const& d)
{
    JetPoly out;
    std::map<JetVar, JetPoly> cache;
    auto image = [&](JetVar const& var) -> JetPoly const& {
        auto it = cache.find(var);
        if (it == cache.end()) it = cache.emplace(var, d.of_var(var)).first;
        return it->second;
    };
    for (auto const& [m, c] : p.terms()) {
        for (auto const& [var, e] : m.factors()) {
            JetPoly const& dv = image(var);
            if (dv.is_zero()) continue;
            out += JetPoly::term(m.with_exponent_delta(var, -1), c * e) * dv;
        }
        if (m.xpow() > 0 && !d.of_x.is_zero()) out += JetPoly::term(m.with_xpow(m.xpow() - 1), c * m.xpow()) * d.of_x;
        if (m.tpow() > 0 && !d.of_t.is_zero()) out += JetPoly::term(m.with_tpow(m.tpow() - 1), c * m.tpow()) * d.of_t;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Substitution
// ---------------------------------------------------------------------------

/// Replaces jet variables by polynomials; `image` returns nullopt to keep a
/// variable. Explicit x and t are untouched.
template <typename ImageFn>
JetPoly substitute(JetPoly const& p, ImageFn&& image)
{
    std::map<JetVar, std::optional<JetPoly>> cache;
    auto lookup = [&](JetVar const& var) -> std::optional<JetPoly> const& {
        auto it = cache.find(var);
        if (it == cache.end()) it = cache.emplace(var, image(var)).first;
        return it->second;
    };
    JetPoly out;
    for (auto const& [m, c] : p.terms()) {
        std::vector<Monomial::Factor> kept;
        JetPoly product = 1;
        for (auto const& [var, e] : m.factors()) {
            auto const& img = lookup(var);
            if (img) {
                product *= pow(*img, static_cast<unsigned>(e));
            } else {
                kept.emplace_back(var, e);
            }
        }
        out += JetPoly::term(Monomial(std::move(kept), m.xpow(), m.tpow()), c) * product;
    }
    return out;
}

/// Substitutes explicit x and t by polynomials (jet variables unchanged).
inline JetPoly substitute_explicit(JetPoly const& p, JetPoly const& x_image, JetPoly const& t_image)
{
    JetPoly out;
    for (auto const& [m, c] : p.terms()) {
        Monomial stripped(m.factors(), 0, 0);
        out += JetPoly::term(stripped, c) * pow(x_image, m.xpow()) * pow(t_image, m.tpow());
    }
    return out;
}

/// Replaces dependent variables by images, prolonging through the given
/// derivations: var(dep, a, b) -> dx^a dt^b (image of dep).
inline JetPoly substitute_dependents(JetPoly const& p, std::map<int, JetPoly> const& images, Derivation const& dx,
                                     Derivation const& dt)
{
    std::map<JetVar, JetPoly> prolonged;
    std::function<JetPoly const&(JetVar const&)> get = [&](JetVar const& var) -> JetPoly const& {
        auto it = prolonged.find(var);
        if (it != prolonged.end()) return it->second;
        JetPoly value;
        if (var.dt > 0) {
            value = apply_derivation(get(JetVar{var.dep, var.dx, var.dt - 1}), dt);
        } else if (var.dx > 0) {
            value = apply_derivation(get(JetVar{var.dep, var.dx - 1, 0}), dx);
        } else {
            value = images.at(var.dep);
        }
        return prolonged.emplace(var, std::move(value)).first->second;
    };
    return substitute(p, [&](JetVar const& var) -> std::optional<JetPoly> {
        if (!images.contains(var.dep)) return std::nullopt;
        return get(var);
    });
}

/// The standard total derivative expressed as a Derivation.
inline Derivation standard_derivation(Axis axis)
{
    Derivation d;
    d.of_var = [axis](JetVar const& var) -> JetPoly {
        if (is_param(var.dep)) return {};
        return JetPoly::var(var.lifted(axis));
    };
    d.of_x = axis == Axis::x ? JetPoly(1) : JetPoly();
    d.of_t = axis == Axis::t ? JetPoly(1) : JetPoly();
    return d;
}

/// Prolonged change of dependent variables with standard total derivatives,
/// e.g. u -> q_x, v -> r_x or w1 -> u.
inline JetPoly substitute_dependents(JetPoly const& p, std::map<int, JetPoly> const& images)
{
    return substitute_dependents(p, images, standard_derivation(Axis::x), standard_derivation(Axis::t));
}

/// Substitutes parameters by rational values.
inline JetPoly bind_params(JetPoly const& p, std::map<int, Rational> const& values)
{
    return substitute(p, [&](JetVar const& var) -> std::optional<JetPoly> {
        auto it = values.find(var.dep);
        if (it == values.end() || !is_param(var.dep)) return std::nullopt;
        return JetPoly(it->second);
    });
}

} // namespace dlw
