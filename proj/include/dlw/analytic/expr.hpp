#pragma once

#include <cmath>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dlw {

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class UnboundParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using ParamBinding = std::map<std::string, double>;

enum class Coord { x, t };

/// Closed-form expression over x, t and named parameters.
class AnalyticExpr {
public:
    enum class Kind { constant, param, x, t, add, mul, div, pow, exp, tanh, sech, sqrt };

    AnalyticExpr()
      : AnalyticExpr(0.0)
    {}
    AnalyticExpr(double c)
      : node_(std::make_shared<Node>(Node{Kind::constant, c, 0, {}, {}}))
    {}
    AnalyticExpr(int c)
      : AnalyticExpr(static_cast<double>(c))
    {}

    static AnalyticExpr param(std::string name) { return make(Kind::param, 0, 0, {}, std::move(name)); }
    static AnalyticExpr x() { return make(Kind::x, 0, 0, {}, {}); }
    static AnalyticExpr t() { return make(Kind::t, 0, 0, {}, {}); }

    Kind kind() const { return node_->kind; }
    double value() const { return node_->value; }
    int exponent() const { return node_->exponent; }
    std::string const& name() const { return node_->name; }
    std::vector<AnalyticExpr> const& args() const { return node_->args; }

    bool is_constant(double c) const { return kind() == Kind::constant && value() == c; }

    friend AnalyticExpr operator+(AnalyticExpr const& a, AnalyticExpr const& b)
    {
        if (a.is_constant(0)) return b;
        if (b.is_constant(0)) return a;
        if (a.kind() == Kind::constant && b.kind() == Kind::constant) return a.value() + b.value();
        return make(Kind::add, 0, 0, {a, b}, {});
    }
    friend AnalyticExpr operator*(AnalyticExpr const& a, AnalyticExpr const& b)
    {
        if (a.is_constant(0) || b.is_constant(0)) return 0.0;
        if (a.is_constant(1)) return b;
        if (b.is_constant(1)) return a;
        if (a.kind() == Kind::constant && b.kind() == Kind::constant) return a.value() * b.value();
        return make(Kind::mul, 0, 0, {a, b}, {});
    }
    friend AnalyticExpr operator/(AnalyticExpr const& a, AnalyticExpr const& b)
    {
        if (a.is_constant(0)) return 0.0;
        if (b.is_constant(1)) return a;
        return make(Kind::div, 0, 0, {a, b}, {});
    }
    friend AnalyticExpr operator-(AnalyticExpr const& a) { return AnalyticExpr(-1.0) * a; }
    friend AnalyticExpr operator-(AnalyticExpr const& a, AnalyticExpr const& b) { return a + (-b); }

    AnalyticExpr& operator+=(AnalyticExpr const& o) { return *this = *this + o; }
    AnalyticExpr& operator*=(AnalyticExpr const& o) { return *this = *this * o; }

    friend AnalyticExpr pow(AnalyticExpr const& a, int n)
    {
        if (n == 0) return 1.0;
        if (n == 1) return a;
        if (a.kind() == Kind::constant) return std::pow(a.value(), n);
        return make(Kind::pow, 0, n, {a}, {});
    }
    friend AnalyticExpr exp(AnalyticExpr const& a)
    {
        if (a.kind() == Kind::constant) return std::exp(a.value());
        return make(Kind::exp, 0, 0, {a}, {});
    }
    friend AnalyticExpr tanh(AnalyticExpr const& a) { return make(Kind::tanh, 0, 0, {a}, {}); }
    friend AnalyticExpr sech(AnalyticExpr const& a) { return make(Kind::sech, 0, 0, {a}, {}); }
    friend AnalyticExpr sqrt(AnalyticExpr const& a)
    {
        if (a.kind() == Kind::constant && a.value() >= 0) return std::sqrt(a.value());
        return make(Kind::sqrt, 0, 0, {a}, {});
    }

private:
    struct Node {
        Kind kind;
        double value;
        int exponent;
        std::vector<AnalyticExpr> args;
        std::string name;
    };

    static AnalyticExpr make(Kind k, double value, int exponent, std::vector<AnalyticExpr> args, std::string name)
    {
        AnalyticExpr e;
        e.node_ = std::make_shared<Node>(Node{k, value, exponent, std::move(args), std::move(name)});
        return e;
    }

    std::shared_ptr<Node const> node_;
};

inline AnalyticExpr operator+(AnalyticExpr const& a, double b) { return a + AnalyticExpr(b); }
inline AnalyticExpr operator+(double a, AnalyticExpr const& b) { return AnalyticExpr(a) + b; }
inline AnalyticExpr operator-(AnalyticExpr const& a, double b) { return a - AnalyticExpr(b); }
inline AnalyticExpr operator-(double a, AnalyticExpr const& b) { return AnalyticExpr(a) - b; }
inline AnalyticExpr operator*(AnalyticExpr const& a, double b) { return a * AnalyticExpr(b); }
inline AnalyticExpr operator*(double a, AnalyticExpr const& b) { return AnalyticExpr(a) * b; }
inline AnalyticExpr operator/(AnalyticExpr const& a, double b) { return a / AnalyticExpr(b); }
inline AnalyticExpr operator/(double a, AnalyticExpr const& b) { return AnalyticExpr(a) / b; }

/// Exact symbolic derivative.
inline AnalyticExpr diff(AnalyticExpr const& e, Coord c)
{
    using K = AnalyticExpr::Kind;
    auto const& a = e.args();
    switch (e.kind()) {
    case K::constant:
    case K::param: return 0.0;
    case K::x: return c == Coord::x ? 1.0 : 0.0;
    case K::t: return c == Coord::t ? 1.0 : 0.0;
    case K::add: return diff(a[0], c) + diff(a[1], c);
    case K::mul: return diff(a[0], c) * a[1] + a[0] * diff(a[1], c);
    case K::div: return (diff(a[0], c) - e * diff(a[1], c)) / a[1]; // keeps the original denominator
    case K::pow: return static_cast<double>(e.exponent()) * pow(a[0], e.exponent() - 1) * diff(a[0], c);
    case K::exp: return e * diff(a[0], c);
    case K::tanh: return pow(sech(a[0]), 2) * diff(a[0], c);
    case K::sech: return -(e * tanh(a[0])) * diff(a[0], c);
    case K::sqrt: return diff(a[0], c) / (2.0 * e);
    }
    return 0.0;
}

inline AnalyticExpr diff(AnalyticExpr const& e, int nx, int nt)
{
    AnalyticExpr out = e;
    for (int k = 0; k < nx; ++k) out = diff(out, Coord::x);
    for (int k = 0; k < nt; ++k) out = diff(out, Coord::t);
    return out;
}

inline constexpr double singular_denominator = 1e-8;

/// Numeric value; throws DomainError near a pole or for sqrt of a negative number.
inline double eval(AnalyticExpr const& e, ParamBinding const& b, double x, double t)
{
    using K = AnalyticExpr::Kind;
    auto const& a = e.args();
    switch (e.kind()) {
    case K::constant: return e.value();
    case K::param: {
        auto it = b.find(e.name());
        if (it == b.end()) throw UnboundParameter("unbound parameter " + e.name());
        return it->second;
    }
    case K::x: return x;
    case K::t: return t;
    case K::add: return eval(a[0], b, x, t) + eval(a[1], b, x, t);
    case K::mul: return eval(a[0], b, x, t) * eval(a[1], b, x, t);
    case K::div: {
        double den = eval(a[1], b, x, t);
        if (std::abs(den) < singular_denominator) throw DomainError("denominator vanishes");
        return eval(a[0], b, x, t) / den;
    }
    case K::pow: {
        double base = eval(a[0], b, x, t);
        if (e.exponent() < 0 && std::abs(base) < singular_denominator) throw DomainError("negative power of zero");
        return std::pow(base, e.exponent());
    }
    case K::exp: return std::exp(eval(a[0], b, x, t));
    case K::tanh: return std::tanh(eval(a[0], b, x, t));
    case K::sech: return 1.0 / std::cosh(eval(a[0], b, x, t));
    case K::sqrt: {
        double v = eval(a[0], b, x, t);
        if (v < 0) throw DomainError("sqrt of a negative number");
        return std::sqrt(v);
    }
    }
    return 0.0;
}

/// Substitutes x and t by expressions.
inline AnalyticExpr compose(AnalyticExpr const& e, AnalyticExpr const& x_image, AnalyticExpr const& t_image)
{
    using K = AnalyticExpr::Kind;
    auto const& a = e.args();
    auto rec = [&](AnalyticExpr const& s) { return compose(s, x_image, t_image); };
    switch (e.kind()) {
    case K::constant:
    case K::param: return e;
    case K::x: return x_image;
    case K::t: return t_image;
    case K::add: return rec(a[0]) + rec(a[1]);
    case K::mul: return rec(a[0]) * rec(a[1]);
    case K::div: return rec(a[0]) / rec(a[1]);
    case K::pow: return pow(rec(a[0]), e.exponent());
    case K::exp: return exp(rec(a[0]));
    case K::tanh: return tanh(rec(a[0]));
    case K::sech: return sech(rec(a[0]));
    case K::sqrt: return sqrt(rec(a[0]));
    }
    return e;
}

inline std::string to_string(AnalyticExpr const& e)
{
    using K = AnalyticExpr::Kind;
    auto const& a = e.args();
    std::ostringstream os;
    switch (e.kind()) {
    case K::constant: os.precision(17); os << e.value(); break;
    case K::param: os << e.name(); break;
    case K::x: os << "x"; break;
    case K::t: os << "t"; break;
    case K::add: os << "(" << to_string(a[0]) << " + " << to_string(a[1]) << ")"; break;
    case K::mul: os << to_string(a[0]) << "*" << to_string(a[1]); break;
    case K::div: os << to_string(a[0]) << "/(" << to_string(a[1]) << ")"; break;
    case K::pow: os << "(" << to_string(a[0]) << ")^" << e.exponent(); break;
    case K::exp: os << "exp(" << to_string(a[0]) << ")"; break;
    case K::tanh: os << "tanh(" << to_string(a[0]) << ")"; break;
    case K::sech: os << "sech(" << to_string(a[0]) << ")"; break;
    case K::sqrt: os << "sqrt(" << to_string(a[0]) << ")"; break;
    }
    return os.str();
}

} // namespace dlw
