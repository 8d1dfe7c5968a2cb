#pragma once

#include "dlw/jet/poly.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dlw {

// Canonical text form of a JetPoly, e.g. `(-1/3)*u[3,0] + u[0,0]*v[1,0]`.
//
//   poly   := "0" | term (" + " term)*
//   term   := coeff | [coeff "*"] factor ("*" factor)*
//   coeff  := digits | "(" ["-"] digits ["/" digits] ")"
//   factor := ("x" | "t" | param | dep "[" dx "," dt "]") ["^" digits]
//
// A unit coefficient is omitted; any negative or fractional coefficient is
// parenthesized. Terms follow the monomial order, so printing is canonical
// and parse(print(p)) == p.

namespace detail {

inline std::string format_coefficient(Rational const& c)
{
    if (c > 0 && is_integer(c)) return c.get_str();
    return "(" + c.get_str() + ")";
}

inline void append_power(std::string& out, int e)
{
    if (e != 1) out += "^" + std::to_string(e);
}

} // namespace detail

inline std::string to_string(JetVar const& var)
{
    std::string out(symbol_name(var.dep));
    if (!is_param(var.dep)) out += "[" + std::to_string(var.dx) + "," + std::to_string(var.dt) + "]";
    return out;
}

inline std::string to_string(Monomial const& m)
{
    std::string out;
    auto sep = [&] {
        if (!out.empty()) out += "*";
    };
    for (auto const& [var, e] : m.factors()) {
        sep();
        out += to_string(var);
        detail::append_power(out, e);
    }
    if (m.xpow() > 0) {
        sep();
        out += "x";
        detail::append_power(out, m.xpow());
    }
    if (m.tpow() > 0) {
        sep();
        out += "t";
        detail::append_power(out, m.tpow());
    }
    return out;
}

inline std::string to_string(JetPoly const& p)
{
    if (p.is_zero()) return "0";
    std::string out;
    for (auto const& [m, c] : p.terms()) {
        if (!out.empty()) out += " + ";
        if (m.is_one()) {
            out += detail::format_coefficient(c);
        } else if (c == 1) {
            out += to_string(m);
        } else {
            out += detail::format_coefficient(c) + "*" + to_string(m);
        }
    }
    return out;
}

inline std::string to_string(JetTuple const& w)
{
    std::string out = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out += ", ";
        out += to_string(w[i]);
    }
    return out + ")";
}

class JetParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

class JetParser {
public:
    explicit JetParser(std::string_view text)
      : text_(text)
    {}

    JetPoly parse()
    {
        if (text_ == "0") return {};
        JetPoly out;
        while (true) {
            auto [m, c] = term();
            out.add_term(m, c);
            if (pos_ == text_.size()) break;
            expect(" + ");
        }
        return out;
    }

private:
    std::pair<Monomial, Rational> term()
    {
        Rational coeff = 1;
        if (peek() == '(' || std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = coefficient();
            if (peek() != '*') return {Monomial{}, coeff};
            ++pos_;
        }
        std::vector<Monomial::Factor> factors;
        int xpow = 0;
        int tpow = 0;
        while (true) {
            std::string name = identifier();
            if (name.empty()) fail("expected factor");
            if (name == "x" || name == "t") {
                int e = power();
                (name == "x" ? xpow : tpow) += e;
            } else {
                auto index = symbol_index(name);
                if (!index) fail("unknown symbol '" + name + "'");
                JetVar var{*index, 0, 0};
                if (!is_param(*index)) {
                    expect("[");
                    var.dx = integer();
                    expect(",");
                    var.dt = integer();
                    expect("]");
                }
                factors.emplace_back(var, power());
            }
            if (peek() != '*') break;
            ++pos_;
        }
        return {Monomial(std::move(factors), xpow, tpow), coeff};
    }

    Rational coefficient()
    {
        if (peek() == '(') {
            ++pos_;
            auto close = text_.find(')', pos_);
            if (close == std::string_view::npos) fail("unterminated coefficient");
            Rational r = parse_rational(text_.substr(pos_, close - pos_));
            pos_ = close + 1;
            return r;
        }
        return Rational(integer());
    }

    int power()
    {
        if (peek() != '^') return 1;
        ++pos_;
        return integer();
    }

    int integer()
    {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    std::string identifier()
    {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void expect(std::string_view token)
    {
        if (text_.substr(pos_, token.size()) != token) fail("expected '" + std::string(token) + "'");
        pos_ += token.size();
    }

    [[noreturn]] void fail(std::string const& what) const
    {
        throw JetParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline JetPoly parse_jet_poly(std::string_view text)
{
    return detail::JetParser(text).parse();
}

inline std::ostream& operator<<(std::ostream& os, JetPoly const& p)
{
    return os << to_string(p);
}

inline std::ostream& operator<<(std::ostream& os, JetTuple const& w)
{
    return os << to_string(w);
}

} // namespace dlw
