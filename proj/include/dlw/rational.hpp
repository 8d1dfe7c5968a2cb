#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace dlw {

/// Exact arbitrary-precision rational used for every symbolic coefficient.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(Rational const& r)
{
    return r.get_str();
}

inline Rational parse_rational(std::string_view text)
{
    Rational r;
    if (text.empty() || r.set_str(std::string(text), 10) != 0) {
        throw std::invalid_argument("invalid rational literal: " + std::string(text));
    }
    if (r.get_den() == 0) {
        throw std::invalid_argument("zero denominator in rational literal: " + std::string(text));
    }
    r.canonicalize();
    return r;
}

inline double to_double(Rational const& r)
{
    return r.get_d();
}

inline bool is_integer(Rational const& r)
{
    return r.get_den() == 1;
}

} // namespace dlw
