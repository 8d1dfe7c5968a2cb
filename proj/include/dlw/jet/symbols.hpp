#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dlw {

/// Symbol indices shared by every jet family in the library.
///
/// Indices below `first_param` are dependent variables and carry jet
/// coordinates (x- and t-derivative counts). Indices at or above it are
/// constant parameters: standard total derivatives annihilate them, but a
/// custom Derivation may assign them a derivative (e.g. tanh phases).
namespace sym {
inline constexpr int u = 0;  ///< physical velocity
inline constexpr int v = 1;  ///< physical elevation
inline constexpr int q = 2;  ///< potential, q_x = u
inline constexpr int r = 3;  ///< potential, r_x = v
inline constexpr int w1 = 4; ///< formal-Lagrangian multiplier of the v-equation
inline constexpr int w2 = 5; ///< formal-Lagrangian multiplier of the u-equation
inline constexpr int U = 6;  ///< traveling-wave profile of u, derivatives in xi
inline constexpr int V = 7;  ///< traveling-wave profile of v
inline constexpr int f = 8;  ///< similarity profile of u
inline constexpr int g = 9;  ///< similarity profile of v

inline constexpr int first_param = 32;
inline constexpr int mu = 32;
inline constexpr int lam = 33; ///< t^(-1/2) in scaling reductions
inline constexpr int a0 = 34;
inline constexpr int a1 = 35;
inline constexpr int b0 = 36;
inline constexpr int b1 = 37;
inline constexpr int b2 = 38;
inline constexpr int T = 39; ///< tanh of the traveling phase
inline constexpr int s3 = 40; ///< square root of 3
inline constexpr int end = 41;
} // namespace sym

namespace detail {
inline constexpr std::array<std::string_view, sym::end> symbol_names = [] {
    std::array<std::string_view, sym::end> names{};
    names[sym::u] = "u";
    names[sym::v] = "v";
    names[sym::q] = "q";
    names[sym::r] = "r";
    names[sym::w1] = "w1";
    names[sym::w2] = "w2";
    names[sym::U] = "U";
    names[sym::V] = "V";
    names[sym::f] = "f";
    names[sym::g] = "g";
    names[sym::mu] = "mu";
    names[sym::lam] = "lam";
    names[sym::a0] = "a0";
    names[sym::a1] = "a1";
    names[sym::b0] = "b0";
    names[sym::b1] = "b1";
    names[sym::b2] = "b2";
    names[sym::T] = "T";
    names[sym::s3] = "s3";
    return names;
}();
} // namespace detail

inline constexpr bool is_param(int symbol)
{
    return symbol >= sym::first_param;
}

inline std::string_view symbol_name(int symbol)
{
    if (symbol < 0 || symbol >= sym::end || detail::symbol_names[symbol].empty()) {
        throw std::out_of_range("unknown symbol index " + std::to_string(symbol));
    }
    return detail::symbol_names[symbol];
}

inline std::optional<int> symbol_index(std::string_view name)
{
    for (int i = 0; i < sym::end; ++i) {
        if (!detail::symbol_names[i].empty() && detail::symbol_names[i] == name) return i;
    }
    return std::nullopt;
}

} // namespace dlw
