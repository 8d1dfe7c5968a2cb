#pragma once

#include "dlw/jet/poly.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dlw {

using RationalMatrix = std::vector<std::vector<Rational>>;
using RationalVector = std::vector<Rational>;

/// Reduced row echelon form over the rationals.
struct Echelon {
    RationalMatrix rref;
    std::vector<std::size_t> pivots; ///< pivot column per nonzero row
};

inline Echelon row_reduce(RationalMatrix m)
{
    Echelon out;
    std::size_t rows = m.size();
    std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rational inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        out.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    out.rref = std::move(m);
    return out;
}

inline std::size_t rank(RationalMatrix const& m)
{
    return row_reduce(m).pivots.size();
}

/// Solves A x = b. Free columns are set to zero; nullopt when inconsistent.
inline std::optional<RationalVector> solve(RationalMatrix const& A, RationalVector const& b)
{
    std::size_t cols = A.empty() ? 0 : A[0].size();
    RationalMatrix aug = A;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b.at(i));
    if (aug.empty()) return RationalVector(cols, 0);
    Echelon e = row_reduce(std::move(aug));
    RationalVector x(cols, 0);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == cols) return std::nullopt;
        x[e.pivots[i]] = e.rref[i][cols];
    }
    return x;
}

/// Basis of {x : A x = 0}.
inline std::vector<RationalVector> null_space(RationalMatrix const& A, std::size_t cols)
{
    Echelon e = row_reduce(A);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<RationalVector> out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RationalVector x(cols, 0);
        x[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = -e.rref[i][f];
        out.push_back(std::move(x));
    }
    return out;
}

class DecompositionError : public std::runtime_error {
public:
    DecompositionError(std::string const& what, JetTuple residue)
      : std::runtime_error(what)
      , residue_(std::move(residue))
    {}
    JetTuple const& residue() const { return residue_; }

private:
    JetTuple residue_;
};

/// Coordinates of tuples in a common monomial basis.
class TupleCoordinates {
public:
    explicit TupleCoordinates(std::vector<JetTuple> const& tuples)
    {
        for (auto const& w : tuples) register_tuple(w);
    }

    void register_tuple(JetTuple const& w)
    {
        for (std::size_t i = 0; i < w.size(); ++i) {
            for (auto const& [m, c] : w[i].terms()) index_.try_emplace({i, m}, index_.size());
        }
    }

    std::size_t dimension() const { return index_.size(); }

    /// Coordinates; nullopt when w has a monomial outside the registered set.
    std::optional<RationalVector> coordinates(JetTuple const& w) const
    {
        RationalVector out(index_.size(), 0);
        for (std::size_t i = 0; i < w.size(); ++i) {
            for (auto const& [m, c] : w[i].terms()) {
                auto it = index_.find({i, m});
                if (it == index_.end()) return std::nullopt;
                out[it->second] = c;
            }
        }
        return out;
    }

private:
    std::map<std::pair<std::size_t, Monomial>, std::size_t> index_;
};

inline JetTuple linear_combination(std::vector<JetTuple> const& basis, RationalVector const& coeffs)
{
    if (basis.empty()) return {};
    JetTuple out(basis[0].size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (coeffs[k] == 0) continue;
        out = out + coeffs[k] * basis[k];
    }
    return out;
}

/// Writes target as a rational combination of basis tuples.
inline RationalVector decompose(JetTuple const& target, std::vector<JetTuple> const& basis)
{
    TupleCoordinates coords(basis);
    auto b = coords.coordinates(target);
    if (!b) {
        JetTuple residue(target.size());
        TupleCoordinates spanned(basis);
        for (std::size_t i = 0; i < target.size(); ++i) {
            for (auto const& [m, c] : target[i].terms()) {
                JetTuple probe(target.size());
                probe[i] = JetPoly::term(m, 1);
                if (!spanned.coordinates(probe)) residue[i].add_term(m, c);
            }
        }
        throw DecompositionError("target has monomials outside the span", residue);
    }
    RationalMatrix A(coords.dimension(), RationalVector(basis.size(), 0));
    for (std::size_t k = 0; k < basis.size(); ++k) {
        auto col = *coords.coordinates(basis[k]);
        for (std::size_t r = 0; r < col.size(); ++r) A[r][k] = col[r];
    }
    auto x = solve(A, *b);
    if (!x) throw DecompositionError("target is not in the span", target);
    return *x;
}

} // namespace dlw
