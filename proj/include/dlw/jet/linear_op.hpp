#pragma once

#include "dlw/jet/euler.hpp"
#include "dlw/jet/poly.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dlw {

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Matrix of scalar differential operators. Entry (i,j) is a sum of
/// coeff * D_x^a D_t^b keyed by (a, b).
class LinearDiffOp {
public:
    using Orders = std::pair<int, int>;
    using Entry = std::map<Orders, JetPoly>;

    LinearDiffOp() = default;
    LinearDiffOp(std::size_t rows, std::size_t cols)
      : rows_(rows)
      , cols_(cols)
      , entries_(rows * cols)
    {}

    static LinearDiffOp identity(std::size_t n)
    {
        LinearDiffOp op(n, n);
        for (std::size_t i = 0; i < n; ++i) op.add(i, i, 1, 0, 0);
        return op;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Entry const& entry(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }

    /// Adds coeff * D_x^a D_t^b to entry (i,j).
    LinearDiffOp& add(std::size_t i, std::size_t j, JetPoly const& coeff, int a, int b)
    {
        if (coeff.is_zero()) return *this;
        Entry& e = entries_.at(i * cols_ + j);
        JetPoly& slot = e[{a, b}];
        slot += coeff;
        if (slot.is_zero()) e.erase({a, b});
        return *this;
    }

    bool is_zero() const
    {
        for (auto const& e : entries_) {
            if (!e.empty()) return false;
        }
        return true;
    }

    friend bool operator==(LinearDiffOp const&, LinearDiffOp const&) = default;

    friend LinearDiffOp operator+(LinearDiffOp a, LinearDiffOp const& b)
    {
        a.check_same_shape(b);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t j = 0; j < a.cols_; ++j) {
                for (auto const& [ord, c] : b.entry(i, j)) a.add(i, j, c, ord.first, ord.second);
            }
        }
        return a;
    }

    friend LinearDiffOp operator*(Rational const& s, LinearDiffOp a)
    {
        for (auto& e : a.entries_) {
            for (auto& [ord, c] : e) c *= s;
            if (s == 0) e.clear();
        }
        return a;
    }

    friend LinearDiffOp operator-(LinearDiffOp a) { return Rational(-1) * std::move(a); }
    friend LinearDiffOp operator-(LinearDiffOp a, LinearDiffOp const& b) { return std::move(a) + (-b); }

private:
    void check_same_shape(LinearDiffOp const& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("operator shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Entry> entries_;
};

inline JetTuple apply_op(LinearDiffOp const& op, JetTuple const& w)
{
    if (w.size() != op.cols()) {
        throw DimensionError("operator has " + std::to_string(op.cols()) + " columns, tuple has " +
                             std::to_string(w.size()) + " entries");
    }
    JetTuple out(op.rows());
    for (std::size_t i = 0; i < op.rows(); ++i) {
        for (std::size_t j = 0; j < op.cols(); ++j) {
            if (w[j].is_zero()) continue;
            for (auto const& [ord, c] : op.entry(i, j)) out[i] += c * total_derivative(w[j], ord.first, ord.second);
        }
    }
    return out;
}

namespace detail {

inline Rational binomial(int n, int k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

// D_x^a D_t^b composed with multiplication by c, expanded as sum of coeff * D^(k,l).
inline void add_leibniz(LinearDiffOp& out, std::size_t i, std::size_t j, Rational const& scale, JetPoly const& c,
                        int a, int b, int shift_a, int shift_b)
{
    for (int k = 0; k <= a; ++k) {
        for (int l = 0; l <= b; ++l) {
            JetPoly dc = total_derivative(c, a - k, b - l);
            if (dc.is_zero()) continue;
            out.add(i, j, dc * (scale * binomial(a, k) * binomial(b, l)), k + shift_a, l + shift_b);
        }
    }
}

} // namespace detail

/// Formal adjoint: (c D^(a,b))* = (-D)^(a,b) o c, transposed.
inline LinearDiffOp formal_adjoint(LinearDiffOp const& op)
{
    LinearDiffOp out(op.cols(), op.rows());
    for (std::size_t i = 0; i < op.rows(); ++i) {
        for (std::size_t j = 0; j < op.cols(); ++j) {
            for (auto const& [ord, c] : op.entry(i, j)) {
                auto [a, b] = ord;
                Rational sign = (a + b) % 2 == 0 ? 1 : -1;
                detail::add_leibniz(out, j, i, sign, c, a, b, 0, 0);
            }
        }
    }
    return out;
}

/// A o B.
inline LinearDiffOp compose(LinearDiffOp const& A, LinearDiffOp const& B)
{
    if (A.cols() != B.rows()) throw DimensionError("cannot compose operators of incompatible shape");
    LinearDiffOp out(A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) {
            for (std::size_t k = 0; k < B.cols(); ++k) {
                for (auto const& [oa, ca] : A.entry(i, j)) {
                    for (auto const& [ob, cb] : B.entry(j, k)) {
                        LinearDiffOp piece(A.rows(), B.cols());
                        detail::add_leibniz(piece, i, k, 1, cb, oa.first, oa.second, ob.first, ob.second);
                        for (auto const& [ord, c] : piece.entry(i, k)) out.add(i, k, ca * c, ord.first, ord.second);
                    }
                }
            }
        }
    }
    return out;
}

/// Frechet derivative of F with respect to deps as an operator.
inline LinearDiffOp linearization(JetTuple const& F, std::vector<int> const& deps)
{
    LinearDiffOp op(F.size(), deps.size());
    for (std::size_t i = 0; i < F.size(); ++i) {
        for (auto const& var : jet_vars(F[i])) {
            for (std::size_t j = 0; j < deps.size(); ++j) {
                if (var.dep == deps[j]) op.add(i, j, partial(F[i], var), var.dx, var.dt);
            }
        }
    }
    return op;
}

/// Substitutes every coefficient of op through `fn`.
template <typename Fn>
LinearDiffOp map_coefficients(LinearDiffOp const& op, Fn&& fn)
{
    LinearDiffOp out(op.rows(), op.cols());
    for (std::size_t i = 0; i < op.rows(); ++i) {
        for (std::size_t j = 0; j < op.cols(); ++j) {
            for (auto const& [ord, c] : op.entry(i, j)) out.add(i, j, fn(c), ord.first, ord.second);
        }
    }
    return out;
}

} // namespace dlw
