#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "chipfire/matrix.hpp"

namespace chipfire {

/// Smith normal form with its certificate: U * M * V == S.
struct SNFResult {
    IntegerMatrix S;
    IntegerMatrix U;
    IntegerMatrix V;
    std::vector<BigInt> diag;  // s_1 .. s_min(rows, cols)

    /// Number of nonzero diagonal entries.
    std::size_t rank() const;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const IntegerMatrix& m);

/// Rank over the rationals, also fraction-free.
std::size_t rank(const IntegerMatrix& m);

/// Smith normal form. The pivot is the entry of smallest nonzero absolute
/// value in the working block, ties broken by lowest (row, col). The
/// diagonal is nonnegative with s_i | s_{i+1}; zeros come last.
SNFResult smith_normal_form(const IntegerMatrix& m);

/// Diagonal of the Smith normal form only; skips the U, V bookkeeping.
std::vector<BigInt> smith_diagonal(const IntegerMatrix& m);

/// gcd of all i x i minors (0 if all vanish). Brute force; limited to
/// min(rows, cols) <= 8.
BigInt minors_gcd(const IntegerMatrix& m, std::size_t i);

/// Basis of the rational kernel. Each vector is scaled to a primitive
/// integer vector whose first nonzero entry is positive.
std::vector<RationalVector> rational_null_space(const IntegerMatrix& m);

/// Some integer x with m * x == b, or nullopt when no integer solution exists.
std::optional<std::vector<BigInt>> solve_integer(const IntegerMatrix& m,
                                                 const std::vector<BigInt>& b);

/// Exact solution of a nonsingular square system over the rationals.
RationalVector solve_rational(const IntegerMatrix& m, const std::vector<BigInt>& b);

/// det(t I - M).
BigInt eval_charpoly(const IntegerMatrix& m, const BigInt& t);

}  // namespace chipfire
