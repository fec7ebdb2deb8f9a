#pragma once

#include <vector>

#include "ratarc/rational.hpp"

namespace ratarc {

using IntVector = std::vector<BigInt>;
using IntMatrix = std::vector<IntVector>;  // row-major

/// Basis of the integer kernel {c in Z^N : A c = 0} as a saturated lattice,
/// by unimodular column elimination A U = [H | 0]: the columns of U paired with
/// the zero block span the kernel lattice exactly.
std::vector<IntVector> integer_kernel(const IntMatrix& A, std::size_t columns);

/// Kernel basis of a rational matrix from its reduced row echelon form, each
/// vector scaled to a primitive integer vector. Spans a full-rank sublattice of
/// the kernel lattice, not necessarily the saturation.
std::vector<IntVector> rational_kernel(const std::vector<std::vector<BigRational>>& A, std::size_t columns);

/// Rank of a rational matrix.
std::size_t rational_rank(const std::vector<std::vector<BigRational>>& A, std::size_t columns);

/// Integral LLL reduction with delta = 99/100 of linearly independent vectors.
std::vector<IntVector> lll_reduce(std::vector<IntVector> basis);

BigInt dot(const IntVector& a, const IntVector& b);
BigInt max_abs(const IntVector& v);
/// Divides by the gcd of the entries and makes the first nonzero entry positive.
IntVector primitive(IntVector v);

}  // namespace ratarc
