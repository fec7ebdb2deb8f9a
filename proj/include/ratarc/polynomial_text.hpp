#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ratarc/rational.hpp"

namespace ratarc {

using Exponent = std::vector<int>;

/// Graded lexicographic order, larger monomials first: X0^2 > X0*X1 > X1^2.
struct GradedLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

using RationalTerms = std::map<Exponent, BigRational, GradedLexGreater>;

/// Parses a sum of terms such as "3/2*x1^2*x2 - x2 + 1" over the given
/// variable names. Zero coefficients are dropped; repeated monomials merge.
RationalTerms parse_polynomial(std::string_view text, std::span<const std::string> variables);

std::string format_polynomial(const RationalTerms& terms, std::span<const std::string> variables);

/// "X0".."Xn" for sections on P^n.
std::vector<std::string> homogeneous_variables(int n);
/// "x1".."xN" for affine fields.
std::vector<std::string> affine_variables(int N);

}  // namespace ratarc
