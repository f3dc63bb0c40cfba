#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "celltransfer/polynomial.hpp"

namespace celltransfer {

enum class Basis { Monomial, MonomialQSym, FundamentalQSym, Schur };

const char* to_string(Basis b);

/// Coefficients in a basis, in elimination order (lexicographically
/// decreasing index), plus whatever the elimination could not absorb.
struct BasisExpansion {
  Basis basis = Basis::Monomial;
  int nvars = 1;
  std::vector<std::pair<std::vector<int>, BigInt>> coeffs;
  ExponentPolynomial residual;

  bool exact() const { return residual.is_zero(); }
  /// Exact and every coefficient nonnegative.
  bool positive() const;
  /// First negative coefficient, if any.
  std::optional<std::pair<std::vector<int>, BigInt>> negative_witness() const;
};

struct ExpandOptions {
  /// Caller's guarantee that every partition in the answer has at most this
  /// many parts. Lets symmetric expansions run with fewer variables than the
  /// degree, provided the bound does not exceed nvars.
  std::optional<int> length_bound;
};

/// m_λ: sum of all distinct rearrangements of λ.
ExponentPolynomial monomial_symmetric(const std::vector<int>& lambda, int nvars);
/// M_α: sum over increasing index placements of α.
ExponentPolynomial monomial_quasisymmetric(const std::vector<int>& alpha, int nvars);
/// L_α: sum of M_β over refinements β of α.
ExponentPolynomial fundamental_quasisymmetric(const std::vector<int>& alpha, int nvars);
/// s_λ as Σ K_{λ,κ} x^κ over all weak compositions κ.
ExponentPolynomial schur_polynomial(const std::vector<int>& lambda, int nvars);
/// Dominant part of s_λ only.
ExponentPolynomial schur_dominant(const std::vector<int>& lambda, int nvars);

/// Number of semistandard tableaux of shape λ with the given content.
BigInt kostka_number(const std::vector<int>& lambda, const std::vector<int>& content);

/// Greedy triangular elimination in the requested basis. Throws
/// TruncationTooSmall for Monomial and Schur when nvars < degree, unless
/// `length_bound` covers it.
BasisExpansion expand(const ExponentPolynomial& p, Basis basis, const ExpandOptions& options = {});

/// Schur expansion of a symmetric polynomial given only by its dominant part.
/// Same truncation rule as `expand`; the residual holds any dominant terms left over.
BasisExpansion expand_schur_dominant(const ExponentPolynomial& dominant,
                                     const ExpandOptions& options = {});

/// Σ coeffs · basis element + residual.
ExponentPolynomial reconstruct(const BasisExpansion& e);

/// Dominant part of p*q for symmetric p and q given by their dominant parts.
/// Coefficients of non-dominant exponents are read off by sorting.
ExponentPolynomial multiply_symmetric_dominant(const ExponentPolynomial& p_dominant,
                                               const ExponentPolynomial& q_dominant);

}  // namespace celltransfer
