#pragma once

#include <optional>

#include "celltransfer/symmetric.hpp"
#include "celltransfer/tableau.hpp"

namespace celltransfer {

/// Generating function of the tableaux on `domain` with entries at most ncap,
/// truncated to ncap variables.
ExponentPolynomial kfunc(const TLabelledPoset& lp, ElementSet domain, int ncap, const EnumerationLimits& limits = {});
ExponentPolynomial kfunc(const TLabelledPoset& lp, int ncap, const EnumerationLimits& limits = {});

struct DifferenceOptions {
  /// Attempt a Schur expansion when the difference is symmetric.
  bool schur = true;
  ExpandOptions expand;
  EnumerationLimits limits;
};

struct DifferenceReport {
  ExponentPolynomial difference;
  PositivityVerdict monomial;
  bool symmetric = false;
  bool quasisymmetric = false;
  /// Present when the difference is symmetric, a Schur expansion was
  /// requested, and the truncation allows one.
  std::optional<BasisExpansion> schur;

  std::optional<bool> schur_positive() const {
    if (!schur) return std::nullopt;
    return schur->positive();
  }
};

DifferenceReport analyze_difference(const ExponentPolynomial& difference, const DifferenceOptions& options = {});

/// K(Q∧R) K(Q∨R) - K(Q) K(R).
DifferenceReport cell_transfer_difference(const TLabelledPoset& lp, const ConvexSubposet& q, const ConvexSubposet& r,
                                          int ncap, const DifferenceOptions& options = {});

/// K(I∧′J) K(I∨′J) - K(I) K(J) for order ideals.
DifferenceReport ideal_difference(const TLabelledPoset& lp, const OrderIdeal& i, const OrderIdeal& j, int ncap,
                                  const DifferenceOptions& options = {});

/// Whether every label is the weak or the strict step.
bool oriented_check(const TLabelledPoset& lp);

}  // namespace celltransfer
