#pragma once

#include <set>
#include <utility>

#include "celltransfer/genfunc.hpp"
#include "celltransfer/shapes.hpp"
#include "celltransfer/transfer.hpp"

namespace celltransfer {

/// Four partitions with μ ⊆ λ and ρ ⊆ ν, zero padded to one common length k.
class SkewPair {
 public:
  /// Pads with zeros to the longest of the four; throws MalformedPartitions.
  SkewPair(Partition lam, Partition mu, Partition nu, Partition rho);

  const Partition& lam() const { return lam_; }
  const Partition& mu() const { return mu_; }
  const Partition& nu() const { return nu_; }
  const Partition& rho() const { return rho_; }
  int k() const { return static_cast<int>(lam_.size()); }

  SkewShape first() const { return SkewShape(lam_, mu_); }   // λ/μ
  SkewShape second() const { return SkewShape(nu_, rho_); }  // ν/ρ

 private:
  Partition lam_, mu_, nu_, rho_;
};

struct MinMaxShapes {
  SkewShape max_shape;
  SkewShape min_shape;
  /// Cells where the min shape and λ/μ ∧ ν/ρ differ.
  std::set<Cell> vset;
};

MinMaxShapes minmax(const SkewPair& sp);

/// Every cell of V taken from one shape is incomparable in N^2 with every
/// cell of the other shape.
bool vset_incomparability_check(const SkewPair& sp);

/// Everything skew_transfer needs for one pair, computed once.
struct SkewTransferPlan {
  explicit SkewTransferPlan(const SkewPair& sp);

  SkewPair pair;
  MinMaxShapes shapes;
  GridPoset grid;
  ConvexSubposet q;  // λ/μ
  ConvexSubposet r;  // ν/ρ
  ElementSet vee, wedge, max_members, min_members, vset;
};

/// U on λ/μ and T on ν/ρ (grid ids) to U′ on the max shape and T′ on the min
/// shape: transfer, then move the V cells across.
std::pair<Tableau, Tableau> skew_transfer(const SkewTransferPlan& plan, const Tableau& u, const Tableau& t);

/// Skew Schur polynomial through the Young labelling; cached per shape up to
/// translation.
ExponentPolynomial skew_schur(const SkewShape& shape, int nvars);

/// Number of nonempty rows.
int row_count(const SkewShape& shape);

/// Schur expansion of s_a s_b - s_c s_d. Works in as many variables as the
/// row counts require, so the coefficients are exact.
BasisExpansion schur_expand_difference(const SkewShape& a, const SkewShape& b, const SkewShape& c,
                                       const SkewShape& d);

/// s_max s_min - s_{λ/μ} s_{ν/ρ} in nvars variables. The Schur expansion, if
/// requested, comes from schur_expand_difference and so does not depend on nvars.
DifferenceReport skew_difference(const SkewPair& sp, int nvars, DifferenceOptions options = {});

}  // namespace celltransfer
