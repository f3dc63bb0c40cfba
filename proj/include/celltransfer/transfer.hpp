#pragma once

#include <utility>
#include <vector>

#include "celltransfer/tableau.hpp"

namespace celltransfer {

/// Which pair of target subposets a transfer fills: Q∧R / Q∨R for convex
/// operands, or Q∧′R / Q∨′R (the order-ideal lattice meet and join).
enum class PairRule { Convex, OrderIdeal };

/// A labelled poset, two convex subposets Q and R, and tableaux ω on Q, σ on R.
///
/// Holds a reference to the labelled poset; the caller keeps it alive.
class TransferContext {
 public:
  TransferContext(const TLabelledPoset& lp, ConvexSubposet q, ConvexSubposet r, Tableau omega, Tableau sigma,
                  PairRule rule = PairRule::Convex);

  const TLabelledPoset& labelled() const { return *lp_; }
  const Poset& poset() const { return lp_->poset(); }
  const ConvexSubposet& q() const { return q_; }
  const ConvexSubposet& r() const { return r_; }
  const Tableau& omega() const { return omega_; }
  const Tableau& sigma() const { return sigma_; }
  PairRule rule() const { return rule_; }

  ElementSet overlap() const { return q_.members() & r_.members(); }
  /// Domain of the first output: Q∧R (or Q∧′R).
  ElementSet meet_domain() const { return meet_; }
  /// Domain of the second output: Q∨R (or Q∨′R).
  ElementSet join_domain() const { return join_; }

 private:
  const TLabelledPoset* lp_;
  ConvexSubposet q_, r_;
  Tableau omega_, sigma_;
  PairRule rule_;
  ElementSet meet_, join_;
};

ElementSet meet_domain(const Poset& p, const ConvexSubposet& q, const ConvexSubposet& r, PairRule rule);
ElementSet join_domain(const Poset& p, const ConvexSubposet& q, const ConvexSubposet& r, PairRule rule);

/// The candidate sets of a transfer. Invariant:
/// s_diamond ⊆ s_star = bd_q_plus ∪ bd_r_plus ⊆ plus ⊆ Q∩R.
struct TransferSets {
  ElementSet plus;       // x in Q∩R with ω(x) < σ(x)
  ElementSet bd_q;       // x in Q∩R covered by some y in Q \ R
  ElementSet bd_r;       // x in Q∩R covering some y in R \ Q
  ElementSet bd_q_plus;  // components of `plus` meeting bd_q
  ElementSet bd_r_plus;  // components of `plus` meeting bd_r
  ElementSet s_star;
  ElementSet s_diamond;  // minimal transferrable set
};

struct TableauPair {
  Tableau alpha;  // on the meet domain
  Tableau beta;   // on the join domain
  bool operator==(const TableauPair&) const = default;
};

struct TransferRound {
  ElementSet critical;
  // Glued tableaux at the start of the round; filled only when recording.
  Tableau meet_state;
  Tableau join_state;
};

struct TransferResult {
  Tableau alpha;
  Tableau beta;
  ElementSet transferred;
  int iterations = 0;
  std::vector<TransferRound> rounds;
};

TransferSets compute_sets(const TransferContext& ctx);

/// Glues ω and σ, taking σ on R \ Q and on S for the meet side and ω on
/// Q \ R and on S for the join side. Outputs need not respect the labels.
TableauPair apply_subset(const TransferContext& ctx, ElementSet s);

/// Both outputs of apply_subset respect the labelling. S must lie in S*.
bool is_transferrable(const TransferContext& ctx, ElementSet s);

/// Minimal transferrable set by exhaustive search over subsets of S*.
/// Cross-checks that the first hit by cardinality is the intersection of all
/// transferrable sets.
ElementSet sdiamond_oracle(const TransferContext& ctx, int max_candidates = 20);

/// Iterative transfer: glue, then repeatedly swap every critical cell of Q∩R
/// not swapped before, until a round finds none.
TransferResult run_algorithm(const TransferContext& ctx, bool record_states = false);

/// The cell transfer injection.
inline TransferResult eta(const TransferContext& ctx) { return run_algorithm(ctx); }

/// Transfers all of S*; weight preserving and label respecting, not injective.
TableauPair eta_star(const TransferContext& ctx);

/// Inverse of eta: recovers (ω, σ) from an image pair. Throws NotInImage when
/// the pair has no preimage.
std::pair<Tableau, Tableau> mu(const TLabelledPoset& lp, const ConvexSubposet& q, const ConvexSubposet& r,
                               const Tableau& alpha, const Tableau& beta, PairRule rule = PairRule::Convex);

/// Transfer between order ideals into I∧′J and I∨′J. Throws NotAnIdeal.
TransferResult eta_prime(const TLabelledPoset& lp, ElementSet i, ElementSet j, const Tableau& omega,
                         const Tableau& sigma);

}  // namespace celltransfer
