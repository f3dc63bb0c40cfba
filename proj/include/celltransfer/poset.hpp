#pragma once

#include <vector>

#include "celltransfer/element_set.hpp"
#include "celltransfer/error.hpp"

namespace celltransfer {

/// A Hasse-diagram edge: `lower` is covered by `upper`.
struct Cover {
  ElementId lower = 0;
  ElementId upper = 0;
  bool operator==(const Cover&) const = default;
  auto operator<=>(const Cover&) const = default;
};

enum class Comparability { Below, Above, Tilde };

class ConvexSubposet;
class OrderIdeal;

/// Finite poset on dense ids 0..n-1, given by its covering relations.
///
/// The constructor rejects anything that is not already a Hasse diagram:
/// duplicate edges, cycles, and edges implied by longer chains. The strict
/// order is precomputed as one bitmask row per element.
class Poset {
 public:
  static constexpr int kMaxElements = ElementSet::kCapacity;

  Poset() = default;
  Poset(int n, std::vector<Cover> covers);

  int size() const { return n_; }
  ElementSet elements() const { return ElementSet::first(n_); }
  const std::vector<Cover>& covers() const { return covers_; }

  bool less(ElementId a, ElementId b) const { return above_[a].contains(b); }
  bool less_equal(ElementId a, ElementId b) const { return a == b || less(a, b); }
  bool comparable(ElementId a, ElementId b) const { return less_equal(a, b) || less(b, a); }
  bool is_cover(ElementId lower, ElementId upper) const { return upper_covers_[lower].contains(upper); }

  ElementSet strictly_above(ElementId id) const { return above_[id]; }
  ElementSet strictly_below(ElementId id) const { return below_[id]; }
  ElementSet upper_covers(ElementId id) const { return upper_covers_[id]; }
  ElementSet lower_covers(ElementId id) const { return lower_covers_[id]; }

  /// Elements not in `q` lying strictly below some element of `q`.
  ElementSet below_set(ElementSet q) const;
  /// Elements not in `q` lying strictly above some element of `q`.
  ElementSet above_set(ElementSet q) const;

  Comparability classify(ElementId s, ElementSet q) const;

  bool is_convex(ElementSet members) const;
  bool is_order_ideal(ElementSet members) const;

  ConvexSubposet convex(ElementSet members) const;
  OrderIdeal ideal(ElementSet members) const;

  /// Ids in an order compatible with the poset (smaller ids first among ties).
  std::vector<ElementId> linear_extension() const;

  bool operator==(const Poset& other) const { return n_ == other.n_ && covers_ == other.covers_; }

 private:
  int n_ = 0;
  std::vector<Cover> covers_;  // sorted
  std::vector<ElementSet> above_, below_, upper_covers_, lower_covers_;
};

/// A member set certified convex in the poset it was built from.
class ConvexSubposet {
 public:
  ConvexSubposet() = default;
  ElementSet members() const { return members_; }
  bool contains(ElementId id) const { return members_.contains(id); }
  int size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool operator==(const ConvexSubposet&) const = default;
  auto operator<=>(const ConvexSubposet&) const = default;

 private:
  friend class Poset;
  friend class OrderIdeal;
  explicit ConvexSubposet(ElementSet members) : members_(members) {}
  ElementSet members_;
};

/// A down-closed member set. Every order ideal is convex.
class OrderIdeal {
 public:
  OrderIdeal() = default;
  ElementSet members() const { return members_; }
  ConvexSubposet as_convex() const { return ConvexSubposet(members_); }
  bool operator==(const OrderIdeal&) const = default;
  auto operator<=>(const OrderIdeal&) const = default;

 private:
  friend class Poset;
  explicit OrderIdeal(ElementSet members) : members_(members) {}
  ElementSet members_;
};

ConvexSubposet wedge(const Poset& p, const ConvexSubposet& q, const ConvexSubposet& r);
ConvexSubposet vee(const Poset& p, const ConvexSubposet& q, const ConvexSubposet& r);
ConvexSubposet wedge_prime(const Poset& p, const ConvexSubposet& q, const ConvexSubposet& r);
ConvexSubposet vee_prime(const Poset& p, const ConvexSubposet& q, const ConvexSubposet& r);

/// All order ideals, in the order produced by include/exclude branching over
/// a linear extension. Throws BoundExceeded above `max_elements`.
std::vector<OrderIdeal> ideals(const Poset& p, int max_elements = 20);

/// All convex subposets (including the empty one), sorted by bitmask.
std::vector<ConvexSubposet> convex_subposets(const Poset& p, int max_elements = 20);

Poset chain(int n);
Poset antichain(int n);
/// Boolean lattice of subsets of an m-set; element ids are the subset bitmasks.
Poset boolean_lattice(int m);

}  // namespace celltransfer
