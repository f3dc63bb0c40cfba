#include "celltransfer/poset.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <string>

namespace celltransfer {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidPoset: return "InvalidPoset";
    case ErrorCode::InvalidLabelling: return "InvalidLabelling";
    case ErrorCode::InvalidTableau: return "InvalidTableau";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::AmbiguousComparability: return "AmbiguousComparability";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::NotConvexInQuotient: return "NotConvexInQuotient";
    case ErrorCode::SubsetOutOfRange: return "SubsetOutOfRange";
    case ErrorCode::NotInImage: return "NotInImage";
    case ErrorCode::VarMismatch: return "VarMismatch";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::MalformedPartitions: return "MalformedPartitions";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::InternalConsistency: return "InternalConsistency";
  }
  return "Unknown";
}

namespace {

std::string edge_name(const Cover& c) {
  return "(" + std::to_string(c.lower) + "," + std::to_string(c.upper) + ")";
}

}  // namespace

Poset::Poset(int n, std::vector<Cover> covers) : n_(n), covers_(std::move(covers)) {
  if (n < 0 || n > kMaxElements) {
    throw Error(ErrorCode::BoundExceeded, "poset size " + std::to_string(n) + " outside 0.." +
                                              std::to_string(kMaxElements));
  }
  upper_covers_.assign(n, {});
  lower_covers_.assign(n, {});
  for (const Cover& c : covers_) {
    if (c.lower < 0 || c.lower >= n || c.upper < 0 || c.upper >= n) {
      throw Error(ErrorCode::InvalidPoset, "edge " + edge_name(c) + " references an unknown id");
    }
    if (c.lower == c.upper) throw Error(ErrorCode::InvalidPoset, "self loop " + edge_name(c));
    if (upper_covers_[c.lower].contains(c.upper)) {
      throw Error(ErrorCode::InvalidPoset, "duplicate edge " + edge_name(c));
    }
    upper_covers_[c.lower].insert(c.upper);
    lower_covers_[c.upper].insert(c.lower);
  }
  std::sort(covers_.begin(), covers_.end());

  // Kahn's algorithm; leftovers mean a directed cycle.
  std::vector<int> indegree(n);
  for (int i = 0; i < n; ++i) indegree[i] = lower_covers_[i].size();
  std::vector<ElementId> order;
  order.reserve(n);
  for (int i = 0; i < n; ++i)
    if (indegree[i] == 0) order.push_back(i);
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (ElementId t : upper_covers_[order[head]]) {
      if (--indegree[t] == 0) order.push_back(t);
    }
  }
  if (static_cast<int>(order.size()) != n) throw Error(ErrorCode::InvalidPoset, "edges contain a cycle");

  above_.assign(n, {});
  below_.assign(n, {});
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (ElementId t : upper_covers_[*it]) above_[*it] |= above_[t] | ElementSet::single(t);
  }
  for (ElementId s : order) {
    for (ElementId t : lower_covers_[s]) below_[s] |= below_[t] | ElementSet::single(t);
  }
  for (const Cover& c : covers_) {
    if (above_[c.lower].intersects(below_[c.upper])) {
      throw Error(ErrorCode::InvalidPoset, "edge " + edge_name(c) + " is not a covering relation");
    }
  }
}

ElementSet Poset::below_set(ElementSet q) const {
  ElementSet out;
  for (ElementId t : q) out |= below_[t];
  return out - q;
}

ElementSet Poset::above_set(ElementSet q) const {
  ElementSet out;
  for (ElementId t : q) out |= above_[t];
  return out - q;
}

Comparability Poset::classify(ElementId s, ElementSet q) const {
  if (q.contains(s)) return Comparability::Tilde;
  bool below = above_[s].intersects(q);
  bool above = below_[s].intersects(q);
  if (below && above) {
    throw Error(ErrorCode::AmbiguousComparability,
                "element " + std::to_string(s) + " lies both below and above the subposet");
  }
  if (below) return Comparability::Below;
  if (above) return Comparability::Above;
  return Comparability::Tilde;
}

bool Poset::is_convex(ElementSet members) const {
  if (!members.subset_of(elements())) return false;
  return (below_set(members) & above_set(members)).empty();
}

bool Poset::is_order_ideal(ElementSet members) const {
  if (!members.subset_of(elements())) return false;
  return below_set(members).empty();
}

ConvexSubposet Poset::convex(ElementSet members) const {
  if (!is_convex(members)) throw Error(ErrorCode::NotConvex, "member set is not convex");
  return ConvexSubposet(members);
}

OrderIdeal Poset::ideal(ElementSet members) const {
  if (!is_order_ideal(members)) throw Error(ErrorCode::NotAnIdeal, "member set is not an order ideal");
  return OrderIdeal(members);
}

std::vector<ElementId> Poset::linear_extension() const {
  std::vector<ElementId> out;
  ElementSet placed;
  while (out.size() < static_cast<std::size_t>(n_)) {
    for (ElementId i = 0; i < n_; ++i) {
      if (!placed.contains(i) && below_[i].subset_of(placed)) {
        out.push_back(i);
        placed.insert(i);
        break;
      }
    }
  }
  return out;
}

namespace {

// Both operands are classified against each other; ambiguity means corrupt input.
struct Classes {
  ElementSet below_q, above_q, below_r, above_r;
};

Classes classes(const Poset& p, ElementSet q, ElementSet r) {
  Classes c{p.below_set(q), p.above_set(q), p.below_set(r), p.above_set(r)};
  if (!(r & c.below_q & c.above_q).empty() || !(q & c.below_r & c.above_r).empty()) {
    throw Error(ErrorCode::AmbiguousComparability, "operand is not convex");
  }
  return c;
}

ConvexSubposet checked(const Poset& p, ElementSet s) {
  assert(p.is_convex(s));
  return p.convex(s);
}

}  // namespace

ConvexSubposet wedge(const Poset& p, const ConvexSubposet& q, const ConvexSubposet& r) {
  ElementSet qm = q.members(), rm = r.members();
  Classes c = classes(p, qm, rm);
  return checked(p, (rm & c.below_q) | (qm - c.above_r));
}

ConvexSubposet vee(const Poset& p, const ConvexSubposet& q, const ConvexSubposet& r) {
  ElementSet qm = q.members(), rm = r.members();
  Classes c = classes(p, qm, rm);
  return checked(p, (qm & c.above_r) | (rm - c.below_q));
}

ConvexSubposet wedge_prime(const Poset& p, const ConvexSubposet& q, const ConvexSubposet& r) {
  ElementSet qm = q.members(), rm = r.members();
  Classes c = classes(p, qm, rm);
  return checked(p, (rm & c.below_q) | (qm & rm) | (qm & c.below_r));
}

ConvexSubposet vee_prime(const Poset& p, const ConvexSubposet& q, const ConvexSubposet& r) {
  ElementSet qm = q.members(), rm = r.members();
  Classes c = classes(p, qm, rm);
  return checked(p, (qm - c.below_r) | (rm - c.below_q));
}

std::vector<OrderIdeal> ideals(const Poset& p, int max_elements) {
  if (p.size() > max_elements) {
    throw Error(ErrorCode::BoundExceeded, "ideal enumeration limited to " + std::to_string(max_elements) +
                                              " elements");
  }
  std::vector<ElementId> order = p.linear_extension();
  std::vector<OrderIdeal> out;
  ElementSet current;
  auto recurse = [&](auto& self, std::size_t k) -> void {
    if (k == order.size()) {
      out.push_back(p.ideal(current));
      return;
    }
    ElementId e = order[k];
    self(self, k + 1);
    if (p.strictly_below(e).subset_of(current)) {
      current.insert(e);
      self(self, k + 1);
      current.erase(e);
    }
  };
  recurse(recurse, 0);
  return out;
}

std::vector<ConvexSubposet> convex_subposets(const Poset& p, int max_elements) {
  std::vector<OrderIdeal> all = ideals(p, max_elements);
  std::set<ElementSet> seen;
  for (const OrderIdeal& outer : all) {
    for (const OrderIdeal& inner : all) {
      if (inner.members().subset_of(outer.members())) seen.insert(outer.members() - inner.members());
    }
  }
  std::vector<ConvexSubposet> out;
  out.reserve(seen.size());
  for (ElementSet s : seen) out.push_back(p.convex(s));
  return out;
}

Poset chain(int n) {
  std::vector<Cover> covers;
  for (int i = 0; i + 1 < n; ++i) covers.push_back({i, i + 1});
  return Poset(n, std::move(covers));
}

Poset antichain(int n) { return Poset(n, {}); }

Poset boolean_lattice(int m) {
  int n = 1 << m;
  std::vector<Cover> covers;
  for (int s = 0; s < n; ++s) {
    for (int b = 0; b < m; ++b) {
      if (!(s & (1 << b))) covers.push_back({s, s | (1 << b)});
    }
  }
  return Poset(n, std::move(covers));
}

}  // namespace celltransfer
