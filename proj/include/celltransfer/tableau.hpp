#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <optional>
#include <string>
#include <vector>

#include "celltransfer/tlabel.hpp"

namespace celltransfer {

/// Entry cap and size limits for exhaustive enumeration.
struct EnumerationLimits {
  int max_elements = 16;
  int max_entry = 9;
};

/// A map from a subset of poset elements to positive integers.
///
/// Values are addressed by ambient element id, so tableaux on different
/// subposets of one poset can be glued and compared directly.
class Tableau {
 public:
  static constexpr int kMaxValue = 255;

  Tableau() = default;
  explicit Tableau(ElementSet domain) : domain_(domain) {}

  ElementSet domain() const { return domain_; }
  int at(ElementId id) const { return values_[id]; }
  void set(ElementId id, int value) { values_[id] = static_cast<std::uint8_t>(value); }

  /// Same values, domain cut down to `subset`.
  Tableau restricted(ElementSet subset) const;

  bool operator==(const Tableau& other) const;

  std::size_t hash() const;

 private:
  ElementSet domain_;
  std::array<std::uint8_t, ElementSet::kCapacity> values_{};
};

/// Checks σ(s) <= O(s,t)(σ(t)) on every cover with both ends in the domain.
bool respects(const TLabelledPoset& lp, const Tableau& t);
/// First violated cover, if any.
std::optional<Cover> first_violation(const TLabelledPoset& lp, const Tableau& t);

using Weight = std::vector<int>;

Weight weight(const Tableau& t, int ncap);

void check_enumeration_bounds(const TLabelledPoset& lp, ElementSet domain, int ncap, const EnumerationLimits& limits);

namespace detail {

// Backtracking over ids in increasing order, so output is lexicographic in
// the value vector. Each new entry is bounded by its already assigned
// neighbours through the edge labels.
template <typename Visit>
void enumerate_tableaux(const TLabelledPoset& lp, ElementSet domain, int ncap, Visit&& visit) {
  const Poset& p = lp.poset();
  std::vector<ElementId> order = domain.to_vector();
  struct Bound {
    ElementId other;
    const StepFunction* fn;
    bool other_is_upper;
  };
  std::vector<std::vector<Bound>> bounds(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    ElementId e = order[k];
    for (ElementId s : p.lower_covers(e) & domain) {
      if (s < e) bounds[k].push_back({s, &lp.label(s, e), false});
    }
    for (ElementId t : p.upper_covers(e) & domain) {
      if (t < e) bounds[k].push_back({t, &lp.label(e, t), true});
    }
  }
  Tableau current(domain);
  auto recurse = [&](auto& self, std::size_t k) -> void {
    if (k == order.size()) {
      visit(static_cast<const Tableau&>(current));
      return;
    }
    int lo = 1;
    int hi = ncap;
    for (const Bound& b : bounds[k]) {
      int v = current.at(b.other);
      if (b.other_is_upper) {
        // e < other: value(e) <= f(value(other))
        LabelValue cap = (*b.fn)(v);
        if (cap < hi) hi = cap < 0 ? 0 : static_cast<int>(cap);
      } else {
        // other < e: value(other) <= f(value(e))
        lo = std::max(lo, b.fn->min_preimage(v, ncap));
      }
    }
    for (int x = lo; x <= hi; ++x) {
      current.set(order[k], x);
      self(self, k + 1);
    }
    current.set(order[k], 0);
  };
  recurse(recurse, 0);
}

}  // namespace detail

/// Calls `visit` on each tableau of the induced subposet on `domain` with
/// entries in 1..ncap, in lexicographic order of values by element id.
template <typename Visit>
void for_each_tableau(const TLabelledPoset& lp, ElementSet domain, int ncap, Visit&& visit,
                      const EnumerationLimits& limits = {}) {
  check_enumeration_bounds(lp, domain, ncap, limits);
  detail::enumerate_tableaux(lp, domain, ncap, visit);
}

std::vector<Tableau> enumerate(const TLabelledPoset& lp, ElementSet domain, int ncap,
                               const EnumerationLimits& limits = {});
std::vector<Tableau> enumerate(const TLabelledPoset& lp, int ncap, const EnumerationLimits& limits = {});

}  // namespace celltransfer

template <>
struct std::hash<celltransfer::Tableau> {
  std::size_t operator()(const celltransfer::Tableau& t) const noexcept { return t.hash(); }
};
