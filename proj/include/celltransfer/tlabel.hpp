#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "celltransfer/poset.hpp"

namespace celltransfer {

/// Label values live in Z together with a +infinity sentinel.
using LabelValue = std::int64_t;
inline constexpr LabelValue kInfinity = std::numeric_limits<LabelValue>::max();

/// A weakly increasing map from positive integers to Z ∪ {+inf}.
///
/// `Weak` is x -> x and `Strict` is x -> x - 1. A `Table` is tabulated on
/// 1..table.size() only; tableau entries never exceed that cap.
class StepFunction {
 public:
  enum class Kind { Weak, Strict, Table };

  static StepFunction weak() { return StepFunction(Kind::Weak, {}); }
  static StepFunction strict() { return StepFunction(Kind::Strict, {}); }
  static StepFunction table(std::vector<LabelValue> values);

  Kind kind() const { return kind_; }
  std::span<const LabelValue> values() const { return values_; }

  LabelValue operator()(int x) const;

  /// Smallest x in 1..cap with f(x) >= v, or cap + 1 if there is none.
  int min_preimage(LabelValue v, int cap) const;

  bool operator==(const StepFunction&) const = default;

 private:
  StepFunction(Kind kind, std::vector<LabelValue> values) : kind_(kind), values_(std::move(values)) {}
  Kind kind_;
  std::vector<LabelValue> values_;
};

/// A poset whose every Hasse edge carries a StepFunction.
class TLabelledPoset {
 public:
  TLabelledPoset() = default;
  /// `labels[i]` labels `poset.covers()[i]`.
  TLabelledPoset(Poset poset, std::vector<StepFunction> labels);
  /// Builds from explicit (edge, function) pairs; every cover needs exactly one.
  static TLabelledPoset from_edges(Poset poset, const std::vector<std::pair<Cover, StepFunction>>& edges);

  const Poset& poset() const { return poset_; }
  int size() const { return poset_.size(); }
  const std::vector<StepFunction>& labels() const { return labels_; }

  const StepFunction& label(ElementId lower, ElementId upper) const;

  /// True iff every edge is Weak or Strict.
  bool oriented() const;

 private:
  Poset poset_;
  std::vector<StepFunction> labels_;
  std::vector<int> index_;  // n*n lookup into labels_, -1 off the Hasse diagram
};

/// An induced labelled subposet with dense ids, plus the id it had in the parent.
struct Restriction {
  TLabelledPoset labelled;
  std::vector<ElementId> parent_id;
};

Restriction restrict(const TLabelledPoset& lp, const ConvexSubposet& q);
/// Convexity is checked; throws NotConvex.
Restriction restrict(const TLabelledPoset& lp, ElementSet members);

/// Weak on ω(s) <= ω(t), Strict otherwise. `omega[id]` ranges over 1..n.
TLabelledPoset pomega_labelling(const Poset& p, const std::vector<int>& omega);

}  // namespace celltransfer
