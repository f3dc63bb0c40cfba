#include "celltransfer/tlabel.hpp"

#include <algorithm>
#include <string>

namespace celltransfer {

StepFunction StepFunction::table(std::vector<LabelValue> values) {
  if (values.empty()) throw Error(ErrorCode::InvalidLabelling, "table must cover at least the entry 1");
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] < values[i - 1]) {
      throw Error(ErrorCode::InvalidLabelling, "table is not weakly increasing at entry " + std::to_string(i + 1));
    }
  }
  return StepFunction(Kind::Table, std::move(values));
}

LabelValue StepFunction::operator()(int x) const {
  switch (kind_) {
    case Kind::Weak: return x;
    case Kind::Strict: return x - 1;
    case Kind::Table:
      if (x < 1 || x > static_cast<int>(values_.size())) {
        throw Error(ErrorCode::BoundExceeded, "label table evaluated at " + std::to_string(x) +
                                                  " beyond its cap " + std::to_string(values_.size()));
      }
      return values_[x - 1];
  }
  return kInfinity;
}

int StepFunction::min_preimage(LabelValue v, int cap) const {
  switch (kind_) {
    case Kind::Weak: return static_cast<int>(std::clamp<LabelValue>(v, 1, cap + 1));
    case Kind::Strict: return static_cast<int>(std::clamp<LabelValue>(v + 1, 1, cap + 1));
    case Kind::Table: {
      int limit = std::min<int>(cap, static_cast<int>(values_.size()));
      auto it = std::lower_bound(values_.begin(), values_.begin() + limit, v);
      int x = static_cast<int>(it - values_.begin()) + 1;
      return x > limit ? cap + 1 : x;
    }
  }
  return cap + 1;
}

TLabelledPoset::TLabelledPoset(Poset poset, std::vector<StepFunction> labels)
    : poset_(std::move(poset)), labels_(std::move(labels)) {
  if (labels_.size() != poset_.covers().size()) {
    throw Error(ErrorCode::InvalidLabelling, "expected " + std::to_string(poset_.covers().size()) +
                                                 " labels, got " + std::to_string(labels_.size()));
  }
  int n = poset_.size();
  index_.assign(static_cast<std::size_t>(n) * n, -1);
  for (std::size_t i = 0; i < poset_.covers().size(); ++i) {
    const Cover& c = poset_.covers()[i];
    index_[c.lower * n + c.upper] = static_cast<int>(i);
  }
}

TLabelledPoset TLabelledPoset::from_edges(Poset poset, const std::vector<std::pair<Cover, StepFunction>>& edges) {
  std::vector<std::optional<StepFunction>> slots(poset.covers().size());
  for (const auto& [edge, fn] : edges) {
    auto it = std::lower_bound(poset.covers().begin(), poset.covers().end(), edge);
    if (it == poset.covers().end() || *it != edge) {
      throw Error(ErrorCode::InvalidLabelling, "label on non-cover (" + std::to_string(edge.lower) + "," +
                                                   std::to_string(edge.upper) + ")");
    }
    auto& slot = slots[it - poset.covers().begin()];
    if (slot) {
      throw Error(ErrorCode::InvalidLabelling, "edge (" + std::to_string(edge.lower) + "," +
                                                   std::to_string(edge.upper) + ") labelled twice");
    }
    slot = fn;
  }
  std::vector<StepFunction> labels;
  labels.reserve(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) {
      const Cover& c = poset.covers()[i];
      throw Error(ErrorCode::InvalidLabelling, "edge (" + std::to_string(c.lower) + "," +
                                                   std::to_string(c.upper) + ") has no label");
    }
    labels.push_back(*slots[i]);
  }
  return TLabelledPoset(std::move(poset), std::move(labels));
}

const StepFunction& TLabelledPoset::label(ElementId lower, ElementId upper) const {
  int n = poset_.size();
  int idx = (lower >= 0 && lower < n && upper >= 0 && upper < n) ? index_[lower * n + upper] : -1;
  if (idx < 0) {
    throw Error(ErrorCode::InvalidLabelling, "(" + std::to_string(lower) + "," + std::to_string(upper) +
                                                 ") is not a Hasse edge");
  }
  return labels_[idx];
}

bool TLabelledPoset::oriented() const {
  return std::all_of(labels_.begin(), labels_.end(),
                     [](const StepFunction& f) { return f.kind() != StepFunction::Kind::Table; });
}

Restriction restrict(const TLabelledPoset& lp, const ConvexSubposet& q) {
  Restriction out;
  out.parent_id = q.members().to_vector();
  std::vector<int> local(lp.size(), -1);
  for (std::size_t i = 0; i < out.parent_id.size(); ++i) local[out.parent_id[i]] = static_cast<int>(i);
  std::vector<Cover> covers;
  std::vector<std::pair<Cover, StepFunction>> edges;
  for (std::size_t i = 0; i < lp.poset().covers().size(); ++i) {
    const Cover& c = lp.poset().covers()[i];
    if (q.contains(c.lower) && q.contains(c.upper)) {
      Cover mapped{local[c.lower], local[c.upper]};
      covers.push_back(mapped);
      edges.emplace_back(mapped, lp.labels()[i]);
    }
  }
  Poset sub(static_cast<int>(out.parent_id.size()), std::move(covers));
  out.labelled = TLabelledPoset::from_edges(std::move(sub), edges);
  return out;
}

Restriction restrict(const TLabelledPoset& lp, ElementSet members) {
  return restrict(lp, lp.poset().convex(members));
}

TLabelledPoset pomega_labelling(const Poset& p, const std::vector<int>& omega) {
  int n = p.size();
  if (static_cast<int>(omega.size()) != n) {
    throw Error(ErrorCode::NotBijective, "labelling has " + std::to_string(omega.size()) + " values for " +
                                             std::to_string(n) + " elements");
  }
  std::vector<bool> used(n + 1, false);
  for (int w : omega) {
    if (w < 1 || w > n || used[w]) throw Error(ErrorCode::NotBijective, "labelling is not a bijection onto 1..n");
    used[w] = true;
  }
  std::vector<StepFunction> labels;
  for (const Cover& c : p.covers()) {
    labels.push_back(omega[c.lower] <= omega[c.upper] ? StepFunction::weak() : StepFunction::strict());
  }
  return TLabelledPoset(p, std::move(labels));
}

}  // namespace celltransfer
