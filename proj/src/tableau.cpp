#include "celltransfer/tableau.hpp"

#include <string>

namespace celltransfer {

Tableau Tableau::restricted(ElementSet subset) const {
  Tableau out(domain_ & subset);
  for (ElementId e : out.domain_) out.values_[e] = values_[e];
  return out;
}

bool Tableau::operator==(const Tableau& other) const {
  if (domain_ != other.domain_) return false;
  for (ElementId e : domain_) {
    if (values_[e] != other.values_[e]) return false;
  }
  return true;
}

std::size_t Tableau::hash() const {
  std::uint64_t h = domain_.bits() * 0x9E3779B97F4A7C15ULL;
  for (ElementId e : domain_) h = (h ^ values_[e]) * 0x100000001B3ULL;
  return static_cast<std::size_t>(h);
}

std::optional<Cover> first_violation(const TLabelledPoset& lp, const Tableau& t) {
  const auto& covers = lp.poset().covers();
  ElementSet d = t.domain();
  for (std::size_t i = 0; i < covers.size(); ++i) {
    const Cover& c = covers[i];
    if (!d.contains(c.lower) || !d.contains(c.upper)) continue;
    if (t.at(c.lower) > lp.labels()[i](t.at(c.upper))) return c;
  }
  return std::nullopt;
}

bool respects(const TLabelledPoset& lp, const Tableau& t) { return !first_violation(lp, t).has_value(); }

Weight weight(const Tableau& t, int ncap) {
  Weight w(ncap, 0);
  for (ElementId e : t.domain()) {
    int v = t.at(e);
    if (v < 1 || v > ncap) {
      throw Error(ErrorCode::BoundExceeded, "entry " + std::to_string(v) + " outside 1.." + std::to_string(ncap));
    }
    ++w[v - 1];
  }
  return w;
}

void check_enumeration_bounds(const TLabelledPoset& lp, ElementSet domain, int ncap,
                              const EnumerationLimits& limits) {
  if (!domain.subset_of(lp.poset().elements())) {
    throw Error(ErrorCode::InvalidInput, "domain contains ids outside the poset");
  }
  if (domain.size() > limits.max_elements) {
    throw Error(ErrorCode::BoundExceeded, "enumeration limited to " + std::to_string(limits.max_elements) +
                                              " elements, got " + std::to_string(domain.size()));
  }
  if (ncap < 1 || ncap > limits.max_entry || ncap > Tableau::kMaxValue) {
    throw Error(ErrorCode::BoundExceeded, "entry cap " + std::to_string(ncap) + " outside 1.." +
                                              std::to_string(limits.max_entry));
  }
  const auto& covers = lp.poset().covers();
  for (std::size_t i = 0; i < covers.size(); ++i) {
    const StepFunction& f = lp.labels()[i];
    if (f.kind() == StepFunction::Kind::Table && static_cast<int>(f.values().size()) < ncap &&
        domain.contains(covers[i].lower) && domain.contains(covers[i].upper)) {
      throw Error(ErrorCode::BoundExceeded, "label table shorter than the entry cap");
    }
  }
}

std::vector<Tableau> enumerate(const TLabelledPoset& lp, ElementSet domain, int ncap,
                               const EnumerationLimits& limits) {
  std::vector<Tableau> out;
  for_each_tableau(lp, domain, ncap, [&](const Tableau& t) { out.push_back(t); }, limits);
  return out;
}

std::vector<Tableau> enumerate(const TLabelledPoset& lp, int ncap, const EnumerationLimits& limits) {
  return enumerate(lp, lp.poset().elements(), ncap, limits);
}

}  // namespace celltransfer
