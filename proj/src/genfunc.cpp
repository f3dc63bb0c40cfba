#include "celltransfer/genfunc.hpp"

#include <unordered_map>

namespace celltransfer {

ExponentPolynomial kfunc(const TLabelledPoset& lp, ElementSet domain, int ncap, const EnumerationLimits& limits) {
  if (ncap > Exponent::kMaxVars) throw Error(ErrorCode::BoundExceeded, "at most 16 variables are supported");
  std::unordered_map<Exponent, BigInt> counts;
  for_each_tableau(
      lp, domain, ncap,
      [&](const Tableau& t) {
        Exponent e;
        for (ElementId id : t.domain()) e.set(t.at(id) - 1, e[t.at(id) - 1] + 1);
        counts[e] += 1;
      },
      limits);
  ExponentPolynomial p(ncap);
  for (const auto& [e, c] : counts) p.add_term(e, c);
  return p;
}

ExponentPolynomial kfunc(const TLabelledPoset& lp, int ncap, const EnumerationLimits& limits) {
  return kfunc(lp, ElementSet::first(lp.size()), ncap, limits);
}

DifferenceReport analyze_difference(const ExponentPolynomial& difference, const DifferenceOptions& options) {
  DifferenceReport report;
  report.difference = difference;
  report.monomial = is_monomial_positive(difference);
  report.symmetric = is_symmetric(difference);
  report.quasisymmetric = report.symmetric || is_quasisymmetric(difference);
  if (options.schur && report.symmetric) {
    try {
      report.schur = expand(difference, Basis::Schur, options.expand);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::TruncationTooSmall) throw;
    }
  }
  return report;
}

namespace {

DifferenceReport difference_of(const TLabelledPoset& lp, ElementSet q, ElementSet r, ElementSet meet, ElementSet join,
                               int ncap, const DifferenceOptions& options) {
  ExponentPolynomial lhs = kfunc(lp, meet, ncap, options.limits) * kfunc(lp, join, ncap, options.limits);
  ExponentPolynomial rhs = kfunc(lp, q, ncap, options.limits) * kfunc(lp, r, ncap, options.limits);
  return analyze_difference(lhs - rhs, options);
}

}  // namespace

DifferenceReport cell_transfer_difference(const TLabelledPoset& lp, const ConvexSubposet& q, const ConvexSubposet& r,
                                          int ncap, const DifferenceOptions& options) {
  const Poset& p = lp.poset();
  return difference_of(lp, q.members(), r.members(), wedge(p, q, r).members(), vee(p, q, r).members(), ncap,
                       options);
}

DifferenceReport ideal_difference(const TLabelledPoset& lp, const OrderIdeal& i, const OrderIdeal& j, int ncap,
                                  const DifferenceOptions& options) {
  const Poset& p = lp.poset();
  ConvexSubposet ci = i.as_convex(), cj = j.as_convex();
  return difference_of(lp, ci.members(), cj.members(), wedge_prime(p, ci, cj).members(),
                       vee_prime(p, ci, cj).members(), ncap, options);
}

bool oriented_check(const TLabelledPoset& lp) { return lp.oriented(); }

}  // namespace celltransfer
