#include "celltransfer/transfer.hpp"

#include <string>

namespace celltransfer {

ElementSet meet_domain(const Poset& p, const ConvexSubposet& q, const ConvexSubposet& r, PairRule rule) {
  return (rule == PairRule::Convex ? wedge(p, q, r) : wedge_prime(p, q, r)).members();
}

ElementSet join_domain(const Poset& p, const ConvexSubposet& q, const ConvexSubposet& r, PairRule rule) {
  return (rule == PairRule::Convex ? vee(p, q, r) : vee_prime(p, q, r)).members();
}

namespace {

void check_tableau(const TLabelledPoset& lp, const Tableau& t, ElementSet expected, const char* name) {
  if (t.domain() != expected) {
    throw Error(ErrorCode::InvalidTableau, std::string(name) + " is not defined on its subposet");
  }
  for (ElementId e : t.domain()) {
    if (t.at(e) < 1) throw Error(ErrorCode::InvalidTableau, std::string(name) + " has a non-positive entry");
  }
  if (auto bad = first_violation(lp, t)) {
    throw Error(ErrorCode::InvalidTableau, std::string(name) + " violates the cover (" + std::to_string(bad->lower) +
                                               "," + std::to_string(bad->upper) + ")");
  }
}

}  // namespace

TransferContext::TransferContext(const TLabelledPoset& lp, ConvexSubposet q, ConvexSubposet r, Tableau omega,
                                 Tableau sigma, PairRule rule)
    : lp_(&lp), q_(q), r_(r), omega_(omega), sigma_(sigma), rule_(rule) {
  const Poset& p = lp.poset();
  if (rule == PairRule::OrderIdeal && (!p.is_order_ideal(q.members()) || !p.is_order_ideal(r.members()))) {
    throw Error(ErrorCode::NotAnIdeal, "order-ideal transfer needs both operands to be order ideals");
  }
  check_tableau(lp, omega_, q.members(), "omega");
  check_tableau(lp, sigma_, r.members(), "sigma");
  meet_ = celltransfer::meet_domain(p, q, r, rule);
  join_ = celltransfer::join_domain(p, q, r, rule);
}

namespace {

// Union of the connected components of `within` (under Hasse adjacency) that meet `seeds`.
ElementSet components_meeting(const Poset& p, ElementSet within, ElementSet seeds) {
  ElementSet reached = within & seeds;
  ElementSet frontier = reached;
  while (!frontier.empty()) {
    ElementSet next;
    for (ElementId e : frontier) next |= (p.upper_covers(e) | p.lower_covers(e)) & within;
    frontier = next - reached;
    reached |= frontier;
  }
  return reached;
}

TransferSets candidate_sets(const TransferContext& ctx) {
  const Poset& p = ctx.poset();
  ElementSet q = ctx.q().members(), r = ctx.r().members(), both = q & r;
  TransferSets s;
  for (ElementId x : both) {
    if (ctx.omega().at(x) < ctx.sigma().at(x)) s.plus.insert(x);
    if (p.lower_covers(x).intersects(r - q)) s.bd_r.insert(x);
    if (p.upper_covers(x).intersects(q - r)) s.bd_q.insert(x);
  }
  s.bd_q_plus = components_meeting(p, s.plus, s.bd_q);
  s.bd_r_plus = components_meeting(p, s.plus, s.bd_r);
  s.s_star = s.bd_q_plus | s.bd_r_plus;
  return s;
}

bool transferrable_unchecked(const TransferContext& ctx, ElementSet s) {
  TableauPair out = apply_subset(ctx, s);
  return respects(ctx.labelled(), out.alpha) && respects(ctx.labelled(), out.beta);
}

}  // namespace

TransferSets compute_sets(const TransferContext& ctx) {
  TransferSets s = candidate_sets(ctx);
  s.s_diamond = run_algorithm(ctx).transferred;
  return s;
}

TableauPair apply_subset(const TransferContext& ctx, ElementSet s) {
  ElementSet q = ctx.q().members(), r = ctx.r().members();
  if (!s.subset_of(q & r)) throw Error(ErrorCode::SubsetOutOfRange, "transfer set must lie in Q∩R");
  TableauPair out{Tableau(ctx.meet_domain()), Tableau(ctx.join_domain())};
  for (ElementId x : ctx.meet_domain()) {
    bool from_sigma = (r.contains(x) && !q.contains(x)) || s.contains(x);
    out.alpha.set(x, from_sigma ? ctx.sigma().at(x) : ctx.omega().at(x));
  }
  for (ElementId x : ctx.join_domain()) {
    bool from_omega = (q.contains(x) && !r.contains(x)) || s.contains(x);
    out.beta.set(x, from_omega ? ctx.omega().at(x) : ctx.sigma().at(x));
  }
  return out;
}

bool is_transferrable(const TransferContext& ctx, ElementSet s) {
  if (!s.subset_of(candidate_sets(ctx).s_star)) {
    throw Error(ErrorCode::SubsetOutOfRange, "transferrable sets are subsets of S*");
  }
  return transferrable_unchecked(ctx, s);
}

ElementSet sdiamond_oracle(const TransferContext& ctx, int max_candidates) {
  ElementSet star = candidate_sets(ctx).s_star;
  if (star.size() > max_candidates) {
    throw Error(ErrorCode::BoundExceeded, "S* has " + std::to_string(star.size()) + " cells; oracle limited to " +
                                              std::to_string(max_candidates));
  }
  std::vector<ElementId> ids = star.to_vector();
  const std::uint64_t count = std::uint64_t{1} << ids.size();
  ElementSet meet = star;
  std::optional<ElementSet> smallest;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    ElementSet s;
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (mask >> i & 1U) s.insert(ids[i]);
    if (!transferrable_unchecked(ctx, s)) continue;
    meet &= s;
    if (!smallest || s.size() < smallest->size()) smallest = s;
  }
  if (!smallest) throw Error(ErrorCode::InternalConsistency, "S* itself is not transferrable");
  if (*smallest != meet || !transferrable_unchecked(ctx, meet)) {
    throw Error(ErrorCode::InternalConsistency, "transferrable sets are not closed under intersection");
  }
  return meet;
}

TransferResult run_algorithm(const TransferContext& ctx, bool record_states) {
  const TLabelledPoset& lp = ctx.labelled();
  const Poset& p = ctx.poset();
  ElementSet q = ctx.q().members(), r = ctx.r().members(), both = q & r;

  TransferResult res;
  res.alpha = Tableau(ctx.meet_domain());
  res.beta = Tableau(ctx.join_domain());
  for (ElementId x : ctx.meet_domain()) res.alpha.set(x, q.contains(x) ? ctx.omega().at(x) : ctx.sigma().at(x));
  for (ElementId x : ctx.join_domain()) res.beta.set(x, r.contains(x) ? ctx.sigma().at(x) : ctx.omega().at(x));
  Tableau& meet = res.alpha;
  Tableau& join = res.beta;

  auto require = [](bool ok) {
    if (!ok) throw Error(ErrorCode::InternalConsistency, "critical-cell neighbour outside the glued domain");
  };

  while (true) {
    ElementSet critical;
    for (ElementId s : both - res.transferred) {
      bool hit = false;
      // (a), (d): a lower neighbour t in R with f(meet(s)) < meet(t).
      for (ElementId t : p.lower_covers(s) & r) {
        require(meet.domain().contains(t));
        if (lp.label(t, s)(meet.at(s)) < meet.at(t)) hit = true;
      }
      // (b), (c): an upper neighbour t in Q with f(join(t)) < join(s).
      for (ElementId t : p.upper_covers(s) & q) {
        require(join.domain().contains(t));
        if (lp.label(s, t)(join.at(t)) < join.at(s)) hit = true;
      }
      if (hit) critical.insert(s);
    }
    if (critical.empty()) break;
    TransferRound round{critical, {}, {}};
    if (record_states) {
      round.meet_state = meet;
      round.join_state = join;
    }
    res.rounds.push_back(round);
    for (ElementId s : critical) {
      int a = meet.at(s);
      meet.set(s, join.at(s));
      join.set(s, a);
    }
    res.transferred |= critical;
    ++res.iterations;
  }
  return res;
}

TableauPair eta_star(const TransferContext& ctx) { return apply_subset(ctx, candidate_sets(ctx).s_star); }

std::pair<Tableau, Tableau> mu(const TLabelledPoset& lp, const ConvexSubposet& q, const ConvexSubposet& r,
                               const Tableau& alpha, const Tableau& beta, PairRule rule) {
  const Poset& p = lp.poset();
  ElementSet meet = meet_domain(p, q, r, rule), join = join_domain(p, q, r, rule);
  if (alpha.domain() != meet || beta.domain() != join) {
    throw Error(ErrorCode::InvalidTableau, "image tableaux are not defined on the meet and join");
  }
  ElementSet qm = q.members(), rm = r.members(), both = qm & rm;
  Tableau omega(qm), sigma(rm);
  for (ElementId x : qm) omega.set(x, meet.contains(x) ? alpha.at(x) : beta.at(x));
  for (ElementId x : rm) sigma.set(x, join.contains(x) ? beta.at(x) : alpha.at(x));

  auto violated = [&](const Tableau& t, ElementId lo, ElementId hi) { return t.at(lo) > lp.label(lo, hi)(t.at(hi)); };

  // Undo the transfer round by round: an unswapped overlap cell touching a
  // violated edge on either side has to be swapped back.
  ElementSet swapped;
  while (true) {
    ElementSet critical;
    for (ElementId s : both - swapped) {
      bool hit = false;
      for (ElementId t : p.upper_covers(s) & qm) hit = hit || violated(omega, s, t);
      for (ElementId t : p.lower_covers(s) & qm) hit = hit || violated(omega, t, s);
      for (ElementId t : p.upper_covers(s) & rm) hit = hit || violated(sigma, s, t);
      for (ElementId t : p.lower_covers(s) & rm) hit = hit || violated(sigma, t, s);
      if (hit) critical.insert(s);
    }
    if (critical.empty()) break;
    for (ElementId s : critical) {
      int a = omega.at(s);
      omega.set(s, sigma.at(s));
      sigma.set(s, a);
    }
    swapped |= critical;
  }

  if (!respects(lp, omega) || !respects(lp, sigma)) {
    throw Error(ErrorCode::NotInImage, "no back-transfer yields tableaux respecting the labels");
  }
  TransferResult again = run_algorithm(TransferContext(lp, q, r, omega, sigma, rule));
  if (!(again.alpha == alpha) || !(again.beta == beta)) {
    throw Error(ErrorCode::NotInImage, "pair is not in the image of the transfer");
  }
  return {omega, sigma};
}

TransferResult eta_prime(const TLabelledPoset& lp, ElementSet i, ElementSet j, const Tableau& omega,
                         const Tableau& sigma) {
  const Poset& p = lp.poset();
  OrderIdeal a = p.ideal(i), b = p.ideal(j);
  return run_algorithm(TransferContext(lp, a.as_convex(), b.as_convex(), omega, sigma, PairRule::OrderIdeal));
}

}  // namespace celltransfer
