#include "celltransfer/minmax.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace celltransfer {

namespace {

Partition pad(Partition p, std::size_t k) {
  p = normalize_partition(std::move(p));
  p.resize(k, 0);
  return p;
}

bool contained(const Partition& inner, const Partition& outer) {
  for (std::size_t i = 0; i < inner.size(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

Partition combine(const Partition& a, const Partition& b, const int& (*pick)(const int&, const int&)) {
  Partition out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = pick(a[i], b[i]);
  return out;
}

}  // namespace

SkewPair::SkewPair(Partition lam, Partition mu, Partition nu, Partition rho) {
  std::size_t k = std::max({lam.size(), mu.size(), nu.size(), rho.size()});
  lam_ = pad(std::move(lam), k);
  mu_ = pad(std::move(mu), k);
  nu_ = pad(std::move(nu), k);
  rho_ = pad(std::move(rho), k);
  if (!contained(mu_, lam_)) throw Error(ErrorCode::MalformedPartitions, "mu is not contained in lambda");
  if (!contained(rho_, nu_)) throw Error(ErrorCode::MalformedPartitions, "rho is not contained in nu");
}

namespace {

GridPoset pair_grid(const SkewPair& sp) {
  int cols = 1;
  if (sp.k() > 0) cols = std::max({cols, sp.lam()[0], sp.nu()[0]});
  return GridPoset(std::max(sp.k(), 1), cols);
}

}  // namespace

MinMaxShapes minmax(const SkewPair& sp) {
  const int& (*hi)(const int&, const int&) = std::max<int>;
  const int& (*lo)(const int&, const int&) = std::min<int>;
  MinMaxShapes out;
  out.max_shape = SkewShape(combine(sp.lam(), sp.nu(), hi), combine(sp.mu(), sp.rho(), hi));
  out.min_shape = SkewShape(combine(sp.lam(), sp.nu(), lo), combine(sp.mu(), sp.rho(), lo));

  GridPoset grid = pair_grid(sp);
  ElementSet w = wedge(grid.poset(), grid.subposet(sp.first()), grid.subposet(sp.second())).members();
  ElementSet m = grid.members(out.min_shape);
  out.vset = grid.cells((w - m) | (m - w));
  return out;
}

bool vset_incomparability_check(const SkewPair& sp) {
  MinMaxShapes shapes = minmax(sp);
  SkewShape a = sp.first(), b = sp.second();
  auto comparable = [](Cell x, Cell y) {
    return (x.row <= y.row && x.col <= y.col) || (y.row <= x.row && y.col <= x.col);
  };
  for (const Cell& v : shapes.vset) {
    bool in_a = a.contains(v), in_b = b.contains(v);
    if (in_a == in_b) return false;
    const SkewShape& other = in_a ? b : a;
    for (const Cell& c : other.cells())
      if (comparable(v, c)) return false;
  }
  return true;
}

SkewTransferPlan::SkewTransferPlan(const SkewPair& sp)
    : pair(sp),
      shapes(minmax(sp)),
      grid(pair_grid(sp)),
      q(grid.subposet(sp.first())),
      r(grid.subposet(sp.second())) {
  vee = celltransfer::vee(grid.poset(), q, r).members();
  wedge = celltransfer::wedge(grid.poset(), q, r).members();
  max_members = grid.members(shapes.max_shape);
  min_members = grid.members(shapes.min_shape);
  vset = grid.members(shapes.vset);
}

std::pair<Tableau, Tableau> skew_transfer(const SkewTransferPlan& plan, const Tableau& u, const Tableau& t) {
  TransferContext ctx(plan.grid.labelled(), plan.q, plan.r, u, t);
  TransferResult res = eta(ctx);
  const Tableau& on_wedge = res.alpha;  // T''
  const Tableau& on_vee = res.beta;     // U''
  Tableau u_out(plan.max_members), t_out(plan.min_members);
  for (ElementId c : plan.max_members) u_out.set(c, plan.vee.contains(c) ? on_vee.at(c) : on_wedge.at(c));
  for (ElementId c : plan.min_members) t_out.set(c, plan.wedge.contains(c) ? on_wedge.at(c) : on_vee.at(c));
  return {u_out, t_out};
}

int row_count(const SkewShape& shape) {
  std::set<int> rows;
  for (const Cell& c : shape.cells()) rows.insert(c.row);
  return static_cast<int>(rows.size());
}

ExponentPolynomial skew_schur(const SkewShape& shape, int nvars) {
  static std::mutex mutex;
  static std::map<std::pair<std::set<Cell>, int>, ExponentPolynomial> cache;
  std::set<Cell> key;
  if (!shape.empty()) {
    int r0 = shape.cells().begin()->row, c0 = shape.cells().begin()->col;
    for (const Cell& c : shape.cells()) c0 = std::min(c0, c.col);
    for (const Cell& c : shape.cells()) key.insert({c.row - r0 + 1, c.col - c0 + 1});
  }
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({key, nvars}); it != cache.end()) return it->second;
  }
  ExponentPolynomial p = kfunc(young_labelling(shape).labelled, nvars, {64, 255});
  std::lock_guard lock(mutex);
  cache.emplace(std::make_pair(key, nvars), p);
  return p;
}

BasisExpansion schur_expand_difference(const SkewShape& a, const SkewShape& b, const SkewShape& c,
                                       const SkewShape& d) {
  int bound = std::max({row_count(a) + row_count(b), row_count(c) + row_count(d), 1});
  if (bound > Exponent::kMaxVars) throw Error(ErrorCode::BoundExceeded, "too many rows for a Schur expansion");
  auto dom = [bound](const SkewShape& s) { return skew_schur(s, bound).dominant_part(); };
  ExponentPolynomial diff = multiply_symmetric_dominant(dom(a), dom(b)) - multiply_symmetric_dominant(dom(c), dom(d));
  ExpandOptions options;
  options.length_bound = bound;
  return expand_schur_dominant(diff, options);
}

DifferenceReport skew_difference(const SkewPair& sp, int nvars, DifferenceOptions options) {
  MinMaxShapes shapes = minmax(sp);
  SkewShape a = sp.first(), b = sp.second();
  ExponentPolynomial diff = skew_schur(shapes.max_shape, nvars) * skew_schur(shapes.min_shape, nvars) -
                            skew_schur(a, nvars) * skew_schur(b, nvars);
  bool want_schur = options.schur;
  options.schur = false;
  DifferenceReport report = analyze_difference(diff, options);
  if (want_schur) report.schur = schur_expand_difference(shapes.max_shape, shapes.min_shape, a, b);
  return report;
}

}  // namespace celltransfer
