#include "celltransfer/verify.hpp"

#include <functional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "celltransfer/minmax.hpp"

namespace celltransfer {

void SuiteReport::fail(const std::string& what) {
  ++failures;
  if (!counterexample) counterexample = what;
}

std::string SuiteReport::summary() const {
  std::ostringstream os;
  os << name << ": " << instances << " instances, " << checks << " checks, " << failures << " failures";
  if (skipped) os << ", " << skipped << " skipped";
  for (const auto& [key, value] : counters) os << ", " << key << " " << value;
  return os.str();
}

std::vector<NamedPoset> catalogue(int max_size) {
  std::vector<NamedPoset> all;
  for (int n = 1; n <= 5; ++n) all.push_back({"chain" + std::to_string(n), chain(n)});
  for (int n = 2; n <= 5; ++n) all.push_back({"antichain" + std::to_string(n), antichain(n)});
  all.push_back({"V", Poset(3, {{0, 1}, {0, 2}})});
  all.push_back({"Lambda", Poset(3, {{0, 2}, {1, 2}})});
  all.push_back({"Y", Poset(4, {{0, 1}, {1, 2}, {1, 3}})});
  all.push_back({"B2", boolean_lattice(2)});
  all.push_back({"grid2x2", GridPoset(2, 2).poset()});
  all.push_back({"diamond-tail", Poset(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}})});
  std::vector<NamedPoset> out;
  for (auto& np : all)
    if (np.poset.size() <= max_size) out.push_back(std::move(np));
  return out;
}

std::vector<TLabelledPoset> oriented_labellings(const Poset& p) {
  std::size_t m = p.covers().size();
  std::vector<TLabelledPoset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<StepFunction> labels;
    for (std::size_t i = 0; i < m; ++i)
      labels.push_back((mask >> i) & 1 ? StepFunction::strict() : StepFunction::weak());
    out.emplace_back(p, std::move(labels));
  }
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  for (const Exponent& e : dominant_exponents(n, std::min(n, Exponent::kMaxVars))) {
    out.push_back(e.packed(Exponent::kMaxVars));
  }
  if (n == 0) out = {Partition{}};
  return out;
}

std::vector<Partition> partitions_in_box(int rows, int max_part) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto& self, int cap) -> void {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) == rows) return;
    for (int v = 1; v <= cap; ++v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, max_part);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string set_str(ElementSet s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (ElementId e : s) {
    os << (first ? "" : ",") << e;
    first = false;
  }
  os << "}";
  return os.str();
}

std::string labels_str(const TLabelledPoset& lp) {
  std::ostringstream os;
  for (std::size_t i = 0; i < lp.labels().size(); ++i) {
    const Cover& c = lp.poset().covers()[i];
    auto kind = lp.labels()[i].kind();
    os << (i ? " " : "") << c.lower << "<" << c.upper << ":"
       << (kind == StepFunction::Kind::Weak ? "w" : kind == StepFunction::Kind::Strict ? "s" : "t");
  }
  return os.str();
}

std::string tableau_str(const Tableau& t) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (ElementId e : t.domain()) {
    os << (first ? "" : " ") << e << "=" << t.at(e);
    first = false;
  }
  os << "]";
  return os.str();
}

std::string instance_str(const std::string& name, const TLabelledPoset& lp, ElementSet q, ElementSet r) {
  return name + " (" + labels_str(lp) + ") Q=" + set_str(q) + " R=" + set_str(r);
}

std::string partition_str(const Partition& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ")";
  return os.str();
}

std::string shape_str(const SkewShape& s) {
  return s.inner().empty() ? partition_str(s.outer()) : partition_str(s.outer()) + "/" + partition_str(s.inner());
}

Exponent weight_exponent(const Tableau& t) {
  Exponent e;
  for (ElementId id : t.domain()) e.set(t.at(id) - 1, e[t.at(id) - 1] + 1);
  return e;
}

struct PairHash {
  std::size_t operator()(const TableauPair& p) const noexcept {
    return p.alpha.hash() * 0x9E3779B97F4A7C15ULL ^ p.beta.hash();
  }
};

// Generating functions of one labelled poset, per domain.
class KCache {
 public:
  KCache(const TLabelledPoset& lp, int ncap) : lp_(lp), ncap_(ncap) {}
  const ExponentPolynomial& get(ElementSet domain) {
    auto it = cache_.find(domain);
    if (it == cache_.end()) it = cache_.emplace(domain, kfunc(lp_, domain, ncap_)).first;
    return it->second;
  }

 private:
  const TLabelledPoset& lp_;
  int ncap_;
  std::unordered_map<ElementSet, ExponentPolynomial> cache_;
};

std::string witness_str(const PositivityVerdict& v, int nvars) {
  if (!v.witness) return "";
  return " witness x^" + partition_str(v.witness->first.to_vector(nvars)) + " coef " + v.witness->second.str();
}

// Visits every oriented labelling of every catalogue poset.
void for_each_labelled(const SuiteOptions& o,
                       const std::function<void(const std::string&, const TLabelledPoset&)>& visit) {
  for (const NamedPoset& np : catalogue(o.max_poset)) {
    for (const TLabelledPoset& lp : oriented_labellings(np.poset)) visit(np.name, lp);
  }
}

// Transfer checks shared by the convex and order-ideal suites.
void check_injection(SuiteReport& rep, const std::string& where, const TLabelledPoset& lp, const ConvexSubposet& q,
                     const ConvexSubposet& r, PairRule rule, int ncap, KCache* kc) {
  std::vector<Tableau> aq = enumerate(lp, q.members(), ncap);
  std::vector<Tableau> ar = enumerate(lp, r.members(), ncap);
  std::unordered_set<TableauPair, PairHash> image;
  image.reserve(aq.size() * ar.size());
  ElementSet meet = meet_domain(lp.poset(), q, r, rule), join = join_domain(lp.poset(), q, r, rule);
  for (const Tableau& w : aq) {
    for (const Tableau& s : ar) {
      ++rep.checks;
      TransferContext ctx(lp, q, r, w, s, rule);
      TransferResult res = eta(ctx);
      std::string pair = where + " omega=" + tableau_str(w) + " sigma=" + tableau_str(s);
      if (res.alpha.domain() != meet || res.beta.domain() != join) {
        rep.fail("output domains differ from the meet and join: " + pair);
        continue;
      }
      if (!respects(lp, res.alpha) || !respects(lp, res.beta)) {
        rep.fail("output violates the labelling: " + pair);
        continue;
      }
      if (weight_exponent(res.alpha) + weight_exponent(res.beta) != weight_exponent(w) + weight_exponent(s)) {
        rep.fail("weight not preserved: " + pair);
      }
      if (!image.insert({res.alpha, res.beta}).second) rep.fail("two pairs share an image: " + pair);
      auto back = mu(lp, q, r, res.alpha, res.beta, rule);
      if (!(back.first == w) || !(back.second == s)) rep.fail("inverse does not recover the input: " + pair);
    }
  }
  if (!kc) return;
  // Pairs outside the image account for the difference weight by weight.
  std::unordered_map<Exponent, long long> outside;
  std::vector<Tableau> am = enumerate(lp, meet, ncap), aj = enumerate(lp, join, ncap);
  for (const Tableau& a : am) {
    for (const Tableau& b : aj) {
      if (!image.count({a, b})) ++outside[weight_exponent(a) + weight_exponent(b)];
    }
  }
  ExponentPolynomial diff = kc->get(meet) * kc->get(join) - kc->get(q.members()) * kc->get(r.members());
  bool agree = true;
  for (const auto& [e, c] : diff.terms()) {
    auto it = outside.find(e);
    if (it == outside.end() || BigInt(it->second) != c) agree = false;
  }
  for (const auto& [e, n] : outside)
    if (diff.coefficient(e) != n) agree = false;
  ++rep.checks;
  if (!agree) rep.fail("pairs outside the image do not match the difference: " + where);
}

}  // namespace

SuiteReport verify_celltransfer(const SuiteOptions& o) {
  SuiteReport rep;
  rep.name = "celltransfer";
  for_each_labelled(o, [&](const std::string& name, const TLabelledPoset& lp) {
    KCache kc(lp, o.ncap);
    const Poset& p = lp.poset();
    auto subs = convex_subposets(p);
    for (const auto& q : subs) {
      for (const auto& r : subs) {
        ++rep.instances;
        ++rep.checks;
        ElementSet w = wedge(p, q, r).members(), v = vee(p, q, r).members();
        ExponentPolynomial diff = kc.get(w) * kc.get(v) - kc.get(q.members()) * kc.get(r.members());
        PositivityVerdict verdict = is_monomial_positive(diff);
        if (!verdict.positive) {
          rep.fail(instance_str(name, lp, q.members(), r.members()) + witness_str(verdict, o.ncap));
        }
      }
    }
  });
  return rep;
}

SuiteReport verify_injection(const SuiteOptions& o) {
  SuiteReport rep;
  rep.name = "injection";
  for_each_labelled(o, [&](const std::string& name, const TLabelledPoset& lp) {
    KCache kc(lp, o.ncap);
    auto subs = convex_subposets(lp.poset());
    for (const auto& q : subs) {
      for (const auto& r : subs) {
        ++rep.instances;
        check_injection(rep, instance_str(name, lp, q.members(), r.members()), lp, q, r, PairRule::Convex, o.ncap,
                        &kc);
      }
    }
  });
  return rep;
}

SuiteReport verify_algorithm_oracle(const SuiteOptions& o) {
  SuiteReport rep;
  rep.name = "algorithm-oracle";
  for_each_labelled(o, [&](const std::string& name, const TLabelledPoset& lp) {
    auto subs = convex_subposets(lp.poset());
    for (const auto& q : subs) {
      for (const auto& r : subs) {
        ++rep.instances;
        std::vector<Tableau> aq = enumerate(lp, q.members(), o.ncap);
        std::vector<Tableau> ar = enumerate(lp, r.members(), o.ncap);
        for (const Tableau& w : aq) {
          for (const Tableau& s : ar) {
            TransferContext ctx(lp, q, r, w, s);
            TransferSets sets = compute_sets(ctx);
            if (sets.s_star.size() > o.max_sstar) {
              ++rep.skipped;
              continue;
            }
            ++rep.checks;
            ElementSet algo = run_algorithm(ctx).transferred;
            ElementSet oracle = sdiamond_oracle(ctx);
            if (algo != oracle || sets.s_diamond != algo) {
              rep.fail(instance_str(name, lp, q.members(), r.members()) + " omega=" + tableau_str(w) +
                       " sigma=" + tableau_str(s) + " algorithm " + set_str(algo) + " oracle " + set_str(oracle));
            }
          }
        }
      }
    }
  });
  return rep;
}

SuiteReport verify_schur(const SuiteOptions& o) {
  SuiteReport rep;
  rep.name = "schur";
  std::vector<Partition> parts;
  for (int n = 0; n <= o.max_size; ++n)
    for (const Partition& p : partitions_of(n)) parts.push_back(p);
  for (const Partition& lam : parts) {
    for (const Partition& mu : parts) {
      ++rep.instances;
      SkewShape a(lam), b(mu);
      GridPoset grid = grid_for({a, b});
      ConvexSubposet q = grid.subposet(a), r = grid.subposet(b);
      SkewShape w = grid.shape(wedge(grid.poset(), q, r).members());
      SkewShape v = grid.shape(vee(grid.poset(), q, r).members());
      ExponentPolynomial diff = skew_schur(w, o.ncap) * skew_schur(v, o.ncap) -
                                skew_schur(a, o.ncap) * skew_schur(b, o.ncap);
      std::string where = "lambda=" + partition_str(lam) + " mu=" + partition_str(mu);
      ++rep.checks;
      PositivityVerdict verdict = is_monomial_positive(diff);
      if (!verdict.positive) rep.fail(where + witness_str(verdict, o.ncap));
      if (!o.schur) continue;
      ++rep.checks;
      BasisExpansion ex = schur_expand_difference(w, v, a, b);
      if (!ex.positive()) rep.fail(where + " is not Schur positive");
      if (ex.coeffs.empty()) continue;
      std::ostringstream line;
      line << "s" << shape_str(w) << " s" << shape_str(v) << " - s" << partition_str(lam) << " s"
           << partition_str(mu) << " =";
      for (const auto& [idx, c] : ex.coeffs) line << " " << (c < 0 ? "-" : "+") << (c < 0 ? BigInt(-c) : c) << "*s" << partition_str(idx);
      rep.table.push_back(line.str());
    }
  }
  return rep;
}

namespace {

std::set<Cell> translated(const SkewShape& s) {
  std::set<Cell> out;
  if (s.empty()) return out;
  int r0 = s.cells().begin()->row, c0 = s.cells().begin()->col;
  for (const Cell& c : s.cells()) c0 = std::min(c0, c.col);
  for (const Cell& c : s.cells()) out.insert({c.row - r0 + 1, c.col - c0 + 1});
  return out;
}

}  // namespace

SuiteReport verify_skewschur(const SuiteOptions& o) {
  SuiteReport rep;
  rep.name = "skewschur";
  std::vector<std::pair<Partition, Partition>> nested;
  auto box = partitions_in_box(o.rows, o.max_part);
  for (const Partition& outer : box) {
    for (const Partition& inner : box) {
      bool ok = inner.size() <= outer.size();
      for (std::size_t i = 0; ok && i < inner.size(); ++i) ok = inner[i] <= outer[i];
      if (ok) nested.emplace_back(outer, inner);
    }
  }
  using Key = std::array<std::set<Cell>, 4>;
  std::map<Key, std::pair<bool, bool>> verdicts;  // monomial, schur
  for (const auto& [lam, mu] : nested) {
    for (const auto& [nu, rho] : nested) {
      ++rep.instances;
      SkewPair sp(lam, mu, nu, rho);
      std::string where = "lam=" + partition_str(lam) + " mu=" + partition_str(mu) + " nu=" + partition_str(nu) +
                          " rho=" + partition_str(rho);
      ++rep.checks;
      if (!vset_incomparability_check(sp)) rep.fail("V cell comparable across shapes: " + where);

      SkewTransferPlan plan(sp);
      if (!plan.vset.empty()) ++rep.counters["nonempty-V"];
      Key key{translated(plan.shapes.max_shape), translated(plan.shapes.min_shape), translated(sp.first()),
              translated(sp.second())};
      auto it = verdicts.find(key);
      if (it == verdicts.end()) {
        DifferenceOptions opts;
        opts.schur = o.schur;
        DifferenceReport dr = skew_difference(sp, o.ncap, opts);
        it = verdicts.emplace(key, std::make_pair(dr.monomial.positive, !o.schur || dr.schur->positive())).first;
      }
      ++rep.checks;
      if (!it->second.first) rep.fail("difference not monomial positive: " + where);
      if (o.schur) {
        ++rep.checks;
        if (!it->second.second) rep.fail("difference not Schur positive: " + where);
      }

      const TLabelledPoset& lp = plan.grid.labelled();
      std::vector<Tableau> us = enumerate(lp, plan.q.members(), o.ncap);
      std::vector<Tableau> ts = enumerate(lp, plan.r.members(), o.ncap);
      std::unordered_set<TableauPair, PairHash> image;
      image.reserve(us.size() * ts.size());
      for (const Tableau& u : us) {
        for (const Tableau& t : ts) {
          ++rep.checks;
          auto [u2, t2] = skew_transfer(plan, u, t);
          if (!respects(lp, u2) || !respects(lp, t2)) {
            rep.fail("output not semistandard: " + where + " U=" + tableau_str(u) + " T=" + tableau_str(t));
            continue;
          }
          if (weight_exponent(u2) + weight_exponent(t2) != weight_exponent(u) + weight_exponent(t)) {
            rep.fail("weight not preserved: " + where);
          }
          if (!image.insert({u2, t2}).second) {
            rep.fail("two pairs share an image: " + where + " U=" + tableau_str(u) + " T=" + tableau_str(t));
          }
        }
      }
    }
  }
  return rep;
}

SuiteReport verify_ideals(const SuiteOptions& o) {
  SuiteReport rep;
  rep.name = "ideals";
  for_each_labelled(o, [&](const std::string& name, const TLabelledPoset& lp) {
    const Poset& p = lp.poset();
    KCache kc(lp, o.ncap);
    int minimal = 0;
    for (ElementId e = 0; e < p.size(); ++e)
      if (p.lower_covers(e).empty()) ++minimal;
    auto ids = ideals(p);
    for (const OrderIdeal& i : ids) {
      for (const OrderIdeal& j : ids) {
        ++rep.instances;
        std::string where = instance_str(name, lp, i.members(), j.members());
        ConvexSubposet ci = i.as_convex(), cj = j.as_convex();
        ElementSet meet = i.members() & j.members(), join = i.members() | j.members();
        ++rep.checks;
        if (wedge_prime(p, ci, cj).members() != meet || vee_prime(p, ci, cj).members() != join) {
          rep.fail("primed operations differ from the ideal meet and join: " + where);
        }
        // With a unique minimal element every nonempty ideal contains it, so
        // the plain operations see no incomparable pairs. The empty ideal is
        // incomparable to everything and stays excluded.
        if (minimal == 1 && !i.members().empty() && !j.members().empty()) {
          ++rep.checks;
          if (wedge(p, ci, cj).members() != meet || vee(p, ci, cj).members() != join) {
            rep.fail("operations differ from the ideal meet and join: " + where);
          }
        }
        ++rep.checks;
        ExponentPolynomial diff = kc.get(meet) * kc.get(join) - kc.get(i.members()) * kc.get(j.members());
        PositivityVerdict verdict = is_monomial_positive(diff);
        if (!verdict.positive) rep.fail(where + witness_str(verdict, o.ncap));
        check_injection(rep, where, lp, ci, cj, PairRule::OrderIdeal, o.ncap, nullptr);
      }
    }
  });
  return rep;
}

SuiteReport verify_oriented(const SuiteOptions& o) {
  SuiteReport rep;
  rep.name = "oriented";
  for_each_labelled(o, [&](const std::string& name, const TLabelledPoset& lp) {
    ++rep.checks;
    if (!oriented_check(lp)) rep.fail("labelling not recognised as oriented: " + name);
    for (const ConvexSubposet& q : convex_subposets(lp.poset())) {
      ++rep.instances;
      ++rep.checks;
      if (!is_quasisymmetric(kfunc(lp, q.members(), o.ncap))) {
        rep.fail("not quasisymmetric: " + name + " (" + labels_str(lp) + ") on " + set_str(q.members()));
      }
    }
  });
  return rep;
}

SuiteReport verify_eta_star(const SuiteOptions& o) {
  SuiteReport rep;
  rep.name = "eta-star";
  rep.counters["collisions"] = 0;
  for_each_labelled(o, [&](const std::string& name, const TLabelledPoset& lp) {
    auto subs = convex_subposets(lp.poset());
    for (const auto& q : subs) {
      for (const auto& r : subs) {
        ++rep.instances;
        std::string where = instance_str(name, lp, q.members(), r.members());
        std::unordered_map<TableauPair, std::pair<Tableau, Tableau>, PairHash> seen;
        for (const Tableau& w : enumerate(lp, q.members(), o.ncap)) {
          for (const Tableau& s : enumerate(lp, r.members(), o.ncap)) {
            ++rep.checks;
            TransferContext ctx(lp, q, r, w, s);
            TableauPair out = eta_star(ctx);
            if (!respects(lp, out.alpha) || !respects(lp, out.beta)) {
              rep.fail("output violates the labelling: " + where);
              continue;
            }
            if (weight_exponent(out.alpha) + weight_exponent(out.beta) != weight_exponent(w) + weight_exponent(s)) {
              rep.fail("weight not preserved: " + where);
            }
            auto [it, fresh] = seen.try_emplace(out, w, s);
            if (!fresh) {
              if (rep.counters["collisions"]++ == 0) {
                rep.table.push_back("collision: " + where + " omega=" + tableau_str(it->second.first) + " sigma=" +
                                    tableau_str(it->second.second) + " and omega=" + tableau_str(w) +
                                    " sigma=" + tableau_str(s) + " both give alpha=" + tableau_str(out.alpha) +
                                    " beta=" + tableau_str(out.beta));
              }
            }
          }
        }
      }
    }
  });
  return rep;
}

std::vector<std::string> suite_names() {
  return {"celltransfer", "injection", "algorithm-oracle", "schur", "skewschur", "ideals", "oriented", "eta-star"};
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& o) {
  if (name == "celltransfer") return verify_celltransfer(o);
  if (name == "injection") return verify_injection(o);
  if (name == "algorithm-oracle") return verify_algorithm_oracle(o);
  if (name == "schur") return verify_schur(o);
  if (name == "skewschur") return verify_skewschur(o);
  if (name == "ideals") return verify_ideals(o);
  if (name == "oriented") return verify_oriented(o);
  if (name == "eta-star") return verify_eta_star(o);
  throw Error(ErrorCode::UnknownSuite, "unknown suite \"" + name + "\"");
}

}  // namespace celltransfer
