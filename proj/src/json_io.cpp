#include "celltransfer/json_io.hpp"

#include <map>
#include <string>

namespace celltransfer::json {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const Json& x : j) out.push_back(as_int(x, what));
  return out;
}

BigInt big_from(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (!j.is_string()) bad("coefficient must be a decimal string");
  const std::string& s = j.get_ref<const std::string&>();
  std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos) {
    bad("malformed integer \"" + s + "\"");
  }
  return BigInt(s);
}

Json int_array(const std::vector<int>& v) {
  Json a = Json::array();
  for (int x : v) a.push_back(x);
  return a;
}

}  // namespace

Json to_json(const Poset& p) {
  Json covers = Json::array();
  for (const Cover& c : p.covers()) covers.push_back({c.lower, c.upper});
  return {{"n", p.size()}, {"covers", covers}};
}

Poset poset_from_json(const Json& j) {
  int n = as_int(field(j, "n"), "n");
  std::vector<Cover> covers;
  const Json& cs = field(j, "covers");
  if (!cs.is_array()) bad("covers must be an array");
  for (const Json& c : cs) {
    if (!c.is_array() || c.size() != 2) bad("each cover must be a pair [lower, upper]");
    covers.push_back({as_int(c[0], "cover"), as_int(c[1], "cover")});
  }
  return Poset(n, covers);
}

Json members_to_json(ElementSet s) { return {{"members", int_array(s.to_vector())}}; }

ElementSet members_from_json(const Json& j, int n) {
  ElementSet out;
  for (int id : int_list(field(j, "members"), "members")) {
    if (id < 0 || id >= n) bad("member " + std::to_string(id) + " out of range");
    if (out.contains(id)) bad("member " + std::to_string(id) + " listed twice");
    out.insert(id);
  }
  return out;
}

Json to_json(const StepFunction& f) {
  switch (f.kind()) {
    case StepFunction::Kind::Weak: return "weak";
    case StepFunction::Kind::Strict: return "strict";
    case StepFunction::Kind::Table: {
      Json t = Json::array();
      for (LabelValue v : f.values()) {
        if (v == kInfinity) {
          t.push_back("inf");
        } else {
          t.push_back(v);
        }
      }
      return {{"table", t}};
    }
  }
  return nullptr;
}

StepFunction step_from_json(const Json& j) {
  if (j.is_string()) {
    if (j == "weak") return StepFunction::weak();
    if (j == "strict") return StepFunction::strict();
    bad("unknown label \"" + j.get<std::string>() + "\"");
  }
  std::vector<LabelValue> values;
  const Json& t = field(j, "table");
  if (!t.is_array()) bad("table must be an array");
  for (const Json& v : t) {
    if (v.is_string() && v == "inf") {
      values.push_back(kInfinity);
    } else if (v.is_number_integer()) {
      values.push_back(v.get<LabelValue>());
    } else {
      bad("table entries must be integers or \"inf\"");
    }
  }
  return StepFunction::table(std::move(values));
}

Json to_json(const TLabelledPoset& lp) {
  Json labels = Json::array();
  for (std::size_t i = 0; i < lp.labels().size(); ++i) {
    const Cover& c = lp.poset().covers()[i];
    labels.push_back({{"edge", {c.lower, c.upper}}, {"fn", to_json(lp.labels()[i])}});
  }
  return {{"poset", to_json(lp.poset())}, {"labels", labels}};
}

TLabelledPoset labelled_from_json(const Json& j) {
  Poset p = poset_from_json(field(j, "poset"));
  std::vector<std::pair<Cover, StepFunction>> edges;
  const Json& ls = field(j, "labels");
  if (!ls.is_array()) bad("labels must be an array");
  for (const Json& l : ls) {
    const Json& e = field(l, "edge");
    if (!e.is_array() || e.size() != 2) bad("edge must be a pair");
    edges.emplace_back(Cover{as_int(e[0], "edge"), as_int(e[1], "edge")}, step_from_json(field(l, "fn")));
  }
  return TLabelledPoset::from_edges(std::move(p), edges);
}

Json to_json(const Tableau& t) {
  // Keys sort as strings; that is the canonical order.
  Json values = Json::object();
  for (ElementId id : t.domain()) values[std::to_string(id)] = t.at(id);
  return {{"values", values}};
}

Tableau tableau_from_json(const Json& j, int n) {
  const Json& values = field(j, "values");
  if (!values.is_object()) bad("values must be an object");
  ElementSet domain;
  std::vector<std::pair<int, int>> entries;
  for (const auto& [key, v] : values.items()) {
    std::size_t used = 0;
    int id = -1;
    try {
      id = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || id < 0 || id >= n) bad("bad element id \"" + key + "\"");
    int x = as_int(v, "tableau value");
    if (x < 1 || x > Tableau::kMaxValue) bad("tableau values must lie in 1..255");
    domain.insert(id);
    entries.emplace_back(id, x);
  }
  Tableau t(domain);
  for (auto [id, x] : entries) t.set(id, x);
  return t;
}

Json to_json(const ExponentPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back({{"exp", int_array(e.to_vector(p.nvars()))}, {"coef", c.str()}});
  }
  return {{"nvars", p.nvars()}, {"terms", terms}};
}

ExponentPolynomial polynomial_from_json(const Json& j) {
  int nvars = as_int(field(j, "nvars"), "nvars");
  ExponentPolynomial p(nvars);
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) bad("terms must be an array");
  for (const Json& t : terms) {
    std::vector<int> e = int_list(field(t, "exp"), "exp");
    if (static_cast<int>(e.size()) != nvars) bad("exponent length differs from nvars");
    p.add_term(Exponent::from(e), big_from(field(t, "coef")));
  }
  return p;
}

Json to_json(const BasisExpansion& e) {
  Json coeffs = Json::array();
  for (const auto& [index, c] : e.coeffs) coeffs.push_back({{"index", int_array(index)}, {"coef", c.str()}});
  return {{"basis", to_string(e.basis)},
          {"nvars", e.nvars},
          {"coeffs", coeffs},
          {"residual", to_json(e.residual)},
          {"exact", e.exact()},
          {"positive", e.positive()}};
}

BasisExpansion expansion_from_json(const Json& j) {
  BasisExpansion e;
  std::string name = field(j, "basis").get<std::string>();
  bool found = false;
  for (Basis b : {Basis::Monomial, Basis::MonomialQSym, Basis::FundamentalQSym, Basis::Schur}) {
    if (name == to_string(b)) {
      e.basis = b;
      found = true;
    }
  }
  if (!found) bad("unknown basis \"" + name + "\"");
  e.nvars = as_int(field(j, "nvars"), "nvars");
  for (const Json& c : field(j, "coeffs")) e.coeffs.emplace_back(int_list(field(c, "index"), "index"), big_from(field(c, "coef")));
  e.residual = polynomial_from_json(field(j, "residual"));
  return e;
}

Json to_json(const SkewShape& s) { return {{"outer", int_array(s.outer())}, {"inner", int_array(s.inner())}}; }

SkewShape skew_from_json(const Json& j) {
  std::vector<int> inner;
  if (j.contains("inner")) inner = int_list(j.at("inner"), "inner");
  return SkewShape(int_list(field(j, "outer"), "outer"), inner);
}

Json to_json(const CylindricShape& c) {
  Json cells = Json::array();
  for (const LatticePoint& p : c.cells()) cells.push_back({p.a, p.b});
  return {{"k", c.k()}, {"n", c.n()}, {"cells", cells}};
}

CylindricShape cylindric_from_json(const Json& j) {
  std::vector<LatticePoint> points;
  const Json& cells = field(j, "cells");
  if (!cells.is_array()) bad("cells must be an array");
  for (const Json& c : cells) {
    if (!c.is_array() || c.size() != 2) bad("cells must be pairs [a, b]");
    points.push_back({as_int(c[0], "cell"), as_int(c[1], "cell")});
  }
  return CylindricShape(as_int(field(j, "k"), "k"), as_int(field(j, "n"), "n"), points);
}

Json to_json(const DifferenceReport& r) {
  Json out = {{"difference", to_json(r.difference)},
              {"monomial_positive", r.monomial.positive},
              {"symmetric", r.symmetric},
              {"quasisymmetric", r.quasisymmetric}};
  if (r.monomial.witness) {
    out["witness"] = {{"exp", int_array(r.monomial.witness->first.to_vector(r.difference.nvars()))},
                      {"coef", r.monomial.witness->second.str()}};
  }
  if (r.schur) {
    out["schur"] = to_json(*r.schur);
    out["schur_positive"] = r.schur->positive();
  }
  return out;
}

namespace {

Tableau tableau_from_rows(const GridPoset& grid, const SkewShape& shape, const Json& rows) {
  if (!rows.is_array()) bad("rows must be an array of arrays");
  ElementSet domain = grid.members(shape);
  Tableau t(domain);
  std::map<int, std::vector<Cell>> by_row;
  for (const Cell& c : shape.cells()) by_row[c.row].push_back(c);
  for (const auto& [row, cells] : by_row) {
    if (row > static_cast<int>(rows.size())) bad("missing entries for row " + std::to_string(row));
    std::vector<int> values = int_list(rows[row - 1], "row");
    if (values.size() != cells.size()) {
      bad("row " + std::to_string(row) + " needs " + std::to_string(cells.size()) + " entries");
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (values[i] < 1 || values[i] > Tableau::kMaxValue) bad("tableau values must lie in 1..255");
      t.set(grid.id(cells[i]), values[i]);
    }
  }
  for (std::size_t row = 1; row <= rows.size(); ++row) {
    if (!by_row.count(static_cast<int>(row)) && !rows[row - 1].empty()) {
      bad("row " + std::to_string(row) + " of the shape is empty");
    }
  }
  return t;
}

}  // namespace

TransferBundle bundle_from_json(const Json& j) {
  if (j.contains("q_shape")) {
    SkewShape qs = skew_from_json(field(j, "q_shape"));
    SkewShape rs = skew_from_json(field(j, "r_shape"));
    GridPoset grid = grid_for({qs, rs});
    TransferBundle b{grid.labelled(),
                     grid.subposet(qs),
                     grid.subposet(rs),
                     tableau_from_rows(grid, qs, field(j, "omega_rows")),
                     tableau_from_rows(grid, rs, field(j, "sigma_rows")),
                     grid};
    return b;
  }
  TLabelledPoset lp = labelled_from_json(field(j, "labelled"));
  int n = lp.size();
  ConvexSubposet q = lp.poset().convex(members_from_json(field(j, "q"), n));
  ConvexSubposet r = lp.poset().convex(members_from_json(field(j, "r"), n));
  Tableau omega = tableau_from_json(field(j, "omega"), n);
  Tableau sigma = tableau_from_json(field(j, "sigma"), n);
  return TransferBundle{std::move(lp), q, r, omega, sigma, std::nullopt};
}

Json transfer_report(const TransferContext& ctx, const TransferResult& res, const TransferSets& sets) {
  Json trace = Json::array();
  for (const TransferRound& round : res.rounds) trace.push_back(int_array(round.critical.to_vector()));
  return {{"alpha", to_json(res.alpha)},
          {"beta", to_json(res.beta)},
          {"meet", members_to_json(ctx.meet_domain())},
          {"join", members_to_json(ctx.join_domain())},
          {"Sstar", int_array(sets.s_star.to_vector())},
          {"Sdiamond", int_array(res.transferred.to_vector())},
          {"iterations", res.iterations},
          {"trace", trace}};
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace celltransfer::json
