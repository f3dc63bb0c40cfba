// Command-line front end for the celltransfer library.
//
// Exit codes: 0 success or verdict true, 1 verdict false (a witness is
// printed), 2 usage or input error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "celltransfer/json_io.hpp"
#include "celltransfer/minmax.hpp"
#include "celltransfer/verify.hpp"
#include "render.hpp"

using namespace celltransfer;
using json::Json;

namespace {

constexpr int kOk = 0;
constexpr int kVerdictFalse = 1;
constexpr int kInputError = 2;

Json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw Error(ErrorCode::InvalidInput, "not an integer list: \"" + text + "\"");
    out.push_back(v);
  }
  return out;
}

// "3,2/1" or "3,2".
SkewShape parse_shape(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return SkewShape(parse_ints(text));
  return SkewShape(parse_ints(text.substr(0, slash)), parse_ints(text.substr(slash + 1)));
}

ElementSet parse_members(const std::string& text, int n) {
  ElementSet s;
  for (int id : parse_ints(text)) {
    if (id < 0 || id >= n) throw Error(ErrorCode::InvalidInput, "element " + std::to_string(id) + " out of range");
    s.insert(id);
  }
  return s;
}

std::string expansion_table(const BasisExpansion& e) {
  std::ostringstream os;
  const char* symbol = e.basis == Basis::Schur ? "s" : e.basis == Basis::Monomial ? "m"
                       : e.basis == Basis::MonomialQSym                           ? "M"
                                                                                  : "L";
  if (e.coeffs.empty()) os << "  0\n";
  for (const auto& [index, c] : e.coeffs) {
    os << "  " << (c < 0 ? "" : "+") << c << "  " << symbol << "(";
    for (std::size_t i = 0; i < index.size(); ++i) os << (i ? "," : "") << index[i];
    os << ")\n";
  }
  if (!e.exact()) os << "  residual: " << e.residual.to_string() << "\n";
  return os.str();
}

void print_difference(const DifferenceReport& r) {
  std::cout << "difference: " << r.difference.to_string() << "\n";
  std::cout << "monomial-positive: " << (r.monomial.positive ? "yes" : "no") << "\n";
  if (r.monomial.witness) {
    std::cout << "  witness: coefficient " << r.monomial.witness->second << " at exponent (";
    auto v = r.monomial.witness->first.to_vector(r.difference.nvars());
    for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? "," : "") << v[i];
    std::cout << ")\n";
  }
  std::cout << "symmetric: " << (r.symmetric ? "yes" : "no") << "\n";
  std::cout << "quasisymmetric: " << (r.quasisymmetric ? "yes" : "no") << "\n";
  if (r.schur) {
    std::cout << "schur-positive: " << (r.schur->positive() ? "yes" : "no") << "\n";
    std::cout << expansion_table(*r.schur);
  }
}

int difference_exit(const DifferenceReport& r) {
  if (!r.monomial.positive) return kVerdictFalse;
  if (r.schur && !r.schur->positive()) return kVerdictFalse;
  return kOk;
}

struct Flags {
  // build
  std::string shape, cylindric_file, poset_file, omega;
  int chain = 0, antichain = 0, boolean = 0;
  bool transposed = false;
  // shared
  std::string input;
  int ncap = 3;
  bool as_json = false;
  bool trace = false;
  // tableaux / diff
  std::string members, q, r, shape_q, shape_r;
  bool ideal = false;
  // skewdiff
  std::string lam, mu, nu, rho;
  int nvars = 4;
  // expand
  std::string basis = "schur";
  int length_bound = 0;
  // verify
  std::string suite;
  SuiteOptions suite_options;
  int max_cells = 0;
  bool no_schur = false;
  bool table = false;
};

int cmd_build(const Flags& f) {
  Json out;
  int chosen = !f.shape.empty() + !f.cylindric_file.empty() + (f.chain > 0) + (f.antichain > 0) + (f.boolean > 0) +
               !f.poset_file.empty();
  if (chosen != 1) {
    throw Error(ErrorCode::InvalidInput,
                "choose exactly one of --shape, --cylindric, --chain, --antichain, --boolean, --poset");
  }
  if (!f.shape.empty()) {
    SkewShape s = parse_shape(f.shape);
    CellPoset<Cell> cp = young_labelling(s);
    Json cells = Json::array();
    for (const Cell& c : cp.cells) cells.push_back({c.row, c.col});
    out = {{"labelled", json::to_json(cp.labelled)}, {"cells", cells}, {"shape", json::to_json(s)}};
  } else if (!f.cylindric_file.empty()) {
    CylindricShape cs = json::cylindric_from_json(read_json(f.cylindric_file));
    auto cp = cylindric_labelling(cs, f.transposed ? CylindricConvention::Transposed : CylindricConvention::Verbatim);
    Json cells = Json::array();
    for (const LatticePoint& c : cp.cells) cells.push_back({c.a, c.b});
    out = {{"labelled", json::to_json(cp.labelled)}, {"cells", cells}};
  } else if (!f.poset_file.empty()) {
    Poset p = json::poset_from_json(read_json(f.poset_file));
    if (f.omega.empty()) throw Error(ErrorCode::InvalidInput, "--poset needs --omega");
    out = {{"labelled", json::to_json(pomega_labelling(p, parse_ints(f.omega)))}};
  } else {
    Poset p = f.chain > 0 ? chain(f.chain) : f.antichain > 0 ? antichain(f.antichain) : boolean_lattice(f.boolean);
    std::vector<StepFunction> weak(p.covers().size(), StepFunction::weak());
    out = {{"labelled", json::to_json(TLabelledPoset(p, weak))}};
  }
  std::cout << json::dump(out) << "\n";
  return kOk;
}

int cmd_tableaux(const Flags& f) {
  if (!f.shape.empty()) {
    SkewShape s = parse_shape(f.shape);
    GridPoset grid = grid_for({s});
    auto all = enumerate(grid.labelled(), grid.members(s), f.ncap);
    if (f.as_json) {
      Json arr = Json::array();
      for (const Tableau& t : all) arr.push_back(json::to_json(t));
      std::cout << json::dump({{"count", all.size()}, {"tableaux", arr}}) << "\n";
    } else {
      for (const Tableau& t : all) std::cout << render::grid_tableau(grid, t) << "\n";
      std::cout << all.size() << " tableaux\n";
    }
    return kOk;
  }
  if (f.input.empty()) throw Error(ErrorCode::InvalidInput, "give --shape or --input");
  Json in = read_json(f.input);
  TLabelledPoset lp = json::labelled_from_json(in.contains("labelled") ? in.at("labelled") : in);
  ElementSet domain = f.members.empty() ? ElementSet::first(lp.size()) : parse_members(f.members, lp.size());
  auto all = enumerate(lp, domain, f.ncap);
  if (f.as_json) {
    Json arr = Json::array();
    for (const Tableau& t : all) arr.push_back(json::to_json(t));
    std::cout << json::dump({{"count", all.size()}, {"tableaux", arr}}) << "\n";
  } else {
    for (const Tableau& t : all) std::cout << render::poset_tableau(lp.poset(), t) << "\n";
    std::cout << all.size() << " tableaux\n";
  }
  return kOk;
}

int cmd_transfer(const Flags& f) {
  json::TransferBundle b = json::bundle_from_json(read_json(f.input.empty() ? "-" : f.input));
  TransferContext ctx(b.labelled, b.q, b.r, b.omega, b.sigma);
  TransferResult res = run_algorithm(ctx, true);
  TransferSets sets = compute_sets(ctx);
  if (f.as_json) {
    std::cout << json::dump(json::transfer_report(ctx, res, sets)) << "\n";
    return kOk;
  }
  auto show = [&](const Tableau& t, ElementSet marked) {
    return b.grid ? render::grid_tableau(*b.grid, t, marked) : render::poset_tableau(b.labelled.poset(), t, marked);
  };
  std::cout << "omega:\n" << show(b.omega, {}) << "sigma:\n" << show(b.sigma, {});
  if (f.trace) {
    for (std::size_t i = 0; i < res.rounds.size(); ++i) {
      const TransferRound& round = res.rounds[i];
      std::cout << "round " << i + 1 << ", " << round.critical.size() << " critical cell(s) marked *\n";
      std::cout << "meet side:\n" << show(round.meet_state, round.critical);
      std::cout << "join side:\n" << show(round.join_state, round.critical);
    }
  }
  std::cout << "alpha:\n" << show(res.alpha, res.transferred) << "beta:\n" << show(res.beta, res.transferred);
  std::cout << "rounds: " << res.iterations << ", transferred cells: " << res.transferred.size() << ", S* has "
            << sets.s_star.size() << "\n";
  return kOk;
}

int cmd_diff(const Flags& f) {
  DifferenceOptions opts;
  DifferenceReport report;
  if (!f.shape_q.empty() || !f.shape_r.empty()) {
    SkewShape a = parse_shape(f.shape_q), c = parse_shape(f.shape_r);
    GridPoset grid = grid_for({a, c});
    ConvexSubposet q = grid.subposet(a), r = grid.subposet(c);
    if (f.ideal) {
      report = ideal_difference(grid.labelled(), grid.poset().ideal(q.members()), grid.poset().ideal(r.members()),
                                f.ncap, opts);
    } else {
      report = cell_transfer_difference(grid.labelled(), q, r, f.ncap, opts);
    }
  } else {
    if (f.input.empty()) throw Error(ErrorCode::InvalidInput, "give --input with --q/--r, or --shape-q/--shape-r");
    Json in = read_json(f.input);
    TLabelledPoset lp = json::labelled_from_json(in.contains("labelled") ? in.at("labelled") : in);
    ElementSet q = parse_members(f.q, lp.size()), r = parse_members(f.r, lp.size());
    if (f.ideal) {
      report = ideal_difference(lp, lp.poset().ideal(q), lp.poset().ideal(r), f.ncap, opts);
    } else {
      report = cell_transfer_difference(lp, lp.poset().convex(q), lp.poset().convex(r), f.ncap, opts);
    }
  }
  if (f.as_json) {
    std::cout << json::dump(json::to_json(report)) << "\n";
  } else {
    print_difference(report);
  }
  return difference_exit(report);
}

int cmd_skewdiff(const Flags& f) {
  SkewPair sp(parse_ints(f.lam), parse_ints(f.mu), parse_ints(f.nu), parse_ints(f.rho));
  MinMaxShapes shapes = minmax(sp);
  DifferenceReport report = skew_difference(sp, f.nvars);
  bool incomparable = vset_incomparability_check(sp);
  if (f.as_json) {
    Json vset = Json::array();
    for (const Cell& c : shapes.vset) vset.push_back({c.row, c.col});
    Json out = json::to_json(report);
    out["max"] = json::to_json(shapes.max_shape);
    out["min"] = json::to_json(shapes.min_shape);
    out["vset"] = vset;
    out["vset_incomparable"] = incomparable;
    std::cout << json::dump(out) << "\n";
  } else {
    GridPoset grid(std::max(sp.k(), 1), std::max({1, sp.k() ? sp.lam()[0] : 0, sp.k() ? sp.nu()[0] : 0}));
    auto draw = [&](const SkewShape& s) {
      Tableau t(grid.members(s));
      for (ElementId e : t.domain()) t.set(e, 1);
      std::string pic = render::grid_tableau(grid, t, grid.members(shapes.vset));
      for (char& ch : pic)
        if (ch == '1') ch = '#';
      return pic;
    };
    std::cout << "max shape:\n" << draw(shapes.max_shape) << "min shape:\n" << draw(shapes.min_shape);
    std::cout << "V: " << shapes.vset.size() << " cell(s) (marked *), incomparability "
              << (incomparable ? "holds" : "FAILS") << "\n";
    print_difference(report);
  }
  if (!incomparable) return kVerdictFalse;
  return difference_exit(report);
}

int cmd_expand(const Flags& f) {
  ExponentPolynomial p = json::polynomial_from_json(read_json(f.input.empty() ? "-" : f.input));
  Basis basis;
  if (f.basis == "schur") {
    basis = Basis::Schur;
  } else if (f.basis == "monomial") {
    basis = Basis::Monomial;
  } else if (f.basis == "monomial-qsym") {
    basis = Basis::MonomialQSym;
  } else if (f.basis == "fundamental-qsym") {
    basis = Basis::FundamentalQSym;
  } else {
    throw Error(ErrorCode::InvalidInput, "unknown basis \"" + f.basis + "\"");
  }
  ExpandOptions opts;
  if (f.length_bound > 0) opts.length_bound = f.length_bound;
  BasisExpansion e = expand(p, basis, opts);
  if (f.as_json) {
    std::cout << json::dump(json::to_json(e)) << "\n";
  } else {
    std::cout << to_string(e.basis) << " expansion:\n" << expansion_table(e);
    std::cout << "positive: " << (e.positive() ? "yes" : "no") << "\n";
    if (!e.exact()) std::cout << "  witness: residual " << e.residual.to_string() << "\n";
    if (auto w = e.negative_witness()) {
      std::cout << "  witness: coefficient " << w->second << " at index (";
      for (std::size_t i = 0; i < w->first.size(); ++i) std::cout << (i ? "," : "") << w->first[i];
      std::cout << ")\n";
    }
  }
  return e.positive() ? kOk : kVerdictFalse;
}

int cmd_verify(Flags f) {
  if (f.max_cells > 0) f.suite_options.max_poset = f.max_cells;
  f.suite_options.schur = !f.no_schur;
  SuiteReport rep = run_suite(f.suite, f.suite_options);
  std::cout << rep.summary() << "\n";
  if (f.table || !rep.ok()) {
    for (const std::string& line : rep.table) std::cout << "  " << line << "\n";
  }
  if (rep.counterexample) std::cout << "first counterexample: " << *rep.counterexample << "\n";
  return rep.ok() ? kOk : kVerdictFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cell-transfer and positivity toolkit for labelled posets"};
  app.require_subcommand(1);
  Flags f;

  auto* build = app.add_subcommand("build", "Build a labelled poset and print it as JSON");
  build->add_option("--shape", f.shape, "Skew shape OUTER[/INNER], e.g. 3,2/1 (Young labelling)");
  build->add_option("--cylindric", f.cylindric_file, "JSON file {\"k\",\"n\",\"cells\"}");
  build->add_flag("--transposed", f.transposed, "Swap the weak and strict directions of the cylindric labelling");
  build->add_option("--chain", f.chain, "Chain with N elements, weak labels");
  build->add_option("--antichain", f.antichain, "Antichain with N elements");
  build->add_option("--boolean", f.boolean, "Boolean lattice on M atoms, weak labels");
  build->add_option("--poset", f.poset_file, "JSON poset file, labelled from --omega");
  build->add_option("--omega", f.omega, "Bijective labelling 1..n as a comma list, indexed by element id");

  auto* tableaux = app.add_subcommand("tableaux", "Enumerate tableaux with entries at most --ncap");
  tableaux->add_option("--shape", f.shape, "Skew shape OUTER[/INNER]");
  tableaux->add_option("--input", f.input, "Labelled poset JSON file, or - for stdin");
  tableaux->add_option("--members", f.members, "Comma list of element ids (default: all)");
  tableaux->add_option("--ncap", f.ncap, "Largest entry")->check(CLI::Range(1, 16));
  tableaux->add_flag("--json", f.as_json, "Print JSON");

  auto* transfer = app.add_subcommand("transfer", "Run the cell transfer on a JSON bundle");
  transfer->add_option("--input", f.input, "Bundle file, or - for stdin (default)");
  transfer->add_flag("--json", f.as_json, "Print the result as JSON");
  transfer->add_flag("--trace", f.trace, "Draw every round with its critical cells");

  auto* diff = app.add_subcommand("diff", "K(Q^R)K(QvR) - K(Q)K(R) and its positivity");
  diff->add_option("--input", f.input, "Labelled poset JSON file");
  diff->add_option("--q", f.q, "Members of Q");
  diff->add_option("--r", f.r, "Members of R");
  diff->add_option("--shape-q", f.shape_q, "Q as a skew shape in N^2");
  diff->add_option("--shape-r", f.shape_r, "R as a skew shape in N^2");
  diff->add_flag("--ideal", f.ideal, "Treat Q and R as order ideals (lattice meet and join)");
  diff->add_option("--ncap", f.ncap, "Number of variables")->check(CLI::Range(1, 16));
  diff->add_flag("--json", f.as_json, "Print JSON");

  auto* skewdiff = app.add_subcommand(
      "skewdiff",
      "s_max s_min - s_lam/mu s_nu/rho. The four partitions are padded with zeros to a common length before "
      "taking row-wise max and min; this padding changes the result, so it is part of the definition.");
  skewdiff->add_option("--lam", f.lam, "lambda, comma list")->required();
  skewdiff->add_option("--mu", f.mu, "mu, comma list (may be empty)");
  skewdiff->add_option("--nu", f.nu, "nu, comma list")->required();
  skewdiff->add_option("--rho", f.rho, "rho, comma list (may be empty)");
  skewdiff->add_option("--nvars", f.nvars, "Number of variables for the difference")->check(CLI::Range(1, 16));
  skewdiff->add_flag("--json", f.as_json, "Print JSON");

  auto* expand_cmd = app.add_subcommand("expand", "Expand a polynomial in a symmetric or quasisymmetric basis");
  expand_cmd->add_option("--input", f.input, "Polynomial JSON file, or - for stdin (default)");
  expand_cmd->add_option("--basis", f.basis, "schur | monomial | monomial-qsym | fundamental-qsym");
  expand_cmd->add_option("--length-bound", f.length_bound,
                         "Guaranteed bound on the number of parts; allows fewer variables than the degree");
  expand_cmd->add_flag("--json", f.as_json, "Print JSON");

  auto* verify = app.add_subcommand("verify", "Run an exhaustive verification suite");
  verify->add_option("suite", f.suite, "celltransfer | injection | algorithm-oracle | schur | skewschur | ideals | "
                                       "oriented | eta-star")
      ->required();
  verify->add_option("--ncap", f.suite_options.ncap, "Largest entry / number of variables")
      ->check(CLI::Range(1, 16));
  verify->add_option("--max-poset", f.suite_options.max_poset, "Largest catalogue poset");
  verify->add_option("--max-cells", f.max_cells, "Same as --max-poset");
  verify->add_option("--max-size", f.suite_options.max_size, "Largest partition size (schur)");
  verify->add_option("--max-sstar", f.suite_options.max_sstar, "Skip oracle instances with a larger S*");
  verify->add_option("--rows", f.suite_options.rows, "Rows of the skew suite");
  verify->add_option("--max-part", f.suite_options.max_part, "Largest part in the skew suite");
  verify->add_flag("--no-schur", f.no_schur, "Skip Schur expansions");
  verify->add_flag("--table", f.table, "Print the detail table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*build) return cmd_build(f);
    if (*tableaux) return cmd_tableaux(f);
    if (*transfer) return cmd_transfer(f);
    if (*diff) return cmd_diff(f);
    if (*skewdiff) return cmd_skewdiff(f);
    if (*expand_cmd) return cmd_expand(f);
    if (*verify) return cmd_verify(f);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
