#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "celltransfer/genfunc.hpp"
#include "celltransfer/shapes.hpp"
#include "celltransfer/transfer.hpp"

namespace celltransfer {

struct NamedPoset {
  std::string name;
  Poset poset;
};

/// Small test posets: chains, antichains, V, Λ, Y, B_2, the 2x2 grid and a
/// diamond with a tail, keeping those with at most `max_size` elements.
std::vector<NamedPoset> catalogue(int max_size);

/// All 2^(#covers) labellings by the weak and strict steps, weak-first.
std::vector<TLabelledPoset> oriented_labellings(const Poset& p);

struct SuiteOptions {
  int max_poset = 5;
  int ncap = 3;
  int max_size = 4;    // partition sizes for the schur suite
  int max_sstar = 12;  // instances with larger S* are skipped by the oracle suite
  int rows = 3;        // skew suite: number of rows k
  int max_part = 3;    // skew suite: largest part
  bool schur = true;   // skew and schur suites: also check Schur positivity
};

struct SuiteReport {
  std::string name;
  long long instances = 0;
  long long checks = 0;
  long long failures = 0;
  long long skipped = 0;
  std::optional<std::string> counterexample;
  /// Optional human-readable detail, one entry per line.
  std::vector<std::string> table;
  /// Named tallies beyond pass/fail, e.g. collisions found.
  std::map<std::string, long long> counters;

  bool ok() const { return failures == 0; }
  void fail(const std::string& what);
  std::string summary() const;
};

SuiteReport verify_celltransfer(const SuiteOptions& o);
SuiteReport verify_injection(const SuiteOptions& o);
SuiteReport verify_algorithm_oracle(const SuiteOptions& o);
SuiteReport verify_schur(const SuiteOptions& o);
SuiteReport verify_skewschur(const SuiteOptions& o);
SuiteReport verify_ideals(const SuiteOptions& o);
SuiteReport verify_oriented(const SuiteOptions& o);
SuiteReport verify_eta_star(const SuiteOptions& o);

std::vector<std::string> suite_names();
/// Throws UnknownSuite.
SuiteReport run_suite(const std::string& name, const SuiteOptions& o);

/// Partitions of n, lexicographically decreasing.
std::vector<Partition> partitions_of(int n);
/// Partitions with at most `rows` parts, each at most `max_part`, including the empty one.
std::vector<Partition> partitions_in_box(int rows, int max_part);

}  // namespace celltransfer
