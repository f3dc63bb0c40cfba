#include "celltransfer/symmetric.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "celltransfer/error.hpp"

namespace celltransfer {

const char* to_string(Basis b) {
  switch (b) {
    case Basis::Monomial: return "monomial";
    case Basis::MonomialQSym: return "monomial-qsym";
    case Basis::FundamentalQSym: return "fundamental-qsym";
    case Basis::Schur: return "schur";
  }
  return "?";
}

bool BasisExpansion::positive() const { return exact() && !negative_witness(); }

std::optional<std::pair<std::vector<int>, BigInt>> BasisExpansion::negative_witness() const {
  for (const auto& entry : coeffs) {
    if (entry.second < 0) return entry;
  }
  return std::nullopt;
}

namespace {

std::vector<int> padded(const std::vector<int>& parts, int nvars) {
  std::vector<int> v(parts);
  v.resize(nvars, 0);
  return v;
}

int part_count(const std::vector<int>& v) {
  return static_cast<int>(std::count_if(v.begin(), v.end(), [](int x) { return x != 0; }));
}

int total(const std::vector<int>& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

void check_parts(const std::vector<int>& parts) {
  for (int x : parts) {
    if (x <= 0) throw Error(ErrorCode::InvalidInput, "basis index parts must be positive");
  }
}

// All weak compositions of n into k parts.
void weak_compositions(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> cur(k, 0);
  auto rec = [&](auto& self, int i, int left) -> void {
    if (i == k - 1) {
      cur[i] = left;
      visit(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[i] = v;
      self(self, i + 1, left - v);
    }
  };
  if (k == 0) {
    if (n == 0) visit(cur);
    return;
  }
  rec(rec, 0, n);
}

// Content with zeros removed and sorted decreasing; Kostka numbers do not see
// the order of the content.
std::vector<int> sorted_content(std::vector<int> c) {
  c.erase(std::remove(c.begin(), c.end(), 0), c.end());
  std::sort(c.rbegin(), c.rend());
  return c;
}

struct KostkaCache {
  std::mutex mutex;
  std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt> values;
};

KostkaCache& kostka_cache() {
  static KostkaCache cache;
  return cache;
}

// Removes the largest entry as a horizontal strip of size content.back().
BigInt kostka_rec(const std::vector<int>& lambda, const std::vector<int>& content,
                  std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt>& memo) {
  if (content.empty()) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, content);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  int strip = content.back();
  std::vector<int> rest(content.begin(), content.end() - 1);
  BigInt count = 0;
  std::vector<int> kappa(lambda.size());
  // κ_i ranges over [λ_{i+1}, λ_i]; the strip λ/κ has size `strip`.
  auto rec = [&](auto& self, std::size_t i, int left) -> void {
    if (i == lambda.size()) {
      if (left != 0) return;
      std::vector<int> k = kappa;
      while (!k.empty() && k.back() == 0) k.pop_back();
      count += kostka_rec(k, rest, memo);
      return;
    }
    int low = i + 1 < lambda.size() ? lambda[i + 1] : 0;
    for (int v = lambda[i]; v >= low; --v) {
      int take = lambda[i] - v;
      if (take > left) break;
      kappa[i] = v;
      self(self, i + 1, left - take);
    }
  };
  rec(rec, 0, strip);
  memo.emplace(key, count);
  return count;
}

}  // namespace

BigInt kostka_number(const std::vector<int>& lambda, const std::vector<int>& content) {
  std::vector<int> lam = lambda;
  while (!lam.empty() && lam.back() == 0) lam.pop_back();
  for (std::size_t i = 0; i + 1 < lam.size(); ++i) {
    if (lam[i] < lam[i + 1]) throw Error(ErrorCode::MalformedPartitions, "shape must be a partition");
  }
  for (int c : content) {
    if (c < 0) throw Error(ErrorCode::InvalidInput, "content must be nonnegative");
  }
  if (total(lam) != total(content)) return 0;
  std::vector<int> c = sorted_content(content);
  auto& cache = kostka_cache();
  std::lock_guard lock(cache.mutex);
  return kostka_rec(lam, c, cache.values);
}

ExponentPolynomial monomial_symmetric(const std::vector<int>& lambda, int nvars) {
  check_parts(lambda);
  ExponentPolynomial p(nvars);
  if (static_cast<int>(lambda.size()) > nvars) return p;
  std::vector<int> v = padded(lambda, nvars);
  std::sort(v.begin(), v.end());
  do {
    p.add_term(Exponent::from(v), 1);
  } while (std::next_permutation(v.begin(), v.end()));
  return p;
}

ExponentPolynomial monomial_quasisymmetric(const std::vector<int>& alpha, int nvars) {
  check_parts(alpha);
  ExponentPolynomial p(nvars);
  int k = static_cast<int>(alpha.size());
  if (k > nvars) return p;
  // Choose positions i_1 < ... < i_k via a selection mask.
  std::vector<bool> pick(nvars, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    Exponent e;
    int j = 0;
    for (int i = 0; i < nvars; ++i)
      if (pick[i]) e.set(i, alpha[j++]);
    p.add_term(e, 1);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return p;
}

ExponentPolynomial fundamental_quasisymmetric(const std::vector<int>& alpha, int nvars) {
  check_parts(alpha);
  ExponentPolynomial p(nvars);
  // Refinements split each part independently into a composition of it.
  std::vector<int> beta;
  auto rec = [&](auto& self, std::size_t i, int left) -> void {
    if (left == 0) {
      if (i + 1 == alpha.size()) {
        p = p + monomial_quasisymmetric(beta, nvars);
        return;
      }
      self(self, i + 1, alpha[i + 1]);
      return;
    }
    for (int v = left; v >= 1; --v) {
      beta.push_back(v);
      self(self, i, left - v);
      beta.pop_back();
    }
  };
  if (alpha.empty()) return ExponentPolynomial::constant(nvars, 1);
  rec(rec, 0, alpha[0]);
  return p;
}

ExponentPolynomial schur_polynomial(const std::vector<int>& lambda, int nvars) {
  ExponentPolynomial p(nvars);
  if (part_count(lambda) > nvars) return p;
  weak_compositions(total(lambda), nvars, [&](const std::vector<int>& kappa) {
    BigInt k = kostka_number(lambda, kappa);
    if (k != 0) p.add_term(Exponent::from(kappa), k);
  });
  return p;
}

ExponentPolynomial schur_dominant(const std::vector<int>& lambda, int nvars) {
  static std::mutex mutex;
  static std::map<std::pair<std::vector<int>, int>, ExponentPolynomial> cache;
  auto key = std::make_pair(lambda, nvars);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  ExponentPolynomial p(nvars);
  if (part_count(lambda) <= nvars) {
    for (const Exponent& kappa : dominant_exponents(total(lambda), nvars)) {
      p.add_term(kappa, kostka_number(lambda, kappa.to_vector(nvars)));
    }
  }
  std::lock_guard lock(mutex);
  cache.emplace(key, p);
  return p;
}

namespace {

void check_truncation(Basis basis, int nvars, int degree, const ExpandOptions& options) {
  if (basis != Basis::Monomial && basis != Basis::Schur) return;
  if (nvars >= degree) return;
  if (options.length_bound && *options.length_bound <= nvars) return;
  throw Error(ErrorCode::TruncationTooSmall, "degree " + std::to_string(degree) + " needs at least " +
                                                 std::to_string(degree) + " variables, have " +
                                                 std::to_string(nvars));
}

bool left_justified(const Exponent& e, int nvars) {
  bool zero_seen = false;
  for (int i = 0; i < nvars; ++i) {
    if (e[i] == 0) {
      zero_seen = true;
    } else if (zero_seen) {
      return false;
    }
  }
  return true;
}

ExponentPolynomial basis_element(Basis basis, const std::vector<int>& index, int nvars) {
  switch (basis) {
    case Basis::Monomial: return monomial_symmetric(index, nvars);
    case Basis::MonomialQSym: return monomial_quasisymmetric(index, nvars);
    case Basis::FundamentalQSym: return fundamental_quasisymmetric(index, nvars);
    case Basis::Schur: return schur_polynomial(index, nvars);
  }
  return ExponentPolynomial(nvars);
}

}  // namespace

BasisExpansion expand_schur_dominant(const ExponentPolynomial& dominant, const ExpandOptions& options) {
  const int nvars = dominant.nvars();
  check_truncation(Basis::Schur, nvars, dominant.degree(), options);
  BasisExpansion out{Basis::Schur, nvars, {}, ExponentPolynomial(nvars)};
  ExponentPolynomial rest = dominant;
  while (!rest.is_zero()) {
    auto top = std::prev(rest.terms().end());
    Exponent lambda = top->first;
    BigInt c = top->second;
    if (!lambda.is_dominant(nvars)) {
      throw Error(ErrorCode::InvalidInput, "expected only dominant exponents");
    }
    out.coeffs.emplace_back(lambda.packed(nvars), c);
    rest = rest - schur_dominant(lambda.packed(nvars), nvars) * c;
  }
  return out;
}

BasisExpansion expand(const ExponentPolynomial& p, Basis basis, const ExpandOptions& options) {
  const int nvars = p.nvars();
  check_truncation(basis, nvars, p.degree(), options);
  BasisExpansion out{basis, nvars, {}, ExponentPolynomial(nvars)};

  if (basis == Basis::Schur) {
    out = expand_schur_dominant(p.dominant_part(), options);
    if (!is_symmetric(p)) {
      out.residual = ExponentPolynomial(nvars);
      out.residual = p - reconstruct(out);
    }
    return out;
  }

  if (basis == Basis::Monomial) {
    ExponentPolynomial rest = p;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
      if (!it->first.is_dominant(nvars)) continue;
      std::vector<int> lambda = it->first.packed(nvars);
      out.coeffs.emplace_back(lambda, it->second);
      if (lambda.empty()) {
        rest.add_term(it->first, -it->second);
      } else {
        rest = rest - monomial_symmetric(lambda, nvars) * it->second;
      }
    }
    out.residual = rest;
    return out;
  }

  // Quasisymmetric bases: the lexicographically largest left-justified
  // exponent indexes the next basis element; refinements are smaller.
  ExponentPolynomial rest = p;
  for (;;) {
    auto it = rest.terms().rbegin();
    while (it != rest.terms().rend() && !left_justified(it->first, nvars)) ++it;
    if (it == rest.terms().rend()) break;
    std::vector<int> alpha = it->first.packed(nvars);
    BigInt c = it->second;
    out.coeffs.emplace_back(alpha, c);
    if (alpha.empty()) {
      rest.add_term(Exponent(), -c);
    } else {
      rest = rest - basis_element(basis, alpha, nvars) * c;
    }
  }
  out.residual = rest;
  return out;
}

ExponentPolynomial reconstruct(const BasisExpansion& e) {
  ExponentPolynomial sum = e.residual;
  for (const auto& [index, c] : e.coeffs) {
    if (index.empty()) {
      sum.add_term(Exponent(), c);
    } else {
      sum = sum + basis_element(e.basis, index, e.nvars) * c;
    }
  }
  return sum;
}

ExponentPolynomial multiply_symmetric_dominant(const ExponentPolynomial& p_dominant,
                                               const ExponentPolynomial& q_dominant) {
  if (p_dominant.nvars() != q_dominant.nvars()) throw Error(ErrorCode::VarMismatch, "variable counts differ");
  const int nvars = p_dominant.nvars();
  auto degrees = [](const ExponentPolynomial& p) {
    std::vector<int> d;
    for (const auto& [e, c] : p.terms()) d.push_back(e.degree());
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    return d;
  };
  auto lookup = [nvars](const ExponentPolynomial& p, std::vector<int> v) -> const BigInt* {
    std::sort(v.rbegin(), v.rend());
    auto it = p.terms().find(Exponent::from(v));
    (void)nvars;
    return it == p.terms().end() ? nullptr : &it->second;
  };

  ExponentPolynomial out(nvars);
  for (int dp : degrees(p_dominant)) {
    for (int dq : degrees(q_dominant)) {
      for (const Exponent& nu_e : dominant_exponents(dp + dq, nvars)) {
        std::vector<int> nu = nu_e.to_vector(nvars);
        std::vector<int> a(nvars, 0);
        BigInt coef = 0;
        auto rec = [&](auto& self, int i, int left) -> void {
          if (i == nvars) {
            if (left != 0) return;
            const BigInt* cp = lookup(p_dominant, a);
            if (!cp) return;
            std::vector<int> b(nvars);
            for (int j = 0; j < nvars; ++j) b[j] = nu[j] - a[j];
            const BigInt* cq = lookup(q_dominant, b);
            if (cq) coef += *cp * *cq;
            return;
          }
          for (int v = std::min(nu[i], left); v >= 0; --v) {
            a[i] = v;
            self(self, i + 1, left - v);
          }
          a[i] = 0;
        };
        rec(rec, 0, dp);
        out.add_term(nu_e, coef);
      }
    }
  }
  return out;
}

}  // namespace celltransfer
