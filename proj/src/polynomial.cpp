#include "celltransfer/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace celltransfer {

Exponent Exponent::from(const std::vector<int>& e) {
  if (e.size() > static_cast<std::size_t>(kMaxVars)) {
    throw Error(ErrorCode::BoundExceeded, "at most 16 variables are supported");
  }
  Exponent out;
  for (std::size_t i = 0; i < e.size(); ++i) out.set(static_cast<int>(i), e[i]);
  return out;
}

void Exponent::set(int i, int v) {
  if (v < 0 || v > 255) throw Error(ErrorCode::BoundExceeded, "exponent outside 0..255");
  e_[i] = static_cast<std::uint8_t>(v);
}

int Exponent::degree() const {
  int d = 0;
  for (auto v : e_) d += v;
  return d;
}

int Exponent::support() const {
  return static_cast<int>(std::count_if(e_.begin(), e_.end(), [](std::uint8_t v) { return v != 0; }));
}

bool Exponent::is_dominant(int nvars) const {
  for (int i = 1; i < nvars; ++i)
    if (e_[i] > e_[i - 1]) return false;
  return true;
}

std::vector<int> Exponent::to_vector(int nvars) const { return {e_.begin(), e_.begin() + nvars}; }

std::vector<int> Exponent::packed(int nvars) const {
  std::vector<int> out;
  for (int i = 0; i < nvars; ++i)
    if (e_[i]) out.push_back(e_[i]);
  return out;
}

Exponent Exponent::operator+(const Exponent& o) const {
  Exponent out;
  for (int i = 0; i < kMaxVars; ++i) out.set(i, e_[i] + o.e_[i]);
  return out;
}

bool Exponent::dominates(const Exponent& o) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (o.e_[i] > e_[i]) return false;
  return true;
}

Exponent Exponent::operator-(const Exponent& o) const {
  Exponent out;
  for (int i = 0; i < kMaxVars; ++i) out.e_[i] = static_cast<std::uint8_t>(e_[i] - o.e_[i]);
  return out;
}

std::size_t Exponent::hash() const {
  std::uint64_t lo, hi;
  std::memcpy(&lo, e_.data(), 8);
  std::memcpy(&hi, e_.data() + 8, 8);
  return static_cast<std::size_t>((lo * 0x9E3779B97F4A7C15ULL) ^ (hi + 0x632BE59BD9B4E019ULL + (lo << 6)));
}

ExponentPolynomial::ExponentPolynomial(int nvars) : nvars_(nvars) {
  if (nvars < 1 || nvars > Exponent::kMaxVars) {
    throw Error(ErrorCode::BoundExceeded, "variable count must be in 1..16");
  }
}

ExponentPolynomial ExponentPolynomial::constant(int nvars, const BigInt& c) {
  return monomial(nvars, Exponent(), c);
}

ExponentPolynomial ExponentPolynomial::monomial(int nvars, const Exponent& e, const BigInt& c) {
  ExponentPolynomial p(nvars);
  for (int i = nvars; i < Exponent::kMaxVars; ++i) {
    if (e[i] != 0) throw Error(ErrorCode::VarMismatch, "exponent uses more variables than the polynomial");
  }
  p.add_term(e, c);
  return p;
}

ExponentPolynomial ExponentPolynomial::variable(int nvars, int index) {
  Exponent e;
  e.set(index - 1, 1);
  return monomial(nvars, e);
}

BigInt ExponentPolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int ExponentPolynomial::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.degree());
  return d;
}

void ExponentPolynomial::add_term(const Exponent& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {

void check_vars(const ExponentPolynomial& p, const ExponentPolynomial& q) {
  if (p.nvars() != q.nvars()) {
    throw Error(ErrorCode::VarMismatch, "polynomials in " + std::to_string(p.nvars()) + " and " +
                                            std::to_string(q.nvars()) + " variables");
  }
}

}  // namespace

ExponentPolynomial ExponentPolynomial::operator+(const ExponentPolynomial& o) const {
  check_vars(*this, o);
  ExponentPolynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

ExponentPolynomial ExponentPolynomial::operator-(const ExponentPolynomial& o) const {
  check_vars(*this, o);
  ExponentPolynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

ExponentPolynomial ExponentPolynomial::operator-() const {
  ExponentPolynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

ExponentPolynomial ExponentPolynomial::operator*(const ExponentPolynomial& o) const {
  check_vars(*this, o);
  std::unordered_map<Exponent, BigInt> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : o.terms_) acc[a + b] += ca * cb;
  }
  ExponentPolynomial out(nvars_);
  for (auto& [e, c] : acc) {
    if (c != 0) out.terms_.emplace(e, std::move(c));
  }
  return out;
}

ExponentPolynomial ExponentPolynomial::operator*(const BigInt& k) const {
  ExponentPolynomial out(nvars_);
  if (k == 0) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * k);
  return out;
}

ExponentPolynomial ExponentPolynomial::dominant_part() const {
  ExponentPolynomial out(nvars_);
  for (const auto& [e, c] : terms_)
    if (e.is_dominant(nvars_)) out.terms_.emplace(e, c);
  return out;
}

std::string ExponentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    bool unit = e.degree() > 0 && mag == 1;
    if (!unit) os << mag;
    bool need_star = !unit;
    for (int i = 0; i < nvars_; ++i) {
      if (!e[i]) continue;
      os << (need_star ? "*" : "") << "x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

ExponentPolynomial mul(const ExponentPolynomial& p, const ExponentPolynomial& q) { return p * q; }
ExponentPolynomial sub(const ExponentPolynomial& p, const ExponentPolynomial& q) { return p - q; }

std::vector<Exponent> dominant_exponents(int n, int max_parts) {
  std::vector<Exponent> out;
  std::vector<int> parts;
  auto recurse = [&](auto& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.push_back(Exponent::from(parts));
      return;
    }
    if (static_cast<int>(parts.size()) == max_parts) return;
    for (int v = std::min(cap, remaining); v >= 1; --v) {
      parts.push_back(v);
      self(self, remaining - v, v);
      parts.pop_back();
    }
  };
  recurse(recurse, n, n);
  return out;
}

ExponentPolynomial multiply_dominant(const ExponentPolynomial& p, const ExponentPolynomial& q) {
  check_vars(p, q);
  std::vector<int> q_degrees;
  for (const auto& [e, c] : q.terms()) q_degrees.push_back(e.degree());
  std::sort(q_degrees.begin(), q_degrees.end());
  q_degrees.erase(std::unique(q_degrees.begin(), q_degrees.end()), q_degrees.end());

  std::map<int, std::vector<Exponent>> targets;
  ExponentPolynomial out(p.nvars());
  for (const auto& [a, ca] : p.terms()) {
    for (int d : q_degrees) {
      int total = a.degree() + d;
      auto it = targets.find(total);
      if (it == targets.end()) it = targets.emplace(total, dominant_exponents(total, p.nvars())).first;
      for (const Exponent& nu : it->second) {
        if (!nu.dominates(a)) continue;
        auto hit = q.terms().find(nu - a);
        if (hit != q.terms().end()) out.add_term(nu, ca * hit->second);
      }
    }
  }
  return out;
}

PositivityVerdict is_monomial_positive(const ExponentPolynomial& p) {
  for (const auto& [e, c] : p.terms()) {
    if (c < 0) return {false, std::make_pair(e, c)};
  }
  return {};
}

bool is_symmetric(const ExponentPolynomial& p) {
  for (const auto& [e, c] : p.terms()) {
    for (int i = 0; i + 1 < p.nvars(); ++i) {
      if (e[i] == e[i + 1]) continue;
      Exponent swapped = e;
      swapped.set(i, e[i + 1]);
      swapped.set(i + 1, e[i]);
      if (p.coefficient(swapped) != c) return false;
    }
  }
  return true;
}

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

bool is_quasisymmetric(const ExponentPolynomial& p) {
  // Every placement of a composition into increasing variable slots carries
  // the same coefficient.
  std::map<std::vector<int>, std::pair<BigInt, std::uint64_t>> groups;
  for (const auto& [e, c] : p.terms()) {
    auto [it, fresh] = groups.try_emplace(e.packed(p.nvars()), c, 0);
    if (it->second.first != c) return false;
    ++it->second.second;
  }
  for (const auto& [alpha, entry] : groups) {
    if (entry.second != binomial(p.nvars(), static_cast<int>(alpha.size()))) return false;
  }
  return true;
}

}  // namespace celltransfer
