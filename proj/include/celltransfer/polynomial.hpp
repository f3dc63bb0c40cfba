#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "celltransfer/error.hpp"

namespace celltransfer {

using BigInt = boost::multiprecision::cpp_int;

/// Dense exponent vector for up to kMaxVars variables.
class Exponent {
 public:
  static constexpr int kMaxVars = 16;

  Exponent() = default;
  static Exponent from(const std::vector<int>& e);

  int operator[](int i) const { return e_[i]; }
  void set(int i, int v);
  int degree() const;
  /// Number of variables with a positive exponent.
  int support() const;
  /// Whether the entries are weakly decreasing (a partition padded by zeros).
  bool is_dominant(int nvars) const;
  std::vector<int> to_vector(int nvars) const;
  /// Nonzero entries in order: the composition of a quasisymmetric monomial.
  std::vector<int> packed(int nvars) const;

  Exponent operator+(const Exponent& o) const;
  /// Componentwise o <= *this.
  bool dominates(const Exponent& o) const;
  Exponent operator-(const Exponent& o) const;

  bool operator==(const Exponent&) const = default;
  auto operator<=>(const Exponent&) const = default;

  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxVars> e_{};
};

/// Exact polynomial in x_1..x_nvars with arbitrary-precision integer
/// coefficients. No zero coefficients are stored.
class ExponentPolynomial {
 public:
  using Terms = std::map<Exponent, BigInt>;

  explicit ExponentPolynomial(int nvars = 1);
  static ExponentPolynomial constant(int nvars, const BigInt& c);
  static ExponentPolynomial monomial(int nvars, const Exponent& e, const BigInt& c = 1);
  static ExponentPolynomial variable(int nvars, int index);  // x_{index}, 1-based

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(const Exponent& e) const;
  int degree() const;

  void add_term(const Exponent& e, const BigInt& c);

  ExponentPolynomial operator+(const ExponentPolynomial& o) const;
  ExponentPolynomial operator-(const ExponentPolynomial& o) const;
  ExponentPolynomial operator-() const;
  ExponentPolynomial operator*(const ExponentPolynomial& o) const;
  ExponentPolynomial operator*(const BigInt& c) const;

  /// Terms whose exponent is weakly decreasing. A symmetric polynomial is
  /// determined by these.
  ExponentPolynomial dominant_part() const;

  bool operator==(const ExponentPolynomial&) const = default;

  std::string to_string() const;

 private:
  int nvars_;
  Terms terms_;
};

ExponentPolynomial mul(const ExponentPolynomial& p, const ExponentPolynomial& q);
ExponentPolynomial sub(const ExponentPolynomial& p, const ExponentPolynomial& q);

/// Dominant part of p * q, without forming the full product. Equals
/// (p * q).dominant_part().
ExponentPolynomial multiply_dominant(const ExponentPolynomial& p, const ExponentPolynomial& q);

/// All partitions of `n` with at most `max_parts` parts, as exponents, in
/// decreasing lexicographic order.
std::vector<Exponent> dominant_exponents(int n, int max_parts);

struct PositivityVerdict {
  bool positive = true;
  std::optional<std::pair<Exponent, BigInt>> witness;  // first negative term
};

PositivityVerdict is_monomial_positive(const ExponentPolynomial& p);
bool is_symmetric(const ExponentPolynomial& p);
bool is_quasisymmetric(const ExponentPolynomial& p);

}  // namespace celltransfer

template <>
struct std::hash<celltransfer::Exponent> {
  std::size_t operator()(const celltransfer::Exponent& e) const noexcept { return e.hash(); }
};
