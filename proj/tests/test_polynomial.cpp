#include <gtest/gtest.h>

#include "celltransfer/shapes.hpp"
#include "celltransfer/symmetric.hpp"
#include "celltransfer/verify.hpp"
#include "oracles.hpp"

using namespace celltransfer;

namespace {

ExponentPolynomial x(int n, int i) { return ExponentPolynomial::variable(n, i); }

ExponentPolynomial mono(int n, std::vector<int> e, BigInt c = 1) {
  return ExponentPolynomial::monomial(n, Exponent::from(e), c);
}

using Coeffs = std::vector<std::pair<std::vector<int>, BigInt>>;

}  // namespace

TEST(Polynomial, Arithmetic) {
  auto p = x(2, 1) + x(2, 2);
  auto sq = p * p;
  EXPECT_EQ(sq, mono(2, {2, 0}) + mono(2, {1, 1}, 2) + mono(2, {0, 2}));
  EXPECT_EQ(sq - sq, ExponentPolynomial(2));
  EXPECT_TRUE((sq - sq).is_zero());
  EXPECT_EQ(-p + p, ExponentPolynomial(2));
  EXPECT_EQ(p * BigInt(3), p + p + p);
  EXPECT_EQ(sq.degree(), 2);
  EXPECT_EQ(sq.coefficient(Exponent::from({1, 1})), 2);
  EXPECT_EQ(sq.coefficient(Exponent::from({3, 0})), 0);
  EXPECT_EQ(mul(p, p), sq);
  EXPECT_EQ(sub(sq, p), sq - p);
  EXPECT_EQ(sq.to_string(), "x1^2 + 2*x1*x2 + x2^2");
}

TEST(Polynomial, BigCoefficients) {
  auto p = ExponentPolynomial::constant(1, 1) + x(1, 1);
  ExponentPolynomial acc = ExponentPolynomial::constant(1, 1);
  for (int i = 0; i < 70; ++i) acc = acc * p;
  BigInt middle = acc.coefficient(Exponent::from({35}));
  EXPECT_EQ(middle.str(), "112186277816662845432");
}

TEST(Polynomial, Errors) {
  try {
    (void)(x(2, 1) + x(3, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::VarMismatch);
  }
  EXPECT_THROW((void)(x(2, 1) * x(3, 1)), Error);
  EXPECT_THROW(ExponentPolynomial(0), Error);
  EXPECT_THROW(ExponentPolynomial(17), Error);
  EXPECT_THROW(x(2, 3), Error);
  Exponent e;
  EXPECT_THROW(e.set(0, 256), Error);
}

TEST(Polynomial, Exponents) {
  Exponent e = Exponent::from({0, 2, 0, 1});
  EXPECT_EQ(e.degree(), 3);
  EXPECT_EQ(e.support(), 2);
  EXPECT_EQ(e.packed(4), (std::vector<int>{2, 1}));
  EXPECT_FALSE(e.is_dominant(4));
  EXPECT_TRUE(Exponent::from({2, 1, 0}).is_dominant(3));
  auto parts = dominant_exponents(4, 2);
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0].to_vector(2), (std::vector<int>{4, 0}));
  EXPECT_EQ(parts[2].to_vector(2), (std::vector<int>{2, 2}));
}

TEST(Polynomial, MultiplyDominantMatchesFullProduct) {
  for (int n = 2; n <= 4; ++n) {
    auto p = oracle::complete(2, n) + oracle::complete(1, n) * BigInt(-3) + mono(n, std::vector<int>(n, 0), 5);
    auto q = oracle::jacobi_trudi({2, 1}, {}, n) - oracle::complete(3, n);
    p.add_term(Exponent::from({0, 1}), 7);  // break symmetry on purpose
    EXPECT_EQ(multiply_dominant(p, q), (p * q).dominant_part());
    auto pd = oracle::complete(2, n).dominant_part();
    auto qd = oracle::jacobi_trudi({2, 1}, {}, n).dominant_part();
    EXPECT_EQ(multiply_symmetric_dominant(pd, qd),
              (oracle::complete(2, n) * oracle::jacobi_trudi({2, 1}, {}, n)).dominant_part());
  }
}

TEST(Polynomial, SymmetryTests) {
  EXPECT_TRUE(is_symmetric(oracle::complete(3, 3)));
  EXPECT_FALSE(is_symmetric(x(3, 1)));
  EXPECT_TRUE(is_quasisymmetric(oracle::complete(3, 3)));
  // M_(1,2) in three variables is quasisymmetric but not symmetric.
  auto m12 = mono(3, {1, 2, 0}) + mono(3, {1, 0, 2}) + mono(3, {0, 1, 2});
  EXPECT_TRUE(is_quasisymmetric(m12));
  EXPECT_FALSE(is_symmetric(m12));
  EXPECT_FALSE(is_quasisymmetric(mono(3, {1, 2, 0})));
  auto verdict = is_monomial_positive(m12 - mono(3, {0, 1, 2}, 2));
  EXPECT_FALSE(verdict.positive);
  ASSERT_TRUE(verdict.witness);
  EXPECT_EQ(verdict.witness->second, -1);
}

TEST(Symmetric, BasisElements) {
  EXPECT_EQ(monomial_quasisymmetric({1, 2}, 3), mono(3, {1, 2, 0}) + mono(3, {1, 0, 2}) + mono(3, {0, 1, 2}));
  EXPECT_EQ(monomial_symmetric({2, 1}, 2), mono(2, {2, 1}) + mono(2, {1, 2}));
  EXPECT_EQ(fundamental_quasisymmetric({2}, 3), monomial_quasisymmetric({2}, 3) + monomial_quasisymmetric({1, 1}, 3));
  EXPECT_EQ(fundamental_quasisymmetric({1, 1}, 3), monomial_quasisymmetric({1, 1}, 3));
  for (int n = 1; n <= 4; ++n) {
    for (const Partition& lam : partitions_of(4)) {
      EXPECT_EQ(schur_polynomial(lam, n), oracle::jacobi_trudi(lam, {}, n));
      EXPECT_EQ(schur_dominant(lam, n), oracle::jacobi_trudi(lam, {}, n).dominant_part());
    }
  }
}

TEST(Symmetric, KostkaCountsTableaux) {
  for (int size = 1; size <= 5; ++size) {
    for (const Partition& lam : partitions_of(size)) {
      auto cp = young_labelling(SkewShape(lam));
      for (const Partition& mu : partitions_of(size)) {
        long count = 0;
        for (const Tableau& t : enumerate(cp.labelled, static_cast<int>(mu.size()))) {
          if (weight(t, static_cast<int>(mu.size())) == mu) ++count;
        }
        EXPECT_EQ(kostka_number(lam, mu), count);
      }
    }
  }
  EXPECT_EQ(kostka_number({3, 2}, {2, 2, 1}), 2);
  EXPECT_EQ(kostka_number({2, 2}, {3, 1}), 0);
}

TEST(Symmetric, SquareOfS1) {
  auto s1 = schur_polynomial({1}, 2);
  BasisExpansion e = expand(s1 * s1, Basis::Schur);
  EXPECT_TRUE(e.exact());
  EXPECT_EQ(e.coeffs, (Coeffs{{{2}, 1}, {{1, 1}, 1}}));
}

TEST(Symmetric, HookDifference) {
  // s21 s1 - s2 s11 = s22, visible once there are four variables.
  for (int n : {4, 5}) {
    auto d = schur_polynomial({2, 1}, n) * schur_polynomial({1}, n) -
             schur_polynomial({2}, n) * schur_polynomial({1, 1}, n);
    BasisExpansion e = expand(d, Basis::Schur);
    EXPECT_TRUE(e.positive());
    EXPECT_EQ(e.coeffs, (Coeffs{{{2, 2}, 1}}));
  }
  auto d3 = schur_polynomial({2, 1}, 3) * schur_polynomial({1}, 3) -
            schur_polynomial({2}, 3) * schur_polynomial({1, 1}, 3);
  try {
    expand(d3, Basis::Schur);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TruncationTooSmall);
  }
  BasisExpansion bounded = expand(d3, Basis::Schur, {.length_bound = 2});
  EXPECT_EQ(bounded.coeffs, (Coeffs{{{2, 2}, 1}}));
}

TEST(Symmetric, ExpansionsReconstruct) {
  auto p = oracle::jacobi_trudi({3, 1}, {1}, 4) * oracle::complete(1, 4) - oracle::complete(4, 4);
  for (Basis b : {Basis::Monomial, Basis::MonomialQSym, Basis::FundamentalQSym, Basis::Schur}) {
    BasisExpansion e = expand(p, b);
    EXPECT_TRUE(e.exact()) << to_string(b);
    EXPECT_EQ(reconstruct(e), p) << to_string(b);
  }
  // A quasisymmetric, non-symmetric input.
  auto q = monomial_quasisymmetric({1, 2}, 3) * BigInt(2) + fundamental_quasisymmetric({2, 1}, 3);
  BasisExpansion fq = expand(q, Basis::FundamentalQSym);
  EXPECT_TRUE(fq.exact());
  EXPECT_EQ(reconstruct(fq), q);
  BasisExpansion mq = expand(q, Basis::MonomialQSym);
  EXPECT_EQ(reconstruct(mq), q);
  BasisExpansion sc = expand(q, Basis::Schur, {.length_bound = 3});
  EXPECT_FALSE(sc.exact());
  EXPECT_EQ(reconstruct(sc), q);
}

TEST(Symmetric, NegativeWitness) {
  auto d = schur_polynomial({2}, 3) - schur_polynomial({1, 1}, 3) * BigInt(2);
  BasisExpansion e = expand(d, Basis::Schur);
  EXPECT_TRUE(e.exact());
  EXPECT_FALSE(e.positive());
  auto w = e.negative_witness();
  ASSERT_TRUE(w);
  EXPECT_EQ(w->first, (std::vector<int>{1, 1}));
  EXPECT_EQ(w->second, -2);
}
