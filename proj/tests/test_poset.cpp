#include <gtest/gtest.h>

#include "celltransfer/poset.hpp"
#include "celltransfer/shapes.hpp"
#include "celltransfer/verify.hpp"
#include "oracles.hpp"

using namespace celltransfer;

namespace {

ElementSet S(std::initializer_list<int> ids) { return ElementSet::from(std::vector<int>(ids)); }

// Transitive closure by repeated relaxation over the cover list.
std::vector<std::vector<bool>> closure(const Poset& p) {
  int n = p.size();
  std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
  for (const Cover& c : p.covers()) lt[c.lower][c.upper] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (lt[i][k] && lt[k][j]) lt[i][j] = true;
  return lt;
}

std::vector<Poset> small_posets() {
  std::vector<Poset> out;
  for (const NamedPoset& np : catalogue(5)) out.push_back(np.poset);
  out.push_back(GridPoset(2, 3).poset());
  out.push_back(boolean_lattice(3));
  return out;
}

}  // namespace

TEST(Poset, RejectsMalformedCovers) {
  EXPECT_THROW(Poset(2, {{0, 2}}), Error);
  EXPECT_THROW(Poset(2, {{0, 0}}), Error);
  EXPECT_THROW(Poset(2, {{0, 1}, {0, 1}}), Error);
  EXPECT_THROW(Poset(3, {{0, 1}, {1, 2}, {2, 0}}), Error);
  try {
    Poset(3, {{0, 1}, {1, 2}, {0, 2}});
    FAIL() << "implied edge accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidPoset);
  }
  EXPECT_THROW(Poset(65, {}), Error);
}

TEST(Poset, ClosureMatchesRelaxation) {
  for (const Poset& p : small_posets()) {
    auto lt = closure(p);
    for (int i = 0; i < p.size(); ++i)
      for (int j = 0; j < p.size(); ++j) EXPECT_EQ(p.less(i, j), lt[i][j]);
  }
}

TEST(Poset, ClassifyOnChain) {
  Poset c = chain(5);
  EXPECT_EQ(c.classify(0, S({1, 2, 3})), Comparability::Below);
  EXPECT_EQ(c.classify(2, S({1, 2, 3})), Comparability::Tilde);
  EXPECT_EQ(c.classify(4, S({1, 2, 3})), Comparability::Above);
}

TEST(Poset, ClassifyInGrid) {
  GridPoset g(2, 2);
  ElementSet row = g.members(std::set<Cell>{{1, 1}, {1, 2}});
  EXPECT_EQ(g.poset().classify(g.id({2, 1}), row), Comparability::Above);
  EXPECT_EQ(g.poset().classify(g.id({1, 1}), g.members(std::set<Cell>{{2, 2}})), Comparability::Below);
}

TEST(Poset, ClassifyRejectsNonConvex) {
  Poset c = chain(5);
  try {
    c.classify(2, S({1, 3}));
    FAIL() << "expected AmbiguousComparability";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AmbiguousComparability);
  }
}

TEST(Poset, Convexity) {
  Poset c = chain(5);
  EXPECT_TRUE(c.is_convex(S({1, 2, 3})));
  EXPECT_FALSE(c.is_convex(S({1, 3})));
  EXPECT_TRUE(c.is_convex(ElementSet()));
  EXPECT_THROW(c.convex(S({1, 3})), Error);

  // Every principal interval of B_4 is convex; compare with the triple condition.
  Poset b4 = boolean_lattice(4);
  for (int lo = 0; lo < 16; ++lo) {
    for (int hi = 0; hi < 16; ++hi) {
      if ((lo & hi) != lo) continue;
      ElementSet iv;
      for (int x = 0; x < 16; ++x)
        if ((lo & x) == lo && (x & hi) == x) iv.insert(x);
      EXPECT_TRUE(b4.is_convex(iv));
    }
  }
}

TEST(Poset, ConvexityMatchesTripleCondition) {
  for (const Poset& p : small_posets()) {
    if (p.size() > 6) continue;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << p.size()); ++m) {
      ElementSet s(m);
      bool convex = true;
      for (ElementId a : s)
        for (ElementId b : s)
          for (int r = 0; r < p.size(); ++r)
            if (p.less(a, r) && p.less(r, b) && !s.contains(r)) convex = false;
      EXPECT_EQ(p.is_convex(s), convex);
    }
  }
}

TEST(Poset, WedgeVeeOnChains) {
  Poset c = chain(5);
  auto iv = [&](int a, int b) {
    ElementSet s;
    for (int i = a; i <= b; ++i) s.insert(i);
    return c.convex(s);
  };
  EXPECT_EQ(wedge(c, iv(1, 4), iv(2, 3)).members(), iv(1, 3).members());
  EXPECT_EQ(vee(c, iv(1, 4), iv(2, 3)).members(), iv(2, 4).members());
  EXPECT_EQ(wedge(c, iv(1, 2), iv(2, 4)).members(), iv(1, 2).members());
  EXPECT_EQ(vee(c, iv(1, 2), iv(2, 4)).members(), iv(2, 4).members());
}

TEST(Poset, WedgeVeeRowAndColumn) {
  GridPoset g(2, 2);
  ConvexSubposet row = g.subposet(SkewShape({2})), col = g.subposet(SkewShape({1, 1}));
  EXPECT_EQ(g.shape(wedge(g.poset(), row, col).members()), SkewShape({1}));
  EXPECT_EQ(g.shape(vee(g.poset(), row, col).members()), SkewShape({2, 1}));
}

TEST(Poset, PrimedOperations) {
  Poset v(3, {{0, 1}, {0, 2}});
  auto i = v.ideal(S({0, 1})).as_convex(), j = v.ideal(S({0, 2})).as_convex();
  EXPECT_EQ(wedge_prime(v, i, j).members(), S({0}));
  EXPECT_EQ(vee_prime(v, i, j).members(), S({0, 1, 2}));
  EXPECT_EQ(wedge_prime(v, i, i).members(), i.members());
  EXPECT_EQ(vee_prime(v, i, i).members(), i.members());

  Poset a = antichain(2);
  auto x = a.convex(S({0})), y = a.convex(S({1}));
  EXPECT_TRUE(wedge_prime(a, x, y).members().empty());
  EXPECT_EQ(vee_prime(a, x, y).members(), S({0, 1}));
}

TEST(Poset, OperationsMatchDefinitionsAndStayConvex) {
  // The four operations against the set definitions; the union/intersection
  // identities and stability for every convex pair.
  for (const Poset& p : small_posets()) {
    if (p.size() > 6) continue;
    auto subs = convex_subposets(p);
    for (const auto& q : subs) {
      for (const auto& r : subs) {
        ElementSet Q = q.members(), R = r.members();
        ConvexSubposet w = wedge(p, q, r), v = vee(p, q, r);
        ASSERT_EQ(w.members(), oracle::wedge(p, Q, R));
        ASSERT_EQ(v.members(), oracle::vee(p, Q, R));
        ASSERT_EQ(wedge_prime(p, q, r).members(), oracle::wedge_prime(p, Q, R));
        ASSERT_EQ(vee_prime(p, q, r).members(), oracle::vee_prime(p, Q, R));
        EXPECT_TRUE(p.is_convex(w.members()));
        EXPECT_TRUE(p.is_convex(v.members()));
        EXPECT_EQ(w.members() | v.members(), Q | R);
        EXPECT_EQ(w.members() & v.members(), Q & R);
        EXPECT_EQ(wedge(p, w, v), w);
        EXPECT_EQ(vee(p, w, v), v);
      }
    }
  }
}

TEST(Poset, EmptyOperand) {
  Poset c = chain(3);
  auto q = c.convex(S({0, 1})), e = c.convex(ElementSet());
  EXPECT_EQ(wedge(c, q, e).members(), q.members());
  EXPECT_TRUE(vee(c, q, e).members().empty());
  EXPECT_TRUE(wedge(c, e, q).members().empty());
  EXPECT_EQ(vee(c, e, q).members(), q.members());
}

TEST(Poset, IdealCounts) {
  EXPECT_EQ(ideals(chain(3)).size(), 4u);
  EXPECT_EQ(ideals(antichain(2)).size(), 4u);
  EXPECT_EQ(ideals(boolean_lattice(2)).size(), 6u);
  // Count equals the number of antichains, brute force.
  for (const Poset& p : small_posets()) {
    if (p.size() > 8) continue;
    long long antichains = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << p.size()); ++m) {
      ElementSet s(m);
      bool ok = true;
      for (ElementId a : s)
        for (ElementId b : s)
          if (p.less(a, b)) ok = false;
      antichains += ok;
    }
    auto ids = ideals(p);
    EXPECT_EQ(static_cast<long long>(ids.size()), antichains);
    for (const auto& i : ids) EXPECT_TRUE(p.is_order_ideal(i.members()));
  }
  EXPECT_THROW(ideals(antichain(21)), Error);
}

TEST(Poset, IdealsOfRootedPosetsAreLatticeOperations) {
  Poset y(4, {{0, 1}, {1, 2}, {1, 3}});
  auto ids = ideals(y);
  for (const auto& i : ids) {
    for (const auto& j : ids) {
      if (i.members().empty() || j.members().empty()) continue;
      auto ci = i.as_convex(), cj = j.as_convex();
      EXPECT_EQ(wedge(y, ci, cj).members(), i.members() & j.members());
      EXPECT_EQ(vee(y, ci, cj).members(), i.members() | j.members());
    }
  }
}

TEST(Poset, PrimedOperationsOnIdealsWithoutMinimum) {
  Poset lambda(3, {{0, 2}, {1, 2}});
  for (const auto& i : ideals(lambda)) {
    for (const auto& j : ideals(lambda)) {
      auto ci = i.as_convex(), cj = j.as_convex();
      EXPECT_EQ(wedge_prime(lambda, ci, cj).members(), i.members() & j.members());
      EXPECT_EQ(vee_prime(lambda, ci, cj).members(), i.members() | j.members());
    }
  }
}

TEST(Poset, LinearExtensionRespectsOrder) {
  for (const Poset& p : small_posets()) {
    auto ext = p.linear_extension();
    ASSERT_EQ(static_cast<int>(ext.size()), p.size());
    std::vector<int> pos(p.size());
    for (std::size_t i = 0; i < ext.size(); ++i) pos[ext[i]] = static_cast<int>(i);
    for (const Cover& c : p.covers()) EXPECT_LT(pos[c.lower], pos[c.upper]);
  }
}
