#include <gtest/gtest.h>

#include <map>

#include "celltransfer/shapes.hpp"
#include "celltransfer/verify.hpp"
#include "oracles.hpp"

using namespace celltransfer;

namespace {

using Kind = StepFunction::Kind;

// Label kind of the edge between two cells of a cell poset, or nullopt.
template <typename CellT>
std::optional<Kind> edge_kind(const CellPoset<CellT>& cp, CellT lo, CellT hi) {
  auto find = [&](CellT c) {
    for (std::size_t i = 0; i < cp.cells.size(); ++i)
      if (cp.cells[i] == c) return static_cast<int>(i);
    return -1;
  };
  int a = find(lo), b = find(hi);
  if (a < 0 || b < 0 || !cp.labelled.poset().is_cover(a, b)) return std::nullopt;
  return cp.labelled.label(a, b).kind();
}

}  // namespace

TEST(StepFunction, Evaluation) {
  EXPECT_EQ(StepFunction::weak()(3), 3);
  EXPECT_EQ(StepFunction::strict()(3), 2);
  StepFunction t = StepFunction::table({-1, 2, kInfinity});
  EXPECT_EQ(t(1), -1);
  EXPECT_EQ(t(3), kInfinity);
  EXPECT_THROW(t(4), Error);
  EXPECT_THROW(StepFunction::table({3, 2}), Error);
  EXPECT_THROW(StepFunction::table({}), Error);
}

TEST(StepFunction, MinPreimage) {
  StepFunction t = StepFunction::table({0, 0, 5, kInfinity});
  EXPECT_EQ(t.min_preimage(0, 4), 1);
  EXPECT_EQ(t.min_preimage(1, 4), 3);
  EXPECT_EQ(t.min_preimage(6, 4), 4);
  EXPECT_EQ(t.min_preimage(6, 3), 4);  // none within the cap
  EXPECT_EQ(StepFunction::strict().min_preimage(2, 5), 3);
  EXPECT_EQ(StepFunction::weak().min_preimage(9, 5), 6);
}

TEST(TLabelledPoset, LabelsEveryCoverOnce) {
  Poset p = chain(3);
  EXPECT_THROW(TLabelledPoset(p, {StepFunction::weak()}), Error);
  EXPECT_THROW(TLabelledPoset::from_edges(p, {{{0, 1}, StepFunction::weak()}}), Error);
  EXPECT_THROW(TLabelledPoset::from_edges(p, {{{0, 2}, StepFunction::weak()}, {{0, 1}, StepFunction::weak()}}),
               Error);
  auto lp = TLabelledPoset::from_edges(p, {{{1, 2}, StepFunction::strict()}, {{0, 1}, StepFunction::weak()}});
  EXPECT_EQ(lp.label(0, 1).kind(), Kind::Weak);
  EXPECT_EQ(lp.label(1, 2).kind(), Kind::Strict);
  EXPECT_THROW(lp.label(0, 2), Error);
  EXPECT_TRUE(lp.oriented());
}

TEST(YoungLabelling, SmallShapes) {
  auto one = young_labelling(SkewShape({1}));
  EXPECT_EQ(one.labelled.size(), 1);
  EXPECT_TRUE(one.labelled.poset().covers().empty());

  auto hook = young_labelling(SkewShape({2, 1}));
  EXPECT_EQ(hook.labelled.size(), 3);
  EXPECT_EQ(hook.labelled.poset().covers().size(), 2u);
  EXPECT_EQ(edge_kind(hook, Cell{1, 1}, Cell{1, 2}), Kind::Weak);
  EXPECT_EQ(edge_kind(hook, Cell{1, 1}, Cell{2, 1}), Kind::Strict);

  auto skew = young_labelling(SkewShape({2, 2}, {1}));
  EXPECT_EQ(skew.labelled.size(), 3);
  EXPECT_EQ(skew.labelled.poset().covers().size(), 2u);
  EXPECT_EQ(edge_kind(skew, Cell{2, 1}, Cell{2, 2}), Kind::Weak);
  EXPECT_EQ(edge_kind(skew, Cell{1, 2}, Cell{2, 2}), Kind::Strict);

  EXPECT_EQ(young_labelling(SkewShape()).labelled.size(), 0);
}

TEST(YoungLabelling, LinearExtensionsCountStandardTableaux) {
  for (int n = 1; n <= 6; ++n) {
    for (const Partition& lam : partitions_of(n)) {
      auto cp = young_labelling(SkewShape(lam));
      EXPECT_EQ(oracle::linear_extensions(cp.labelled.poset()), oracle::hook_length_count(lam));
    }
  }
}

TEST(SkewShape, AnchoredEquality) {
  EXPECT_EQ(SkewShape({6, 5, 5, 5}, {3, 3}), SkewShape({6, 5, 5, 5, 0}, {3, 3, 0, 0}));
  EXPECT_NE(SkewShape({6, 5, 5, 5}, {3, 3}), SkewShape({6, 5, 5, 5, 1}, {3, 3, 1}));
  EXPECT_NE(SkewShape({6, 5, 5, 5}, {3, 3}), SkewShape({7, 6, 6, 6}, {4, 4, 1, 1}));
  EXPECT_EQ(SkewShape({6, 5, 5, 5}, {3, 3}).size(), SkewShape({7, 6, 6, 6}, {4, 4, 1, 1}).size());
  EXPECT_THROW(SkewShape({1}, {2}), Error);
  EXPECT_THROW(SkewShape({1, 2}), Error);
}

TEST(SkewShape, FromCellsRoundTrip) {
  for (const auto& [outer, inner] : std::vector<std::pair<Partition, Partition>>{
           {{3, 2, 1}, {1}}, {{4, 4, 2}, {2, 1}}, {{2, 2, 2}, {2}}, {{3, 1, 1}, {}}, {{5, 3}, {3, 3}}}) {
    SkewShape s(outer, inner);
    EXPECT_EQ(SkewShape::from_cells(s.cells()), s);
  }
  EXPECT_THROW(SkewShape::from_cells({{1, 1}, {1, 3}}), Error);
  EXPECT_THROW(SkewShape::from_cells({{1, 2}, {2, 1}, {2, 3}}), Error);
}

TEST(Pomega, Labels) {
  auto up = pomega_labelling(chain(2), {1, 2});
  EXPECT_EQ(up.label(0, 1).kind(), Kind::Weak);
  auto down = pomega_labelling(chain(2), {2, 1});
  EXPECT_EQ(down.label(0, 1).kind(), Kind::Strict);
  // a=0, b=1, c=2 with a<c, b<c.
  auto v = pomega_labelling(Poset(3, {{0, 2}, {1, 2}}), {1, 3, 2});
  EXPECT_EQ(v.label(0, 2).kind(), Kind::Weak);
  EXPECT_EQ(v.label(1, 2).kind(), Kind::Strict);
  EXPECT_THROW(pomega_labelling(chain(2), {1, 1}), Error);
  EXPECT_THROW(pomega_labelling(chain(2), {1, 3}), Error);
}

TEST(Restrict, InheritsLabels) {
  auto hook = young_labelling(SkewShape({2, 1}));
  const Poset& p = hook.labelled.poset();
  auto full = restrict(hook.labelled, p.elements());
  EXPECT_EQ(full.labelled.poset(), p);
  EXPECT_EQ(full.labelled.labels(), hook.labelled.labels());

  // Row {(1,1),(1,2)}: ids 0 and 1 in row-major order.
  auto row = restrict(hook.labelled, ElementSet::from({0, 1}));
  EXPECT_EQ(row.labelled.size(), 2);
  ASSERT_EQ(row.labelled.poset().covers().size(), 1u);
  EXPECT_EQ(row.labelled.labels()[0].kind(), Kind::Weak);

  EXPECT_EQ(restrict(hook.labelled, ElementSet()).labelled.size(), 0);
  EXPECT_THROW(restrict(young_labelling(SkewShape({3})).labelled, ElementSet::from({0, 2})), Error);
}

TEST(Restrict, CommutesWithWedge) {
  GridPoset g(3, 3);
  const Poset& p = g.poset();
  auto subs = convex_subposets(p);
  int checked = 0;
  for (std::size_t a = 0; a < subs.size(); a += 7) {
    for (std::size_t b = 0; b < subs.size(); b += 5) {
      ConvexSubposet w = wedge(p, subs[a], subs[b]);
      auto direct = restrict(g.labelled(), w);
      // Label of each surviving cover equals the label in the ambient grid.
      const auto& covers = direct.labelled.poset().covers();
      for (std::size_t i = 0; i < covers.size(); ++i) {
        ElementId lo = direct.parent_id[covers[i].lower], hi = direct.parent_id[covers[i].upper];
        EXPECT_EQ(direct.labelled.labels()[i], g.labelled().label(lo, hi));
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(Cylindric, Canonical) {
  EXPECT_EQ(CylindricShape::canonical(2, 3, {0, 2}), (LatticePoint{1, 0}));
  EXPECT_EQ(CylindricShape::canonical(2, 3, {5, -1}), (LatticePoint{4, 1}));
  EXPECT_TRUE(CylindricShape::leq(2, 3, {0, 1}, {1, 0}));
  EXPECT_FALSE(CylindricShape::leq(2, 3, {1, 0}, {0, 0}));
  EXPECT_THROW(CylindricShape(3, 3, {}), Error);
}

TEST(Cylindric, SingleCell) {
  auto cp = cylindric_labelling(CylindricShape(2, 3, {{0, 0}}));
  EXPECT_EQ(cp.labelled.size(), 1);
  EXPECT_TRUE(cp.labelled.poset().covers().empty());
}

TEST(Cylindric, CoincidingGeneratorsKeepStrict) {
  // For k=1, n=2 the steps (1,0) and (0,1) reach the same class, so the
  // relation carries both labels; the strict one is the binding constraint.
  auto cp = cylindric_labelling(CylindricShape(1, 2, {{0, 0}, {1, 0}}));
  ASSERT_EQ(cp.labelled.poset().covers().size(), 1u);
  EXPECT_EQ(edge_kind(cp, LatticePoint{0, 0}, LatticePoint{1, 0}), Kind::Strict);
}

TEST(Cylindric, QuotientMakesAChain) {
  // (0,2) is identified with (1,0), so (0,1) < (1,0) and the relation
  // (0,0) < (1,0) is implied by (0,0) < (0,1) < (1,0).
  auto cp = cylindric_labelling(CylindricShape(2, 3, {{0, 0}, {0, 1}, {1, 0}}));
  EXPECT_EQ(cp.labelled.poset().covers().size(), 2u);
  EXPECT_EQ(edge_kind(cp, LatticePoint{0, 0}, LatticePoint{0, 1}), Kind::Strict);
  EXPECT_EQ(edge_kind(cp, LatticePoint{0, 1}, LatticePoint{1, 0}), Kind::Strict);
  EXPECT_FALSE(edge_kind(cp, LatticePoint{0, 0}, LatticePoint{1, 0}));
}

TEST(Cylindric, RejectsNonConvex) {
  try {
    CylindricShape(2, 5, {{0, 0}, {2, 0}});
    FAIL() << "expected NotConvexInQuotient";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotConvexInQuotient);
  }
}

TEST(Cylindric, InsideOneDomainIsTransposedYoung) {
  // Point (a, b) corresponds to the cell in row b+1, column a+1.
  SkewShape shape({3, 2, 2}, {1});
  std::vector<LatticePoint> points;
  for (const Cell& c : shape.cells()) points.push_back({c.col - 1, c.row - 1});
  auto cyl = cylindric_labelling(CylindricShape(3, 10, points));
  auto young = young_labelling(shape);
  ASSERT_EQ(cyl.labelled.size(), young.labelled.size());
  ASSERT_EQ(cyl.labelled.poset().covers().size(), young.labelled.poset().covers().size());
  for (const Cover& c : young.labelled.poset().covers()) {
    Cell lo = young.cells[c.lower], hi = young.cells[c.upper];
    auto kind = edge_kind(cyl, LatticePoint{lo.col - 1, lo.row - 1}, LatticePoint{hi.col - 1, hi.row - 1});
    ASSERT_TRUE(kind);
    EXPECT_EQ(*kind, young.labelled.label(c.lower, c.upper).kind());
  }
  // The transposed convention swaps every label.
  auto swapped = cylindric_labelling(CylindricShape(3, 10, points), CylindricConvention::Transposed);
  for (const Cover& c : young.labelled.poset().covers()) {
    Cell lo = young.cells[c.lower], hi = young.cells[c.upper];
    auto kind = edge_kind(swapped, LatticePoint{lo.col - 1, lo.row - 1}, LatticePoint{hi.col - 1, hi.row - 1});
    ASSERT_TRUE(kind);
    EXPECT_NE(*kind, young.labelled.label(c.lower, c.upper).kind());
  }
}
