#include "celltransfer/shapes.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace celltransfer {

Partition normalize_partition(Partition p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) throw Error(ErrorCode::MalformedPartitions, "negative part");
    if (i > 0 && p[i] > p[i - 1]) throw Error(ErrorCode::MalformedPartitions, "parts must be weakly decreasing");
  }
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

namespace {

int part(const Partition& p, std::size_t i) { return i < p.size() ? p[i] : 0; }

}  // namespace

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(normalize_partition(std::move(outer))), inner_(normalize_partition(std::move(inner))) {
  for (std::size_t i = 0; i < std::max(outer_.size(), inner_.size()); ++i) {
    if (part(inner_, i) > part(outer_, i)) {
      throw Error(ErrorCode::MalformedPartitions, "inner partition is not contained in the outer one");
    }
  }
  for (std::size_t i = 0; i < outer_.size(); ++i) {
    for (int j = part(inner_, i) + 1; j <= outer_[i]; ++j) cells_.insert({static_cast<int>(i) + 1, j});
  }
}

SkewShape SkewShape::from_cells(const std::set<Cell>& cells) {
  if (cells.empty()) return SkewShape();
  int rows = 0;
  for (const Cell& c : cells) {
    if (c.row < 1 || c.col < 1) throw Error(ErrorCode::NotConvex, "cells must have positive coordinates");
    rows = std::max(rows, c.row);
  }
  std::vector<int> lo(rows + 1, 0), hi(rows + 1, 0), count(rows + 1, 0);
  for (const Cell& c : cells) {
    if (count[c.row] == 0) lo[c.row] = hi[c.row] = c.col;
    lo[c.row] = std::min(lo[c.row], c.col);
    hi[c.row] = std::max(hi[c.row], c.col);
    ++count[c.row];
  }
  Partition outer(rows), inner(rows);
  for (int i = rows; i >= 1; --i) {
    if (count[i] > 0) {
      if (hi[i] - lo[i] + 1 != count[i]) throw Error(ErrorCode::NotConvex, "row " + std::to_string(i) + " has a gap");
      inner[i - 1] = lo[i] - 1;
      outer[i - 1] = hi[i];
    } else {
      // Empty rows copy the row below, the smallest value keeping both sequences decreasing.
      inner[i - 1] = outer[i - 1] = outer[i];
    }
  }
  for (int i = 1; i < rows; ++i) {
    if (outer[i] > outer[i - 1] || inner[i] > inner[i - 1]) {
      throw Error(ErrorCode::NotConvex, "cells do not form a skew shape");
    }
  }
  SkewShape shape(outer, inner);
  if (shape.cells() != cells) throw Error(ErrorCode::NotConvex, "cells do not form a skew shape");
  return shape;
}

int SkewShape::max_row() const {
  int r = 0;
  for (const Cell& c : cells_) r = std::max(r, c.row);
  return r;
}

int SkewShape::max_col() const {
  int r = 0;
  for (const Cell& c : cells_) r = std::max(r, c.col);
  return r;
}

CellPoset<Cell> young_labelling(const SkewShape& shape) {
  CellPoset<Cell> out;
  out.cells.assign(shape.cells().begin(), shape.cells().end());
  if (out.cells.size() > static_cast<std::size_t>(Poset::kMaxElements)) {
    throw Error(ErrorCode::BoundExceeded, "shape has more than 64 cells");
  }
  std::map<Cell, int> id;
  for (std::size_t i = 0; i < out.cells.size(); ++i) id[out.cells[i]] = static_cast<int>(i);
  std::vector<Cover> covers;
  std::vector<std::pair<Cover, StepFunction>> edges;
  for (const auto& [c, i] : id) {
    if (auto right = id.find({c.row, c.col + 1}); right != id.end()) {
      covers.push_back({i, right->second});
      edges.emplace_back(covers.back(), StepFunction::weak());
    }
    if (auto down = id.find({c.row + 1, c.col}); down != id.end()) {
      covers.push_back({i, down->second});
      edges.emplace_back(covers.back(), StepFunction::strict());
    }
  }
  out.labelled = TLabelledPoset::from_edges(Poset(static_cast<int>(out.cells.size()), std::move(covers)), edges);
  return out;
}

GridPoset::GridPoset(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1 || rows * cols > Poset::kMaxElements) {
    throw Error(ErrorCode::BoundExceeded, "grid must have between 1 and 64 cells");
  }
  labelled_ = young_labelling(SkewShape(Partition(rows, cols))).labelled;
}

ElementSet GridPoset::members(const std::set<Cell>& cells) const {
  ElementSet out;
  for (const Cell& c : cells) {
    if (!holds(c)) {
      throw Error(ErrorCode::BoundExceeded, "cell (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                                                ") lies outside the ambient grid");
    }
    out.insert(id(c));
  }
  return out;
}

ElementSet GridPoset::members(const SkewShape& shape) const { return members(shape.cells()); }

std::set<Cell> GridPoset::cells(ElementSet members) const {
  std::set<Cell> out;
  for (ElementId e : members) out.insert(cell(e));
  return out;
}

GridPoset grid_for(const std::vector<SkewShape>& shapes) {
  int rows = 1, cols = 1;
  for (const SkewShape& s : shapes) {
    rows = std::max(rows, s.max_row());
    cols = std::max(cols, s.max_col());
  }
  return GridPoset(rows, cols);
}

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

}  // namespace

LatticePoint CylindricShape::canonical(int k, int n, LatticePoint p) {
  long m = floor_div(p.b, k);
  return {p.a - m * (k - n), p.b - m * k};
}

bool CylindricShape::leq(int k, int n, LatticePoint x, LatticePoint y) {
  // x <= y iff y - x + m(k-n, k) is componentwise non-negative for some m.
  long lo = ceil_div(x.b - y.b, k);
  long hi = floor_div(y.a - x.a, n - k);
  return lo <= hi;
}

CylindricShape::CylindricShape(int k, int n, const std::vector<LatticePoint>& points) : k_(k), n_(n) {
  if (k < 1 || k >= n) throw Error(ErrorCode::InvalidInput, "cylindric shapes need 1 <= k < n");
  for (const LatticePoint& p : points) cells_.insert(canonical(k, n, p));
  if (cells_.size() > static_cast<std::size_t>(Poset::kMaxElements)) {
    throw Error(ErrorCode::BoundExceeded, "cylindric shape has more than 64 cells");
  }
  for (const LatticePoint& x : cells_) {
    for (const LatticePoint& y : cells_) {
      long lo = ceil_div(x.b - y.b, k);
      long hi = floor_div(y.a - x.a, n - k);
      for (long m = lo; m <= hi; ++m) {
        long da = y.a - x.a + m * (k - n), db = y.b - x.b + m * k;
        for (long p = 0; p <= da; ++p) {
          for (long q = 0; q <= db; ++q) {
            if (!cells_.count(canonical(k, n, {x.a + p, x.b + q}))) {
              throw Error(ErrorCode::NotConvexInQuotient,
                          "interval between (" + std::to_string(x.a) + "," + std::to_string(x.b) + ") and (" +
                              std::to_string(y.a) + "," + std::to_string(y.b) + ") leaves the shape");
            }
          }
        }
      }
    }
  }
}

CellPoset<LatticePoint> cylindric_labelling(const CylindricShape& shape, CylindricConvention convention) {
  CellPoset<LatticePoint> out;
  out.cells.assign(shape.cells().begin(), shape.cells().end());
  int count = static_cast<int>(out.cells.size());
  std::map<LatticePoint, int> id;
  for (int i = 0; i < count; ++i) id[out.cells[i]] = i;

  const bool verbatim = convention == CylindricConvention::Verbatim;
  // Generated relations; two relations landing on one pair keep the stronger label.
  std::map<std::pair<int, int>, bool> strict;
  for (int i = 0; i < count; ++i) {
    LatticePoint c = out.cells[i];
    auto add = [&](LatticePoint target, bool is_strict) {
      auto it = id.find(CylindricShape::canonical(shape.k(), shape.n(), target));
      if (it == id.end()) return;
      auto [slot, fresh] = strict.try_emplace({i, it->second}, is_strict);
      if (!fresh) slot->second = slot->second || is_strict;
    };
    add({c.a + 1, c.b}, !verbatim);
    add({c.a, c.b + 1}, verbatim);
  }

  // Keep only genuine covers: when n = k + 1 a generated relation can be
  // implied by a longer chain of other relations.
  std::vector<ElementSet> succ(count);
  for (const auto& [edge, _] : strict) succ[edge.first].insert(edge.second);
  std::vector<ElementSet> reach(count);
  for (int iter = 0; iter < count; ++iter) {
    for (int i = 0; i < count; ++i) {
      ElementSet r = succ[i];
      for (ElementId t : succ[i]) r |= reach[t];
      reach[i] = r;
    }
  }
  std::vector<Cover> covers;
  std::vector<std::pair<Cover, StepFunction>> edges;
  for (const auto& [edge, is_strict] : strict) {
    bool implied = false;
    for (ElementId r : succ[edge.first]) {
      if (r != edge.second && reach[r].contains(edge.second)) implied = true;
    }
    if (implied) continue;
    Cover c{edge.first, edge.second};
    covers.push_back(c);
    edges.emplace_back(c, is_strict ? StepFunction::strict() : StepFunction::weak());
  }
  out.labelled = TLabelledPoset::from_edges(Poset(count, std::move(covers)), edges);
  return out;
}

}  // namespace celltransfer
