#pragma once

#include <compare>
#include <set>
#include <utility>
#include <vector>

#include "celltransfer/tlabel.hpp"

namespace celltransfer {

using Partition = std::vector<int>;

/// A box of N^2 in English coordinates, rows and columns starting at 1.
struct Cell {
  int row = 0;
  int col = 0;
  bool operator==(const Cell&) const = default;
  auto operator<=>(const Cell&) const = default;
};

/// Validates a weakly decreasing sequence of non-negative parts and drops trailing zeros.
Partition normalize_partition(Partition p);

/// Skew diagram λ/μ anchored in N^2: cell (i, j) present iff μ_i < j <= λ_i.
///
/// Equality compares cell sets, so (6,5,5,5)/(3,3) equals (6,5,5,5,0)/(3,3,0,0)
/// but not (7,6,6,6)/(4,4,1,1).
class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner = {});
  /// Recovers a λ/μ presentation for a finite convex set of cells; throws NotConvex.
  static SkewShape from_cells(const std::set<Cell>& cells);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  const std::set<Cell>& cells() const { return cells_; }
  bool contains(Cell c) const { return cells_.count(c) != 0; }
  int size() const { return static_cast<int>(cells_.size()); }
  bool empty() const { return cells_.empty(); }
  int max_row() const;
  int max_col() const;

  bool operator==(const SkewShape& other) const { return cells_ == other.cells_; }

 private:
  Partition outer_, inner_;
  std::set<Cell> cells_;
};

/// A labelled poset built on an explicit list of cells; element i is cells[i].
template <typename CellT>
struct CellPoset {
  TLabelledPoset labelled;
  std::vector<CellT> cells;
};

/// Rows weakly increasing (Weak), columns strictly increasing (Strict).
CellPoset<Cell> young_labelling(const SkewShape& shape);

/// The rows x cols rectangle of N^2 with the Young labelling; a common ambient
/// poset for shapes that must be compared to one another.
class GridPoset {
 public:
  GridPoset(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const TLabelledPoset& labelled() const { return labelled_; }
  const Poset& poset() const { return labelled_.poset(); }

  ElementId id(Cell c) const { return (c.row - 1) * cols_ + (c.col - 1); }
  Cell cell(ElementId id) const { return {id / cols_ + 1, id % cols_ + 1}; }
  bool holds(Cell c) const { return c.row >= 1 && c.row <= rows_ && c.col >= 1 && c.col <= cols_; }

  ElementSet members(const SkewShape& shape) const;
  ElementSet members(const std::set<Cell>& cells) const;
  ConvexSubposet subposet(const SkewShape& shape) const { return poset().convex(members(shape)); }
  std::set<Cell> cells(ElementSet members) const;
  SkewShape shape(ElementSet members) const { return SkewShape::from_cells(cells(members)); }

 private:
  int rows_, cols_;
  TLabelledPoset labelled_;
};

/// Smallest grid holding every listed shape (at least 1 x 1).
GridPoset grid_for(const std::vector<SkewShape>& shapes);

/// Point of Z^2; cylindric cells are classes of these.
struct LatticePoint {
  long a = 0;
  long b = 0;
  bool operator==(const LatticePoint&) const = default;
  auto operator<=>(const LatticePoint&) const = default;
};

/// Finite convex set of classes in Z^2 / (k - n, k)Z.
///
/// Each class is stored by its representative with 0 <= b < k.
class CylindricShape {
 public:
  CylindricShape(int k, int n, const std::vector<LatticePoint>& points);

  static LatticePoint canonical(int k, int n, LatticePoint p);
  /// Whether x <= y in the quotient poset.
  static bool leq(int k, int n, LatticePoint x, LatticePoint y);

  int k() const { return k_; }
  int n() const { return n_; }
  const std::set<LatticePoint>& cells() const { return cells_; }

 private:
  int k_, n_;
  std::set<LatticePoint> cells_;
};

/// `Verbatim` labels (i,j) -> (i+1,j) Weak and (i,j) -> (i,j+1) Strict;
/// `Transposed` swaps the two.
enum class CylindricConvention { Verbatim, Transposed };

CellPoset<LatticePoint> cylindric_labelling(const CylindricShape& shape,
                                            CylindricConvention convention = CylindricConvention::Verbatim);

}  // namespace celltransfer
