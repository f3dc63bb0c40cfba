#pragma once

#include <string>

#include "celltransfer/shapes.hpp"
#include "celltransfer/tableau.hpp"

namespace celltransfer::render {

/// English notation: row 1 on top. Cells outside the domain print as blanks,
/// marked cells get a trailing '*'.
std::string grid_tableau(const GridPoset& grid, const Tableau& t, ElementSet marked = {});

/// One "id: value" line per element, in a linear extension of the poset.
std::string poset_tableau(const Poset& p, const Tableau& t, ElementSet marked = {});

}  // namespace celltransfer::render
