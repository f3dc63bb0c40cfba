#include "render.hpp"

#include <algorithm>
#include <sstream>

namespace celltransfer::render {

std::string grid_tableau(const GridPoset& grid, const Tableau& t, ElementSet marked) {
  int width = 1;
  for (ElementId e : t.domain()) width = std::max<int>(width, static_cast<int>(std::to_string(t.at(e)).size()));
  int last_row = 0;
  for (ElementId e : t.domain()) last_row = std::max(last_row, grid.cell(e).row);

  std::ostringstream os;
  for (int row = 1; row <= last_row; ++row) {
    std::string line;
    for (int col = 1; col <= grid.cols(); ++col) {
      ElementId e = grid.id({row, col});
      std::string cell;
      if (t.domain().contains(e)) {
        cell = std::to_string(t.at(e));
        cell.insert(0, width - cell.size(), ' ');
        cell += marked.contains(e) ? "*" : " ";
      } else {
        cell.assign(width + 1, ' ');
      }
      line += cell + " ";
    }
    line.erase(line.find_last_not_of(' ') + 1);
    os << line << "\n";
  }
  return os.str();
}

std::string poset_tableau(const Poset& p, const Tableau& t, ElementSet marked) {
  std::ostringstream os;
  for (ElementId e : p.linear_extension()) {
    if (!t.domain().contains(e)) continue;
    os << "  " << e << ": " << t.at(e) << (marked.contains(e) ? " *" : "") << "\n";
  }
  return os.str();
}

}  // namespace celltransfer::render
