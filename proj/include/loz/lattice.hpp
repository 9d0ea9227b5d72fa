#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "loz/closed_forms.hpp"
#include "loz/exact.hpp"

namespace loz {

// Unit triangle of the triangular lattice in axial coordinates. The
// up-triangle at (x,y) has corners (x,y), (x+1,y), (x,y+1); the down-triangle
// at (x,y) has corners (x+1,y), (x,y+1), (x+1,y+1). An up cell is adjacent to
// the down cells at (x,y), (x-1,y) and (x,y-1).
struct Cell {
  long x = 0;
  long y = 0;
  bool up = true;

  auto operator<=>(const Cell&) const = default;
};

// Two adjacent cells (one up, one down) forming a unit rhombus.
struct Lozenge {
  Cell first;   // the up cell
  Cell second;  // the down cell

  Lozenge(Cell a, Cell b);

  auto operator<=>(const Lozenge&) const = default;
};

bool cells_adjacent(const Cell& a, const Cell& b);

// Finite cell set, optionally with marked rhombi (disjoint cell pairs inside
// the region) that receive weight 1/2 in weighted tiling counts.
struct Region {
  std::vector<Cell> cells;  // kept sorted and unique
  std::vector<Lozenge> marked_rhombi;

  bool contains(const Cell& c) const;
  std::size_t size() const { return cells.size(); }

  static Region from_cells(std::vector<Cell> cells);
};

// JSON form: {"cells": [[x,y,"u"|"d"],...], "marked_rhombi": [...]}.
std::string region_to_json(const Region& r);
Region region_from_json(const std::string& json);

// The (a,b,c) hexagon as a lattice region of 2(ab+bc+ca) cells. Cells lie in
// the convex polygon 0 <= y <= b+c, -c <= x <= a, 0 <= x+y <= a+b; the a=b
// symmetry axis is the line y = x + c.
Region build_hexagon(const HexagonSpec& h);

// Rhombi cut by the a=b symmetry axis, in order along the axis. Requires
// a == b.
std::vector<Lozenge> axis_rhombi(const HexagonSpec& h);

// The lozenge centered at the hexagon's center; requires a == b and a, c of
// opposite parity (domain_error otherwise).
Lozenge central_lozenge(const HexagonSpec& h);

// Hexagon minus the central lozenge's two cells.
Region build_punctured(const HexagonSpec& h);

// Reflection across the symmetry axis (an involution on the hexagon's cells).
Cell reflect_across_axis(const Cell& c, const HexagonSpec& h);

// Pieces of the punctured hexagon on either side of the zig-zag path along
// the axis rhombi. The upper piece and lower piece have their forced
// lozenges stripped; the lower piece carries the surviving axis rhombi as
// marked rhombi. k is the factorization exponent (half the number of cells
// the axis cuts in the punctured region): 2n-2 for odd-sides, 2n-1 for
// even-sides.
struct AxisSplit {
  Region upper;
  Region lower;
  long k = 0;
};

AxisSplit split_at_axis(const CenteredProblem& p);

// Iteratively removes pairs where a cell has exactly one adjacent partner
// left (such a lozenge lies in every tiling). Cells listed in `keep` are
// never removed. Returns the removed lozenges.
std::vector<Lozenge> strip_forced_lozenges(Region& r, const std::vector<Cell>& keep);

}  // namespace loz
