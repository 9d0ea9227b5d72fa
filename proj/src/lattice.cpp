#include "loz/lattice.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

#include <json.hpp>

namespace loz {
namespace {

std::array<Cell, 3> neighbors(const Cell& c) {
  if (c.up)
    return {Cell{c.x, c.y, false}, Cell{c.x - 1, c.y, false}, Cell{c.x, c.y - 1, false}};
  return {Cell{c.x, c.y, true}, Cell{c.x + 1, c.y, true}, Cell{c.x, c.y + 1, true}};
}

bool vertex_in_hexagon(long x, long y, const HexagonSpec& h) {
  return y >= 0 && y <= h.b + h.c && x >= -h.c && x <= h.a && x + y >= 0 &&
         x + y <= h.a + h.b;
}

bool cell_in_hexagon(const Cell& c, const HexagonSpec& h) {
  if (c.up)
    return vertex_in_hexagon(c.x, c.y, h) && vertex_in_hexagon(c.x + 1, c.y, h) &&
           vertex_in_hexagon(c.x, c.y + 1, h);
  return vertex_in_hexagon(c.x + 1, c.y, h) && vertex_in_hexagon(c.x, c.y + 1, h) &&
         vertex_in_hexagon(c.x + 1, c.y + 1, h);
}

void require_symmetric(const HexagonSpec& h, const char* who) {
  if (h.a != h.b) throw domain_error(std::string(who) + ": requires a == b");
}

}  // namespace

Lozenge::Lozenge(Cell a, Cell b) {
  if (!a.up) std::swap(a, b);
  if (!a.up || b.up || !cells_adjacent(a, b))
    throw domain_error("Lozenge: cells must be an adjacent up/down pair");
  first = a;
  second = b;
}

bool cells_adjacent(const Cell& a, const Cell& b) {
  if (a.up == b.up) return false;
  for (const Cell& n : neighbors(a))
    if (n == b) return true;
  return false;
}

bool Region::contains(const Cell& c) const {
  return std::binary_search(cells.begin(), cells.end(), c);
}

Region Region::from_cells(std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  Region r;
  r.cells = std::move(cells);
  return r;
}

std::string region_to_json(const Region& r) {
  nlohmann::json j;
  j["cells"] = nlohmann::json::array();
  for (const Cell& c : r.cells)
    j["cells"].push_back({c.x, c.y, c.up ? "u" : "d"});
  j["marked_rhombi"] = nlohmann::json::array();
  for (const Lozenge& l : r.marked_rhombi)
    j["marked_rhombi"].push_back(
        {{l.first.x, l.first.y, "u"}, {l.second.x, l.second.y, "d"}});
  return j.dump();
}

Region region_from_json(const std::string& json) {
  nlohmann::json j = nlohmann::json::parse(json);
  std::vector<Cell> cells;
  for (const auto& e : j.at("cells"))
    cells.push_back(Cell{e.at(0).get<long>(), e.at(1).get<long>(),
                         e.at(2).get<std::string>() == "u"});
  Region r = Region::from_cells(std::move(cells));
  if (j.contains("marked_rhombi")) {
    for (const auto& e : j.at("marked_rhombi")) {
      Cell a{e.at(0).at(0).get<long>(), e.at(0).at(1).get<long>(), true};
      Cell b{e.at(1).at(0).get<long>(), e.at(1).at(1).get<long>(), false};
      r.marked_rhombi.emplace_back(a, b);
    }
  }
  return r;
}

Region build_hexagon(const HexagonSpec& h) {
  std::vector<Cell> cells;
  for (long y = 0; y <= h.b + h.c; ++y) {
    for (long x = -h.c - 1; x <= h.a; ++x) {
      Cell up{x, y, true};
      Cell down{x, y, false};
      if (cell_in_hexagon(up, h)) cells.push_back(up);
      if (cell_in_hexagon(down, h)) cells.push_back(down);
    }
  }
  return Region::from_cells(std::move(cells));
}

std::vector<Lozenge> axis_rhombi(const HexagonSpec& h) {
  require_symmetric(h, "axis_rhombi");
  std::vector<Lozenge> rhombi;
  for (long x = -h.c - 1; x <= h.a; ++x) {
    Cell up{x, x + h.c, true};
    Cell down{x, x + h.c, false};
    if (cell_in_hexagon(up, h) && cell_in_hexagon(down, h))
      rhombi.emplace_back(up, down);
  }
  return rhombi;
}

Lozenge central_lozenge(const HexagonSpec& h) {
  require_symmetric(h, "central_lozenge");
  if ((h.a + h.c) % 2 == 0)
    throw domain_error("central_lozenge: a and c must have opposite parity");
  auto rhombi = axis_rhombi(h);
  // Opposite parity forces an odd number of axis rhombi; the middle one sits
  // at the hexagon's center.
  if (rhombi.empty() || rhombi.size() % 2 == 0)
    throw domain_error("central_lozenge: unexpected axis rhombus count");
  return rhombi[rhombi.size() / 2];
}

Region build_punctured(const HexagonSpec& h) {
  Lozenge central = central_lozenge(h);
  Region hex = build_hexagon(h);
  std::vector<Cell> cells;
  cells.reserve(hex.cells.size() - 2);
  for (const Cell& c : hex.cells)
    if (c != central.first && c != central.second) cells.push_back(c);
  return Region::from_cells(std::move(cells));
}

Cell reflect_across_axis(const Cell& c, const HexagonSpec& h) {
  require_symmetric(h, "reflect_across_axis");
  return Cell{c.y - h.c, c.x + h.c, c.up};
}

std::vector<Lozenge> strip_forced_lozenges(Region& r, const std::vector<Cell>& keep) {
  std::vector<Lozenge> removed;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Cell& c : r.cells) {
      if (std::find(keep.begin(), keep.end(), c) != keep.end()) continue;
      Cell partner;
      int available = 0;
      for (const Cell& n : neighbors(c)) {
        if (!r.contains(n)) continue;
        ++available;
        partner = n;
      }
      if (available != 1) continue;
      if (std::find(keep.begin(), keep.end(), partner) != keep.end()) continue;
      removed.emplace_back(c, partner);
      std::vector<Cell> rest;
      rest.reserve(r.cells.size() - 2);
      for (const Cell& cc : r.cells)
        if (cc != c && cc != partner) rest.push_back(cc);
      r.cells = std::move(rest);
      changed = true;
      break;
    }
  }
  return removed;
}

AxisSplit split_at_axis(const CenteredProblem& p) {
  const HexagonSpec h = p.hexagon();
  const Lozenge central = central_lozenge(h);
  const Region punctured = build_punctured(h);

  // Cells with y - x - c = 0 are cut by the axis; positive goes above the
  // zig-zag path, the cut cells and everything negative go below.
  std::vector<Cell> upper_cells, lower_cells;
  long cut = 0;
  for (const Cell& c : punctured.cells) {
    long s = c.y - c.x - h.c;
    if (s > 0) {
      upper_cells.push_back(c);
    } else {
      lower_cells.push_back(c);
      if (s == 0) ++cut;
    }
  }
  if (cut % 2 != 0) throw domain_error("split_at_axis: odd axis cell count");

  AxisSplit split;
  split.k = cut / 2;
  const long expected_k =
      p.parity == Parity::kOddSides ? 2 * p.n - 2 : 2 * p.n - 1;
  if (split.k != expected_k)
    throw domain_error("split_at_axis: axis rhombus count mismatch");

  split.upper = Region::from_cells(std::move(upper_cells));
  split.lower = Region::from_cells(std::move(lower_cells));

  // Surviving axis rhombi stay intact through forced-lozenge stripping and
  // become the weight-1/2 rhombi of the lower piece.
  std::vector<Cell> keep;
  std::vector<Lozenge> marked;
  for (const Lozenge& l : axis_rhombi(h)) {
    if (l == central) continue;
    if (!split.lower.contains(l.first) || !split.lower.contains(l.second)) continue;
    keep.push_back(l.first);
    keep.push_back(l.second);
    marked.push_back(l);
  }
  strip_forced_lozenges(split.upper, {});
  strip_forced_lozenges(split.lower, keep);
  split.lower.marked_rhombi = std::move(marked);
  if (static_cast<long>(split.lower.marked_rhombi.size()) != 2 * p.n - 2)
    throw domain_error("split_at_axis: marked rhombus count mismatch");
  return split;
}

}  // namespace loz
