#pragma once

#include <cstdint>
#include <vector>

#include "loz/exact.hpp"
#include "loz/lattice.hpp"

namespace loz {

// Node budget for the backtracking enumerations. Exceeding it raises
// resource_error; the oracle never returns an approximate count.
struct OracleBudget {
  std::uint64_t max_nodes = 50'000'000;
};

// Exact number of lozenge tilings of a region, by exhaustive backtracking on
// the uncovered cell with the fewest available partners. The default entry
// point fans the search tree out over OpenMP threads; the serial variant is
// the reference both are tested against. Results are identical.
ExactInt count_tilings(const Region& r, const OracleBudget& budget = {});
ExactInt count_tilings_serial(const Region& r, const OracleBudget& budget = {});

// Tilings of r that contain the lozenge l; equals count_tilings of r with
// l's cells removed. domain_error if l is not inside r.
ExactInt count_tilings_containing(const Region& r, const Lozenge& l,
                                  const OracleBudget& budget = {});

// Sum over tilings of 2^-(number of marked rhombi the tiling uses).
ExactRational weighted_count(const Region& r, const OracleBudget& budget = {});

// A family of lattice paths with unit steps right and down. Path i runs from
// starts[i] to ends[i]; indices in half_weight_start_rows contribute weight
// 1/2 when their path leaves its start horizontally.
struct PathFamilySpec {
  struct Point {
    long x = 0;
    long y = 0;
  };
  std::vector<Point> starts;
  std::vector<Point> ends;
  std::vector<std::size_t> half_weight_start_rows;  // 0-based path indices
};

// Weighted number of vertex-disjoint path tuples, by exhaustive enumeration.
// The budget bounds the product of the individual path counts.
ExactRational count_path_families(const PathFamilySpec& s,
                                  const ExactInt& max_tuples = ExactInt(1'000'000));

// Path families encoding the upper and lower half regions of the punctured
// symmetric hexagon; their weighted counts match the corresponding
// Gessel-Viennot determinants.
PathFamilySpec upper_half_path_spec(long n, long m);
PathFamilySpec lower_half_path_spec(long n, long m);

}  // namespace loz
