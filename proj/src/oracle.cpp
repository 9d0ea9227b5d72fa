#include "loz/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace loz {
namespace {

// Indexed view of a region for backtracking: neighbor lists plus, for cells
// belonging to a marked rhombus, the partner index.
struct SearchGraph {
  std::vector<Cell> cells;
  std::vector<std::vector<int>> nbr;
  std::vector<int> marked_partner;  // -1 when not part of a marked rhombus
  std::size_t marked_count = 0;

  explicit SearchGraph(const Region& r) : cells(r.cells) {
    const int n = static_cast<int>(cells.size());
    nbr.resize(n);
    marked_partner.assign(n, -1);
    auto index_of = [&](const Cell& c) -> int {
      auto it = std::lower_bound(cells.begin(), cells.end(), c);
      if (it == cells.end() || *it != c) return -1;
      return static_cast<int>(it - cells.begin());
    };
    for (int i = 0; i < n; ++i) {
      const Cell& c = cells[i];
      std::array<Cell, 3> cand =
          c.up ? std::array<Cell, 3>{Cell{c.x, c.y, false}, Cell{c.x - 1, c.y, false},
                                     Cell{c.x, c.y - 1, false}}
               : std::array<Cell, 3>{Cell{c.x, c.y, true}, Cell{c.x + 1, c.y, true},
                                     Cell{c.x, c.y + 1, true}};
      for (const Cell& p : cand) {
        int j = index_of(p);
        if (j >= 0) nbr[i].push_back(j);
      }
    }
    for (const Lozenge& l : r.marked_rhombi) {
      int i = index_of(l.first);
      int j = index_of(l.second);
      if (i < 0 || j < 0)
        throw domain_error("oracle: marked rhombus outside the region");
      if (marked_partner[i] != -1 || marked_partner[j] != -1)
        throw domain_error("oracle: marked rhombi overlap");
      marked_partner[i] = j;
      marked_partner[j] = i;
      ++marked_count;
    }
  }

  bool is_marked_pair(int i, int j) const { return marked_partner[i] == j; }
};

struct SearchState {
  std::vector<char> covered;
  int uncovered = 0;
  int marked_used = 0;
};

class BudgetGuard {
 public:
  explicit BudgetGuard(std::uint64_t max_nodes) : max_(max_nodes) {}
  void tick() {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) >= max_)
      throw resource_error("oracle: node budget exceeded");
  }

 private:
  std::atomic<std::uint64_t> nodes_{0};
  std::uint64_t max_;
};

// Uncovered cell with the fewest uncovered partners (fail-first); ties go to
// the lowest index so the choice is deterministic.
int pick_cell(const SearchGraph& g, const SearchState& st) {
  int best = -1, best_deg = 4;
  for (int i = 0; i < static_cast<int>(g.cells.size()); ++i) {
    if (st.covered[i]) continue;
    int deg = 0;
    for (int j : g.nbr[i])
      if (!st.covered[j]) ++deg;
    if (deg < best_deg) {
      best = i;
      best_deg = deg;
      if (deg <= 1) break;
    }
  }
  return best;
}

void search(const SearchGraph& g, SearchState& st, BudgetGuard& budget,
            std::vector<std::uint64_t>& counts_by_marked) {
  budget.tick();
  if (st.uncovered == 0) {
    ++counts_by_marked[st.marked_used];
    return;
  }
  int i = pick_cell(g, st);
  for (int j : g.nbr[i]) {
    if (st.covered[j]) continue;
    bool marked = g.is_marked_pair(i, j);
    st.covered[i] = st.covered[j] = 1;
    st.uncovered -= 2;
    st.marked_used += marked ? 1 : 0;
    search(g, st, budget, counts_by_marked);
    st.marked_used -= marked ? 1 : 0;
    st.uncovered += 2;
    st.covered[i] = st.covered[j] = 0;
  }
}

std::vector<std::uint64_t> enumerate_serial(const SearchGraph& g,
                                            const OracleBudget& budget) {
  SearchState st;
  st.covered.assign(g.cells.size(), 0);
  st.uncovered = static_cast<int>(g.cells.size());
  std::vector<std::uint64_t> counts(g.marked_count + 1, 0);
  BudgetGuard guard(budget.max_nodes);
  search(g, st, guard, counts);
  return counts;
}

std::vector<std::uint64_t> enumerate_parallel(const SearchGraph& g,
                                              const OracleBudget& budget) {
#ifdef _OPENMP
  const int want = 4 * omp_get_max_threads();
#else
  const int want = 1;
#endif
  // Expand a frontier of partial states breadth-first, then finish each
  // subtree independently. Counts are exact, so the combination order is
  // immaterial and the result matches the serial run bit for bit.
  std::vector<std::uint64_t> counts(g.marked_count + 1, 0);
  std::vector<SearchState> frontier;
  {
    SearchState root;
    root.covered.assign(g.cells.size(), 0);
    root.uncovered = static_cast<int>(g.cells.size());
    frontier.push_back(std::move(root));
  }
  BudgetGuard guard(budget.max_nodes);
  while (static_cast<int>(frontier.size()) < want) {
    std::vector<SearchState> next;
    bool expanded = false;
    for (SearchState& st : frontier) {
      if (st.uncovered == 0) {
        next.push_back(std::move(st));
        continue;
      }
      guard.tick();
      int i = pick_cell(g, st);
      for (int j : g.nbr[i]) {
        if (st.covered[j]) continue;
        SearchState child = st;
        child.covered[i] = child.covered[j] = 1;
        child.uncovered -= 2;
        child.marked_used += g.is_marked_pair(i, j) ? 1 : 0;
        next.push_back(std::move(child));
        expanded = true;
      }
    }
    frontier = std::move(next);
    if (!expanded) break;
  }

  std::exception_ptr failure;
#ifdef _OPENMP
#pragma omp parallel
#endif
  {
    std::vector<std::uint64_t> local(counts.size(), 0);
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 1) nowait
#endif
    for (long idx = 0; idx < static_cast<long>(frontier.size()); ++idx) {
      try {
        SearchState st = frontier[idx];
        search(g, st, guard, local);
      } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
        if (!failure) failure = std::current_exception();
      }
    }
#ifdef _OPENMP
#pragma omp critical
#endif
    for (std::size_t u = 0; u < counts.size(); ++u) counts[u] += local[u];
  }
  if (failure) std::rethrow_exception(failure);
  return counts;
}

ExactInt total(const std::vector<std::uint64_t>& counts) {
  ExactInt t(0);
  for (std::uint64_t c : counts) t += ExactInt(static_cast<unsigned long>(c));
  return t;
}

}  // namespace

ExactInt count_tilings(const Region& r, const OracleBudget& budget) {
  return total(enumerate_parallel(SearchGraph(r), budget));
}

ExactInt count_tilings_serial(const Region& r, const OracleBudget& budget) {
  return total(enumerate_serial(SearchGraph(r), budget));
}

ExactInt count_tilings_containing(const Region& r, const Lozenge& l,
                                  const OracleBudget& budget) {
  if (!r.contains(l.first) || !r.contains(l.second))
    throw domain_error("count_tilings_containing: lozenge not inside region");
  std::vector<Cell> rest;
  rest.reserve(r.cells.size() - 2);
  for (const Cell& c : r.cells)
    if (c != l.first && c != l.second) rest.push_back(c);
  return count_tilings(Region::from_cells(std::move(rest)), budget);
}

ExactRational weighted_count(const Region& r, const OracleBudget& budget) {
  auto counts = enumerate_parallel(SearchGraph(r), budget);
  ExactRational w(0);
  for (std::size_t u = 0; u < counts.size(); ++u)
    w += ExactRational(static_cast<unsigned long>(counts[u])) * pow2(-static_cast<long>(u));
  return w;
}

namespace {

ExactInt single_path_count(const PathFamilySpec::Point& a,
                           const PathFamilySpec::Point& e) {
  long dx = e.x - a.x;
  long dy = a.y - e.y;
  if (dx < 0 || dy < 0) return 0;
  return binomial(dx + dy, dx);
}

struct PathEnumerator {
  const PathFamilySpec& spec;
  std::set<std::pair<long, long>> occupied;
  std::vector<std::uint64_t> counts_by_halves;

  explicit PathEnumerator(const PathFamilySpec& s)
      : spec(s), counts_by_halves(s.starts.size() + 1, 0) {}

  bool half_weighted(std::size_t path) const {
    return std::find(spec.half_weight_start_rows.begin(),
                     spec.half_weight_start_rows.end(),
                     path) != spec.half_weight_start_rows.end();
  }

  void run() { next_path(0, 0); }

  void next_path(std::size_t path, int halves) {
    if (path == spec.starts.size()) {
      ++counts_by_halves[halves];
      return;
    }
    std::vector<std::pair<long, long>> trail;
    walk(path, halves, spec.starts[path].x, spec.starts[path].y, true, trail);
  }

  void walk(std::size_t path, int halves, long x, long y, bool at_start,
            std::vector<std::pair<long, long>>& trail) {
    const auto& end = spec.ends[path];
    if (x > end.x || y < end.y) return;
    if (occupied.count({x, y})) return;
    trail.emplace_back(x, y);
    occupied.insert({x, y});
    if (x == end.x && y == end.y) {
      next_path(path + 1, halves);
    } else {
      int extra = (at_start && half_weighted(path)) ? 1 : 0;
      if (x < end.x) walk(path, halves + extra, x + 1, y, false, trail);
      if (y > end.y) walk(path, halves, x, y - 1, false, trail);
    }
    occupied.erase({x, y});
    trail.pop_back();
  }
};

}  // namespace

ExactRational count_path_families(const PathFamilySpec& s, const ExactInt& max_tuples) {
  if (s.starts.size() != s.ends.size())
    throw domain_error("count_path_families: starts/ends size mismatch");
  ExactInt product(1);
  for (std::size_t i = 0; i < s.starts.size(); ++i) {
    ExactInt c = single_path_count(s.starts[i], s.ends[i]);
    if (c == 0) return ExactRational(0);
    product *= c;
  }
  if (product > max_tuples)
    throw resource_error("count_path_families: tuple budget exceeded");
  PathEnumerator en(s);
  en.run();
  ExactRational w(0);
  for (std::size_t h = 0; h < en.counts_by_halves.size(); ++h)
    w += ExactRational(static_cast<unsigned long>(en.counts_by_halves[h])) *
         pow2(-static_cast<long>(h));
  return w;
}

PathFamilySpec upper_half_path_spec(long n, long m) {
  PathFamilySpec s;
  for (long i = 1; i <= 2 * n - 2; ++i) {
    s.starts.push_back({2 * i, i + m});
    s.ends.push_back({2 * n + i - 1, i});
  }
  return s;
}

PathFamilySpec lower_half_path_spec(long n, long m) {
  PathFamilySpec s;
  for (long i = 1; i <= 2 * n - 1; ++i) {
    if (i == n) {
      s.starts.push_back({2 * n + 1, n + m});
    } else {
      s.starts.push_back({2 * i, i + m});
      s.half_weight_start_rows.push_back(static_cast<std::size_t>(i - 1));
    }
    s.ends.push_back({2 * n + i, i});
  }
  return s;
}

}  // namespace loz
