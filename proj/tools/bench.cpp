#include <chrono>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "loz/closed_forms.hpp"
#include "loz/determinants.hpp"
#include "loz/lattice.hpp"
#include "loz/matrix.hpp"
#include "loz/oracle.hpp"

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

template <typename F>
std::pair<double, std::invoke_result_t<F>> timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  auto value = f();
  return {ms_since(t0), std::move(value)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs. OpenMP timings for the exact kernels"};
  long det_n = 12, det_m = 6;
  long hex_a = 4, hex_b = 4, hex_c = 3;
  app.add_option("--det-n", det_n, "row parameter of the benchmark determinant");
  app.add_option("--det-m", det_m, "shift parameter of the benchmark determinant");
  app.add_option("--a", hex_a, "hexagon side a for the tiling benchmark");
  app.add_option("--b", hex_b, "hexagon side b");
  app.add_option("--c", hex_c, "hexagon side c");
  CLI11_PARSE(app, argc, argv);

  loz::RationalMatrix mat = loz::lower_half_matrix(det_n, det_m);
  auto [t_det_serial, d_serial] =
      timed([&] { return loz::exact_determinant_serial(mat); });
  auto [t_det_parallel, d_parallel] = timed([&] { return loz::exact_determinant(mat); });
  std::printf("determinant %ldx%ld: serial %.1f ms, parallel %.1f ms, match=%s\n",
              2 * det_n - 1, 2 * det_n - 1, t_det_serial, t_det_parallel,
              d_serial == d_parallel ? "yes" : "NO");

  loz::Region hex = loz::build_hexagon(loz::HexagonSpec(hex_a, hex_b, hex_c));
  loz::OracleBudget budget;
  auto [t_tile_serial, c_serial] =
      timed([&] { return loz::count_tilings_serial(hex, budget); });
  auto [t_tile_parallel, c_parallel] = timed([&] { return loz::count_tilings(hex, budget); });
  std::printf("tilings (%ld,%ld,%ld) = %s: serial %.1f ms, parallel %.1f ms, match=%s\n",
              hex_a, hex_b, hex_c, loz::to_string(c_serial).c_str(), t_tile_serial,
              t_tile_parallel, c_serial == c_parallel ? "yes" : "NO");

  return (d_serial == d_parallel && c_serial == c_parallel) ? 0 : 1;
}
