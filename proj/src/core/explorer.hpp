#pragma once

#include "costmodel.hpp"
#include "types.hpp"

namespace draco {

struct sweep_grid {
  std::vector<int> arrays = {16, 32, 64, 128};  // preset sizes
  std::vector<int> g_values = {1, 2, 4, 8, 16, 32};
  std::vector<double> alphas = {1.0};
  std::vector<double> rhos = {1.0};
};

struct sweep_row {
  std::string array_label;
  int array_size = 0;
  double alpha = 1.0;
  double rho = 1.0;
  int g = 1;
  long long macs = 0;
  long long params = 0;
  double avg_utilization = 0;
  double util_3x3 = 0;
  double util_1x1 = 0;
  double latency_ms = 0;
  double energy_mj = 0;
  energy_breakdown energy;  // joules
};

struct skipped_point {
  std::string array_label;
  double alpha = 1.0;
  double rho = 1.0;
  int g = 1;
  std::string reason;
};

struct sweep_result {
  std::vector<sweep_row> rows;      // sorted by array, alpha, rho, G
  std::vector<skipped_point> skipped;  // one entry per invalid grid point
};

struct takeaway_check {
  std::string id;
  bool evaluable = false;
  bool pass = false;
  std::string evidence;
};

struct takeaway_report {
  takeaway_check t1, t2, t3, t4;
};

struct comparison_row {
  std::string array_label;
  int g = 1;
  double util_a1 = 0, util_a05 = 0;       // avg utilization at alpha 1 / 0.5
  double lat_a1 = 0, lat_a05 = 0;          // ms
  double energy_a1 = 0, energy_a05 = 0;    // mJ
  bool util_match = false;     // |delta| <= 2pp
  bool faster_and_cheaper = false;
};

// Cartesian sweep via netgen -> mapping -> costmodel. Points where G violates
// channel divisibility are skipped and recorded once. rho >= 2 variants double
// the on-chip memories so comparisons stay like-for-like.
sweep_result run_sweep(const sweep_grid& grid);

// Latency-minimal G at a fixed (array, alpha, rho); ties break toward
// smaller G. Throws if no row matches.
std::pair<int, double> argmin_latency(const std::vector<sweep_row>& rows,
                                      const std::string& array_label,
                                      double alpha, double rho);

// T1: argmin G non-decreasing in array size (alpha=1, rho in {1,2}).
// T2: latency plateaus over the top half of the G range (alpha=0.5 rho=1,
//     64x64, max pairwise gap <= 10%).
// T3: on 64x64 at alpha=1 rho=2, latency(G=16) > latency(G=4) even though
//     utilization(G=16) > utilization(G=4).
// T4: the (alpha 1 -> 0.5, rho=2, G=1) speedup is larger on 16x16 than on
//     128x128. Checks lacking coverage are marked not evaluable.
takeaway_report build_takeaway_report(const sweep_result& sweep);

// Side-by-side alpha=1 vs alpha=0.5 at rho=2 across arrays and G <= 16.
// Throws if either variant is missing.
std::vector<comparison_row> alternative_comparison(const std::vector<sweep_row>& rows);

}  // namespace draco
