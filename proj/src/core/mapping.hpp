#pragma once

#include "types.hpp"

namespace draco {

struct mapping_result {
  int pe_set_rows = 1;
  int pe_set_cols = 1;
  int r_g = 1;   // channel-slices stacked vertically (accumulate together)
  int r_f = 1;   // filters/groups replicated horizontally
  int r_s = 1;   // ofmap strips replicated vertically
  int o_v = 1;   // extra output rows replicated in leftover vertical slots
  long long passes = 1;
  long long active_total = 0;  // sum of active PEs over all passes
  double utilization = 0.0;
};

// Row-stationary occupancy model. The PE set is d_k rows x E cols with
// E = min(d_f, C) balanced over S = ceil(d_f/E) strips. Vertical slots
// (R/d_k) first stack channel-slices (r_g), then ofmap strips when the
// fmap folds more than twice (r_s), then further output rows (o_v);
// leftover columns replicate filters/groups in power-of-two tiles (r_f).
// Pooling/FC map as a single-pass vector op, active = min(R*C, work).
mapping_result map_layer(const layer_spec& layer, const array_config& array);

// Unweighted arithmetic mean; throws on an empty list.
double average_utilization(const std::vector<mapping_result>& results);

}  // namespace draco
