#pragma once

#include "mapping.hpp"
#include "types.hpp"

namespace draco {

struct access_counts {
  double dram = 0;
  double gbuf = 0;
  double array = 0;
  double rf = 0;
  double alu_macs = 0;
};

struct energy_breakdown {
  double dram_j = 0;
  double gbuf_j = 0;
  double array_j = 0;
  double rf_j = 0;
  double alu_j = 0;
  double total_j() const { return dram_j + gbuf_j + array_j + rf_j + alu_j; }
};

struct layer_cost {
  std::string layer;
  double utilization = 0;
  double compute_cycles = 0;
  double memory_cycles = 0;
  double latency_cycles = 0;  // max(compute, memory)
  double latency_s = 0;
  access_counts accesses;
  energy_breakdown energy;
  double energy_total_j = 0;
  mapping_result mapping;
  layer_counts counts;
};

struct network_cost {
  std::vector<layer_cost> layers;
  double latency_s = 0;
  double energy_j = 0;
  energy_breakdown energy;
  double avg_utilization = 0;
  double util_3x3 = 0;  // mean over grouped 3x3 layers (0 if none)
  double util_1x1 = 0;  // mean over 1x1 standard-conv layers (0 if none)
  long long macs = 0;
  long long params = 0;
};

// Per-level access counts. rf = rf_factor*macs, array = array_factor*macs,
// gbuf = gbuf_roundtrips*unique_words with unique_words = params+in+out acts.
// dram = unique_words when the working set fits on chip (GBuf + total RF);
// otherwise activations stream once and weights reload
// ceil(working_set_bytes / gbuf_bytes) times.
access_counts count_accesses(const layer_spec& layer, const layer_counts& counts,
                             const array_config& array);

// Roofline latency + per-level energy for one layer.
layer_cost compute_layer_cost(const layer_spec& layer, const array_config& array);

// Layers evaluated independently; latency and energy are additive (batch 1,
// no inter-layer pipelining). Utilization averages are unweighted means.
network_cost compute_network_cost(const network_spec& net, const array_config& array);

}  // namespace draco
