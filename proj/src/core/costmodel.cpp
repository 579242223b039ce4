#include "costmodel.hpp"

#include <algorithm>
#include <cmath>

#include "netgen.hpp"

namespace draco {

access_counts count_accesses(const layer_spec& l, const layer_counts& c,
                             const array_config& a) {
  access_counts acc;
  const double uniq = double(c.params) + double(c.in_acts) + double(c.out_acts);
  const double ws_bytes = uniq * a.word_bytes;
  const double onchip = double(a.gbuf_bytes) + double(a.rf_total_bytes());
  if (ws_bytes <= onchip) {
    acc.dram = uniq;
  } else {
    const double reload = std::ceil(ws_bytes / double(a.gbuf_bytes));
    acc.dram = double(c.in_acts) + double(c.out_acts) + double(c.params) * reload;
  }
  acc.gbuf = uniq * a.gbuf_roundtrips;
  acc.array = a.array_factor * double(c.macs);
  acc.rf = a.rf_factor * double(c.macs);
  acc.alu_macs = double(c.macs);
  return acc;
}

layer_cost compute_layer_cost(const layer_spec& l, const array_config& a) {
  layer_cost lc;
  lc.layer = l.name;
  lc.counts = count_layer(l);
  lc.mapping = map_layer(l, a);
  lc.utilization = lc.mapping.utilization;
  lc.accesses = count_accesses(l, lc.counts, a);

  if (lc.counts.macs > 0) {
    if (lc.utilization <= 0) throw model_error("unmappable layer " + l.name);
    if (l.is_conv()) {
      lc.compute_cycles =
          double(lc.mapping.passes) * l.d_k * l.out_spatial();
    } else {
      lc.compute_cycles =
          std::ceil(double(lc.counts.macs) / double(lc.mapping.active_total));
    }
  }
  lc.memory_cycles = lc.accesses.dram * a.word_bytes / a.dram_bytes_per_cycle;
  lc.latency_cycles = std::max(lc.compute_cycles, lc.memory_cycles);
  lc.latency_s = lc.latency_cycles / a.clock_hz;

  const energy_costs& e = a.energy;
  lc.energy.dram_j = lc.accesses.dram * e.dram_j;
  lc.energy.gbuf_j = lc.accesses.gbuf * e.gbuf_j;
  lc.energy.array_j = lc.accesses.array * e.array_j;
  lc.energy.rf_j = lc.accesses.rf * e.rf_j;
  lc.energy.alu_j = lc.accesses.alu_macs * e.alu_j;
  lc.energy_total_j = lc.energy.total_j();
  return lc;
}

network_cost compute_network_cost(const network_spec& net, const array_config& a) {
  if (net.layers.empty()) throw model_error("network has no layers");
  network_cost nc;
  double u33 = 0, u11 = 0;
  int n33 = 0, n11 = 0;
  for (const auto& l : net.layers) {
    layer_cost lc = compute_layer_cost(l, a);
    nc.latency_s += lc.latency_s;
    nc.energy_j += lc.energy_total_j;
    nc.energy.dram_j += lc.energy.dram_j;
    nc.energy.gbuf_j += lc.energy.gbuf_j;
    nc.energy.array_j += lc.energy.array_j;
    nc.energy.rf_j += lc.energy.rf_j;
    nc.energy.alu_j += lc.energy.alu_j;
    nc.avg_utilization += lc.utilization;
    nc.macs += lc.counts.macs;
    nc.params += lc.counts.params;
    if (l.kind == layer_kind::grouped_conv) { u33 += lc.utilization; ++n33; }
    if (l.kind == layer_kind::standard_conv && l.d_k == 1) { u11 += lc.utilization; ++n11; }
    nc.layers.push_back(std::move(lc));
  }
  nc.avg_utilization /= double(nc.layers.size());
  if (n33) nc.util_3x3 = u33 / n33;
  if (n11) nc.util_1x1 = u11 / n11;
  return nc;
}

}  // namespace draco
