#include "mapping.hpp"

#include <algorithm>

#include "netgen.hpp"

namespace draco {

namespace {

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

int floor_pow2(int v) {
  int p = 1;
  while (p * 2 <= v) p *= 2;
  return p;
}

}  // namespace

mapping_result map_layer(const layer_spec& l, const array_config& a) {
  const long long pes = static_cast<long long>(a.rows) * a.cols;
  mapping_result mr;

  if (!l.is_conv()) {
    const layer_counts c = count_layer(l);
    const long long work = l.kind == layer_kind::fully_connected ? c.macs : c.in_acts;
    const long long active = std::min<long long>(pes, std::max<long long>(1, work));
    mr.pe_set_cols = static_cast<int>(std::min<long long>(active, a.cols));
    mr.passes = 1;
    mr.active_total = active;
    mr.utilization = double(active) / double(pes);
    return mr;
  }

  const int df = l.out_spatial();
  const int geff = l.kind == layer_kind::grouped_conv ? l.channels_per_group : l.in_channels;
  const int E0 = std::min(df, a.cols);
  const int S = static_cast<int>(ceil_div(df, E0));
  const int E = static_cast<int>(ceil_div(df, S));  // balanced strip width
  const int slots = l.d_k <= a.rows ? std::max(1, a.rows / l.d_k) : 1;

  const int rg = std::min(geff, slots);
  int rf = floor_pow2(std::max(1, a.cols / E));  // power-of-two column tiling
  const int group_out =
      l.kind == layer_kind::grouped_conv
          ? l.out_channels / std::max(1, l.in_channels / geff)
          : l.out_channels;
  if (l.kind == layer_kind::grouped_conv) rf = std::min(rf, group_out);
  rf = std::min(rf, l.out_channels);
  int rs = 1;
  if (S > 2) rs = std::min(S, std::max(1, slots / rg));
  const int ov = static_cast<int>(
      std::min<long long>(ceil_div(group_out, rf), std::max(1, slots / (rg * rs))));

  const long long passes = ceil_div(l.out_channels, static_cast<long long>(rf) * ov) *
                           ceil_div(geff, rg) * ceil_div(S, rs);
  const long long area =
      static_cast<long long>(l.out_channels) * geff * l.d_k * df;

  mr.pe_set_rows = l.d_k;
  mr.pe_set_cols = E;
  mr.r_g = rg;
  mr.r_f = rf;
  mr.r_s = rs;
  mr.o_v = ov;
  mr.passes = passes;
  mr.active_total = area;
  mr.utilization = double(area) / double(passes * pes);
  return mr;
}

double average_utilization(const std::vector<mapping_result>& results) {
  if (results.empty()) throw model_error("average_utilization: empty list");
  double s = 0;
  for (const auto& r : results) s += r.utilization;
  return s / double(results.size());
}

}  // namespace draco
