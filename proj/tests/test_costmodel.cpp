#include <doctest.h>

#include <cmath>

#include "core/costmodel.hpp"
#include "core/netgen.hpp"

using namespace draco;

TEST_SUITE_BEGIN("costmodel");

TEST_CASE("pooling layer: no compute traffic, compulsory activation traffic") {
  layer_spec pool{"pool", layer_kind::pooling, 0, 7, 1, 1024, 1024, 7, 0};
  const array_config a = preset_array(16);
  const access_counts acc = count_accesses(pool, count_layer(pool), a);
  CHECK(acc.rf == 0);
  CHECK(acc.alu_macs == 0);
  CHECK(acc.dram >= 1024.0 * 49 + 1024.0);
}

TEST_CASE("layer fitting on chip reads DRAM exactly once per word") {
  layer_spec pw{"pw", layer_kind::standard_conv, 0, 1, 1, 64, 64, 14, 0};
  const layer_counts c = count_layer(pw);
  const array_config a = preset_array(64);
  const access_counts acc = count_accesses(pw, c, a);
  CHECK(acc.dram == doctest::Approx(double(c.params + c.in_acts + c.out_acts)));
}

TEST_CASE("oversized working set reloads weights only") {
  layer_spec pw{"pw", layer_kind::standard_conv, 0, 1, 1, 512, 512, 28, 0};
  const layer_counts c = count_layer(pw);
  const array_config a = preset_array(16);  // 128 KiB GBuf << working set
  const access_counts acc = count_accesses(pw, c, a);
  CHECK(acc.dram > double(c.params + c.in_acts + c.out_acts));
  const double ws = double(c.params + c.in_acts + c.out_acts) * a.word_bytes;
  const double reload = std::ceil(ws / double(a.gbuf_bytes));
  CHECK(acc.dram ==
        doctest::Approx(double(c.in_acts + c.out_acts) + double(c.params) * reload));
}

TEST_CASE("1000 DRAM accesses cost 200 nJ; zero accesses cost nothing") {
  energy_costs e;
  CHECK(1000 * e.dram_j == doctest::Approx(200e-9));
  access_counts zero;
  energy_breakdown b;
  b.dram_j = zero.dram * e.dram_j;
  CHECK(b.total_j() == 0.0);
}

TEST_CASE("macs equal to the array at full utilization take one cycle") {
  layer_spec fc{"fc", layer_kind::fully_connected, 0, 1, 1, 256, 1, 1, 0};
  array_config a = preset_array(16);
  a.dram_bytes_per_cycle = 1e12;  // ample bandwidth
  const layer_cost lc = compute_layer_cost(fc, a);
  CHECK(lc.compute_cycles == doctest::Approx(1.0));
  CHECK(lc.latency_cycles == doctest::Approx(1.0));
}

TEST_CASE("roofline lower bound holds for every layer") {
  for (int sz : {16, 64}) {
    const array_config a = preset_array(sz);
    const network_cost nc = compute_network_cost(generate_mobilenet_v1(1, 1, 4), a);
    for (const auto& lc : nc.layers)
      CHECK(lc.latency_cycles >= double(lc.counts.macs) / (a.rows * a.cols) - 1e-6);
  }
}

TEST_CASE("latency calibration cells") {
  const network_cost c16 =
      compute_network_cost(generate_mobilenet_v1(1, 2, 1), preset_array(16, 2));
  CHECK(std::fabs(c16.latency_s * 1e3 - 66.5) / 66.5 <= 0.30);

  const network_cost c64 =
      compute_network_cost(generate_mobilenet_v1(1, 2, 4), preset_array(64, 2));
  CHECK(std::fabs(c64.latency_s * 1e3 - 4.9) / 4.9 <= 0.30);

  // G=4 is the latency argmin on the 64x64 array for this variant.
  double best = 1e300;
  int best_g = 0;
  for (int g : {1, 2, 4, 8, 16}) {
    const double ms =
        compute_network_cost(generate_mobilenet_v1(1, 2, g), preset_array(64, 2))
            .latency_s * 1e3;
    if (ms < best) { best = ms; best_g = g; }
  }
  CHECK(best_g == 4);
}

TEST_CASE("energy magnitude cell") {
  const network_cost nc =
      compute_network_cost(generate_mobilenet_v1(0.5, 2, 1), preset_array(64, 2));
  CHECK(std::fabs(nc.energy_j * 1e3 - 10.3) / 10.3 <= 0.40);
}

TEST_CASE("group growth keeps DRAM flat while RF tracks MACs") {
  const array_config a = preset_array(64);
  const network_cost g1 = compute_network_cost(generate_mobilenet_v1(1, 1, 1), a);
  const network_cost g8 = compute_network_cost(generate_mobilenet_v1(1, 1, 8), a);
  CHECK(g8.energy_j / g1.energy_j <= 1.15);
  double d1 = 0, d8 = 0, r1 = 0, r8 = 0;
  for (const auto& lc : g1.layers) { d1 += lc.accesses.dram; r1 += lc.accesses.rf; }
  for (const auto& lc : g8.layers) { d8 += lc.accesses.dram; r8 += lc.accesses.rf; }
  CHECK(std::fabs(d8 - d1) / d1 <= 0.05);
  CHECK(r8 / r1 == doctest::Approx(double(g8.macs) / double(g1.macs)));
}

TEST_CASE("energy is non-decreasing in G") {
  for (int sz : {16, 64}) {
    const array_config a = preset_array(sz);
    double prev = 0;
    for (int g : {1, 2, 4, 8, 16, 32}) {
      const double e =
          compute_network_cost(generate_mobilenet_v1(1, 1, g), a).energy_j;
      CHECK(e >= prev);
      prev = e;
    }
  }
}

TEST_CASE("network totals are exact sums over layers") {
  const array_config a = preset_array(32);
  const network_cost nc = compute_network_cost(generate_mobilenet_v1(1, 1, 2), a);
  double lat = 0, e = 0;
  for (const auto& lc : nc.layers) { lat += lc.latency_s; e += lc.energy_total_j; }
  CHECK(nc.latency_s == doctest::Approx(lat));
  CHECK(nc.energy_j == doctest::Approx(e));
}

TEST_CASE("doubling the clock halves latency and leaves energy alone") {
  array_config a = preset_array(32);
  const network_spec net = generate_mobilenet_v1(1, 1, 1);
  const network_cost base = compute_network_cost(net, a);
  a.clock_hz *= 2;
  const network_cost fast = compute_network_cost(net, a);
  CHECK(fast.latency_s == doctest::Approx(base.latency_s / 2));
  CHECK(fast.energy_j == doctest::Approx(base.energy_j));
}

TEST_CASE("single-layer network equals its layer cost; empty network rejected") {
  network_spec one;
  one.name = "one";
  one.layers.push_back({"pw", layer_kind::standard_conv, 0, 1, 1, 64, 64, 14, 0});
  const array_config a = preset_array(16);
  const network_cost nc = compute_network_cost(one, a);
  const layer_cost lc = compute_layer_cost(one.layers[0], a);
  CHECK(nc.latency_s == doctest::Approx(lc.latency_s));
  CHECK(nc.energy_j == doctest::Approx(lc.energy_total_j));

  network_spec empty;
  CHECK_THROWS_WITH_AS(compute_network_cost(empty, a), "network has no layers",
                       model_error);
}

TEST_SUITE_END();
