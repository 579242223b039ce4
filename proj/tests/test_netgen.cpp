#include <doctest.h>

#include <cmath>

#include "core/netgen.hpp"

using namespace draco;

namespace {

layer_spec dw(int ch, int g, int sp, int stride = 1) {
  return {"dw", layer_kind::grouped_conv, g, 3, stride, ch, ch, sp, 1};
}

}  // namespace

TEST_SUITE_BEGIN("netgen");

TEST_CASE("grouped conv counts, depthwise example") {
  // 32-channel depthwise 3x3 on a 112x112 fmap: 32*9*112^2 MACs.
  const layer_counts c = count_layer(dw(32, 1, 112));
  CHECK(c.macs == 3612672);
  CHECK(c.params == 32 * 9);
  CHECK(c.in_acts == 32LL * 112 * 112);
  CHECK(c.out_acts == 32LL * 112 * 112);
  CHECK(c.a_reu == doctest::Approx(4.5));  // m = n, d_k = 3
}

TEST_CASE("grouped conv with G = n reduces to standard conv") {
  layer_spec s{"s", layer_kind::standard_conv, 0, 3, 1, 64, 64, 56, 1};
  layer_spec g = s;
  g.kind = layer_kind::grouped_conv;
  g.channels_per_group = 64;
  const layer_counts cs = count_layer(s), cg = count_layer(g);
  CHECK(cs.macs == cg.macs);
  CHECK(cs.params == cg.params);
  CHECK(cs.in_acts == cg.in_acts);
  CHECK(cs.out_acts == cg.out_acts);
}

TEST_CASE("pooling carries activations but no work") {
  layer_spec p{"pool", layer_kind::pooling, 0, 7, 1, 1024, 1024, 7, 0};
  const layer_counts c = count_layer(p);
  CHECK(c.macs == 0);
  CHECK(c.params == 0);
  CHECK(c.in_acts == 1024LL * 49);
  CHECK(c.out_acts == 1024);
}

TEST_CASE("fully connected is a 1x1 conv on a 1x1 fmap") {
  layer_spec fc{"fc", layer_kind::fully_connected, 0, 1, 1, 1024, 1000, 1, 0};
  const layer_counts c = count_layer(fc);
  CHECK(c.macs == 1024000);
  CHECK(c.params == 1024000);
}

TEST_CASE("divisibility is enforced for grouped conv") {
  CHECK_THROWS_AS(count_layer(dw(32, 3, 56)), model_error);
}

TEST_CASE("out_spatial follows the conv arithmetic") {
  layer_spec l{"l", layer_kind::standard_conv, 0, 3, 2, 3, 32, 224, 1};
  CHECK(l.out_spatial() == 112);
  l.stride = 1;
  CHECK(l.out_spatial() == 224);
}

TEST_CASE("baseline network hits the reference totals") {
  const layer_counts c = network_counts(generate_mobilenet_v1(1, 1, 1));
  CHECK(c.macs / 1e6 == doctest::Approx(569).epsilon(0.01));
  CHECK(std::fabs(c.params / 1e6 - 4.21) <= 0.0105);
}

TEST_CASE("reference MAC totals across the alpha=1 G column") {
  // Calibration targets: whole-network MACs (millions) and params for
  // alpha=1 rho=1 across group sizes.
  const std::pair<int, std::pair<double, double>> cells[] = {
      {1, {569, 4.21}}, {2, {586, 4.25}},  {4, {621, 4.34}},
      {8, {690, 4.52}}, {16, {830, 4.88}}, {32, {1108, 5.59}}};
  for (const auto& [g, mp] : cells) {
    const layer_counts c = network_counts(generate_mobilenet_v1(1, 1, g));
    CHECK(c.macs / 1e6 == doctest::Approx(mp.first).epsilon(0.01));
    CHECK(std::fabs(c.params / 1e6 - mp.second) <= 0.0105);
  }
}

TEST_CASE("scaled-variant MAC totals") {
  CHECK(network_counts(generate_mobilenet_v1(0.5, 1, 16)).macs / 1e6 ==
        doctest::Approx(278).epsilon(0.01));
  CHECK(network_counts(generate_mobilenet_v1(2, 1, 64)).macs / 1e6 ==
        doctest::Approx(4428).epsilon(0.01));
  CHECK(network_counts(generate_mobilenet_v1(1, 2, 1)).macs / 1e6 ==
        doctest::Approx(2272).epsilon(0.01));
  CHECK(network_counts(generate_mobilenet_v1(0.5, 2, 4)).macs / 1e6 ==
        doctest::Approx(690).epsilon(0.01));
}

TEST_CASE("schedule shape") {
  const network_spec net = generate_mobilenet_v1(1, 1, 1);
  REQUIRE(net.layers.size() == 29);  // stem + 13*(dw,pw) + pool + fc
  CHECK(net.layers.front().name == "conv1");
  CHECK(net.layers.front().kind == layer_kind::standard_conv);
  CHECK(net.layers.back().kind == layer_kind::fully_connected);
  // Adjacent layers are shape-compatible.
  for (size_t i = 0; i + 1 < net.layers.size() - 2; ++i) {
    CHECK(net.layers[i].out_channels == net.layers[i + 1].in_channels);
    CHECK(net.layers[i].out_spatial() == net.layers[i + 1].in_spatial);
  }
}

TEST_CASE("apply_group_size: identity, delta and clamping") {
  const network_spec base = generate_mobilenet_v1(1, 1, 1);
  const network_spec same = apply_group_size(base, 1);
  CHECK(network_counts(same).macs == network_counts(base).macs);

  // G=2 adds exactly the baseline's grouped-layer MACs once more.
  long long grouped = 0;
  for (const auto& l : base.layers)
    if (l.kind == layer_kind::grouped_conv) grouped += count_layer(l).macs;
  const network_spec g2 = apply_group_size(base, 2);
  CHECK(network_counts(g2).macs == network_counts(base).macs + grouped);

  // Small layers clamp to their channel count.
  const network_spec half = apply_group_size(generate_mobilenet_v1(0.5, 1, 1), 64);
  CHECK(half.layers[1].channels_per_group == 16);
}

TEST_CASE("G=3 violates divisibility on the 32-channel layer") {
  CHECK_THROWS_AS(generate_mobilenet_v1(1, 1, 3), model_error);
}

TEST_CASE("MAC linearity in G") {
  const long long m1 = network_counts(generate_mobilenet_v1(1, 1, 1)).macs;
  long long grouped = 0;
  for (const auto& l : generate_mobilenet_v1(1, 1, 1).layers)
    if (l.kind == layer_kind::grouped_conv) grouped += count_layer(l).macs;
  for (int g : {2, 4, 8, 16})
    CHECK(network_counts(generate_mobilenet_v1(1, 1, g)).macs ==
          m1 + (g - 1) * grouped);
}

TEST_CASE("rho-invariance of params and spatial MAC scaling") {
  for (double al : {0.5, 1.0, 2.0}) {
    const auto p1 = network_counts(generate_mobilenet_v1(al, 1, 2)).params;
    const auto p2 = network_counts(generate_mobilenet_v1(al, 2, 2)).params;
    const auto p05 = network_counts(generate_mobilenet_v1(al, 0.5, 2)).params;
    CHECK(p1 == p2);
    CHECK(p1 == p05);
  }
  const double r = double(network_counts(generate_mobilenet_v1(1, 2, 1)).macs) /
                   double(network_counts(generate_mobilenet_v1(1, 1, 1)).macs);
  CHECK(r >= 3.9);
  CHECK(r <= 4.1);
}

TEST_CASE("A_reu rises with G while W_reu stays fixed") {
  double prev_a = 0;
  const double w1 = count_layer(dw(64, 1, 56)).w_reu;
  for (int g : {1, 2, 4, 8, 16}) {
    const layer_counts c = count_layer(dw(64, g, 56));
    CHECK(c.a_reu > prev_a);
    prev_a = c.a_reu;
    CHECK(c.w_reu == doctest::Approx(w1));
  }
}

TEST_CASE("empty network sums to zero") {
  network_spec empty;
  const layer_counts c = network_counts(empty);
  CHECK(c.macs == 0);
  CHECK(c.params == 0);
  CHECK(c.in_acts == 0);
}

TEST_SUITE_END();
