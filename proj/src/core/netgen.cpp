#include "netgen.hpp"

#include <cmath>

namespace draco {

const char* to_string(layer_kind k) {
  switch (k) {
    case layer_kind::standard_conv: return "standard_conv";
    case layer_kind::grouped_conv: return "grouped_conv";
    case layer_kind::pooling: return "pooling";
    case layer_kind::fully_connected: return "fully_connected";
  }
  return "?";
}

layer_kind layer_kind_from_string(const std::string& s) {
  if (s == "standard_conv") return layer_kind::standard_conv;
  if (s == "grouped_conv") return layer_kind::grouped_conv;
  if (s == "pooling") return layer_kind::pooling;
  if (s == "fully_connected") return layer_kind::fully_connected;
  throw model_error("unknown layer kind: " + s);
}

array_config preset_array(int size, int mem_mult) {
  long long gbuf_kib = 0;
  switch (size) {
    case 16: gbuf_kib = 128; break;
    case 32: gbuf_kib = 256; break;
    case 64: gbuf_kib = 512; break;
    case 128: gbuf_kib = 1024; break;
    default: throw model_error("unknown array preset: " + std::to_string(size));
  }
  if (mem_mult < 1) mem_mult = 1;
  array_config a;
  a.label = std::to_string(size) + "x" + std::to_string(size);
  a.rows = a.cols = size;
  a.gbuf_bytes = gbuf_kib * 1024 * mem_mult;
  a.rf_bytes_per_pe = 512.0 * mem_mult;
  return a;
}

layer_counts count_layer(const layer_spec& l) {
  layer_counts c;
  const long long df = l.out_spatial();
  const long long m = l.out_channels, n = l.in_channels;
  const long long dk = l.d_k;
  switch (l.kind) {
    case layer_kind::standard_conv:
      c.macs = m * n * dk * dk * df * df;
      c.params = m * n * dk * dk;
      break;
    case layer_kind::grouped_conv: {
      const long long g = l.channels_per_group;
      if (g < 1 || n % g != 0)
        throw model_error("channels_per_group " + std::to_string(g) +
                          " does not divide in_channels " + std::to_string(n) +
                          " in layer " + l.name);
      c.macs = m * g * dk * dk * df * df;
      c.params = m * g * dk * dk;
      break;
    }
    case layer_kind::pooling:
      break;
    case layer_kind::fully_connected:
      c.macs = m * n;
      c.params = m * n;
      break;
  }
  c.in_acts = n * static_cast<long long>(l.in_spatial) * l.in_spatial;
  c.out_acts = m * df * df;
  if (c.params > 0) {
    c.data_reuse = double(c.macs) / double(c.params + c.in_acts + c.out_acts);
    c.w_reu = double(c.macs) / double(c.params);
    c.a_reu = double(c.macs) / double(c.in_acts + c.out_acts);
  }
  return c;
}

namespace {

int scaled(double alpha, int base) {
  return std::max(1, static_cast<int>(std::lround(alpha * base)));
}

struct block_def { int cin, cout, stride; };

constexpr block_def kBlocks[] = {
    {32, 64, 1},    {64, 128, 2},   {128, 128, 1}, {128, 256, 2},
    {256, 256, 1},  {256, 512, 2},  {512, 512, 1}, {512, 512, 1},
    {512, 512, 1},  {512, 512, 1},  {512, 512, 1}, {512, 1024, 2},
    {1024, 1024, 1}};

}  // namespace

network_spec generate_mobilenet_v1(double alpha, double rho, int G) {
  if (alpha <= 0 || rho <= 0 || G < 1)
    throw model_error("alpha/rho must be positive and G >= 1");
  network_spec net;
  net.name = "mobilenet_v1";
  net.alpha = alpha;
  net.rho = rho;
  net.group_size = G;

  const int in_sp = std::max(1, static_cast<int>(std::lround(224.0 * rho)));
  layer_spec stem{"conv1", layer_kind::standard_conv, 0, 3, 2,
                  scaled(alpha, 3), scaled(alpha, 32), in_sp, 1};
  net.layers.push_back(stem);
  int sp = stem.out_spatial();

  int idx = 0;
  for (const auto& b : kBlocks) {
    ++idx;
    const int ch = scaled(alpha, b.cin);
    const int g = std::min(G, ch);
    if (ch % g != 0)
      throw model_error("group size " + std::to_string(g) +
                        " does not divide " + std::to_string(ch) +
                        " channels in dw" + std::to_string(idx));
    layer_spec dw{"dw" + std::to_string(idx), layer_kind::grouped_conv,
                  g, 3, b.stride, ch, ch, sp, 1};
    net.layers.push_back(dw);
    sp = dw.out_spatial();
    layer_spec pw{"pw" + std::to_string(idx), layer_kind::standard_conv,
                  0, 1, 1, ch, scaled(alpha, b.cout), sp, 0};
    net.layers.push_back(pw);
    sp = pw.out_spatial();
  }

  const int last = scaled(alpha, 1024);
  net.layers.push_back({"pool", layer_kind::pooling, 0, sp, 1, last, last, sp, 0});
  net.layers.push_back({"fc", layer_kind::fully_connected, 0, 1, 1, last, 1000, 1, 0});
  return net;
}

network_spec apply_group_size(const network_spec& net, int G) {
  if (G < 1) throw model_error("G must be >= 1");
  network_spec out = net;
  out.group_size = G;
  for (auto& l : out.layers) {
    if (l.kind != layer_kind::grouped_conv) continue;
    const int g = std::min(G, l.in_channels);
    if (l.in_channels % g != 0)
      throw model_error("group size " + std::to_string(g) +
                        " does not divide " + std::to_string(l.in_channels) +
                        " channels in layer " + l.name);
    l.channels_per_group = g;
  }
  return out;
}

layer_counts network_counts(const network_spec& net) {
  layer_counts t;
  for (const auto& l : net.layers) {
    const layer_counts c = count_layer(l);
    t.macs += c.macs;
    t.params += c.params;
    t.in_acts += c.in_acts;
    t.out_acts += c.out_acts;
  }
  if (t.params > 0) {
    t.data_reuse = double(t.macs) / double(t.params + t.in_acts + t.out_acts);
    t.w_reu = double(t.macs) / double(t.params);
    t.a_reu = double(t.macs) / double(t.in_acts + t.out_acts);
  }
  return t;
}

}  // namespace draco
