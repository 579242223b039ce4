#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace draco {

class model_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class layer_kind { standard_conv, grouped_conv, pooling, fully_connected };

const char* to_string(layer_kind k);
layer_kind layer_kind_from_string(const std::string& s);

struct layer_spec {
  std::string name;
  layer_kind kind = layer_kind::standard_conv;
  int channels_per_group = 0;  // grouped_conv only; 1 = depthwise
  int d_k = 1;
  int stride = 1;
  int in_channels = 1;
  int out_channels = 1;
  int in_spatial = 1;
  int padding = 0;

  int out_spatial() const {
    return (in_spatial + 2 * padding - d_k) / stride + 1;
  }
  bool is_conv() const {
    return kind == layer_kind::standard_conv || kind == layer_kind::grouped_conv;
  }
};

struct network_spec {
  std::string name;
  double alpha = 1.0;
  double rho = 1.0;
  int group_size = 1;
  int batch = 1;
  std::vector<layer_spec> layers;
};

struct layer_counts {
  long long macs = 0;
  long long params = 0;
  long long in_acts = 0;
  long long out_acts = 0;
  double data_reuse = 0.0;  // macs / (params + in_acts + out_acts)
  double w_reu = 0.0;       // macs / params
  double a_reu = 0.0;       // macs / (in_acts + out_acts)
};

struct energy_costs {
  double dram_j = 200e-12;
  double gbuf_j = 6e-12;
  double array_j = 2e-12;
  double rf_j = 1e-12;
  double alu_j = 4e-12;  // free parameter; calibrated (see README defaults table)
};

struct array_config {
  std::string label;
  int rows = 16;
  int cols = 16;
  long long gbuf_bytes = 128 * 1024;
  double rf_bytes_per_pe = 512.0;
  double clock_hz = 200e6;
  double dram_bytes_per_cycle = 512.0;  // calibrated default; see README
  int word_bytes = 2;
  double rf_factor = 3.0;        // RF events per MAC
  double array_factor = 1.0;     // inter-PE transfers per MAC
  double gbuf_roundtrips = 2.0;  // GBuf events per unique word
  energy_costs energy;

  long long rf_total_bytes() const {
    return static_cast<long long>(rf_bytes_per_pe * rows * cols);
  }
};

// Presets: 16/32/64/128 square arrays with GBuf 128/256/512/1024 KiB, RF 0.5 KiB/PE.
// mem_mult scales GBuf+RF (the explorer sets 2 for rho>=2 variants).
array_config preset_array(int size, int mem_mult = 1);

}  // namespace draco
