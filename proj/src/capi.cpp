#include "draco/draco.h"

#include <cstring>
#include <sstream>
#include <string>

#include "core/costmodel.hpp"
#include "core/explorer.hpp"
#include "core/io.hpp"
#include "core/netgen.hpp"

using nlohmann::json;

struct draco_network {
  draco::network_spec net;
};

namespace {

thread_local std::string g_last_error;

draco_status fail(draco_status st, const std::string& msg) {
  g_last_error = msg;
  return st;
}

char* dup_string(const std::string& s) {
  char* p = new char[s.size() + 1];
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

draco::array_config resolve_array(const draco_array_opts* opts) {
  if (!opts) throw draco::model_error("array options are required");
  const int mem = opts->mem_mult > 1 ? opts->mem_mult : 1;
  draco::array_config a = draco::preset_array(opts->preset, mem);
  if (opts->clock_hz > 0) a.clock_hz = opts->clock_hz;
  if (opts->dram_bytes_per_cycle > 0)
    a.dram_bytes_per_cycle = opts->dram_bytes_per_cycle;
  if (opts->word_bytes > 0) a.word_bytes = opts->word_bytes;
  if (opts->alu_pj > 0) a.energy.alu_j = opts->alu_pj * 1e-12;
  return a;
}

template <typename T>
std::vector<T> parse_list(const char* text, const char* what) {
  if (!text || !*text)
    throw draco::model_error(std::string(what) + " list is empty");
  std::vector<T> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      if constexpr (std::is_same_v<T, int>)
        out.push_back(std::stoi(tok));
      else
        out.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw draco::model_error(std::string("bad ") + what + " value: " + tok);
    }
  }
  if (out.empty()) throw draco::model_error(std::string(what) + " list is empty");
  return out;
}

template <typename F>
draco_status guarded(F&& f) {
  try {
    f();
    return DRACO_OK;
  } catch (const draco::model_error& e) {
    return fail(DRACO_EMODEL, e.what());
  } catch (const std::exception& e) {
    return fail(DRACO_EIO, e.what());
  }
}

}  // namespace

extern "C" {

const char* draco_last_error(void) { return g_last_error.c_str(); }

draco_status draco_mobilenet_v1(double alpha, double rho, int g,
                                draco_network** out) {
  if (!out) return fail(DRACO_EINVAL, "out is null");
  return guarded([&] {
    *out = new draco_network{draco::generate_mobilenet_v1(alpha, rho, g)};
  });
}

draco_status draco_network_from_json(const char* json_text, draco_network** out) {
  if (!json_text || !out) return fail(DRACO_EINVAL, "null argument");
  return guarded([&] {
    *out = new draco_network{draco::io::network_from_string(json_text)};
  });
}

draco_status draco_network_to_json(const draco_network* net, char** out_json) {
  if (!net || !out_json) return fail(DRACO_EINVAL, "null argument");
  return guarded([&] { *out_json = dup_string(draco::io::network_to_string(net->net)); });
}

draco_status draco_apply_group_size(const draco_network* net, int g,
                                    draco_network** out) {
  if (!net || !out) return fail(DRACO_EINVAL, "null argument");
  return guarded([&] {
    *out = new draco_network{draco::apply_group_size(net->net, g)};
  });
}

draco_status draco_network_counts(const draco_network* net, long long* out_macs,
                                  long long* out_params) {
  if (!net) return fail(DRACO_EINVAL, "net is null");
  return guarded([&] {
    const draco::layer_counts c = draco::network_counts(net->net);
    if (out_macs) *out_macs = c.macs;
    if (out_params) *out_params = c.params;
  });
}

draco_status draco_counts_csv(const draco_network* net, char** out_csv) {
  if (!net || !out_csv) return fail(DRACO_EINVAL, "null argument");
  return guarded([&] { *out_csv = dup_string(draco::io::counts_csv(net->net)); });
}

draco_status draco_network_cost(const draco_network* net,
                                const draco_array_opts* opts,
                                draco_network_summary* out) {
  if (!net || !out) return fail(DRACO_EINVAL, "null argument");
  return guarded([&] {
    const draco::array_config a = resolve_array(opts);
    const draco::network_cost nc = draco::compute_network_cost(net->net, a);
    out->macs = nc.macs;
    out->params = nc.params;
    out->avg_utilization = nc.avg_utilization;
    out->util_3x3 = nc.util_3x3;
    out->util_1x1 = nc.util_1x1;
    out->latency_ms = nc.latency_s * 1e3;
    out->energy_mj = nc.energy_j * 1e3;
  });
}

draco_status draco_analyze(const draco_network* net, const draco_array_opts* opts,
                           char** out_mapping_csv, char** out_cost_csv,
                           char** out_aggregate_json) {
  if (!net) return fail(DRACO_EINVAL, "net is null");
  return guarded([&] {
    const draco::array_config a = resolve_array(opts);
    const draco::network_cost nc = draco::compute_network_cost(net->net, a);
    if (out_mapping_csv)
      *out_mapping_csv = dup_string(draco::io::mapping_csv(net->net, a));
    if (out_cost_csv) *out_cost_csv = dup_string(draco::io::cost_csv(nc));
    if (out_aggregate_json)
      *out_aggregate_json =
          dup_string(draco::io::cost_aggregate_json(nc, a).dump(2) + "\n");
  });
}

draco_status draco_sweep(const char* arrays, const char* g_values,
                         const char* alphas, const char* rhos, char** out_csv,
                         char** out_json) {
  return guarded([&] {
    draco::sweep_grid grid;
    grid.arrays = parse_list<int>(arrays, "array");
    grid.g_values = parse_list<int>(g_values, "G");
    grid.alphas = parse_list<double>(alphas, "alpha");
    grid.rhos = parse_list<double>(rhos, "rho");
    const draco::sweep_result res = draco::run_sweep(grid);
    if (out_csv) *out_csv = dup_string(draco::io::sweep_csv(res));
    if (out_json)
      *out_json = dup_string(draco::io::sweep_json(res).dump(2) + "\n");
  });
}

draco_status draco_report(const char* sweep_json, char** out_report_json) {
  if (!sweep_json || !out_report_json) return fail(DRACO_EINVAL, "null argument");
  return guarded([&] {
    json j = json::parse(sweep_json, nullptr, false);
    if (j.is_discarded()) throw draco::model_error("sweep file: invalid JSON");
    const draco::sweep_result sw = draco::io::sweep_from_json(j);
    json rep = draco::io::takeaway_json(draco::build_takeaway_report(sw));
    try {
      rep["comparison"] =
          draco::io::comparison_json(draco::alternative_comparison(sw.rows))["comparison"];
    } catch (const draco::model_error& e) {
      rep["comparison"] = json{{"error", e.what()}};
    }
    *out_report_json = dup_string(rep.dump(2) + "\n");
  });
}

draco_status draco_defaults_json(char** out_json) {
  if (!out_json) return fail(DRACO_EINVAL, "out is null");
  return guarded([&] {
    json j = json::object();
    for (int sz : {16, 32, 64, 128})
      j["presets"][std::to_string(sz)] =
          draco::io::config_echo(draco::preset_array(sz));
    *out_json = dup_string(j.dump(2) + "\n");
  });
}

void draco_network_free(draco_network* net) { delete net; }

void draco_string_free(char* s) { delete[] s; }

}  // extern "C"
