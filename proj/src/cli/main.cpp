#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "draco/draco.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitModel = 2;

struct scoped_str {
  char* p = nullptr;
  ~scoped_str() { draco_string_free(p); }
};

struct scoped_net {
  draco_network* p = nullptr;
  ~scoped_net() { draco_network_free(p); }
};

int exit_code(draco_status st) {
  if (st == DRACO_OK) return 0;
  std::cerr << "error: " << draco_last_error() << "\n";
  return st == DRACO_EINVAL ? kExitUsage : kExitModel;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f) {
    std::cerr << "error: cannot write " << path << "\n";
    return false;
  }
  return true;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot read " << path << "\n";
    return false;
  }
  std::ostringstream ss;
  ss << f.rdbuf();
  out = ss.str();
  return true;
}

struct array_flags {
  int preset = 16;
  int mem_mult = 1;
  double clock_hz = 0;
  double bw_bytes = 0;
  int word_bytes = 0;
  double alu_pj = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--array", preset, "array preset: 16, 32, 64 or 128")
        ->check(CLI::IsMember({16, 32, 64, 128}));
    cmd->add_option("--mem-mult", mem_mult, "on-chip memory multiplier (2 for rho=2 runs)");
    cmd->add_option("--clock-hz", clock_hz, "clock frequency override (Hz)");
    cmd->add_option("--bandwidth", bw_bytes, "DRAM bandwidth override (bytes/cycle)");
    cmd->add_option("--word-bytes", word_bytes, "datum size override (bytes)");
    cmd->add_option("--alu-pj", alu_pj, "ALU energy per MAC override (pJ)");
  }
  draco_array_opts opts() const {
    return {preset, mem_mult, clock_hz, bw_bytes, word_bytes, alu_pj};
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"draco: analytical cost model and design-space explorer for "
               "grouped-convolution networks on systolic arrays"};
  app.require_subcommand(1);

  // gen
  double alpha = 1.0, rho = 1.0;
  int g = 1;
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "generate a MobileNetV1-family descriptor");
  gen->add_option("--alpha", alpha, "width multiplier")->required();
  gen->add_option("--rho", rho, "resolution multiplier")->required();
  gen->add_option("--g", g, "group size")->required();
  gen->add_option("--out", out_path, "network JSON output path");

  // analyze
  std::string net_path, mapping_out, cost_out, json_out;
  array_flags an_arr;
  auto* an = app.add_subcommand("analyze", "map + cost one network on one array");
  an->add_option("network", net_path, "network descriptor JSON")->required();
  an_arr.attach(an);
  an->add_option("--mapping-out", mapping_out, "per-layer mapping CSV path");
  an->add_option("--cost-out", cost_out, "per-layer cost CSV path");
  an->add_option("--json-out", json_out, "aggregate JSON path");

  // sweep
  std::string arrays = "16,32,64,128", gs = "1,2,4,8,16,32";
  std::string alphas = "1", rhos = "1", sweep_out, format = "csv";
  auto* sw = app.add_subcommand("sweep", "evaluate the (array, alpha, rho, G) grid");
  sw->add_option("--arrays", arrays, "comma-separated preset sizes");
  sw->add_option("--g", gs, "comma-separated group sizes");
  sw->add_option("--alpha", alphas, "comma-separated width multipliers");
  sw->add_option("--rho", rhos, "comma-separated resolution multipliers");
  sw->add_option("--out", sweep_out, "output path");
  sw->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  // report
  std::string sweep_path, report_out;
  auto* rp = app.add_subcommand("report", "takeaway checks + alpha comparison from a sweep JSON");
  rp->add_option("sweep", sweep_path, "sweep JSON file")->required();
  rp->add_option("--out", report_out, "report JSON path");

  auto* df = app.add_subcommand("defaults", "print the resolved defaults table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  if (gen->parsed()) {
    scoped_net net;
    draco_status st = draco_mobilenet_v1(alpha, rho, g, &net.p);
    if (st != DRACO_OK) return exit_code(st);
    long long macs = 0, params = 0;
    st = draco_network_counts(net.p, &macs, &params);
    if (st != DRACO_OK) return exit_code(st);
    std::printf("MACs: %.0fM, Params: %.2fM\n", macs / 1e6, params / 1e6);
    if (!out_path.empty()) {
      scoped_str text;
      st = draco_network_to_json(net.p, &text.p);
      if (st != DRACO_OK) return exit_code(st);
      if (!write_file(out_path, text.p)) return kExitModel;
    }
    return 0;
  }

  if (an->parsed()) {
    std::string text;
    if (!read_file(net_path, text)) return kExitModel;
    scoped_net net;
    draco_status st = draco_network_from_json(text.c_str(), &net.p);
    if (st != DRACO_OK) return exit_code(st);
    const draco_array_opts opts = an_arr.opts();
    scoped_str mapping, cost, agg;
    st = draco_analyze(net.p, &opts, &mapping.p, &cost.p, &agg.p);
    if (st != DRACO_OK) return exit_code(st);
    if (!mapping_out.empty() && !write_file(mapping_out, mapping.p)) return kExitModel;
    if (!cost_out.empty() && !write_file(cost_out, cost.p)) return kExitModel;
    if (!json_out.empty() && !write_file(json_out, agg.p)) return kExitModel;
    std::cout << agg.p;
    return 0;
  }

  if (sw->parsed()) {
    scoped_str csv, js;
    draco_status st = draco_sweep(arrays.c_str(), gs.c_str(), alphas.c_str(),
                                  rhos.c_str(), &csv.p, &js.p);
    if (st != DRACO_OK) return exit_code(st);
    const std::string echo = "# config arrays=" + arrays + " g=" + gs +
                             " alpha=" + alphas + " rho=" + rhos + "\n";
    const std::string body =
        format == "json" ? std::string(js.p) : echo + csv.p;
    if (!sweep_out.empty()) {
      if (!write_file(sweep_out, body)) return kExitModel;
      std::cout << "wrote " << sweep_out << "\n";
    } else {
      std::cout << body;
    }
    return 0;
  }

  if (rp->parsed()) {
    std::string text;
    if (!read_file(sweep_path, text)) return kExitModel;
    scoped_str rep;
    const draco_status st = draco_report(text.c_str(), &rep.p);
    if (st != DRACO_OK) return exit_code(st);
    if (!report_out.empty() && !write_file(report_out, rep.p)) return kExitModel;
    std::cout << rep.p;
    return 0;
  }

  if (df->parsed()) {
    scoped_str js;
    const draco_status st = draco_defaults_json(&js.p);
    if (st != DRACO_OK) return exit_code(st);
    std::cout << js.p;
    return 0;
  }

  return kExitUsage;
}
