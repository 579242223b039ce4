#include "io.hpp"

#include <cstdio>

#include "netgen.hpp"

namespace draco::io {

using nlohmann::json;

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

}  // namespace

json network_to_json(const network_spec& net) {
  json layers = json::array();
  for (const auto& l : net.layers) {
    json jl = {{"name", l.name},
               {"kind", to_string(l.kind)},
               {"d_k", l.d_k},
               {"stride", l.stride},
               {"in_channels", l.in_channels},
               {"out_channels", l.out_channels},
               {"in_spatial", l.in_spatial},
               {"padding", l.padding}};
    if (l.kind == layer_kind::grouped_conv)
      jl["channels_per_group"] = l.channels_per_group;
    layers.push_back(std::move(jl));
  }
  return {{"name", net.name}, {"alpha", net.alpha},     {"rho", net.rho},
          {"group_size", net.group_size}, {"batch", net.batch},
          {"layers", std::move(layers)}};
}

network_spec network_from_json(const json& j) {
  network_spec net;
  try {
    net.name = j.at("name").get<std::string>();
    net.alpha = j.at("alpha").get<double>();
    net.rho = j.at("rho").get<double>();
    net.group_size = j.at("group_size").get<int>();
    net.batch = j.value("batch", 1);
    for (const auto& jl : j.at("layers")) {
      layer_spec l;
      l.name = jl.at("name").get<std::string>();
      l.kind = layer_kind_from_string(jl.at("kind").get<std::string>());
      l.channels_per_group = jl.value("channels_per_group", 0);
      l.d_k = jl.at("d_k").get<int>();
      l.stride = jl.at("stride").get<int>();
      l.in_channels = jl.at("in_channels").get<int>();
      l.out_channels = jl.at("out_channels").get<int>();
      l.in_spatial = jl.at("in_spatial").get<int>();
      l.padding = jl.at("padding").get<int>();
      if (l.kind == layer_kind::grouped_conv && l.channels_per_group < 1)
        throw model_error("layer " + l.name +
                          ": grouped_conv requires channels_per_group");
      net.layers.push_back(std::move(l));
    }
  } catch (const json::exception& e) {
    throw model_error(std::string("network descriptor: ") + e.what());
  }
  return net;
}

std::string network_to_string(const network_spec& net) {
  return network_to_json(net).dump(2) + "\n";
}

network_spec network_from_string(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw model_error("network descriptor: invalid JSON");
  return network_from_json(j);
}

json config_echo(const array_config& a) {
  return {{"array", a.label},
          {"rows", a.rows},
          {"cols", a.cols},
          {"gbuf_bytes", a.gbuf_bytes},
          {"rf_bytes_per_pe", a.rf_bytes_per_pe},
          {"clock_hz", a.clock_hz},
          {"dram_bytes_per_cycle", a.dram_bytes_per_cycle},
          {"word_bytes", a.word_bytes},
          {"rf_factor", a.rf_factor},
          {"array_factor", a.array_factor},
          {"gbuf_roundtrips", a.gbuf_roundtrips},
          {"energy_pj",
           {{"dram", a.energy.dram_j * 1e12},
            {"gbuf", a.energy.gbuf_j * 1e12},
            {"array", a.energy.array_j * 1e12},
            {"rf", a.energy.rf_j * 1e12},
            {"alu", a.energy.alu_j * 1e12}}}};
}

std::string counts_csv(const network_spec& net) {
  std::string out =
      "name,kind,G,macs,params,in_acts,out_acts,data_reuse,w_reu,a_reu\n";
  for (const auto& l : net.layers) {
    const layer_counts c = count_layer(l);
    out += l.name;
    out += ',';
    out += to_string(l.kind);
    out += ',';
    out += std::to_string(l.kind == layer_kind::grouped_conv ? l.channels_per_group : 0);
    out += ',' + std::to_string(c.macs) + ',' + std::to_string(c.params) + ',' +
           std::to_string(c.in_acts) + ',' + std::to_string(c.out_acts) + ',' +
           num(c.data_reuse) + ',' + num(c.w_reu) + ',' + num(c.a_reu) + '\n';
  }
  return out;
}

json counts_json(const network_spec& net) {
  json layers = json::array();
  for (const auto& l : net.layers) {
    const layer_counts c = count_layer(l);
    layers.push_back({{"name", l.name},
                      {"kind", to_string(l.kind)},
                      {"G", l.kind == layer_kind::grouped_conv ? l.channels_per_group : 0},
                      {"macs", c.macs},
                      {"params", c.params},
                      {"in_acts", c.in_acts},
                      {"out_acts", c.out_acts},
                      {"data_reuse", c.data_reuse},
                      {"w_reu", c.w_reu},
                      {"a_reu", c.a_reu}});
  }
  const layer_counts t = network_counts(net);
  return {{"network", {{"name", net.name}, {"alpha", net.alpha},
                       {"rho", net.rho}, {"group_size", net.group_size}}},
          {"totals", {{"macs", t.macs}, {"params", t.params},
                      {"in_acts", t.in_acts}, {"out_acts", t.out_acts},
                      {"data_reuse", t.data_reuse}}},
          {"layers", std::move(layers)}};
}

std::string mapping_csv(const network_spec& net, const array_config& a) {
  std::string out = "layer,pe_set_rows,pe_set_cols,r_g,r_f,r_s,passes,utilization\n";
  for (const auto& l : net.layers) {
    const mapping_result m = map_layer(l, a);
    out += l.name + ',' + std::to_string(m.pe_set_rows) + ',' +
           std::to_string(m.pe_set_cols) + ',' + std::to_string(m.r_g) + ',' +
           std::to_string(m.r_f) + ',' + std::to_string(m.r_s) + ',' +
           std::to_string(m.passes) + ',' + num(m.utilization) + '\n';
  }
  return out;
}

std::string cost_csv(const network_cost& nc) {
  std::string out =
      "layer,utilization,compute_cycles,memory_cycles,latency_ms,dram,gbuf,"
      "array,rf,alu,energy_uJ\n";
  for (const auto& lc : nc.layers) {
    out += lc.layer + ',' + num(lc.utilization) + ',' + num(lc.compute_cycles) +
           ',' + num(lc.memory_cycles) + ',' + num(lc.latency_s * 1e3) + ',' +
           num(lc.accesses.dram) + ',' + num(lc.accesses.gbuf) + ',' +
           num(lc.accesses.array) + ',' + num(lc.accesses.rf) + ',' +
           num(lc.accesses.alu_macs) + ',' + num(lc.energy_total_j * 1e6) + '\n';
  }
  return out;
}

json cost_aggregate_json(const network_cost& nc, const array_config& a) {
  return {{"config", config_echo(a)},
          {"macs", nc.macs},
          {"params", nc.params},
          {"avg_utilization", nc.avg_utilization},
          {"util_3x3", nc.util_3x3},
          {"util_1x1", nc.util_1x1},
          {"latency_ms", nc.latency_s * 1e3},
          {"energy_mj", nc.energy_j * 1e3},
          {"energy_breakdown_mj",
           {{"dram", nc.energy.dram_j * 1e3},
            {"gbuf", nc.energy.gbuf_j * 1e3},
            {"array", nc.energy.array_j * 1e3},
            {"rf", nc.energy.rf_j * 1e3},
            {"alu", nc.energy.alu_j * 1e3}}}};
}

std::string sweep_csv(const sweep_result& sweep) {
  std::string out =
      "array_label,alpha,rho,G,macs,params,avg_utilization,util_3x3,util_1x1,"
      "latency_ms,energy_mj,e_dram_mj,e_gbuf_mj,e_array_mj,e_rf_mj,e_alu_mj\n";
  for (const auto& r : sweep.rows) {
    out += r.array_label + ',' + num(r.alpha) + ',' + num(r.rho) + ',' +
           std::to_string(r.g) + ',' + std::to_string(r.macs) + ',' +
           std::to_string(r.params) + ',' + num(r.avg_utilization) + ',' +
           num(r.util_3x3) + ',' + num(r.util_1x1) + ',' + num(r.latency_ms) +
           ',' + num(r.energy_mj) + ',' + num(r.energy.dram_j * 1e3) + ',' +
           num(r.energy.gbuf_j * 1e3) + ',' + num(r.energy.array_j * 1e3) + ',' +
           num(r.energy.rf_j * 1e3) + ',' + num(r.energy.alu_j * 1e3) + '\n';
  }
  for (const auto& s : sweep.skipped)
    out += "# skipped " + s.array_label + " alpha=" + num(s.alpha) +
           " rho=" + num(s.rho) + " G=" + std::to_string(s.g) + ": " + s.reason +
           '\n';
  return out;
}

json sweep_json(const sweep_result& sweep) {
  json rows = json::array();
  for (const auto& r : sweep.rows)
    rows.push_back({{"array_label", r.array_label},
                    {"array_size", r.array_size},
                    {"alpha", r.alpha},
                    {"rho", r.rho},
                    {"G", r.g},
                    {"macs", r.macs},
                    {"params", r.params},
                    {"avg_utilization", r.avg_utilization},
                    {"util_3x3", r.util_3x3},
                    {"util_1x1", r.util_1x1},
                    {"latency_ms", r.latency_ms},
                    {"energy_mj", r.energy_mj},
                    {"energy_breakdown_mj",
                     {{"dram", r.energy.dram_j * 1e3},
                      {"gbuf", r.energy.gbuf_j * 1e3},
                      {"array", r.energy.array_j * 1e3},
                      {"rf", r.energy.rf_j * 1e3},
                      {"alu", r.energy.alu_j * 1e3}}}});
  json skipped = json::array();
  for (const auto& s : sweep.skipped)
    skipped.push_back({{"array_label", s.array_label},
                       {"alpha", s.alpha},
                       {"rho", s.rho},
                       {"G", s.g},
                       {"reason", s.reason}});
  return {{"rows", std::move(rows)}, {"skipped", std::move(skipped)}};
}

sweep_result sweep_from_json(const json& j) {
  sweep_result out;
  try {
    for (const auto& jr : j.at("rows")) {
      sweep_row r;
      r.array_label = jr.at("array_label").get<std::string>();
      r.array_size = jr.value("array_size", 0);
      if (r.array_size == 0) r.array_size = std::stoi(r.array_label);
      r.alpha = jr.at("alpha").get<double>();
      r.rho = jr.at("rho").get<double>();
      r.g = jr.at("G").get<int>();
      r.macs = jr.value("macs", 0LL);
      r.params = jr.value("params", 0LL);
      r.avg_utilization = jr.at("avg_utilization").get<double>();
      r.util_3x3 = jr.value("util_3x3", 0.0);
      r.util_1x1 = jr.value("util_1x1", 0.0);
      r.latency_ms = jr.at("latency_ms").get<double>();
      r.energy_mj = jr.at("energy_mj").get<double>();
      if (jr.contains("energy_breakdown_mj")) {
        const auto& e = jr["energy_breakdown_mj"];
        r.energy.dram_j = e.value("dram", 0.0) * 1e-3;
        r.energy.gbuf_j = e.value("gbuf", 0.0) * 1e-3;
        r.energy.array_j = e.value("array", 0.0) * 1e-3;
        r.energy.rf_j = e.value("rf", 0.0) * 1e-3;
        r.energy.alu_j = e.value("alu", 0.0) * 1e-3;
      }
      out.rows.push_back(std::move(r));
    }
    if (j.contains("skipped"))
      for (const auto& js : j["skipped"])
        out.skipped.push_back({js.at("array_label").get<std::string>(),
                               js.at("alpha").get<double>(),
                               js.at("rho").get<double>(), js.at("G").get<int>(),
                               js.value("reason", "")});
  } catch (const json::exception& e) {
    throw model_error(std::string("sweep file: ") + e.what());
  }
  return out;
}

json takeaway_json(const takeaway_report& rep) {
  json checks = json::array();
  for (const auto* c : {&rep.t1, &rep.t2, &rep.t3, &rep.t4})
    checks.push_back({{"check_id", c->id},
                      {"evaluable", c->evaluable},
                      {"pass", c->evaluable ? json(c->pass) : json("not evaluable")},
                      {"evidence", c->evidence}});
  return {{"checks", std::move(checks)}};
}

json comparison_json(const std::vector<comparison_row>& rows) {
  json out = json::array();
  for (const auto& r : rows)
    out.push_back({{"array_label", r.array_label},
                   {"G", r.g},
                   {"util_alpha1", r.util_a1},
                   {"util_alpha05", r.util_a05},
                   {"latency_ms_alpha1", r.lat_a1},
                   {"latency_ms_alpha05", r.lat_a05},
                   {"energy_mj_alpha1", r.energy_a1},
                   {"energy_mj_alpha05", r.energy_a05},
                   {"util_match_2pp", r.util_match},
                   {"faster_and_cheaper", r.faster_and_cheaper}});
  return {{"comparison", std::move(out)}};
}

}  // namespace draco::io
