#include "explorer.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "netgen.hpp"

namespace draco {

namespace {

bool near(double a, double b) { return std::fabs(a - b) < 1e-9; }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

const sweep_row* find_row(const std::vector<sweep_row>& rows,
                          const std::string& label, double alpha, double rho, int g) {
  for (const auto& r : rows)
    if (r.array_label == label && near(r.alpha, alpha) && near(r.rho, rho) && r.g == g)
      return &r;
  return nullptr;
}

}  // namespace

sweep_result run_sweep(const sweep_grid& grid) {
  if (grid.arrays.empty() || grid.g_values.empty() || grid.alphas.empty() ||
      grid.rhos.empty())
    throw model_error("sweep grid has an empty dimension");

  std::vector<int> sizes = grid.arrays;
  std::vector<double> alphas = grid.alphas, rhos = grid.rhos;
  std::vector<int> gs = grid.g_values;
  std::sort(sizes.begin(), sizes.end());
  std::sort(alphas.begin(), alphas.end());
  std::sort(rhos.begin(), rhos.end());
  std::sort(gs.begin(), gs.end());

  sweep_result out;
  for (int sz : sizes) {
    for (double al : alphas) {
      for (double rh : rhos) {
        const int mem_mult = rh >= 2.0 ? 2 : 1;
        const array_config arr = preset_array(sz, mem_mult);
        for (int g : gs) {
          try {
            const network_spec net = generate_mobilenet_v1(al, rh, g);
            const network_cost nc = compute_network_cost(net, arr);
            sweep_row r;
            r.array_label = arr.label;
            r.array_size = sz;
            r.alpha = al;
            r.rho = rh;
            r.g = g;
            r.macs = nc.macs;
            r.params = nc.params;
            r.avg_utilization = nc.avg_utilization;
            r.util_3x3 = nc.util_3x3;
            r.util_1x1 = nc.util_1x1;
            r.latency_ms = nc.latency_s * 1e3;
            r.energy_mj = nc.energy_j * 1e3;
            r.energy = nc.energy;
            out.rows.push_back(std::move(r));
          } catch (const model_error& e) {
            out.skipped.push_back({arr.label, al, rh, g, e.what()});
          }
        }
      }
    }
  }
  return out;
}

std::pair<int, double> argmin_latency(const std::vector<sweep_row>& rows,
                                      const std::string& array_label,
                                      double alpha, double rho) {
  const sweep_row* best = nullptr;
  for (const auto& r : rows) {
    if (r.array_label != array_label || !near(r.alpha, alpha) || !near(r.rho, rho))
      continue;
    if (!best || r.latency_ms < best->latency_ms ||
        (r.latency_ms == best->latency_ms && r.g < best->g))
      best = &r;
  }
  if (!best) throw model_error("argmin_latency: no matching rows");
  return {best->g, best->latency_ms};
}

takeaway_report build_takeaway_report(const sweep_result& sweep) {
  const auto& rows = sweep.rows;
  takeaway_report rep;
  rep.t1.id = "T1";
  rep.t2.id = "T2";
  rep.t3.id = "T3";
  rep.t4.id = "T4";

  // T1: latency-optimal G shifts right (non-decreasing) with array size.
  {
    std::vector<std::string> labels;
    for (const auto& r : rows)
      if (std::find(labels.begin(), labels.end(), r.array_label) == labels.end())
        labels.push_back(r.array_label);
    std::sort(labels.begin(), labels.end(), [&](const auto& a, const auto& b) {
      return std::stoi(a) < std::stoi(b);
    });
    bool ok = true, any = false;
    std::ostringstream ev;
    for (double rh : {1.0, 2.0}) {
      int prev = 0;
      bool covered = labels.size() >= 2;
      std::vector<int> mins;
      for (const auto& lb : labels) {
        try {
          mins.push_back(argmin_latency(rows, lb, 1.0, rh).first);
        } catch (const model_error&) {
          covered = false;
          break;
        }
      }
      if (!covered) continue;
      any = true;
      ev << "rho=" << rh << " argmin G per array:";
      for (size_t i = 0; i < mins.size(); ++i) {
        ev << " " << labels[i] << ":G" << mins[i];
        if (mins[i] < prev) ok = false;
        prev = mins[i];
      }
      ev << "; ";
    }
    rep.t1.evaluable = any;
    rep.t1.pass = any && ok;
    rep.t1.evidence = any ? ev.str() : "needs alpha=1 rows over >=2 arrays";
  }

  // T2: latency plateau over the top half of the G range (alpha=0.5 rho=1, 64x64).
  {
    std::vector<const sweep_row*> pts;
    for (const auto& r : rows)
      if (r.array_size == 64 && near(r.alpha, 0.5) && near(r.rho, 1.0))
        pts.push_back(&r);
    if (pts.size() >= 2) {
      std::sort(pts.begin(), pts.end(),
                [](auto* a, auto* b) { return a->g < b->g; });
      const size_t half = pts.size() / 2;
      double lo = 1e300, hi = 0;
      std::ostringstream ev;
      ev << "top-half latencies (ms):";
      for (size_t i = half; i < pts.size(); ++i) {
        lo = std::min(lo, pts[i]->latency_ms);
        hi = std::max(hi, pts[i]->latency_ms);
        ev << " G" << pts[i]->g << ":" << fmt(pts[i]->latency_ms);
      }
      rep.t2.evaluable = true;
      rep.t2.pass = (hi - lo) / lo <= 0.10;
      ev << "; spread " << fmt(100 * (hi - lo) / lo) << "%";
      rep.t2.evidence = ev.str();
    } else {
      rep.t2.evidence = "needs alpha=0.5 rho=1 rows on 64x64";
    }
  }

  // T3: higher utilization at G=16 does not give lower latency than G=4.
  {
    const sweep_row* g4 = find_row(rows, "64x64", 1.0, 2.0, 4);
    const sweep_row* g16 = find_row(rows, "64x64", 1.0, 2.0, 16);
    if (g4 && g16) {
      rep.t3.evaluable = true;
      rep.t3.pass = g16->latency_ms > g4->latency_ms &&
                    g16->avg_utilization > g4->avg_utilization;
      rep.t3.evidence = "lat G4=" + fmt(g4->latency_ms) + "ms G16=" +
                        fmt(g16->latency_ms) + "ms; util G4=" +
                        fmt(g4->avg_utilization) + " G16=" + fmt(g16->avg_utilization);
    } else {
      rep.t3.evidence = "needs alpha=1 rho=2 G{4,16} rows on 64x64";
    }
  }

  // T4: the alpha downscale speedup is larger on the small array.
  {
    const sweep_row* s1 = find_row(rows, "16x16", 1.0, 2.0, 1);
    const sweep_row* s5 = find_row(rows, "16x16", 0.5, 2.0, 1);
    const sweep_row* l1 = find_row(rows, "128x128", 1.0, 2.0, 1);
    const sweep_row* l5 = find_row(rows, "128x128", 0.5, 2.0, 1);
    if (s1 && s5 && l1 && l5) {
      const double rs = s1->latency_ms / s5->latency_ms;
      const double rl = l1->latency_ms / l5->latency_ms;
      rep.t4.evaluable = true;
      rep.t4.pass = rs > rl;
      rep.t4.evidence =
          "speedup 16x16=" + fmt(rs) + "x vs 128x128=" + fmt(rl) + "x";
    } else {
      rep.t4.evidence = "needs alpha in {0.5,1} rho=2 G=1 rows on 16x16 and 128x128";
    }
  }
  return rep;
}

std::vector<comparison_row> alternative_comparison(const std::vector<sweep_row>& rows) {
  std::vector<comparison_row> out;
  for (const auto& r : rows) {
    if (!near(r.alpha, 1.0) || !near(r.rho, 2.0) || r.g > 16) continue;
    const sweep_row* alt = find_row(rows, r.array_label, 0.5, 2.0, r.g);
    if (!alt)
      throw model_error("alternative_comparison: missing alpha=0.5 rho=2 G=" +
                        std::to_string(r.g) + " on " + r.array_label);
    comparison_row c;
    c.array_label = r.array_label;
    c.g = r.g;
    c.util_a1 = r.avg_utilization;
    c.util_a05 = alt->avg_utilization;
    c.lat_a1 = r.latency_ms;
    c.lat_a05 = alt->latency_ms;
    c.energy_a1 = r.energy_mj;
    c.energy_a05 = alt->energy_mj;
    c.util_match = std::fabs(c.util_a1 - c.util_a05) <= 0.02;
    c.faster_and_cheaper = c.lat_a05 < c.lat_a1 && c.energy_a05 < c.energy_a1;
    out.push_back(c);
  }
  if (out.empty())
    throw model_error("alternative_comparison: no alpha=1 rho=2 rows present");
  return out;
}

}  // namespace draco
