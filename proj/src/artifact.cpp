#include "qfactor/artifact.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "qfactor/version.hpp"

namespace qfactor {

namespace {

/// Shortest text that round-trips a double; used for all CSV numbers.
std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string format_instance_line(const Instance& inst) {
  const auto [p, q] = canonical_factors(inst);
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "N=%llu  n=%d  n_p=%d  n_q=%d  p=%llu (p'=%llu)  q=%llu (q'=%llu)  solutions:",
                static_cast<unsigned long long>(inst.N), inst.n, inst.n_p, inst.n_q,
                static_cast<unsigned long long>(p), static_cast<unsigned long long>((p - 1) / 2),
                static_cast<unsigned long long>(q), static_cast<unsigned long long>((q - 1) / 2));
  std::string line = buf;
  for (const std::uint32_t b : solutions_by_factor(inst)) {
    line += " |" + bitstring(b, inst.n) + ">";
  }
  return line;
}

nlohmann::ordered_json run_document(const Instance& inst, const RunConfig& config,
                                    const RunRecord& record) {
  nlohmann::ordered_json doc;
  doc["n"] = inst.n;
  doc["model"] = std::string(model_name(record.model));

  const auto [p, q] = canonical_factors(inst);
  nlohmann::ordered_json jinst;
  jinst["N"] = inst.N;
  jinst["n"] = inst.n;
  jinst["n_p"] = inst.n_p;
  jinst["n_q"] = inst.n_q;
  jinst["p"] = p;
  jinst["q"] = q;
  nlohmann::ordered_json jsols = nlohmann::ordered_json::array();
  for (const std::uint32_t b : solutions_by_factor(inst)) jsols.push_back(bitstring(b, inst.n));
  jinst["solutions"] = std::move(jsols);
  doc["instance"] = std::move(jinst);

  nlohmann::ordered_json jconfig;
  jconfig["layers"] = config.layers;
  jconfig["restarts"] = config.restarts;
  jconfig["seed"] = config.seed;
  jconfig["init"] = std::string(pattern_name(config.init));
  doc["config"] = std::move(jconfig);

  nlohmann::ordered_json jdepths = nlohmann::ordered_json::array();
  for (const DepthRecord& depth : record.depths) {
    nlohmann::ordered_json jd;
    jd["l"] = depth.layers;
    jd["c_min"] = depth.c_min;
    jd["gammas"] = depth.params.gammas;
    jd["betas"] = depth.params.betas;
    jd["fidelity"] = depth.fidelity;
    jd["confidence"] = depth.confidence;
    jd["cost_ratio_prev"] = depth.cost_ratio_prev;
    jd["cost_ratio_first"] = depth.cost_ratio_first;
    jd["converged"] = depth.converged;
    nlohmann::ordered_json jpops = nlohmann::ordered_json::array();
    for (const PopulationEntry& entry : depth.populations.top) {
      nlohmann::ordered_json jp;
      jp["bitstring"] = bitstring(entry.index, inst.n);
      jp["probability"] = entry.probability;
      jp["is_solution"] = entry.is_solution;
      jpops.push_back(std::move(jp));
    }
    jd["populations"] = std::move(jpops);
    jd["others"] = depth.populations.others;
    jdepths.push_back(std::move(jd));
  }
  doc["depths"] = std::move(jdepths);

  nlohmann::ordered_json jprov;
  jprov["tool"] = "qfactor";
  jprov["version"] = std::string(kVersion);
  jprov["seed"] = record.seed;
  doc["provenance"] = std::move(jprov);
  return doc;
}

std::string render_document(const nlohmann::ordered_json& doc) { return doc.dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_spectrum_csv(std::ostream& out, const SpectrumReport& report, const Instance& inst) {
  out << "index,bitstring,energy,abs_normalized_energy,sorted_rank,is_solution\n";
  for (const SpectrumEntry& entry : report.entries) {
    out << entry.index << ',' << bitstring(entry.index, inst.n) << ',' << fmt(entry.energy)
        << ',' << fmt(entry.abs_normalized) << ',' << report.sorted_rank[entry.index] << ','
        << (entry.is_solution ? 1 : 0) << '\n';
  }
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "N,model,seed,c_min,fidelity,confidence,solution_rank\n";
  for (const SweepRow& row : rows) {
    out << row.N << ',' << model_name(row.model) << ',' << row.seed << ',' << fmt(row.c_min)
        << ',' << fmt(row.fidelity) << ',' << fmt(row.confidence) << ',' << row.solution_rank
        << '\n';
  }
}

}  // namespace qfactor
