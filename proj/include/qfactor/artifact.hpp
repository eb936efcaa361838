#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "qfactor/analysis.hpp"
#include "qfactor/instance.hpp"
#include "qfactor/qaoa.hpp"

#include "json.hpp"

namespace qfactor {

/// Everything needed to reproduce one `factor` run.
struct RunConfig {
  std::uint64_t N = 0;
  Model model = Model::qubo;
  InitPattern init = InitPattern::alternating;
  int layers = 0;
  int restarts = 0;
  std::uint64_t seed = 0;
};

/// One-line instance summary in the register-table format; also the row
/// format of the bundled golden table.
std::string format_instance_line(const Instance& inst);

/// Result document with a fixed field layout. Field order is pinned by
/// ordered_json so identical runs serialize byte-identically.
nlohmann::ordered_json run_document(const Instance& inst, const RunConfig& config,
                                    const RunRecord& record);

/// dump(2) plus a trailing newline.
std::string render_document(const nlohmann::ordered_json& doc);

void write_text_file(const std::string& path, const std::string& text);

/// index,bitstring,energy,abs_normalized_energy,sorted_rank,is_solution
void write_spectrum_csv(std::ostream& out, const SpectrumReport& report, const Instance& inst);

struct SweepRow {
  std::uint64_t N = 0;
  Model model = Model::qubo;
  std::uint64_t seed = 0;
  double c_min = 0.0;
  double fidelity = 0.0;
  double confidence = 0.0;
  int solution_rank = 0;
};

/// N,model,seed,c_min,fidelity,confidence,solution_rank
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace qfactor
