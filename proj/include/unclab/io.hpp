#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "nlohmann/json.hpp"
#include "unclab/noise_sim.hpp"
#include "unclab/relation.hpp"

namespace unclab {

// CSV columns are fixed; headers are part of the interface. Numeric CSV
// fields use 6 significant digits except raw counts, which are written
// exactly; JSON carries full precision.

inline constexpr const char* kSweepCsvHeader =
    "phi_deg,eps_analytic,eta_analytic,eps_est,eps_unc,eta_est,eta_unc,sigma_a,sigma_b,"
    "heis_prod,ozawa_sum,bound,heis_class,ozawa_class";

inline constexpr const char* kSimulateCsvHeader =
    "phi_deg,prepared_state,m1,m2,count,normalized_intensity,true_probability";

std::string fmt6(double v);  // %.6g, locale-independent

std::string class_label(bool satisfied, bool inconclusive);

void write_records_csv(std::ostream& os, const SweepResult& result);
nlohmann::json records_json(const SweepResult& result);

void write_simulation_csv(std::ostream& os, const std::vector<ExperimentRun>& runs);
nlohmann::json simulation_json(const std::vector<ExperimentRun>& runs);

// Count-file ingestion for the estimate command.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_no, const std::string& msg);
};

struct CountFileEntry {
    double phi_deg = 0.0;
    StatePreparationSet set;
};

// Reads the simulate CSV schema back in. Settings are returned in order of
// first appearance; every setting must provide all four prepared states
// with all four outcome cells. Throws ParseError with a line number.
std::vector<CountFileEntry> read_simulation_csv(std::istream& is);

}  // namespace unclab
