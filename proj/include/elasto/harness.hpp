#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "elasto/geometry.hpp"
#include "elasto/types.hpp"

namespace elasto {

struct MaterialConfig {
    double lambda = 1.0;
    double mu = 1.0;
};

struct IncidenceConfig {
    std::string type = "S";  // P | S | point_source
    Vec2 direction{0.0, -1.0};
    Vec2 polarization{1.0, 0.0};
    Vec2 source{0.1, -0.2};
    CVec2 strength{1.0, 0.0};
};

struct FormulationConfig {
    std::string name;   // see README for the names accepted per problem
    std::string label;  // column label; defaults to name
    std::string eta_rule = "one";  // one | optimal | value
    double eta = 1.0;
    std::optional<cplx> kappa;     // default rule when empty
    std::string variant = "plain";  // os: plain | eps | single
    double eps = 0.1;
};

struct RunCell {
    double omega = 1.0;
    std::vector<int> n;
};

struct ExperimentConfig {
    std::string name;
    std::string problem = "dirichlet";  // manufactured | dirichlet | neumann | transmission
    std::string geometry = "circle";
    CurveParams curve;
    std::vector<MaterialConfig> materials{MaterialConfig{}};
    // transmission: which listed material occupies the bounded domain ("first" or "second")
    std::string interior = "first";
    IncidenceConfig incidence;
    std::vector<FormulationConfig> formulations;
    std::vector<RunCell> runs;
    double tol = 1e-8;
    int max_iter = 2000;
    std::string method = "gmres";        // gmres | lu
    std::string reference = "none";      // none | point_source | first_formulation
    std::string pivot = "none";          // none | iterations | eps_inf
    int far_field_angles = 360;
    double memory_budget_gb = 3.0;       // cells whose dense storage exceeds this are skipped
    bool record_time = true;
    std::string output;
    std::string format = "csv";          // csv | text
};

ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

struct ReportRow {
    double omega = 0.0;
    int n = 0;
    std::string formulation;
    int iterations = 0;
    std::optional<double> eps_inf;
    std::optional<double> seconds;
    bool converged = true;
};

struct RunLog {
    std::vector<std::string> skipped;  // cells left out, with the reason
};

std::vector<ReportRow> run_experiment(const ExperimentConfig& cfg, RunLog* log = nullptr);

enum class TableFormat { csv, text };

// Long format: omega, n, formulation, iterations, eps_inf, seconds.
std::string format_table(const std::vector<ReportRow>& rows, TableFormat format);
// One line per (omega, n) with one column per formulation holding iterations or eps_inf.
std::string format_pivot(const std::vector<ReportRow>& rows, const std::string& value, TableFormat format);
void emit_table(const std::string& content, const std::string& path);
std::vector<ReportRow> parse_table(const std::string& csv);

std::vector<std::string> preset_names();
// Raw preset text (json with // comments); throws for unknown names.  comp* aliases accepted.
std::string preset_text(const std::string& name);

// Quick property checks; prints one line per check and returns true if all pass.
bool run_selftest(std::ostream& os);

void set_thread_count(int threads);

}  // namespace elasto
