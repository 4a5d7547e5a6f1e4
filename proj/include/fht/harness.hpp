#pragma once

// Experiment runner: convergence sweeps of the true spectrum against the
// asymptotic predictions, eigenvector-route comparisons, the Type II b-table,
// and CSV/JSON report emission.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>

#include "fht/asymptotics.hpp"
#include "fht/eigensolve.hpp"
#include "fht/symbol.hpp"
#include "fht/wiener_hopf.hpp"

#include "json.hpp"

namespace fht {

struct LSelection {
    enum class Mode { Fraction, Explicit } mode = Mode::Fraction;
    double rho = 0.25;               // l = floor(rho * n)
    std::vector<long> values;        // one per n when explicit
};

struct Checks {
    bool eigenvalue_convergence = true;
    bool eigenvector_overlap = false;
    bool correction_fit = false;
    bool wiener_hopf = false;
    bool table_rows = false;
};

struct Tolerances {
    double halving = 0.5;             // e_last < halving * e_first
    double residual_accept = 1e-6;    // max residual / ||T||_F for an accepted row
    double table_match = 1e-10;       // rows 1-3 of the b-table
    double reconstruction = 1e-4;     // factorization reconstruction bound
    double quadrature = 0.0;          // 0 -> per-symbol default
};

struct ExperimentConfig {
    SymbolSpec symbol;
    std::vector<std::size_t> n_values;   // strictly increasing
    LSelection l_rule;
    std::size_t m = 0;                   // grid size; 0 -> max(8 * max(n), 1024)
    Checks checks;
    Tolerances tol;
    std::string output_dir = ".";
    // Type II table parameters (table_rows check)
    long table_l = 16;
    std::size_t table_n = 128;
};

// Throws ConfigError; returns the config unchanged.
const ExperimentConfig& validate_config(const ExperimentConfig& cfg);

ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ExperimentConfig& cfg);

struct ReportRow {
    std::size_t n = 0;
    long l = 0;
    cplx E_pred;
    cplx lambda;
    double gap = 0.0;          // |lambda - E_pred|
    double residual = 0.0;     // matched eigenpair residual
    double frob = 0.0;         // ||T||_F
    std::optional<double> overlap_pw;     // |<planewave, psi_num>|
    std::optional<double> overlap_wh;     // |<wh eigenvector, psi_num>|
    std::optional<int> winding;
    std::optional<double> reconstruction_error;
    std::optional<CorrectionFit> fit;
    std::string status = "ok";
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct TableRow {
    std::string b_label;
    cplx b_value;
    cplx E_computed;      // eigenvalue_type2 with this b
    cplx E_printed;       // the table's closed-form right column
    double diff = 0.0;
    bool flagged = false;  // rows 4-5: reported side by side, never asserted
};

struct Report {
    std::vector<ReportRow> rows;
    std::vector<CheckResult> checks;
    std::vector<TableRow> table;
    nlohmann::json config_echo;
    nlohmann::json metadata;   // environment; timestamps live here only

    bool all_passed() const;
};

// Deterministic given the config.  Emits report.csv / report.json into
// cfg.output_dir.
Report run(const ExperimentConfig& cfg);

// e_n = |lambda_matched - E_pred| at l = floor(rho n) for each n.
std::vector<double> convergence_sweep(const SymbolSpec& spec, double rho,
                                      std::span<const std::size_t> n_values,
                                      std::size_t m = 0);

// The five-row b-table at w = exp(-2 pi i l / n).
std::vector<TableRow> table_type2(cplx z0, cplx delta, cplx gamma, long l, std::size_t n);

// Writes report.csv and report.json (identical row content; CSV bodies are
// byte-stable across runs).
void emit(const Report& report, const std::filesystem::path& dir);

}  // namespace fht
