#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cycdim/dims.hpp"

namespace cycdim {

/** Parsed command-line request; one instance drives one run. */
struct RunConfig {
    std::string command = "table"; // table | verify | compare
    long p = 5;
    long g_min = 1;
    long g_max = 1;
    std::string what = "all";     // gow | tqft | all   (table only)
    std::string mode = "exact";   // exact | float | both   (table only)
    std::string format = "text";  // text | csv | json
    std::string out_path;         // empty = standard output
};

/** One row of a dimension table. */
struct DimRecord {
    long p = 0;
    long g = 0;
    std::string index_kind; // "n" (recursion index) or "c" (color parameter)
    long index = 0;
    std::string route;
    mpz_class value;
    std::optional<double> residual; // float routes only
    std::optional<bool> match;      // agreement with the cell's reference route
};

/** One row of a verification report. */
struct CheckRecord {
    long p = 0;
    std::string check;
    bool pass = false;
    std::optional<double> max_residual; // float-agreement checks only
    std::string detail;
};

/** Rows for `table`, in deterministic order (g, index_kind, index, route). */
std::vector<DimRecord> build_table(const RunConfig& config);

/** Checks for `verify` over the configured p and genus range. */
std::vector<CheckRecord> build_verification(const RunConfig& config);

/** Tuple comparisons for `compare`, one per genus in the configured range. */
std::vector<TupleComparison> build_comparison(const RunConfig& config);

// Renderers; all produce byte-deterministic output for a given input.
std::string render_table(const RunConfig& config, const std::vector<DimRecord>& rows);
std::string render_verification(const RunConfig& config, const std::vector<CheckRecord>& checks);
std::string render_comparison(const RunConfig& config, const std::vector<TupleComparison>& rows);

/**
 * Validates the configuration, runs the requested command, and writes the
 * rendered report to `config.out_path` (or `out`).  Returns the process
 * exit code: 0 on success, 1 if verification failed or an exactness
 * assertion was violated, 2 on invalid input or I/O failure.  Diagnostics
 * go to `err`.
 */
int run_cli(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace cycdim
