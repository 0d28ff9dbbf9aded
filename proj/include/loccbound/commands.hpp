#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "loccbound/io.hpp"

namespace loccbound {

// Exit codes shared by every command.
inline constexpr int exit_ok = 0;
inline constexpr int exit_input_error = 1;       // unreadable/invalid input or parameters
inline constexpr int exit_numerical_failure = 2; // solver non-convergence or a failed check

struct CliOptions {
    SolverConfig solver;
    ProductOptConfig product;
    std::string out_path;   // empty: write the report to `out`
    std::string plot_path;  // empty: no plot
};

// Per-state measure table for a state-set file.  Rows are still written when
// a solver fails to converge; such runs exit with exit_numerical_failure.
int cmd_measure(const std::string& input_path, const CliOptions& opts, std::ostream& out,
                std::ostream& err);

// Measure table plus the ensemble discrimination verdict footer.
int cmd_bound(const std::string& input_path, const CliOptions& opts, std::ostream& out,
              std::ostream& err);

// Self-checking demonstrations; names: ghz, w, bell, ghz-sim, entangled-basis.
// Each prints what it computes and exits nonzero when a check misses its
// documented tolerance.  `m` is the party count for the family demos; `d` is
// the local dimension for the bell demo (d == 2 gives the four-Bell-state
// certificate, d > 2 the maximally entangled closed forms).
int cmd_demo(const std::string& name, int m, int d, const CliOptions& opts, std::ostream& out,
             std::ostream& err);

// Measures `count` seeded random states (alternating Haar-random pure states
// and mixed states of cycling rank) on the given dims, writes the measure
// table with a trailing chain_ok column, and optionally a scatter plot.
// Identical seeds give byte-identical output.
int cmd_sweep(int count, const std::vector<int>& dims, const CliOptions& opts, std::ostream& out,
              std::ostream& err);

}  // namespace loccbound
