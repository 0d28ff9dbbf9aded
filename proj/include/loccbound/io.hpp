#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "loccbound/discrimination.hpp"
#include "loccbound/measures.hpp"

namespace loccbound {

// Raised on malformed or inconsistent input files; the message names the
// offending field.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// State-set file format (JSON):
// {
//   "version": 1,
//   "dims": [2, 2, 2],
//   "states": [
//     {"label": "ghz3", "kind": "family", "family": "ghz", "params": {"m": 3}},
//     {"label": "psi",  "kind": "pure",  "amplitudes": [[re, im], ...]},
//     {"label": "rho",  "kind": "mixed", "matrix": [[[re, im], ...], ...]}
//   ]
// }
// Family names: ghz, w, bell, max_entangled, ghz_set.  A family entry
// expands to one state (ghz, w, max_entangled) or several (bell: 4,
// ghz_set: 2^{m-1}) with derived labels; its natural dimensions must match
// "dims".  Pure amplitudes must be normalized and mixed matrices must be
// valid density operators, both within the type tolerances.
StateSet load_state_set(const std::string& path);
StateSet parse_state_set(const std::string& json_text);

// Writes every state as an explicit "mixed" matrix; numbers survive the
// round trip exactly (shortest-representation doubles).
void save_state_set(const StateSet& set, const std::string& path);
std::string serialize_state_set(const StateSet& set);

// Reals in reports carry 12 significant digits; infinities print as "inf".
std::string format_real(double value);

// Per-state CSV with the fixed column order
//   label, entropy, support_size, g_lower, g_upper, er_lower, er_upper,
//   r_ppt, d_ppt, overlap_status, robustness_status, cost_status
void write_measure_report(std::ostream& out, const std::vector<std::string>& labels,
                          const std::vector<MeasureRecord>& records);

// The measure table with one extra trailing chain_ok column (used by the
// random sweep).
void write_sweep_report(std::ostream& out, const std::vector<std::string>& labels,
                        const std::vector<MeasureRecord>& records,
                        const std::vector<bool>& chain_ok);

// The measure table plus footer rows (prefixed '#') carrying the ensemble
// verdict: total dimension, state count, summed discrimination cost, margin,
// verdict, saturation, and the four per-quantity state-count bounds.
void write_bound_report(std::ostream& out, const std::vector<std::string>& labels,
                        const std::vector<MeasureRecord>& records, const BoundReport& bound,
                        const CountBounds& counts);

// Scatter plot of the chain quantities (one point per record: x = r_ppt,
// y = d_ppt, with the y = x guide line), written as a standalone SVG.
void write_chain_scatter_svg(std::ostream& out, const std::vector<MeasureRecord>& records);

}  // namespace loccbound
