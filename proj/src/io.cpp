#include "loccbound/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace loccbound {

using nlohmann::json;

namespace {

std::string state_path(std::size_t i, const char* field) {
    return "states[" + std::to_string(i) + "]." + field;
}

const json& require(const json& node, const char* field, const std::string& where) {
    const auto it = node.find(field);
    if (it == node.end()) throw InputError("missing field: " + where);
    return *it;
}

Complex read_complex(const json& pair, const std::string& where) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
        throw InputError("expected [re, im] pair at " + where);
    return {pair[0].get<double>(), pair[1].get<double>()};
}

Vector read_amplitudes(const json& arr, int dim, const std::string& where) {
    if (!arr.is_array() || static_cast<int>(arr.size()) != dim)
        throw InputError("wrong amplitude count (want " + std::to_string(dim) + ") at " + where);
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v(i) = read_complex(arr[i], where + "[" + std::to_string(i) + "]");
    return v;
}

Matrix read_matrix(const json& arr, int dim, const std::string& where) {
    if (!arr.is_array() || static_cast<int>(arr.size()) != dim)
        throw InputError("wrong row count (want " + std::to_string(dim) + ") at " + where);
    Matrix m(dim, dim);
    for (int r = 0; r < dim; ++r) {
        const json& row = arr[r];
        const std::string row_where = where + "[" + std::to_string(r) + "]";
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
            throw InputError("wrong column count (want " + std::to_string(dim) + ") at " + row_where);
        for (int c = 0; c < dim; ++c)
            m(r, c) = read_complex(row[c], row_where + "[" + std::to_string(c) + "]");
    }
    return m;
}

int read_param(const json& entry, const char* name, const std::string& where) {
    const json& params = require(entry, "params", where + ".params");
    const json& p = require(params, name, where + ".params." + name);
    if (!p.is_number_integer()) throw InputError("expected integer at " + where + ".params." + name);
    return p.get<int>();
}

void expand_family(StateSet& set, const json& entry, const std::string& label, std::size_t i) {
    const std::string where = state_path(i, "family");
    const std::string family = require(entry, "family", where).get<std::string>();
    const MultipartiteSpace& space = set.space;
    const auto check_space = [&](const MultipartiteSpace& natural, const std::string& what) {
        if (space != natural)
            throw InputError("dims do not match the natural space of " + what + " at " + where);
    };
    if (family == "ghz") {
        const int m = read_param(entry, "m", state_path(i, ""));
        if (m < 2) throw InputError("ghz needs m >= 2 at " + where);
        const PureState psi = ghz_state(m);
        check_space(psi.space(), "ghz(m=" + std::to_string(m) + ")");
        set.add(label, DensityOperator(psi));
    } else if (family == "w") {
        const int m = read_param(entry, "m", state_path(i, ""));
        if (m < 2) throw InputError("w needs m >= 2 at " + where);
        const PureState psi = w_state(m);
        check_space(psi.space(), "w(m=" + std::to_string(m) + ")");
        set.add(label, DensityOperator(psi));
    } else if (family == "max_entangled") {
        const int d = read_param(entry, "d", state_path(i, ""));
        if (d < 2) throw InputError("max_entangled needs d >= 2 at " + where);
        const PureState psi = max_entangled_state(d);
        check_space(psi.space(), "max_entangled(d=" + std::to_string(d) + ")");
        set.add(label, DensityOperator(psi));
    } else if (family == "bell") {
        const std::vector<PureState> basis = bell_basis();
        check_space(basis.front().space(), "bell");
        static const char* suffix[4] = {"phi_plus", "phi_minus", "psi_plus", "psi_minus"};
        for (int k = 0; k < 4; ++k) set.add(label + "." + suffix[k], DensityOperator(basis[k]));
    } else if (family == "ghz_set") {
        const int m = read_param(entry, "m", state_path(i, ""));
        if (m < 2) throw InputError("ghz_set needs m >= 2 at " + where);
        const StateSet ghz = build_ghz_set(m);
        check_space(ghz.space, "ghz_set(m=" + std::to_string(m) + ")");
        for (int k = 0; k < ghz.size(); ++k)
            set.add(label + "." + ghz.labels[k], ghz.states[k]);
    } else {
        throw InputError("unknown family '" + family + "' at " + where);
    }
}

}  // namespace

StateSet parse_state_set(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("not valid JSON: ") + e.what());
    }
    if (!root.is_object()) throw InputError("top level must be an object");

    const json& version = require(root, "version", "version");
    if (!version.is_number_integer() || version.get<int>() != 1)
        throw InputError("unsupported value in field: version (want 1)");

    const json& dims_node = require(root, "dims", "dims");
    if (!dims_node.is_array() || dims_node.empty()) throw InputError("dims must be a nonempty array");
    std::vector<int> dims;
    for (std::size_t k = 0; k < dims_node.size(); ++k) {
        if (!dims_node[k].is_number_integer() || dims_node[k].get<int>() < 2)
            throw InputError("dims[" + std::to_string(k) + "] must be an integer >= 2");
        dims.push_back(dims_node[k].get<int>());
    }
    MultipartiteSpace space(dims);
    const int D = space.total_dim();

    const json& states = require(root, "states", "states");
    if (!states.is_array()) throw InputError("states must be an array");

    StateSet set{std::move(space), {}, {}};
    for (std::size_t i = 0; i < states.size(); ++i) {
        const json& entry = states[i];
        if (!entry.is_object()) throw InputError(state_path(i, "") + " must be an object");
        const std::string label =
            require(entry, "label", state_path(i, "label")).get<std::string>();
        const std::string kind = require(entry, "kind", state_path(i, "kind")).get<std::string>();
        try {
            if (kind == "pure") {
                const Vector amp = read_amplitudes(require(entry, "amplitudes",
                                                           state_path(i, "amplitudes")),
                                                   D, state_path(i, "amplitudes"));
                set.add(label, DensityOperator(PureState(set.space, amp)));
            } else if (kind == "mixed") {
                const Matrix rho = read_matrix(require(entry, "matrix", state_path(i, "matrix")),
                                               D, state_path(i, "matrix"));
                set.add(label, DensityOperator(set.space, rho));
            } else if (kind == "family") {
                expand_family(set, entry, label, i);
            } else {
                throw InputError("unknown kind '" + kind + "' at " + state_path(i, "kind"));
            }
        } catch (const std::invalid_argument& e) {
            // Type-level validation (norm, hermiticity, ...) failed for this entry.
            throw InputError(state_path(i, "") + ": " + e.what());
        }
    }
    if (set.size() == 0) throw InputError("states must contain at least one entry");
    return set;
}

StateSet load_state_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_state_set(buffer.str());
}

std::string serialize_state_set(const StateSet& set) {
    json root;
    root["version"] = 1;
    root["dims"] = set.space.dims();
    json states = json::array();
    for (int i = 0; i < set.size(); ++i) {
        json entry;
        entry["label"] = set.labels[i];
        entry["kind"] = "mixed";
        const Matrix& rho = set.states[i].matrix();
        json rows = json::array();
        for (int r = 0; r < rho.rows(); ++r) {
            json row = json::array();
            for (int c = 0; c < rho.cols(); ++c)
                row.push_back(json::array({rho(r, c).real(), rho(r, c).imag()}));
            rows.push_back(std::move(row));
        }
        entry["matrix"] = std::move(rows);
        states.push_back(std::move(entry));
    }
    root["states"] = std::move(states);
    return root.dump(2) + "\n";
}

void save_state_set(const StateSet& set, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open output file: " + path);
    out << serialize_state_set(set);
}

std::string format_real(double value) {
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    if (std::isnan(value)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

namespace {

void write_measure_header(std::ostream& out, bool with_chain) {
    out << "label,entropy,support_size,g_lower,g_upper,er_lower,er_upper,"
           "r_ppt,d_ppt,overlap_status,robustness_status,cost_status";
    if (with_chain) out << ",chain_ok";
    out << '\n';
}

void write_measure_row(std::ostream& out, const std::string& label, const MeasureRecord& rec) {
    out << label << ',' << format_real(rec.entropy) << ',' << rec.support_size << ','
        << format_real(rec.g_lower) << ',' << format_real(rec.g_upper) << ','
        << format_real(rec.er_lower) << ',' << format_real(rec.er_upper) << ','
        << format_real(rec.r_ppt) << ',' << format_real(rec.d_ppt) << ','
        << to_string(rec.overlap_status) << ',' << to_string(rec.robustness_status) << ','
        << to_string(rec.cost_status);
}

}  // namespace

void write_measure_report(std::ostream& out, const std::vector<std::string>& labels,
                          const std::vector<MeasureRecord>& records) {
    if (labels.size() != records.size())
        throw std::invalid_argument("write_measure_report: label/record count mismatch");
    write_measure_header(out, false);
    for (std::size_t i = 0; i < records.size(); ++i) {
        write_measure_row(out, labels[i], records[i]);
        out << '\n';
    }
}

void write_sweep_report(std::ostream& out, const std::vector<std::string>& labels,
                        const std::vector<MeasureRecord>& records,
                        const std::vector<bool>& chain_ok) {
    if (labels.size() != records.size() || chain_ok.size() != records.size())
        throw std::invalid_argument("write_sweep_report: column length mismatch");
    write_measure_header(out, true);
    for (std::size_t i = 0; i < records.size(); ++i) {
        write_measure_row(out, labels[i], records[i]);
        out << ',' << (chain_ok[i] ? "true" : "false") << '\n';
    }
}

void write_bound_report(std::ostream& out, const std::vector<std::string>& labels,
                        const std::vector<MeasureRecord>& records, const BoundReport& bound,
                        const CountBounds& counts) {
    write_measure_report(out, labels, records);
    out << "# total_dim," << bound.total_dim << '\n';
    out << "# state_count," << bound.state_count << '\n';
    out << "# sum_d_ppt," << format_real(bound.cost_sum) << '\n';
    out << "# margin," << format_real(bound.margin) << '\n';
    out << "# verdict," << to_string(bound.verdict) << '\n';
    out << "# saturated," << (bound.saturated ? "true" : "false") << '\n';
    out << "# n_bound_d_ppt," << counts.n_cost << ',' << format_real(counts.raw_cost) << '\n';
    out << "# n_bound_r_ppt," << counts.n_robustness << ','
        << format_real(counts.raw_robustness) << '\n';
    out << "# n_bound_entropy_proxy," << counts.n_entropy_proxy << ','
        << format_real(counts.raw_entropy_proxy) << '\n';
    out << "# n_bound_g_ppt," << counts.n_geometric << ','
        << format_real(counts.raw_geometric) << '\n';
}

void write_chain_scatter_svg(std::ostream& out, const std::vector<MeasureRecord>& records) {
    const int width = 480, height = 480, pad = 48;
    double hi = 1.0;
    for (const MeasureRecord& rec : records) hi = std::max({hi, rec.d_ppt, rec.r_ppt});
    hi *= 1.05;
    const auto sx = [&](double v) { return pad + (width - 2 * pad) * v / hi; };
    const auto sy = [&](double v) { return height - pad - (height - 2 * pad) * v / hi; };
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "  <rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    out << "  <line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(hi) << "\" y2=\""
        << sy(hi) << "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
    out << "  <line x1=\"" << pad << "\" y1=\"" << height - pad << "\" x2=\"" << width - pad
        << "\" y2=\"" << height - pad << "\" stroke=\"black\"/>\n";
    out << "  <line x1=\"" << pad << "\" y1=\"" << height - pad << "\" x2=\"" << pad
        << "\" y2=\"" << pad << "\" stroke=\"black\"/>\n";
    out << "  <text x=\"" << width / 2 << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\" font-size=\"13\">r_ppt</text>\n";
    out << "  <text x=\"14\" y=\"" << height / 2
        << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 14 "
        << height / 2 << ")\">d_ppt</text>\n";
    for (const MeasureRecord& rec : records)
        out << "  <circle cx=\"" << format_real(sx(rec.r_ppt)) << "\" cy=\""
            << format_real(sy(rec.d_ppt)) << "\" r=\"3.5\" fill=\"#1f77b4\" fill-opacity=\"0.75\"/>\n";
    out << "</svg>\n";
}

}  // namespace loccbound
