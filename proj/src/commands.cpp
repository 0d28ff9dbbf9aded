#include "loccbound/commands.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "loccbound/rng.hpp"

namespace loccbound {

namespace {

bool write_text_file(const std::string& path, const std::string& content, std::ostream& err) {
    std::ofstream f(path);
    if (!f) {
        err << "cannot open output file: " << path << '\n';
        return false;
    }
    f << content;
    return true;
}

// Emit the report body to the chosen sink; returns false on file errors.
bool deliver(const CliOptions& opts, std::ostream& out, const std::string& body,
             std::ostream& err) {
    if (opts.out_path.empty()) {
        out << body;
        return true;
    }
    return write_text_file(opts.out_path, body, err);
}

bool deliver_plot(const CliOptions& opts, const std::vector<MeasureRecord>& records,
                  std::ostream& err) {
    if (opts.plot_path.empty()) return true;
    std::ostringstream svg;
    write_chain_scatter_svg(svg, records);
    return write_text_file(opts.plot_path, svg.str(), err);
}

std::vector<MeasureRecord> measure_all(const StateSet& set, const CliOptions& opts) {
    std::vector<MeasureRecord> records;
    records.reserve(set.states.size());
    for (const DensityOperator& rho : set.states)
        records.push_back(measure_state(rho, opts.solver, opts.product));
    return records;
}

int report_convergence(const std::vector<MeasureRecord>& records, std::ostream& err) {
    int failures = 0;
    for (const MeasureRecord& rec : records)
        if (!rec.fully_converged()) ++failures;
    if (failures > 0)
        err << failures << " state(s) had a non-converged solve; see status columns\n";
    return failures == 0 ? exit_ok : exit_numerical_failure;
}

std::optional<StateSet> load_or_report(const std::string& path, std::ostream& err) {
    try {
        return load_state_set(path);
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return std::nullopt;
    }
}

// A failed check demotes the exit code; messages go to the demo transcript.
class DemoChecks {
public:
    explicit DemoChecks(std::ostream& out) : out_(out) {}

    void expect(bool ok, const std::string& what) {
        out_ << (ok ? "  [ok] " : "  [FAILED] ") << what << '\n';
        if (!ok) failed_ = true;
    }

    int exit_code() const { return failed_ ? exit_numerical_failure : exit_ok; }

private:
    std::ostream& out_;
    bool failed_ = false;
};

int demo_ghz(int m, const CliOptions& opts, std::ostream& out) {
    const StateSet set = build_ghz_set(m);
    const int D = set.space.total_dim();
    out << "ghz discrimination demo: m=" << m << ", total_dim=" << D << ", states="
        << set.size() << '\n';

    const BoundReport bound = dimension_bound_check(set, opts.solver);
    for (int i = 0; i < set.size(); ++i)
        out << "  " << set.labels[i] << ": d_ppt=" << format_real(bound.costs[i]) << " ("
            << to_string(bound.cost_status[i]) << ")\n";
    out << "  sum_d_ppt=" << format_real(bound.cost_sum) << " vs total_dim=" << D
        << ", verdict=" << to_string(bound.verdict) << '\n';

    const GhzWBounds counts = ghz_w_bounds(m);
    out << "  count_bound=" << format_real(counts.n_ghz) << " states; this set has "
        << set.size() << " (saturates the bound)\n";

    const LoccSimResult sim = simulate_local_z_discrimination(set);
    double worst = 0.0;
    for (double s : sim.success) worst = std::max(worst, std::abs(s - 1.0));
    out << "  local-measurement simulation: max |success - 1| = " << format_real(worst) << '\n';

    DemoChecks checks(out);
    checks.expect(bound.all_converged(), "every discrimination-cost solve converged");
    checks.expect(bound.saturated, "sum of costs saturates the dimension (within n*1e-3)");
    checks.expect(bound.verdict == Verdict::possibly_discriminable,
                  "necessary condition holds for the discriminable set");
    checks.expect(set.size() == static_cast<int>(std::llround(counts.n_ghz)),
                  "constructed set size equals the count bound");
    checks.expect(worst <= 1e-12, "simulated success probability is exactly 1 (<= 1e-12)");
    return checks.exit_code();
}

int demo_w(int m, const CliOptions& opts, std::ostream& out) {
    const DensityOperator rho((w_state(m)));
    const int D = rho.dim();
    out << "w-family count-bound demo: m=" << m << ", total_dim=" << D << '\n';

    const MeasureRecord rec = measure_state(rho, opts.solver, opts.product);
    const AnalyticValues analytic = analytic_family_values(Family::w, m);
    const double lam_analytic = std::exp2(-analytic.geometric);
    out << "  g_lower=" << format_real(rec.g_lower) << ", g_upper=" << format_real(rec.g_upper)
        << ", analytic=" << format_real(analytic.geometric) << '\n';

    const GhzWBounds counts = ghz_w_bounds(m);
    out << "  raw count bound " << format_real(counts.n_w) << " -> floor "
        << floored_count(counts.n_w) << ", ghz-family bound " << format_real(counts.n_ghz)
        << '\n';

    const CountBounds measured = state_count_bounds({rec}, D);
    out << "  measured geometric column: raw " << format_real(measured.raw_geometric)
        << " -> floor " << measured.n_geometric << '\n';

    DemoChecks checks(out);
    checks.expect(rec.fully_converged(), "every solve converged");
    checks.expect(std::abs(std::exp2(-rec.g_lower) - lam_analytic) <= 1e-5,
                  "relaxed overlap matches the closed form to 1e-5");
    checks.expect(std::abs(std::exp2(-rec.g_upper) - lam_analytic) <= 1e-6,
                  "product search finds the closed-form overlap to 1e-6");
    if (m >= 3) {
        checks.expect(std::floor(counts.n_w) < counts.n_ghz,
                      "w-family bound floors strictly below the ghz-family bound");
        checks.expect(measured.n_geometric == floored_count(counts.n_w),
                      "measured bound reproduces the closed-form floor");
    }
    return checks.exit_code();
}

int demo_bell(int d, const CliOptions& opts, std::ostream& out) {
    if (d < 2) throw std::invalid_argument("demo bell: need d >= 2");
    const PureState psi = max_entangled_state(d);
    const double robustness = analytic_bipartite_robustness(psi);
    const Bipartition cut(psi.space(), 1u);
    const double count = bipartite_bound(schmidt_coefficients(psi, cut), d, d);
    out << "maximally entangled demo: d=" << d << ", total_dim=" << d * d << '\n';
    out << "  closed-form robustness (sum of Schmidt coefficients)^2 - 1 = "
        << format_real(robustness) << " (expect " << d - 1 << ")\n";
    out << "  count bound " << format_real(count) << " -> floor " << floored_count(count)
        << " (at most " << d << " such states are discriminable)\n";

    DemoChecks checks(out);
    checks.expect(std::abs(robustness - (d - 1.0)) <= 1e-9,
                  "closed-form robustness equals d - 1");
    checks.expect(floored_count(count) == d && std::abs(count - d) <= 1e-9,
                  "count bound equals d");

    // At d = 2 the four Bell states make the certified impossibility concrete.
    if (d == 2) {
        MultipartiteSpace space({2, 2});
        StateSet set{space, {}, {}};
        const std::vector<PureState> basis = bell_basis();
        static const char* names[4] = {"phi_plus", "phi_minus", "psi_plus", "psi_minus"};
        for (int i = 0; i < 4; ++i) set.add(names[i], DensityOperator(basis[i]));

        const BoundReport bound = dimension_bound_check(set, opts.solver);
        for (int i = 0; i < 4; ++i)
            out << "  " << set.labels[i] << ": d_ppt=" << format_real(bound.costs[i]) << '\n';
        out << "  sum_d_ppt=" << format_real(bound.cost_sum) << " vs total_dim=4, verdict="
            << to_string(bound.verdict) << '\n';

        checks.expect(bound.all_converged(), "every discrimination-cost solve converged");
        double worst = 0.0;
        for (double c : bound.costs) worst = std::max(worst, std::abs(c - 2.0));
        checks.expect(worst <= 1e-3, "each Bell state costs 2 (within 1e-3)");
        checks.expect(bound.verdict == Verdict::provably_not_discriminable,
                      "four Bell states are certified not discriminable");
    }
    return checks.exit_code();
}

int demo_ghz_sim(int m, const CliOptions&, std::ostream& out) {
    const StateSet set = build_ghz_set(m);
    const int D = set.space.total_dim();
    out << "ghz local-measurement simulation: m=" << m << ", states=" << set.size() << '\n';

    const LoccSimResult sim = simulate_local_z_discrimination(set);
    if (m <= 4) {
        for (int outcome = 0; outcome < D; ++outcome) {
            std::string bits(m, '0');
            for (int k = 0; k < m; ++k)
                if ((outcome >> (m - 1 - k)) & 1) bits[k] = '1';
            out << "  outcome " << bits << " -> "
                << (sim.decode_table[outcome] < 0 ? std::string("unassigned")
                                                  : set.labels[sim.decode_table[outcome]])
                << '\n';
        }
    }
    double worst = 0.0;
    int unassigned = 0;
    for (int v : sim.decode_table)
        if (v < 0) ++unassigned;
    for (double s : sim.success) worst = std::max(worst, std::abs(s - 1.0));
    out << "  max |success - 1| = " << format_real(worst) << ", unassigned outcomes: "
        << unassigned << '\n';

    // The decoder, aggregated into one measurement element per state, must
    // satisfy all four discrimination conditions.
    std::vector<Matrix> elements(set.size(), Matrix::Zero(D, D));
    for (int outcome = 0; outcome < D; ++outcome)
        if (sim.decode_table[outcome] >= 0)
            elements[sim.decode_table[outcome]](outcome, outcome) = 1.0;
    const PovmConditionReport povm = povm_conditions_check(Povm(elements), set, 1e-12);
    out << "  aggregated measurement: completeness_dev=" << format_real(povm.completeness_dev)
        << ", bound_dev=" << format_real(povm.bound_dev) << ", detection_dev="
        << format_real(povm.detection_dev) << ", ppt_dev=" << format_real(povm.ppt_dev) << '\n';

    DemoChecks checks(out);
    checks.expect(worst <= 1e-12, "success probability is exactly 1 for every state");
    checks.expect(unassigned == 0, "every outcome decodes to a state");
    checks.expect(povm.all_pass(), "decoder passes all four measurement conditions at 1e-12");
    return checks.exit_code();
}

int demo_entangled_basis(const CliOptions& opts, std::ostream& out) {
    MultipartiteSpace space({2, 2});
    out << "entangled-basis demo: total_dim=4\n";

    StateSet bell{space, {}, {}};
    const std::vector<PureState> basis = bell_basis();
    static const char* names[4] = {"phi_plus", "phi_minus", "psi_plus", "psi_minus"};
    for (int i = 0; i < 4; ++i) bell.add(names[i], DensityOperator(basis[i]));
    const Verdict bell_verdict = entangled_basis_check(bell, opts.solver);
    out << "  bell basis: " << to_string(bell_verdict) << '\n';

    StateSet computational{space, {}, {}};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            computational.add("z" + std::to_string(a) + std::to_string(b),
                              DensityOperator(basis_state(space, {a, b})));
    const Verdict comp_verdict = entangled_basis_check(computational, opts.solver);
    out << "  computational basis: " << to_string(comp_verdict) << '\n';

    DemoChecks checks(out);
    checks.expect(bell_verdict == Verdict::provably_not_discriminable,
                  "a fully entangled basis is certified not discriminable");
    checks.expect(comp_verdict == Verdict::possibly_discriminable,
                  "the product basis stays inconclusive (necessary condition holds)");
    return checks.exit_code();
}

}  // namespace

int cmd_measure(const std::string& input_path, const CliOptions& opts, std::ostream& out,
                std::ostream& err) {
    const std::optional<StateSet> set = load_or_report(input_path, err);
    if (!set) return exit_input_error;
    const std::vector<MeasureRecord> records = measure_all(*set, opts);
    std::ostringstream body;
    write_measure_report(body, set->labels, records);
    if (!deliver(opts, out, body.str(), err)) return exit_input_error;
    if (!deliver_plot(opts, records, err)) return exit_input_error;
    return report_convergence(records, err);
}

int cmd_bound(const std::string& input_path, const CliOptions& opts, std::ostream& out,
              std::ostream& err) {
    const std::optional<StateSet> set = load_or_report(input_path, err);
    if (!set) return exit_input_error;
    const std::vector<MeasureRecord> records = measure_all(*set, opts);

    std::vector<double> costs;
    std::vector<SolveStatus> statuses;
    for (const MeasureRecord& rec : records) {
        costs.push_back(rec.d_ppt);
        statuses.push_back(rec.cost_status);
    }
    const BoundReport bound = make_bound_report(std::move(costs), std::move(statuses),
                                                set->space.total_dim(), opts.solver.tol);
    const CountBounds counts = state_count_bounds(records, set->space.total_dim());

    std::ostringstream body;
    write_bound_report(body, set->labels, records, bound, counts);
    if (!deliver(opts, out, body.str(), err)) return exit_input_error;
    if (!deliver_plot(opts, records, err)) return exit_input_error;
    return report_convergence(records, err);
}

int cmd_demo(const std::string& name, int m, int d, const CliOptions& opts, std::ostream& out,
             std::ostream& err) {
    try {
        if (name == "ghz") return demo_ghz(m, opts, out);
        if (name == "w") return demo_w(m, opts, out);
        if (name == "bell") return demo_bell(d, opts, out);
        if (name == "ghz-sim") return demo_ghz_sim(m, opts, out);
        if (name == "entangled-basis") return demo_entangled_basis(opts, out);
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << '\n';
        return exit_input_error;
    }
    err << "unknown demo '" << name
        << "' (available: ghz, w, bell, ghz-sim, entangled-basis)\n";
    return exit_input_error;
}

int cmd_sweep(int count, const std::vector<int>& dims, const CliOptions& opts, std::ostream& out,
              std::ostream& err) {
    if (count < 0) {
        err << "input error: count must be >= 0\n";
        return exit_input_error;
    }
    std::optional<MultipartiteSpace> space;
    try {
        space.emplace(dims);
    } catch (const std::invalid_argument& e) {
        err << "input error: dims: " << e.what() << '\n';
        return exit_input_error;
    }
    const int D = space->total_dim();
    if (D > 16) {
        err << "input error: dims: total dimension " << D
            << " exceeds the full-solver sweep limit of 16\n";
        return exit_input_error;
    }

    std::vector<std::string> labels;
    std::vector<MeasureRecord> records;
    std::vector<bool> chain_flags;
    int violations = 0;
    for (int i = 0; i < count; ++i) {
        RandomStream rng(opts.product.seed, 5000 + static_cast<std::uint64_t>(i));
        std::optional<DensityOperator> rho;
        if (i % 2 == 0) {
            rho.emplace(PureState(*space, rng.haar_vector(D)));
        } else {
            const int rank = 2 + (i / 2) % std::max(1, D - 1);
            rho.emplace(*space, rng.random_density(D, rank));
        }
        char label[32];
        std::snprintf(label, sizeof(label), "state_%04d", i);
        labels.emplace_back(label);
        records.push_back(measure_state(*rho, opts.solver, opts.product));
        const ChainReport chain = verify_chain(records.back());
        chain_flags.push_back(chain.ok);
        if (!chain.ok) {
            ++violations;
            for (const std::string& v : chain.violations)
                err << label << ": " << v << '\n';
        }
    }

    std::ostringstream body;
    write_sweep_report(body, labels, records, chain_flags);
    if (!deliver(opts, out, body.str(), err)) return exit_input_error;
    if (!deliver_plot(opts, records, err)) return exit_input_error;

    const int convergence = report_convergence(records, err);
    if (violations > 0) {
        err << violations << " state(s) violated the measure chain\n";
        return exit_numerical_failure;
    }
    return convergence;
}

}  // namespace loccbound
