// Per-state measure records, the closed-form family values, and the chain
// verifier with its negative controls.
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "loccbound/measures.hpp"

using namespace loccbound;

namespace {

bool mentions(const ChainReport& report, const std::string& needle) {
    for (const std::string& v : report.violations)
        if (v.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("ghz(3) record carries the known values and passes the chain") {
    const DensityOperator rho(ghz_state(3));
    const MeasureRecord rec = measure_state(rho);

    CHECK(rec.fully_converged());
    CHECK(rec.entropy == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(rec.support_size == 1);
    CHECK(rec.g_lower == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(rec.g_upper == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(rec.er_lower == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(rec.er_upper == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rec.er_lower <= rec.er_upper + 1e-5);
    CHECK(rec.r_ppt == doctest::Approx(2.0).epsilon(1e-4));
    CHECK(rec.d_ppt == doctest::Approx(2.0).epsilon(1e-3));

    const ChainReport chain = verify_chain(rec);
    CHECK(chain.ok);
    CHECK(chain.violations.empty());
}

TEST_CASE("w(3) record brackets the closed-form values") {
    const DensityOperator rho(w_state(3));
    const MeasureRecord rec = measure_state(rho);
    const double g = std::log2(9.0 / 4.0);

    CHECK(rec.fully_converged());
    CHECK(rec.g_lower == doctest::Approx(g).epsilon(1e-4));
    CHECK(rec.g_upper == doctest::Approx(g).epsilon(1e-5));
    // The dephased candidate is the uniform mixture of the three excited
    // basis states, giving exactly log2(3) bits.
    CHECK(rec.er_upper == doctest::Approx(std::log2(3.0)).epsilon(1e-9));
    CHECK(rec.er_lower == doctest::Approx(g).epsilon(1e-4));
    CHECK(rec.er_lower <= rec.er_upper + 1e-5);
    CHECK(verify_chain(rec).ok);
}

TEST_CASE("maximally mixed qubit pair: every quantity is forced") {
    MultipartiteSpace space({2, 2});
    const DensityOperator rho(space, Matrix::Identity(4, 4) / 4.0);
    const MeasureRecord rec = measure_state(rho);

    CHECK(rec.entropy == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(rec.support_size == 4);
    CHECK(rec.g_lower == doctest::Approx(2.0).epsilon(1e-5));
    CHECK(rec.g_upper == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(rec.er_lower == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(rec.er_upper == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(rec.r_ppt == doctest::Approx(4.0).epsilon(1e-6));
    CHECK(rec.d_ppt == 4.0);
    CHECK(verify_chain(rec).ok);
}

TEST_CASE("Bell record agrees with the closed-form robustness") {
    const PureState bell = bell_basis()[0];
    const MeasureRecord rec = measure_state(DensityOperator(bell));
    CHECK(rec.r_ppt == doctest::Approx(1.0 + analytic_bipartite_robustness(bell)).epsilon(1e-4));
    CHECK(rec.d_ppt == doctest::Approx(2.0).epsilon(1e-3));
    CHECK(verify_chain(rec).ok);
}

TEST_CASE("closed-form bipartite robustness") {
    CHECK(analytic_bipartite_robustness(bell_basis()[0]) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(analytic_bipartite_robustness(max_entangled_state(3)) ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(analytic_bipartite_robustness(max_entangled_state(4)) ==
          doctest::Approx(3.0).epsilon(1e-12));

    MultipartiteSpace space({2, 2});
    CHECK(analytic_bipartite_robustness(basis_state(space, {0, 1})) ==
          doctest::Approx(0.0).epsilon(1e-12));

    CHECK_THROWS_AS(analytic_bipartite_robustness(w_state(3)), std::invalid_argument);
}

TEST_CASE("closed-form family values") {
    for (int m : {2, 3, 5}) {
        const AnalyticValues ghz = analytic_family_values(Family::ghz, m);
        CHECK(ghz.geometric == 1.0);
        CHECK(ghz.relative_entropy == 1.0);
    }
    const AnalyticValues w3 = analytic_family_values(Family::w, 3);
    CHECK(w3.geometric == doctest::Approx(std::log2(9.0 / 4.0)).epsilon(1e-15));
    CHECK(w3.relative_entropy == w3.geometric);

    const AnalyticValues w4 = analytic_family_values(Family::w, 4);
    CHECK(w4.geometric == doctest::Approx(std::log2(64.0 / 27.0)).epsilon(1e-15));

    CHECK_THROWS_AS(analytic_family_values(Family::w, 1), std::invalid_argument);
}

TEST_CASE("chain verifier flags corrupted records by name") {
    const MeasureRecord good = measure_state(DensityOperator(ghz_state(3)));
    REQUIRE(verify_chain(good).ok);

    MeasureRecord broken = good;
    broken.d_ppt -= 0.5;
    const ChainReport d_report = verify_chain(broken);
    CHECK(!d_report.ok);
    CHECK(mentions(d_report, "d_ppt >= r_ppt"));

    broken = good;
    broken.g_lower += 0.2;
    const ChainReport g_report = verify_chain(broken);
    CHECK(!g_report.ok);
    CHECK(mentions(g_report, "g_lower <= g_upper"));

    broken = good;
    broken.r_ppt -= 0.5;
    const ChainReport r_report = verify_chain(broken);
    CHECK(!r_report.ok);
    CHECK(mentions(r_report, "r_ppt >= 2^g_lower"));

    broken = good;
    broken.er_upper = 0.0;
    const ChainReport er_report = verify_chain(broken);
    CHECK(!er_report.ok);
    CHECK(mentions(er_report, "er_lower <= er_upper"));

    broken = good;
    broken.g_lower = -0.1;
    CHECK(mentions(verify_chain(broken), "lower bounds >= 0"));
}

TEST_CASE("custom separable candidate drives the upper entropy bound") {
    MultipartiteSpace space({2, 2});
    const DensityOperator bell(bell_basis()[0]);
    const DensityOperator mixed(space, Matrix::Identity(4, 4) / 4.0);
    const MeasureRecord rec = measure_state(bell, {}, {}, &mixed);
    // Relative entropy of a pure state to the maximally mixed operator is
    // exactly two bits here (log2 of the dimension).
    CHECK(rec.er_upper == doctest::Approx(2.0).epsilon(1e-10));

    // The default candidate (dephasing) gives the tighter value 1.
    const MeasureRecord plain = measure_state(bell);
    CHECK(plain.er_upper == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("solver caps are reported through the record statuses") {
    SolverConfig capped;
    capped.max_iter = 5;
    const MeasureRecord rec = measure_state(DensityOperator(w_state(3)), capped);
    CHECK(!rec.fully_converged());
    CHECK(rec.overlap_status == SolveStatus::max_iterations);
    CHECK(rec.robustness_status == SolveStatus::max_iterations);
    CHECK(rec.cost_status == SolveStatus::max_iterations);
}
