// State-set files, report writers, and the command entry points.
#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "loccbound/commands.hpp"
#include "loccbound/rng.hpp"

using namespace loccbound;

namespace {

namespace fs = std::filesystem;

// Unique scratch directory, removed when the suite object dies.
struct Scratch {
    fs::path dir;
    Scratch() {
        dir = fs::temp_directory_path() /
              ("loccbound_test_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~Scratch() { fs::remove_all(dir); }

    std::string file(const std::string& name, const std::string& content) const {
        const fs::path p = dir / name;
        std::ofstream f(p);
        f << content;
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::ostringstream out;
    out << f.rdbuf();
    return out.str();
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    return fields;
}

bool throws_input_error_mentioning(const std::string& json_text, const std::string& needle) {
    try {
        parse_state_set(json_text);
    } catch (const InputError& e) {
        return std::string(e.what()).find(needle) != std::string::npos;
    }
    return false;
}

const char* kGhz3Json = R"({
  "version": 1,
  "dims": [2, 2, 2],
  "states": [{"label": "g3", "kind": "family", "family": "ghz", "params": {"m": 3}}]
})";

}  // namespace

TEST_CASE("family entries expand to the right states") {
    const StateSet ghz = parse_state_set(kGhz3Json);
    REQUIRE(ghz.size() == 1);
    CHECK(ghz.labels[0] == "g3");
    CHECK((ghz.states[0].matrix() - DensityOperator(ghz_state(3)).matrix())
              .cwiseAbs()
              .maxCoeff() < 1e-12);

    const StateSet bells = parse_state_set(R"({
      "version": 1, "dims": [2, 2],
      "states": [{"label": "b", "kind": "family", "family": "bell"}]})");
    REQUIRE(bells.size() == 4);
    CHECK(bells.labels[0] == "b.phi_plus");
    CHECK(bells.labels[3] == "b.psi_minus");

    const StateSet ghz_set = parse_state_set(R"({
      "version": 1, "dims": [2, 2, 2],
      "states": [{"label": "s", "kind": "family", "family": "ghz_set", "params": {"m": 3}}]})");
    REQUIRE(ghz_set.size() == 4);
    CHECK(ghz_set.labels[0] == "s.u00");
    CHECK(ghz_set.labels[3] == "s.u11");

    const StateSet me = parse_state_set(R"({
      "version": 1, "dims": [3, 3],
      "states": [{"label": "m", "kind": "family", "family": "max_entangled", "params": {"d": 3}}]})");
    REQUIRE(me.size() == 1);
    CHECK((me.states[0].matrix() - DensityOperator(max_entangled_state(3)).matrix())
              .cwiseAbs()
              .maxCoeff() < 1e-12);

    const StateSet w = parse_state_set(R"({
      "version": 1, "dims": [2, 2, 2],
      "states": [{"label": "w", "kind": "family", "family": "w", "params": {"m": 3}}]})");
    CHECK((w.states[0].matrix() - DensityOperator(w_state(3)).matrix()).cwiseAbs().maxCoeff() <
          1e-12);
}

TEST_CASE("explicit pure and mixed entries") {
    const StateSet set = parse_state_set(R"({
      "version": 1, "dims": [2, 2],
      "states": [
        {"label": "e01", "kind": "pure",
         "amplitudes": [[0, 0], [1, 0], [0, 0], [0, 0]]},
        {"label": "mix", "kind": "mixed",
         "matrix": [[[0.25,0],[0,0],[0,0],[0,0]],
                    [[0,0],[0.25,0],[0,0],[0,0]],
                    [[0,0],[0,0],[0.25,0],[0,0]],
                    [[0,0],[0,0],[0,0],[0.25,0]]]}
      ]})");
    REQUIRE(set.size() == 2);
    CHECK(std::abs(set.states[0].matrix()(1, 1).real() - 1.0) < 1e-15);
    CHECK((set.states[1].matrix() - Matrix::Identity(4, 4) / 4.0).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("parse errors name the offending field") {
    CHECK(throws_input_error_mentioning(R"({"dims": [2,2], "states": []})", "version"));
    CHECK(throws_input_error_mentioning(R"({"version": 2, "dims": [2,2], "states": []})",
                                        "version"));
    CHECK(throws_input_error_mentioning(R"({"version": 1, "states": []})", "dims"));
    CHECK(throws_input_error_mentioning(R"({"version": 1, "dims": [2, 1], "states": []})",
                                        "dims[1]"));
    CHECK(throws_input_error_mentioning(R"({"version": 1, "dims": [2, 2]})", "states"));
    CHECK(throws_input_error_mentioning(
        R"({"version": 1, "dims": [2,2], "states": []})", "at least one"));
    CHECK(throws_input_error_mentioning(
        R"({"version": 1, "dims": [2,2],
            "states": [{"label": "x", "kind": "banana"}]})",
        "kind"));
    CHECK(throws_input_error_mentioning(
        R"({"version": 1, "dims": [2,2],
            "states": [{"label": "x", "kind": "family", "family": "banana"}]})",
        "unknown family"));
    CHECK(throws_input_error_mentioning(
        R"({"version": 1, "dims": [2,2],
            "states": [{"label": "x", "kind": "pure", "amplitudes": [[1,0],[0,0]]}]})",
        "states[0].amplitudes"));
    CHECK(throws_input_error_mentioning(
        R"({"version": 1, "dims": [2,2],
            "states": [{"label": "x", "kind": "pure",
                        "amplitudes": [[0.5,0],[0,0],[0,0],[0,0]]}]})",
        "states[0]"));
    CHECK(throws_input_error_mentioning(
        R"({"version": 1, "dims": [2,2],
            "states": [{"label": "x", "kind": "family", "family": "ghz", "params": {"m": 3}}]})",
        "dims do not match"));
    CHECK(throws_input_error_mentioning("{oops", "not valid JSON"));
    CHECK(throws_input_error_mentioning("[1, 2]", "top level"));
}

TEST_CASE("serialization round trip is exact") {
    MultipartiteSpace space({2, 2});
    StateSet set{space, {}, {}};
    set.add("bell", DensityOperator(bell_basis()[0]));
    RandomStream rng(99);
    set.add("random", DensityOperator(space, rng.random_density(4, 3)));

    // Entries survive the text form exactly; re-validation on load renormalizes
    // the trace, which can shift entries by one ulp.
    const std::string text = serialize_state_set(set);
    const StateSet back = parse_state_set(text);
    REQUIRE(back.size() == 2);
    CHECK(back.labels == set.labels);
    CHECK(back.space == set.space);
    for (int i = 0; i < 2; ++i)
        CHECK((back.states[i].matrix() - set.states[i].matrix()).cwiseAbs().maxCoeff() < 1e-15);
    // Once the trace renormalization has been applied, the text form is a
    // fixed point.
    const std::string text2 = serialize_state_set(back);
    CHECK(serialize_state_set(parse_state_set(text2)) == text2);

    Scratch scratch;
    const std::string path = scratch.path("round_trip.json");
    save_state_set(set, path);
    const StateSet loaded = load_state_set(path);
    CHECK((loaded.states[0].matrix() - set.states[0].matrix()).cwiseAbs().maxCoeff() < 1e-15);

    CHECK_THROWS_AS(load_state_set(scratch.path("missing.json")), InputError);
}

TEST_CASE("report number formatting") {
    CHECK(format_real(2.0) == "2");
    CHECK(format_real(1.0 / 3.0) == "0.333333333333");
    CHECK(format_real(4.0 / 3.0) == "1.33333333333");
    CHECK(format_real(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(format_real(0.0) == "0");
}

TEST_CASE("report writers emit the fixed layout") {
    MeasureRecord rec;
    rec.entropy = 0.0;
    rec.support_size = 1;
    rec.g_lower = 1.0;
    rec.g_upper = 1.0;
    rec.er_lower = 1.0;
    rec.er_upper = 1.0;
    rec.r_ppt = 2.0;
    rec.d_ppt = 2.0;

    std::ostringstream measure;
    write_measure_report(measure, {"s"}, {rec});
    std::istringstream lines(measure.str());
    std::string header, row;
    std::getline(lines, header);
    std::getline(lines, row);
    CHECK(header ==
          "label,entropy,support_size,g_lower,g_upper,er_lower,er_upper,"
          "r_ppt,d_ppt,overlap_status,robustness_status,cost_status");
    CHECK(row == "s,0,1,1,1,1,1,2,2,converged,converged,converged");

    std::ostringstream sweep;
    write_sweep_report(sweep, {"s"}, {rec}, {true});
    CHECK(sweep.str().find("cost_status,chain_ok") != std::string::npos);
    CHECK(sweep.str().find("converged,true") != std::string::npos);

    const BoundReport bound =
        make_bound_report({2.0, 2.0}, std::vector<SolveStatus>(2, SolveStatus::converged), 4,
                          1e-6);
    const CountBounds counts = state_count_bounds({rec, rec}, 4);
    std::ostringstream bound_out;
    write_bound_report(bound_out, {"a", "b"}, {rec, rec}, bound, counts);
    const std::string text = bound_out.str();
    CHECK(text.find("# total_dim,4\n") != std::string::npos);
    CHECK(text.find("# state_count,2\n") != std::string::npos);
    CHECK(text.find("# sum_d_ppt,4\n") != std::string::npos);
    CHECK(text.find("# verdict,possibly_discriminable\n") != std::string::npos);
    CHECK(text.find("# saturated,true\n") != std::string::npos);
    CHECK(text.find("# n_bound_d_ppt,2,2\n") != std::string::npos);
    CHECK(text.find("# n_bound_g_ppt,2,2\n") != std::string::npos);

    std::ostringstream svg;
    write_chain_scatter_svg(svg, {rec, rec});
    CHECK(svg.str().rfind("<svg ", 0) == 0);
    CHECK(svg.str().find("</svg>") != std::string::npos);
    size_t circles = 0, pos = 0;
    while ((pos = svg.str().find("<circle", pos)) != std::string::npos) {
        ++circles;
        pos += 7;
    }
    CHECK(circles == 2);
}

TEST_CASE("measure command") {
    Scratch scratch;
    const std::string input = scratch.file("ghz3.json", kGhz3Json);

    std::ostringstream out, err;
    CliOptions opts;
    REQUIRE(cmd_measure(input, opts, out, err) == exit_ok);
    CHECK(err.str().empty());

    std::istringstream lines(out.str());
    std::string header, row;
    std::getline(lines, header);
    std::getline(lines, row);
    const std::vector<std::string> fields = split_csv(row);
    REQUIRE(fields.size() == 12);
    CHECK(fields[0] == "g3");
    CHECK(std::stod(fields[3]) == doctest::Approx(1.0).epsilon(1e-4));  // g_lower
    CHECK(std::stod(fields[4]) == doctest::Approx(1.0).epsilon(1e-5));  // g_upper
    CHECK(std::stod(fields[8]) == doctest::Approx(2.0).epsilon(1e-3));  // d_ppt
    CHECK(fields[9] == "converged");

    // Output and plot redirection.
    std::ostringstream out2, err2;
    CliOptions redirected;
    redirected.out_path = scratch.path("report.csv");
    redirected.plot_path = scratch.path("plot.svg");
    REQUIRE(cmd_measure(input, redirected, out2, err2) == exit_ok);
    CHECK(out2.str().empty());
    CHECK(slurp(redirected.out_path).rfind("label,", 0) == 0);
    CHECK(slurp(redirected.plot_path).rfind("<svg ", 0) == 0);
}

TEST_CASE("measure command reports input failures") {
    Scratch scratch;
    std::ostringstream out, err;
    CHECK(cmd_measure(scratch.path("nope.json"), {}, out, err) == exit_input_error);
    CHECK(err.str().find("input error") != std::string::npos);

    const std::string malformed = scratch.file("bad.json", "{oops");
    std::ostringstream out2, err2;
    CHECK(cmd_measure(malformed, {}, out2, err2) == exit_input_error);
    CHECK(err2.str().find("not valid JSON") != std::string::npos);

    const std::string not_normalized = scratch.file("norm.json", R"({
      "version": 1, "dims": [2, 2],
      "states": [{"label": "x", "kind": "pure",
                  "amplitudes": [[0.5,0],[0,0],[0,0],[0,0]]}]})");
    std::ostringstream out3, err3;
    CHECK(cmd_measure(not_normalized, {}, out3, err3) == exit_input_error);
    CHECK(err3.str().find("states[0]") != std::string::npos);
}

TEST_CASE("bound command emits the ensemble verdict") {
    Scratch scratch;
    const std::string input = scratch.file("bells.json", R"({
      "version": 1, "dims": [2, 2],
      "states": [{"label": "b", "kind": "family", "family": "bell"}]})");

    std::ostringstream out, err;
    REQUIRE(cmd_bound(input, {}, out, err) == exit_ok);
    const std::string text = out.str();
    CHECK(text.find("# verdict,provably_not_discriminable\n") != std::string::npos);
    CHECK(text.find("# total_dim,4\n") != std::string::npos);
    CHECK(text.find("# n_bound_d_ppt,2,") != std::string::npos);
}

TEST_CASE("demo command rejects unknown names and bad parameters") {
    std::ostringstream out, err;
    CHECK(cmd_demo("nope", 3, 2, {}, out, err) == exit_input_error);
    CHECK(err.str().find("unknown demo") != std::string::npos);

    std::ostringstream out2, err2;
    CHECK(cmd_demo("bell", 3, 1, {}, out2, err2) == exit_input_error);

    std::ostringstream out3, err3;
    CHECK(cmd_demo("ghz", 1, 2, {}, out3, err3) == exit_input_error);
}

TEST_CASE("sweep command: determinism, empty runs, and input limits") {
    CliOptions opts;
    std::ostringstream first, second, err;
    REQUIRE(cmd_sweep(4, {2, 2}, opts, first, err) == exit_ok);
    REQUIRE(cmd_sweep(4, {2, 2}, opts, second, err) == exit_ok);
    CHECK(first.str() == second.str());
    CHECK(first.str().find("chain_ok") != std::string::npos);

    // Different seeds change the sampled states.
    CliOptions other = opts;
    other.product.seed = 7;
    std::ostringstream third;
    REQUIRE(cmd_sweep(4, {2, 2}, other, third, err) == exit_ok);
    CHECK(third.str() != first.str());

    std::ostringstream empty_out, empty_err;
    REQUIRE(cmd_sweep(0, {2, 2}, opts, empty_out, empty_err) == exit_ok);
    CHECK(empty_out.str() ==
          "label,entropy,support_size,g_lower,g_upper,er_lower,er_upper,"
          "r_ppt,d_ppt,overlap_status,robustness_status,cost_status,chain_ok\n");

    std::ostringstream out, err_limit;
    CHECK(cmd_sweep(1, {4, 5}, opts, out, err_limit) == exit_input_error);
    CHECK(err_limit.str().find("16") != std::string::npos);
    CHECK(cmd_sweep(-1, {2, 2}, opts, out, err_limit) == exit_input_error);
    CHECK(cmd_sweep(1, {1, 2}, opts, out, err_limit) == exit_input_error);
}
