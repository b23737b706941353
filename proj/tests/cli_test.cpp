#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "nilcomm/centralizer/jordan.hpp"
#include "nilcomm/cli/app.hpp"
#include "nilcomm/cli/report.hpp"
#include "nilcomm/exactalg/linalg.hpp"
#include "nilcomm/exactalg/matrix_json.hpp"
#include "nilcomm/hilbert/correspondence.hpp"
#include "nilcomm/hilbert/sampling.hpp"

using namespace nilcomm;
using nilcomm::cli::exit_check_failed;
using nilcomm::cli::exit_invalid_input;
using nilcomm::cli::exit_ok;
using nilcomm::cli::exit_usage;

namespace {

const RationalField QQ;

struct Run {
  int code;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Run nilcomm_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const nlohmann::json& j) {
  const auto path = std::filesystem::temp_directory_path() / ("nilcomm_cli_test_" + name + ".json");
  std::ofstream(path) << j.dump();
  return path.string();
}

}  // namespace

TEST_CASE("components tables") {
  auto q2 = nilcomm_run({"components", "--algebra", "q2", "--n", "8", "--json"});
  REQUIRE(q2.code == exit_ok);
  const auto j = q2.json();
  CHECK(j.at("schema") == cli::report_schema);
  CHECK(j.at("command") == "components");
  CHECK(j.at("results").at("count") == 4);
  for (const auto& rec : j.at("results").at("components")) CHECK(rec.at("dim") == 50);

  const auto p1 = nilcomm_run({"components", "--algebra", "p1", "--n", "5", "--json"}).json();
  REQUIRE(p1.at("results").at("count") == 1);
  CHECK(p1.at("results").at("components")[0].at("dim") == 20);
  CHECK(nilcomm_run({"components", "--algebra", "p2", "--n", "3", "--json"}).json().at("results").at("count") == 1);

  const auto text = nilcomm_run({"components", "--algebra", "q2", "--n", "8"});
  CHECK(text.out.find("((3,(4)),4,1)") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(nilcomm_run({}).code == exit_usage);
  CHECK(nilcomm_run({"frobnicate"}).code == exit_usage);
  CHECK(nilcomm_run({"components", "--algebra", "q2"}).code == exit_usage);
  CHECK(nilcomm_run({"components", "--algebra", "q3", "--n", "5"}).code == exit_usage);
  CHECK(nilcomm_run({"components", "--algebra", "q2", "--n", "1"}).code == exit_usage);
  CHECK(nilcomm_run({"components", "--algebra", "q2", "--n", "x"}).code == exit_usage);
  CHECK(nilcomm_run({"components", "--algebra", "q2", "--n", "4", "--field", "r"}).code == exit_usage);
  CHECK(nilcomm_run({"verify", "--suite", "nothing"}).code == exit_usage);
  CHECK(nilcomm_run({"classify", "--matrix", "/nonexistent/file.json", "--algebra", "p1"}).code == exit_usage);
  CHECK(nilcomm_run({"pair2ideal", "--random", "2"}).code == exit_usage);
  CHECK(nilcomm_run({"--help"}).code == exit_ok);
}

TEST_CASE("classify") {
  for (int n = 1; n <= 5; ++n) {
    const auto x = jordan_matrix(MarkedPartition(n, Partition{}), QQ);
    const auto r = nilcomm_run({"classify", "--matrix", write_temp("regular", matrix_to_json(x)), "--algebra", "p1", "--json"});
    REQUIRE(r.code == exit_ok);
    CHECK(r.json().at("results").at("label_text") == "(" + std::to_string(n) + ",())");
  }

  Rng rng(7);
  const MarkedPartition2 mu(MarkedPartition(1, Partition({2})), 2, 1);
  const auto normal = jordan_matrix(mu, QQ);
  const auto [g, ginv] = random_unimodular_pair(FlagAlgebra::nested(2, 4), QQ, rng);
  const auto x = g * normal * ginv;
  const auto r = nilcomm_run({"classify", "--matrix", write_temp("conjugate", matrix_to_json(x)), "--algebra", "q2",
                              "--certify", "--json"});
  REQUIRE(r.code == exit_ok);
  const auto j = r.json();
  CHECK(j.at("results").at("label_text") == mu.to_string());
  const auto cert = matrix_from_json(j.at("results").at("conjugator"), QQ);
  CHECK(FlagAlgebra::nested(2, 4).contains(cert));
  CHECK(cert * x * inverse(cert) == normal);
  CHECK(j.at("counts").at("passed") == 1);

  const auto identity = write_temp("identity", matrix_to_json(Matrix<Rational>::identity(3, QQ)));
  CHECK(nilcomm_run({"classify", "--matrix", identity, "--algebra", "p1"}).code == exit_invalid_input);
  // Nilpotent but outside p1: e_1 is not an eigenvector.
  const auto outside = write_temp("outside", matrix_to_json(Matrix<Rational>::from_ints({{0, 0}, {1, 0}}, QQ)));
  CHECK(nilcomm_run({"classify", "--matrix", outside, "--algebra", "p1"}).code == exit_invalid_input);
  const auto garbage = std::filesystem::temp_directory_path() / "nilcomm_cli_test_garbage.json";
  std::ofstream(garbage) << "{not json";
  CHECK(nilcomm_run({"classify", "--matrix", garbage.string(), "--algebra", "p1"}).code == exit_usage);
}

TEST_CASE("pair2ideal") {
  for (int n = 1; n <= 6; ++n) {
    Vec<Rational> v(n, QQ.zero());
    v[n - 1] = QQ.one();
    const CommutingTriple<Rational> t{jordan_matrix(Partition({n}), QQ), Matrix<Rational>(n, n, QQ), v};
    const auto r = nilcomm_run({"pair2ideal", "--triple", write_temp("jordan", triple_to_json(t)), "--json"});
    REQUIRE(r.code == exit_ok);
    const auto ideals = r.json().at("results").at("ideals");
    REQUIRE(ideals.size() == 1);
    CHECK(ideals[0].at("text") == (n == 1 ? "(x, y)" : "(y, x^" + std::to_string(n) + ")"));
  }

  // e_1 generates only a line.
  const CommutingTriple<Rational> stuck{jordan_matrix(Partition({3}), QQ), Matrix<Rational>(3, 3, QQ),
                                        Vec<Rational>{QQ.one(), QQ.zero(), QQ.zero()}};
  CHECK(nilcomm_run({"pair2ideal", "--triple", write_temp("stuck", triple_to_json(stuck))}).code == exit_invalid_input);
  const CommutingTriple<Rational> noncommuting{jordan_matrix(Partition({3}), QQ), jordan_matrix(Partition({3}), QQ).transpose(),
                                               Vec<Rational>(3, QQ.one())};
  CHECK(nilcomm_run({"pair2ideal", "--triple", write_temp("noncommuting", triple_to_json(noncommuting))}).code ==
        exit_invalid_input);

  const auto sampled = nilcomm_run({"pair2ideal", "--random", "10", "--algebra", "p2:5", "--roundtrip", "--json"});
  REQUIRE(sampled.code == exit_ok);
  CHECK(sampled.json().at("counts").at("passed") == 10);
  for (const auto& s : sampled.json().at("results").at("samples")) {
    REQUIRE(s.at("ideals").size() == 2);
    CHECK(s.at("ideals")[0].at("colength") == 5);
    CHECK(s.at("ideals")[1].at("colength") == 3);
  }
  CHECK(nilcomm_run({"pair2ideal", "--random", "3", "--algebra", "q4:4", "--roundtrip", "--field", "fp:10007"}).code ==
        exit_ok);
}

TEST_CASE("ideal2pair") {
  const auto r = nilcomm_run({"ideal2pair", "--fine", "(x^2, x*y, y^2)", "--coarse", "(x, y)", "--roundtrip", "--json"});
  REQUIRE(r.code == exit_ok);
  const auto results = r.json().at("results");
  CHECK(results.at("k") == 2);
  CHECK(results.at("ambient") == "p2:3");
  const auto t = triple_from_json(results.at("triple"), QQ);
  t.validate();
  CHECK(FlagAlgebra::parabolic(2, 3).contains(t.x));
  CHECK(FlagAlgebra::parabolic(2, 3).contains(t.y));
  CHECK(evaluation_ideal(t).to_string() == "(x^2, x*y, y^2)");

  const auto curve = nilcomm_run({"ideal2pair", "--fine", "(y - x^2, x^4)", "--roundtrip", "--order", "lex", "--json"});
  REQUIRE(curve.code == exit_ok);
  CHECK(curve.json().at("results").at("ambient") == "gl:4");

  // JSON ideal files round trip through the text form.
  const auto fine = parse_ideal("(x^3, y - 2*x^2)", QQ);
  const auto from_file = nilcomm_run({"ideal2pair", "--fine", write_temp("fine", ideal_to_json(fine)), "--coarse",
                                      "(y, x^2)", "--roundtrip", "--json"});
  REQUIRE(from_file.code == exit_ok);
  CHECK(from_file.json().at("results").at("k") == 1);

  CHECK(nilcomm_run({"ideal2pair", "--fine", "(x^2, y)", "--coarse", "(x, y^2)"}).code == exit_invalid_input);
  CHECK(nilcomm_run({"ideal2pair", "--fine", "(x)"}).code == exit_invalid_input);
  CHECK(nilcomm_run({"ideal2pair", "--fine", "(1)"}).code == exit_invalid_input);
}

TEST_CASE("verify suites") {
  const auto centralizer = nilcomm_run({"verify", "--suite", "centralizer", "--n-max", "5", "--json"});
  CHECK(centralizer.code == exit_ok);
  CHECK(centralizer.json().at("counts").at("failed") == 0);
  const auto charts = nilcomm_run({"verify", "--suite", "charts", "--n-max", "7", "--samples", "5", "--field", "fp:10007"});
  CHECK(charts.code == exit_ok);
  CHECK(charts.out.find("FAIL") == std::string::npos);
  const auto components = nilcomm_run({"verify", "--suite", "components", "--n-max", "6", "--json"}).json();
  for (const auto& c : components.at("checks")) CHECK(c.at("passed") == true);
}

TEST_CASE("reports are reproducible") {
  const std::vector<std::string> args{"pair2ideal", "--random", "4", "--algebra", "p1:4", "--roundtrip", "--json", "--seed", "99"};
  const auto first = nilcomm_run(args), second = nilcomm_run(args);
  CHECK(first.out == second.out);
  auto other = args;
  other.back() = "100";
  CHECK(nilcomm_run(other).out != first.out);
  CHECK(first.json().at("seed") == 99);
  CHECK_FALSE(first.json().contains("seconds"));

  const std::vector<std::string> verify{"verify", "--suite", "correspondence", "--n-max", "4", "--samples", "3", "--json"};
  CHECK(nilcomm_run(verify).out == nilcomm_run(verify).out);
  auto timed = verify;
  timed.push_back("--timing");
  CHECK(nilcomm_run(timed).json().contains("seconds"));
}
