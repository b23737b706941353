#include "nilcomm/cli/app.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "nilcomm/cli/report.hpp"
#include "nilcomm/centralizer/jordan.hpp"
#include "nilcomm/cli/suites.hpp"
#include "nilcomm/exactalg/linalg.hpp"
#include "nilcomm/exactalg/matrix_json.hpp"
#include "nilcomm/hilbert/correspondence.hpp"
#include "nilcomm/hilbert/ideal.hpp"
#include "nilcomm/hilbert/sampling.hpp"
#include "nilcomm/orbits/components.hpp"
#include "nilcomm/orbits/flag_orbits.hpp"

namespace nilcomm::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Well-formed input that is not a valid mathematical object for the command.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t seed = default_seed;
  std::string field = "q";
  bool field_given = false;
  bool json = false;
  bool timing = false;
};

struct Outcome {
  RunReport report;
  std::string text;
  int code = exit_ok;
};

nlohmann::json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("'" + path + "' is not JSON: " + e.what());
  }
}

FieldSpec parse_field(const std::string& text) {
  try {
    return FieldSpec::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// An explicit --field wins; otherwise the field recorded in the input, else Q.
FieldSpec resolve_field(const Globals& g, const nlohmann::json* input) {
  if (g.field_given || !input || !input->is_object() || !input->contains("field")) return parse_field(g.field);
  return FieldSpec::parse(input->at("field").get<std::string>());
}

FlagAlgebra parse_algebra(const std::string& name, int n) {
  try {
    if (name == "p1") return FlagAlgebra::parabolic(1, n);
    if (name == "p2") return FlagAlgebra::parabolic(2, n);
    if (name == "q2") return FlagAlgebra::nested(2, n);
    return FlagAlgebra::parse(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

template <class K>
std::string matrix_text(const Matrix<K>& m) {
  const auto& field = m.field();
  std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
  std::size_t width = 1;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) width = std::max(width, (cells[r][c] = field.format(m(r, c))).size());
  std::ostringstream out;
  for (const auto& row : cells) {
    out << "  [";
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? " " : "") << std::string(width - row[c].size(), ' ') << row[c];
    out << "]\n";
  }
  return out.str();
}

template <class K>
std::string vector_text(const Vec<K>& v, const Field<K>& field) {
  std::string out = "  (";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + field.format(v[i]);
  return out + ")\n";
}

std::string padded(std::string s, std::size_t width) {
  if (s.size() < width) s += std::string(width - s.size(), ' ');
  return s;
}

Outcome cmd_components(const std::string& algebra, int n, const Globals& g) {
  if (algebra != "p1" && algebra != "p2" && algebra != "q2") throw UsageError("--algebra must be p1, p2 or q2");
  if (n < 2) throw UsageError("--n must be at least 2");
  const FlagAlgebra w = parse_algebra(algebra, n);
  Outcome o;
  o.report.arguments = {{"algebra", algebra}, {"n", n}};
  visit_field(parse_field(g.field), [&](const auto& field) {
    o.report.field = field.spec().json_name();
    const auto comps = algebra == "p1" ? components_p1(n, field) : components_2(n, w, field);
    nlohmann::json list = nlohmann::json::array();
    std::ostringstream text;
    text << comps.size() << " component(s) of the commuting nilpotent variety of " << w.name() << " (algebra dim " << w.dim()
         << ")\n";
    std::size_t width = 5;
    for (const auto& rec : comps) width = std::max(width, to_string(rec.label).size());
    text << padded("label", width) << "  c  dim  jordan type\n";
    for (const auto& rec : comps) {
      list.push_back(to_json(rec));
      text << padded(to_string(rec.label), width) << "  " << padded(std::to_string(rec.codim), 2) << " "
           << padded(std::to_string(rec.dimension), 4) << " " << rec.jordan_type.to_string() << "\n";
    }
    o.report.results = {{"ambient", w.name()}, {"count", comps.size()}, {"components", list}};
    o.text = text.str();
  });
  return o;
}

template <class K>
void classify_matrix(const Matrix<K>& x, const std::string& algebra, bool certify, Outcome& o) {
  const auto& field = x.field();
  if (x.rows() != x.cols() || x.rows() == 0) throw InputError("matrix must be square and nonempty");
  const int n = static_cast<int>(x.rows());
  if (algebra == "q2" && n < 2) throw InputError("q2 needs n >= 2");
  const FlagAlgebra w = parse_algebra(algebra, n);

  Matrix<K> conjugator = x, normal = x;
  std::string label_text;
  nlohmann::json label;
  if (algebra == "p1") {
    const auto res = normalize_p1(x);
    label = to_json(res.label);
    label_text = res.label.to_string();
    conjugator = res.conjugator;
    normal = jordan_matrix(res.label, field);
  } else {
    const auto res = normalize_q2(x);
    label = to_json(res.label);
    label_text = res.label.to_string();
    conjugator = res.conjugator;
    normal = jordan_matrix(res.label, field);
  }
  o.report.results = {{"ambient", w.name()}, {"label", label}, {"label_text", label_text}};
  o.text = "orbit of the matrix in " + w.name() + ": " + label_text + "\n";
  if (!certify) return;

  CheckResult check{"certificate", false, "", nlohmann::json::object()};
  check.passed = w.contains(conjugator) && !is_zero(determinant(conjugator)) && conjugator * x == normal * conjugator;
  check.summary = check.passed ? "g lies in the group and g x g^-1 is the normal form" : "certificate failed";
  o.report.results["conjugator"] = matrix_to_json(conjugator);
  o.report.results["normal_form"] = matrix_to_json(normal);
  o.report.checks.push_back(check);
  o.text += "conjugator g with g x g^-1 = normal form (" + std::string(check.passed ? "verified" : "NOT verified") +
            "):\n" + matrix_text(conjugator) + "normal form:\n" + matrix_text(normal);
  if (!check.passed) o.code = exit_check_failed;
}

Outcome cmd_classify(const std::string& path, const std::string& algebra, bool certify, const Globals& g) {
  if (algebra != "p1" && algebra != "q2") throw UsageError("--algebra must be p1 or q2");
  const auto input = read_json(path);
  Outcome o;
  o.report.arguments = {{"matrix", path}, {"algebra", algebra}, {"certify", certify}};
  const AnyMatrix any = [&] {
    if (g.field_given)
      return visit_field(parse_field(g.field), [&](const auto& field) { return AnyMatrix(matrix_from_json(input, field)); });
    return matrix_from_json(input);
  }();
  std::visit(
      [&](const auto& x) {
        o.report.field = x.field().spec().json_name();
        classify_matrix(x, algebra, certify, o);
      },
      any);
  return o;
}

template <class K>
nlohmann::json chain_json(const std::vector<StaircaseIdeal<K>>& chain, std::string& text) {
  nlohmann::json ideals = nlohmann::json::array();
  for (const auto& ideal : chain) {
    ideals.push_back({{"colength", ideal.colength()}, {"text", ideal.to_string()}, {"ideal", ideal_to_json(ideal)}});
    text += "  colength " + std::to_string(ideal.colength()) + ": " + ideal.to_string() + "\n";
  }
  return ideals;
}

struct Pair2IdealArgs {
  std::string triple;
  int random = 0;
  std::string algebra;
  std::string order = "graded";
  bool roundtrip = false;
};

Outcome cmd_pair2ideal(const Pair2IdealArgs& args, const Globals& g) {
  if (args.triple.empty() == (args.random == 0)) throw UsageError("give exactly one of --triple and --random");
  if (args.random < 0) throw UsageError("--random must be positive");
  const MonomialOrder order = [&] {
    try {
      return parse_monomial_order(args.order);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  Outcome o;
  o.report.seed = g.seed;
  o.report.arguments = {{"algebra", args.algebra}, {"order", args.order}, {"roundtrip", args.roundtrip}};

  if (!args.triple.empty()) {
    o.report.arguments["triple"] = args.triple;
    const auto input = read_json(args.triple);
    visit_field(resolve_field(g, &input), [&](const auto& field) {
      using K = std::decay_t<decltype(field.zero())>;
      o.report.field = field.spec().json_name();
      const auto t = triple_from_json(input, field);
      t.validate();
      const FlagAlgebra w = args.algebra.empty() ? FlagAlgebra::full(t.n()) : parse_algebra(args.algebra, t.n());
      if (w.n() != t.n()) throw InputError("algebra " + w.name() + " does not act on K^" + std::to_string(t.n()));
      if (!w.contains(t.x) || !w.contains(t.y)) throw InputError("x and y do not lie in " + w.name());
      if (!is_cyclic(t).cyclic) throw InputError("v is not a cyclic vector for (x, y)");
      o.text = "nested ideals of the triple in " + w.name() + ":\n";
      const auto chain = nested_ideals(t, w, order);
      o.report.results = {{"ambient", w.name()}, {"ideals", chain_json(chain, o.text)}};
      if (args.roundtrip) {
        const RoundTrip<K> trip = round_trip(t, w, order);
        o.report.checks.push_back({"round-trip", trip.passed, trip.passed ? "conjugate to the rebuilt triple" : trip.failure,
                                   nlohmann::json::object()});
        if (trip.conjugator) o.report.results["conjugator"] = matrix_to_json(*trip.conjugator);
        o.text += std::string("round trip: ") + (trip.passed ? "PASS" : "FAIL (" + trip.failure + ")") + "\n";
      }
    });
  } else {
    if (args.algebra.empty()) throw UsageError("--random needs --algebra");
    o.report.arguments["random"] = args.random;
    visit_field(parse_field(g.field), [&](const auto& field) {
      o.report.field = field.spec().json_name();
      const FlagAlgebra w = FlagAlgebra::parse(args.algebra);
      Rng rng(g.seed);
      nlohmann::json samples = nlohmann::json::array();
      int passed = 0;
      for (int s = 0; s < args.random; ++s) {
        const auto t = random_cyclic_triple(w, field, rng);
        std::string text;
        nlohmann::json entry{{"triple", triple_to_json(t)}, {"ideals", chain_json(nested_ideals(t, w, order), text)}};
        o.text += "sample " + std::to_string(s) + ":\n" + text;
        if (args.roundtrip) {
          const auto trip = round_trip(t, w, order);
          std::string id = std::to_string(s);
          id = "round-trip." + std::string(6 - std::min<std::size_t>(6, id.size()), '0') + id;
          o.report.checks.push_back({id, trip.passed, trip.passed ? "conjugate to the rebuilt triple" : trip.failure,
                                     nlohmann::json::object()});
          passed += trip.passed;
        }
        samples.push_back(std::move(entry));
      }
      o.report.results = {{"ambient", w.name()}, {"samples", samples}};
      if (args.roundtrip)
        o.text += "round trip: " + std::to_string(passed) + "/" + std::to_string(args.random) + " PASS\n";
    });
  }
  if (o.report.failed() > 0) o.code = exit_check_failed;
  return o;
}

struct Ideal2PairArgs {
  std::string fine;
  std::string coarse;
  std::string order;
  bool roundtrip = false;
};

bool is_ideal_text(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  return first != std::string::npos && s[first] == '(';
}

Outcome cmd_ideal2pair(const Ideal2PairArgs& args, const Globals& g) {
  std::optional<nlohmann::json> fine_json, coarse_json;
  if (!is_ideal_text(args.fine)) fine_json = read_json(args.fine);
  if (!args.coarse.empty() && !is_ideal_text(args.coarse)) coarse_json = read_json(args.coarse);
  const nlohmann::json* field_source = fine_json ? &*fine_json : coarse_json ? &*coarse_json : nullptr;

  Outcome o;
  o.report.arguments = {{"fine", args.fine}, {"coarse", args.coarse}, {"order", args.order}, {"roundtrip", args.roundtrip}};
  visit_field(resolve_field(g, field_source), [&](const auto& field) {
    using K = std::decay_t<decltype(field.zero())>;
    o.report.field = field.spec().json_name();
    std::optional<MonomialOrder> order;
    if (!args.order.empty()) {
      try {
        order = parse_monomial_order(args.order);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    auto load = [&](const std::string& spec, const std::optional<nlohmann::json>& j) {
      auto ideal = j ? ideal_from_json(*j, field) : parse_ideal(spec, field, order.value_or(MonomialOrder::graded));
      if (!order) order = ideal.order();
      if (ideal.order() != *order)
        ideal = StaircaseIdeal<K>::from_generators(ideal.reduced_generators(), ideal.cap(), field, *order);
      return ideal;
    };
    const auto fine = load(args.fine, fine_json);
    const int n = fine.colength();
    if (n < 1) throw InputError("the fine ideal must have positive colength");
    std::vector<StaircaseIdeal<K>> expected{fine};
    int k = n;
    if (!args.coarse.empty()) {
      const auto coarse = load(args.coarse, coarse_json);
      if (!coarse.contains(fine)) throw InputError("the fine ideal is not contained in the coarse one");
      k = n - coarse.colength();
      if (k > 0 && k < n) expected.push_back(coarse);
    }
    const FlagAlgebra w = FlagAlgebra::parabolic(k, n);
    const auto built = pair_from_chain(expected);
    const auto& t = built.triple;
    o.report.results = {{"ambient", w.name()}, {"n", n}, {"k", k}, {"triple", triple_to_json(t)}};
    o.text = "triple in " + w.name() + " (n = " + std::to_string(n) + ", k = " + std::to_string(k) + ")\nx:\n" +
             matrix_text(t.x) + "y:\n" + matrix_text(t.y) + "v:\n" + vector_text(t.v, field);
    if (args.roundtrip) {
      const RoundTrip<K> trip = round_trip(t, w, *order);
      bool same = trip.chain.size() == expected.size();
      for (std::size_t j = 0; same && j < expected.size(); ++j) same = trip.chain[j] == expected[j];
      const bool passed = trip.passed && same;
      o.report.checks.push_back({"round-trip", passed,
                                 !same ? "nested ideals differ from the input" : trip.passed ? "input ideals recovered" : trip.failure,
                                 nlohmann::json::object()});
      o.text += std::string("round trip: ") + (passed ? "PASS" : "FAIL") + "\n";
      if (!passed) o.code = exit_check_failed;
    }
  });
  return o;
}

Outcome cmd_verify(const std::string& suite, int n_max, int samples, const Globals& g) {
  if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw UsageError("unknown suite '" + suite + "'");
  if (n_max < 0 || samples < 0) throw UsageError("--n-max and --samples must be positive");
  SuiteOptions options;
  options.n_max = n_max;
  options.samples = samples;
  options.seed = g.seed;
  options.field = parse_field(g.field);
  Outcome o;
  o.report.seed = g.seed;
  o.report.field = options.field.json_name();
  o.report.arguments = {{"suite", suite}, {"n_max", n_max}, {"samples", samples}};
  o.report.checks = run_checks(suite_checks(suite, options), g.seed, thread_limit());
  o.report.results = {{"suite", suite}};
  std::ostringstream text;
  for (const auto& c : o.report.checks) text << (c.passed ? "PASS  " : "FAIL  ") << c.id << "  " << c.summary << "\n";
  text << o.report.checks.size() << " checks: " << o.report.passed() << " passed, " << o.report.failed() << " failed\n";
  o.text = text.str();
  if (o.report.failed() > 0) o.code = exit_check_failed;
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Commuting nilpotent matrices in flag algebras and nested punctual ideals, in exact arithmetic.", "nilcomm"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "seed for every random draw")->capture_default_str();
  auto* field_opt = app.add_option("--field", g.field, "coefficient field: q or fp:<prime>")->capture_default_str();
  app.add_flag("--json", g.json, "print the JSON report instead of text");
  app.add_flag("--timing", g.timing, "add wall time to the JSON report");

  std::string comp_algebra;
  int comp_n = 0;
  auto* components = app.add_subcommand("components", "list the irreducible components for p1, p2 or q2");
  components->add_option("--algebra", comp_algebra, "p1, p2 or q2")->required();
  components->add_option("--n", comp_n, "matrix size")->required();

  std::string cls_matrix, cls_algebra;
  bool certify = false;
  auto* classify = app.add_subcommand("classify", "orbit label of a nilpotent matrix in p1 or q2");
  classify->add_option("--matrix", cls_matrix, "matrix JSON file, or - for stdin")->required();
  classify->add_option("--algebra", cls_algebra, "p1 or q2")->required();
  classify->add_flag("--certify", certify, "emit and check a conjugating element");

  Pair2IdealArgs p2i;
  auto* pair2ideal = app.add_subcommand("pair2ideal", "nested ideals of a cyclic commuting triple");
  pair2ideal->add_option("--triple", p2i.triple, "triple JSON file, or - for stdin");
  pair2ideal->add_option("--random", p2i.random, "sample this many random cyclic triples instead");
  pair2ideal->add_option("--algebra", p2i.algebra, "flag algebra, e.g. p2:5, q3:4, flag:1,3,5 (default gl)");
  pair2ideal->add_option("--order", p2i.order, "monomial order: graded or lex")->capture_default_str();
  pair2ideal->add_flag("--roundtrip", p2i.roundtrip, "rebuild the triple and certify the conjugacy");

  Ideal2PairArgs i2p;
  auto* ideal2pair = app.add_subcommand("ideal2pair", "commuting triple of a punctual ideal or a nested pair");
  ideal2pair->add_option("--fine", i2p.fine, "the smaller ideal: JSON file or text such as \"(x^2, x*y, y^2)\"")
      ->required();
  ideal2pair->add_option("--coarse", i2p.coarse, "the larger ideal, same forms");
  ideal2pair->add_option("--order", i2p.order, "monomial order: graded or lex (default: that of the input)");
  ideal2pair->add_flag("--roundtrip", i2p.roundtrip, "recover the ideals from the triple");

  std::string suite = "all";
  int n_max = 0, samples = 0;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "centralizer, components, correspondence, charts or all")->capture_default_str();
  verify->add_option("--n-max", n_max, "largest matrix size (suite default when omitted)");
  verify->add_option("--samples", samples, "random draws per check (suite default when omitted)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }
  g.field_given = field_opt->count() > 0;

  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    if (components->parsed()) o = cmd_components(comp_algebra, comp_n, g);
    else if (classify->parsed()) o = cmd_classify(cls_matrix, cls_algebra, certify, g);
    else if (pair2ideal->parsed()) o = cmd_pair2ideal(p2i, g);
    else if (ideal2pair->parsed()) o = cmd_ideal2pair(i2p, g);
    else o = cmd_verify(suite, n_max, samples, g);
  } catch (const UsageError& e) {
    err << "nilcomm: " << e.what() << "\n";
    return exit_usage;
  } catch (const nlohmann::json::exception& e) {
    err << "nilcomm: malformed input: " << e.what() << "\n";
    return exit_invalid_input;
  } catch (const InputError& e) {
    err << "nilcomm: invalid input: " << e.what() << "\n";
    return exit_invalid_input;
  } catch (const std::invalid_argument& e) {
    err << "nilcomm: invalid input: " << e.what() << "\n";
    return exit_invalid_input;
  } catch (const std::domain_error& e) {
    err << "nilcomm: invalid input: " << e.what() << "\n";
    return exit_invalid_input;
  } catch (const std::exception& e) {
    err << "nilcomm: internal error: " << e.what() << "\n";
    return exit_check_failed;
  }
  o.report.command = app.get_subcommands().front()->get_name();
  o.report.seed = g.seed;
  if (o.report.field.empty()) o.report.field = parse_field(g.field).json_name();
  o.report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (g.json) out << o.report.to_json(g.timing).dump(2) << "\n";
  else out << o.text;
  return o.code;
}

}  // namespace nilcomm::cli
