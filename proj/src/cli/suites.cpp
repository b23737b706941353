#include "nilcomm/cli/suites.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <thread>

#include "nilcomm/centralizer/centralizer.hpp"
#include "nilcomm/exactalg/linalg.hpp"
#include "nilcomm/hilbert/charts.hpp"
#include "nilcomm/hilbert/correspondence.hpp"
#include "nilcomm/hilbert/sampling.hpp"
#include "nilcomm/orbits/components.hpp"
#include "nilcomm/orbits/flag_orbits.hpp"
#include "nilcomm/orbits/tangent.hpp"

namespace nilcomm::cli {

namespace {

std::string n_tag(int n) { return (n < 10 ? "n0" : "n") + std::to_string(n); }

std::string ratio(int good, int total) { return std::to_string(good) + "/" + std::to_string(total); }

template <class K>
std::vector<Vec<K>> flattened(const std::vector<Matrix<K>>& ms) {
  std::vector<Vec<K>> out;
  for (const auto& m : ms) out.push_back(flatten(m));
  return out;
}

// Sample indices drawn uniformly from [0, size).
std::size_t pick(Rng& rng, std::size_t size) { return static_cast<std::size_t>(uniform_int(rng, 0, size - 1)); }

bool small_characteristic(std::uint64_t p, int n) { return p != 0 && p <= static_cast<std::uint64_t>(n); }

template <class K>
void centralizer_suite(std::vector<Check>& out, const Field<K>& field, int n_max, int samples) {
  for (int n = 1; n <= n_max; ++n) {
    out.push_back({"centralizer.closed-form." + n_tag(n), [=](Rng&, CheckResult& r) {
      int good = 0, total = 0;
      nlohmann::json failures = nlohmann::json::array();
      for (const auto& lam : enumerate_partitions(n)) {
        ++total;
        const CentralizerBasis<K> basis(lam.parts(), field);
        const auto solved = centralizer_solve(jordan_matrix(lam, field), FlagAlgebra::full(n));
        int formula = 0;
        for (int a : lam.parts())
          for (int b : lam.parts()) formula += std::min(a, b);
        if (basis.dim() == solved.size() && static_cast<int>(basis.dim()) == formula &&
            same_span(flattened(basis.matrices()), flattened(solved), field))
          ++good;
        else
          failures.push_back(lam.to_string());
      }
      r.passed = good == total;
      r.summary = ratio(good, total) + " partitions: closed form spans the solver's centraliser";
      r.detail = {{"partitions", total}, {"failures", failures}};
    }});

    out.push_back({"centralizer.reduced-nilpotency." + n_tag(n), [=](Rng& rng, CheckResult& r) {
      int good = 0, total = 0, nilpotent = 0;
      for (const auto& lam : enumerate_partitions(n)) {
        const CentralizerBasis<K> basis(lam.parts(), field);
        const auto x = jordan_matrix(lam, field);
        for (int s = 0; s < samples; ++s) {
          Matrix<K> y = x;
          if (s % 2 == 0) {
            Vec<K> params;
            for (std::size_t i = 0; i < basis.dim(); ++i) params.push_back(field.random(rng, 2));
            y = basis.assemble(params);
          } else {
            y = sample_nilpotent_in_centralizer(x, FlagAlgebra::full(n), rng);
          }
          const bool direct = is_nilpotent(y);
          nilpotent += direct;
          good += direct == is_nilpotent_via_red(y, lam.parts());
          ++total;
        }
      }
      r.passed = good == total;
      r.summary = ratio(good, total) + " samples agree (" + std::to_string(nilpotent) + " nilpotent)";
      r.detail = {{"samples", total}, {"nilpotent", nilpotent}, {"agree", good}};
    }});
  }

  const Partition example({4, 2, 2, 2, 1, 1});
  if (!small_characteristic(field.characteristic(), 3))
    out.push_back({"centralizer.example." + example.to_string(), [=](Rng& rng, CheckResult& r) {
      const CentralizerBasis<K> basis(example.parts(), field);
      const int table = nilcone_codim(example, {});
      // The rank only drops on a closed set, so its generic value is the largest one seen.
      int rank = 0;
      for (int attempt = 0; attempt < 5 && rank != table; ++attempt) {
        const auto y = sample_nilpotent_in_centralizer(jordan_matrix(example, field), FlagAlgebra::full(12), rng);
        rank = std::max(rank, reduced_condition_rank(y, example.parts()));
      }
      r.passed = basis.dim() == 54 && table == 6 && rank == 6;
      r.summary = "dim " + std::to_string(basis.dim()) + ", " + std::to_string(rank) +
                  " independent nilpotency conditions (table: " + std::to_string(table) + ")";
      r.detail = {{"dim", basis.dim()}, {"codim_table", table}, {"condition_rank", rank}};
    }});
}

template <class K>
nlohmann::json component_rows(const std::vector<ComponentRecord<K>>& records) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& rec : records)
    rows.push_back({{"label", to_string(rec.label)},
                    {"c", rec.codim},
                    {"dim", rec.dimension},
                    {"jordan_type", rec.jordan_type.to_string()}});
  return rows;
}

template <class K>
void components_suite(std::vector<Check>& out, const Field<K>& field, int n_max, int samples) {
  for (int n = 2; n <= n_max; ++n) {
    out.push_back({"components.p1." + n_tag(n), [=](Rng&, CheckResult& r) {
      const auto comps = components_p1(n, field);
      r.passed = comps.size() == 1 && comps.front().dimension == n * n - n;
      r.summary = std::to_string(comps.size()) + " component(s), dim " +
                  (comps.empty() ? std::string("-") : std::to_string(comps.front().dimension)) + ", expected 1 of dim " +
                  std::to_string(n * n - n);
      r.detail = {{"components", component_rows(comps)}};
    }});
    for (const char* name : {"p2", "q2"}) {
      const std::string algebra = name;
      out.push_back({"components." + algebra + "." + n_tag(n), [=](Rng&, CheckResult& r) {
        const FlagAlgebra w = algebra == "p2" ? FlagAlgebra::parabolic(2, n) : FlagAlgebra::nested(2, n);
        const auto comps = components_2(n, w, field);
        std::set<Partition> types;
        bool dims = true;
        for (const auto& rec : comps) {
          types.insert(rec.jordan_type);
          dims = dims && rec.dimension == w.dim() - 1;
        }
        const std::size_t expected = static_cast<std::size_t>(n / 2);
        r.passed = comps.size() == expected && dims && types.size() == comps.size();
        r.summary = std::to_string(comps.size()) + " components (expected " + std::to_string(expected) + "), dim " +
                    std::to_string(w.dim() - 1) + (dims ? "" : " violated") + ", " + std::to_string(types.size()) +
                    " Jordan types";
        r.detail = {{"ambient", w.name()}, {"components", component_rows(comps)}};
      }});
    }
  }

  for (int n = 2; n <= std::min(n_max, 5); ++n) {
    if (small_characteristic(field.characteristic(), n)) break;
    for (const char* name : {"p1", "p2", "q2"}) {
      const std::string algebra = name;
      out.push_back({"components.tangent." + algebra + "." + n_tag(n), [=](Rng& rng, CheckResult& r) {
        std::vector<ComponentRecord<K>> comps;
        if (algebra == "p1") comps = components_p1(n, field);
        else comps = components_2(n, algebra == "p2" ? FlagAlgebra::parabolic(2, n) : FlagAlgebra::nested(2, n), field);
        int good = 0;
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& rec : comps) {
          const auto cert = tangent_certificate(rec, rng(), 8);
          good += cert.matched() && cert.bounded_below();
          rows.push_back({{"label", to_string(rec.label)}, {"dim", cert.expected}, {"tangent", cert.observed}});
        }
        r.passed = good == static_cast<int>(comps.size());
        r.summary = ratio(good, static_cast<int>(comps.size())) + " components certified by a tangent space";
        r.detail = {{"components", rows}};
      }});
    }
  }

  for (int n = 1; n <= std::min(n_max, 6); ++n) {
    out.push_back({"components.classify.p1." + n_tag(n), [=](Rng& rng, CheckResult& r) {
      const auto labels = enumerate_marked(n);
      const FlagAlgebra w = FlagAlgebra::parabolic(1, n);
      int fixed = 0, invariant = 0;
      for (const auto& label : labels) fixed += classify_p1(jordan_matrix(label, field)) == label;
      for (int s = 0; s < samples; ++s) {
        const auto& label = labels[pick(rng, labels.size())];
        const auto [g, ginv] = random_unimodular_pair(w, field, rng);
        invariant += classify_p1(g * jordan_matrix(label, field) * ginv) == label;
      }
      r.passed = fixed == static_cast<int>(labels.size()) && invariant == samples;
      r.summary = ratio(fixed, static_cast<int>(labels.size())) + " normal forms fixed, " + ratio(invariant, samples) +
                  " conjugates classified";
    }});
    if (n < 2) continue;
    out.push_back({"components.classify.q2." + n_tag(n), [=](Rng& rng, CheckResult& r) {
      const auto labels = enumerate_marked2(n);
      const FlagAlgebra w = FlagAlgebra::nested(2, n);
      int fixed = 0, invariant = 0;
      for (const auto& label : labels) fixed += classify_q2(jordan_matrix(label, field)) == label;
      for (int s = 0; s < samples; ++s) {
        const auto& label = labels[pick(rng, labels.size())];
        const auto [g, ginv] = random_unimodular_pair(w, field, rng);
        invariant += classify_q2(g * jordan_matrix(label, field) * ginv) == label;
      }
      r.passed = fixed == static_cast<int>(labels.size()) && invariant == samples;
      r.summary = ratio(fixed, static_cast<int>(labels.size())) + " normal forms fixed, " + ratio(invariant, samples) +
                  " conjugates classified";
    }});
  }
}

template <class K>
void correspondence_suite(std::vector<Check>& out, const Field<K>& field, int n_max, int samples) {
  auto add_round_trips = [&](const std::string& id, FlagAlgebra w) {
    out.push_back({id, [=](Rng& rng, CheckResult& r) {
      int good = 0;
      nlohmann::json failures = nlohmann::json::array();
      for (int s = 0; s < samples; ++s) {
        const auto t = random_cyclic_triple(w, field, rng);
        const auto trip = round_trip(t, w);
        if (trip.passed) ++good;
        else if (failures.size() < 5) failures.push_back(trip.failure);
      }
      r.passed = good == samples;
      r.summary = ratio(good, samples) + " triples in " + w.name() + " recovered up to the group";
      r.detail = {{"ambient", w.name()}, {"failures", failures}};
    }});
  };
  for (int n = 2; n <= n_max; ++n) {
    for (int k = 1; k < n; ++k)
      add_round_trips("correspondence.round-trip.k" + std::to_string(k) + "." + n_tag(n), FlagAlgebra::parabolic(k, n));
    add_round_trips("correspondence.full-flag." + n_tag(n), FlagAlgebra::nested(n, n));
  }
  for (int n = 1; n <= n_max; ++n)
    out.push_back({"correspondence.commuting-identity." + n_tag(n), [=](Rng& rng, CheckResult& r) {
      int good = 0;
      for (int s = 0; s < samples; ++s) {
        const auto [x, y] = random_commuting_nilpotent_pair(n, field, rng);
        bool ok = x * y == y * x && is_nilpotent(x) && is_nilpotent(y);
        std::vector<Matrix<K>> xp{Matrix<K>::identity(n, field)}, yp{xp.front()};
        for (int i = 1; i <= n; ++i) {
          xp.push_back(xp.back() * x);
          yp.push_back(yp.back() * y);
        }
        for (int i = 0; i <= n && ok; ++i) ok = xp[i] * yp[n - i] == Matrix<K>(n, n, field);
        good += ok;
      }
      r.passed = good == samples;
      r.summary = ratio(good, samples) + " commuting nilpotent pairs with x^i y^(n-i) = 0";
    }});
}

template <class K>
void charts_suite(std::vector<Check>& out, const Field<K>& field, int n_max, int samples) {
  for (int n = 4; n <= n_max; ++n)
    out.push_back({"charts.family-In-Ik." + n_tag(n), [=](Rng& rng, CheckResult& r) {
      int good = 0;
      for (int s = 0; s < samples; ++s) {
        const int k = static_cast<int>(uniform_int(rng, 2, n - 2));
        Vec<K> a;
        for (int i = 0; i < n - 3; ++i) a.push_back(field.random(rng));
        const auto b = field.random(rng), c = field.random(rng);
        const auto fam = family_In_Ik(n, k, a, b, c, field);
        good += fam.fine.colength() == n && fam.coarse.colength() == k && fam.contained;
      }
      r.passed = good == samples;
      r.summary = ratio(good, samples) + " draws with colengths (n, k) and I_n inside I_k";
    }});
  for (int n = 2; n <= n_max; ++n)
    out.push_back({"charts.cell." + n_tag(n), [=](Rng& rng, CheckResult& r) {
      int good = 0, total = 0;
      for (int a = 1; 2 * a <= n; ++a)
        for (int s = 0; s < samples; ++s, ++total)
          good += bb_cell_ideal(a, n - a, random_cell_parameters(a, n - a, field, rng), field).colength() == n;
      r.passed = good == total;
      r.summary = ratio(good, total) + " cell ideals of colength n";
    }});
  for (int n = 4; n <= n_max; ++n)
    out.push_back({"charts.nested." + n_tag(n), [=](Rng& rng, CheckResult& r) {
      int good = 0, total = 0;
      for (int a = 1; n - 2 * a >= 2; ++a)
        for (int s = 0; s < samples; ++s, ++total) {
          const auto fam = nested_zt_family(a, n - a, random_cell_parameters(a, n - a, field, rng), field.random(rng), field);
          good += fam.fine.colength() == n && fam.coarse.colength() == n - 2 && fam.contained;
        }
      r.passed = good == total;
      r.summary = ratio(good, total) + " nested pairs of colengths (n, n - 2)";
    }});
}

struct SuiteDefaults {
  int n_max;
  int samples;
};

SuiteDefaults defaults_for(const std::string& suite) {
  if (suite == "centralizer") return {7, 10};
  if (suite == "components") return {12, 20};
  if (suite == "correspondence") return {6, 20};
  if (suite == "charts") return {10, 20};
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"centralizer", "components", "correspondence", "charts"};
  return names;
}

std::vector<Check> suite_checks(const std::string& suite, const SuiteOptions& options) {
  if (suite == "all") {
    std::vector<Check> out;
    for (const auto& name : suite_names())
      for (auto& c : suite_checks(name, options)) out.push_back(std::move(c));
    return out;
  }
  const auto defaults = defaults_for(suite);
  const int n_max = options.n_max > 0 ? options.n_max : defaults.n_max;
  const int samples = options.samples > 0 ? options.samples : defaults.samples;
  return visit_field(options.field, [&](const auto& field) {
    std::vector<Check> out;
    if (suite == "centralizer") centralizer_suite(out, field, n_max, samples);
    else if (suite == "components") components_suite(out, field, n_max, samples);
    else if (suite == "correspondence") correspondence_suite(out, field, n_max, samples);
    else charts_suite(out, field, n_max, samples);
    return out;
  });
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view id) {
  std::uint64_t h = 0xcbf29ce484222325ull ^ seed;
  for (unsigned char ch : id) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::vector<CheckResult> run_checks(const std::vector<Check>& checks, std::uint64_t seed, unsigned threads) {
  std::vector<CheckResult> results(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < checks.size();) {
      CheckResult& r = results[i];
      r.id = checks[i].id;
      try {
        Rng rng(derive_seed(seed, r.id));
        checks[i].run(rng, r);
      } catch (const std::exception& e) {
        r.passed = false;
        r.summary = std::string("error: ") + e.what();
      }
    }
  };
  const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(checks.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  return results;
}

unsigned thread_limit() {
  if (const char* env = std::getenv("NILCOMM_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace nilcomm::cli
