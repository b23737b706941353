#include "nilcomm/orbits/components.hpp"

#include <algorithm>
#include <stdexcept>

#include "nilcomm/centralizer/centralizer.hpp"
#include "nilcomm/centralizer/jordan.hpp"
#include "nilcomm/exactalg/matrix_json.hpp"

namespace nilcomm {

std::string to_string(const StratumLabel& label) {
  return std::visit([](const auto& l) { return l.to_string(); }, label);
}

nlohmann::json to_json(const StratumLabel& label) {
  return std::visit([](const auto& l) { return to_json(l); }, label);
}

template <class K>
nlohmann::json to_json(const ComponentRecord<K>& r) {
  return {{"label", to_json(r.label)},
          {"label_text", to_string(r.label)},
          {"c", r.codim},
          {"dim", r.dimension},
          {"ambient", r.ambient.name()},
          {"jordan_type", to_json(r.jordan_type)},
          {"representative", matrix_to_json(r.representative)}};
}

namespace {

template <class K>
void check_codim(const ComponentRecord<K>& r) {
  const int numeric = nilcone_codim(r.jordan_type, reduced_constraint(r.representative, r.ambient));
  if (numeric != r.codim)
    throw std::logic_error("stratum " + to_string(r.label) + ": reduced part gives codimension " + std::to_string(numeric) +
                           ", label gives " + std::to_string(r.codim));
}

bool is_two_step(int n, const FlagAlgebra& w) {
  return n >= 2 && (w == FlagAlgebra::parabolic(2, n) || w == FlagAlgebra::nested(2, n));
}

}  // namespace

template <class K>
std::vector<ComponentRecord<K>> strata_p1(int n, const Field<K>& field, bool cross_check) {
  if (n < 1) throw std::invalid_argument("p1 strata need n >= 1");
  const FlagAlgebra w = FlagAlgebra::parabolic(1, n);
  std::vector<ComponentRecord<K>> out;
  for (const auto& lam : enumerate_marked(n)) {
    auto rep = jordan_matrix(lam, field);
    const int codim = lam.length();
    ComponentRecord<K> r{lam, rep, w, codim, w.dim() - codim, jordan_type(rep)};
    if (cross_check) check_codim(r);
    out.push_back(std::move(r));
  }
  return out;
}

template <class K>
std::vector<ComponentRecord<K>> components_p1(int n, const Field<K>& field) {
  auto all = strata_p1(n, field);
  int best = 0;
  for (const auto& r : all) best = std::max(best, r.dimension);
  std::vector<ComponentRecord<K>> out;
  for (auto& r : all)
    if (r.dimension == best) out.push_back(std::move(r));
  for (const auto& r : out) check_codim(r);
  return out;
}

template <class K>
std::vector<ComponentRecord<K>> strata_2(int n, const FlagAlgebra& w, const Field<K>& field, bool cross_check) {
  if (!is_two_step(n, w)) throw std::invalid_argument("expected p2:n or q2:n with n >= 2");
  std::vector<ComponentRecord<K>> out;
  for (const auto& mu : enumerate_marked2(n)) {
    auto rep = jordan_matrix(mu, field);
    ComponentRecord<K> r{mu, rep, w, mu.c(), w.dim() - mu.c(), jordan_type(rep)};
    if (cross_check) check_codim(r);
    out.push_back(std::move(r));
  }
  return out;
}

template <class K>
std::vector<ComponentRecord<K>> components_2(int n, const FlagAlgebra& w, const Field<K>& field) {
  if (!is_two_step(n, w)) throw std::invalid_argument("expected p2:n or q2:n with n >= 2");
  std::vector<ComponentRecord<K>> out;
  for (const auto& mu : enumerate_marked2(n)) {
    if (mu.c() != 1) continue;
    auto rep = jordan_matrix(mu, field);
    ComponentRecord<K> r{mu, rep, w, 1, w.dim() - 1, jordan_type(rep)};
    check_codim(r);
    out.push_back(std::move(r));
  }
  return out;
}

#define NILCOMM_INSTANTIATE(K)                                                                               \
  template nlohmann::json to_json(const ComponentRecord<K>&);                                                \
  template std::vector<ComponentRecord<K>> strata_p1(int, const Field<K>&, bool);                            \
  template std::vector<ComponentRecord<K>> components_p1(int, const Field<K>&);                              \
  template std::vector<ComponentRecord<K>> strata_2(int, const FlagAlgebra&, const Field<K>&, bool);         \
  template std::vector<ComponentRecord<K>> components_2(int, const FlagAlgebra&, const Field<K>&);

NILCOMM_INSTANTIATE(Rational)
NILCOMM_INSTANTIATE(Residue)

}  // namespace nilcomm
