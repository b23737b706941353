#include "nilcomm/hilbert/ideal.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "nilcomm/exactalg/matrix_json.hpp"

namespace nilcomm {

namespace {

// Row echelon form over the monomials of degree <= cap, pivoting on the largest
// monomial of each row.
template <class K>
class LeadEchelon {
 public:
  LeadEchelon(int cap, const Field<K>& field, MonomialOrder order)
      : cap_(cap), field_(field), row_of_(monomial_count(cap), -1) {
    for (const auto& m : monomials_up_to(cap, order)) descending_.push_back(monomial_index(m));
    std::reverse(descending_.begin(), descending_.end());
  }

  // Reduces f against the stored rows; stores and returns the remainder if nonzero.
  const Vec<K>* insert(Vec<K> f) {
    int lead = -1;
    for (std::size_t idx : descending_) {
      if (is_zero(f[idx])) continue;
      const int r = row_of_[idx];
      if (r < 0) {
        if (lead < 0) lead = static_cast<int>(idx);
        continue;
      }
      const K c = f[idx];
      const auto& row = rows_[r];
      for (std::size_t k = 0; k < f.size(); ++k)
        if (!is_zero(row[k])) f[k] -= c * row[k];
    }
    if (lead < 0) return nullptr;
    const K inv = field_.one() / f[lead];
    for (auto& c : f) c *= inv;
    row_of_[lead] = static_cast<int>(rows_.size());
    leads_.push_back(static_cast<std::size_t>(lead));
    rows_.push_back(std::move(f));
    return &rows_.back();
  }

  // Clears every pivot column outside its own row.
  void back_substitute() {
    // Process in increasing lead order so that the rows used are already reduced.
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::vector<std::size_t> rank_of(monomial_count(cap_));
    for (std::size_t i = 0; i < descending_.size(); ++i) rank_of[descending_[i]] = descending_.size() - i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rank_of[leads_[a]] < rank_of[leads_[b]]; });
    for (std::size_t r : order) {
      auto& row = rows_[r];
      for (std::size_t idx = 0; idx < row.size(); ++idx) {
        if (idx == leads_[r] || is_zero(row[idx]) || row_of_[idx] < 0) continue;
        const K c = row[idx];
        const auto& other = rows_[row_of_[idx]];
        for (std::size_t k = 0; k < row.size(); ++k)
          if (!is_zero(other[k])) row[k] -= c * other[k];
      }
    }
  }

  int row_of(std::size_t idx) const { return row_of_[idx]; }
  const Vec<K>& row(int r) const { return rows_[r]; }

 private:
  int cap_;
  Field<K> field_;
  std::vector<std::size_t> descending_;
  std::vector<int> row_of_;
  std::vector<Vec<K>> rows_;
  std::vector<std::size_t> leads_;
};

template <class K>
Vec<K> shifted(const Vec<K>& f, const Monomial& by, int cap, const Field<K>& field) {
  Vec<K> out(f.size(), field.zero());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (is_zero(f[i])) continue;
    const Monomial m = monomial_at(i) * by;
    if (m.degree() <= cap) out[monomial_index(m)] = f[i];
  }
  return out;
}

template <class K>
std::string format_in_order(const LocalPoly<K>& p, MonomialOrder order) {
  auto t = p.terms();
  std::sort(t.begin(), t.end(), [order](const auto& a, const auto& b) { return less(order, b.first, a.first); });
  std::string out;
  for (const auto& [m, c] : t) {
    LocalPoly<K> single(m.degree(), p.field());
    single.add_term(m, c);
    std::string s = single.to_string();
    if (out.empty()) out = s;
    else if (s.front() == '-') out += " - " + s.substr(1);
    else out += " + " + s;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

template <class K>
StaircaseIdeal<K> StaircaseIdeal<K>::from_generators(const std::vector<LocalPoly<K>>& generators, int cap,
                                                     const Field<K>& field, MonomialOrder order) {
  LeadEchelon<K> echelon(cap, field, order);
  std::deque<Vec<K>> work;
  for (const auto& g : generators) {
    if (g.cap() != cap) throw std::invalid_argument("generator cap differs from the ideal cap");
    work.push_back(g.coefficients());
  }
  // Closing the span under x and y yields the ideal modulo degree cap + 1.
  while (!work.empty()) {
    const Vec<K>* added = echelon.insert(std::move(work.front()));
    work.pop_front();
    if (!added) continue;
    work.push_back(shifted(*added, {1, 0}, cap, field));
    work.push_back(shifted(*added, {0, 1}, cap, field));
  }
  StaircaseIdeal ideal(cap, field, order);
  ideal.finish(echelon);
  return ideal;
}

template <class K>
StaircaseIdeal<K> StaircaseIdeal<K>::from_span(const std::vector<LocalPoly<K>>& span, int cap, const Field<K>& field,
                                               MonomialOrder order) {
  LeadEchelon<K> echelon(cap, field, order);
  for (const auto& f : span) {
    if (f.cap() != cap) throw std::invalid_argument("span element cap differs from the ideal cap");
    echelon.insert(f.coefficients());
  }
  StaircaseIdeal ideal(cap, field, order);
  ideal.finish(echelon);
  return ideal;
}

template <class K>
template <class Echelon>
void StaircaseIdeal<K>::finish(Echelon& echelon) {
  echelon.back_substitute();
  const std::size_t count = monomial_count(cap_);
  position_.assign(count, -1);
  for (const auto& m : monomials_up_to(cap_, order_))
    if (echelon.row_of(monomial_index(m)) < 0) {
      if (m.degree() == cap_)
        throw std::invalid_argument("ideal does not contain (x,y)^" + std::to_string(cap_) + " (monomial " +
                                    m.to_string() + " is standard)");
      position_[monomial_index(m)] = static_cast<int>(staircase_.size());
      staircase_.push_back(m);
    }
  normal_forms_ = Matrix<K>(count, staircase_.size(), field_);
  for (std::size_t idx = 0; idx < count; ++idx) {
    if (position_[idx] >= 0) {
      normal_forms_(idx, position_[idx]) = field_.one();
      continue;
    }
    const auto& row = echelon.row(echelon.row_of(idx));
    for (std::size_t k = 0; k < count; ++k)
      if (position_[k] >= 0 && !is_zero(row[k])) normal_forms_(idx, position_[k]) = -row[k];
  }
}

template <class K>
bool StaircaseIdeal<K>::is_standard(const Monomial& m) const {
  return m.degree() <= cap_ && position_[monomial_index(m)] >= 0;
}

template <class K>
Vec<K> StaircaseIdeal<K>::coordinates(const LocalPoly<K>& f) const {
  if (!(f.field() == field_)) throw std::invalid_argument("polynomial and ideal over different fields");
  Vec<K> out(staircase_.size(), field_.zero());
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() > cap_) continue;
    const std::size_t idx = monomial_index(m);
    for (std::size_t s = 0; s < out.size(); ++s)
      if (!is_zero(normal_forms_(idx, s))) out[s] += c * normal_forms_(idx, s);
  }
  return out;
}

template <class K>
LocalPoly<K> StaircaseIdeal<K>::normal_form(const LocalPoly<K>& f) const {
  const auto coords = coordinates(f);
  LocalPoly<K> out(cap_, field_);
  for (std::size_t s = 0; s < coords.size(); ++s) out.add_term(staircase_[s], coords[s]);
  return out;
}

template <class K>
bool StaircaseIdeal<K>::contains(const LocalPoly<K>& f) const {
  for (const auto& c : coordinates(f))
    if (!is_zero(c)) return false;
  return true;
}

template <class K>
bool StaircaseIdeal<K>::contains(const StaircaseIdeal& other) const {
  for (const auto& g : other.reduced_generators())
    if (!contains(g)) return false;
  return true;
}

template <class K>
std::vector<Monomial> StaircaseIdeal<K>::border() const {
  std::vector<Monomial> out;
  for (const auto& m : monomials_up_to(cap_, order_)) {
    if (is_standard(m)) continue;
    const bool from_x = m.x > 0 && is_standard({m.x - 1, m.y});
    const bool from_y = m.y > 0 && is_standard({m.x, m.y - 1});
    if (from_x || from_y || (staircase_.empty() && m.degree() == 0)) out.push_back(m);
  }
  return out;
}

template <class K>
std::vector<LocalPoly<K>> StaircaseIdeal<K>::border_generators() const {
  std::vector<LocalPoly<K>> out;
  for (const auto& b : border()) {
    const auto mono = LocalPoly<K>::monomial(b, cap_, field_);
    out.push_back(mono - normal_form(mono));
  }
  return out;
}

template <class K>
std::vector<LocalPoly<K>> StaircaseIdeal<K>::reduced_generators() const {
  std::vector<LocalPoly<K>> out;
  for (const auto& m : monomials_up_to(cap_, order_)) {
    if (is_standard(m)) continue;
    const bool x_inside = m.x == 0 || is_standard({m.x - 1, m.y});
    const bool y_inside = m.y == 0 || is_standard({m.x, m.y - 1});
    if (!x_inside || !y_inside) continue;
    const auto mono = LocalPoly<K>::monomial(m, cap_, field_);
    out.push_back(mono - normal_form(mono));
  }
  return out;
}

template <class K>
Matrix<K> StaircaseIdeal<K>::multiplication_matrix(int var) const {
  if (var != 0 && var != 1) throw std::invalid_argument("variable index must be 0 (x) or 1 (y)");
  const Monomial by = var == 0 ? Monomial{1, 0} : Monomial{0, 1};
  Matrix<K> m(staircase_.size(), staircase_.size(), field_);
  for (std::size_t s = 0; s < staircase_.size(); ++s)
    m.set_column(s, coordinates(LocalPoly<K>::monomial(staircase_[s] * by, cap_, field_)));
  return m;
}

template <class K>
bool StaircaseIdeal<K>::operator==(const StaircaseIdeal& o) const {
  return field_ == o.field_ && colength() == o.colength() && contains(o) && o.contains(*this);
}

template <class K>
std::string StaircaseIdeal<K>::to_string() const {
  std::string out = "(";
  bool first = true;
  for (const auto& g : reduced_generators()) {
    if (!first) out += ", ";
    out += format_in_order(g, order_);
    first = false;
  }
  return out + ")";
}

template <class K>
nlohmann::json ideal_to_json(const StaircaseIdeal<K>& ideal) {
  nlohmann::json staircase = nlohmann::json::array();
  for (const auto& m : ideal.staircase()) staircase.push_back(m.to_string());
  nlohmann::json generators = nlohmann::json::array();
  const auto& field = ideal.field();
  for (const auto& g : ideal.reduced_generators()) {
    // The lead is the largest monomial for the ideal's order.
    auto terms = g.terms();
    const auto lead = std::max_element(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
                        return less(ideal.order(), a.first, b.first);
                      })->first;
    nlohmann::json tail = nlohmann::json::object();
    for (const auto& [m, c] : terms)
      if (!(m == lead)) tail[m.to_string()] = field.format(c);
    generators.push_back({{"lead", lead.to_string()}, {"tail", tail}});
  }
  return {{"cap", ideal.cap()},
          {"field", field.spec().json_name()},
          {"order", to_string(ideal.order())},
          {"staircase", staircase},
          {"generators", generators}};
}

template <class K>
StaircaseIdeal<K> ideal_from_json(const nlohmann::json& j, const Field<K>& field) {
  if (!j.is_object() || !j.contains("cap") || !j.contains("generators"))
    throw std::invalid_argument("ideal JSON needs \"cap\" and \"generators\"");
  if (j.contains("field") && !(FieldSpec::parse(j.at("field").get<std::string>()) == field.spec()))
    throw std::invalid_argument("ideal JSON field does not match");
  const int cap = j.at("cap").get<int>();
  if (cap < 0) throw std::invalid_argument("ideal cap must be nonnegative");
  const MonomialOrder order =
      j.contains("order") ? parse_monomial_order(j.at("order").get<std::string>()) : MonomialOrder::graded;
  std::vector<LocalPoly<K>> gens;
  for (const auto& g : j.at("generators")) {
    const Monomial lead = Monomial::parse(g.at("lead").get<std::string>());
    if (lead.degree() > cap) throw std::invalid_argument("generator lead above the cap");
    auto p = LocalPoly<K>::monomial(lead, cap, field);
    if (g.contains("tail"))
      for (const auto& [key, value] : g.at("tail").items()) {
        const Monomial m = Monomial::parse(key);
        if (m.degree() > cap) throw std::invalid_argument("generator term above the cap");
        p.add_term(m, scalar_from_json(value, field));
      }
    gens.push_back(std::move(p));
  }
  auto ideal = StaircaseIdeal<K>::from_generators(gens, cap, field, order);
  if (j.contains("staircase")) {
    std::vector<std::size_t> given, computed;
    for (const auto& s : j.at("staircase")) given.push_back(monomial_index(Monomial::parse(s.get<std::string>())));
    for (const auto& m : ideal.staircase()) computed.push_back(monomial_index(m));
    std::sort(given.begin(), given.end());
    std::sort(computed.begin(), computed.end());
    if (given != computed) throw std::invalid_argument("listed staircase does not match the generators");
  }
  return ideal;
}

AnyIdeal ideal_from_json(const nlohmann::json& j) {
  const FieldSpec spec = j.contains("field") ? FieldSpec::parse(j.at("field").get<std::string>()) : FieldSpec::rationals();
  if (spec.kind == FieldSpec::Kind::rationals) return ideal_from_json(j, RationalField{});
  return ideal_from_json(j, PrimeField(spec.prime));
}

template <class K>
StaircaseIdeal<K> parse_ideal(const std::string& text, const Field<K>& field, MonomialOrder order, int max_cap) {
  std::string body = text;
  const auto open = body.find_first_not_of(" \t");
  const auto close = body.find_last_not_of(" \t");
  if (open == std::string::npos) throw std::invalid_argument("empty ideal");
  body = body.substr(open, close - open + 1);
  if (body.front() == '(') {
    if (body.back() != ')') throw std::invalid_argument("unbalanced parentheses in '" + text + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<std::string> pieces;
  std::size_t start = 0;
  for (std::size_t comma; (comma = body.find(',', start)) != std::string::npos; start = comma + 1)
    pieces.push_back(body.substr(start, comma - start));
  pieces.push_back(body.substr(start));

  int degree = 1;
  for (const auto& piece : pieces)
    for (const auto& t : parse_terms(piece)) {
      field.parse(t.coefficient);
      degree = std::max(degree, t.monomial.degree());
    }
  for (int cap = degree; cap <= max_cap; ++cap) {
    std::vector<LocalPoly<K>> gens;
    for (const auto& piece : pieces) gens.push_back(parse_poly(piece, cap, field));
    try {
      return StaircaseIdeal<K>::from_generators(gens, cap, field, order);
    } catch (const std::invalid_argument&) {
    }
  }
  throw std::invalid_argument("'" + text + "' has no finite colength at the origin within degree " +
                              std::to_string(max_cap));
}

#define NILCOMM_INSTANTIATE(K)                                                 \
  template class StaircaseIdeal<K>;                                            \
  template StaircaseIdeal<K> parse_ideal(const std::string&, const Field<K>&, MonomialOrder, int); \
  template nlohmann::json ideal_to_json(const StaircaseIdeal<K>&);             \
  template StaircaseIdeal<K> ideal_from_json(const nlohmann::json&, const Field<K>&);

NILCOMM_INSTANTIATE(Rational)
NILCOMM_INSTANTIATE(Residue)

}  // namespace nilcomm
