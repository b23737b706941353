#include "nilcomm/exactalg/matrix_json.hpp"

#include <stdexcept>

namespace nilcomm {

template <class K>
K scalar_from_json(const Json& j, const Field<K>& field) {
  if (j.is_string()) return field.parse(j.get<std::string>());
  if (j.is_number_integer()) return field.from_int(j.get<std::int64_t>());
  throw std::invalid_argument("matrix entry must be a string or an integer");
}

template <class K>
Json vector_to_json(const Vec<K>& v, const Field<K>& field) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(field.format(x));
  return out;
}

template <class K>
Vec<K> vector_from_json(const Json& j, const Field<K>& field) {
  if (!j.is_array()) throw std::invalid_argument("vector must be a JSON array");
  Vec<K> v;
  for (const auto& e : j) v.push_back(scalar_from_json(e, field));
  return v;
}

template <class K>
Json matrix_to_json(const Matrix<K>& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) entries.push_back(vector_to_json(m.row(i), m.field()));
  return Json{{"field", m.field().spec().json_name()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

namespace {

template <class K>
Matrix<K> parse_entries(const Json& j, const Field<K>& field) {
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  const auto& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != rows) throw std::invalid_argument("entries do not match 'rows'");
  Matrix<K> m(rows, cols, field);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto row = vector_from_json(entries[i], field);
    if (row.size() != cols) throw std::invalid_argument("entries do not match 'cols'");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = row[c];
  }
  return m;
}

FieldSpec stored_field(const Json& j) {
  return j.contains("field") ? FieldSpec::parse(j.at("field").get<std::string>()) : FieldSpec::rationals();
}

}  // namespace

AnyMatrix matrix_from_json(const Json& j) {
  const auto spec = stored_field(j);
  if (spec.kind == FieldSpec::Kind::rationals) return parse_entries(j, RationalField{});
  return parse_entries(j, PrimeField(spec.prime));
}

template <class K>
Matrix<K> matrix_from_json(const Json& j, const Field<K>& field) {
  const auto spec = stored_field(j);
  if (!(spec == field.spec()))
    throw std::invalid_argument("matrix is over " + spec.json_name() + ", expected " + field.spec().json_name());
  return parse_entries(j, field);
}

FieldSpec field_of(const AnyMatrix& m) {
  return std::visit([](const auto& x) { return x.field().spec(); }, m);
}

#define NILCOMM_INSTANTIATE(K)                                           \
  template Json matrix_to_json(const Matrix<K>&);                        \
  template Matrix<K> matrix_from_json(const Json&, const Field<K>&);     \
  template Json vector_to_json(const Vec<K>&, const Field<K>&);          \
  template Vec<K> vector_from_json(const Json&, const Field<K>&);        \
  template K scalar_from_json(const Json&, const Field<K>&);

NILCOMM_INSTANTIATE(Rational)
NILCOMM_INSTANTIATE(Residue)

}  // namespace nilcomm
