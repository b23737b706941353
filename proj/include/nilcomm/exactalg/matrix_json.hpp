#pragma once

#include <variant>

#include <json.hpp>

#include "nilcomm/exactalg/matrix.hpp"

namespace nilcomm {

using Json = nlohmann::json;

// A matrix whose field is only known at run time (read from JSON or the command line).
using AnyMatrix = std::variant<Matrix<Rational>, Matrix<Residue>>;

// {"field":"Q","rows":n,"cols":m,"entries":[["1/2","-3"],...]}
template <class K>
Json matrix_to_json(const Matrix<K>& m);

AnyMatrix matrix_from_json(const Json& j);

// Parses and requires the stored field to equal `field`.
template <class K>
Matrix<K> matrix_from_json(const Json& j, const Field<K>& field);

template <class K>
Json vector_to_json(const Vec<K>& v, const Field<K>& field);

template <class K>
Vec<K> vector_from_json(const Json& j, const Field<K>& field);

template <class K>
K scalar_from_json(const Json& j, const Field<K>& field);

FieldSpec field_of(const AnyMatrix& m);

}  // namespace nilcomm
