#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "nilcomm/exactalg/flag_algebra.hpp"
#include "nilcomm/exactalg/matrix.hpp"
#include "nilcomm/partitions/partitions.hpp"

namespace nilcomm {

using StratumLabel = std::variant<MarkedPartition, MarkedPartition2>;

std::string to_string(const StratumLabel& label);
nlohmann::json to_json(const StratumLabel& label);

// Closure of the set of commuting nilpotent pairs (x, y) in w with x in the orbit
// of `representative`. `codim` is the codimension of the nilpotent cone in the
// centraliser of the representative, so dimension = dim(w) - codim.
template <class K>
struct ComponentRecord {
  StratumLabel label;
  Matrix<K> representative;
  FlagAlgebra ambient;
  int codim;
  int dimension;
  Partition jordan_type;
};

template <class K>
nlohmann::json to_json(const ComponentRecord<K>& r);

// One record per orbit in p_{1,n}, n >= 1. The codimensions are checked against
// the reduced-part computation when `cross_check` is set.
template <class K>
std::vector<ComponentRecord<K>> strata_p1(int n, const Field<K>& field, bool cross_check = false);

// Irreducible components of the commuting nilpotent variety of p_{1,n}: the
// strata of maximal dimension.
template <class K>
std::vector<ComponentRecord<K>> components_p1(int n, const Field<K>& field);

// One record per orbit in w = p_{2,n} or q_{2,n} (n >= 2).
template <class K>
std::vector<ComponentRecord<K>> strata_2(int n, const FlagAlgebra& w, const Field<K>& field, bool cross_check = false);

// Irreducible components for w = p_{2,n} or q_{2,n}: the strata with codim 1.
// Each codimension is re-derived from the reduced part of the centraliser.
template <class K>
std::vector<ComponentRecord<K>> components_2(int n, const FlagAlgebra& w, const Field<K>& field);

}  // namespace nilcomm
