#pragma once

#include <json.hpp>

#include "dtk/cyclo.hpp"
#include "dtk/perm.hpp"

namespace dtk {

using Json = nlohmann::ordered_json;

/// { "e": conductor, "terms": [[num, den, exponent_index], ...] } with the
/// nonzero canonical coefficients in ascending index order. Numerator and
/// denominator are JSON integers when they fit in 64 bits, decimal strings
/// otherwise.
Json cyclo_to_json(const Cyclotomic& z);
Cyclotomic cyclo_from_json(const Json& j);

Json cyclo_vector_to_json(const std::vector<Cyclotomic>& v);
std::vector<Cyclotomic> cyclo_vector_from_json(const Json& j);

Json cyclo_matrix_to_json(const std::vector<std::vector<Cyclotomic>>& m);
std::vector<std::vector<Cyclotomic>> cyclo_matrix_from_json(const Json& j);

Json permutation_to_json(const Permutation& p);
Permutation permutation_from_json(const Json& j);

}  // namespace dtk
