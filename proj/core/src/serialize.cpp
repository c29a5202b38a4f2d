#include "dtk/serialize.hpp"

#include "dtk/error.hpp"

namespace dtk {

namespace {

Json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw InputError("expected an integer or a decimal string");
}

}  // namespace

Json cyclo_to_json(const Cyclotomic& z) {
  Json terms = Json::array();
  const auto& c = z.coeffs();
  for (std::size_t idx = 0; idx < c.size(); ++idx) {
    if (c[idx] == 0) continue;
    terms.push_back(Json::array(
        {integer_to_json(c[idx].get_num()), integer_to_json(c[idx].get_den()), idx}));
  }
  return Json{{"e", z.conductor()}, {"terms", std::move(terms)}};
}

Cyclotomic cyclo_from_json(const Json& j) {
  std::uint64_t e = j.at("e").get<std::uint64_t>();
  std::vector<Rational> coeffs;
  for (const auto& term : j.at("terms")) {
    if (!term.is_array() || term.size() != 3) throw InputError("malformed cyclotomic term");
    std::size_t idx = term[2].get<std::size_t>();
    if (idx >= e) throw InputError("cyclotomic term index out of range");
    if (coeffs.size() <= idx) coeffs.resize(idx + 1, Rational(0));
    Integer den = integer_from_json(term[1]);
    if (den == 0) throw InputError("cyclotomic term with zero denominator");
    coeffs[idx] = Rational(integer_from_json(term[0]), den);
    coeffs[idx].canonicalize();
  }
  return Cyclotomic::from_poly(e, std::move(coeffs));
}

Json cyclo_vector_to_json(const std::vector<Cyclotomic>& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(cyclo_to_json(z));
  return out;
}

std::vector<Cyclotomic> cyclo_vector_from_json(const Json& j) {
  std::vector<Cyclotomic> out;
  for (const auto& item : j) out.push_back(cyclo_from_json(item));
  return out;
}

Json cyclo_matrix_to_json(const std::vector<std::vector<Cyclotomic>>& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(cyclo_vector_to_json(row));
  return out;
}

std::vector<std::vector<Cyclotomic>> cyclo_matrix_from_json(const Json& j) {
  std::vector<std::vector<Cyclotomic>> out;
  for (const auto& row : j) out.push_back(cyclo_vector_from_json(row));
  return out;
}

Json permutation_to_json(const Permutation& p) { return Json(p.images()); }

Permutation permutation_from_json(const Json& j) {
  return Permutation(j.get<std::vector<std::uint32_t>>());
}

}  // namespace dtk
