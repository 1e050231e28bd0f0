#include "numsg/json.hpp"

namespace numsg {

Json to_json(InvariantReport const& r) {
  Json j;
  j["conductor"] = r.conductor;
  j["gaps"] = r.gaps;
  j["min_generators"] = r.min_generators;
  j["frobenius"] = r.frobenius;
  j["genus"] = r.genus;
  j["multiplicity"] = r.multiplicity;
  j["left"] = r.left;
  j["embedding_dimension"] = r.embedding_dimension;
  j["special_gaps"] = r.special_gaps;
  j["sub_frobenius"] = r.sub_frobenius ? Json(*r.sub_frobenius) : Json(nullptr);
  return j;
}

Json to_json(NumericalSemigroup const& s) {
  Json j = to_json(report(s));
  j.erase("sub_frobenius");
  return j;
}

NumericalSemigroup semigroup_from_json(Json const& j) {
  if (!j.is_object() || !j.contains("gaps")) throw ParseError("semigroup JSON needs a \"gaps\" array");
  auto gaps = j.at("gaps").get<std::vector<int>>();
  auto s = NumericalSemigroup::from_gaps(gaps);
  Json expected = to_json(s);
  for (auto const& [key, value] : expected.items()) {
    if (j.contains(key) && j.at(key) != value) {
      throw ParseError("semigroup JSON field \"" + key + "\" disagrees with its gap list");
    }
  }
  return s;
}

}  // namespace numsg
