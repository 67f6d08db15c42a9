#include "latcross/json_io.hpp"

#include <sstream>

namespace latcross {

json poly_to_json(const QTPoly& p) {
  json terms = json::array();
  for (const auto& [k, c] : p.terms()) {
    std::ostringstream os;
    os << c;
    terms.push_back({{"t", k.first}, {"q", k.second}, {"c", os.str()}});
  }
  return {{"terms", terms}};
}

QTPoly poly_from_json(const json& j) {
  QTPoly p;
  for (const auto& term : j.at("terms"))
    p.add_term(Int(term.at("c").get<std::string>()), term.at("t").get<int>(),
               term.at("q").get<int>());
  return p;
}

json array_to_json(const TwoRowedArray& a) {
  return {{"bracket", a.bracket() == Bracket::XU_YV ? "XU_YV" : "XV_YU"},
          {"x", a.x()},
          {"y", a.y()},
          {"u", a.u()},
          {"v", a.v()},
          {"c", a.c()},
          {"d", a.d()}};
}

TwoRowedArray array_from_json(const json& j) {
  const std::string b = j.at("bracket").get<std::string>();
  if (b != "XU_YV" && b != "XV_YU")
    throw std::invalid_argument("unknown bracket: " + b);
  return TwoRowedArray(j.at("x").get<int>(), j.at("y").get<int>(),
                       j.at("u").get<int>(), j.at("v").get<int>(),
                       b == "XU_YV" ? Bracket::XU_YV : Bracket::XV_YU,
                       j.at("c").get<std::vector<int>>(),
                       j.at("d").get<std::vector<int>>());
}

json pair_to_json(const ArrayPair& ap) {
  return {{"first", array_to_json(ap.first())},
          {"second", array_to_json(ap.second())},
          {"k", ap.k()}};
}

ArrayPair pair_from_json(const json& j) {
  ArrayPair ap(array_from_json(j.at("first")), array_from_json(j.at("second")));
  if (j.contains("k") && j.at("k").get<int>() != ap.k())
    throw std::invalid_argument("stored k disagrees with the row lengths");
  return ap;
}

json crossing_to_json(const Crossing& c) {
  return {{"kind", c.kind == CrossKind::upward ? "upward" : "downward"},
          {"vertex", {c.vertex.x, c.vertex.y}},
          {"index", c.index}};
}

}  // namespace latcross
