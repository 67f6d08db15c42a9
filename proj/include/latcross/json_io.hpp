#pragma once

#include <nlohmann/json.hpp>

#include "latcross/pair_arrays.hpp"
#include "latcross/qtpoly.hpp"

namespace latcross {

using json = nlohmann::json;

// {"terms":[{"t":i,"q":j,"c":"<decimal>"}, ...]} in canonical term order.
json poly_to_json(const QTPoly& p);
QTPoly poly_from_json(const json& j);

// {"bracket":"XU_YV","x":..,"y":..,"u":..,"v":..,"c":[..],"d":[..]}
json array_to_json(const TwoRowedArray& a);
TwoRowedArray array_from_json(const json& j);

// {"first":<array>,"second":<array>,"k":..}
json pair_to_json(const ArrayPair& ap);
ArrayPair pair_from_json(const json& j);

json crossing_to_json(const Crossing& c);

}  // namespace latcross
