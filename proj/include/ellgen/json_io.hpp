#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "ellgen/chern.hpp"
#include "ellgen/series.hpp"

namespace ellgen {

// JSON forms:
//   USeries  {"var":"u","u_means":"q^(1/2)","order":K,"coeffs":[[k,"a/b"],...]}
//   Manifold {"name":..,"dim":..,"pontryagin_numbers":{"[1,1]":"8",...}}
// Rationals are strings; plain JSON integers are accepted on input.
// Malformed input throws Error(Parse) naming the line or the offending field.

nlohmann::json to_json(const USeries& s);
nlohmann::json to_json(const Manifold& m);

USeries useries_from_json(const nlohmann::json& j);
Manifold manifold_from_json(const nlohmann::json& j);

std::string print_useries(const USeries& s);
std::string print_manifold(const Manifold& m);

USeries parse_useries(std::string_view text);
Manifold parse_manifold(std::string_view text);

}  // namespace ellgen
