#include "ellgen/json_io.hpp"

#include <algorithm>

#include "ellgen/error.hpp"

namespace ellgen {

using nlohmann::json;

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::Parse, "field '" + field + "': " + what);
}

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) field_error(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) field_error(where.empty() ? key : where + "." + key, "missing");
  return *it;
}

Rat rat_field(const json& v, const std::string& field) {
  if (v.is_number_integer()) return Rat(std::to_string(v.get<long long>()));
  if (!v.is_string()) field_error(field, "expected a rational string such as \"-3/4\"");
  try {
    return parse_rat(v.get<std::string>());
  } catch (const Error& e) {
    field_error(field, e.what());
  }
}

int int_field(const json& v, const std::string& field) {
  if (!v.is_number_integer()) field_error(field, "expected an integer");
  const auto x = v.get<long long>();
  if (x < -(1LL << 30) || x > (1LL << 30)) field_error(field, "integer out of range");
  return static_cast<int>(x);
}

json parse_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    const auto nl = text.rfind('\n', upto == 0 ? 0 : upto - 1);
    const auto col = upto - (nl == std::string_view::npos ? 0 : nl + 1) + 1;
    throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ", column " + std::to_string(col) +
                                      ": malformed JSON");
  }
}

}  // namespace

json to_json(const USeries& s) {
  json coeffs = json::array();
  for (int k : s.support()) coeffs.push_back(json::array({k, rat_string(s[k])}));
  return json{{"var", "u"}, {"u_means", "q^(1/2)"}, {"order", s.order()}, {"coeffs", coeffs}};
}

json to_json(const Manifold& m) {
  json numbers = json::object();
  for (const auto& [p, v] : m.pontryagin_numbers()) numbers[p.key()] = rat_string(v);
  return json{{"name", m.name()}, {"dim", m.dim()}, {"pontryagin_numbers", numbers}};
}

USeries useries_from_json(const json& j) {
  if (j.contains("var") && j["var"] != "u") field_error("var", "only the variable u is supported");
  const int order = int_field(require(j, "order", ""), "order");
  if (order < 0) field_error("order", "must be nonnegative");
  const json& cs = require(j, "coeffs", "");
  if (!cs.is_array()) field_error("coeffs", "expected an array of [exponent, \"rational\"] pairs");
  std::vector<Rat> coeffs(static_cast<std::size_t>(order));
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const std::string f = "coeffs[" + std::to_string(i) + "]";
    const json& e = cs[i];
    if (!e.is_array() || e.size() != 2) field_error(f, "expected [exponent, \"rational\"]");
    const int k = int_field(e[0], f + "[0]");
    if (k < 0 || k >= order) field_error(f + "[0]", "exponent outside [0, order)");
    coeffs[k] += rat_field(e[1], f + "[1]");
  }
  return USeries(std::move(coeffs), order);
}

Manifold manifold_from_json(const json& j) {
  std::string name;
  if (j.is_object() && j.contains("name")) {
    if (!j["name"].is_string()) field_error("name", "expected a string");
    name = j["name"].get<std::string>();
  }
  const int dim = int_field(require(j, "dim", ""), "dim");
  const json& pn = require(j, "pontryagin_numbers", "");
  if (!pn.is_object()) field_error("pontryagin_numbers", "expected an object keyed by partitions like \"[1,1]\"");
  std::map<Partition, Rat> numbers;
  for (const auto& [key, value] : pn.items()) {
    const std::string f = "pontryagin_numbers." + key;
    Partition p;
    try {
      p = Partition::parse(key);
    } catch (const Error& e) {
      field_error(f, e.what());
    }
    numbers[p] += rat_field(value, f);
  }
  return Manifold(std::move(name), dim, std::move(numbers));
}

std::string print_useries(const USeries& s) { return to_json(s).dump(); }
std::string print_manifold(const Manifold& m) { return to_json(m).dump(); }

USeries parse_useries(std::string_view text) { return useries_from_json(parse_text(text)); }
Manifold parse_manifold(std::string_view text) { return manifold_from_json(parse_text(text)); }

}  // namespace ellgen
