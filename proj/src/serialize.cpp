#include "eispart/serialize.hpp"

#include <ostream>

namespace eispart {

namespace {

long divisor_key(const std::string& key) {
  size_t pos = 0;
  long d = std::stol(key, &pos);
  if (pos != key.size()) throw std::invalid_argument("bad divisor key: " + key);
  return d;
}

json rational_map_to_json(const std::map<long, Rational>& m) {
  json j = json::object();
  for (const auto& [d, v] : m) j[std::to_string(d)] = v.str();
  return j;
}

}  // namespace

std::map<long, Rational> rational_map_from_json(const json& j) {
  if (!j.is_object())
    throw std::invalid_argument("expected an object of divisor -> rational");
  std::map<long, Rational> out;
  for (const auto& [key, value] : j.items())
    out[divisor_key(key)] = Rational::from_string(value.get<std::string>());
  return out;
}

std::map<long, long> integer_map_from_json(const json& j) {
  if (!j.is_object())
    throw std::invalid_argument("expected an object of divisor -> integer");
  std::map<long, long> out;
  for (const auto& [key, value] : j.items()) {
    if (value.is_number_integer())
      out[divisor_key(key)] = value.get<long>();
    else if (value.is_string())
      out[divisor_key(key)] = std::stol(value.get<std::string>());
    else
      throw std::invalid_argument("exponent for " + key + " is not an integer");
  }
  return out;
}

json to_json(const QSeries& s) {
  json coeffs = json::array();
  for (long n = 0; n < s.precision(); ++n) coeffs.push_back(s[n].str());
  return json{{"precision", s.precision()}, {"coeffs", std::move(coeffs)}};
}

QSeries qseries_from_json(const json& j) {
  long precision = j.at("precision").get<long>();
  const json& coeffs = j.at("coeffs");
  if (!coeffs.is_array() || static_cast<long>(coeffs.size()) != precision)
    throw std::invalid_argument(
        "series precision does not match the coefficient count");
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (const auto& item : coeffs)
    c.push_back(Rational::from_string(item.get<std::string>()));
  return QSeries(std::move(c));
}

json to_json(const EisCombo& combo) {
  return json{{"level", combo.level().value()},
              {"k", combo.k()},
              {"coeffs", rational_map_to_json(combo.coeffs())}};
}

EisCombo eis_combo_from_json(const json& j) {
  return EisCombo(make_level(j.at("level").get<long>()), j.at("k").get<long>(),
                  rational_map_from_json(j.at("coeffs")));
}

json to_json(const CuspConstants& c) {
  return json{{"level", c.level().value()},
              {"k", c.k()},
              {"values", rational_map_to_json(c.values())}};
}

CuspConstants cusp_constants_from_json(const json& j) {
  return CuspConstants(make_level(j.at("level").get<long>()),
                       j.at("k").get<long>(),
                       rational_map_from_json(j.at("values")));
}

json to_json(const CuspOrderTable& t) {
  json orders = json::object();
  for (const auto& [c, v] : t.orders) orders[std::to_string(c)] = v.str();
  return json{{"orders", std::move(orders)}, {"total", t.total.str()}};
}

json table_to_json(const std::vector<TableRow>& rows) {
  json out = json::array();
  for (const TableRow& row : rows)
    out.push_back(json{{"n", row.n},
                       {"brute_force", row.brute_force.get_str()},
                       {"formula", row.formula.str()},
                       {"cusp_coefficient", row.cusp_coefficient.str()},
                       {"match", row.match}});
  return out;
}

void write_table_csv(std::ostream& os, const std::vector<TableRow>& rows) {
  os << "n,brute_force,formula,cusp_coefficient,match\n";
  for (const TableRow& row : rows)
    os << row.n << ',' << row.brute_force.get_str() << ',' << row.formula.str()
       << ',' << row.cusp_coefficient.str() << ','
       << (row.match ? "true" : "false") << '\n';
}

}  // namespace eispart
