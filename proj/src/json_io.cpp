#include "pcert/json_io.hpp"
#include "pcert/errors.hpp"

#include <cstdint>
#include <cstdio>

namespace pcert {

const Json& require(const Json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object())
    throw ValidationError(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end())
    throw ValidationError(where + "." + key, "missing field");
  return *it;
}

std::string require_string(const Json& j, const std::string& where) {
  if (!j.is_string())
    throw ValidationError(where, "expected a string");
  return j.get<std::string>();
}

long require_integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer())
    throw ValidationError(where, "expected an integer");
  return j.get<long>();
}

bool require_bool(const Json& j, const std::string& where) {
  if (!j.is_boolean())
    throw ValidationError(where, "expected true or false");
  return j.get<bool>();
}

namespace {

const Json& require_array(const Json& obj, const std::string& key, const std::string& where) {
  const Json& a = require(obj, key, where);
  if (!a.is_array())
    throw ValidationError(where + "." + key, "expected an array");
  return a;
}

std::string at(const std::string& where, const std::string& key, std::size_t i) {
  return where + "." + key + "[" + std::to_string(i) + "]";
}

std::optional<Rational> optional_rational(const Json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end())
    return std::nullopt;
  return rational_from_json(*it, where + "." + key);
}

std::optional<std::size_t> optional_index(const Json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end())
    return std::nullopt;
  const long v = require_integer(*it, where + "." + key);
  if (v < 0)
    throw ValidationError(where + "." + key, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

int int_field(const Json& obj, const std::string& key, const std::string& where) {
  return static_cast<int>(require_integer(require(obj, key, where), where + "." + key));
}

Json rationals(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& r : v)
    a.push_back(to_json(r));
  return a;
}

std::vector<Rational> rationals_from(const Json& obj, const std::string& key, const std::string& where) {
  std::vector<Rational> out;
  const Json& a = require_array(obj, key, where);
  for (std::size_t i = 0; i < a.size(); ++i)
    out.push_back(rational_from_json(a[i], at(where, key, i)));
  return out;
}

Json orders(const std::vector<Order>& v) {
  Json a = Json::array();
  for (const auto& o : v)
    a.push_back(to_json(o));
  return a;
}

std::vector<Order> orders_from(const Json& obj, const std::string& key, const std::string& where) {
  std::vector<Order> out;
  const Json& a = require_array(obj, key, where);
  for (std::size_t i = 0; i < a.size(); ++i)
    out.push_back(order_from_json(a[i], at(where, key, i)));
  return out;
}

std::vector<std::string> strings_from(const Json& obj, const std::string& key, const std::string& where) {
  std::vector<std::string> out;
  const Json& a = require_array(obj, key, where);
  for (std::size_t i = 0; i < a.size(); ++i)
    out.push_back(require_string(a[i], at(where, key, i)));
  return out;
}

Verdict verdict_from(const Json& obj, const std::string& where) {
  const std::string text = require_string(require(obj, "verdict", where), where + ".verdict");
  try {
    return parse_verdict(text);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(where + ".verdict", e.what());
  }
}

} // namespace

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer())
    return Rational(Integer(std::to_string(j.get<long long>())));
  if (!j.is_string())
    throw ValidationError(where, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ValidationError(where, e.what());
  }
}

Json to_json(const Order& o) { return o.to_string(); }

Order order_from_json(const Json& j, const std::string& where) {
  try {
    return Order::parse(require_string(j, where));
  } catch (const ParseError& e) {
    throw ValidationError(where, e.what());
  }
}

Json to_json(const PuiseuxPoly& s) {
  Json terms = Json::array();
  for (const auto& t : s.terms())
    terms.push_back({{"exp", to_json(t.exponent)}, {"coeff", to_json(t.coefficient)}});
  return {{"center", to_json(s.center())}, {"terms", terms}};
}

PuiseuxPoly series_from_json(const Json& j, const std::string& where) {
  const Rational center = rational_from_json(require(j, "center", where), where + ".center");
  const Json& terms = require_array(j, "terms", where);
  std::vector<PuiseuxTerm> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string w = at(where, "terms", i);
    out.push_back({rational_from_json(require(terms[i], "exp", w), w + ".exp"),
                   rational_from_json(require(terms[i], "coeff", w), w + ".coeff")});
  }
  return PuiseuxPoly(center, std::move(out));
}

Json to_json(const BoundReport& b) {
  Json inputs = Json::object();
  for (const auto& [k, v] : b.inputs)
    inputs[k] = v;
  return {{"kind", to_string(b.kind)}, {"value", to_string(b.value)}, {"formula", b.formula}, {"inputs", inputs}};
}

Json to_json(const BoundValue& b) { return {{"value", to_string(b.value)}, {"source", b.source}}; }

BoundValue bound_value_from_json(const Json& j, const std::string& where) {
  BoundValue b;
  const Rational v = rational_from_json(require(j, "value", where), where + ".value");
  if (!is_integer(v))
    throw ValidationError(where + ".value", "expected an integer");
  b.value = v.get_num();
  b.source = require_string(require(j, "source", where), where + ".source");
  return b;
}

Json to_json(const Branch& b) {
  return {{"expansion", to_json(b.expansion)},
          {"attained_precision", to_json(b.attained_precision)},
          {"status", to_string(b.status)},
          {"residual_order", to_json(b.residual_order)},
          {"ramification", to_string(b.ramification)},
          {"multiplicity", b.multiplicity}};
}

Json to_json(const PrefixCertificate& c) {
  Json j{{"kind", c.kind}, {"verdict", to_string(c.verdict)}, {"L", to_json(c.L)}};
  if (c.verdict == Verdict::precondition_violated)
    j["violation"] = c.violation;
  j["unmet"] = c.unmet;
  j["orders"] = orders(c.orders);
  j["ladder"] = rationals(c.ladder);
  if (c.kind == kLemmaPrefix) {
    j["deg_y"] = c.deg_y;
    j["mult_c"] = c.mult_c;
  } else {
    j["d11"] = c.d11;
    j["d12"] = c.d12;
    j["d21"] = c.d21;
    j["d22"] = c.d22;
  }
  j["degree_gate"] = to_json(c.degree_gate);
  if (c.threshold)
    j["threshold"] = to_json(*c.threshold);
  if (c.M)
    j["M"] = *c.M;
  j["certified_prefix"] = to_json(c.certified_prefix);
  if (c.refinement) {
    const auto& r = *c.refinement;
    j["refinement"] = {{"K", r.K}, {"regular_index", r.regular_index}, {"lift", to_json(r.lift)}, {"agrees", r.agrees}};
  }
  return j;
}

PrefixCertificate prefix_certificate_from_json(const Json& j, const std::string& where) {
  PrefixCertificate c;
  c.kind = require_string(require(j, "kind", where), where + ".kind");
  if (c.kind != kLemmaPrefix && c.kind != kCommonCurve)
    throw ValidationError(where + ".kind", "unknown certificate kind '" + c.kind + "'");
  c.verdict = verdict_from(j, where);
  c.L = rational_from_json(require(j, "L", where), where + ".L");
  if (auto it = j.find("violation"); it != j.end())
    c.violation = require_string(*it, where + ".violation");
  c.unmet = strings_from(j, "unmet", where);
  c.orders = orders_from(j, "orders", where);
  c.ladder = rationals_from(j, "ladder", where);
  if (c.kind == kLemmaPrefix) {
    c.deg_y = int_field(j, "deg_y", where);
    c.mult_c = int_field(j, "mult_c", where);
  } else {
    c.d11 = int_field(j, "d11", where);
    c.d12 = int_field(j, "d12", where);
    c.d21 = int_field(j, "d21", where);
    c.d22 = int_field(j, "d22", where);
  }
  c.degree_gate = rational_from_json(require(j, "degree_gate", where), where + ".degree_gate");
  c.threshold = optional_rational(j, "threshold", where);
  c.M = optional_index(j, "M", where);
  c.certified_prefix = series_from_json(require(j, "certified_prefix", where), where + ".certified_prefix");
  if (auto it = j.find("refinement"); it != j.end()) {
    const std::string w = where + ".refinement";
    RegularRefinement r;
    r.K = require_integer(require(*it, "K", w), w + ".K");
    r.regular_index = static_cast<std::size_t>(require_integer(require(*it, "regular_index", w), w + ".regular_index"));
    r.lift = series_from_json(require(*it, "lift", w), w + ".lift");
    r.agrees = require_bool(require(*it, "agrees", w), w + ".agrees");
    c.refinement = r;
  }
  return c;
}

Json to_json(const SystemCertificate& c) {
  Json j{{"kind", c.kind},
         {"verdict", to_string(c.verdict)},
         {"L", to_json(c.L)},
         {"unmet", c.unmet},
         {"orders", orders(c.orders)},
         {"noether_bound", to_json(c.noether_bound)},
         {"dim1_asserted", c.dim1_asserted},
         {"statement", c.statement}};
  if (c.verdict == Verdict::precondition_violated)
    j["violation"] = c.violation;
  if (c.degree_bound)
    j["degree_bound"] = to_json(*c.degree_bound);
  if (c.kind == kCurvePrefix) {
    j["ladder"] = rationals(c.ladder);
    Json prefix = Json::array();
    for (const auto& s : c.certified_prefix)
      prefix.push_back(to_json(s));
    j["certified_prefix"] = prefix;
  }
  if (c.threshold)
    j["threshold"] = to_json(*c.threshold);
  if (c.M)
    j["M"] = *c.M;
  return j;
}

SystemCertificate system_certificate_from_json(const Json& j, const std::string& where) {
  SystemCertificate c;
  c.kind = require_string(require(j, "kind", where), where + ".kind");
  if (c.kind != kNonIsolation && c.kind != kCurvePrefix)
    throw ValidationError(where + ".kind", "unknown certificate kind '" + c.kind + "'");
  c.verdict = verdict_from(j, where);
  c.L = rational_from_json(require(j, "L", where), where + ".L");
  if (auto it = j.find("violation"); it != j.end())
    c.violation = require_string(*it, where + ".violation");
  c.unmet = strings_from(j, "unmet", where);
  c.orders = orders_from(j, "orders", where);
  c.noether_bound = bound_value_from_json(require(j, "noether_bound", where), where + ".noether_bound");
  if (auto it = j.find("degree_bound"); it != j.end())
    c.degree_bound = bound_value_from_json(*it, where + ".degree_bound");
  c.dim1_asserted = require_bool(require(j, "dim1_asserted", where), where + ".dim1_asserted");
  c.statement = require_string(require(j, "statement", where), where + ".statement");
  if (c.kind == kCurvePrefix) {
    c.ladder = rationals_from(j, "ladder", where);
    const Json& prefix = require_array(j, "certified_prefix", where);
    for (std::size_t i = 0; i < prefix.size(); ++i)
      c.certified_prefix.push_back(series_from_json(prefix[i], at(where, "certified_prefix", i)));
  }
  c.threshold = optional_rational(j, "threshold", where);
  c.M = optional_index(j, "M", where);
  return c;
}

std::string digest(const Json& j) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : j.dump()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

} // namespace pcert
