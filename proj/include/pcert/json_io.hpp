#pragma once

#include "pcert/bivariate_certify.hpp"
#include "pcert/bounds.hpp"
#include "pcert/multivar_certify.hpp"
#include "pcert/newton_puiseux.hpp"

#include <json.hpp>

#include <string>

namespace pcert {

/// Object keys are kept sorted, so dump() is canonical.
using Json = nlohmann::json;

// Every reader below throws ValidationError naming the offending path, which
// is built from `where`.

Json to_json(const Rational& r);
/// Accepts "p", "p/q" or a JSON integer.
Rational rational_from_json(const Json& j, const std::string& where);

Json to_json(const Order& o);
Order order_from_json(const Json& j, const std::string& where);

/// {"center": "p/q", "terms": [{"exp": "p/q", "coeff": "p/q"}, ...]}
Json to_json(const PuiseuxPoly& s);
PuiseuxPoly series_from_json(const Json& j, const std::string& where);

Json to_json(const BoundReport& b);
Json to_json(const BoundValue& b);
BoundValue bound_value_from_json(const Json& j, const std::string& where);

Json to_json(const Branch& b);

Json to_json(const PrefixCertificate& c);
PrefixCertificate prefix_certificate_from_json(const Json& j, const std::string& where);

Json to_json(const SystemCertificate& c);
SystemCertificate system_certificate_from_json(const Json& j, const std::string& where);

/// Hex FNV-1a 64 of j.dump().
std::string digest(const Json& j);

// Typed field access with path-carrying errors.
const Json& require(const Json& obj, const std::string& key, const std::string& where);
std::string require_string(const Json& j, const std::string& where);
long require_integer(const Json& j, const std::string& where);
bool require_bool(const Json& j, const std::string& where);

} // namespace pcert
