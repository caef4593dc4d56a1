#pragma once

#include "pcert/parser.hpp"
#include "pcert/puiseux.hpp"
#include "pcert/rational.hpp"

#include <string>
#include <vector>

namespace testing {

inline pcert::Rational Q(const std::string& text) { return pcert::parse_rational(text); }

inline pcert::MultiPoly P(const std::string& text, std::size_t n = 2) {
  return pcert::parse_polynomial(text, pcert::default_variable_names(n));
}

/// Series from (exponent, coefficient) text pairs.
inline pcert::PuiseuxPoly S(const std::string& center, std::vector<std::pair<std::string, std::string>> terms) {
  std::vector<pcert::PuiseuxTerm> out;
  for (auto& [e, c] : terms)
    out.push_back({Q(e), Q(c)});
  return pcert::PuiseuxPoly(Q(center), std::move(out));
}

inline pcert::PuiseuxPoly T(const std::string& center = "0") { return pcert::PuiseuxPoly::identity(Q(center)); }

} // namespace testing
