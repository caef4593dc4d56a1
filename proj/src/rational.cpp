#include "pcert/rational.hpp"
#include "pcert/errors.hpp"

#include <cctype>
#include <climits>
#include <stdexcept>

namespace pcert {

namespace {

Integer parse_integer(std::string_view text, std::size_t offset) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size())
    throw ParseError("expected digits", offset + i);
  for (std::size_t j = i; j < text.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw ParseError("unexpected character '" + std::string(1, text[j]) + "' in number", offset + j);
  Integer z(std::string(text.substr(i)), 10);
  return negative ? Integer(-z) : z;
}

std::string_view trim(std::string_view s, std::size_t& offset) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

} // namespace

Rational parse_rational(std::string_view text) {
  std::size_t offset = 0;
  text = trim(text, offset);
  if (text.empty())
    throw ParseError("empty rational", offset);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_integer(text, offset));
  std::size_t den_offset = offset + slash + 1;
  Integer num = parse_integer(text.substr(0, slash), offset);
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
    throw ParseError("sign not allowed in denominator", den_offset);
  Integer den = parse_integer(den_text, den_offset);
  if (den == 0)
    throw ParseError("zero denominator", den_offset);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Integer floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

std::optional<Rational> exact_root(const Rational& z, unsigned long e) {
  if (e == 0)
    throw std::invalid_argument("exact_root: zero index");
  if (e == 1)
    return z;
  if (sgn(z) < 0 && e % 2 == 0)
    return std::nullopt;
  Integer num = abs(z.get_num());
  Integer root_num, root_den;
  if (mpz_root(root_num.get_mpz_t(), num.get_mpz_t(), e) == 0)
    return std::nullopt;
  if (mpz_root(root_den.get_mpz_t(), z.get_den_mpz_t(), e) == 0)
    return std::nullopt;
  if (sgn(z) < 0)
    root_num = -root_num;
  Rational r(root_num, root_den);
  r.canonicalize();
  return r;
}

Integer pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rational pow(const Rational& base, unsigned long e) {
  Rational r(pow(Integer(base.get_num()), e), pow(Integer(base.get_den()), e));
  r.canonicalize();
  return r;
}

long to_long(const Integer& z) {
  if (!z.fits_slong_p())
    throw std::overflow_error("integer " + to_string(z) + " does not fit in a long");
  return z.get_si();
}

Rational ratio(long num, long den) {
  if (den == 0)
    throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

} // namespace pcert
