#include "pcert/parser.hpp"
#include "pcert/errors.hpp"

#include <cctype>
#include <set>

namespace pcert {

namespace {

class Parser {
public:
  Parser(std::string_view text, const std::vector<std::string>& names) : text_(text), names_(names) {}

  MultiPoly parse() {
    MultiPoly p = expression();
    skip_space();
    if (pos_ != text_.size())
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

private:
  // expression := term (('+' | '-') term)*
  MultiPoly expression() {
    MultiPoly acc = term();
    for (;;) {
      skip_space();
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  // term := unary ('*' unary)*
  MultiPoly term() {
    MultiPoly acc = unary();
    for (;;) {
      skip_space();
      if (!accept('*'))
        return acc;
      acc *= unary();
    }
  }

  // unary := ('-' | '+') unary | power
  MultiPoly unary() {
    skip_space();
    if (accept('-'))
      return -unary();
    if (accept('+'))
      return unary();
    return power();
  }

  // power := atom ('^' exponent)?
  MultiPoly power() {
    MultiPoly base = atom();
    skip_space();
    if (!accept('^'))
      return base;
    skip_space();
    const bool paren = accept('(');
    skip_space();
    const std::size_t at = pos_;
    if (at < text_.size() && text_[at] == '-')
      fail("negative exponent");
    Integer e = digits();
    skip_space();
    if (paren && !accept(')'))
      fail("expected ')'");
    if (!e.fits_ulong_p() || e > 100000)
      throw ParseError("exponent too large", at);
    return pcert::pow(base, e.get_ui());
  }

  // atom := number ('/' number)? | name | '(' expression ')'
  MultiPoly atom() {
    skip_space();
    if (pos_ >= text_.size())
      fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expression();
      skip_space();
      if (!accept(')'))
        fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = digits();
      Integer den = 1;
      skip_space();
      if (accept('/')) {
        skip_space();
        const std::size_t at = pos_;
        den = digits();
        if (den == 0)
          throw ParseError("zero denominator", at);
      }
      Rational r(num, den);
      r.canonicalize();
      return MultiPoly::constant(names_.size(), r);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
          return MultiPoly::variable(names_.size(), i);
      throw ParseError("unknown variable '" + std::string(name) + "'", start);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Integer digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected a number");
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  std::string_view text_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      return false;
  return true;
}

} // namespace

MultiPoly parse_polynomial(std::string_view text, const std::vector<std::string>& names) {
  if (names.empty())
    throw ParseError("no variables declared", 0);
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!valid_name(n))
      throw ParseError("invalid variable name '" + n + "'", 0);
    if (!seen.insert(n).second)
      throw ParseError("duplicate variable name '" + n + "'", 0);
  }
  return Parser(text, names).parse();
}

} // namespace pcert
