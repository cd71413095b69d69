#include "gnorm/parse.hpp"

#include <cctype>

namespace gnorm {

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;
  const RingPtr& ring;

  Parser(const std::string& text, const RingPtr& r) : s(text), ring(r) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }

  [[noreturn]] void err(const std::string& msg) {
    fail(errc::parse_error, msg + " at offset " + std::to_string(i) + " in \"" +
                                s + "\"");
  }

  int64_t parse_int() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) err("expected integer");
    return std::stoll(s.substr(start, i - start));
  }

  uint32_t parse_exp() {
    int64_t e = parse_int();
    if (e < 0 || e > 1'000'000) err("exponent out of range");
    return static_cast<uint32_t>(e);
  }

  MultiPoly parse_atom() {
    skip_ws();
    if (i >= s.size()) err("unexpected end of input");
    char c = s[i];
    if (c == '(') {
      ++i;
      MultiPoly f = parse_sum();
      if (!eat(')')) err("expected ')'");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return MultiPoly::constant(ring, parse_int());
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = i;
      ++i;
      while (i < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
        ++i;
      std::string name = s.substr(start, i - start);
      size_t idx = ring->var_index(name);
      if (idx == PolyRing::npos) err("unknown variable " + name);
      return MultiPoly::variable(ring, idx);
    }
    err("unexpected character");
  }

  MultiPoly parse_power() {
    MultiPoly base = parse_atom();
    if (eat('^')) return base.pow(parse_exp());
    return base;
  }

  MultiPoly parse_product() {
    MultiPoly f = parse_power();
    while (eat('*')) f = f * parse_power();
    return f;
  }

  MultiPoly parse_sum() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    MultiPoly f = parse_product();
    if (neg) f = -f;
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++i;
        f = f + parse_product();
      } else if (c == '-') {
        ++i;
        f = f - parse_product();
      } else {
        break;
      }
    }
    return f;
  }
};

}  // namespace

MultiPoly parse_poly(const std::string& text, const RingPtr& ring) {
  Parser p(text, ring);
  MultiPoly f = p.parse_sum();
  p.skip_ws();
  if (p.i != text.size()) p.err("trailing input");
  return f;
}

}  // namespace gnorm
