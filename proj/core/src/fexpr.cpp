#include "chevalg/fexpr.hpp"

#include <cctype>
#include <stdexcept>

namespace chevalg {

namespace {

struct FexprParser {
  const GaloisField& f;
  const std::string& s;
  const FexprResolver& resolve;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("field expression, column " + std::to_string(pos + 1) + ": " + msg);
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  FormalPoly expr() {
    FormalPoly v = term();
    for (;;) {
      if (eat('+')) {
        v = v + term();
      } else if (eat('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  FormalPoly term() {
    FormalPoly v = factor();
    for (;;) {
      if (eat('*')) {
        v = v * factor();
      } else if (eat('/')) {
        FormalPoly d = factor();
        if (!d.is_constant()) fail("division by a non-constant expression");
        RatFunc c = d.constant_value();
        if (c.is_zero()) fail("division by zero");
        v = v * c.inv();
      } else {
        return v;
      }
    }
  }

  FormalPoly factor() {
    FormalPoly b = base();
    if (eat('^')) {
      bool negexp = eat('-');
      long long e = integer();
      if (negexp) {
        if (!b.is_constant()) fail("negative power of a non-constant expression");
        RatFunc c = b.constant_value();
        if (c.is_zero()) fail("negative power of zero");
        return FormalPoly::constant(c.pow(-e));
      }
      if (e > 64) fail("exponent too large");
      return b.pow(static_cast<int>(e));
    }
    return b;
  }

  long long integer() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected integer");
    long long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 1'000'000'000LL) fail("integer too large");
      ++pos;
    }
    return v;
  }

  FormalPoly base() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of expression");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      FormalPoly v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == '-') {
      ++pos;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return FormalPoly::from_int(f, integer());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      if (name == "t") return FormalPoly::constant(RatFunc::t(f));
      if (name == "w") {
        if (f.m() == 1) fail("'w' is only defined for non-prime fields");
        return FormalPoly::constant(RatFunc::constant(f, f.generator()));
      }
      if (resolve) {
        if (auto v = resolve(name)) return *v;
      }
      return FormalPoly::variable(f, name);
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

FormalPoly parse_field_expr(const GaloisField& f, const std::string& src,
                            const FexprResolver& resolve) {
  FexprParser p{f, src, resolve};
  FormalPoly v = p.expr();
  p.skip_ws();
  if (p.pos != src.size()) p.fail("trailing input");
  return v;
}

RatFunc parse_rat_func(const GaloisField& f, const std::string& src) {
  FormalPoly v = parse_field_expr(f, src);
  if (!v.is_constant())
    throw std::invalid_argument("field expression: expected a constant, got formal unknowns");
  return v.constant_value();
}

}  // namespace chevalg
