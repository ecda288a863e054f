#include "chevalg/script.hpp"

#include <cctype>
#include <iostream>
#include <map>
#include <sstream>
#include <variant>

#include "chevalg/fexpr.hpp"

namespace chevalg {

GroundField parse_ground_field(const std::string& text) {
  std::size_t i = 0;
  auto fail = [&]() { throw std::invalid_argument("bad field description: " + text); };
  if (i >= text.size() || text[i] != 'F') fail();
  ++i;
  std::size_t start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (start == i) fail();
  int q = std::stoi(text.substr(start, i - start));
  GroundField g;
  g.rational_ext = false;
  if (i < text.size()) {
    if (text.substr(i) != "(t)") fail();
    g.rational_ext = true;
  }
  for (int p : {2, 3, 5}) {
    int m = 0;
    long long v = 1;
    while (v < q) {
      v *= p;
      ++m;
    }
    if (v == q) {
      g.gf = &GaloisField::get(p, m);
      return g;
    }
  }
  fail();
  return g;
}

const RootSystem& f4_root_system() {
  static const RootSystem rs = RootSystem::build("F4");
  return rs;
}

const ChevalleyData& f4_chevalley() {
  static const ChevalleyData chev(f4_root_system());
  return chev;
}

// ---------------------------------------------------------------------------
// Lexer / parser.
// ---------------------------------------------------------------------------

namespace {

struct Token {
  enum class K { Ident, Int, Punct, End };
  K k;
  std::string text;
  long long value = 0;
  int line = 1, col = 1;
};

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;
  int line = 1, col = 1;

  void advance() {
    if (pos < s.size() && s[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  Token next() {
    for (;;) {
      while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r')) advance();
      if (pos < s.size() && s[pos] == '#') {  // comment to end of line
        while (pos < s.size() && s[pos] != '\n') advance();
        continue;
      }
      break;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (pos >= s.size()) {
      t.k = Token::K::End;
      return t;
    }
    char c = s[pos];
    if (c == '\n' || c == ';') {
      advance();
      t.k = Token::K::Punct;
      t.text = ";";
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t st = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) advance();
      t.k = Token::K::Int;
      t.text = s.substr(st, pos - st);
      t.value = std::stoll(t.text);
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t st = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        advance();
      t.k = Token::K::Ident;
      t.text = s.substr(st, pos - st);
      // verify-paper is one keyword.
      if (t.text == "verify" && pos + 5 < s.size() + 1 && pos < s.size() && s[pos] == '-' &&
          s.compare(pos, 6, "-paper") == 0) {
        for (int i = 0; i < 6; ++i) advance();
        t.text = "verify-paper";
      }
      return t;
    }
    static const std::string punct = "*()+-/^,;:=";
    if (punct.find(c) != std::string::npos) {
      advance();
      t.k = Token::K::Punct;
      t.text = std::string(1, c);
      return t;
    }
    throw ParseError(t.line, t.col, std::string("unexpected character '") + c + "'");
  }
};

struct Parser {
  std::vector<Token> toks;
  std::size_t pos = 0;

  const Token& peek(int ahead = 0) const {
    std::size_t i = pos + ahead;
    return i < toks.size() ? toks[i] : toks.back();
  }
  Token take() { return toks[std::min(pos++, toks.size() - 1)]; }
  [[noreturn]] void fail(const Token& t, const std::string& msg) {
    throw ParseError(t.line, t.col, msg);
  }
  bool eat_punct(const std::string& p) {
    if (peek().k == Token::K::Punct && peek().text == p) {
      take();
      return true;
    }
    return false;
  }
  void expect_punct(const std::string& p, const std::string& what) {
    if (!eat_punct(p)) fail(peek(), "expected '" + p + "' " + what);
  }

  int integer() {
    bool neg = eat_punct("-");
    if (peek().k != Token::K::Int) fail(peek(), "expected integer");
    long long v = take().value;
    return static_cast<int>(neg ? -v : v);
  }

  // Collects the raw source of a field expression up to an unbalanced ')' or
  // a top-level ',' / ';'.
  std::string fexpr_text() {
    std::string out;
    int depth = 0;
    for (;;) {
      const Token& t = peek();
      if (t.k == Token::K::End) break;
      if (t.k == Token::K::Punct) {
        if (t.text == "(") ++depth;
        if (t.text == ")") {
          if (depth == 0) break;
          --depth;
        }
        if ((t.text == "," || t.text == ";") && depth == 0) break;
      }
      out += take().text;
    }
    if (out.empty()) fail(peek(), "expected field expression");
    return out;
  }

  Script::ExprPtr word_term() {
    const Token& t = peek();
    if (t.k == Token::K::Punct && t.text == "(") {
      take();
      auto e = word_expr();
      expect_punct(")", "to close '('");
      return e;
    }
    if (t.k != Token::K::Ident) fail(t, "expected a word term");
    std::string name = take().text;
    auto node = std::make_shared<Script::Expr>();
    if (name == "id") {
      node->k = Script::Expr::K::Identity;
      return node;
    }
    if (name == "e") {
      node->k = Script::Expr::K::RootElem;
      expect_punct("(", "after 'e'");
      node->root = integer();
      expect_punct(",", "between root and parameter");
      node->fexpr = fexpr_text();
      expect_punct(")", "to close 'e('");
      return node;
    }
    if (name == "n") {
      node->k = Script::Expr::K::Weyl;
      expect_punct("(", "after 'n'");
      node->root = integer();
      expect_punct(")", "to close 'n('");
      return node;
    }
    if (name == "cochar") {
      node->k = Script::Expr::K::Cochar;
      expect_punct("(", "after 'cochar'");
      node->ints.push_back(integer());
      while (eat_punct(",")) node->ints.push_back(integer());
      if (eat_punct(";")) node->fexpr = fexpr_text();
      expect_punct(")", "to close 'cochar('");
      return node;
    }
    if (name == "torus") {
      node->k = Script::Expr::K::Torus;
      expect_punct("(", "after 'torus'");
      do {
        int idx = integer();
        expect_punct(":", "between torus index and value");
        node->binds.push_back({idx, fexpr_text()});
      } while (eat_punct(","));
      expect_punct(")", "to close 'torus('");
      return node;
    }
    if (peek().k == Token::K::Punct && peek().text == "(") {
      node->k = Script::Expr::K::Call;
      node->name = name;
      take();
      if (!(peek().k == Token::K::Punct && peek().text == ")")) {
        node->args.push_back(call_arg());
        while (eat_punct(",")) node->args.push_back(call_arg());
      }
      expect_punct(")", "to close call");
      return node;
    }
    node->k = Script::Expr::K::Ident;
    node->name = name;
    return node;
  }

  // A call argument is a word expression, except that bare field expressions
  // (for is_k, sqrt, ...) are kept as RootElem-free fexpr nodes.
  Script::ExprPtr call_arg() {
    // Try a word expression first; fall back to a raw field expression.
    std::size_t save = pos;
    try {
      auto e = word_expr();
      const Token& t = peek();
      if (t.k == Token::K::Punct && (t.text == "," || t.text == ")")) return e;
      pos = save;
    } catch (const ParseError&) {
      pos = save;
    }
    auto node = std::make_shared<Script::Expr>();
    node->k = Script::Expr::K::Ident;
    node->name = "";
    node->fexpr = fexpr_text();
    return node;
  }

  Script::ExprPtr word_expr() {
    auto e = word_term();
    if (!(peek().k == Token::K::Punct && peek().text == "*")) return e;
    auto mul = std::make_shared<Script::Expr>();
    mul->k = Script::Expr::K::Mul;
    mul->args.push_back(e);
    while (eat_punct("*")) mul->args.push_back(word_term());
    return mul;
  }

  Script parse() {
    Script sc;
    for (;;) {
      while (eat_punct(";")) {
      }
      if (peek().k == Token::K::End) break;
      Script::Stmt st;
      const Token& t = peek();
      if (t.k == Token::K::Ident && t.text == "let") {
        take();
        if (peek().k != Token::K::Ident) fail(peek(), "expected identifier after 'let'");
        st.k = Script::Stmt::K::Let;
        st.name = take().text;
        expect_punct("=", "in let binding");
        st.expr = word_expr();
      } else if (t.k == Token::K::Ident && t.text == "assert") {
        take();
        st.k = Script::Stmt::K::Assert;
        if (peek().k == Token::K::Ident && peek().text == "not") {
          take();
          st.k = Script::Stmt::K::AssertNot;
        }
        st.expr = word_expr();
      } else if (t.k == Token::K::Ident && t.text == "verify-paper") {
        take();
        st.k = Script::Stmt::K::VerifyPaper;
      } else {
        st.k = Script::Stmt::K::Eval;
        st.expr = word_expr();
      }
      sc.stmts().push_back(std::move(st));
      if (peek().k == Token::K::End) break;
      if (!eat_punct(";")) fail(peek(), "expected end of statement");
    }
    return sc;
  }
};

std::string expr_pretty(const Script::ExprPtr& e) {
  using K = Script::Expr::K;
  switch (e->k) {
    case K::Identity:
      return "id";
    case K::Mul: {
      std::string s;
      for (const auto& a : e->args) {
        if (!s.empty()) s += "*";
        s += expr_pretty(a);
      }
      return s;
    }
    case K::RootElem:
      return "e(" + std::to_string(e->root) + "," + e->fexpr + ")";
    case K::Weyl:
      return "n(" + std::to_string(e->root) + ")";
    case K::Torus: {
      std::string s = "torus(";
      for (std::size_t i = 0; i < e->binds.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e->binds[i].first) + ":" + e->binds[i].second;
      }
      return s + ")";
    }
    case K::Cochar: {
      std::string s = "cochar(";
      for (std::size_t i = 0; i < e->ints.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e->ints[i]);
      }
      if (!e->fexpr.empty()) s += ";" + e->fexpr;
      return s + ")";
    }
    case K::Ident:
      return e->name.empty() ? e->fexpr : e->name;
    case K::Call: {
      std::string s = e->name + "(";
      for (std::size_t i = 0; i < e->args.size(); ++i) {
        if (i) s += ",";
        s += expr_pretty(e->args[i]);
      }
      return s + ")";
    }
  }
  return "";
}

}  // namespace

Script parse_script(const std::string& src) {
  Lexer lx{src};
  Parser p;
  for (;;) {
    Token t = lx.next();
    bool end = t.k == Token::K::End;
    p.toks.push_back(std::move(t));
    if (end) break;
  }
  return p.parse();
}

std::string Script::pretty() const {
  std::string out;
  for (const auto& st : stmts_) {
    switch (st.k) {
      case Stmt::K::Let:
        out += "let " + st.name + " = " + expr_pretty(st.expr);
        break;
      case Stmt::K::Eval:
        out += expr_pretty(st.expr);
        break;
      case Stmt::K::Assert:
        out += "assert " + expr_pretty(st.expr);
        break;
      case Stmt::K::AssertNot:
        out += "assert not " + expr_pretty(st.expr);
        break;
      case Stmt::K::VerifyPaper:
        out += "verify-paper";
        break;
    }
    out += ";\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Evaluator.
// ---------------------------------------------------------------------------

namespace {

struct Value {
  std::variant<bool, FormalPoly, Cocharacter, GroupWord, nlohmann::ordered_json, std::string> v;

  std::string print() const {
    if (auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
    if (auto* p = std::get_if<FormalPoly>(&v)) return p->to_string();
    if (auto* c = std::get_if<Cocharacter>(&v)) {
      std::string s = "cochar(";
      for (std::size_t i = 0; i < c->coeffs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c->coeffs[i]);
      }
      return s + ")";
    }
    if (auto* w = std::get_if<GroupWord>(&v)) return w->to_string();
    if (auto* j = std::get_if<nlohmann::ordered_json>(&v)) return j->dump(2);
    return std::get<std::string>(v);
  }
};

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Evaluator {
  GroundField field;
  std::map<std::string, Value> env;

  const GaloisField& gf() const { return *field.gf; }

  bool uses_t(const FormalPoly& p) const {
    for (const auto& [m, c] : p.terms())
      if (c.num().degree() > 0 || c.den().degree() > 0) return true;
    return false;
  }

  FormalPoly eval_fexpr(const std::string& src) {
    FexprResolver resolver = [&](const std::string& name) -> std::optional<FormalPoly> {
      auto it = env.find(name);
      if (it == env.end()) return std::nullopt;
      if (auto* p = std::get_if<FormalPoly>(&it->second.v)) return *p;
      throw EvalError("identifier '" + name + "' is not a field value");
    };
    FormalPoly p = parse_field_expr(gf(), src, resolver);
    if (!field.rational_ext && uses_t(p))
      throw EvalError("the field has no rational extension; 't' is unavailable");
    return p;
  }

  GroupWord as_word(const Value& v, const char* what) {
    if (auto* w = std::get_if<GroupWord>(&v.v)) return *w;
    if (auto* p = std::get_if<FormalPoly>(&v.v)) {
      (void)p;
      throw EvalError(std::string(what) + ": expected a word, got a field value");
    }
    throw EvalError(std::string(what) + ": expected a word");
  }

  Cocharacter as_cochar(const Value& v, const char* what) {
    if (auto* c = std::get_if<Cocharacter>(&v.v)) return *c;
    throw EvalError(std::string(what) + ": expected a cocharacter");
  }

  FormalPoly as_field(const Value& v, const char* what) {
    if (auto* p = std::get_if<FormalPoly>(&v.v)) return *p;
    throw EvalError(std::string(what) + ": expected a field value");
  }

  RatFunc as_const(const Value& v, const char* what) {
    FormalPoly p = as_field(v, what);
    if (!p.is_constant()) throw EvalError(std::string(what) + ": expected a constant");
    return p.constant_value();
  }

  Value eval(const Script::ExprPtr& e) {
    using K = Script::Expr::K;
    switch (e->k) {
      case K::Identity:
        return {GroupWord::identity()};
      case K::Mul: {
        GroupWord w;
        for (const auto& a : e->args) w = w * as_word(eval(a), "product");
        return {w};
      }
      case K::RootElem: {
        FormalPoly p = eval_fexpr(e->fexpr);
        (void)f4_root_system().root(e->root);  // validates the label
        return {GroupWord::root_elem(e->root, p)};
      }
      case K::Weyl:
        (void)f4_root_system().root(e->root);
        return {GroupWord::weyl_elem(e->root)};
      case K::Torus: {
        TorusFactor t;
        for (const auto& [idx, src] : e->binds) {
          if (idx < 1 || idx > f4_root_system().rank())
            throw EvalError("torus index out of range");
          RatFunc v = as_const(Value{eval_fexpr(src)}, "torus value");
          t.set(idx - 1, v);
        }
        return {GroupWord::torus_elem(t)};
      }
      case K::Cochar: {
        Cocharacter c{e->ints};
        if (static_cast<int>(c.coeffs.size()) != f4_root_system().rank())
          throw EvalError("cocharacter must have one coefficient per simple root");
        if (e->fexpr.empty()) return {c};
        RatFunc a = as_const(Value{eval_fexpr(e->fexpr)}, "cocharacter value");
        return {GroupWord::cochar_elem(f4_root_system(), c, a)};
      }
      case K::Ident: {
        if (e->name.empty()) return {eval_fexpr(e->fexpr)};
        auto it = env.find(e->name);
        if (it != env.end()) return it->second;
        // Bare identifiers fall back to field expressions (formal unknown).
        return {eval_fexpr(e->name)};
      }
      case K::Call:
        return call(e);
    }
    throw EvalError("unreachable expression kind");
  }

  Value call(const Script::ExprPtr& e) {
    const auto& chev = f4_chevalley();
    auto need = [&](std::size_t n) {
      if (e->args.size() != n)
        throw EvalError(e->name + ": expected " + std::to_string(n) + " argument(s)");
    };
    if (e->name == "collect") {
      if (e->args.size() < 1 || e->args.size() > 2) throw EvalError("collect: 1 or 2 arguments");
      GroupWord w = as_word(eval(e->args[0]), "collect");
      CollectContext ctx;
      ctx.chev = &chev;
      if (e->args.size() == 2) {
        ctx.grading = as_cochar(eval(e->args[1]), "collect");
      } else {
        std::set<int> pos;
        for (int i = 1; i <= f4_root_system().num_positive(); ++i) pos.insert(i);
        ctx.allowed = pos;
      }
      return {collect(w, ctx).to_word()};
    }
    if (e->name == "conj") {
      if (e->args.size() < 2 || e->args.size() > 3) throw EvalError("conj: 2 or 3 arguments");
      GroupWord by = as_word(eval(e->args[0]), "conj");
      GroupWord w = as_word(eval(e->args[1]), "conj");
      Cocharacter lam = e->args.size() == 3 ? as_cochar(eval(e->args[2]), "conj")
                                            : coroot_cochar(f4_root_system(), 13);
      if (by.factors().size() == 1) {
        if (auto* wf = std::get_if<WeylFactor>(&by.factors()[0]))
          return {conj_by_weyl(chev, wf->root, w)};
        if (auto* tf = std::get_if<TorusFactor>(&by.factors()[0]))
          return {conj_by_torus(chev, *tf, w)};
      }
      CollectContext ctx;
      ctx.chev = &chev;
      ctx.grading = lam;
      return {conj_by_unipotent(chev, by, w, ctx)};
    }
    if (e->name == "limit") {
      need(2);
      Cocharacter lam = as_cochar(eval(e->args[0]), "limit");
      GroupWord w = as_word(eval(e->args[1]), "limit");
      auto lim = take_limit(chev, lam, w);
      if (!lim) return {std::string("no limit")};
      return {*lim};
    }
    if (e->name == "classify") {
      need(1);
      Cocharacter lam = as_cochar(eval(e->args[0]), "classify");
      auto cls = classify(f4_root_system(), lam);
      nlohmann::ordered_json j;
      j["cochar"] = lam.coeffs;
      j["p_roots"] = cls.p_roots;
      j["l_roots"] = cls.l_roots;
      j["u_roots"] = cls.u_roots;
      return {j};
    }
    if (e->name == "in_parabolic") {
      need(2);
      GroupWord w = as_word(eval(e->args[0]), "in_parabolic");
      Cocharacter lam = as_cochar(eval(e->args[1]), "in_parabolic");
      return {in_parabolic(chev, w, lam)};
    }
    if (e->name == "weight") {
      need(2);
      Cocharacter lam = as_cochar(eval(e->args[0]), "weight");
      // The root label is a literal integer, read off the argument text
      // (field elements cannot represent labels beyond the characteristic).
      long long lab = 0;
      try {
        lab = std::stoll(expr_pretty(e->args[1]));
      } catch (...) {
        throw EvalError("weight: expected an integer root label");
      }
      int w = weight(f4_root_system(), lam, static_cast<int>(lab));
      return {std::to_string(w)};
    }
    if (e->name == "wordeq") {
      need(2);
      GroupWord a = as_word(eval(e->args[0]), "wordeq");
      GroupWord b = as_word(eval(e->args[1]), "wordeq");
      return {words_equal_ad(chev, gf(), a, b)};
    }
    if (e->name == "sigma") {
      need(1);
      return {sigma_isogeny(chev, as_word(eval(e->args[0]), "sigma"))};
    }
    if (e->name == "is_k") {
      need(1);
      if (!field.rational_ext || gf().p() != 2)
        throw EvalError("is_k: needs characteristic 2 with the rational extension enabled");
      return {is_k_point(as_const(eval(e->args[0]), "is_k"))};
    }
    if (e->name == "is_square") {
      need(1);
      return {sqrt_char2(as_const(eval(e->args[0]), "is_square")).has_value()};
    }
    if (e->name == "sqrt") {
      need(1);
      auto r = sqrt_char2(as_const(eval(e->args[0]), "sqrt"));
      if (!r) throw EvalError("sqrt: the value has no square root in K");
      return {FormalPoly::constant(*r)};
    }
    if (e->name == "inv") {
      need(1);
      return {FormalPoly::constant(as_const(eval(e->args[0]), "inv").inv())};
    }
    throw EvalError("unknown function '" + e->name + "'");
  }
};

}  // namespace

GroupWord parse_word(const std::string& src, const GroundField& field) {
  Script sc = parse_script(src);
  if (sc.stmts().size() != 1 || sc.stmts()[0].k != Script::Stmt::K::Eval)
    throw std::invalid_argument("expected a single word expression");
  Evaluator ev{field, {}};
  Value v = ev.eval(sc.stmts()[0].expr);
  if (auto* w = std::get_if<GroupWord>(&v.v)) return *w;
  throw std::invalid_argument("expression is not a word");
}

Cocharacter parse_cochar_coeffs(const std::string& src, int rank) {
  Cocharacter c;
  std::stringstream ss(src);
  std::string item;
  while (std::getline(ss, item, ',')) c.coeffs.push_back(std::stoi(item));
  if (static_cast<int>(c.coeffs.size()) != rank)
    throw std::invalid_argument("cocharacter needs " + std::to_string(rank) + " coefficients");
  return c;
}

int run_script(const Script& script, const RunOptions& opts) {
  std::ostream& out = opts.out ? *opts.out : std::cout;
  Evaluator ev{opts.field, {}};
  int exit_code = 0;
  auto results = nlohmann::ordered_json::array();

  for (std::size_t i = 0; i < script.stmts().size(); ++i) {
    const auto& st = script.stmts()[i];
    nlohmann::ordered_json entry;
    entry["statement"] = static_cast<int>(i + 1);
    try {
      switch (st.k) {
        case Script::Stmt::K::Let: {
          Value v = ev.eval(st.expr);
          ev.env[st.name] = v;
          entry["let"] = st.name;
          entry["value"] = v.print();
          if (!opts.json) out << st.name << " = " << v.print() << "\n";
          break;
        }
        case Script::Stmt::K::Eval: {
          Value v = ev.eval(st.expr);
          entry["value"] = v.print();
          if (!opts.json) out << v.print() << "\n";
          break;
        }
        case Script::Stmt::K::Assert:
        case Script::Stmt::K::AssertNot: {
          Value v = ev.eval(st.expr);
          auto* b = std::get_if<bool>(&v.v);
          if (!b) throw EvalError("assert: expression is not boolean");
          bool ok = st.k == Script::Stmt::K::Assert ? *b : !*b;
          entry["assertion"] = ok ? "pass" : "fail";
          if (!ok) {
            exit_code = 1;
            if (!opts.json) out << "assertion failed (statement " << (i + 1) << ")\n";
          }
          break;
        }
        case Script::Stmt::K::VerifyPaper: {
          CorpusReport rep = run_corpus();
          entry["verify_paper"] = rep.to_json();
          if (!opts.json) out << rep.to_text();
          if (!rep.all_pass) exit_code = 1;
          break;
        }
      }
    } catch (const std::exception& ex) {
      entry["error"] = ex.what();
      exit_code = 1;
      if (!opts.json) out << "error (statement " << (i + 1) << "): " << ex.what() << "\n";
    }
    results.push_back(entry);
  }
  if (opts.json) {
    nlohmann::ordered_json j;
    j["results"] = results;
    out << j.dump(2) << "\n";
  }
  return exit_code;
}

int run_repl(const RunOptions& opts, std::istream& in) {
  std::ostream& out = opts.out ? *opts.out : std::cout;
  Evaluator ev{opts.field, {}};
  out << "chevalg repl; 'exit' quits\n";
  std::string line;
  int last = 0;
  for (;;) {
    out << "> " << std::flush;
    if (!std::getline(in, line)) break;
    if (line == "exit" || line == "quit") break;
    if (line.empty()) continue;
    try {
      Script sc = parse_script(line);
      RunOptions ro = opts;
      // Share the environment across lines by running statements manually.
      for (const auto& st : sc.stmts()) {
        switch (st.k) {
          case Script::Stmt::K::Let: {
            Value v = ev.eval(st.expr);
            ev.env[st.name] = v;
            out << st.name << " = " << v.print() << "\n";
            break;
          }
          case Script::Stmt::K::Eval:
            out << ev.eval(st.expr).print() << "\n";
            break;
          case Script::Stmt::K::Assert:
          case Script::Stmt::K::AssertNot: {
            Value v = ev.eval(st.expr);
            auto* b = std::get_if<bool>(&v.v);
            if (!b) throw EvalError("assert: expression is not boolean");
            bool ok = st.k == Script::Stmt::K::Assert ? *b : !*b;
            out << (ok ? "ok" : "assertion failed") << "\n";
            if (!ok) last = 1;
            break;
          }
          case Script::Stmt::K::VerifyPaper: {
            CorpusReport rep = run_corpus();
            out << rep.to_text();
            if (!rep.all_pass) last = 1;
            break;
          }
        }
      }
      (void)ro;
    } catch (const std::exception& ex) {
      out << "error: " << ex.what() << "\n";
    }
  }
  return last;
}

}  // namespace chevalg
