#include "chevalg/formal.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace chevalg {

namespace {
std::mutex g_vars_mu;
std::vector<std::string> g_var_names;
std::unordered_map<std::string, int> g_var_ids;
}  // namespace

int FormalVars::id(const std::string& name) {
  std::lock_guard<std::mutex> lock(g_vars_mu);
  auto it = g_var_ids.find(name);
  if (it != g_var_ids.end()) return it->second;
  int id = static_cast<int>(g_var_names.size());
  g_var_names.push_back(name);
  g_var_ids.emplace(name, id);
  return id;
}

const std::string& FormalVars::name(int id) {
  std::lock_guard<std::mutex> lock(g_vars_mu);
  if (id < 0 || id >= static_cast<int>(g_var_names.size()))
    throw std::out_of_range("FormalVars: unknown variable id");
  return g_var_names[id];
}

Monomial Monomial::var(int id, int exp) {
  Monomial m;
  if (exp > 0) m.factors.push_back({id, exp});
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  std::size_t i = 0, j = 0;
  while (i < factors.size() || j < o.factors.size()) {
    if (j == o.factors.size() || (i < factors.size() && factors[i].first < o.factors[j].first)) {
      r.factors.push_back(factors[i++]);
    } else if (i == factors.size() || o.factors[j].first < factors[i].first) {
      r.factors.push_back(o.factors[j++]);
    } else {
      r.factors.push_back({factors[i].first, factors[i].second + o.factors[j].second});
      ++i;
      ++j;
    }
  }
  return r;
}

int Monomial::degree_in(int var) const {
  for (auto& [v, e] : factors)
    if (v == var) return e;
  return 0;
}

int Monomial::total_degree() const {
  int d = 0;
  for (auto& [v, e] : factors) d += e;
  return d;
}

std::string Monomial::to_string() const {
  std::string s;
  for (auto& [v, e] : factors) {
    if (!s.empty()) s += "*";
    s += FormalVars::name(v);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

FormalPoly FormalPoly::constant(RatFunc c) {
  FormalPoly p(c.field());
  if (!c.is_zero()) p.terms_.emplace(Monomial::one(), std::move(c));
  return p;
}

FormalPoly FormalPoly::from_int(const GaloisField& f, long long v) {
  return constant(RatFunc::from_int(f, v));
}

FormalPoly FormalPoly::variable(const GaloisField& f, int var_id) {
  FormalPoly p(f);
  p.terms_.emplace(Monomial::var(var_id), RatFunc::from_int(f, 1));
  return p;
}

FormalPoly FormalPoly::variable(const GaloisField& f, const std::string& name) {
  return variable(f, FormalVars::id(name));
}

bool FormalPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial::one());
}

RatFunc FormalPoly::constant_value() const {
  if (terms_.empty()) return RatFunc(*f_);
  if (!is_constant()) throw std::domain_error("FormalPoly: not a constant");
  return terms_.begin()->second;
}

RatFunc FormalPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RatFunc(*f_) : it->second;
}

std::set<int> FormalPoly::vars() const {
  std::set<int> vs;
  for (auto& [m, c] : terms_)
    for (auto& [v, e] : m.factors) vs.insert(v);
  return vs;
}

int FormalPoly::degree_in(int var) const {
  int d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, m.degree_in(var));
  return d;
}

int FormalPoly::total_degree() const {
  int d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

void FormalPoly::add_term(const Monomial& m, const RatFunc& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

FormalPoly FormalPoly::operator+(const FormalPoly& o) const {
  FormalPoly r = *this;
  for (auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

FormalPoly FormalPoly::operator-() const {
  FormalPoly r(*f_);
  for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

FormalPoly FormalPoly::operator-(const FormalPoly& o) const { return *this + (-o); }

FormalPoly FormalPoly::operator*(const FormalPoly& o) const {
  FormalPoly r(*f_);
  for (auto& [m1, c1] : terms_)
    for (auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

FormalPoly FormalPoly::operator*(const RatFunc& c) const {
  return *this * constant(c);
}

FormalPoly FormalPoly::pow(int e) const {
  if (e < 0) throw std::domain_error("FormalPoly: negative power");
  FormalPoly r = from_int(*f_, 1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

FormalPoly FormalPoly::subst(int var, const FormalPoly& value) const {
  FormalPoly r(*f_);
  for (auto& [m, c] : terms_) {
    FormalPoly term = constant(c);
    Monomial rest;
    for (auto& [v, e] : m.factors) {
      if (v == var) {
        term = term * value.pow(e);
      } else {
        rest = rest * Monomial::var(v, e);
      }
    }
    FormalPoly rest_poly(*f_);
    rest_poly.terms_.emplace(rest, RatFunc::from_int(*f_, 1));
    r = r + term * rest_poly;
  }
  return r;
}

RatFunc FormalPoly::eval(const std::map<int, RatFunc>& assign) const {
  RatFunc r(*f_);
  for (auto& [m, c] : terms_) {
    RatFunc term = c;
    for (auto& [v, e] : m.factors) {
      auto it = assign.find(v);
      if (it == assign.end())
        throw std::invalid_argument("FormalPoly::eval: unassigned variable " + FormalVars::name(v));
      term = term * it->second.pow(e);
    }
    r = r + term;
  }
  return r;
}

std::string FormalPoly::to_string() const {
  if (terms_.empty()) return "0";
  // Highest total degree first, then the monomial order.
  std::vector<const std::pair<const Monomial, RatFunc>*> ts;
  for (auto& t : terms_) ts.push_back(&t);
  std::stable_sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
    return a->first.total_degree() > b->first.total_degree();
  });
  std::string s;
  for (auto* t : ts) {
    if (!s.empty()) s += "+";
    const auto& [m, c] = *t;
    if (m == Monomial::one()) {
      s += c.to_string();
      continue;
    }
    if (!c.is_one()) {
      std::string cs = c.to_string();
      bool wrap = cs.find('+') != std::string::npos;
      s += (wrap ? "(" + cs + ")" : cs) + "*";
    }
    s += m.to_string();
  }
  return s;
}

}  // namespace chevalg
