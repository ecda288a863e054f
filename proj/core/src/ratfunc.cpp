#include "chevalg/ratfunc.hpp"

#include <stdexcept>

namespace chevalg {

Poly::Poly(const GaloisField& f, std::vector<GaloisField::Elem> coeffs)
    : f_(&f), c_(std::move(coeffs)) {
  trim();
}

Poly Poly::constant(const GaloisField& f, GaloisField::Elem c) {
  return Poly(f, {c});
}

Poly Poly::t(const GaloisField& f) { return Poly(f, {0, 1}); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

GaloisField::Elem Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

GaloisField::Elem Poly::leading() const {
  if (c_.empty()) return 0;
  return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<GaloisField::Elem> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = f_->add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
  return Poly(*f_, std::move(r));
}

Poly Poly::operator-() const {
  std::vector<GaloisField::Elem> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = f_->neg(c_[i]);
  return Poly(*f_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(*f_);
  std::vector<GaloisField::Elem> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = f_->add(r[i + j], f_->mul(c_[i], o.c_[j]));
  return Poly(*f_, std::move(r));
}

bool Poly::operator<(const Poly& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  for (int i = degree(); i >= 0; --i)
    if (coeff(i) != o.coeff(i)) return coeff(i) < o.coeff(i);
  return false;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("Poly: division by zero");
  Poly q(*f_), r = *this;
  std::vector<GaloisField::Elem> qc(std::max<int>(0, degree() - d.degree() + 1), 0);
  GaloisField::Elem lead_inv = f_->inv(d.leading());
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int shift = r.degree() - d.degree();
    GaloisField::Elem c = f_->mul(r.leading(), lead_inv);
    qc[shift] = f_->add(qc[shift], c);
    std::vector<GaloisField::Elem> sub(shift + d.c_.size(), 0);
    for (std::size_t i = 0; i < d.c_.size(); ++i) sub[i + shift] = f_->mul(c, d.c_[i]);
    r = r - Poly(*f_, std::move(sub));
  }
  return {Poly(*f_, std::move(qc)), r};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = b;
    b = r;
  }
  return a.monic();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(f_->inv(leading()));
}

Poly Poly::scaled(GaloisField::Elem c) const {
  std::vector<GaloisField::Elem> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = f_->mul(c_[i], c);
  return Poly(*f_, std::move(r));
}

GaloisField::Elem Poly::eval(GaloisField::Elem x) const {
  GaloisField::Elem r = 0;
  for (int i = degree(); i >= 0; --i) r = f_->add(f_->mul(r, x), coeff(i));
  return r;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    GaloisField::Elem c = coeff(i);
    if (c == 0) continue;
    if (!s.empty()) s += "+";
    std::string cs = f_->to_string(c);
    bool composite = cs.find('+') != std::string::npos;
    if (i == 0) {
      s += composite ? "(" + cs + ")" : cs;
      continue;
    }
    if (c != 1) s += (composite ? "(" + cs + ")" : cs) + "*";
    s += var;
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s;
}

RatFunc::RatFunc(const GaloisField& f) : num_(f), den_(Poly::constant(f, 1)) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  canonicalize();
}

RatFunc RatFunc::from_int(const GaloisField& f, long long v) {
  return constant(f, f.from_int(v));
}

RatFunc RatFunc::constant(const GaloisField& f, GaloisField::Elem c) {
  return RatFunc(Poly::constant(f, c), Poly::constant(f, 1));
}

RatFunc RatFunc::t(const GaloisField& f) {
  return RatFunc(Poly::t(f), Poly::constant(f, 1));
}

void RatFunc::canonicalize() {
  const GaloisField& f = num_.field();
  if (num_.is_zero()) {
    den_ = Poly::constant(f, 1);
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  GaloisField::Elem lead = den_.leading();
  if (lead != 1) {
    GaloisField::Elem li = f.inv(lead);
    num_ = num_.scaled(li);
    den_ = den_.scaled(li);
  }
}

bool RatFunc::is_one() const {
  return num_.degree() == 0 && den_.degree() == 0 && num_.coeff(0) == 1;
}

GaloisField::Elem RatFunc::constant_value() const {
  if (!is_constant()) throw std::domain_error("RatFunc: not a constant");
  return num_.coeff(0);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inv(); }

RatFunc RatFunc::inv() const {
  if (is_zero()) throw std::domain_error("RatFunc: inversion of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long long e) const {
  if (e < 0) return inv().pow(-e);
  RatFunc r = from_int(field(), 1);
  RatFunc b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool RatFunc::operator<(const RatFunc& o) const {
  if (!(num_ == o.num_)) return num_ < o.num_;
  return den_ < o.den_;
}

std::string RatFunc::to_string(const std::string& var) const {
  std::string n = num_.to_string(var);
  if (den_.degree() == 0) return n;
  std::string d = den_.to_string(var);
  bool np = n.find('+') != std::string::npos;
  bool dp = d.find('+') != std::string::npos || d.find('*') != std::string::npos ||
            d.find('^') != std::string::npos;
  std::string s = np ? "(" + n + ")" : n;
  s += "/";
  s += dp ? "(" + d + ")" : "(" + d + ")";
  return s;
}

namespace {

// In characteristic 2 a polynomial is a square iff all odd coefficients
// vanish; the root has the p-th roots of the even coefficients.
std::optional<Poly> poly_sqrt_char2(const Poly& f) {
  const GaloisField& gf = f.field();
  if (f.is_zero()) return Poly(gf);
  if (f.degree() % 2 != 0) return std::nullopt;
  std::vector<GaloisField::Elem> r(f.degree() / 2 + 1, 0);
  for (int i = 0; i <= f.degree(); ++i) {
    if (i % 2 == 1) {
      if (f.coeff(i) != 0) return std::nullopt;
    } else {
      r[i / 2] = gf.pth_root(f.coeff(i));
    }
  }
  return Poly(gf, std::move(r));
}

}  // namespace

bool is_k_point(const RatFunc& x) {
  if (x.field().p() != 2)
    throw std::domain_error("is_k_point: defined in characteristic 2 only");
  return sqrt_char2(x).has_value();
}

std::optional<RatFunc> sqrt_char2(const RatFunc& x) {
  if (x.field().p() != 2)
    throw std::domain_error("sqrt_char2: defined in characteristic 2 only");
  auto n = poly_sqrt_char2(x.num());
  if (!n) return std::nullopt;
  auto d = poly_sqrt_char2(x.den());
  if (!d) return std::nullopt;
  return RatFunc(*n, *d);
}

}  // namespace chevalg
