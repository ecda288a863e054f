#include "chevalg/galois.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace chevalg {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense polynomials over F_p with int coefficients in [0, p).
using PP = std::vector<int>;

PP pp_trim(PP a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

PP pp_mul(const PP& a, const PP& b, int p) {
  if (a.empty() || b.empty()) return {};
  PP r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return pp_trim(std::move(r));
}

// Remainder of a by monic b.
PP pp_mod(PP a, const PP& b, int p) {
  a = pp_trim(std::move(a));
  while (a.size() >= b.size()) {
    int c = a.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      int& t = a[i + shift];
      t = ((t - c * b[i]) % p + p) % p;
    }
    a = pp_trim(std::move(a));
  }
  return a;
}

bool pp_is_irreducible(const PP& f, int p) {
  int deg = static_cast<int>(f.size()) - 1;
  if (deg < 1) return false;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (int d = 1; 2 * d <= deg; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      PP g(d + 1, 0);
      long long c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (pp_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

PP first_irreducible(int p, int m) {
  long long count = 1;
  for (int i = 0; i < m; ++i) count *= p;
  for (long long code = 0; code < count; ++code) {
    PP f(m + 1, 0);
    long long c = code;
    for (int i = 0; i < m; ++i) {
      f[i] = static_cast<int>(c % p);
      c /= p;
    }
    f[m] = 1;
    if (pp_is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

GaloisField::GaloisField(int p, int m) : p_(p), m_(m) {
  if (!is_prime(p)) throw std::invalid_argument("GaloisField: p must be prime");
  if (m < 1 || m > 4) throw std::invalid_argument("GaloisField: need 1 <= m <= 4");
  long long q = 1;
  for (int i = 0; i < m; ++i) q *= p;
  if (q > 625) throw std::invalid_argument("GaloisField: q too large");
  q_ = static_cast<int>(q);
  irreducible_ = m == 1 ? PP{0, 1} : first_irreducible(p, m);

  auto decode = [&](Elem a) {
    PP d(m_, 0);
    for (int i = 0; i < m_; ++i) {
      d[i] = a % p_;
      a = static_cast<Elem>(a / p_);
    }
    return d;
  };
  auto encode = [&](const PP& d) {
    long long v = 0;
    for (int i = m_ - 1; i >= 0; --i) v = v * p_ + (i < static_cast<int>(d.size()) ? d[i] : 0);
    return static_cast<Elem>(v);
  };

  add_.resize(static_cast<std::size_t>(q_) * q_);
  mul_.resize(static_cast<std::size_t>(q_) * q_);
  neg_.resize(q_);
  inv_tab_.assign(q_, 0);
  for (int a = 0; a < q_; ++a) {
    PP da = decode(static_cast<Elem>(a));
    PP na(m_, 0);
    for (int i = 0; i < m_; ++i) na[i] = (p_ - da[i]) % p_;
    neg_[a] = encode(na);
    for (int b = 0; b < q_; ++b) {
      PP db = decode(static_cast<Elem>(b));
      PP s(m_, 0);
      for (int i = 0; i < m_; ++i) s[i] = (da[i] + db[i]) % p_;
      add_[idx(static_cast<Elem>(a), static_cast<Elem>(b))] = encode(s);
      mul_[idx(static_cast<Elem>(a), static_cast<Elem>(b))] =
          encode(pp_mod(pp_mul(pp_trim(da), pp_trim(db), p_), irreducible_, p_));
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[idx(static_cast<Elem>(a), static_cast<Elem>(b))] == 1) inv_tab_[a] = static_cast<Elem>(b);

  // Smallest element of multiplicative order q-1.
  gen_ = 0;
  for (int a = 1; a < q_ && gen_ == 0; ++a) {
    Elem x = 1;
    int ord = 0;
    do {
      x = mul(x, static_cast<Elem>(a));
      ++ord;
    } while (x != 1);
    if (ord == q_ - 1) gen_ = static_cast<Elem>(a);
  }
}

const GaloisField& GaloisField::get(int p, int m) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<GaloisField>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[{p, m}];
  if (!slot) slot.reset(new GaloisField(p, m));
  return *slot;
}

GaloisField::Elem GaloisField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("GaloisField: inversion of zero");
  return inv_tab_[a];
}

GaloisField::Elem GaloisField::pow(Elem a, long long e) const {
  if (e < 0) return pow(inv(a), -e);
  Elem r = 1, b = a;
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

GaloisField::Elem GaloisField::from_int(long long v) const {
  long long r = v % p_;
  if (r < 0) r += p_;
  Elem e = 0;
  for (long long i = 0; i < r; ++i) e = add(e, 1);
  return e;
}

GaloisField::Elem GaloisField::pth_root(Elem a) const {
  // Frobenius x -> x^p is a bijection; its inverse is x -> x^(q/p) since
  // (x^(q/p))^p = x^q = x.
  long long e = q_ / p_;
  return pow(a, e);
}

std::vector<int> GaloisField::digits(Elem a) const {
  std::vector<int> d(m_, 0);
  for (int i = 0; i < m_; ++i) {
    d[i] = a % p_;
    a = static_cast<Elem>(a / p_);
  }
  return d;
}

std::string GaloisField::to_string(Elem a) const {
  if (m_ == 1) return std::to_string(static_cast<int>(a));
  if (a == 0) return "0";
  auto d = digits(a);
  std::string s;
  for (int i = m_ - 1; i >= 0; --i) {
    if (d[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(d[i]);
    } else {
      if (d[i] != 1) s += std::to_string(d[i]) + "*";
      s += "w";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace chevalg
