#include "chevalg/weilres.hpp"

#include <stdexcept>

namespace chevalg {

namespace {
int weil_degree(int p, int s) {
  if (p != 2 && p != 3 && p != 5) throw std::invalid_argument("WeilRestriction: p must be 2, 3 or 5");
  if (s < 1) throw std::invalid_argument("WeilRestriction: s must be positive");
  long long n = 1;
  for (int i = 0; i < s; ++i) n *= p;
  if (n > 8) throw std::invalid_argument("WeilRestriction: p^s must be at most 8");
  return static_cast<int>(n);
}
}  // namespace

WeilRestriction::WeilRestriction(int p, int s)
    : p_(p),
      s_(s),
      n_(weil_degree(p, s)),
      gf_(&GaloisField::get(p, 1)),
      a_(RatFunc::t(*gf_).pow(n_)) {}

bool WeilRestriction::in_k(const RatFunc& x) const {
  auto divisible = [&](const Poly& f) {
    for (int i = 0; i <= f.degree(); ++i)
      if (f.coeff(i) != 0 && i % n_ != 0) return false;
    return true;
  };
  return divisible(x.num()) && divisible(x.den());
}

Mat<RatFunc> WeilRestriction::weil_matrix(const std::vector<RatFunc>& c) const {
  if (static_cast<int>(c.size()) != n_)
    throw std::invalid_argument("weil_matrix: coefficient vector must have length p^s");
  for (const auto& ci : c)
    if (!in_k(ci)) throw std::invalid_argument("weil_matrix: coefficients must be k-points");
  Mat<RatFunc> m(n_, n_, RatFunc(*gf_));
  // Column j is the image of theta^j: c_k theta^{k+j}, with theta^n = a.
  for (int j = 0; j < n_; ++j)
    for (int k = 0; k < n_; ++k) {
      int row = k + j;
      RatFunc v = c[k];
      if (row >= n_) {
        row -= n_;
        v = v * a_;
      }
      m.at(row, j) = m.at(row, j) + v;
    }
  return m;
}

std::vector<RatFunc> WeilRestriction::kprime_mul(const std::vector<RatFunc>& c,
                                                 const std::vector<RatFunc>& d) const {
  std::vector<RatFunc> r(n_, RatFunc(*gf_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      int idx = i + j;
      RatFunc v = c[i] * d[j];
      if (idx >= n_) {
        idx -= n_;
        v = v * a_;
      }
      r[idx] = r[idx] + v;
    }
  return r;
}

bool WeilRestriction::orbit_span_full(const std::vector<RatFunc>& v) const {
  if (static_cast<int>(v.size()) != n_)
    throw std::invalid_argument("orbit_span_full: vector must have length p^s");
  bool zero = true;
  for (const auto& vi : v) {
    if (!in_k(vi)) throw std::invalid_argument("orbit_span_full: vector must be over k");
    if (!vi.is_zero()) zero = false;
  }
  if (zero) throw std::invalid_argument("orbit_span_full: vector must be nonzero");
  Mat<RatFunc> span(n_, n_, RatFunc(*gf_));
  for (int i = 0; i < n_; ++i) {
    std::vector<RatFunc> basis(n_, RatFunc(*gf_));
    basis[i] = RatFunc::from_int(*gf_, 1);
    auto img = weil_matrix(basis).apply(v);
    for (int r = 0; r < n_; ++r) span.at(r, i) = img[r];
  }
  return row_reduce(span) == n_;
}

std::optional<std::vector<RatFunc>> WeilRestriction::common_eigenvector(FieldMode mode) const {
  if (n_ != 2)
    throw std::invalid_argument("common_eigenvector: implemented for p^s = 2 only");
  // Multiplication by theta generates the image algebra, so a theta
  // eigenvector is automatically common. Its eigenvalue solves x^2 = a.
  auto root = sqrt_char2(a_);
  if (!root) return std::nullopt;
  if (mode == FieldMode::k && !in_k(*root)) return std::nullopt;
  std::vector<RatFunc> theta_col(n_, RatFunc(*gf_));
  theta_col[1] = RatFunc::from_int(*gf_, 1);
  Mat<RatFunc> m = weil_matrix(theta_col);
  Mat<RatFunc> shifted = m;
  for (int i = 0; i < n_; ++i) shifted.at(i, i) = shifted.at(i, i) - *root;
  auto ker = kernel_basis(shifted, RatFunc(*gf_), RatFunc::from_int(*gf_, 1));
  if (ker.empty()) return std::nullopt;
  return ker.front();
}

nlohmann::ordered_json WeilRestriction::matrix_json(const Mat<RatFunc>& m) {
  auto rows = nlohmann::ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

}  // namespace chevalg
