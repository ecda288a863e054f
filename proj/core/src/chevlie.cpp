#include "chevalg/chevlie.hpp"

#include <boost/rational.hpp>

#include <set>
#include <stdexcept>

namespace chevalg {

namespace {
using Rat = boost::rational<long long>;

long long to_int(const Rat& r, const char* what) {
  if (r.denominator() != 1) throw std::logic_error(std::string(what) + ": non-integral value");
  return r.numerator();
}
}  // namespace

ChevalleyData::ChevalleyData(const RootSystem& rs) : rs_(&rs) {
  int np = rs.num_positive();
  // Extraspecial pair of every composite positive root: the decomposition
  // gamma = eps + eta with eps minimal in the enumeration order.
  for (int g = 1; g <= np; ++g) {
    if (rs.height(g) == 1) continue;
    for (int e = 1; e <= np; ++e) {
      std::vector<int> diff(rs.rank());
      for (int i = 0; i < rs.rank(); ++i) diff[i] = rs.root(g).coeffs[i] - rs.root(e).coeffs[i];
      auto h = rs.label_of(diff);
      if (h && *h > 0) {
        extraspecial_[g] = {e, *h};
        break;
      }
    }
  }
  // All structure constants N_{a,b}.
  std::vector<int> labels;
  for (int i = 1; i <= np; ++i) {
    labels.push_back(i);
    labels.push_back(-i);
  }
  for (int a : labels)
    for (int b : labels) {
      if (a == b || a == -b) continue;
      if (rs.sum(a, b)) n_const(a, b);
    }
  // Commutator coefficients for every ordered pair.
  static const std::pair<int, int> kPairs[] = {{1, 1}, {2, 1}, {1, 2}, {3, 1},
                                               {1, 3}, {3, 2}, {2, 3}};
  for (int a : labels)
    for (int b : labels) {
      if (a == b || a == -b) continue;
      std::vector<CommTerm> terms;
      for (auto [i, j] : kPairs) {
        std::vector<int> c(rs.rank());
        for (int k = 0; k < rs.rank(); ++k)
          c[k] = i * rs.root(a).coeffs[k] + j * rs.root(b).coeffs[k];
        auto lab = rs.label_of(c);
        if (!lab) continue;
        // M_{x,y,i} = (1/i!) prod_{k<i} N_{x, y + k x}.
        auto M = [&](int x, int y, int n) -> Rat {
          Rat m(1);
          long long fact = 1;
          int cur = y;
          for (int k = 0; k < n; ++k) {
            m *= Rat(n_table_.at({x, cur}));
            if (k + 1 < n) cur = *rs.sum(cur, x);
            fact *= (k + 1);
          }
          return m / fact;
        };
        Rat coeff;
        int ab = rs.sum(a, b) ? *rs.sum(a, b) : 0;
        if (j == 1) {
          coeff = M(a, b, i);
        } else if (i == 1) {
          coeff = M(b, a, j) * ((j % 2 == 0) ? 1 : -1);
        } else if (i == 3 && j == 2) {
          coeff = M(ab, a, 2) / 3;
        } else if (i == 2 && j == 3) {
          coeff = M(ab, b, 2) * Rat(-2, 3);
        } else {
          throw std::logic_error("comm_terms: unexpected (i,j)");
        }
        terms.push_back({i, j, *lab, to_int(coeff, "comm coefficient")});
      }
      std::sort(terms.begin(), terms.end(), [](const CommTerm& x, const CommTerm& y) {
        if (x.i + x.j != y.i + y.j) return x.i + x.j < y.i + y.j;
        return x.i < y.i;
      });
      comm_table_[{a, b}] = std::move(terms);
    }
  for (int l : labels) build_divided_powers(l);
  for (int xi = 1; xi <= np; ++xi) build_weyl_tables(xi);
}

std::pair<int, int> ChevalleyData::extraspecial(int gamma) {
  auto it = extraspecial_.find(gamma);
  if (it == extraspecial_.end()) throw std::logic_error("extraspecial: not a composite root");
  return it->second;
}

int ChevalleyData::chain_down(int a, int b) const {
  int p = 0;
  std::vector<int> c = rs_->root(b).coeffs;
  const auto& ca = rs_->root(a).coeffs;
  for (;;) {
    for (int i = 0; i < rs_->rank(); ++i) c[i] -= ca[i];
    if (!rs_->label_of(c)) break;
    ++p;
  }
  return p;
}

long long ChevalleyData::n_const(int a, int b) {
  auto key = std::make_pair(a, b);
  auto it = n_table_.find(key);
  if (it != n_table_.end()) return it->second;

  auto sum = rs_->sum(a, b);
  if (!sum) throw std::logic_error("n_const: sum is not a root");
  int c = *sum;
  long long value;

  if (a > 0 && b > 0) {
    if (a > b) {
      value = -n_const(b, a);
    } else {
      auto [eps, eta] = extraspecial(c);
      if (a == eps) {
        value = chain_down(a, b) + 1;
      } else {
        // Jacobi identity for the quadruple eps + eta = a + b:
        //   N_{a,b} N_{-eps,c} + N_{b,-eps} N_{a,b-eps} + N_{-eps,a} N_{b,a-eps} = 0
        // with N_{-eps,c} = N_{eps,eta} (eta,eta)/(c,c).
        Rat acc(0);
        if (auto bm = rs_->sum(b, -eps))
          acc += Rat(n_const(b, -eps)) * Rat(n_const(a, *bm));
        if (auto am = rs_->sum(a, -eps))
          acc += Rat(n_const(-eps, a)) * Rat(n_const(b, *am));
        Rat den = Rat(n_const(eps, eta)) * Rat(rs_->len2(eta), rs_->len2(c));
        value = to_int(-acc / den, "structure constant");
      }
    }
  } else if (a < 0 && b < 0) {
    value = -n_const(-a, -b);
  } else if (a < 0) {
    value = -n_const(b, a);
  } else if (c > 0) {
    // Cyclic identity on a + b + (-c) = 0: N_{a,b}/(c,c) = N_{b,-c}/(a,a).
    value = to_int(-Rat(rs_->len2(c), rs_->len2(a)) * Rat(n_const(-b, c)), "structure constant");
  } else {
    value = -n_const(-a, -b);
  }

  n_table_[key] = value;
  return value;
}

std::optional<long long> ChevalleyData::N(int a, int b) const {
  auto it = n_table_.find({a, b});
  if (it == n_table_.end()) return std::nullopt;
  return it->second;
}

const std::vector<ChevalleyData::CommTerm>& ChevalleyData::comm_terms(int a, int b) const {
  auto it = comm_table_.find({a, b});
  if (it == comm_table_.end())
    throw std::invalid_argument("comm_terms: pair must satisfy a != +-b");
  return it->second;
}

int ChevalleyData::basis_root(int label) const {
  int np = rs_->num_positive();
  if (label >= 1 && label <= np) return label - 1;
  if (label <= -1 && label >= -np) return np - label - 1;
  throw std::out_of_range("basis_root: bad label");
}

std::vector<long long> ChevalleyData::bracket(const std::vector<long long>& x,
                                              const std::vector<long long>& y) const {
  int np = rs_->num_positive();
  int nr = rs_->num_roots();
  std::vector<long long> r(dim(), 0);
  auto label_at = [&](int idx) { return idx < np ? idx + 1 : -(idx - np + 1); };
  for (int i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim(); ++j) {
      if (y[j] == 0) continue;
      long long c = x[i] * y[j];
      if (i < nr && j < nr) {
        int a = label_at(i), b = label_at(j);
        if (a == -b) {
          auto co = rs_->coroot(a);
          for (int k = 0; k < rank(); ++k) r[basis_h(k)] += c * co[k];
        } else if (a != b) {
          if (auto s = rs_->sum(a, b)) r[basis_root(*s)] += c * n_table_.at({a, b});
        }
      } else if (i < nr) {  // [e_a, h_k]
        int a = label_at(i), k = j - nr;
        r[i] -= c * rs_->simple_pairing(a, k);
      } else if (j < nr) {  // [h_k, e_b]
        int b = label_at(j), k = i - nr;
        r[j] += c * rs_->simple_pairing(b, k);
      }
    }
  }
  return r;
}

bool ChevalleyData::jacobi_holds() const {
  int d = dim();
  auto basis = [&](int i) {
    std::vector<long long> v(d, 0);
    v[i] = 1;
    return v;
  };
  for (int i = 0; i < d; ++i) {
    auto ei = basis(i);
    for (int j = i + 1; j < d; ++j) {
      auto ej = basis(j);
      auto bij = bracket(ei, ej);
      for (int k = j; k < d; ++k) {
        auto ek = basis(k);
        auto t1 = bracket(bij, ek);
        auto t2 = bracket(bracket(ej, ek), ei);
        auto t3 = bracket(bracket(ek, ei), ej);
        for (int m = 0; m < d; ++m)
          if (t1[m] + t2[m] + t3[m] != 0) return false;
      }
    }
  }
  return true;
}

std::vector<std::vector<long long>> ChevalleyData::ad_matrix_int(int label) const {
  int d = dim();
  std::vector<long long> e(d, 0);
  e[basis_root(label)] = 1;
  std::vector<std::vector<long long>> m(d, std::vector<long long>(d, 0));
  for (int j = 0; j < d; ++j) {
    std::vector<long long> v(d, 0);
    v[j] = 1;
    auto img = bracket(e, v);
    for (int i = 0; i < d; ++i) m[i][j] = img[i];
  }
  return m;
}

void ChevalleyData::build_divided_powers(int label) {
  int d = dim();
  auto base = ad_matrix_int(label);
  std::vector<SparseInt> powers;
  // k = 0: identity.
  SparseInt id;
  for (int i = 0; i < d; ++i) id.entries.push_back({i, i, 1});
  powers.push_back(std::move(id));
  std::vector<std::vector<long long>> cur(d, std::vector<long long>(d, 0));
  for (int i = 0; i < d; ++i) cur[i][i] = 1;
  long long fact = 1;
  for (int k = 1; k <= 8; ++k) {
    std::vector<std::vector<long long>> nxt(d, std::vector<long long>(d, 0));
    for (int i = 0; i < d; ++i)
      for (int l = 0; l < d; ++l) {
        if (base[i][l] == 0) continue;
        for (int j = 0; j < d; ++j)
          if (cur[l][j] != 0) nxt[i][j] += base[i][l] * cur[l][j];
      }
    cur = std::move(nxt);
    fact *= k;
    SparseInt s;
    bool zero = true;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (cur[i][j] != 0) {
          if (cur[i][j] % fact != 0)
            throw std::logic_error("divided power: non-integral entry");
          s.entries.push_back({i, j, cur[i][j] / fact});
          zero = false;
        }
    powers.push_back(std::move(s));
    if (zero) break;
  }
  if (!powers.back().empty())
    throw std::logic_error("ad nilpotency exceeded the expected bound");
  divided_[label] = std::move(powers);
}

const ChevalleyData::SparseInt& ChevalleyData::ad_divided_power(int root_label, int k) const {
  const auto& v = divided_.at(root_label);
  if (k < 0) throw std::out_of_range("ad_divided_power: negative power");
  if (k >= static_cast<int>(v.size())) {
    static const SparseInt kZero{};
    return kZero;
  }
  return v[k];
}

int ChevalleyData::nilpotency_degree(int root_label) const {
  return static_cast<int>(divided_.at(root_label).size()) - 1;
}

void ChevalleyData::build_weyl_tables(int xi) {
  int d = dim();
  int nr = rs_->num_roots();
  // Ad(n_xi) = exp(ad e_xi) exp(-ad e_{-xi}) exp(ad e_xi) over the integers.
  auto exp_of = [&](int label, long long scale) {
    std::vector<std::vector<long long>> m(d, std::vector<long long>(d, 0));
    long long s = 1;
    for (int k = 0;; ++k) {
      const auto& p = ad_divided_power(label, k);
      if (k > 0 && p.empty()) break;
      for (auto& [i, j, v] : p.entries) m[i][j] += s * v;
      s *= scale;
    }
    return m;
  };
  auto mul = [&](const std::vector<std::vector<long long>>& a,
                 const std::vector<std::vector<long long>>& b) {
    std::vector<std::vector<long long>> r(d, std::vector<long long>(d, 0));
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k) {
        if (a[i][k] == 0) continue;
        for (int j = 0; j < d; ++j)
          if (b[k][j] != 0) r[i][j] += a[i][k] * b[k][j];
      }
    return r;
  };
  auto compute = [&](bool inverse) {
    // n_xi = eps_xi(1) eps_{-xi}(-1) eps_xi(1);
    // n_xi^{-1} = eps_xi(-1) eps_{-xi}(1) eps_xi(-1).
    long long s = inverse ? -1 : 1;
    auto m = mul(mul(exp_of(xi, s), exp_of(-xi, -s)), exp_of(xi, s));
    std::vector<long long> sign(nr, 0);
    for (int i = 1; i <= rs_->num_positive(); ++i) {
      for (int lab : {i, -i}) {
        int src = basis_root(lab);
        int dst = basis_root(rs_->reflect(xi, lab));
        for (int r = 0; r < d; ++r) {
          long long v = m[r][src];
          if (v == 0) continue;
          if (r != dst || (v != 1 && v != -1))
            throw std::logic_error("Weyl representative does not permute root spaces");
          sign[src] = v;
        }
      }
    }
    return std::make_pair(std::move(sign), std::move(m));
  };
  WeylTables t;
  auto [sign, m] = compute(false);
  auto [sign_inv, m_inv] = compute(true);
  t.sign = std::move(sign);
  t.sign_inv = std::move(sign_inv);
  // The h-block is the reflection on coroot coordinates.
  t.coroot_refl.assign(rank(), std::vector<int>(rank(), 0));
  std::vector<int> xv = rs_->coroot(xi);
  for (int i = 0; i < rank(); ++i) {
    int pair_xi_i = rs_->simple_pairing(xi, i);
    for (int j = 0; j < rank(); ++j)
      t.coroot_refl[j][i] = (i == j ? 1 : 0) - pair_xi_i * xv[j];
  }
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j)
      if (m[basis_h(j)][basis_h(i)] != t.coroot_refl[j][i])
        throw std::logic_error("Weyl representative torus action mismatch");
  weyl_[xi] = std::move(t);
}

long long ChevalleyData::weyl_sign(int xi, int zeta, bool inverse) const {
  if (xi < 0) {
    // n_{-xi} differs from n_xi by a torus point of order dividing 2; its
    // conjugation action on root elements coincides with n_xi^{-1}.
    return weyl_sign(-xi, zeta, !inverse);
  }
  const auto& t = weyl_.at(xi);
  return (inverse ? t.sign_inv : t.sign)[basis_root(zeta)];
}

const std::vector<std::vector<int>>& ChevalleyData::coroot_reflection(int xi) const {
  return weyl_.at(std::abs(xi)).coroot_refl;
}

nlohmann::ordered_json ChevalleyData::to_json() const {
  nlohmann::ordered_json j;
  j["type"] = rs_->type();
  auto narr = nlohmann::ordered_json::array();
  for (const auto& [key, value] : n_table_) {
    nlohmann::ordered_json e;
    e["a"] = key.first;
    e["b"] = key.second;
    e["N"] = value;
    narr.push_back(e);
  }
  j["N"] = narr;
  auto carr = nlohmann::ordered_json::array();
  for (const auto& [key, terms] : comm_table_) {
    if (terms.empty()) continue;
    nlohmann::ordered_json e;
    e["a"] = key.first;
    e["b"] = key.second;
    auto ts = nlohmann::ordered_json::array();
    for (const auto& t : terms) {
      nlohmann::ordered_json te;
      te["i"] = t.i;
      te["j"] = t.j;
      te["root"] = t.root;
      te["coeff"] = t.coeff;
      ts.push_back(te);
    }
    e["terms"] = ts;
    carr.push_back(e);
  }
  j["commutator_coefficients"] = carr;
  return j;
}

}  // namespace chevalg
