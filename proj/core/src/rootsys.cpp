#include "chevalg/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace chevalg {

namespace {

// Fixed reference enumeration of the 24 positive roots of F4 over the simple
// basis (alpha, beta, gamma, delta); roots 1, 2, 3, 17 are the simple ones.
const std::vector<std::vector<int>>& f4_enumeration() {
  static const std::vector<std::vector<int>> table = {
      {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 0, 0}, {0, 1, 1, 0},
      {1, 1, 1, 0}, {0, 1, 2, 0}, {1, 1, 2, 0}, {1, 2, 2, 0}, {0, 1, 2, 2},
      {1, 1, 2, 2}, {1, 2, 2, 2}, {1, 2, 3, 2}, {1, 2, 4, 2}, {1, 3, 4, 2},
      {2, 3, 4, 2}, {0, 0, 0, 1}, {0, 0, 1, 1}, {0, 1, 1, 1}, {1, 1, 1, 1},
      {0, 1, 2, 1}, {1, 1, 2, 1}, {1, 2, 2, 1}, {1, 2, 3, 1}};
  return table;
}

using IMatx = std::vector<std::vector<int>>;

IMatx cartan_A(int n) {
  IMatx a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    a[i][i] = 2;
    if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
  }
  return a;
}

IMatx cartan_B(int n) {  // alpha_n short
  IMatx a = cartan_A(n);
  a[n - 1][n - 2] = -2;
  return a;
}

IMatx cartan_C(int n) {  // alpha_n long
  IMatx a = cartan_A(n);
  a[n - 2][n - 1] = -2;
  return a;
}

IMatx cartan_D(int n) {
  IMatx a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  for (int i = 0; i + 1 < n - 1; ++i) a[i][i + 1] = a[i + 1][i] = -1;
  a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
  return a;
}

IMatx cartan_E(int n) {  // nodes: chain 1-3-4-5-..., node 2 attached to 4
  IMatx a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  link(0, 2);
  link(1, 3);
  for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
  return a;
}

IMatx cartan_F4() {
  return {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
}

IMatx cartan_G2() { return {{2, -3}, {-1, 2}}; }

bool same_up_to_permutation(const IMatx& a, const IMatx& b) {
  int n = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != n) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if (a[perm[i]][perm[j]] != b[i][j]) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<std::pair<std::string, IMatx>> type_candidates(int n) {
  std::vector<std::pair<std::string, IMatx>> c;
  if (n >= 1) c.push_back({"A" + std::to_string(n), cartan_A(n)});
  if (n >= 2) c.push_back({"B" + std::to_string(n), cartan_B(n)});
  if (n >= 3) c.push_back({"C" + std::to_string(n), cartan_C(n)});
  if (n >= 4) c.push_back({"D" + std::to_string(n), cartan_D(n)});
  if (n >= 6 && n <= 8) c.push_back({"E" + std::to_string(n), cartan_E(n)});
  if (n == 4) c.push_back({"F4", cartan_F4()});
  if (n == 2) c.push_back({"G2", cartan_G2()});
  return c;
}

void validate_cartan(const IMatx& a) {
  int n = static_cast<int>(a.size());
  if (n < 1 || n > 8) throw std::invalid_argument("Cartan matrix: rank must be 1..8");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[i].size()) != n)
      throw std::invalid_argument("Cartan matrix: not square");
    if (a[i][i] != 2) throw std::invalid_argument("Cartan matrix: diagonal entries must be 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) throw std::invalid_argument("Cartan matrix: positive off-diagonal entry");
      if ((a[i][j] == 0) != (a[j][i] == 0))
        throw std::invalid_argument("Cartan matrix: asymmetric zero pattern");
    }
  }
}

std::vector<int> symmetrizer(const IMatx& a) {
  // Smallest positive integers d_i with d_i a_ij = d_j a_ji, per component.
  int n = static_cast<int>(a.size());
  std::vector<long long> d(n, 0);
  for (int start = 0; start < n; ++start) {
    if (d[start] != 0) continue;
    d[start] = 1;
    std::vector<int> stack = {start};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (i == j || a[i][j] == 0) continue;
        // d_j = d_i * a_ij / a_ji
        long long num = d[i] * a[i][j];
        if (num % a[j][i] != 0) {
          // Scale the whole component to stay integral.
          long long scale = std::abs(a[j][i]);
          for (int k = 0; k < n; ++k)
            if (d[k] != 0) d[k] *= scale;
          num = d[i] * a[i][j];
        }
        long long dj = num / a[j][i];
        if (dj <= 0) throw std::invalid_argument("Cartan matrix: not symmetrizable");
        if (d[j] == 0) {
          d[j] = dj;
          stack.push_back(j);
        } else if (d[j] != dj) {
          throw std::invalid_argument("Cartan matrix: not symmetrizable");
        }
      }
    }
  }
  long long g = 0;
  for (auto v : d) g = std::gcd(g, v);
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = static_cast<int>(d[i] / g);
  return out;
}

}  // namespace

RootSystem RootSystem::build(const std::string& type_label) {
  if (type_label.size() < 2)
    throw std::invalid_argument("unknown Cartan type: " + type_label);
  char fam = type_label[0];
  int n = std::stoi(type_label.substr(1));
  IMatx a;
  switch (fam) {
    case 'A': if (n >= 1 && n <= 8) a = cartan_A(n); break;
    case 'B': if (n >= 2 && n <= 8) a = cartan_B(n); break;
    case 'C': if (n >= 3 && n <= 8) a = cartan_C(n); break;
    case 'D': if (n >= 4 && n <= 8) a = cartan_D(n); break;
    case 'E': if (n >= 6 && n <= 7) a = cartan_E(n); break;
    case 'F': if (n == 4) a = cartan_F4(); break;
    case 'G': if (n == 2) a = cartan_G2(); break;
    default: break;
  }
  if (a.empty()) throw std::invalid_argument("unknown Cartan type: " + type_label);
  return build(a);
}

RootSystem RootSystem::build(const IMatx& cartan) {
  validate_cartan(cartan);
  int n = static_cast<int>(cartan.size());

  // Close the simple roots under simple reflections. Finite type iff this
  // terminates within the largest possible count (E8 would have 120).
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  const std::size_t kMaxRoots = 300;
  while (!queue.empty()) {
    std::vector<int> c = queue.back();
    queue.pop_back();
    for (int i = 0; i < n; ++i) {
      int pair = 0;
      for (int j = 0; j < n; ++j) pair += cartan[i][j] * c[j];
      std::vector<int> r = c;
      r[i] -= pair;
      if (seen.insert(r).second) {
        if (seen.size() > kMaxRoots)
          throw std::invalid_argument("Cartan matrix: not of finite type (root closure diverges)");
        queue.push_back(r);
      }
    }
  }

  std::vector<std::vector<int>> positives;
  for (auto& c : seen) {
    bool nonneg = std::all_of(c.begin(), c.end(), [](int v) { return v >= 0; });
    if (nonneg) positives.push_back(c);
  }
  if (positives.size() * 2 != seen.size())
    throw std::invalid_argument("Cartan matrix: root set not symmetric (not finite type)");

  RootSystem rs;
  rs.cartan_ = cartan;
  rs.symm_ = symmetrizer(cartan);
  rs.type_ = cartan_type_label(cartan);

  if (rs.type_ == "F4") {
    // Pin the reference enumeration; everything downstream cites its labels.
    const auto& table = f4_enumeration();
    std::set<std::vector<int>> generated(positives.begin(), positives.end());
    std::set<std::vector<int>> tabled(table.begin(), table.end());
    if (generated != tabled)
      throw std::logic_error("F4 root closure does not match the reference table");
    rs.finalize(table);
  } else {
    std::sort(positives.begin(), positives.end(), [](const auto& x, const auto& y) {
      int hx = std::accumulate(x.begin(), x.end(), 0);
      int hy = std::accumulate(y.begin(), y.end(), 0);
      if (hx != hy) return hx < hy;
      return x < y;
    });
    rs.finalize(positives);
  }
  return rs;
}

RootSystem RootSystem::detail::build_with_enumeration(const IMatx& cartan,
                                                      const std::vector<std::vector<int>>& positives,
                                                      const std::string& type_label) {
  validate_cartan(cartan);
  RootSystem rs;
  rs.cartan_ = cartan;
  rs.symm_ = symmetrizer(cartan);
  rs.type_ = type_label;
  rs.finalize(positives);
  return rs;
}

void RootSystem::finalize(std::vector<std::vector<int>> positives) {
  int np = static_cast<int>(positives.size());
  roots_.resize(2 * np);
  for (int i = 0; i < np; ++i) {
    roots_[i] = Root{positives[i], i + 1};
    std::vector<int> neg(positives[i].size());
    for (std::size_t j = 0; j < neg.size(); ++j) neg[j] = -positives[i][j];
    roots_[np + i] = Root{neg, -(i + 1)};
    by_coeffs_[roots_[i].coeffs] = i + 1;
    by_coeffs_[roots_[np + i].coeffs] = -(i + 1);
  }
  simple_labels_.assign(rank(), 0);
  for (int i = 0; i < rank(); ++i) {
    std::vector<int> e(rank(), 0);
    e[i] = 1;
    auto it = by_coeffs_.find(e);
    if (it == by_coeffs_.end()) throw std::logic_error("simple root missing from enumeration");
    simple_labels_[i] = it->second;
  }
}

const Root& RootSystem::root(int label) const {
  int np = num_positive();
  if (label >= 1 && label <= np) return roots_[label - 1];
  if (label <= -1 && label >= -np) return roots_[np - label - 1];
  throw std::out_of_range("RootSystem: no root with label " + std::to_string(label));
}

std::optional<int> RootSystem::label_of(const std::vector<int>& coeffs) const {
  auto it = by_coeffs_.find(coeffs);
  if (it == by_coeffs_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> RootSystem::sum(int a, int b) const {
  const auto& ca = root(a).coeffs;
  const auto& cb = root(b).coeffs;
  std::vector<int> s(ca.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = ca[i] + cb[i];
  return label_of(s);
}

int RootSystem::height(int label) const {
  const auto& c = root(label).coeffs;
  return std::accumulate(c.begin(), c.end(), 0);
}

int RootSystem::simple_pairing(int zeta, int i) const {
  const auto& c = root(zeta).coeffs;
  int v = 0;
  for (int j = 0; j < rank(); ++j) v += cartan_[i][j] * c[j];
  return v;
}

int RootSystem::ip(int a, int b) const {
  const auto& ca = root(a).coeffs;
  const auto& cb = root(b).coeffs;
  long long v = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) v += static_cast<long long>(ca[i]) * symm_[i] * cartan_[i][j] * cb[j];
  return static_cast<int>(v);
}

int RootSystem::pairing(int zeta, int xi) const {
  int num = 2 * ip(zeta, xi);
  int den = len2(xi);
  if (num % den != 0) throw std::logic_error("pairing: non-integral Cartan pairing");
  return num / den;
}

int RootSystem::reflect(int xi, int zeta) const {
  int p = pairing(zeta, xi);
  const auto& cz = root(zeta).coeffs;
  const auto& cx = root(xi).coeffs;
  std::vector<int> r(cz.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = cz[i] - p * cx[i];
  auto l = label_of(r);
  if (!l) throw std::logic_error("reflect: image is not a root");
  return *l;
}

bool RootSystem::is_long(int label) const {
  int mx = 0;
  for (int i = 0; i < rank(); ++i) mx = std::max(mx, 2 * symm_[i]);
  return len2(label) == mx;
}

std::vector<int> RootSystem::coroot(int label) const {
  const auto& c = root(label).coeffs;
  int l2 = len2(label);
  std::vector<int> e(rank());
  for (int i = 0; i < rank(); ++i) {
    int num = c[i] * 2 * symm_[i];
    if (num % l2 != 0) throw std::logic_error("coroot: non-integral coroot coefficients");
    e[i] = num / l2;
  }
  return e;
}

std::string RootSystem::subsystem_type(const std::set<int>& labels) const {
  if (labels.empty()) throw std::invalid_argument("subsystem_type: empty subset");
  for (int l : labels) {
    if (labels.count(-l) == 0)
      throw std::invalid_argument("subsystem_type: subset not closed under negation");
    for (int m : labels)
      if (labels.count(reflect(l, m)) == 0)
        throw std::invalid_argument("subsystem_type: subset not closed under reflection");
  }
  // Simple system of the subsystem: positive members (by ambient sign) that
  // are not sums of two positive members.
  std::vector<int> pos;
  for (int l : labels)
    if (l > 0) pos.push_back(l);
  std::vector<int> simples;
  for (int l : pos) {
    bool decomposable = false;
    for (int x : pos) {
      for (int y : pos) {
        auto s = sum(x, y);
        if (s && *s == l) decomposable = true;
      }
    }
    if (!decomposable) simples.push_back(l);
  }
  std::sort(simples.begin(), simples.end());
  int n = static_cast<int>(simples.size());
  IMatx a(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = pairing(simples[j], simples[i]);
  return cartan_type_label(a);
}

std::string RootSystem::cartan_type_label(const IMatx& cartan) {
  validate_cartan(cartan);
  int n = static_cast<int>(cartan.size());
  // Split into connected components.
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = ncomp;
    std::vector<int> stack = {s};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j)
        if (j != i && cartan[i][j] != 0 && comp[j] == -1) {
          comp[j] = ncomp;
          stack.push_back(j);
        }
    }
    ++ncomp;
  }
  std::vector<std::string> labels;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (comp[i] == c) idx.push_back(i);
    int m = static_cast<int>(idx.size());
    IMatx sub(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) sub[i][j] = cartan[idx[i]][idx[j]];
    std::string found;
    for (auto& [name, cand] : type_candidates(m))
      if (same_up_to_permutation(sub, cand)) {
        found = name;
        break;
      }
    if (found.empty())
      throw std::invalid_argument("Cartan matrix: not of finite type (no matching diagram)");
    labels.push_back(found);
  }
  std::sort(labels.begin(), labels.end());
  std::string out;
  for (auto& l : labels) {
    if (!out.empty()) out += " x ";
    out += l;
  }
  return out;
}

nlohmann::ordered_json RootSystem::to_json() const {
  nlohmann::ordered_json j;
  j["type"] = type_;
  j["cartan"] = cartan_;
  auto arr = nlohmann::ordered_json::array();
  for (int i = 1; i <= num_positive(); ++i) {
    for (int sign : {1, -1}) {
      const Root& r = root(sign * i);
      nlohmann::ordered_json e;
      e["index"] = r.label;
      e["coeffs"] = r.coeffs;
      e["length"] = is_long(r.label) ? "long" : "short";
      arr.push_back(e);
    }
  }
  j["roots"] = arr;
  return j;
}

}  // namespace chevalg
