#include "chevalg/cochar.hpp"

#include <stdexcept>

namespace chevalg {

int weight(const RootSystem& rs, const Cocharacter& lambda, int root_label) {
  if (static_cast<int>(lambda.coeffs.size()) != rs.rank())
    throw std::invalid_argument("weight: cocharacter rank mismatch");
  int w = 0;
  for (int i = 0; i < rs.rank(); ++i) w += lambda.coeffs[i] * rs.simple_pairing(root_label, i);
  return w;
}

RootClassification classify(const RootSystem& rs, const Cocharacter& lambda) {
  RootClassification c;
  for (int i = rs.num_positive(); i >= 1; --i) {
    for (int label : {-i, i}) {
      int w = weight(rs, lambda, label);
      if (w >= 0) c.p_roots.push_back(label);
      if (w == 0) c.l_roots.push_back(label);
      if (w > 0) c.u_roots.push_back(label);
    }
  }
  auto by_label = [](int a, int b) { return a < b; };
  std::sort(c.p_roots.begin(), c.p_roots.end(), by_label);
  std::sort(c.l_roots.begin(), c.l_roots.end(), by_label);
  std::sort(c.u_roots.begin(), c.u_roots.end(), by_label);
  return c;
}

Cocharacter coroot_cochar(const RootSystem& rs, int root_label) {
  return Cocharacter{rs.coroot(root_label)};
}

Cocharacter reflect_cochar(const RootSystem& rs, int xi, const Cocharacter& lambda) {
  // <xi, lambda> = weight of xi under lambda.
  int w = weight(rs, lambda, xi);
  std::vector<int> xv = rs.coroot(xi);
  Cocharacter r = lambda;
  for (int i = 0; i < rs.rank(); ++i) r.coeffs[i] -= w * xv[i];
  return r;
}

}  // namespace chevalg
