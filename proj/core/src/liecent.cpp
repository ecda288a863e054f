#include "chevalg/liecent.hpp"

#include <stdexcept>

namespace chevalg {

LieElement lie_basis_vector(const ChevalleyData& chev, const GaloisField& f, int root_label) {
  LieElement v{std::vector<RatFunc>(chev.dim(), RatFunc(f))};
  v.coeffs[chev.basis_root(root_label)] = RatFunc::from_int(f, 1);
  return v;
}

namespace {

std::vector<Mat<RatFunc>> specialized_ads(const ChevalleyData& chev, const GaloisField& f,
                                          const LieGenerator& gen,
                                          const std::vector<RatFunc>& points) {
  std::vector<Mat<RatFunc>> out;
  if (!gen.var) {
    out.push_back(ad_matrix_at(chev, f, gen.word, {}));
    return out;
  }
  for (const auto& c : points) out.push_back(ad_matrix_at(chev, f, gen.word, {{*gen.var, c}}));
  return out;
}

void check_stability(const ChevalleyData& chev, const Mat<RatFunc>& ad,
                     const std::vector<int>& cols, const std::vector<char>& in_subspace) {
  for (int c : cols)
    for (int r = 0; r < ad.rows(); ++r)
      if (!ad.at(r, c).is_zero() && !in_subspace[r])
        throw std::invalid_argument("lie_centralizer: subspace is not Ad-stable for the generators");
}

}  // namespace

std::vector<LieElement> lie_centralizer(const ChevalleyData& chev, const GaloisField& f,
                                        const std::vector<LieGenerator>& gens,
                                        const std::set<int>& subspace_roots) {
  const RatFunc zero(f);
  const RatFunc one = RatFunc::from_int(f, 1);
  const RatFunc tt = RatFunc::t(f);

  std::vector<int> cols;
  std::vector<char> in_subspace(chev.dim(), 0);
  for (int r : subspace_roots) {
    cols.push_back(chev.basis_root(r));
    in_subspace[chev.basis_root(r)] = 1;
  }
  int k = static_cast<int>(cols.size());

  // Specialization points; grown if the symbolic re-verification fails.
  std::vector<RatFunc> points = {one, tt, tt + one};
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<Mat<RatFunc>> mats;
    for (const auto& g : gens)
      for (auto& m : specialized_ads(chev, f, g, points)) {
        check_stability(chev, m, cols, in_subspace);
        mats.push_back(std::move(m));
      }

    // Stack (A P - P) restricted to the subspace rows and take the kernel.
    Mat<RatFunc> sys(static_cast<int>(mats.size()) * k, k, zero);
    for (std::size_t mi = 0; mi < mats.size(); ++mi)
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          RatFunc v = mats[mi].at(cols[i], cols[j]);
          if (i == j) v = v - one;
          sys.at(static_cast<int>(mi) * k + i, j) = v;
        }
    auto ker = kernel_basis(sys, zero, one);

    std::vector<LieElement> basis;
    for (auto& kv : ker) {
      LieElement v{std::vector<RatFunc>(chev.dim(), zero)};
      for (int i = 0; i < k; ++i) v.coeffs[cols[i]] = kv[i];
      basis.push_back(std::move(v));
    }

    // Symbolic re-verification with a fresh indeterminate.
    bool verified = true;
    int fresh = FormalVars::id("_fresh");
    for (const auto& g : gens) {
      GroupWord w = g.var ? g.word.subst(*g.var, FormalPoly::variable(f, fresh)) : g.word;
      Mat<FormalPoly> ad = ad_matrix(chev, f, w);
      for (const auto& v : basis) {
        std::vector<FormalPoly> vv(chev.dim(), FormalPoly(f));
        for (int i = 0; i < chev.dim(); ++i) vv[i] = FormalPoly::constant(v.coeffs[i]);
        auto img = ad.apply(vv);
        for (int i = 0; i < chev.dim() && verified; ++i)
          if (img[i] != vv[i]) verified = false;
        if (!verified) break;
      }
      if (!verified) break;
    }
    if (verified) return basis;
    // More specialization points pin higher parameter degrees.
    points.push_back(tt * tt);
    points.push_back(tt * tt + one);
    points.push_back(tt * tt + tt);
  }
  throw std::logic_error("lie_centralizer: specialization points failed to pin the fixed space");
}

bool in_span(const std::vector<LieElement>& basis, const LieElement& v, const GaloisField& f) {
  if (basis.empty()) {
    for (const auto& c : v.coeffs)
      if (!c.is_zero()) return false;
    return true;
  }
  int d = static_cast<int>(v.coeffs.size());
  int n = static_cast<int>(basis.size());
  // Row reduce [basis | v]; v is in the span iff appending it does not raise
  // the rank.
  Mat<RatFunc> with(d, n + 1, RatFunc(f));
  Mat<RatFunc> without(d, n, RatFunc(f));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < n; ++j) {
      with.at(i, j) = basis[j].coeffs[i];
      without.at(i, j) = basis[j].coeffs[i];
    }
    with.at(i, n) = v.coeffs[i];
  }
  return row_reduce(with) == row_reduce(without);
}

}  // namespace chevalg
