#pragma once

#include <optional>
#include <set>
#include <vector>

#include "chevalg/words.hpp"

namespace chevalg {

/// Element of the adjoint Lie algebra over K in Chevalley-basis coordinates
/// (length = number of roots + rank).
struct LieElement {
  std::vector<RatFunc> coeffs;
  bool operator==(const LieElement& o) const { return coeffs == o.coeffs; }
};

/// A one-parameter generator family (word whose parameters are formal in
/// `var`) or a fixed element (var absent).
struct LieGenerator {
  GroupWord word;
  std::optional<int> var;
};

/// Basis of the Ad-fixed subspace
///   { v in span(e_zeta : zeta in subspace_roots) : Ad(g) v = v for all g }
/// over K, by exact linear algebra. Family parameters are specialized over a
/// spanning set of values ({1, t, t+1}, grown if needed) and the result is
/// re-verified symbolically with a fresh indeterminate. Rejects subspaces
/// that are not Ad-stable for the given generators.
std::vector<LieElement> lie_centralizer(const ChevalleyData& chev, const GaloisField& f,
                                        const std::vector<LieGenerator>& gens,
                                        const std::set<int>& subspace_roots);

/// Membership of v in the K-span of basis.
bool in_span(const std::vector<LieElement>& basis, const LieElement& v, const GaloisField& f);

/// e_zeta as a LieElement.
LieElement lie_basis_vector(const ChevalleyData& chev, const GaloisField& f, int root_label);

}  // namespace chevalg
