#pragma once

#include <vector>

#include "chevalg/rootsys.hpp"

namespace chevalg {

/// A cocharacter of the split maximal torus, written over the simple
/// coroots: lambda = sum c_i alpha_i^vee. Split torus, so every cocharacter
/// is k-defined; no rationality bookkeeping is carried.
struct Cocharacter {
  std::vector<int> coeffs;

  bool is_zero() const {
    for (int c : coeffs)
      if (c != 0) return false;
    return true;
  }
  bool operator==(const Cocharacter& o) const { return coeffs == o.coeffs; }
};

/// The integer n with lambda(a) eps_zeta(x) lambda(a)^-1 = eps_zeta(a^n x).
int weight(const RootSystem& rs, const Cocharacter& lambda, int root_label);

/// Root classes of the parabolic attached to lambda: P = {weight >= 0},
/// Levi L = {weight 0}, unipotent radical U = {weight > 0}.
struct RootClassification {
  std::vector<int> p_roots, l_roots, u_roots;  // signed labels, ascending
};
RootClassification classify(const RootSystem& rs, const Cocharacter& lambda);

/// xi^vee as a cocharacter.
Cocharacter coroot_cochar(const RootSystem& rs, int root_label);

/// s_xi . lambda = lambda - <xi, lambda> xi^vee.
Cocharacter reflect_cochar(const RootSystem& rs, int xi, const Cocharacter& lambda);

}  // namespace chevalg
