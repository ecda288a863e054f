#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "chevalg/rootsys.hpp"

namespace chevalg {

/// Structure constants of the Chevalley basis and the integral adjoint
/// representation of a root system.
///
/// Basis order: e_zeta for positive labels 1..N, then negative labels
/// -1..-N, then the Cartan elements h_1..h_rank. Signs are fixed by taking
/// N_{eps,eta} = +(p+1) on the extraspecial pair of every composite positive
/// root, extraspecial with respect to the ambient enumeration order, and
/// extending by the standard recursion. The construction is certified by the
/// Jacobi identity test rather than trusted.
///
/// All tables are built eagerly by the constructor; a finished instance is
/// immutable and safe for concurrent reads.
class ChevalleyData {
 public:
  explicit ChevalleyData(const RootSystem& rs);

  const RootSystem& roots() const { return *rs_; }
  int rank() const { return rs_->rank(); }
  int dim() const { return rs_->num_roots() + rs_->rank(); }

  /// N_{a,b} with [e_a, e_b] = N_{a,b} e_{a+b}; absent when a+b is not a root.
  std::optional<long long> N(int a, int b) const;

  /// p = max k >= 0 with b - k a a root (so |N_{a,b}| = p + 1).
  int chain_down(int a, int b) const;

  /// One term of the commutator formula
  ///   [eps_b(y), eps_a(x)] = prod eps_{i a + j b}(coeff * (-x)^i y^j),
  /// terms ordered by (i + j, i).
  struct CommTerm {
    int i, j;
    int root;          // label of i a + j b
    long long coeff;   // C_{ij,a,b}
  };
  const std::vector<CommTerm>& comm_terms(int a, int b) const;

  int basis_root(int label) const;
  int basis_h(int i) const { return rs_->num_roots() + i; }

  /// Lie bracket on integer coordinate vectors over the basis.
  std::vector<long long> bracket(const std::vector<long long>& x,
                                 const std::vector<long long>& y) const;

  /// Exhaustive Jacobi check over the integral basis.
  bool jacobi_holds() const;

  /// Divided power (ad e_label)^k / k! as a sparse integer matrix
  /// (row, col, value); k = 0 gives the identity.
  struct SparseInt {
    std::vector<std::tuple<int, int, long long>> entries;
    bool empty() const { return entries.empty(); }
  };
  const SparseInt& ad_divided_power(int root_label, int k) const;
  /// Smallest k with (ad e_label)^k = 0.
  int nilpotency_degree(int root_label) const;

  /// Sign eta with n_xi eps_zeta(x) n_xi^-1 = eps_{s_xi.zeta}(eta x), where
  /// n_xi = eps_xi(1) eps_{-xi}(-1) eps_xi(1). Read off the integral adjoint
  /// action, so it is consistent with the structure constants by
  /// construction.
  long long weyl_sign(int xi, int zeta, bool inverse = false) const;

  /// Matrix R of s_xi on coroot coordinates: s_xi . alpha_i^vee =
  /// sum_j R[j][i] alpha_j^vee.
  const std::vector<std::vector<int>>& coroot_reflection(int xi) const;

  /// Exports the N and commutator-coefficient tables for cross-checking
  /// against other computer-algebra outputs.
  nlohmann::ordered_json to_json() const;

 private:
  struct WeylTables {
    std::vector<long long> sign, sign_inv;  // indexed by basis_root
    std::vector<std::vector<int>> coroot_refl;
  };
  long long n_const(int a, int b);
  std::pair<int, int> extraspecial(int gamma);
  std::vector<std::vector<long long>> ad_matrix_int(int label) const;
  void build_divided_powers(int label);
  void build_weyl_tables(int xi);

  const RootSystem* rs_;
  std::map<std::pair<int, int>, long long> n_table_;
  std::map<int, std::pair<int, int>> extraspecial_;
  std::map<std::pair<int, int>, std::vector<CommTerm>> comm_table_;
  std::map<int, std::vector<SparseInt>> divided_;
  std::map<int, WeylTables> weyl_;
};

}  // namespace chevalg
