#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "chevalg/chevlie.hpp"
#include "chevalg/cochar.hpp"
#include "chevalg/formal.hpp"
#include "chevalg/linalg.hpp"

namespace chevalg {

/// Root element eps_zeta(x); x = 0 is the identity and is never stored
/// inside a word.
struct RootFactor {
  int root;
  FormalPoly param;
};

/// Torus element prod_i alpha_i^vee(t_i), keyed by 0-based simple index.
/// Values are nonzero; value 1 entries are dropped, the empty map is the
/// identity.
struct TorusFactor {
  std::map<int, RatFunc> values;

  bool is_identity() const { return values.empty(); }
  void set(int i, RatFunc v);
  TorusFactor inverse() const;
  TorusFactor operator*(const TorusFactor& o) const;
  /// zeta(s) = prod t_i^{<zeta, alpha_i^vee>}.
  RatFunc eval_root(const RootSystem& rs, int zeta, const GaloisField& f) const;
  bool operator==(const TorusFactor& o) const { return values == o.values; }
};

/// Weyl representative n_xi = eps_xi(1) eps_{-xi}(-1) eps_xi(1); a negative
/// label denotes the inverse, since n_{-xi} = n_xi^{-1}.
struct WeylFactor {
  int root;
};

using Factor = std::variant<RootFactor, TorusFactor, WeylFactor>;

/// A free word in root elements, torus elements and Weyl representatives.
/// Multiplication is concatenation; equality of group elements is decided by
/// collection or through the adjoint representation.
class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(std::vector<Factor> fs);

  static GroupWord identity() { return GroupWord(); }
  static GroupWord root_elem(int root, FormalPoly x);
  static GroupWord torus_elem(TorusFactor t);
  static GroupWord weyl_elem(int root);
  /// lambda(a) as a torus element.
  static GroupWord cochar_elem(const RootSystem& rs, const Cocharacter& lambda, const RatFunc& a);
  /// xi^vee(a).
  static GroupWord coroot_elem(const RootSystem& rs, int xi, const RatFunc& a);

  const std::vector<Factor>& factors() const { return fs_; }
  bool empty() const { return fs_.empty(); }
  GroupWord operator*(const GroupWord& o) const;
  GroupWord inverse() const;

  /// Substitutes a formal variable in every root parameter.
  GroupWord subst(int var, const FormalPoly& value) const;
  std::set<int> vars() const;

  std::string to_string() const;
  nlohmann::ordered_json to_json() const;
  static GroupWord from_json(const GaloisField& f, const nlohmann::json& j);

 private:
  std::vector<Factor> fs_;
};

/// Collection error for words outside the supported fragment (a zeta / -zeta
/// collision that the commutator formula cannot resolve).
struct CollectError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Context for collection: the declared closed root set, or a cocharacter
/// grading (factors are bucketed U^- / Levi / U^+ and sorted by label within
/// each bucket).
struct CollectContext {
  const ChevalleyData* chev = nullptr;
  std::optional<Cocharacter> grading;
  std::optional<std::set<int>> allowed;
  /// Pick the rightmost out-of-order pair instead of the leftmost
  /// (confluence testing).
  bool rightmost = false;
};

/// Canonical collected form: optional leading torus element, then root
/// factors with strictly increasing order keys, at most one per root.
struct CollectedWord {
  std::optional<TorusFactor> torus;
  std::vector<RootFactor> factors;

  bool operator==(const CollectedWord& o) const;
  GroupWord to_word() const;
  std::optional<FormalPoly> param_of(int root) const;
};

CollectedWord collect(const GroupWord& w, const CollectContext& ctx);

/// Word for [eps_beta(y), eps_alpha(x)] = prod eps_{i alpha + j beta}
/// (C_{ij,alpha,beta} (-x)^i y^j); empty when no i alpha + j beta is a root.
GroupWord commutator_expansion(const ChevalleyData& chev, int alpha, const FormalPoly& x,
                               int beta, const FormalPoly& y);

/// n_xi w n_xi^{-1} (or the inverse conjugation); w must consist of root and
/// torus factors.
GroupWord conj_by_weyl(const ChevalleyData& chev, int xi, const GroupWord& w,
                       bool inverse = false);

/// s w s^{-1}.
GroupWord conj_by_torus(const ChevalleyData& chev, const TorusFactor& s, const GroupWord& w);

/// u w u^{-1}, collected in the given context and returned as a flat word.
GroupWord conj_by_unipotent(const ChevalleyData& chev, const GroupWord& u, const GroupWord& w,
                            const CollectContext& ctx);

/// Adjoint matrix of a word over the polynomial ring K[x_vars]; exact, and
/// faithful on the corpus fragments (checked in tests, not assumed).
Mat<FormalPoly> ad_matrix(const ChevalleyData& chev, const GaloisField& f, const GroupWord& w);
/// Adjoint matrix with all formal parameters specialized.
Mat<RatFunc> ad_matrix_at(const ChevalleyData& chev, const GaloisField& f, const GroupWord& w,
                          const std::map<int, RatFunc>& assign);
/// Exact group-element equality through the adjoint representation.
bool words_equal_ad(const ChevalleyData& chev, const GaloisField& f, const GroupWord& a,
                    const GroupWord& b);

/// lim_{a->0} lambda(a) w lambda(a)^{-1}: drops positive-weight factors,
/// keeps torus and weight-0 factors, and reports absence when a
/// negative-weight factor survives collection.
std::optional<GroupWord> take_limit(const ChevalleyData& chev, const Cocharacter& lambda,
                                    const GroupWord& w);

struct ParabolicMembership {
  bool in_parabolic;
  /// The refutation is sound for every specialization of the formal
  /// parameters (some negative-weight factor has a nonzero constant
  /// parameter).
  bool certain;
  CollectedWord collected;
};
ParabolicMembership in_parabolic_analysis(const ChevalleyData& chev, const GroupWord& w,
                                          const Cocharacter& lambda);
bool in_parabolic(const ChevalleyData& chev, const GroupWord& w, const Cocharacter& lambda);

}  // namespace chevalg
