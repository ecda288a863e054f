#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chevalg/liecent.hpp"
#include "chevalg/words.hpp"

namespace chevalg {

/// A subgroup given by parameterized generator families; each family is a
/// one-parameter homomorphic family (parameters formal in `var`) or a fixed
/// element.
struct GeneratorFamily {
  std::string name;
  GroupWord word;
  std::optional<int> var;
};

struct SubgroupSpec {
  std::string name;
  std::vector<GeneratorFamily> gens;
};

/// Everything the F4 scenario computations share: the root system, the
/// structure constants, the ground field F_4(t) with its order-3 constant b,
/// the chosen a in k \ k^2, and the cocharacter lambda = 13^vee.
struct ScenarioContext {
  const RootSystem* rs;
  const ChevalleyData* chev;
  const GaloisField* gf;
  RatFunc a, sqrt_a;
  GaloisField::Elem b;
  Cocharacter lambda;
  std::function<std::optional<RatFunc>(const RatFunc&)> sqrt_fn;

  FormalPoly fp(const RatFunc& c) const { return FormalPoly::constant(c); }
  FormalPoly var(const std::string& name) const { return FormalPoly::variable(*gf, name); }
  CollectContext graded_ctx() const;
  TorusFactor beta_torus() const;  // beta^vee(b)
};

/// Builds the standard context over F_4(t). `a` must be a k-point; its
/// square root in K always exists (k consists of the squares of K).
ScenarioContext make_f4_context(const ChevalleyData& chev, const GaloisField& gf, RatFunc a);

/// The type-G2 subgroup M and its conjugates.
SubgroupSpec subgroup_M(const ScenarioContext& ctx);
/// v(sqrt a) on roots +-{20,21}: eps_{s*20}(sqrt a) eps_{s*21}(sqrt a).
GroupWord displacement_word(const ScenarioContext& ctx, int sign);
/// Conjugates every generator family of a spec by g (computed, not quoted).
SubgroupSpec conjugate_spec(const ScenarioContext& ctx, const GroupWord& g,
                            const SubgroupSpec& spec, const std::string& name);
/// The first example H = v(sqrt a) . M.
SubgroupSpec subgroup_H_first(const ScenarioContext& ctx);
/// The second example H = < v(sqrt a) . M, eps_18 > with v on negative roots.
SubgroupSpec subgroup_H_second(const ScenarioContext& ctx);

/// Roots zeta in `roots` with zeta(s) != 1; conjugating by s forces the
/// corresponding word coordinates to vanish.
std::set<int> torus_centralizer_constraint(const ScenarioContext& ctx, const TorusFactor& s,
                                           const std::set<int>& roots);

/// The rational-conjugacy obstruction system for u . v' = v with an unknown
/// u over the unconstrained unipotent coordinates.
struct ObstructionSystem {
  std::vector<int> unknown_roots;
  std::map<int, int> var_of_root;
  struct Equation {
    int root;          // the root whose factor produced the equation
    FormalPoly poly;   // poly == 0
  };
  std::vector<Equation> equations;
  std::string status;  // "ok" or "unsupported"
  bool solvable_over_K = false;
  std::string K_obstruction;
  std::map<int, RatFunc> witness_K;  // root -> value (when solvable over K)
  bool solvable_over_k = false;
  std::string k_obstruction;
  nlohmann::ordered_json to_json() const;
};

/// A custom unknown conjugator (the isogeny-twisted scenario restricts u to
/// the sigma-image of the untwisted unknown, with squared parameters on the
/// coordinates coming from short roots).
struct UnknownConjugator {
  GroupWord word;
  std::vector<std::pair<int, int>> unknowns;  // (root label, formal var)
};

ObstructionSystem conjugacy_obstruction(
    const ScenarioContext& ctx, const std::vector<GroupWord>& v,
    const std::vector<GroupWord>& v_limit, const Cocharacter& lambda,
    const std::set<int>& vanishing,
    const std::optional<UnknownConjugator>& custom_u = std::nullopt);

/// True iff the candidate commutes with every generator family symbolically
/// (through the adjoint representation, exact in the formal parameters).
bool centralizer_check(const ScenarioContext& ctx, const GroupWord& candidate,
                       const SubgroupSpec& spec);

/// Mechanical two-branch analysis of "P_lambda is the unique proper
/// parabolic containing the subgroup", under the recorded assumption that
/// the connected centralizer is the rank-one subgroup on +-theta.
struct ParabolicReport {
  bool spec_in_parabolic = false;   // all generator families lie in P_lambda
  bool case1_fixes_parabolic = false;  // weight(theta) >= 0
  struct ProbeResult {
    GroupWord probe, conjugated;
    bool excluded = false;  // conjugated probe not in P_lambda
    bool certain = false;   // exclusion holds for every specialization
  };
  std::vector<ProbeResult> probes;
  bool case2_refuted = false;
  bool conclusive = false;
  std::vector<std::string> assumptions;
  nlohmann::ordered_json to_json() const;
};

ParabolicReport unique_parabolic_check(const ScenarioContext& ctx, const SubgroupSpec& spec,
                                       const Cocharacter& lambda, int theta,
                                       const std::vector<GroupWord>& probes);

/// The long/short exchanging root bijection of the special graph isogeny,
/// constructed from the coroot map and the diagram reversal (F4 only).
int sigma_root(const ChevalleyData& chev, int label);
/// f(zeta) = 2 for short zeta, 1 for long.
int sigma_exponent(const ChevalleyData& chev, int label);
/// sigma(eps_zeta(x)) = eps_{sigma zeta}(x^{f(zeta)}) factorwise; torus and
/// Weyl factors map through the coroot description. Characteristic 2 only.
GroupWord sigma_isogeny(const ChevalleyData& chev, const GroupWord& w);
TorusFactor sigma_torus(const ChevalleyData& chev, const TorusFactor& t);
/// The cocharacter with sigma(P_lambda) = P_{sigma lambda}.
Cocharacter sigma_cochar(const ChevalleyData& chev, const Cocharacter& lambda);

/// One verified claim of the corpus.
struct ScenarioResult {
  std::string scenario;
  std::string claim;
  std::string ref;
  std::string status;  // "pass" or "fail"
  std::string detail;  // divergent term on failure
  nlohmann::ordered_json witness;
  std::vector<std::string> assumptions;
};

struct CorpusOptions {
  const GaloisField* gf = nullptr;  // default F_4
  std::optional<RatFunc> a;         // default t^2
  unsigned seed = 20240901;
  int sigma_pairs = 500;
  int weil_pairs = 500;
  int weil_vectors = 100;
  int confluence_words = 1000;
  int ad_agreement_words = 40;
  // Verification hooks for negative controls.
  std::function<std::optional<RatFunc>(const RatFunc&)> sqrt_fn;
  const RootSystem* rs_override = nullptr;
  const ChevalleyData* chev_override = nullptr;
};

struct CorpusReport {
  std::vector<ScenarioResult> scenarios;
  bool all_pass = false;
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

/// Runs every scenario of the verification corpus.
CorpusReport run_corpus(const CorpusOptions& opts = {});

}  // namespace chevalg
