#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "chevalg/chevlie.hpp"
#include "chevalg/fexpr.hpp"
#include "chevalg/script.hpp"
#include "chevalg/weilres.hpp"

namespace {

using namespace chevalg;

GroundField default_field() {
  const char* env = std::getenv("CHEV_FIELD");
  return parse_ground_field(env ? env : "F4(t)");
}

int cmd_rootsys(const std::string& type, bool constants, bool json) {
  RootSystem rs = RootSystem::build(type);
  if (constants) {
    ChevalleyData chev(rs);
    nlohmann::ordered_json j = rs.to_json();
    j["structure_constants"] = chev.to_json();
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (json) {
    std::cout << rs.to_json().dump(2) << "\n";
    return 0;
  }
  std::cout << "type " << rs.type() << ", " << rs.num_roots() << " roots\n";
  for (int i = 1; i <= rs.num_positive(); ++i) {
    const Root& r = rs.root(i);
    std::cout << (i < 10 ? " " : "") << i << ": ";
    for (int c : r.coeffs) std::cout << c;
    std::cout << (rs.is_long(i) ? "  long" : "  short") << "\n";
  }
  return 0;
}

int cmd_classify(const std::string& cochar, bool json) {
  const RootSystem& rs = f4_root_system();
  Cocharacter lam = parse_cochar_coeffs(cochar, rs.rank());
  auto cls = classify(rs, lam);
  nlohmann::ordered_json j;
  j["cochar"] = lam.coeffs;
  j["p_roots"] = cls.p_roots;
  j["l_roots"] = cls.l_roots;
  j["u_roots"] = cls.u_roots;
  if (json) {
    std::cout << j.dump(2) << "\n";
  } else {
    auto line = [](const char* name, const std::vector<int>& v) {
      std::cout << name << ":";
      for (int r : v) std::cout << " " << r;
      std::cout << "\n";
    };
    line("P", cls.p_roots);
    line("L", cls.l_roots);
    line("U", cls.u_roots);
  }
  return 0;
}

int cmd_collect(const std::string& word, const std::string& cochar, bool json) {
  GroundField field = default_field();
  GroupWord w = parse_word(word, field);
  CollectContext ctx;
  ctx.chev = &f4_chevalley();
  if (!cochar.empty()) {
    ctx.grading = parse_cochar_coeffs(cochar, f4_root_system().rank());
  } else {
    std::set<int> pos;
    for (int i = 1; i <= f4_root_system().num_positive(); ++i) pos.insert(i);
    ctx.allowed = pos;
  }
  GroupWord c = collect(w, ctx).to_word();
  if (json)
    std::cout << c.to_json().dump(2) << "\n";
  else
    std::cout << c.to_string() << "\n";
  return 0;
}

int cmd_conjugate(const std::string& by, const std::string& word, const std::string& cochar,
                  bool json) {
  GroundField field = default_field();
  const auto& chev = f4_chevalley();
  GroupWord g = parse_word(by, field);
  GroupWord w = parse_word(word, field);
  GroupWord out;
  if (g.factors().size() == 1 && std::holds_alternative<WeylFactor>(g.factors()[0])) {
    out = conj_by_weyl(chev, std::get<WeylFactor>(g.factors()[0]).root, w);
  } else if (g.factors().size() == 1 && std::holds_alternative<TorusFactor>(g.factors()[0])) {
    out = conj_by_torus(chev, std::get<TorusFactor>(g.factors()[0]), w);
  } else {
    CollectContext ctx;
    ctx.chev = &chev;
    ctx.grading = cochar.empty() ? coroot_cochar(f4_root_system(), 13)
                                 : parse_cochar_coeffs(cochar, f4_root_system().rank());
    out = conj_by_unipotent(chev, g, w, ctx);
  }
  if (json)
    std::cout << out.to_json().dump(2) << "\n";
  else
    std::cout << out.to_string() << "\n";
  return 0;
}

int cmd_limit(const std::string& cochar, const std::string& word, bool json) {
  GroundField field = default_field();
  Cocharacter lam = parse_cochar_coeffs(cochar, f4_root_system().rank());
  GroupWord w = parse_word(word, field);
  auto lim = take_limit(f4_chevalley(), lam, w);
  if (json) {
    nlohmann::ordered_json j;
    j["exists"] = lim.has_value();
    if (lim) j["limit"] = lim->to_json();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (lim ? lim->to_string() : "no limit") << "\n";
  }
  return 0;
}

int cmd_obstruct(const std::string& a_text, bool sigma, bool unrestricted, bool json) {
  const GaloisField& gf = GaloisField::get(2, 2);
  RatFunc a = parse_rat_func(gf, a_text);
  const auto& chev = f4_chevalley();
  ScenarioContext ctx = make_f4_context(chev, gf, a);

  GroupWord m_gen = GroupWord::root_elem(1, FormalPoly::from_int(gf, 1)) *
                    GroupWord::root_elem(3, FormalPoly::from_int(gf, 1));
  std::vector<GroupWord> v = {GroupWord::torus_elem(ctx.beta_torus()),
                              m_gen * GroupWord::root_elem(14, ctx.fp(ctx.a))};
  Cocharacter lam = ctx.lambda;
  TorusFactor torus = ctx.beta_torus();
  std::optional<UnknownConjugator> custom;
  if (sigma) {
    for (auto& comp : v) comp = sigma_isogeny(chev, comp);
    lam = sigma_cochar(chev, ctx.lambda);
    torus = sigma_torus(chev, torus);
    if (!unrestricted) {
      // The twisted run conjugates by the sigma-image of the untwisted
      // unknown; short-root coordinates enter squared.
      std::set<int> uroots;
      for (int i = 10; i <= 24; ++i) uroots.insert(i);
      auto vanish0 = torus_centralizer_constraint(ctx, ctx.beta_torus(), uroots);
      UnknownConjugator cu;
      GroupWord u_plain;
      for (int i : uroots) {
        if (vanish0.count(i)) continue;
        int var = FormalVars::id("x" + std::to_string(sigma_root(chev, i)));
        u_plain = u_plain * GroupWord::root_elem(i, FormalPoly::variable(gf, var));
        cu.unknowns.push_back({sigma_root(chev, i), var});
      }
      cu.word = sigma_isogeny(chev, u_plain);
      custom = std::move(cu);
    }
  }
  std::vector<GroupWord> vl;
  for (const auto& comp : v) {
    auto lim = take_limit(chev, lam, comp);
    if (!lim) throw std::runtime_error("tuple component has no limit");
    vl.push_back(*lim);
  }
  auto cls = classify(*ctx.rs, lam);
  std::set<int> upos;
  for (int r : cls.u_roots)
    if (r > 0) upos.insert(r);
  ScenarioContext run_ctx = ctx;
  run_ctx.lambda = lam;
  auto vanishing = torus_centralizer_constraint(run_ctx, torus, upos);
  auto sys = conjugacy_obstruction(run_ctx, v, vl, lam, vanishing, custom);
  if (json) {
    std::cout << sys.to_json().dump(2) << "\n";
  } else {
    std::cout << "unknowns:";
    for (int r : sys.unknown_roots) std::cout << " x" << r;
    std::cout << "\nequations:\n";
    for (const auto& e : sys.equations)
      std::cout << "  [root " << e.root << "] " << e.poly.to_string() << " = 0\n";
    std::cout << "solvable over K: " << (sys.solvable_over_K ? "yes" : "no") << "\n";
    if (sys.solvable_over_K) {
      std::cout << "  witness:";
      for (const auto& [r, val] : sys.witness_K) std::cout << " x" << r << "=" << val.to_string();
      std::cout << "\n";
    }
    std::cout << "solvable over k: " << (sys.solvable_over_k ? "yes" : "no") << "\n";
    if (!sys.k_obstruction.empty()) std::cout << "  " << sys.k_obstruction << "\n";
  }
  return 0;
}

int cmd_weilres(int p, int s, bool json) {
  WeilRestriction wr(p, s);
  const GaloisField& f = wr.field();
  std::vector<RatFunc> theta(wr.degree(), RatFunc(f));
  theta[1 % wr.degree()] = RatFunc::from_int(f, 1);
  auto mt = wr.weil_matrix(theta);
  nlohmann::ordered_json j;
  j["p"] = p;
  j["s"] = s;
  j["degree"] = wr.degree();
  j["a"] = wr.a().to_string();
  j["matrix_of_theta"] = WeilRestriction::matrix_json(mt);
  if (wr.degree() == 2) {
    auto evK = wr.common_eigenvector(WeilRestriction::FieldMode::K);
    auto evk = wr.common_eigenvector(WeilRestriction::FieldMode::k);
    j["eigenvector_over_K"] = evK ? nlohmann::ordered_json::array({(*evK)[0].to_string(),
                                                                   (*evK)[1].to_string()})
                                  : nlohmann::ordered_json();
    j["eigenvector_over_k"] = evk ? "present" : "absent";
  }
  std::vector<RatFunc> e1(wr.degree(), RatFunc(f));
  e1[0] = RatFunc::from_int(f, 1);
  j["orbit_spans_from_e1"] = wr.orbit_span_full(e1);
  if (json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "Weil restriction of G_m along a degree-" << wr.degree()
              << " purely inseparable extension\n";
    std::cout << "a = " << wr.a().to_string() << "\n";
    std::cout << "matrix of theta:\n" << j["matrix_of_theta"].dump() << "\n";
    if (j.contains("eigenvector_over_K"))
      std::cout << "eigenvector over K: " << j["eigenvector_over_K"].dump()
                << ", over k: " << j["eigenvector_over_k"].get<std::string>() << "\n";
    std::cout << "orbit of e1 spans: " << (j["orbit_spans_from_e1"].get<bool>() ? "yes" : "no")
              << "\n";
  }
  return 0;
}

int cmd_verify_paper(bool json) {
  CorpusReport rep = run_corpus();
  if (json)
    std::cout << rep.to_json().dump(2) << "\n";
  else
    std::cout << rep.to_text();
  return rep.all_pass ? 0 : 1;
}

int cmd_run(const std::string& path, bool json) {
  std::string src;
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    src = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "cannot open " << path << "\n";
      return 2;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    src = ss.str();
  }
  RunOptions opts;
  opts.field = default_field();
  opts.json = json;
  try {
    Script sc = parse_script(src);
    return run_script(sc, opts);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in split Chevalley groups over F_q(t)"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit JSON reports");

  std::string type = "F4", word, by, cochar, a_text = "t^2", path;
  int p = 2, s = 1;
  bool sigma = false, demo = false, unrestricted = false;

  bool constants = false;
  auto* c_root = app.add_subcommand("rootsys", "print a root system");
  c_root->add_option("--type", type, "Cartan type, e.g. F4, B3, G2");
  c_root->add_flag("--constants", constants,
                   "include the structure-constant tables (JSON)");

  auto* c_classify = app.add_subcommand("classify", "root classes of a cocharacter");
  c_classify->add_option("--cochar", cochar, "coefficients over the simple coroots")->required();

  auto* c_collect = app.add_subcommand("collect", "canonical collected form of a word");
  c_collect->add_option("--word", word, "word expression")->required();
  c_collect->add_option("--cochar", cochar, "collect in the grading of this cocharacter");

  auto* c_conj = app.add_subcommand("conjugate", "conjugate a word");
  c_conj->add_option("--by", by, "conjugating word")->required();
  c_conj->add_option("--word", word, "word to conjugate")->required();
  c_conj->add_option("--cochar", cochar, "grading for unipotent conjugation");

  auto* c_limit = app.add_subcommand("limit", "limit of a word along a cocharacter");
  c_limit->add_option("--cochar", cochar, "coefficients over the simple coroots")->required();
  c_limit->add_option("--word", word, "word expression")->required();

  auto* c_obstruct = app.add_subcommand("obstruct", "rational-conjugacy obstruction system");
  c_obstruct->add_option("--a", a_text, "the chosen element a of k (default t^2)");
  c_obstruct->add_flag("--sigma", sigma, "run the isogeny-twisted variant");
  c_obstruct->add_flag("--unrestricted", unrestricted,
                       "with --sigma: use a free conjugator instead of the sigma-image");

  auto* c_weil = app.add_subcommand("weilres", "Weil-restriction demonstration");
  c_weil->add_option("--p", p, "characteristic (2, 3 or 5)");
  c_weil->add_option("--s", s, "extension exponent");
  c_weil->add_flag("--demo", demo, "accepted for compatibility; output is always the demo");

  app.add_subcommand("verify-paper", "run the verification corpus");
  app.add_subcommand("repl", "interactive session");

  auto* c_run = app.add_subcommand("run", "execute a script file ('-' for stdin)");
  c_run->add_option("path", path, "script path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_root->parsed()) return cmd_rootsys(type, constants, json);
    if (c_classify->parsed()) return cmd_classify(cochar, json);
    if (c_collect->parsed()) return cmd_collect(word, cochar, json);
    if (c_conj->parsed()) return cmd_conjugate(by, word, cochar, json);
    if (c_limit->parsed()) return cmd_limit(cochar, word, json);
    if (c_obstruct->parsed()) return cmd_obstruct(a_text, sigma, unrestricted, json);
    if (c_weil->parsed()) return cmd_weilres(p, s, json);
    if (app.get_subcommand("verify-paper")->parsed()) return cmd_verify_paper(json);
    if (app.get_subcommand("repl")->parsed()) {
      RunOptions opts;
      opts.field = default_field();
      opts.json = json;
      return run_repl(opts, std::cin);
    }
    if (c_run->parsed()) return cmd_run(path, json);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
