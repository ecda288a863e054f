#include "chevalg/words.hpp"

#include <algorithm>

#include "chevalg/fexpr.hpp"

namespace chevalg {

void TorusFactor::set(int i, RatFunc v) {
  if (v.is_zero()) throw std::domain_error("TorusFactor: zero coordinate");
  if (v.is_one()) {
    values.erase(i);
    return;
  }
  values.insert_or_assign(i, std::move(v));
}

TorusFactor TorusFactor::inverse() const {
  TorusFactor r;
  for (auto& [i, v] : values) r.values.emplace(i, v.inv());
  return r;
}

TorusFactor TorusFactor::operator*(const TorusFactor& o) const {
  TorusFactor r = *this;
  for (auto& [i, v] : o.values) {
    auto it = r.values.find(i);
    if (it == r.values.end()) {
      r.values.emplace(i, v);
    } else {
      it->second = it->second * v;
      if (it->second.is_one()) r.values.erase(it);
    }
  }
  return r;
}

RatFunc TorusFactor::eval_root(const RootSystem& rs, int zeta, const GaloisField& f) const {
  RatFunc r = RatFunc::from_int(f, 1);
  for (auto& [i, v] : values) r = r * v.pow(rs.simple_pairing(zeta, i));
  return r;
}

GroupWord::GroupWord(std::vector<Factor> fs) {
  for (auto& f : fs) {
    if (auto* rf = std::get_if<RootFactor>(&f)) {
      if (rf->param.is_zero()) continue;
    }
    if (auto* tf = std::get_if<TorusFactor>(&f)) {
      if (tf->is_identity()) continue;
    }
    fs_.push_back(std::move(f));
  }
}

GroupWord GroupWord::root_elem(int root, FormalPoly x) {
  return GroupWord({RootFactor{root, std::move(x)}});
}

GroupWord GroupWord::torus_elem(TorusFactor t) { return GroupWord({Factor{std::move(t)}}); }

GroupWord GroupWord::weyl_elem(int root) { return GroupWord({WeylFactor{root}}); }

GroupWord GroupWord::cochar_elem(const RootSystem& rs, const Cocharacter& lambda,
                                 const RatFunc& a) {
  if (a.is_zero()) throw std::domain_error("cochar_elem: parameter must be invertible");
  TorusFactor t;
  for (int i = 0; i < rs.rank(); ++i)
    if (lambda.coeffs[i] != 0) t.set(i, a.pow(lambda.coeffs[i]));
  return torus_elem(std::move(t));
}

GroupWord GroupWord::coroot_elem(const RootSystem& rs, int xi, const RatFunc& a) {
  return cochar_elem(rs, coroot_cochar(rs, xi), a);
}

GroupWord GroupWord::operator*(const GroupWord& o) const {
  std::vector<Factor> fs = fs_;
  fs.insert(fs.end(), o.fs_.begin(), o.fs_.end());
  return GroupWord(std::move(fs));
}

GroupWord GroupWord::inverse() const {
  std::vector<Factor> fs;
  for (auto it = fs_.rbegin(); it != fs_.rend(); ++it) {
    if (auto* rf = std::get_if<RootFactor>(&*it)) {
      fs.push_back(RootFactor{rf->root, -rf->param});
    } else if (auto* tf = std::get_if<TorusFactor>(&*it)) {
      fs.push_back(tf->inverse());
    } else {
      fs.push_back(WeylFactor{-std::get<WeylFactor>(*it).root});
    }
  }
  return GroupWord(std::move(fs));
}

GroupWord GroupWord::subst(int var, const FormalPoly& value) const {
  std::vector<Factor> fs = fs_;
  for (auto& f : fs)
    if (auto* rf = std::get_if<RootFactor>(&f)) rf->param = rf->param.subst(var, value);
  return GroupWord(std::move(fs));
}

std::set<int> GroupWord::vars() const {
  std::set<int> vs;
  for (auto& f : fs_)
    if (auto* rf = std::get_if<RootFactor>(&f))
      for (int v : rf->param.vars()) vs.insert(v);
  return vs;
}

std::string GroupWord::to_string() const {
  if (fs_.empty()) return "id";
  std::string s;
  for (auto& f : fs_) {
    if (!s.empty()) s += "*";
    if (auto* rf = std::get_if<RootFactor>(&f)) {
      s += "e(" + std::to_string(rf->root) + "," + rf->param.to_string() + ")";
    } else if (auto* tf = std::get_if<TorusFactor>(&f)) {
      s += "torus(";
      bool first = true;
      for (auto& [i, v] : tf->values) {
        if (!first) s += ",";
        first = false;
        s += std::to_string(i + 1) + ":" + v.to_string();
      }
      s += ")";
    } else {
      s += "n(" + std::to_string(std::get<WeylFactor>(f).root) + ")";
    }
  }
  return s;
}

nlohmann::ordered_json GroupWord::to_json() const {
  auto arr = nlohmann::ordered_json::array();
  for (auto& f : fs_) {
    nlohmann::ordered_json e;
    if (auto* rf = std::get_if<RootFactor>(&f)) {
      e["kind"] = "root";
      e["root"] = rf->root;
      e["param"] = rf->param.to_string();
    } else if (auto* tf = std::get_if<TorusFactor>(&f)) {
      e["kind"] = "torus";
      nlohmann::ordered_json vals;
      for (auto& [i, v] : tf->values) vals[std::to_string(i + 1)] = v.to_string();
      e["values"] = vals;
    } else {
      e["kind"] = "weyl";
      e["root"] = std::get<WeylFactor>(f).root;
    }
    arr.push_back(e);
  }
  nlohmann::ordered_json j;
  j["factors"] = arr;
  return j;
}

GroupWord GroupWord::from_json(const GaloisField& f, const nlohmann::json& j) {
  std::vector<Factor> fs;
  for (auto& e : j.at("factors")) {
    std::string kind = e.at("kind");
    if (kind == "root") {
      fs.push_back(RootFactor{e.at("root").get<int>(),
                              parse_field_expr(f, e.at("param").get<std::string>())});
    } else if (kind == "torus") {
      TorusFactor t;
      for (auto& [k, v] : e.at("values").items())
        t.set(std::stoi(k) - 1, parse_rat_func(f, v.get<std::string>()));
      fs.push_back(std::move(t));
    } else if (kind == "weyl") {
      fs.push_back(WeylFactor{e.at("root").get<int>()});
    } else {
      throw std::invalid_argument("GroupWord::from_json: unknown factor kind " + kind);
    }
  }
  return GroupWord(std::move(fs));
}

bool CollectedWord::operator==(const CollectedWord& o) const {
  if (torus.has_value() != o.torus.has_value()) return false;
  if (torus && !(*torus == *o.torus)) return false;
  if (factors.size() != o.factors.size()) return false;
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (factors[i].root != o.factors[i].root || factors[i].param != o.factors[i].param)
      return false;
  return true;
}

GroupWord CollectedWord::to_word() const {
  std::vector<Factor> fs;
  if (torus) fs.push_back(*torus);
  for (auto& rf : factors) fs.push_back(rf);
  return GroupWord(std::move(fs));
}

std::optional<FormalPoly> CollectedWord::param_of(int root) const {
  for (auto& rf : factors)
    if (rf.root == root) return rf.param;
  return std::nullopt;
}

GroupWord commutator_expansion(const ChevalleyData& chev, int alpha, const FormalPoly& x,
                               int beta, const FormalPoly& y) {
  if (alpha == beta || alpha == -beta)
    throw std::invalid_argument("commutator_expansion: need alpha != +-beta");
  const GaloisField& f = x.field();
  std::vector<Factor> fs;
  for (const auto& term : chev.comm_terms(alpha, beta)) {
    FormalPoly p = (-x).pow(term.i) * y.pow(term.j) * RatFunc::from_int(f, term.coeff);
    if (!p.is_zero()) fs.push_back(RootFactor{term.root, std::move(p)});
  }
  return GroupWord(std::move(fs));
}

namespace {

const GaloisField* field_of(const GroupWord& w) {
  for (auto& f : w.factors()) {
    if (auto* rf = std::get_if<RootFactor>(&f)) return &rf->param.field();
    if (auto* tf = std::get_if<TorusFactor>(&f))
      if (!tf->values.empty()) return &tf->values.begin()->second.field();
  }
  return nullptr;
}

}  // namespace

CollectedWord collect(const GroupWord& w, const CollectContext& ctx) {
  if (!ctx.chev) throw std::invalid_argument("collect: missing Chevalley data");
  const ChevalleyData& chev = *ctx.chev;
  const RootSystem& rs = chev.roots();
  const GaloisField* f = field_of(w);

  if (ctx.allowed)
    for (int r : *ctx.allowed)
      for (int s : *ctx.allowed)
        if (r != s && r != -s) {
          auto sum = rs.sum(r, s);
          if (sum && !ctx.allowed->count(*sum))
            throw std::invalid_argument("collect: declared root set is not closed under addition");
        }

  // Pull torus factors to the front: T . L . s = (T s) . (s^{-1} L s).
  TorusFactor torus;
  std::vector<RootFactor> L;
  for (auto& fac : w.factors()) {
    if (std::holds_alternative<WeylFactor>(fac))
      throw std::invalid_argument("collect: Weyl factors are not collectible");
    if (auto* tf = std::get_if<TorusFactor>(&fac)) {
      for (auto& rf : L) rf.param = rf.param * tf->eval_root(rs, rf.root, *f).inv();
      torus = torus * *tf;
      continue;
    }
    const auto& rf = std::get<RootFactor>(fac);
    if (rf.param.is_zero()) continue;
    if (ctx.allowed && !ctx.allowed->count(rf.root))
      throw std::invalid_argument("collect: root factor outside the declared set");
    L.push_back(rf);
  }

  auto key = [&](int root) -> std::pair<int, int> {
    if (ctx.grading) {
      int wgt = weight(rs, *ctx.grading, root);
      return {wgt < 0 ? 0 : (wgt == 0 ? 1 : 2), root};
    }
    return {0, root};
  };

  long long work = 0;
  const long long kWorkCap = 20'000'000;
  for (;;) {
    // Locate a violation: an adjacent equal-root pair or an out-of-order pair.
    int found = -1;
    for (std::size_t i = 0; i + 1 < L.size(); ++i) {
      std::size_t idx = ctx.rightmost ? L.size() - 2 - i : i;
      if (L[idx].root == L[idx + 1].root || key(L[idx].root) > key(L[idx + 1].root)) {
        found = static_cast<int>(idx);
        break;
      }
    }
    if (found < 0) break;
    if (++work > kWorkCap) throw CollectError("collect: work limit exceeded");

    std::size_t i = static_cast<std::size_t>(found);
    if (L[i].root == L[i + 1].root) {
      L[i].param = L[i].param + L[i + 1].param;
      L.erase(L.begin() + i + 1);
      if (L[i].param.is_zero()) L.erase(L.begin() + i);
      continue;
    }
    if (L[i].root == -L[i + 1].root)
      throw CollectError("collect: indeterminate (opposite root factors meet)");
    // eps_A(x) eps_B(y) = eps_B(y) eps_A(x) [eps_A(x), eps_B(y)].
    RootFactor A = L[i], B = L[i + 1];
    GroupWord tail = commutator_expansion(chev, B.root, B.param, A.root, A.param);
    L[i] = B;
    L[i + 1] = A;
    std::vector<RootFactor> tf;
    for (auto& fac : tail.factors()) {
      const auto& rf = std::get<RootFactor>(fac);
      if (ctx.allowed && !ctx.allowed->count(rf.root))
        throw std::invalid_argument("collect: commutator tail escapes the declared set");
      tf.push_back(rf);
    }
    L.insert(L.begin() + i + 2, tf.begin(), tf.end());
  }

  CollectedWord out;
  if (!torus.is_identity()) out.torus = torus;
  out.factors = std::move(L);
  return out;
}

GroupWord conj_by_weyl(const ChevalleyData& chev, int xi, const GroupWord& w, bool inverse) {
  const RootSystem& rs = chev.roots();
  std::vector<Factor> fs;
  for (auto& fac : w.factors()) {
    if (std::holds_alternative<WeylFactor>(fac))
      throw std::invalid_argument("conj_by_weyl: w must consist of root and torus factors");
    if (auto* rf = std::get_if<RootFactor>(&fac)) {
      long long sign = chev.weyl_sign(xi, rf->root, inverse);
      fs.push_back(RootFactor{rs.reflect(xi, rf->root),
                              rf->param * RatFunc::from_int(rf->param.field(), sign)});
      continue;
    }
    const auto& tf = std::get<TorusFactor>(fac);
    const auto& R = chev.coroot_reflection(xi);
    TorusFactor out;
    for (int j = 0; j < rs.rank(); ++j) {
      RatFunc v = RatFunc::from_int(tf.values.begin()->second.field(), 1);
      for (auto& [i, ti] : tf.values) v = v * ti.pow(R[j][i]);
      if (!v.is_one()) out.set(j, v);
    }
    fs.push_back(std::move(out));
  }
  return GroupWord(std::move(fs));
}

GroupWord conj_by_torus(const ChevalleyData& chev, const TorusFactor& s, const GroupWord& w) {
  const RootSystem& rs = chev.roots();
  std::vector<Factor> fs;
  for (auto& fac : w.factors()) {
    if (auto* rf = std::get_if<RootFactor>(&fac)) {
      fs.push_back(RootFactor{rf->root,
                              rf->param * s.eval_root(rs, rf->root, rf->param.field())});
    } else if (std::holds_alternative<TorusFactor>(fac)) {
      fs.push_back(fac);
    } else {
      // s n_mu s^{-1} = n_mu . (s_mu(s) s^{-1}).
      int mu = std::get<WeylFactor>(fac).root;
      const auto& R = chev.coroot_reflection(mu);
      TorusFactor refl;
      const GaloisField& f = s.values.begin()->second.field();
      for (int j = 0; j < rs.rank(); ++j) {
        RatFunc v = RatFunc::from_int(f, 1);
        for (auto& [i, ti] : s.values) v = v * ti.pow(R[j][i]);
        if (!v.is_one()) refl.set(j, v);
      }
      fs.push_back(WeylFactor{mu});
      TorusFactor residue = refl * s.inverse();
      if (!residue.is_identity()) fs.push_back(std::move(residue));
    }
  }
  return GroupWord(std::move(fs));
}

GroupWord conj_by_unipotent(const ChevalleyData& chev, const GroupWord& u, const GroupWord& w,
                            const CollectContext& ctx) {
  return collect(u * w * u.inverse(), ctx).to_word();
}

namespace {

Mat<FormalPoly> factor_matrix(const ChevalleyData& chev, const GaloisField& f,
                              const Factor& fac) {
  const FormalPoly zero(f);
  const FormalPoly one = FormalPoly::from_int(f, 1);
  int d = chev.dim();
  const RootSystem& rs = chev.roots();
  if (auto* rf = std::get_if<RootFactor>(&fac)) {
    Mat<FormalPoly> m(d, d, zero);
    FormalPoly xk = one;
    for (int k = 0;; ++k) {
      const auto& p = chev.ad_divided_power(rf->root, k);
      if (k > 0 && p.empty()) break;
      for (auto& [i, j, v] : p.entries) {
        FormalPoly add = xk * RatFunc::from_int(f, v);
        m.at(i, j) = m.at(i, j) + add;
      }
      xk = xk * rf->param;
      if (xk.is_zero()) break;
    }
    return m;
  }
  if (auto* tf = std::get_if<TorusFactor>(&fac)) {
    Mat<FormalPoly> m(d, d, zero);
    for (int i = 1; i <= rs.num_positive(); ++i)
      for (int lab : {i, -i})
        m.at(chev.basis_root(lab), chev.basis_root(lab)) =
            FormalPoly::constant(tf->eval_root(rs, lab, f));
    for (int i = 0; i < rs.rank(); ++i) m.at(chev.basis_h(i), chev.basis_h(i)) = one;
    return m;
  }
  int xi = std::get<WeylFactor>(fac).root;
  // n_xi = eps_xi(1) eps_{-xi}(-1) eps_xi(1).
  auto root_mat = [&](int root, long long c) {
    return factor_matrix(chev, f, RootFactor{root, FormalPoly::from_int(f, c)});
  };
  return root_mat(xi, 1) * root_mat(-xi, -1) * root_mat(xi, 1);
}

}  // namespace

Mat<FormalPoly> ad_matrix(const ChevalleyData& chev, const GaloisField& f, const GroupWord& w) {
  const FormalPoly zero(f);
  const FormalPoly one = FormalPoly::from_int(f, 1);
  Mat<FormalPoly> m = Mat<FormalPoly>::identity(chev.dim(), zero, one);
  for (auto& fac : w.factors()) m = m * factor_matrix(chev, f, fac);
  return m;
}

Mat<RatFunc> ad_matrix_at(const ChevalleyData& chev, const GaloisField& f, const GroupWord& w,
                          const std::map<int, RatFunc>& assign) {
  GroupWord spec = w;
  for (int v : w.vars()) {
    auto it = assign.find(v);
    if (it == assign.end())
      throw std::invalid_argument("ad_matrix_at: unassigned formal variable " + FormalVars::name(v));
    spec = spec.subst(v, FormalPoly::constant(it->second));
  }
  Mat<FormalPoly> m = ad_matrix(chev, f, spec);
  Mat<RatFunc> out(m.rows(), m.cols(), RatFunc(f));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j).constant_value();
  return out;
}

bool words_equal_ad(const ChevalleyData& chev, const GaloisField& f, const GroupWord& a,
                    const GroupWord& b) {
  return ad_matrix(chev, f, a) == ad_matrix(chev, f, b);
}

std::optional<GroupWord> take_limit(const ChevalleyData& chev, const Cocharacter& lambda,
                                    const GroupWord& w) {
  CollectContext ctx;
  ctx.chev = &chev;
  ctx.grading = lambda;
  CollectedWord c = collect(w, ctx);
  const RootSystem& rs = chev.roots();
  std::vector<Factor> fs;
  if (c.torus) fs.push_back(*c.torus);
  for (auto& rf : c.factors) {
    int wgt = weight(rs, lambda, rf.root);
    if (wgt < 0) return std::nullopt;
    if (wgt == 0) fs.push_back(rf);
  }
  return GroupWord(std::move(fs));
}

ParabolicMembership in_parabolic_analysis(const ChevalleyData& chev, const GroupWord& w,
                                          const Cocharacter& lambda) {
  CollectContext ctx;
  ctx.chev = &chev;
  ctx.grading = lambda;
  ParabolicMembership r{true, false, collect(w, ctx)};
  const RootSystem& rs = chev.roots();
  for (auto& rf : r.collected.factors) {
    if (weight(rs, lambda, rf.root) < 0) {
      r.in_parabolic = false;
      if (rf.param.is_constant() && !rf.param.is_zero()) r.certain = true;
    }
  }
  if (r.in_parabolic) r.certain = true;
  return r;
}

bool in_parabolic(const ChevalleyData& chev, const GroupWord& w, const Cocharacter& lambda) {
  return in_parabolic_analysis(chev, w, lambda).in_parabolic;
}

}  // namespace chevalg
