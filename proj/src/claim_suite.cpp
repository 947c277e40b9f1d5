#include "agemo/claim_suite.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <sstream>
#include <thread>

namespace agemo {

namespace {

ClaimResult claim(std::size_t index, std::string id, std::string title) {
  ClaimResult r;
  r.index = index;
  r.id = std::move(id);
  r.title = std::move(title);
  return r;
}

struct Checker {
  ClaimResult& r;
  void expect(bool ok, const std::string& what) {
    if (!ok) r.failures.push_back(what);
  }
};

Scalar S(const CompiledQuiver& c, const mpq_class& v) { return Scalar(c.algebra->field(), v); }

mpq_class qpow(const mpq_class& q, long k) {
  mpq_class out = 1;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) out *= q;
  return k < 0 ? mpq_class(1 / out) : out;
}

std::string qs(const mpq_class& v) { return v.get_str(); }

bool iso(const Module& a, const Module& b, const SearchOptions& so) {
  return is_isomorphic(a, b, so).kind == IsoVerdict::Isomorphic;
}

// Rank of {h o f : h in Hom(Y, A)} against dim Hom(X, A), for f : X -> Y.
bool restriction_surjective(const ModuleMap& f) {
  const Module& x = f.domain;
  Module reg = regular_module(x.algebra(), x.side());
  auto hs = hom_basis(f.codomain, reg);
  IncrementalBasis ib(reg.dim() * x.dim(), x.field());
  for (const auto& h : hs) {
    Matrix c = h.matrix * f.matrix;
    Vec flat;
    for (std::size_t r = 0; r < c.rows(); ++r)
      for (std::size_t k = 0; k < c.cols(); ++k) flat.push_back(c(r, k));
    ib.add(flat);
  }
  return ib.rank() == hom_dim(x, reg);
}

Namer lambda_namer(const CompiledQuiver& lambda, const mpq_class& q) {
  return [lambda, q](const Module& m) { return lambda_label(lambda, q, m); };
}

ClaimResult claim_algebras(const SuiteConfig& cfg) {
  ClaimResult r = claim(1, "algebra-golden", "dimensions of the bundled algebras and vanishing of the defining relations");
  Checker c{r};
  CompiledQuiver lam = compile_lambda(cfg.q);
  const Algebra& a = *lam.algebra;
  c.expect(a.dim() == 6, "dim Lambda = " + std::to_string(a.dim()));
  std::map<std::string, mpq_class> bind{{"q", cfg.q}};
  std::size_t vanishing = 0;
  auto arrow_vec = [&](std::size_t arr) { return path_normal_form(lam, std::span<const std::size_t>(&arr, 1)); };
  for (const auto& rel : lam.presentation.relations) {
    Vec sum = zero_vec(a.dim(), a.field());
    for (const auto& t : rel.terms) {
      Vec p = path_normal_form(lam, std::span<const std::size_t>(t.path.data(), 1));
      for (std::size_t i = 1; i < t.path.size(); ++i)
        p = a.multiply(arrow_vec(t.path[i]), p);
      Scalar k = evaluate(t.coeff, bind, a.field());
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += k * p[i];
    }
    if (is_zero(sum)) ++vanishing;
    else r.failures.push_back("relation '" + rel.text + "' does not vanish");
  }
  c.expect(vanishing == 7, std::to_string(vanishing) + " of the relations vanish");
  std::size_t dp = make_lambda_prime(cfg.q)->dim(), dt = make_lambda_tilde(cfg.q)->dim();
  c.expect(dp == 4, "dim Lambda' = " + std::to_string(dp));
  c.expect(dt == 12, "dim Lambda~ = " + std::to_string(dt));
  r.summary = "dims 6, 4, 12; 7 relations vanish";
  return r;
}

ClaimResult claim_sweep(const SuiteConfig& cfg) {
  ClaimResult r = claim(2, "ideal-sweep", "right and left ideals generated by m_alpha, M(alpha) = Lambda/U_alpha, approximations");
  Checker c{r};
  CompiledQuiver lam = compile_lambda(cfg.q);
  Module reg = regular_module(lam.algebra, Side::Left);
  for (const auto& al : ideal_sweep()) {
    Scalar alpha = S(lam, al);
    std::string tag = " (alpha=" + qs(al) + ")";
    Submodule right = make_right_ideal_m(lam, alpha), left = make_left_ideal_m(lam, alpha), u = make_U(lam, alpha);
    c.expect(right.module.dim() == 3, "dim m_alpha Lambda != 3" + tag);
    c.expect(left.module.dim() == (al == 1 ? 2u : 3u), "dim Lambda m_alpha wrong" + tag);
    Module quot = quotient_by(reg, u.map.matrix).module;
    c.expect(iso(quot, make_M(lam, alpha), cfg.search), "M(alpha) not isomorphic to Lambda/U_alpha" + tag);
    if (al != 1)
      c.expect(iso(make_M(lam, S(lam, cfg.q * al)), left.module, cfg.search),
               "M(q alpha) not isomorphic to Lambda m_alpha" + tag);
    c.expect(restriction_surjective(left.map), "u_alpha is not a left approximation" + tag);
  }
  r.summary = std::to_string(ideal_sweep().size()) + " values of alpha";
  return r;
}

ClaimResult claim_not_torsionless(const SuiteConfig& cfg) {
  ClaimResult r = claim(3, "mq-not-torsionless", "K M(q) = z M(q) is one-dimensional and M(q)* = m_1 Lambda");
  Checker c{r};
  CompiledQuiver lam = compile_lambda(cfg.q);
  Module m = make_M(lam, S(lam, cfg.q));
  ModuleMap ev = eval_map(m);
  Matrix k = kernel_basis(ev.matrix);
  c.expect(k.cols() == 1, "dim K M(q) = " + std::to_string(k.cols()));
  Matrix zm = column_space_basis(m.action_of(path_normal_form(lam, "z")));
  c.expect(k.cols() == zm.cols() && column_space_basis(k) == zm, "K M(q) differs from z M(q)");
  c.expect(!is_torsionless(m), "M(q) is torsionless");
  c.expect(iso(dual(m), make_right_ideal_m(lam, S(lam, 1)).module, cfg.search), "M(q)* not isomorphic to m_1 Lambda");
  r.summary = "dim K M(q) = " + std::to_string(k.cols());
  return r;
}

void expect_zero_profile(Checker& c, const ExtProfile& p, const std::string& who) {
  for (std::size_t i = 1; i <= p.horizon; ++i)
    if (i > p.dims.size() || !p.at(i).zero())
      c.expect(false, "Ext^" + std::to_string(i) + "(" + who + ", A) = " +
                          (i > p.dims.size() ? std::string("?") : p.at(i).to_string()));
}

ClaimResult claim_semi_gp(const SuiteConfig& cfg) {
  ClaimResult r = claim(4, "semi-gp-horizon", "M(q) and m_1 Lambda have vanishing Ext up to the horizon");
  Checker c{r};
  CompiledQuiver lam = compile_lambda(cfg.q);
  Module m = make_M(lam, S(lam, cfg.q));
  expect_zero_profile(c, ext_profile(m, cfg.horizon, cfg.ext), "M(q)");
  expect_zero_profile(c, ext_profile(make_right_ideal_m(lam, S(lam, 1)).module, cfg.horizon, cfg.ext), "m_1 Lambda");
  for (const auto& [start, who] : {std::pair{m, std::string("M(q)")}, std::pair{dual(m), std::string("M(q)*")}}) {
    Module x = start;
    for (std::size_t t = 1; t <= cfg.horizon; ++t) {
      x = syzygy(x);
      std::string tag = "Omega^" + std::to_string(t) + " " + who;
      c.expect(x.dim() == 3, tag + " has dimension " + std::to_string(x.dim()));
      c.expect(is_indecomposable(x, cfg.search).kind == IndecVerdict::Indecomposable, tag + " not indecomposable");
    }
  }
  r.summary = "Ext^1..Ext^" + std::to_string(cfg.horizon) + " vanish; syzygies 3-dimensional indecomposable";
  return r;
}

ClaimResult claim_double_dual(const SuiteConfig& cfg) {
  ClaimResult r = claim(5, "double-dual", "M(q)** = Omega M(1) = Lambda m_1 + simple");
  Checker c{r};
  CompiledQuiver lam = compile_lambda(cfg.q);
  Module dd = eval_map(make_M(lam, S(lam, cfg.q))).codomain;
  Module om = syzygy(make_M(lam, S(lam, 1)));
  c.expect(dd.dim() == 3, "dim M(q)** = " + std::to_string(dd.dim()));
  c.expect(iso(dd, om, cfg.search), "M(q)** not isomorphic to Omega M(1)");
  c.expect(is_indecomposable(om, cfg.search).kind == IndecVerdict::Decomposes, "Omega M(1) does not decompose");
  Module sum = direct_sum({make_left_ideal_m(lam, S(lam, 1)).module, simple_module(lam.algebra, Side::Left, 0)}).module;
  c.expect(iso(om, sum, cfg.search), "Omega M(1) not isomorphic to Lambda m_1 + simple");
  r.summary = "M(q)** = Omega M(1) = Lambda m_1 + k";
  return r;
}

std::string g_string(const GCondition& g) {
  std::string s = g.holds ? "yes" : "no";
  s += "(" + to_string(g.level);
  if (g.level == Certification::Refuted) s += " at " + std::to_string(g.index);
  return s + ")";
}

ClaimResult claim_g_table(const SuiteConfig& cfg) {
  ClaimResult r = claim(6, "g-table", "independence of the conditions G1, G2, G3");
  Checker c{r};
  CompiledQuiver lam = compile_lambda(cfg.q);
  struct Row {
    long power;
    bool g1, g2, g3;
  };
  std::ostringstream sum;
  for (Row row : {Row{1, true, true, false}, Row{3, true, false, true}, Row{0, false, true, true}}) {
    GStatus g = g_status(make_M(lam, S(lam, qpow(cfg.q, row.power))), cfg.horizon, cfg.ext);
    std::string who = "M(" + power_label(S(lam, qpow(cfg.q, row.power)), cfg.q) + ")";
    c.expect(g.g1.holds == row.g1 && g.g1.level != Certification::Unknown, who + " G1 " + g_string(g.g1));
    c.expect(g.g2.holds == row.g2 && g.g2.level != Certification::Unknown, who + " G2 " + g_string(g.g2));
    c.expect(g.g3.holds == row.g3 && g.g3.level == Certification::Exact, who + " G3 " + g_string(g.g3));
    if (row.power == 0) c.expect(g.g1.index == 1, who + " G1 witness index " + std::to_string(g.g1.index));
    sum << who << ": G1 " << g_string(g.g1) << " G2 " << g_string(g.g2) << " G3 " << g_string(g.g3) << "; ";
  }
  r.summary = sum.str();
  return r;
}

ClaimResult claim_tr(const SuiteConfig& cfg) {
  ClaimResult r = claim(7, "tr-profiles", "M(q^-(s-1)) satisfies (TR_i) exactly for i < s");
  Checker c{r};
  CompiledQuiver lam = compile_lambda(cfg.q);
  const long T = static_cast<long>(cfg.tr_horizon);
  for (long s = 1; s <= 5; ++s) {
    TRProfile p = tr_profile(make_M(lam, S(lam, qpow(cfg.q, -(s - 1)))), cfg.tr_horizon, cfg.ext);
    for (long i = -T; i <= T; ++i) {
      if (i == 0) continue;
      Truth want = i < s ? Truth::Holds : Truth::Fails;
      if (p.at(i) != want)
        c.expect(false, "s=" + std::to_string(s) + " (TR_" + std::to_string(i) + ") " + to_string(p.at(i)));
    }
  }
  r.summary = "s = 1..5, |i| <= " + std::to_string(T);
  return r;
}

ClaimResult claim_finite_order(const SuiteConfig& cfg) {
  ClaimResult r = claim(8, "finite-order-gp", "for q = -1, M(3) and M(5) are Gorenstein-projective with period 2");
  Checker c{r};
  CompiledQuiver lam = compile_lambda(-1);
  for (long al : {3, 5}) {
    GPVerdict v = certify_gp(make_M(lam, S(lam, al)), cfg.horizon, cfg.ext);
    c.expect(v.kind == GPVerdict::GPExact && v.period == 2,
             "M(" + std::to_string(al) + "): " + to_string(v.kind) + " period " + std::to_string(v.period));
  }
  WalkOptions wo;
  wo.horizon = cfg.walk_horizon;
  wo.search = cfg.search;
  wo.ext = cfg.ext;
  ComponentReport rep = walk_component(make_M(lam, S(lam, 3)), wo);
  c.expect(rep.shape == "Atilde_1", "component of M(3) has shape " + rep.shape);
  r.summary = "GP-exact, period 2; component " + rep.shape;
  return r;
}

ClaimResult claim_shapes(const SuiteConfig& cfg) {
  ClaimResult r = claim(9, "component-shapes", "shapes of the components through M(q), M(1), M(3) and the right ideals");
  Checker c{r};
  CompiledQuiver lam = compile_lambda(cfg.q);
  WalkOptions wo;
  wo.horizon = cfg.walk_horizon;
  wo.search = cfg.search;
  wo.ext = cfg.ext;
  wo.namer = lambda_namer(lam, cfg.q);
  std::ostringstream sum;
  auto walk = [&](const Module& m) { return walk_component(m, wo); };

  ComponentReport a = walk(make_M(lam, S(lam, cfg.q)));
  c.expect(a.shape == "open-left" && a.vertices.back().name == "M(q)" && !a.vertices.back().torsionless,
           "M(q): " + a.shape + ", source " + (a.vertices.empty() ? "" : a.vertices.back().name));
  ComponentReport b = walk(make_M(lam, S(lam, 1)));
  c.expect(b.shape == "open-right" && b.vertices.front().name == "M(1)", "M(1): " + b.shape);
  ComponentReport d = walk(make_M(lam, S(lam, 3)));
  c.expect(d.shape == "open-both", "M(3): " + d.shape);
  ComponentReport e = walk(make_right_ideal_m(lam, S(lam, cfg.q)).module);
  c.expect(e.shape == "A_2" && e.vertices.front().name == "m(q)L", "m_q Lambda: " + e.shape);
  ComponentReport f = walk(make_right_ideal_m(lam, S(lam, cfg.q * cfg.q)).module);
  c.expect(f.shape == "open-right" && f.vertices.front().name == "m(q^2)L", "m_q^2 Lambda: " + f.shape);
  sum << "M(q) " << a.shape << ", M(1) " << b.shape << ", M(3) " << d.shape << ", m_q Lambda " << e.shape
      << ", m_q^2 Lambda " << f.shape;
  r.summary = sum.str();
  return r;
}

std::size_t ext_dim(const ExtProfile& p, std::size_t i, Checker& c, const std::string& who) {
  if (i > p.dims.size() || !p.at(i).exact) {
    c.expect(false, "Ext^" + std::to_string(i) + "(" + who + ") not exact");
    return 0;
  }
  return p.at(i).value;
}

ClaimResult claim_properties(const SuiteConfig& cfg) {
  ClaimResult r = claim(10, "property-suite", "approximation, snake, mho and Auslander-Bridger identities over the corpus");
  Checker c{r};
  CompiledQuiver lam = compile_lambda(cfg.q);
  auto corpus = property_corpus(lam, cfg.q);
  std::size_t sequences = 0;
  for (const auto& [label, m] : corpus) {
    const std::string who = label;
    // Approximation sequences 0 -> Omega Z -> P -> Z -> 0.
    {
      ProjectiveCover cov = projective_cover(m);
      Submodule k = kernel_module(cov.map);
      bool approx = restriction_surjective(k.map);
      bool ext0 = ext_profile(m, 1, cfg.ext).at(1).zero();
      long alt = static_cast<long>(hom_dim(m, regular_module(m.algebra(), m.side()))) -
                 static_cast<long>(dual_dim(cov.projective.module)) + static_cast<long>(dual_dim(k.module));
      c.expect(approx == ext0 && ext0 == (alt == 0), who + ": three-way criterion disagrees");
      ++sequences;
    }
    LeftApproximation ap = minimal_left_approximation(m);
    Module mho = cosyzygy(m);
    c.expect(iso(mho, ap.cokernel.module, cfg.search) || (mho.dim() == 0 && ap.cokernel.module.dim() == 0),
             who + ": Tr Omega Tr differs from the approximation cokernel");
    c.expect(ap.target.dim() == m.dim() - torsion_dim(m) + mho.dim(), who + ": dim P != dim M - dim K M + dim mho M");
    ModuleMap ev = eval_map(m);
    std::size_t coker_phi = ev.codomain.dim() - rank(ev.matrix);
    c.expect(coker_phi == torsion_dim(mho), who + ": dim Coker phi_X != dim K mho X");
    if (is_torsionless(m)) {
      c.expect(restriction_surjective(ap.map), who + ": approximation fails Hom-surjectivity");
      c.expect(ext_profile(mho, 1, cfg.ext).at(1).zero(), who + ": Ext^1(mho X, A) != 0");
      c.expect(torsion_dim(mho) == coker_phi, who + ": snake identity fails");
      c.expect(is_torsionless(mho) == (coker_phi == 0), who + ": Z torsionless iff phi_X surjective fails");
    }
    Module tr = transpose(m);
    ExtProfile tre = ext_profile(tr, 4, cfg.ext);
    Module x = m;
    for (std::size_t t = 0; t <= 2; ++t) {
      long lhs = static_cast<long>(ext_dim(tre, t + 1, c, "Tr " + who)) - static_cast<long>(x.dim()) +
                 static_cast<long>(eval_map(x).codomain.dim()) - static_cast<long>(ext_dim(tre, t + 2, c, "Tr " + who));
      c.expect(lhs == 0, who + ": Auslander-Bridger identity fails at t=" + std::to_string(t));
      x = cosyzygy(x);
    }
    bool projective = syzygy(m).dim() == 0;
    if (!projective) {
      c.expect(iso(cosyzygy(tr), transpose(syzygy(m)), cfg.search) ||
                   (cosyzygy(tr).dim() == 0 && transpose(syzygy(m)).dim() == 0),
               who + ": mho Tr M differs from Tr Omega M");
      if (is_indecomposable(m, cfg.search).kind == IndecVerdict::Indecomposable) {
        if (ext_profile(m, 1, cfg.ext).at(1).zero())
          c.expect(iso(cosyzygy(syzygy(m)), m, cfg.search), who + ": mho Omega Z differs from Z");
        if (is_torsionless(m)) c.expect(iso(syzygy(mho), m, cfg.search), who + ": Omega mho X differs from X");
      }
    }
  }
  r.summary = std::to_string(corpus.size()) + " modules, " + std::to_string(sequences) + " syzygy sequences";
  return r;
}

}  // namespace

std::vector<mpq_class> ideal_sweep() { return {0, 1, -1, 2, -2, 3, 5}; }

std::vector<CorpusEntry> property_corpus(const CompiledQuiver& lam, const mpq_class& q) {
  std::vector<CorpusEntry> out;
  const Field f = lam.algebra->field();
  auto label = [&](const std::string& pre, const mpq_class& v, const std::string& post) {
    return pre + power_label(Scalar(f, v), q) + post;
  };
  for (const mpq_class& al : std::vector<mpq_class>{0, 1, q, q * q, q * q * q, 3, -1, mpq_class(1 / q), 5})
    out.push_back({label("M(", al, ")"), make_M(lam, Scalar(f, al))});
  out.push_back({"Lm(1)", make_left_ideal_m(lam, Scalar(f, 1)).module});
  out.push_back({"Omega M(1)", syzygy(make_M(lam, Scalar(f, 1)))});
  for (const mpq_class& al : std::vector<mpq_class>{0, 1, q, q * q, 3, -1, mpq_class(1 / q)})
    out.push_back({label("m(", al, ")L"), make_right_ideal_m(lam, Scalar(f, al)).module});
  out.push_back({"Tr M(3)", transpose(make_M(lam, Scalar(f, 3)))});
  CompiledQuiver lp = compile_lambda_prime(q, f);
  for (const mpq_class& al : std::vector<mpq_class>{1, q, 3})
    out.push_back({label("M'(", al, ")"), make_M_prime(lp, Scalar(f, al))});
  out.push_back({"M'(inf)", make_M_prime(lp, std::nullopt)});
  out.push_back({"M'(3)*", dual(make_M_prime(lp, Scalar(f, 3)))});
  CompiledQuiver lt = compile_lambda_tilde(q, f);
  out.push_back({"M1(3)", make_M_i(lt, 1, Scalar(f, 3))});
  out.push_back({"M2(3)", make_M_i(lt, 2, Scalar(f, 3))});
  CompiledQuiver ld = compile_lambda_dprime(f);
  out.push_back({"S''", simple_module(ld.algebra, Side::Left, 0)});
  return out;
}

std::vector<ClaimResult> run_claim_suite(const SuiteConfig& cfg) {
  std::vector<std::function<ClaimResult(const SuiteConfig&)>> claims{
      claim_algebras, claim_sweep,  claim_not_torsionless, claim_semi_gp, claim_double_dual,
      claim_g_table,  claim_tr,     claim_finite_order,    claim_shapes,  claim_properties};
  auto guarded = [](const std::function<ClaimResult(const SuiteConfig&)>& fn, const SuiteConfig& c,
                    std::size_t index) {
    auto t0 = std::chrono::steady_clock::now();
    try {
      ClaimResult r = fn(c);
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      return r;
    } catch (const std::exception& e) {
      ClaimResult r = claim(index, "claim-" + std::to_string(index), "");
      r.failures.push_back(std::string("exception: ") + e.what());
      return r;
    }
  };
  std::vector<ClaimResult> out;
  if (cfg.parallel && std::thread::hardware_concurrency() > 1) {
    std::vector<std::future<ClaimResult>> fs;
    for (std::size_t i = 0; i < claims.size(); ++i)
      fs.push_back(std::async(std::launch::async, guarded, claims[i], std::cref(cfg), i + 1));
    for (auto& f : fs) out.push_back(f.get());
  } else {
    for (std::size_t i = 0; i < claims.size(); ++i) out.push_back(guarded(claims[i], cfg, i + 1));
  }
  for (auto& r : out) r.pass = r.failures.empty();
  return out;
}

std::string format_suite(const std::vector<ClaimResult>& results) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& r : results) {
    passed += r.pass;
    os << (r.pass ? "PASS" : "FAIL") << " [" << r.index << "] " << r.id << ": " << r.title << "\n";
    if (!r.summary.empty()) os << "     " << r.summary << "\n";
    for (const auto& f : r.failures) os << "     - " << f << "\n";
  }
  os << passed << "/" << results.size() << " claims passed\n";
  return os.str();
}

}  // namespace agemo
