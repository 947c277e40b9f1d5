#include "agemo/syzygy.hpp"

#include <algorithm>

#include <map>
#include <stdexcept>

namespace agemo {

namespace {

Vec product(const Algebra& a, Side side, const Vec& c, const Vec& y) {
  return side == Side::Left ? a.multiply(c, y) : a.multiply(y, c);
}

std::string wrap(const std::string& op, const Module& m) {
  return m.name().empty() ? std::string() : op + "(" + m.name() + ")";
}

}  // namespace

Vec ProjectiveSum::component(const Vec& v, std::size_t k) const {
  const Matrix& inc = inclusions.at(k);
  Vec local(v.begin() + static_cast<long>(offsets[k]), v.begin() + static_cast<long>(offsets[k] + inc.cols()));
  return inc.apply(local);
}

ProjectiveSum projective_sum(const AlgebraPtr& a, Side side, std::vector<std::size_t> vertices) {
  ProjectiveSum p;
  p.algebra = a;
  p.side = side;
  p.vertices = std::move(vertices);
  if (p.vertices.empty()) {
    p.module = zero_module(a, side);
    return p;
  }
  std::map<std::size_t, IndecomposableProjective> cache;
  std::vector<Module> parts;
  std::size_t off = 0;
  for (auto j : p.vertices) {
    auto it = cache.find(j);
    if (it == cache.end()) it = cache.emplace(j, projective_indecomposable(a, side, j)).first;
    parts.push_back(it->second.module);
    p.inclusions.push_back(it->second.inclusion);
    p.offsets.push_back(off);
    off += it->second.module.dim();
  }
  p.module = parts.size() == 1 ? parts[0] : direct_sum(parts).module;
  return p;
}

ProjectiveSum dual_projective_sum(const ProjectiveSum& p) { return projective_sum(p.algebra, flip(p.side), p.vertices); }

ProjectiveCover projective_cover(const Module& m) {
  const auto& a = m.algebra();
  const Field f = m.field();
  const std::size_t d = m.dim();
  ProjectiveCover out;
  Matrix rad = radical_of_module(m).map.matrix;
  IncrementalBasis ib(d, f);
  for (std::size_t c = 0; c < rad.cols(); ++c) ib.add(rad.col(c));
  std::vector<std::size_t> vertices;
  for (std::size_t j = 0; j < a->vertex_count() && ib.rank() < d; ++j) {
    Matrix ej = m.action_of(a->idempotents()[j]);
    for (std::size_t c = 0; c < d; ++c) {
      Vec g = ej.col(c);
      if (ib.add(g)) {
        out.generators.push_back(g);
        vertices.push_back(j);
      }
    }
  }
  out.projective = projective_sum(a, m.side(), vertices);
  Matrix map(d, out.projective.dim(), f);
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    const Matrix& inc = out.projective.inclusions[k];
    for (std::size_t t = 0; t < inc.cols(); ++t) {
      Vec img = m.action_of(inc.col(t)).apply(out.generators[k]);
      for (std::size_t r = 0; r < d; ++r) map(r, out.projective.offsets[k] + t) = img[r];
    }
  }
  out.map = {out.projective.module, m, std::move(map)};
  return out;
}

ProjectivePresentation minimal_presentation(const Module& m) {
  ProjectivePresentation p;
  p.cover0 = projective_cover(m);
  p.syzygy = kernel_module(p.cover0.map);
  p.cover1 = projective_cover(p.syzygy.module);
  p.d1 = {p.cover1.projective.module, p.cover0.projective.module, p.syzygy.map.matrix * p.cover1.map.matrix};
  return p;
}

Submodule syzygy_submodule(const Module& m) {
  Submodule s = kernel_module(projective_cover(m).map);
  s.module = s.module.renamed(wrap("Omega", m));
  s.map.domain = s.module;
  return s;
}

Module syzygy(const Module& m) { return syzygy_submodule(m).module; }

Module syzygy_power(const Module& m, std::size_t t) {
  Module x = m;
  for (std::size_t i = 0; i < t; ++i) x = syzygy(x);
  return x;
}

ModuleMap dualize(const ProjectiveSum& source, const ProjectiveSum& target, const std::vector<Vec>& images) {
  if (images.size() != source.vertices.size()) throw std::invalid_argument("one image per generator expected");
  ProjectiveSum s = dual_projective_sum(source), t = dual_projective_sum(target);
  const Algebra& a = *source.algebra;
  Matrix d(s.dim(), t.dim(), a.field());
  for (std::size_t l = 0; l < images.size(); ++l) {
    CoordinateSystem cs(s.inclusions[l]);
    for (std::size_t k = 0; k < target.vertices.size(); ++k) {
      Vec c = target.component(images[l], k);
      if (is_zero(c)) continue;
      for (std::size_t col = 0; col < t.inclusions[k].cols(); ++col) {
        auto coords = cs.coordinates(product(a, source.side, c, t.inclusions[k].col(col)));
        if (!coords) throw std::logic_error("dualized component leaves its summand");
        for (std::size_t r = 0; r < coords->size(); ++r) d(s.offsets[l] + r, t.offsets[k] + col) = (*coords)[r];
      }
    }
  }
  return {t.module, s.module, std::move(d)};
}

Module transpose(const Module& m) {
  ProjectivePresentation p = minimal_presentation(m);
  const auto& a = m.algebra();
  if (p.cover1.projective.vertices.empty()) return zero_module(a, flip(m.side())).renamed(wrap("Tr", m));
  std::vector<Vec> images;
  for (const auto& g : p.cover1.generators) images.push_back(p.syzygy.map.matrix.apply(g));
  ModuleMap d = dualize(p.cover1.projective, p.cover0.projective, images);
  return cokernel_module(d).module.renamed(wrap("Tr", m));
}

Module cosyzygy(const Module& m) { return transpose(syzygy(transpose(m))).renamed(wrap("mho", m)); }

Module cosyzygy_power(const Module& m, std::size_t t) {
  Module x = m;
  for (std::size_t i = 0; i < t; ++i) x = cosyzygy(x);
  return x;
}

LeftApproximation minimal_left_approximation(const Module& m) {
  const auto& a = m.algebra();
  const Field f = m.field();
  const std::size_t n = a->dim(), d = m.dim();
  const Side side = m.side();
  DualModule dm = dual_with_basis(m);
  const std::size_t target_rank = dm.basis.size();

  struct Candidate {
    std::size_t vertex;
    Matrix coords;
    std::vector<Vec> span;
  };
  std::vector<Candidate> cands;
  std::vector<CoordinateSystem> coord_sys;
  for (std::size_t i = 0; i < a->vertex_count(); ++i)
    coord_sys.emplace_back(projective_indecomposable(a, side, i).inclusion);
  for (const auto& fk : dm.basis)
    for (std::size_t i = 0; i < a->vertex_count(); ++i) {
      const Vec& e = a->idempotents()[i];
      Matrix g = (side == Side::Left ? a->right_mult_by(e) : a->left_mult_by(e)) * fk;
      if (g == Matrix(n, d, f)) continue;
      Candidate c{i, coord_sys[i].coordinates_of(g), {}};
      for (std::size_t l = 0; l < n; ++l) {
        Matrix h = (side == Side::Left ? a->right_mult(l) : a->left_mult(l)) * g;
        Vec flat;
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t col = 0; col < d; ++col) flat.push_back(h(r, col));
        c.span.push_back(std::move(flat));
      }
      cands.push_back(std::move(c));
    }

  std::vector<bool> keep(cands.size(), true);
  auto generates = [&]() {
    IncrementalBasis ib(n * d, f);
    for (std::size_t k = 0; k < cands.size(); ++k)
      if (keep[k])
        for (const auto& v : cands[k].span) ib.add(v);
    return ib.rank() == target_rank;
  };
  for (std::size_t k = 0; k < cands.size(); ++k) {
    keep[k] = false;
    if (!generates()) keep[k] = true;
  }

  std::vector<std::size_t> vertices;
  Matrix map(0, d, f);
  for (std::size_t k = 0; k < cands.size(); ++k)
    if (keep[k]) {
      vertices.push_back(cands[k].vertex);
      map = vstack(map, cands[k].coords);
    }
  LeftApproximation out;
  out.target = projective_sum(a, side, vertices);
  out.map = {m, out.target.module, std::move(map)};
  out.cokernel = cokernel_module(out.map);
  out.cokernel.module = out.cokernel.module.renamed(wrap("mho", m));
  out.cokernel.map.codomain = out.cokernel.module;
  return out;
}

namespace {

// dim Hom(X, A) = dim of {y in P* : sum_k w_k y_k = 0 for all w in the syzygy}.
std::size_t dual_dim_from(const ProjectiveCover& cover, const Matrix& syzygy_basis, std::size_t& dual_proj_dim) {
  const ProjectiveSum& p = cover.projective;
  ProjectiveSum ps = dual_projective_sum(p);
  dual_proj_dim = ps.dim();
  if (ps.dim() == 0) return 0;
  const Algebra& a = *p.algebra;
  const std::size_t n = a.dim();
  Matrix sys(n * syzygy_basis.cols(), ps.dim(), a.field());
  for (std::size_t w = 0; w < syzygy_basis.cols(); ++w) {
    Vec wv = syzygy_basis.col(w);
    for (std::size_t k = 0; k < p.vertices.size(); ++k) {
      Vec c = p.component(wv, k);
      if (is_zero(c)) continue;
      for (std::size_t t = 0; t < ps.inclusions[k].cols(); ++t) {
        Vec prod = product(a, p.side, c, ps.inclusions[k].col(t));
        for (std::size_t r = 0; r < n; ++r) sys(w * n + r, ps.offsets[k] + t) = prod[r];
      }
    }
  }
  return ps.dim() - rank(sys);
}

struct ExtContext {
  ExtOptions opts;
  std::map<std::pair<int, std::size_t>, ExtProfile> simple_profiles;
  std::map<std::pair<int, std::size_t>, std::size_t> simple_duals;
};

ExtProfile ext_impl(const Module& m, std::size_t horizon, ExtContext& ctx, bool stop);

std::size_t simple_dual(const AlgebraPtr& a, Side side, std::size_t v, ExtContext& ctx) {
  auto key = std::make_pair(static_cast<int>(side), v);
  auto it = ctx.simple_duals.find(key);
  if (it != ctx.simple_duals.end()) return it->second;
  std::size_t h = hom_dim(simple_module(a, side, v), regular_module(a, side));
  ctx.simple_duals[key] = h;
  return h;
}

const ExtProfile& simple_profile(const AlgebraPtr& a, Side side, std::size_t v, std::size_t horizon,
                                 ExtContext& ctx) {
  auto key = std::make_pair(static_cast<int>(side), v);
  auto it = ctx.simple_profiles.find(key);
  if (it != ctx.simple_profiles.end() && it->second.horizon >= horizon) return it->second;
  ExtProfile p = ext_impl(simple_module(a, side, v), horizon, ctx, false);
  return ctx.simple_profiles[key] = std::move(p);
}

bool simple_lower_bound_applies(const Module& m) {
  const auto& a = m.algebra();
  if (m.dim() != 1 || !is_local(*a)) return false;
  return socle_basis(regular_module(a, m.side())).cols() > 1;
}

ExtProfile ext_impl(const Module& m, std::size_t horizon, ExtContext& ctx, bool stop) {
  const auto& a = m.algebra();
  const std::size_t budget = ctx.opts.budget;
  ExtProfile out;
  out.horizon = horizon;
  std::vector<std::optional<std::size_t>> h(horizon + 1), p(horizon + 1);
  std::vector<std::vector<std::size_t>> simples_at(horizon + 1);
  Module x = m;
  bool alive = true;
  for (std::size_t i = 0; i <= horizon; ++i) {
    Module next = x;
    if (alive) {
      if (x.dim() == 0) {
        h[i] = 0;
        p[i] = 0;
      } else if (x.dim() > budget) {
        alive = false;
        out.notes.push_back("syzygy part of dimension " + std::to_string(x.dim()) + " at level " +
                            std::to_string(i) + " exceeds the budget " + std::to_string(budget));
      } else {
        ProjectiveCover cover = projective_cover(x);
        Submodule k = kernel_module(cover.map);
        std::size_t pd = 0;
        h[i] = dual_dim_from(cover, k.map.matrix, pd);
        p[i] = pd;
        if (i < horizon) {
          SimpleSplit split = split_simple_summands(k.module);
          next = split.rest.module;
          simples_at[i + 1] = split.simple_vertices;
        }
      }
    }
    if (i >= 1) {
      ExtEntry e{0, false};
      if (h[i] && h[i - 1]) {
        std::size_t hs = 0;
        for (auto v : simples_at[i]) hs += simple_dual(a, m.side(), v, ctx);
        e = {*h[i] + hs + *h[i - 1] - *p[i - 1], true};
      }
      for (std::size_t j = 1; j < i; ++j)
        for (auto v : simples_at[j]) {
          const ExtEntry& se = simple_profile(a, m.side(), v, horizon - j, ctx).at(i - j);
          e += se;
          std::string note = "lower bounds inherited from the simple summand at vertex " + std::to_string(v) +
                             " split off at level " + std::to_string(j);
          if (!se.exact && std::find(out.notes.begin(), out.notes.end(), note) == out.notes.end())
            out.notes.push_back(note);
        }
      out.dims.push_back(e);
      if (stop && e.nonzero()) break;
    }
    x = next;
  }
  if (simple_lower_bound_applies(m)) {
    bool raised = false;
    for (auto& e : out.dims)
      if (!e.exact && e.value == 0) {
        e.value = 1;
        raised = true;
      }
    if (raised)
      out.notes.push_back("simple module over a local algebra that is not self-injective: unresolved entries are at least 1");
  }
  return out;
}

}  // namespace

std::size_t dual_dim(const Module& m) {
  ProjectiveCover cover = projective_cover(m);
  Submodule k = kernel_module(cover.map);
  std::size_t pd = 0;
  return dual_dim_from(cover, k.map.matrix, pd);
}

std::string ExtEntry::to_string() const {
  return exact ? std::to_string(value) : ">=" + std::to_string(value);
}

std::optional<std::size_t> ExtProfile::first_nonzero() const {
  for (std::size_t i = 0; i < dims.size(); ++i)
    if (dims[i].nonzero()) return i + 1;
  return std::nullopt;
}

bool ExtProfile::all_zero() const {
  if (dims.size() < horizon) return false;
  for (const auto& e : dims)
    if (!e.zero()) return false;
  return true;
}

ExtProfile ext_profile(const Module& m, std::size_t horizon, const ExtOptions& opts) {
  if (horizon == 0) throw std::invalid_argument("horizon must be at least 1");
  ExtContext ctx{opts, {}, {}};
  return ext_impl(m, horizon, ctx, opts.stop_at_first_nonzero);
}

std::size_t torsion_dim(const Module& m) { return m.dim() - rank(eval_map(m).matrix); }

bool is_torsionless(const Module& m) { return torsion_dim(m) == 0; }

bool is_reflexive(const Module& m) {
  ModuleMap ev = eval_map(m);
  return ev.codomain.dim() == m.dim() && rank(ev.matrix) == m.dim();
}

std::string to_string(Truth t) {
  switch (t) {
    case Truth::Holds: return "holds";
    case Truth::Fails: return "fails";
    default: return "unknown";
  }
}

namespace {

Truth truth_of(const ExtProfile& p, std::size_t i) {
  if (i > p.dims.size()) return Truth::Unknown;
  const ExtEntry& e = p.at(i);
  if (e.zero()) return Truth::Holds;
  if (e.nonzero()) return Truth::Fails;
  return Truth::Unknown;
}

}  // namespace

Truth TRProfile::at(long i) const {
  if (i == 0) throw std::invalid_argument("(TR_0) is not defined");
  std::size_t k = static_cast<std::size_t>(i > 0 ? i : -i);
  const auto& v = i > 0 ? positive : negative;
  return k <= v.size() ? v[k - 1] : Truth::Unknown;
}

TRProfile tr_profile(const Module& m, std::size_t horizon, const ExtOptions& opts) {
  TRProfile out;
  out.horizon = horizon;
  out.ext = ext_profile(m, horizon, opts);
  out.transpose_ext = ext_profile(transpose(m), horizon, opts);
  for (std::size_t i = 1; i <= horizon; ++i) {
    out.positive.push_back(truth_of(out.ext, i));
    out.negative.push_back(truth_of(out.transpose_ext, i));
  }
  return out;
}

PeriodResult omega_period(const Module& m, std::size_t horizon, const SearchOptions& opts, std::size_t max_dim) {
  PeriodResult out;
  Module x = m;
  for (std::size_t t = 1; t <= horizon; ++t) {
    x = syzygy(x);
    if (x.dim() == 0) {
      out.note = "syzygy vanishes at step " + std::to_string(t);
      return out;
    }
    if (x.dim() > max_dim) {
      out.inconclusive = true;
      out.note = "syzygy dimension exceeds " + std::to_string(max_dim) + " at step " + std::to_string(t);
      return out;
    }
    IsoVerdict v = is_isomorphic(x, m, opts);
    if (v.kind == IsoVerdict::Isomorphic) {
      out.period = t;
      return out;
    }
    if (v.kind == IsoVerdict::Unknown) {
      out.inconclusive = true;
      out.note = "isomorphism undecided at step " + std::to_string(t);
    }
  }
  return out;
}

std::string to_string(GPVerdict::Kind k) {
  switch (k) {
    case GPVerdict::GPExact: return "GP-exact";
    case GPVerdict::GPUpToHorizon: return "GP-up-to-horizon";
    case GPVerdict::NotGP: return "not-GP";
    default: return "unknown";
  }
}

GPVerdict certify_gp(const Module& m, std::size_t horizon, const ExtOptions& opts) {
  GPVerdict out;
  out.horizon = horizon;
  if (std::size_t k = torsion_dim(m); k > 0) {
    out.kind = GPVerdict::NotGP;
    out.witness = "K M != 0 (dimension " + std::to_string(k) + ")";
    return out;
  }
  ExtProfile ext = ext_profile(m, horizon, opts);
  PeriodResult per = omega_period(m, horizon);
  if (per.period) {
    bool vanish = true;
    for (std::size_t i = 1; i <= *per.period && i <= ext.dims.size(); ++i) vanish = vanish && ext.at(i).zero();
    if (vanish) {
      out.kind = GPVerdict::GPExact;
      out.period = *per.period;
      return out;
    }
  }
  if (auto i = ext.first_nonzero()) {
    out.kind = GPVerdict::NotGP;
    out.witness_index = *i;
    out.witness = "Ext^" + std::to_string(*i) + "(M, A) != 0";
    return out;
  }
  Module x = m;
  for (std::size_t t = 1; t < horizon; ++t) {
    x = cosyzygy(x);
    if (x.dim() == 0) break;
    if (!is_torsionless(x)) {
      out.kind = GPVerdict::NotGP;
      out.witness_index = t;
      out.witness = "mho^" + std::to_string(t) + " M is not torsionless";
      return out;
    }
  }
  out.kind = ext.all_zero() ? GPVerdict::GPUpToHorizon : GPVerdict::Unknown;
  return out;
}

std::string to_string(Certification c) {
  switch (c) {
    case Certification::Exact: return "exact";
    case Certification::UpToHorizon: return "up-to-horizon";
    case Certification::Refuted: return "refuted";
    default: return "unknown";
  }
}

namespace {

GCondition semi_gp_condition(const Module& m, std::size_t horizon, const ExtOptions& opts) {
  GCondition g;
  g.horizon = horizon;
  ExtProfile ext = ext_profile(m, horizon, opts);
  if (auto i = ext.first_nonzero()) {
    g.level = Certification::Refuted;
    g.index = *i;
    return g;
  }
  if (!ext.all_zero()) return g;
  g.holds = true;
  g.level = omega_period(m, horizon).period ? Certification::Exact : Certification::UpToHorizon;
  return g;
}

}  // namespace

GStatus g_status(const Module& m, std::size_t horizon, const ExtOptions& opts) {
  GStatus s;
  s.g1 = semi_gp_condition(m, horizon, opts);
  s.g2 = semi_gp_condition(dual(m), horizon, opts);
  s.g3.holds = is_reflexive(m);
  s.g3.level = Certification::Exact;
  s.g3.horizon = horizon;
  return s;
}

}  // namespace agemo
