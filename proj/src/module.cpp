#include "agemo/module.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace agemo {

Module::Module(AlgebraPtr a, Side side, std::vector<Matrix> actions, std::string name) {
  if (!a) throw std::invalid_argument("module without algebra");
  if (actions.size() != a->dim())
    throw std::invalid_argument("module needs one action matrix per basis element");
  std::size_t m = actions.empty() ? 0 : actions[0].rows();
  for (const auto& x : actions)
    if (x.rows() != m || x.cols() != m) throw std::invalid_argument("action matrices must be square");
  d_ = std::make_shared<const Data>(Data{std::move(a), side, m, std::move(actions), std::move(name)});
}

Matrix Module::action_of(std::span<const Scalar> a) const {
  Matrix out(dim(), dim(), field());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) out += action(i).scaled(a[i]);
  return out;
}

Module Module::renamed(std::string name) const {
  Module m(*this);
  auto d = std::make_shared<Data>(*d_);
  d->name = std::move(name);
  m.d_ = std::move(d);
  return m;
}

namespace {

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a == b) return true;
  if (a->dim() != b->dim() || !(a->field() == b->field())) return false;
  for (std::size_t i = 0; i < a->dim(); ++i)
    for (std::size_t j = 0; j < a->dim(); ++j)
      if (a->product(i, j) != b->product(i, j)) return false;
  return true;
}

void check_compatible(const Module& m, const Module& n) {
  if (m.side() != n.side()) throw SideMismatch("modules on different sides");
  if (!same_algebra(m.algebra(), n.algebra())) throw SideMismatch("modules over different algebras");
}

Vec flatten(const Matrix& m) { return m.data(); }

Matrix unflatten(const Vec& v, std::size_t rows, std::size_t cols, Field f) {
  Matrix m(rows, cols, f);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[r * cols + c];
  return m;
}

Matrix power(const Matrix& m, std::size_t e) {
  Matrix result = Matrix::identity(m.rows(), m.field());
  Matrix base = m;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

}  // namespace

std::vector<std::string> validate_module(const Module& m) {
  std::vector<std::string> report;
  const auto& a = *m.algebra();
  const std::size_t n = a.dim();
  if (m.action_of(a.unit()) != Matrix::identity(m.dim(), m.field()))
    report.push_back("unit does not act as the identity");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix lhs = m.action_of(a.product(i, j));
      Matrix rhs = m.side() == Side::Left ? m.action(i) * m.action(j) : m.action(j) * m.action(i);
      if (lhs != rhs)
        report.push_back("action not multiplicative on (" + a.labels()[i] + "," + a.labels()[j] + ")");
    }
  return report;
}

bool is_intertwining(const ModuleMap& f) {
  const auto& m = f.domain;
  const auto& n = f.codomain;
  if (m.side() != n.side() || f.matrix.rows() != n.dim() || f.matrix.cols() != m.dim()) return false;
  for (std::size_t i = 0; i < m.algebra()->dim(); ++i)
    if (f.matrix * m.action(i) != n.action(i) * f.matrix) return false;
  return true;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  if (g.domain.dim() != f.codomain.dim()) throw std::invalid_argument("compose: dimension mismatch");
  return {f.domain, g.codomain, g.matrix * f.matrix};
}

ModuleMap identity_map(const Module& m) { return {m, m, Matrix::identity(m.dim(), m.field())}; }

Module regular_module(const AlgebraPtr& a, Side side) {
  std::vector<Matrix> acts;
  for (std::size_t i = 0; i < a->dim(); ++i)
    acts.push_back(side == Side::Left ? a->left_mult(i) : a->right_mult(i));
  return Module(a, side, std::move(acts), side == Side::Left ? "A" : "A_A");
}

Module zero_module(const AlgebraPtr& a, Side side) {
  return Module(a, side, std::vector<Matrix>(a->dim(), Matrix(0, 0, a->field())), "0");
}

Module simple_module(const AlgebraPtr& a, Side side, std::size_t vertex) {
  const std::size_t n = a->dim(), r = a->vertex_count();
  if (vertex >= r) throw std::invalid_argument("vertex out of range");
  Matrix basis = hstack(Matrix::from_columns(n, a->idempotents(), a->field()), a->radical());
  CoordinateSystem cs(basis);
  std::vector<Matrix> acts;
  for (std::size_t i = 0; i < n; ++i) {
    Vec c = *cs.coordinates(a->basis_vector(i));
    Matrix s(1, 1, a->field());
    s(0, 0) = c[vertex];
    acts.push_back(s);
  }
  return Module(a, side, std::move(acts), r == 1 ? "S" : "S(" + std::to_string(vertex + 1) + ")");
}

IndecomposableProjective projective_indecomposable(const AlgebraPtr& a, Side side, std::size_t vertex) {
  const Vec& e = a->idempotents().at(vertex);
  Matrix span = side == Side::Left ? a->right_mult_by(e) : a->left_mult_by(e);
  Matrix basis = column_space_basis(span);
  Submodule s = restrict_to(regular_module(a, side), basis);
  std::string name = a->vertex_count() == 1
                         ? (side == Side::Left ? "A" : "A_A")
                         : (side == Side::Left ? "P(" : "P_A(") + std::to_string(vertex + 1) + ")";
  return {vertex, s.module.renamed(name), basis};
}

ProjectiveDecomposition projective_indecomposables(const AlgebraPtr& a) {
  ProjectiveDecomposition d;
  for (std::size_t j = 0; j < a->vertex_count(); ++j) {
    d.left.push_back(projective_indecomposable(a, Side::Left, j));
    d.right.push_back(projective_indecomposable(a, Side::Right, j));
  }
  return d;
}

namespace {
Matrix radical_span(const Module& m);
}  // namespace

std::vector<ModuleMap> hom_basis(const Module& m, const Module& n) {
  check_compatible(m, n);
  const Field f = m.field();
  const std::size_t dm = m.dim(), dn = n.dim(), da = m.algebra()->dim();
  if (dm * dn == 0) return {};
  // A map is fixed by the images n_i of generators g_i lifting a basis of the top; the
  // images must kill every relation sum_i a_i g_i = 0.
  std::vector<Vec> gens;
  {
    IncrementalBasis ib(dm, f);
    Matrix rad = radical_span(m);
    for (std::size_t c = 0; c < rad.cols(); ++c) ib.add(rad.col(c));
    for (std::size_t c = 0; c < dm; ++c) {
      Vec e = unit_vec(dm, c, f);
      if (ib.add(e)) gens.push_back(std::move(e));
    }
  }
  const std::size_t r = gens.size();
  std::vector<Vec> span_cols;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t b = 0; b < da; ++b) span_cols.push_back(m.action(b).apply(gens[i]));
  Matrix g = Matrix::from_columns(dm, span_cols, f);
  Matrix rel = kernel_basis(g);
  Matrix eq(rel.cols() * dn, r * dn, f);
  for (std::size_t k = 0; k < rel.cols(); ++k)
    for (std::size_t i = 0; i < r; ++i) {
      Matrix block(dn, dn, f);
      for (std::size_t b = 0; b < da; ++b) {
        const Scalar& c = rel(i * da + b, k);
        if (!c.is_zero()) block += n.action(b).scaled(c);
      }
      for (std::size_t x = 0; x < dn; ++x)
        for (std::size_t y = 0; y < dn; ++y) eq(k * dn + x, i * dn + y) = block(x, y);
    }
  Matrix sol = eq.rows() == 0 ? Matrix::identity(r * dn, f) : kernel_basis(eq);
  // Pick columns of g forming a basis of M; F = Y X^-1 on that basis.
  std::vector<std::size_t> pivots;
  {
    IncrementalBasis ib(dm, f);
    for (std::size_t c = 0; c < g.cols() && pivots.size() < dm; ++c)
      if (ib.add(g.col(c))) pivots.push_back(c);
  }
  Matrix x(dm, dm, f);
  for (std::size_t j = 0; j < dm; ++j)
    for (std::size_t row = 0; row < dm; ++row) x(row, j) = g(row, pivots[j]);
  Matrix xinv = *inverse(x);
  std::vector<Vec> flat;
  for (std::size_t k = 0; k < sol.cols(); ++k) {
    const Vec solk = sol.col(k);
    Matrix y(dn, dm, f);
    for (std::size_t j = 0; j < dm; ++j) {
      const std::size_t i = pivots[j] / da, b = pivots[j] % da;
      Vec ni(solk.begin() + i * dn, solk.begin() + (i + 1) * dn);
      Vec img = n.action(b).apply(ni);
      for (std::size_t row = 0; row < dn; ++row) y(row, j) = img[row];
    }
    flat.push_back(flatten(y * xinv));
  }
  std::vector<ModuleMap> out;
  if (flat.empty()) return out;
  Matrix canon = column_space_basis(Matrix::from_columns(dm * dn, flat, f));
  for (std::size_t k = 0; k < canon.cols(); ++k)
    out.push_back({m, n, unflatten(canon.col(k), dn, dm, f)});
  return out;
}

std::size_t hom_dim(const Module& m, const Module& n) { return hom_basis(m, n).size(); }

DualModule dual_with_basis(const Module& m) {
  const auto& a = m.algebra();
  const Field f = a->field();
  const std::size_t n = a->dim();
  Module reg = regular_module(a, m.side());
  auto homs = hom_basis(m, reg);
  DualModule out;
  for (auto& h : homs) out.basis.push_back(h.matrix);
  const std::size_t k = out.basis.size();
  Side side = flip(m.side());
  if (k == 0) {
    out.module = zero_module(a, side);
    return out;
  }
  std::vector<Vec> flat;
  for (const auto& b : out.basis) flat.push_back(flatten(b));
  CoordinateSystem cs(Matrix::from_columns(n * m.dim(), flat, f));
  std::vector<Matrix> acts;
  for (std::size_t i = 0; i < n; ++i) {
    // Left M: (f.b)(x) = f(x) b.  Right M: (b.f)(x) = b f(x).
    const Matrix& mult = m.side() == Side::Left ? a->right_mult(i) : a->left_mult(i);
    std::vector<Vec> cols;
    for (const auto& b : out.basis) cols.push_back(*cs.coordinates(flatten(mult * b)));
    acts.push_back(Matrix::from_columns(k, cols, f));
  }
  std::string name = m.name().empty() ? "" : m.name() + "*";
  out.module = Module(a, side, std::move(acts), name);
  return out;
}

Module dual(const Module& m) { return dual_with_basis(m).module; }

ModuleMap eval_map(const Module& m) {
  DualModule d1 = dual_with_basis(m);
  DualModule d2 = dual_with_basis(d1.module);
  const Field f = m.field();
  const std::size_t n = m.algebra()->dim();
  const std::size_t k = d1.basis.size(), l = d2.basis.size();
  Matrix phi(l, m.dim(), f);
  if (l == 0) return {m, d2.module, phi};
  std::vector<Vec> flat;
  for (const auto& g : d2.basis) flat.push_back(flatten(g));
  CoordinateSystem cs(Matrix::from_columns(n * k, flat, f));
  for (std::size_t c = 0; c < m.dim(); ++c) {
    Matrix g(n, k, f);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t r = 0; r < n; ++r) g(r, j) = d1.basis[j](r, c);
    Vec coords = *cs.coordinates(flatten(g));
    for (std::size_t t = 0; t < l; ++t) phi(t, c) = coords[t];
  }
  return {m, d2.module, phi};
}

Submodule restrict_to(const Module& m, const Matrix& basis) {
  const auto& a = m.algebra();
  if (basis.cols() == 0) {
    Module z = zero_module(a, m.side());
    return {z, {z, m, Matrix(m.dim(), 0, m.field())}};
  }
  CoordinateSystem cs(basis);
  std::vector<Matrix> acts;
  for (std::size_t i = 0; i < a->dim(); ++i) acts.push_back(cs.coordinates_of(m.action(i) * basis));
  Module sub(a, m.side(), std::move(acts));
  return {sub, {sub, m, basis}};
}

Submodule quotient_by(const Module& m, const Matrix& subspace) {
  const Field f = m.field();
  const std::size_t d = m.dim();
  IncrementalBasis ib(d, f);
  std::vector<Vec> cols;
  for (std::size_t c = 0; c < subspace.cols(); ++c)
    if (ib.add(subspace.col(c))) cols.push_back(subspace.col(c));
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < d; ++i)
    if (ib.add(unit_vec(d, i, f))) chosen.push_back(i);
  const std::size_t q = chosen.size();
  std::vector<Vec> all;
  for (auto i : chosen) all.push_back(unit_vec(d, i, f));
  all.insert(all.end(), cols.begin(), cols.end());
  Matrix pi(q, d, f);
  if (d > 0) {
    CoordinateSystem cs(Matrix::from_columns(d, all, f));
    Matrix coords = cs.coordinates_of(Matrix::identity(d, f));
    pi = coords.block(0, 0, q, d);
  }
  const auto& a = m.algebra();
  std::vector<Matrix> acts;
  Matrix lift(d, q, f);
  for (std::size_t k = 0; k < q; ++k) lift(chosen[k], k) = Scalar(f, 1);
  for (std::size_t i = 0; i < a->dim(); ++i) acts.push_back(pi * m.action(i) * lift);
  Module quo(a, m.side(), std::move(acts));
  return {quo, {m, quo, pi}};
}

Submodule kernel_module(const ModuleMap& f) { return restrict_to(f.domain, kernel_basis(f.matrix)); }

Submodule image_module(const ModuleMap& f) {
  return restrict_to(f.codomain, column_space_basis(f.matrix));
}

Submodule cokernel_module(const ModuleMap& f) {
  return quotient_by(f.codomain, column_space_basis(f.matrix));
}

DirectSum direct_sum(const std::vector<Module>& ms) {
  if (ms.empty()) throw std::invalid_argument("direct sum of no modules");
  const auto& a = ms[0].algebra();
  const Field f = a->field();
  for (const auto& m : ms) check_compatible(ms[0], m);
  std::size_t total = 0;
  for (const auto& m : ms) total += m.dim();
  std::vector<Matrix> acts;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    std::vector<Matrix> blocks;
    for (const auto& m : ms) blocks.push_back(m.action(i));
    acts.push_back(block_diagonal(blocks, f));
  }
  std::string name;
  for (const auto& m : ms) {
    if (m.name().empty()) {
      name.clear();
      break;
    }
    name += (name.empty() ? "" : " + ") + m.name();
  }
  DirectSum out{Module(a, ms[0].side(), std::move(acts), name), {}, {}};
  std::size_t off = 0;
  for (const auto& m : ms) {
    Matrix inj(total, m.dim(), f), proj(m.dim(), total, f);
    for (std::size_t k = 0; k < m.dim(); ++k) {
      inj(off + k, k) = Scalar(f, 1);
      proj(k, off + k) = Scalar(f, 1);
    }
    out.injections.push_back({m, out.module, inj});
    out.projections.push_back({out.module, m, proj});
    off += m.dim();
  }
  return out;
}

Submodule submodule_generated(const Module& m, const std::vector<Vec>& vectors) {
  std::vector<Vec> cols;
  for (const auto& v : vectors) {
    if (v.size() != m.dim()) throw std::invalid_argument("vector outside the module");
    for (std::size_t i = 0; i < m.algebra()->dim(); ++i) cols.push_back(m.action(i).apply(v));
  }
  if (cols.empty()) return restrict_to(m, Matrix(m.dim(), 0, m.field()));
  return restrict_to(m, column_space_basis(Matrix::from_columns(m.dim(), cols, m.field())));
}

namespace {

Matrix radical_span(const Module& m) {
  const auto& a = m.algebra();
  const Matrix& rad = a->radical();
  Matrix acc(m.dim(), 0, m.field());
  for (std::size_t r = 0; r < rad.cols(); ++r) acc = hstack(acc, m.action_of(rad.col(r)));
  if (acc.cols() == 0) return acc;
  return column_space_basis(acc);
}

}  // namespace

Submodule radical_of_module(const Module& m) { return restrict_to(m, radical_span(m)); }

Submodule top(const Module& m) { return quotient_by(m, radical_span(m)); }

Matrix socle_basis(const Module& m) {
  const auto& a = m.algebra();
  const Matrix& rad = a->radical();
  Matrix stacked(0, m.dim(), m.field());
  for (std::size_t r = 0; r < rad.cols(); ++r) stacked = vstack(stacked, m.action_of(rad.col(r)));
  if (stacked.rows() == 0) return Matrix::identity(m.dim(), m.field());
  return kernel_basis(stacked);
}

SimpleSplit split_simple_summands(const Module& m) {
  const auto& a = m.algebra();
  const Field f = m.field();
  const std::size_t d = m.dim();
  Matrix rad = radical_span(m);
  Matrix soc = socle_basis(m);
  IncrementalBasis ib(d, f);
  for (std::size_t c = 0; c < rad.cols(); ++c) ib.add(rad.col(c));
  SimpleSplit out;
  for (std::size_t j = 0; j < a->vertex_count(); ++j) {
    Matrix ej = m.action_of(a->idempotents()[j]);
    for (std::size_t c = 0; c < soc.cols(); ++c) {
      Vec w = ej.apply(soc.col(c));
      if (ib.add(w)) out.simple_vertices.push_back(j);
    }
  }
  if (out.simple_vertices.empty()) {
    out.rest = {m, identity_map(m)};
    return out;
  }
  std::vector<Vec> rest;
  for (std::size_t c = 0; c < rad.cols(); ++c) rest.push_back(rad.col(c));
  for (std::size_t j = 0; j < a->vertex_count(); ++j) {
    Matrix ej = m.action_of(a->idempotents()[j]);
    for (std::size_t i = 0; i < d; ++i) {
      Vec w = ej.apply(unit_vec(d, i, f));
      if (ib.add(w)) rest.push_back(w);
    }
  }
  Matrix basis = rest.empty() ? Matrix(d, 0, f) : column_space_basis(Matrix::from_columns(d, rest, f));
  out.rest = restrict_to(m, basis);
  return out;
}

SmallRandom::SmallRandom(std::uint64_t seed) : engine_(seed) {}

long SmallRandom::next(long lo, long hi) {
  // Raw engine output keeps the sequence identical across standard libraries.
  return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
}

namespace {

Matrix combination(const std::vector<ModuleMap>& basis, const std::vector<long>& coeffs, Field f) {
  Matrix out(basis[0].matrix.rows(), basis[0].matrix.cols(), f);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (coeffs[i]) out += basis[i].matrix.scaled(Scalar(f, coeffs[i]));
  return out;
}

}  // namespace

IsoVerdict is_isomorphic(const Module& m, const Module& n, const SearchOptions& opts) {
  IsoVerdict v;
  const Field f = m.field();
  if (m.side() != n.side()) {
    v.kind = IsoVerdict::NotIsomorphic;
    v.reason = "different sides";
    return v;
  }
  if (!same_algebra(m.algebra(), n.algebra())) {
    v.kind = IsoVerdict::NotIsomorphic;
    v.reason = "different algebras";
    return v;
  }
  if (m.dim() != n.dim()) {
    v.kind = IsoVerdict::NotIsomorphic;
    v.reason = "dimensions " + std::to_string(m.dim()) + " and " + std::to_string(n.dim());
    return v;
  }
  if (m.dim() == 0) {
    v.kind = IsoVerdict::Isomorphic;
    v.witness = ModuleMap{m, n, Matrix(0, 0, f)};
    return v;
  }
  auto hmn = hom_basis(m, n);
  const std::size_t d = m.dim();
  auto found = [&](Matrix x) {
    v.kind = IsoVerdict::Isomorphic;
    v.witness = ModuleMap{m, n, std::move(x)};
    return v;
  };
  for (const auto& h : hmn) {
    ++v.attempts;
    if (rank(h.matrix) == d) return found(h.matrix);
  }
  SmallRandom rng(opts.seed);
  std::vector<long> coeffs(hmn.size());
  for (std::size_t t = 0; t < opts.attempts && !hmn.empty(); ++t) {
    ++v.attempts;
    for (auto& c : coeffs) c = rng.next(-9, 9);
    Matrix x = combination(hmn, coeffs, f);
    if (rank(x) == d) return found(x);
  }
  std::size_t hnm = hom_dim(n, m), emm = hom_dim(m, m), enn = hom_dim(n, n);
  if (hmn.size() != hnm || emm != enn || hmn.size() != emm) {
    v.kind = IsoVerdict::NotIsomorphic;
    v.reason = "hom dimensions differ: Hom(M,N)=" + std::to_string(hmn.size()) +
               " Hom(N,M)=" + std::to_string(hnm) + " End(M)=" + std::to_string(emm) +
               " End(N)=" + std::to_string(enn);
    return v;
  }
  // det(sum t_i F_i) has degree <= d in each t_i; a nonzero polynomial of that kind
  // cannot vanish on all of {0..d}^k.
  const std::size_t k = hmn.size();
  bool grid_ok = f.is_rational() || f.characteristic() > d;
  double points = 1;
  for (std::size_t i = 0; i < k; ++i) points *= static_cast<double>(d + 1);
  if (grid_ok && points <= static_cast<double>(opts.grid_budget)) {
    std::vector<long> t(k, 0);
    while (true) {
      std::size_t i = 0;
      while (i < k && t[i] == static_cast<long>(d)) t[i++] = 0;
      if (i == k) break;
      ++t[i];
      ++v.attempts;
      Matrix x = combination(hmn, t, f);
      if (!determinant(x).is_zero()) return found(x);
    }
    v.kind = IsoVerdict::NotIsomorphic;
    v.reason = "no invertible map: determinant vanishes on Hom(M,N)";
    return v;
  }
  v.kind = IsoVerdict::Unknown;
  v.reason = "no invertible map found";
  return v;
}

Matrix endomorphism_radical(const std::vector<Matrix>& basis, Field f) {
  const std::size_t k = basis.size();
  Matrix gram(k, k, f);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Matrix p = basis[i] * basis[j];
      Scalar t(f);
      for (std::size_t r = 0; r < p.rows(); ++r) t += p(r, r);
      gram(i, j) = t;
    }
  return kernel_basis(gram);
}

std::vector<Scalar> polynomial_roots(const std::vector<Scalar>& poly) {
  std::vector<Scalar> roots;
  if (poly.empty()) return roots;
  const Field f = poly[0].field();
  auto eval = [&](const Scalar& x) {
    Scalar acc(f);
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  std::size_t low = 0;
  while (low < poly.size() && poly[low].is_zero()) ++low;
  if (low == poly.size()) return roots;
  if (low > 0) roots.push_back(Scalar(f));
  if (!f.is_rational()) {
    const std::uint64_t p = f.characteristic();
    if (p > 200000) return roots;
    for (std::uint64_t x = 1; x < p; ++x) {
      Scalar s(f, static_cast<long>(x));
      if (eval(s).is_zero()) roots.push_back(s);
    }
    return roots;
  }
  mpz_class l = 1;
  for (const auto& c : poly) l = lcm(l, c.value().get_den());
  std::size_t high = poly.size() - 1;
  while (poly[high].is_zero()) --high;
  if (high == low) return roots;
  mpz_class a0 = abs(mpz_class(poly[low].value() * l));
  mpz_class an = abs(mpz_class(poly[high].value() * l));
  auto divisors = [](mpz_class v) {
    std::vector<mpz_class> ds;
    if (v > mpz_class("1000000000000")) return ds;
    for (mpz_class d = 1; d * d <= v; ++d)
      if (v % d == 0) {
        ds.push_back(d);
        if (d * d != v) ds.push_back(v / d);
      }
    return ds;
  };
  std::set<mpq_class> seen;
  for (const auto& p : divisors(a0))
    for (const auto& q : divisors(an))
      for (int s : {1, -1}) {
        mpq_class cand(p * s, q);
        cand.canonicalize();
        if (!seen.insert(cand).second) continue;
        Scalar x(f, cand);
        if (eval(x).is_zero()) roots.push_back(x);
      }
  std::sort(roots.begin(), roots.end(),
            [](const Scalar& a, const Scalar& b) { return a.value() < b.value(); });
  return roots;
}

IndecVerdict is_indecomposable(const Module& m, const SearchOptions& opts) {
  IndecVerdict v;
  const Field f = m.field();
  const std::size_t d = m.dim();
  if (d == 0) {
    v.kind = IndecVerdict::Decomposes;
    return v;
  }
  if (!f.is_rational() && f.characteristic() <= d)
    throw std::invalid_argument("indecomposability test needs characteristic 0 or p > dim M");
  auto ends = hom_basis(m, m);
  std::vector<Matrix> mats;
  for (const auto& e : ends) mats.push_back(e.matrix);
  Matrix rad = endomorphism_radical(mats, f);
  v.end_dim = mats.size();
  v.end_radical_dim = rad.cols();
  if (v.end_dim - v.end_radical_dim == 1) {
    v.kind = IndecVerdict::Indecomposable;
    return v;
  }
  auto try_split = [&](const Matrix& g) {
    Matrix gn = power(g, d);
    std::size_t r = rank(gn);
    if (r == 0 || r == d) return false;
    v.kind = IndecVerdict::Decomposes;
    v.first = restrict_to(m, column_space_basis(gn));
    v.second = restrict_to(m, kernel_basis(gn));
    return true;
  };
  auto try_element = [&](const Matrix& x) {
    if (try_split(x)) return true;
    for (const auto& lambda : polynomial_roots(charpoly(x))) {
      if (lambda.is_zero()) continue;
      Matrix g = x - Matrix::identity(d, f).scaled(lambda);
      if (try_split(g)) return true;
    }
    return false;
  };
  for (const auto& x : mats)
    if (try_element(x)) return v;
  SmallRandom rng(opts.seed);
  for (std::size_t t = 0; t < opts.attempts; ++t) {
    Matrix x(d, d, f);
    for (const auto& b : mats) x += b.scaled(Scalar(f, rng.next(-9, 9)));
    if (try_element(x)) return v;
  }
  v.kind = IndecVerdict::Unknown;
  return v;
}

}  // namespace agemo
