#include "agemo/catalog.hpp"

#include <stdexcept>

namespace agemo {

const std::string& lambda_source() {
  static const std::string s = R"(# Local algebra generated by three loops x, y, z; dimension 6.
# a*b means: apply b first, then a.
quiver Lambda
field Q
param q = 2
vertex 0
arrow x: 0 -> 0
arrow y: 0 -> 0
arrow z: 0 -> 0
relation x*x
relation y*y
relation z*z
relation y*z
relation x*y + q y*x
relation x*z - z*x
relation z*y - z*x
)";
  return s;
}

const std::string& lambda_prime_source() {
  static const std::string s = R"(# Quantum exterior algebra in two variables; dimension 4.
quiver LambdaPrime
field Q
param q = 2
vertex 0
arrow x: 0 -> 0
arrow y: 0 -> 0
relation x*x
relation y*y
relation x*y + q y*x
)";
  return s;
}

const std::string& lambda_dprime_source() {
  static const std::string s = R"(# Local algebra with radical square zero; dimension 3.
quiver LambdaDoublePrime
field Q
vertex 0
arrow x: 0 -> 0
arrow y: 0 -> 0
relation x*x
relation y*y
relation x*y
relation y*x
)";
  return s;
}

const std::string& lambda_tilde_source() {
  static const std::string s = R"(# Two-vertex cover: arrows x1, y1, z1 run 1 -> 2 and x2, y2, z2 run 2 -> 1,
# with the relations of Lambda imposed on paths 1 -> 2 -> 1 and 2 -> 1 -> 2.
quiver LambdaTilde
field Q
param q = 2
vertex 1 2
arrow x1: 1 -> 2
arrow y1: 1 -> 2
arrow z1: 1 -> 2
arrow x2: 2 -> 1
arrow y2: 2 -> 1
arrow z2: 2 -> 1
relation x2*x1
relation y2*y1
relation z2*z1
relation y2*z1
relation x2*y1 + q y2*x1
relation x2*z1 - z2*x1
relation z2*y1 - z2*x1
relation x1*x2
relation y1*y2
relation z1*z2
relation y1*z2
relation x1*y2 + q y1*x2
relation x1*z2 - z1*x2
relation z1*y2 - z1*x2
)";
  return s;
}

namespace {

CompiledQuiver compile_with_q(const std::string& src, const std::optional<mpq_class>& q, Field f) {
  if (q && Scalar(f, *q).is_zero()) throw std::invalid_argument("q must be nonzero");
  BuildOptions opts;
  opts.field = f;
  if (q) opts.overrides["q"] = *q;
  return build_path_algebra(parse_quiver(src), opts);
}

Matrix elementary(std::size_t d, std::size_t row, std::size_t col, const Scalar& s) {
  Matrix m(d, d, s.field());
  m(row, col) = s;
  return m;
}

}  // namespace

CompiledQuiver compile_lambda(const mpq_class& q, Field f) { return compile_with_q(lambda_source(), q, f); }
CompiledQuiver compile_lambda_prime(const mpq_class& q, Field f) {
  return compile_with_q(lambda_prime_source(), q, f);
}
CompiledQuiver compile_lambda_dprime(Field f) { return compile_with_q(lambda_dprime_source(), std::nullopt, f); }
CompiledQuiver compile_lambda_tilde(const mpq_class& q, Field f) {
  return compile_with_q(lambda_tilde_source(), q, f);
}

AlgebraPtr make_lambda(const mpq_class& q, Field f) { return compile_lambda(q, f).algebra; }
AlgebraPtr make_lambda_prime(const mpq_class& q, Field f) { return compile_lambda_prime(q, f).algebra; }
AlgebraPtr make_lambda_dprime(Field f) { return compile_lambda_dprime(f).algebra; }
AlgebraPtr make_lambda_tilde(const mpq_class& q, Field f) { return compile_lambda_tilde(q, f).algebra; }

Module representation_module(const CompiledQuiver& c, const std::vector<std::size_t>& vertex_of,
                             const std::vector<Matrix>& arrows, std::string name) {
  const auto& a = c.algebra;
  const auto& p = c.presentation;
  const std::size_t d = vertex_of.size();
  const Field f = a->field();
  if (arrows.size() != p.arrows.size()) throw std::invalid_argument("one matrix per arrow expected");
  for (const auto& m : arrows)
    if (m.rows() != d || m.cols() != d) throw std::invalid_argument("arrow matrix has the wrong size");
  std::vector<Matrix> proj(p.vertices.size(), Matrix(d, d, f));
  for (std::size_t k = 0; k < d; ++k) {
    if (vertex_of[k] >= p.vertices.size()) throw std::invalid_argument("vertex out of range");
    proj[vertex_of[k]](k, k) = Scalar(f, 1);
  }
  std::vector<Matrix> acts;
  for (const auto& path : c.basis.paths) {
    Matrix m = proj[path.source];
    for (auto arr : path.arrows) m = arrows[arr] * m;
    acts.push_back(std::move(m));
  }
  Module mod(a, Side::Left, std::move(acts), std::move(name));
  auto problems = validate_module(mod);
  if (!problems.empty()) throw std::invalid_argument("representation violates relations: " + problems.front());
  return mod;
}

std::string scalar_label(const Scalar& s) { return s.to_string(); }

Module make_M(const CompiledQuiver& lambda, const Scalar& alpha) {
  const Field f = lambda.algebra->field();
  const Scalar one(f, 1);
  std::vector<Matrix> arr{elementary(3, 1, 0, alpha), elementary(3, 1, 0, one), elementary(3, 2, 0, one)};
  return representation_module(lambda, {0, 0, 0}, arr, "M(" + scalar_label(alpha) + ")");
}

Module make_M_prime(const CompiledQuiver& lambda_prime, const std::optional<Scalar>& alpha) {
  const Field f = lambda_prime.algebra->field();
  const Scalar one(f, 1);
  std::vector<Matrix> arr;
  std::string name;
  if (alpha) {
    arr = {elementary(2, 1, 0, *alpha), elementary(2, 1, 0, one)};
    name = "M'(" + scalar_label(*alpha) + ")";
  } else {
    arr = {elementary(2, 1, 0, one), Matrix(2, 2, f)};
    name = "M'(inf)";
  }
  return representation_module(lambda_prime, {0, 0}, arr, name);
}

Module make_M_i(const CompiledQuiver& lambda_tilde, std::size_t vertex, const Scalar& alpha) {
  if (vertex != 1 && vertex != 2) throw std::invalid_argument("vertex must be 1 or 2");
  const Field f = lambda_tilde.algebra->field();
  const Scalar one(f, 1);
  const std::size_t top = vertex - 1, other = 2 - vertex;
  std::vector<Matrix> arr(6, Matrix(3, 3, f));
  const std::size_t base = vertex == 1 ? 0 : 3;
  arr[base] = elementary(3, 1, 0, alpha);
  arr[base + 1] = elementary(3, 1, 0, one);
  arr[base + 2] = elementary(3, 2, 0, one);
  return representation_module(lambda_tilde, {top, other, other}, arr,
                               "M" + std::to_string(vertex) + "(" + scalar_label(alpha) + ")");
}

Vec m_element(const CompiledQuiver& lambda, const Scalar& alpha) {
  Vec x = path_normal_form(lambda, "x"), y = path_normal_form(lambda, "y");
  for (std::size_t i = 0; i < x.size(); ++i) x[i].sub_mul(alpha, y[i]);
  return x;
}

Submodule make_left_ideal(const CompiledQuiver& c, const Vec& element, std::string name) {
  Submodule s = submodule_generated(regular_module(c.algebra, Side::Left), {element});
  s.module = s.module.renamed(name);
  s.map.domain = s.module;
  return s;
}

Submodule make_left_ideal_m(const CompiledQuiver& lambda, const Scalar& alpha) {
  return make_left_ideal(lambda, m_element(lambda, alpha), "Lm(" + scalar_label(alpha) + ")");
}

Submodule make_right_ideal_m(const CompiledQuiver& lambda, const Scalar& alpha) {
  Submodule s = submodule_generated(regular_module(lambda.algebra, Side::Right), {m_element(lambda, alpha)});
  s.module = s.module.renamed("m(" + scalar_label(alpha) + ")L");
  s.map.domain = s.module;
  return s;
}

Submodule make_U(const CompiledQuiver& lambda, const Scalar& alpha) {
  Submodule s = submodule_generated(regular_module(lambda.algebra, Side::Left),
                                    {m_element(lambda, alpha), path_normal_form(lambda, "y*x"),
                                     path_normal_form(lambda, "z*x")});
  s.module = s.module.renamed("U(" + scalar_label(alpha) + ")");
  s.map.domain = s.module;
  return s;
}

std::string power_label(const Scalar& alpha, const mpq_class& q) {
  const Field f = alpha.field();
  if (alpha.is_zero()) return "0";
  const Scalar qs(f, q);
  if (qs.is_zero()) return alpha.to_string();
  Scalar up(f, 1), down(f, 1);
  const Scalar qinv = qs.inverse();
  for (long k = 0; k <= 64; ++k) {
    if (up == alpha) return k == 0 ? "1" : k == 1 ? "q" : "q^" + std::to_string(k);
    if (k > 0 && down == alpha) return "q^-" + std::to_string(k);
    up = up * qs;
    down = down * qinv;
  }
  return alpha.to_string();
}

std::optional<std::string> lambda_label(const CompiledQuiver& lambda, const mpq_class& q, const Module& m) {
  if (m.algebra() != lambda.algebra || m.dim() != 3) return std::nullopt;
  const Field f = m.field();
  Matrix rad = radical_of_module(m).map.matrix;
  if (rad.cols() != 2) return std::nullopt;
  IncrementalBasis ib(3, f);
  for (std::size_t c = 0; c < 2; ++c) ib.add(rad.col(c));
  Vec v;
  for (std::size_t c = 0; c < 3 && v.empty(); ++c)
    if (ib.add(unit_vec(3, c, f))) v = unit_vec(3, c, f);
  Vec xv = m.action_of(path_normal_form(lambda, "x")).apply(v);
  Vec yv = m.action_of(path_normal_form(lambda, "y")).apply(v);
  std::size_t piv = 0;
  while (piv < 3 && yv[piv].is_zero()) ++piv;
  if (piv == 3) return std::nullopt;
  Scalar ratio = xv[piv] * yv[piv].inverse();
  for (std::size_t i = 0; i < 3; ++i)
    if (!(xv[i] - ratio * yv[i]).is_zero()) return std::nullopt;
  if (m.side() == Side::Left) {
    if (is_isomorphic(m, make_M(lambda, ratio)).kind != IsoVerdict::Isomorphic) return std::nullopt;
    return "M(" + power_label(ratio, q) + ")";
  }
  Scalar beta = ratio * Scalar(f, q);
  if (is_isomorphic(m, make_right_ideal_m(lambda, beta).module).kind != IsoVerdict::Isomorphic) return std::nullopt;
  return "m(" + power_label(beta, q) + ")L";
}

}  // namespace agemo
