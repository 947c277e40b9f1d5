#include "agemo/algebra.hpp"

#include <set>
#include <sstream>

namespace agemo {

namespace {

bool shapes_ok(std::size_t n, const std::vector<std::vector<Vec>>& table, const Vec& unit,
               const std::vector<Vec>& idem) {
  if (table.size() != n || unit.size() != n) return false;
  for (const auto& row : table) {
    if (row.size() != n) return false;
    for (const auto& v : row)
      if (v.size() != n) return false;
  }
  for (const auto& e : idem)
    if (e.size() != n) return false;
  return true;
}

std::string vec_string(const Algebra& a, std::span<const Scalar> v) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    os << (first ? "" : " + ") << v[i].to_string() << "*" << a.labels()[i];
    first = false;
  }
  return first ? "0" : os.str();
}

Matrix columns_of(const std::vector<Vec>& vs, std::size_t n, Field f) {
  return Matrix::from_columns(n, vs, f);
}

// Nilpotency index check: returns true if span(r)^k = 0 for some k <= n+1.
bool nilpotent(const Algebra& a, const Matrix& r) {
  Matrix power = column_space_basis(r);
  for (std::size_t k = 0; k <= a.dim() + 1; ++k) {
    if (power.cols() == 0) return true;
    power = product_span(a, power, r);
  }
  return power.cols() == 0;
}

bool is_two_sided_ideal(const Algebra& a, const Matrix& r) {
  if (r.cols() == 0) return true;
  Matrix full = Matrix::identity(a.dim(), a.field());
  std::size_t rk = rank(r);
  return rank(hstack(r, product_span(a, full, r))) == rk &&
         rank(hstack(r, product_span(a, r, full))) == rk;
}

Matrix trace_form_radical(const Algebra& a) {
  const std::size_t n = a.dim();
  const Field f = a.field();
  if (!f.is_rational() && f.characteristic() <= n)
    throw InvalidAlgebra("radical must be supplied: characteristic " +
                         std::to_string(f.characteristic()) + " does not exceed dimension " +
                         std::to_string(n));
  Vec traces;
  for (std::size_t k = 0; k < n; ++k) {
    Scalar t(f);
    for (std::size_t i = 0; i < n; ++i) t += a.left_mult(k)(i, i);
    traces.push_back(t);
  }
  Matrix gram(n, n, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar s(f);
      const Vec& p = a.product(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!p[k].is_zero()) s += p[k] * traces[k];
      gram(i, j) = s;
    }
  Matrix ker = kernel_basis(gram);
  if (ker.cols() == 0) return Matrix(n, 0, f);
  Matrix rad = column_space_basis(ker);
  if (!nilpotent(a, rad)) throw InvalidAlgebra("trace-form kernel is not nilpotent");
  return rad;
}

}  // namespace

Algebra::Algebra(std::string name, Field f, std::vector<std::string> labels,
                 std::vector<std::vector<Vec>> table, Vec unit, std::vector<Vec> idempotents,
                 std::optional<std::vector<Vec>> radical)
    : name_(std::move(name)),
      field_(f),
      labels_(std::move(labels)),
      table_(std::move(table)),
      unit_(std::move(unit)),
      idempotents_(std::move(idempotents)),
      supplied_radical_(std::move(radical)) {
  const std::size_t n = labels_.size();
  if (!shapes_ok(n, table_, unit_, idempotents_)) return;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vec> lcols, rcols;
    for (std::size_t j = 0; j < n; ++j) {
      lcols.push_back(table_[i][j]);
      rcols.push_back(table_[j][i]);
    }
    left_.push_back(Matrix::from_columns(n, lcols, f));
    right_.push_back(Matrix::from_columns(n, rcols, f));
  }
}

Vec Algebra::multiply(std::span<const Scalar> a, std::span<const Scalar> b) const {
  Vec out = zero_vec(dim(), field_);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j].is_zero()) continue;
      Scalar c = a[i] * b[j];
      const Vec& p = table_[i][j];
      for (std::size_t k = 0; k < dim(); ++k)
        if (!p[k].is_zero()) out[k] += c * p[k];
    }
  }
  return out;
}

Matrix Algebra::left_mult_by(std::span<const Scalar> a) const {
  Matrix m(dim(), dim(), field_);
  for (std::size_t i = 0; i < dim(); ++i)
    if (!a[i].is_zero()) m += left_[i].scaled(a[i]);
  return m;
}

Matrix Algebra::right_mult_by(std::span<const Scalar> a) const {
  Matrix m(dim(), dim(), field_);
  for (std::size_t i = 0; i < dim(); ++i)
    if (!a[i].is_zero()) m += right_[i].scaled(a[i]);
  return m;
}

const Matrix& Algebra::radical() const {
  if (!radical_) throw std::logic_error("algebra not finalized");
  return *radical_;
}

std::optional<std::size_t> Algebra::unit_index() const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (unit_ == basis_vector(i)) return i;
  return std::nullopt;
}

Matrix product_span(const Algebra& a, const Matrix& u, const Matrix& v) {
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < u.cols(); ++i) {
    Vec ui = u.col(i);
    for (std::size_t j = 0; j < v.cols(); ++j) cols.push_back(a.multiply(ui, v.col(j)));
  }
  if (cols.empty()) return Matrix(a.dim(), 0, a.field());
  return column_space_basis(Matrix::from_columns(a.dim(), cols, a.field()));
}

std::vector<std::string> validate_algebra(const Algebra& a) {
  std::vector<std::string> report;
  const std::size_t n = a.dim();
  const Field f = a.field();
  std::set<std::string> seen;
  for (const auto& l : a.labels())
    if (!seen.insert(l).second) report.push_back("duplicate basis label '" + l + "'");
  if (n == 0) report.push_back("algebra has dimension 0");
  if (!a.well_formed() || n == 0) {
    report.push_back("multiplication table, unit or idempotents have the wrong shape");
    return report;
  }
  bool mixed = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& s : a.product(i, j)) mixed = mixed || !(s.field() == f);
  for (const auto& s : a.unit()) mixed = mixed || !(s.field() == f);
  for (const auto& e : a.idempotents())
    for (const auto& s : e) mixed = mixed || !(s.field() == f);
  if (mixed) {
    report.push_back("entries from a field other than " + f.to_string());
    return report;
  }
  // Associativity on all basis triples.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec lhs = a.right_mult(k).apply(a.product(i, j));
        Vec rhs = a.left_mult(i).apply(a.product(j, k));
        if (lhs != rhs)
          report.push_back("associativity violation at triple (" + a.labels()[i] + "," +
                           a.labels()[j] + "," + a.labels()[k] + "): " + vec_string(a, lhs) +
                           " != " + vec_string(a, rhs));
      }
  for (std::size_t i = 0; i < n; ++i) {
    Vec b = a.basis_vector(i);
    if (a.multiply(a.unit(), b) != b) report.push_back("unit fails on the left of " + a.labels()[i]);
    if (a.multiply(b, a.unit()) != b) report.push_back("unit fails on the right of " + a.labels()[i]);
  }
  const auto& idem = a.idempotents();
  if (idem.empty()) report.push_back("no idempotents supplied");
  Vec sum = zero_vec(n, f);
  for (std::size_t i = 0; i < idem.size(); ++i) {
    for (std::size_t k = 0; k < n; ++k) sum[k] += idem[i][k];
    for (std::size_t j = 0; j < idem.size(); ++j) {
      Vec p = a.multiply(idem[i], idem[j]);
      if (i == j && p != idem[i])
        report.push_back("idempotent " + std::to_string(i) + " is not idempotent");
      if (i != j && !is_zero(p))
        report.push_back("idempotents " + std::to_string(i) + " and " + std::to_string(j) +
                         " are not orthogonal");
    }
  }
  if (!idem.empty() && sum != a.unit()) report.push_back("idempotents do not sum to the unit");
  if (!report.empty()) return report;

  Matrix rad;
  if (a.supplied_radical()) {
    rad = column_space_basis(columns_of(*a.supplied_radical(), n, f));
    if (!is_two_sided_ideal(a, rad)) report.push_back("supplied radical is not a two-sided ideal");
    if (!nilpotent(a, rad)) report.push_back("supplied radical is not nilpotent");
  } else {
    try {
      rad = trace_form_radical(a);
    } catch (const InvalidAlgebra& e) {
      report.push_back(e.what());
      return report;
    }
  }
  if (n - rad.cols() != idem.size())
    report.push_back("not split basic: dim A/rad A = " + std::to_string(n - rad.cols()) + " but " +
                     std::to_string(idem.size()) + " idempotents");
  return report;
}

Matrix radical_basis(const Algebra& a) {
  if (a.has_radical()) return a.radical();
  if (a.supplied_radical())
    return column_space_basis(columns_of(*a.supplied_radical(), a.dim(), a.field()));
  return trace_form_radical(a);
}

AlgebraPtr finalize(Algebra a) {
  auto report = validate_algebra(a);
  if (!report.empty()) {
    std::string msg = "invalid algebra '" + a.name() + "':";
    for (const auto& r : report) msg += "\n  " + r;
    throw InvalidAlgebra(msg);
  }
  a.radical_ = radical_basis(a);
  return std::make_shared<const Algebra>(std::move(a));
}

Algebra opposite(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<std::vector<Vec>> table(n, std::vector<Vec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j] = a.product(j, i);
  std::optional<std::vector<Vec>> rad = a.supplied_radical();
  if (!rad && a.has_radical()) rad = a.radical().columns();
  std::string name = a.name();
  if (name.size() > 3 && name.substr(name.size() - 3) == "^op")
    name.resize(name.size() - 3);
  else
    name += "^op";
  return Algebra(name, a.field(), a.labels(), std::move(table), a.unit(), a.idempotents(),
                 std::move(rad));
}

AlgebraPtr opposite(const AlgebraPtr& a) { return finalize(opposite(*a)); }

bool is_local(const Algebra& a) { return a.vertex_count() == 1; }

}  // namespace agemo
