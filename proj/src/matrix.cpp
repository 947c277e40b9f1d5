#include "agemo/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace agemo {

Vec zero_vec(std::size_t n, Field f) { return Vec(n, Scalar(f)); }

Vec unit_vec(std::size_t n, std::size_t i, Field f) {
  Vec v = zero_vec(n, f);
  v[i] = Scalar(f, 1);
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Field f)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, Scalar(f)) {}

Matrix Matrix::identity(std::size_t n, Field f) {
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(f, 1);
  return m;
}

Matrix Matrix::from_ints(std::initializer_list<std::initializer_list<long>> rows, Field f) {
  std::size_t nr = rows.size();
  std::size_t nc = nr ? rows.begin()->size() : 0;
  Matrix m(nr, nc, f);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != nc) throw std::invalid_argument("ragged matrix literal");
    std::size_t c = 0;
    for (long v : row) m(r, c++) = Scalar(f, v);
    ++r;
  }
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vec>& cols, Field f) {
  Matrix m(rows, cols.size(), f);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vec>& rows, Field f) {
  Matrix m(rows.size(), cols, f);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::column(const Vec& v, Field f) { return from_columns(v.size(), {v}, f); }

Vec Matrix::col(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Vec Matrix::row(std::size_t r) const {
  auto s = row_span(r);
  return Vec(s.begin(), s.end());
}

std::vector<Vec> Matrix::columns() const {
  std::vector<Vec> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(col(c));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const { return agemo::is_zero(data_); }

Matrix Matrix::select_columns(std::span<const std::size_t> idx) const {
  Matrix m(rows_, idx.size(), field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < idx.size(); ++k) m(r, k) = (*this)(r, idx[k]);
  return m;
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const {
  Matrix m(idx.size(), cols_, field_);
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t c = 0; c < cols_; ++c) m(k, c) = (*this)(idx[k], c);
  return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block out of range");
  Matrix m(nr, nc, field_);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
  return m;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  if (r0 + m.rows() > rows_ || c0 + m.cols() > cols_) throw std::out_of_range("block out of range");
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) (*this)(r0 + r, c0 + c) = m(r, c);
}

Vec Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
  Vec out = zero_vec(rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& a = (*this)(r, c);
      if (a.is_zero() || v[c].is_zero()) continue;
      out[r] += a * v[c];
    }
  return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix m(*this);
  for (auto& x : m.data_) x *= s;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix add: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sub: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix multiply: shape mismatch");
  if (!(a.field_ == b.field_)) throw FieldMismatch("matrix multiply: field mismatch");
  Matrix m(a.rows_, b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (y.is_zero()) continue;
        m(i, j).sub_mul(-x, y);
      }
    }
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c).to_string();
  }
  os << ']';
  return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  Matrix m(a.rows(), a.cols() + b.cols(), a.field());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
  Matrix m(a.rows() + b.rows(), a.cols(), a.field());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

Matrix block_diagonal(std::span<const Matrix> blocks, Field f) {
  std::size_t nr = 0, nc = 0;
  for (const auto& b : blocks) {
    nr += b.rows();
    nc += b.cols();
  }
  Matrix m(nr, nc, f);
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    m.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return m;
}

namespace {

void check_uniform(const Matrix& m) {
  for (const auto& s : m.data())
    if (!(s.field() == m.field()))
      throw FieldMismatch("matrix entries from different fields: " + s.field().to_string() + " vs " +
                          m.field().to_string());
}

// In-place Gauss-Jordan; returns pivot columns. Only the first `ncols` columns are
// eligible as pivots.
std::vector<std::size_t> reduce_in_place(Matrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  const std::size_t nr = m.rows(), nc = m.cols();
  std::size_t row = 0;
  for (std::size_t c = 0; c < ncols && row < nr; ++c) {
    std::size_t p = row;
    while (p < nr && m(p, c).is_zero()) ++p;
    if (p == nr) continue;
    if (p != row)
      for (std::size_t k = c; k < nc; ++k) std::swap(m(p, k), m(row, k));
    Scalar inv = m(row, c).inverse();
    if (!inv.is_one())
      for (std::size_t k = c; k < nc; ++k)
        if (!m(row, k).is_zero()) m(row, k) *= inv;
    for (std::size_t r = 0; r < nr; ++r) {
      if (r == row || m(r, c).is_zero()) continue;
      Scalar factor = m(r, c);
      for (std::size_t k = c; k < nc; ++k) {
        if (m(row, k).is_zero()) continue;
        m(r, k).sub_mul(factor, m(row, k));
      }
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

Rref rref(const Matrix& m) {
  check_uniform(m);
  Rref out{m, {}};
  out.pivots = reduce_in_place(out.reduced, m.cols());
  return out;
}

std::size_t rank(const Matrix& m) {
  if (m.rows() > m.cols()) return rref(m.transpose()).pivots.size();
  return rref(m).pivots.size();
}

Matrix kernel_basis(const Matrix& m) {
  Rref r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v = zero_vec(n, m.field());
    v[f] = Scalar(m.field(), 1);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(n, basis, m.field());
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs) {
  if (m.rows() != rhs.rows()) throw std::invalid_argument("solve: row mismatch");
  Matrix aug = hstack(m, rhs);
  check_uniform(aug);
  auto pivots = reduce_in_place(aug, m.cols());
  const std::size_t rk = pivots.size();
  for (std::size_t r = rk; r < aug.rows(); ++r)
    for (std::size_t c = m.cols(); c < aug.cols(); ++c)
      if (!aug(r, c).is_zero()) return std::nullopt;
  Matrix x(m.cols(), rhs.cols(), m.field());
  for (std::size_t i = 0; i < rk; ++i)
    for (std::size_t c = 0; c < rhs.cols(); ++c) x(pivots[i], c) = aug(i, m.cols() + c);
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, Matrix::identity(m.rows(), m.field()));
}

Scalar determinant(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  check_uniform(m);
  Matrix a(m);
  const std::size_t n = a.rows();
  Scalar det(m.field(), 1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Scalar(m.field());
    if (p != c) {
      for (std::size_t k = c; k < n; ++k) std::swap(a(p, k), a(c, k));
      det = -det;
    }
    det *= a(c, c);
    Scalar inv = a(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      Scalar factor = a(r, c) * inv;
      for (std::size_t k = c; k < n; ++k) {
        if (a(c, k).is_zero()) continue;
        a(r, k).sub_mul(factor, a(c, k));
      }
    }
  }
  return det;
}

Matrix column_space_basis(const Matrix& m) {
  Rref r = rref(m.transpose());
  Matrix basis(m.rows(), r.pivots.size(), m.field());
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    for (std::size_t k = 0; k < m.rows(); ++k) basis(k, i) = r.reduced(i, k);
  return basis;
}

std::vector<Scalar> charpoly(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("charpoly of non-square matrix");
  const Field f = m.field();
  const std::size_t n = m.rows();
  Matrix h(m);
  // Reduce to upper Hessenberg form by similarity transforms.
  for (std::size_t c = 0; c + 2 < n; ++c) {
    std::size_t r = c + 1;
    std::size_t i = r;
    while (i < n && h(i, c).is_zero()) ++i;
    if (i == n) continue;
    if (i != r) {
      for (std::size_t k = 0; k < n; ++k) std::swap(h(i, k), h(r, k));
      for (std::size_t k = 0; k < n; ++k) std::swap(h(k, i), h(k, r));
    }
    Scalar t_inv = h(r, c).inverse();
    for (i = r + 1; i < n; ++i) {
      if (h(i, c).is_zero()) continue;
      Scalar u = h(i, c) * t_inv;
      for (std::size_t k = 0; k < n; ++k)
        if (!h(r, k).is_zero()) h(i, k).sub_mul(u, h(r, k));
      for (std::size_t k = 0; k < n; ++k)
        if (!h(k, i).is_zero()) h(k, r).sub_mul(-u, h(k, i));
    }
  }
  // p_m = (t - h_mm) p_{m-1} - sum_i h_im (prod_{j=i+1..m} h_{j,j-1}) p_{i-1}
  std::vector<std::vector<Scalar>> p(n + 1);
  p[0] = {Scalar(f, 1)};
  for (std::size_t mm = 1; mm <= n; ++mm) {
    std::vector<Scalar> next(mm + 1, Scalar(f));
    for (std::size_t d = 0; d < p[mm - 1].size(); ++d) {
      next[d + 1] += p[mm - 1][d];
      next[d].sub_mul(h(mm - 1, mm - 1), p[mm - 1][d]);
    }
    Scalar prod(f, 1);
    for (std::size_t i = mm - 1; i >= 1; --i) {
      prod *= h(i, i - 1);
      if (prod.is_zero()) break;
      Scalar coeff = h(i - 1, mm - 1) * prod;
      if (!coeff.is_zero())
        for (std::size_t d = 0; d < p[i - 1].size(); ++d) next[d].sub_mul(coeff, p[i - 1][d]);
    }
    p[mm] = std::move(next);
  }
  return p[n];
}

CoordinateSystem::CoordinateSystem(const Matrix& basis)
    : dim_(basis.cols()), ambient_(basis.rows()), field_(basis.field()) {
  Matrix aug = hstack(basis, Matrix::identity(ambient_, field_));
  check_uniform(aug);
  pivots_ = reduce_in_place(aug, dim_);
  if (pivots_.size() != dim_) throw std::invalid_argument("CoordinateSystem: dependent basis");
  transform_ = aug.block(0, dim_, ambient_, ambient_);
}

std::optional<Vec> CoordinateSystem::coordinates(std::span<const Scalar> v) const {
  Vec tv = transform_.apply(v);
  for (std::size_t i = dim_; i < ambient_; ++i)
    if (!tv[i].is_zero()) return std::nullopt;
  tv.resize(dim_);
  return tv;
}

Matrix CoordinateSystem::coordinates_of(const Matrix& m) const {
  Matrix t = transform_ * m;
  for (std::size_t i = dim_; i < ambient_; ++i)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!t(i, c).is_zero()) throw std::invalid_argument("vector outside the coordinate span");
  return t.block(0, 0, dim_, m.cols());
}

Vec IncrementalBasis::reduce(std::span<const Scalar> v) const {
  if (v.size() != n_) throw std::invalid_argument("IncrementalBasis: dimension mismatch");
  Vec w(v.begin(), v.end());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Scalar c = w[pivots_[k]];
    if (c.is_zero()) continue;
    const Vec& r = rows_[k];
    for (std::size_t i = 0; i < n_; ++i)
      if (!r[i].is_zero()) w[i].sub_mul(c, r[i]);
  }
  return w;
}

bool IncrementalBasis::add(std::span<const Scalar> v) {
  Vec w = reduce(v);
  std::size_t p = 0;
  while (p < n_ && w[p].is_zero()) ++p;
  if (p == n_) return false;
  Scalar inv = w[p].inverse();
  for (auto& x : w)
    if (!x.is_zero()) x *= inv;
  rows_.push_back(std::move(w));
  pivots_.push_back(p);
  return true;
}

bool IncrementalBasis::contains(std::span<const Scalar> v) const { return is_zero(reduce(v)); }

}  // namespace agemo
