#include "latproj/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace latproj {

namespace {
void require_same_size(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
}
}  // namespace

QuadScalar dot(const Vec& a, const Vec& b) {
  require_same_size(a, b);
  QuadScalar s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec operator+(const Vec& a, const Vec& b) {
  require_same_size(a, b);
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  require_same_size(a, b);
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec operator-(const Vec& a) {
  Vec r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(-x);
  return r;
}

Vec operator*(const QuadScalar& s, const Vec& v) {
  Vec r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(s * x);
  return r;
}

Vec project(const Vec& v) {
  if (v.empty()) throw std::invalid_argument("cannot project an empty vector");
  return Vec(v.begin(), v.end() - 1);
}

Vec extend(const Vec& x, const QuadScalar& z) {
  Vec r(x);
  r.push_back(z);
  return r;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<double> to_doubles(const Vec& v) {
  std::vector<double> r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(x.to_double());
  return r;
}

int compare(const Vec& a, const Vec& b) {
  require_same_size(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = compare(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

bool StructuralLess::operator()(const Vec& a, const Vec& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (structural_less(a[i], b[i])) return true;
    if (structural_less(b[i], a[i])) return false;
  }
  return false;
}

Vec parse_vector(std::string_view text) {
  Vec out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    out.push_back(parse_scalar(text.substr(start, comma == std::string_view::npos
                                                      ? std::string_view::npos
                                                      : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + ")";
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vec Matrix::row(std::size_t i) const { return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }

Vec Matrix::column(std::size_t j) const {
  Vec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<Vec> Matrix::columns() const {
  std::vector<Vec> cs;
  cs.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) cs.push_back(column(j));
  return cs;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const QuadScalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const QuadScalar& b = o(k, j);
        if (!b.is_zero()) r(i, j) += a * b;
      }
    }
  return r;
}

Vec Matrix::operator*(const Vec& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
  Vec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const QuadScalar& a = (*this)(i, k);
      if (!a.is_zero() && !v[k].is_zero()) r[i] += a * v[k];
    }
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r(*this);
  for (auto& x : r.a_) x = -x;
  return r;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != QuadScalar(i == j ? 1 : 0)) return false;
  return true;
}

namespace {

// Row-reduces `m` in place (Gauss-Jordan); returns the pivot columns and the
// determinant factor accumulated from swaps and pivot scalings.
std::vector<std::size_t> row_reduce(Matrix& m, std::size_t ncols, QuadScalar* det) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  if (det) *det = 1;
  for (std::size_t c = 0; c < ncols && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) {
      if (det) *det = 0;
      continue;
    }
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
      if (det) *det = -*det;
    }
    QuadScalar pv = m(r, c);
    if (det) *det *= pv;
    QuadScalar inv = pv.inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      QuadScalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

QuadScalar Matrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  Matrix m(*this);
  QuadScalar det;
  auto piv = row_reduce(m, cols_, &det);
  return piv.size() == rows_ ? det : QuadScalar(0);
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = rows_;
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = row_reduce(aug, n, nullptr);
  if (piv.size() != n) throw DivisionByZero("singular matrix");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::size_t Matrix::rank() const {
  Matrix m(*this);
  return row_reduce(m, cols_, nullptr).size();
}

std::optional<Vec> Matrix::solve(const Vec& b) const {
  if (b.size() != rows_) throw std::invalid_argument("right-hand side dimension mismatch");
  Matrix aug(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = b[i];
  }
  auto piv = row_reduce(aug, cols_, nullptr);
  if (piv.size() != cols_) throw std::invalid_argument("solve requires full column rank");
  for (std::size_t i = cols_; i < rows_; ++i)
    if (!aug(i, cols_).is_zero()) return std::nullopt;
  Vec x(cols_);
  for (std::size_t i = 0; i < cols_; ++i) x[i] = aug(i, cols_);
  return x;
}

Matrix Matrix::leading_block() const {
  Matrix b(rows_ - 1, cols_ - 1);
  for (std::size_t i = 0; i + 1 < rows_; ++i)
    for (std::size_t j = 0; j + 1 < cols_; ++j) b(i, j) = (*this)(i, j);
  return b;
}

int compare(const Matrix& a, const Matrix& b) {
  const auto& x = a.data();
  const auto& y = b.data();
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    int c = compare(x[i], y[i]);
    if (c != 0) return c;
  }
  return x.size() < y.size() ? -1 : (x.size() > y.size() ? 1 : 0);
}

bool structural_less(const Matrix& a, const Matrix& b) {
  const auto& x = a.data();
  const auto& y = b.data();
  if (x.size() != y.size()) return x.size() < y.size();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (structural_less(x[i], y[i])) return true;
    if (structural_less(y[i], x[i])) return false;
  }
  return false;
}

}  // namespace latproj
