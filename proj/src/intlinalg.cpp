#include "latproj/intlinalg.hpp"

#include <stdexcept>
#include <utility>

namespace latproj {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer lcm_int(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Column operations on E (rows x n) mirrored on U (n x n).
struct ColumnEchelon {
  IntMatrix e, u;
  std::vector<std::size_t> pivot_row;  // per pivot column

  void add_column(std::size_t dst, std::size_t src, const Integer& q) {  // col dst -= q col src
    for (auto& row : e) row[dst] -= q * row[src];
    for (auto& row : u) row[dst] -= q * row[src];
  }
  void swap_columns(std::size_t a, std::size_t b) {
    for (auto& row : e) std::swap(row[a], row[b]);
    for (auto& row : u) std::swap(row[a], row[b]);
  }
  void negate_column(std::size_t c) {
    for (auto& row : e) row[c] = -row[c];
    for (auto& row : u) row[c] = -row[c];
  }

  void run(std::size_t n) {
    std::size_t r = 0;
    for (std::size_t i = 0; i < e.size() && r < n; ++i) {
      while (true) {
        std::size_t best = n;
        for (std::size_t j = r; j < n; ++j)
          if (e[i][j] != 0 && (best == n || abs(e[i][j]) < abs(e[i][best]))) best = j;
        if (best == n) break;
        if (best != r) swap_columns(best, r);
        bool done = true;
        for (std::size_t j = r + 1; j < n; ++j) {
          if (e[i][j] == 0) continue;
          Integer q = e[i][j] / e[i][r];  // truncating division
          add_column(j, r, q);
          if (e[i][j] != 0) done = false;
        }
        if (done) break;
      }
      if (e[i][r] == 0) continue;
      if (e[i][r] < 0) negate_column(r);
      pivot_row.push_back(i);
      ++r;
    }
  }
};

IntMatrix identity_int(std::size_t n) {
  IntMatrix m(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix inverse_unimodular(const IntMatrix& v) {
  const std::size_t n = v.size();
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = v[i][j];
    aug[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && aug[p][c] == 0) ++p;
    if (p == n) throw std::logic_error("unimodular completion: singular matrix");
    std::swap(aug[p], aug[c]);
    Rational inv = 1 / aug[c][c];
    for (auto& x : aug[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || aug[i][c] == 0) continue;
      Rational f = aug[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[c][j];
    }
  }
  IntMatrix out(n, IntVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = aug[i][n + j];
      if (x.get_den() != 1) throw std::logic_error("unimodular completion: non-integer inverse");
      out[i][j] = x.get_num();
    }
  return out;
}

}  // namespace

Integer gcd_of(const IntVec& x) {
  Integer g = 0;
  for (const auto& v : x) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

IntMatrix hermite_rows(IntMatrix rows) {
  if (rows.empty()) return rows;
  const std::size_t n = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c]))) best = i;
      if (best == rows.size()) break;
      std::swap(rows[best], rows[r]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Integer q = rows[i][c] / rows[r][c];
        for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (auto& x : rows[r]) x = -x;
    for (std::size_t t = 0; t < r; ++t) {
      Integer q = floor_div(rows[t][c], rows[r][c]);
      if (q != 0)
        for (std::size_t j = 0; j < n; ++j) rows[t][j] -= q * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::optional<IntegerSolution> integer_solve(const RatMatrix& a, const RatVec& b, std::size_t cols) {
  if (a.size() != b.size()) throw std::invalid_argument("integer_solve: row count mismatch");
  const std::size_t m = a.size(), n = cols;
  ColumnEchelon ce;
  ce.e.assign(m, IntVec(n));
  IntVec rhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("integer_solve: column count mismatch");
    Integer l = b[i].get_den();
    for (const auto& x : a[i]) l = lcm_int(l, x.get_den());
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = a[i][j] * l;
      ce.e[i][j] = s.get_num();
    }
    Rational s = b[i] * l;
    rhs[i] = s.get_num();
  }
  ce.u = identity_int(n);
  ce.run(n);
  const std::size_t rank = ce.pivot_row.size();

  IntVec y(n, 0);
  std::size_t next = 0;
  for (std::size_t i = 0; i < m; ++i) {
    Integer acc = 0;
    for (std::size_t c = 0; c < next; ++c) acc += ce.e[i][c] * y[c];
    if (next < rank && ce.pivot_row[next] == i) {
      Integer rem = rhs[i] - acc;
      if (!mpz_divisible_p(rem.get_mpz_t(), ce.e[i][next].get_mpz_t())) return std::nullopt;
      y[next] = rem / ce.e[i][next];
      ++next;
    } else if (acc != rhs[i]) {
      return std::nullopt;
    }
  }

  IntegerSolution sol;
  sol.particular.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < rank; ++c) sol.particular[i] += ce.u[i][c] * y[c];
  IntMatrix kern;
  for (std::size_t c = rank; c < n; ++c) {
    IntVec col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = ce.u[i][c];
    kern.push_back(std::move(col));
  }
  sol.kernel = hermite_rows(std::move(kern));
  for (const auto& row : sol.kernel) {
    std::size_t p = 0;
    while (row[p] == 0) ++p;
    Integer q = floor_div(sol.particular[p], row[p]);
    if (q != 0)
      for (std::size_t j = 0; j < n; ++j) sol.particular[j] -= q * row[j];
  }
  return sol;
}

IntMatrix unimodular_completion(const IntVec& x) {
  const std::size_t n = x.size();
  if (n == 0 || gcd_of(x) != 1) throw std::invalid_argument("unimodular completion needs a primitive vector");
  for (std::size_t i = n; i-- > 0;) {
    if (abs(x[i]) != 1) continue;
    IntMatrix u(n, IntVec(n, 0));
    std::size_t col = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      u[j][col++] = 1;
    }
    for (std::size_t r = 0; r < n; ++r) u[r][n - 1] = x[r];
    return u;
  }
  ColumnEchelon ce;
  ce.e = {x};
  ce.u = identity_int(n);
  ce.run(n);
  // x^T V = e_1^T, hence x = V^{-T} e_1.
  IntMatrix vinv = inverse_unimodular(ce.u);
  IntMatrix u(n, IntVec(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t dst = c == 0 ? n - 1 : c - 1;
      u[r][dst] = vinv[c][r];
    }
  return u;
}

}  // namespace latproj
