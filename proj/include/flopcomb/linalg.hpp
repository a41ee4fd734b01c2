#pragma once
#include <numeric>
#include <optional>
#include <vector>

#include "flopcomb/rational.hpp"

// small exact linear algebra: integer vectors and matrices with checked
// arithmetic, fraction-free determinants, adjugates, and rational
// elimination (solve / kernel / rref). dimensions here never exceed ~10.

namespace flopcomb {

using ivec = std::vector<i64>;
using qvec = std::vector<rat>;

inline i64 dot(const ivec& a, const ivec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  i64 s = 0;
  for (size_t k = 0; k < a.size(); ++k) s = ck_add(s, ck_mul(a[k], b[k]));
  return s;
}

inline rat dotq(const ivec& a, const qvec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dotq: size mismatch");
  rat s;
  for (size_t k = 0; k < a.size(); ++k) s += rat(a[k]) * b[k];
  return s;
}

inline ivec vadd(const ivec& a, const ivec& b) {
  ivec r(a.size());
  for (size_t k = 0; k < a.size(); ++k) r[k] = ck_add(a[k], b[k]);
  return r;
}

inline ivec vsub(const ivec& a, const ivec& b) {
  ivec r(a.size());
  for (size_t k = 0; k < a.size(); ++k) r[k] = ck_sub(a[k], b[k]);
  return r;
}

inline ivec vneg(const ivec& a) {
  ivec r(a.size());
  for (size_t k = 0; k < a.size(); ++k) r[k] = ck_neg(a[k]);
  return r;
}

inline ivec vscale(i64 c, const ivec& a) {
  ivec r(a.size());
  for (size_t k = 0; k < a.size(); ++k) r[k] = ck_mul(c, a[k]);
  return r;
}

inline bool is_zero(const ivec& a) {
  for (i64 x : a)
    if (x != 0) return false;
  return true;
}

inline i64 content(const ivec& a) {
  i64 g = 0;
  for (i64 x : a) g = std::gcd(g, x < 0 ? ck_neg(x) : x);
  return g;
}

// divide out the gcd of the entries; the zero vector is left alone.
inline ivec primitive(ivec a) {
  i64 g = content(a);
  if (g > 1)
    for (i64& x : a) x /= g;
  return a;
}

// canonical representative of the line through a: primitive with the first
// nonzero entry positive.
inline ivec line_canonical(ivec a) {
  a = primitive(std::move(a));
  for (i64 x : a) {
    if (x > 0) return a;
    if (x < 0) return vneg(a);
  }
  return a;
}

struct imat {
  int rows = 0, cols = 0;
  std::vector<i64> a;

  imat() = default;
  imat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  i64& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  i64 at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  static imat identity(int n) {
    imat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  ivec apply(const ivec& v) const {
    if (static_cast<int>(v.size()) != cols) throw std::invalid_argument("imat::apply: size mismatch");
    ivec r(rows, 0);
    for (int i = 0; i < rows; ++i) {
      i64 s = 0;
      for (int j = 0; j < cols; ++j) s = ck_add(s, ck_mul(at(i, j), v[j]));
      r[i] = s;
    }
    return r;
  }

  friend imat operator*(const imat& x, const imat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("imat::mul: shape mismatch");
    imat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        i64 v = x.at(i, k);
        if (v == 0) continue;
        for (int j = 0; j < y.cols; ++j) r.at(i, j) = ck_add(r.at(i, j), ck_mul(v, y.at(k, j)));
      }
    return r;
  }

  friend bool operator==(const imat& x, const imat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }

  imat transpose() const {
    imat r(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  ivec row(int r) const {
    ivec v(cols);
    for (int j = 0; j < cols; ++j) v[j] = at(r, j);
    return v;
  }

  ivec col(int c) const {
    ivec v(rows);
    for (int i = 0; i < rows; ++i) v[i] = at(i, c);
    return v;
  }
};

// fraction-free bareiss determinant, exact in checked 64-bit.
inline i64 det(imat m) {
  if (m.rows != m.cols) throw std::invalid_argument("det: not square");
  int n = m.rows;
  if (n == 0) return 1;
  i64 sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        i64 num = ck_sub(ck_mul(m.at(i, j), m.at(k, k)), ck_mul(m.at(i, k), m.at(k, j)));
        m.at(i, j) = num / prev; // exact division per bareiss
      }
    prev = m.at(k, k);
  }
  return sign < 0 ? ck_neg(m.at(n - 1, n - 1)) : m.at(n - 1, n - 1);
}

// adjugate via cofactors; adj(M) * M = det(M) * I.
inline imat adjugate(const imat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("adjugate: not square");
  int n = m.rows;
  imat r(n, n);
  if (n == 0) return r;
  if (n == 1) {
    r.at(0, 0) = 1;
    return r;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      imat minor(n - 1, n - 1);
      for (int a2 = 0, ai = 0; a2 < n; ++a2) {
        if (a2 == i) continue;
        for (int b2 = 0, bj = 0; b2 < n; ++b2) {
          if (b2 == j) continue;
          minor.at(ai, bj) = m.at(a2, b2);
          ++bj;
        }
        ++ai;
      }
      i64 c = det(minor);
      r.at(j, i) = ((i + j) % 2 == 0) ? c : ck_neg(c);
    }
  return r;
}

struct qmat {
  int rows = 0, cols = 0;
  std::vector<rat> a;

  qmat() = default;
  qmat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  rat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const rat& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

// reduced row echelon form in place; returns pivot column per row used.
inline std::vector<int> rref(qmat& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (!m.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(p, j));
    rat inv = rat(1) / m.at(r, c);
    for (int j = 0; j < m.cols; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      rat f = m.at(i, c);
      for (int j = 0; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline int rank_of(const std::vector<ivec>& rows_in, int dim) {
  qmat m(static_cast<int>(rows_in.size()), dim);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < dim; ++j) m.at(i, j) = rat(rows_in[i][j]);
  return static_cast<int>(rref(m).size());
}

// solve A x = b exactly; empty optional when inconsistent. when the system is
// underdetermined returns the solution with free variables set to zero.
inline std::optional<qvec> solve(const std::vector<ivec>& A, const qvec& b, int dim) {
  int n = static_cast<int>(A.size());
  qmat m(n, dim + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < dim; ++j) m.at(i, j) = rat(A[i][j]);
    m.at(i, dim) = b[i];
  }
  // forward elimination on the augmented matrix
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < dim && r < n; ++c) {
    int p = -1;
    for (int i = r; i < n; ++i)
      if (!m.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    for (int j = 0; j <= dim; ++j) std::swap(m.at(r, j), m.at(p, j));
    rat inv = rat(1) / m.at(r, c);
    for (int j = 0; j <= dim; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      rat f = m.at(i, c);
      for (int j = 0; j <= dim; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  for (int i = r; i < n; ++i)
    if (!m.at(i, dim).is_zero()) return std::nullopt;
  qvec x(dim, rat(0));
  for (int i = 0; i < r; ++i) x[piv[i]] = m.at(i, dim);
  return x;
}

// integer basis of the kernel of the matrix with the given rows.
inline std::vector<ivec> kernel_basis(const std::vector<ivec>& rows_in, int dim) {
  qmat m(static_cast<int>(rows_in.size()), dim);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < dim; ++j) m.at(i, j) = rat(rows_in[i][j]);
  std::vector<int> piv = rref(m);
  std::vector<bool> is_piv(dim, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<ivec> basis;
  for (int freec = 0; freec < dim; ++freec) {
    if (is_piv[freec]) continue;
    qvec v(dim, rat(0));
    v[freec] = rat(1);
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m.at(static_cast<int>(i), freec);
    // clear denominators
    i64 l = 1;
    for (const rat& q : v) l = ck_mul(l, q.den / std::gcd(l, q.den));
    ivec w(dim);
    for (int j = 0; j < dim; ++j) w[j] = ck_mul(v[j].num, l / v[j].den);
    basis.push_back(line_canonical(std::move(w)));
  }
  return basis;
}

// canonical basis of the rational row span: rref rows scaled to primitive
// integer vectors. two vector sets span the same subspace iff these agree.
inline std::vector<ivec> span_canonical(const std::vector<ivec>& rows_in, int dim) {
  qmat m(static_cast<int>(rows_in.size()), dim);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < dim; ++j) m.at(i, j) = rat(rows_in[i][j]);
  std::vector<int> piv = rref(m);
  std::vector<ivec> out;
  for (size_t i = 0; i < piv.size(); ++i) {
    qvec v(dim);
    for (int j = 0; j < dim; ++j) v[j] = m.at(static_cast<int>(i), j);
    i64 l = 1;
    for (const rat& q : v) l = ck_mul(l, q.den / std::gcd(l, q.den));
    ivec w(dim);
    for (int j = 0; j < dim; ++j) w[j] = ck_mul(v[j].num, l / v[j].den);
    out.push_back(line_canonical(std::move(w)));
  }
  return out;
}

inline ivec qvec_clear_denominators(const qvec& v) {
  i64 l = 1;
  for (const rat& q : v) l = ck_mul(l, q.den / std::gcd(l, q.den));
  ivec w(v.size());
  for (size_t j = 0; j < v.size(); ++j) w[j] = ck_mul(v[j].num, l / v[j].den);
  return w;
}

} // namespace flopcomb
