#include "latzeta/linalg.hpp"

namespace latzeta {

QVec to_qvec(const IVec& v) {
  QVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = BigRational(v[i]);
  return r;
}

QMat to_qmat(const std::vector<IVec>& rows) {
  QMat m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.push_back(to_qvec(r));
  return m;
}

namespace {

// Row echelon elimination in place; returns pivot columns.
std::vector<int> echelon(QMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t ncols = m[0].size();
  size_t row = 0;
  for (size_t col = 0; col < ncols && row < m.size(); ++col) {
    size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      BigRational f = m[i][col] / m[row][col];
      for (size_t j = col; j < ncols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back((int)col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(QMat m) { return (int)echelon(m).size(); }

std::optional<QVec> solve_full_col_rank(const QMat& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve: size mismatch");
  size_t k = a.empty() ? 0 : a[0].size();
  QMat aug = a;
  for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  if (k == 0) {
    for (const auto& bi : b)
      if (bi != 0) return std::nullopt;
    return QVec{};
  }
  std::vector<int> piv = echelon(aug);
  // Inconsistent iff the last column is a pivot.
  if (!piv.empty() && piv.back() == (int)k) return std::nullopt;
  if (piv.size() != k) throw std::invalid_argument("solve: columns dependent");
  QVec x(k);
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug[r][k] / aug[r][piv[r]];
  return x;
}

std::vector<QVec> kernel(const QMat& a, int ncols) {
  QMat m = a;
  std::vector<int> piv = echelon(m);
  std::vector<bool> is_piv(ncols, false);
  for (int p : piv) is_piv[p] = true;
  std::vector<QVec> basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_piv[free]) continue;
    QVec x(ncols, BigRational(0));
    x[free] = 1;
    for (int r = (int)piv.size() - 1; r >= 0; --r) {
      BigRational s = 0;
      for (int j = piv[r] + 1; j < ncols; ++j) s += m[r][j] * x[j];
      x[piv[r]] = -s / m[r][piv[r]];
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

BigRational det(QMat m) {
  size_t n = m.size();
  BigRational d = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t p = col;
    while (p < n && m[p][col] == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      std::swap(m[col], m[p]);
      d = -d;
    }
    d *= m[col][col];
    for (size_t i = col + 1; i < n; ++i) {
      if (m[i][col] == 0) continue;
      BigRational f = m[i][col] / m[col][col];
      for (size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  return d;
}

QMat inverse(QMat m) {
  size_t n = m.size();
  QMat aug = m;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i].push_back(BigRational(i == j ? 1 : 0));
  }
  std::vector<int> piv = echelon(aug);
  if (piv.size() != n) throw std::invalid_argument("inverse: singular matrix");
  QMat inv(n, QVec(n));
  for (size_t r = 0; r < n; ++r)
    for (size_t j = 0; j < n; ++j) inv[piv[r]][j] = aug[r][n + j] / aug[r][piv[r]];
  return inv;
}

IVec primitive_direction(const QVec& v) {
  BigInt lcm_den = 1;
  for (const auto& x : v) lcm_den = lcm(lcm_den, x.get_den());
  BigInt g = 0;
  std::vector<BigInt> scaled(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    scaled[i] = BigInt(v[i].get_num() * (lcm_den / v[i].get_den()));
    g = gcd(g, scaled[i]);
  }
  if (g == 0) throw std::invalid_argument("primitive_direction: zero vector");
  IVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    BigInt e = scaled[i] / g;
    if (!e.fits_slong_p()) throw std::overflow_error("primitive_direction: overflow");
    r[i] = e.get_si();
  }
  return r;
}

}  // namespace latzeta
