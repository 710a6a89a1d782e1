#include "latzeta/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

namespace latzeta {

void TruncatedSeries::add(long tdeg, long qexp, const BigRational& c) {
  if (c == 0) return;
  auto& row = coeff[tdeg];
  auto it = row.emplace(qexp, 0).first;
  it->second += c;
  if (it->second == 0) {
    row.erase(it);
    if (row.empty()) coeff.erase(tdeg);
  }
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, row] : coeff) {
    if (!first) os << " + ";
    first = false;
    os << "(";
    bool f2 = true;
    for (const auto& [q, c] : row) {
      if (!f2) os << " + ";
      f2 = false;
      os << c.get_str();
      if (q != 0) os << "*q^" << q;
    }
    os << ")*t^" << t;
  }
  if (first) os << "0";
  return os.str();
}

SeriesMismatch compare(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order != b.order) throw std::invalid_argument("compare: order mismatch");
  SeriesMismatch v;
  std::set<long> degrees;
  for (const auto& [t, row] : a.coeff) degrees.insert(t);
  for (const auto& [t, row] : b.coeff) degrees.insert(t);
  for (long t : degrees) {
    auto ia = a.coeff.find(t);
    auto ib = b.coeff.find(t);
    bool eq = (ia != a.coeff.end() && ib != b.coeff.end())
                  ? ia->second == ib->second
                  : (ia == a.coeff.end() && ib == b.coeff.end());
    if (!eq) {
      v.equal = false;
      v.degree = t;
      return v;
    }
  }
  return v;
}

TruncatedSeries lattice_sum_truncated(const CellComplex& cx, const std::set<int>& I,
                                      const GenFunSpec& spec, long N) {
  const int m = cx.dim();
  std::vector<IVec> rays = extreme_rays(cone_constraints(cx), m);
  for (const auto& u : rays)
    if (dot(spec.B, u) <= 0)
      throw hypothesis_error("lattice sum: B.u <= 0 on an extreme ray");

  // e = sum lambda_i u_i with lambda_i <= N / (B.u_i) bounds each coordinate.
  std::vector<long> lo(m, 0), hi(m, 0);
  for (const auto& u : rays) {
    BigRational lmax = BigRational(N) / BigRational(dot(spec.B, u));
    for (int x = 0; x < m; ++x) {
      BigRational v = lmax * BigRational(u[x]);
      if (v < 0) {
        BigInt f;
        mpz_fdiv_q(f.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
        lo[x] += f.get_si();
      } else {
        BigInt c;
        mpz_cdiv_q(c.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
        hi[x] += c.get_si();
      }
    }
  }

  std::vector<Cell> cells;
  std::map<SignVector, int> cell_of;
  if (!spec.gamma.zero) {
    cells = enumerate_cells(cx);
    for (size_t i = 0; i < cells.size(); ++i) cell_of.emplace(cells[i].signs, (int)i);
  }

  TruncatedSeries out;
  out.order = N;
  IVec e(m);
  std::function<void(int)> rec = [&](int x) {
    if (x == m) {
      long bt = dot(spec.B, e);
      if (bt > N || !point_in_cone(cx, e)) return;
      for (int i : I)
        if (dot(cx.bounding()[i].normal, e) <= 0) return;
      IVec c = spec.A;
      if (!spec.gamma.zero) {
        SignVector s;
        for (const auto& h : cx.bounding()) s.bounding.push_back(eval_sign(h.normal, e));
        for (const auto& h : cx.internal()) s.internal.push_back(eval_sign(h.normal, e));
        auto it = cell_of.find(s);
        if (it == cell_of.end()) throw std::logic_error("lattice sum: point in no cell");
        c = add(c, spec.gamma.value(cells[it->second].signs, m));
      }
      out.add(bt, dot(c, e), 1);
      return;
    }
    for (long v = lo[x]; v <= hi[x]; ++v) {
      e[x] = v;
      rec(x + 1);
    }
  };
  rec(0);
  return out;
}

namespace {

using Series = std::map<long, std::map<long, BigRational>>;

Series mul_truncated(const Series& a, const Series& b, long lo, long hi) {
  Series r;
  for (const auto& [ta, rowa] : a)
    for (const auto& [tb, rowb] : b) {
      long t = ta + tb;
      if (t < lo || t > hi) continue;
      for (const auto& [qa, ca] : rowa)
        for (const auto& [qb, cb] : rowb) {
          auto& c = r[t][qa + qb];
          c += ca * cb;
        }
    }
  for (auto it = r.begin(); it != r.end();) {
    for (auto jt = it->second.begin(); jt != it->second.end();)
      jt = (jt->second == 0) ? it->second.erase(jt) : std::next(jt);
    it = it->second.empty() ? r.erase(it) : std::next(it);
  }
  return r;
}

}  // namespace

TruncatedSeries series_expand(const FactoredRational& x, long N) {
  TruncatedSeries out;
  out.order = N;
  if (x.is_zero()) return out;

  long num_min_t = 0;
  for (const auto& [e, c] : x.numerator().terms()) num_min_t = std::min(num_min_t, e.t);
  long M = N - num_min_t;  // denominator expansion depth

  Series acc{{0, {{0, BigRational(1)}}}};
  for (const auto& f : x.denominator()) {
    if (f.b < 1) throw std::domain_error("series_expand: denominator factor with b < 1");
    Series geo;
    for (long k = 0; k * f.b <= M; ++k) geo[k * f.b][k * f.a] = 1;
    acc = mul_truncated(acc, geo, 0, M);
  }
  Series num;
  for (const auto& [e, c] : x.numerator().terms()) num[e.t][e.q] = c;
  acc = mul_truncated(acc, num, std::numeric_limits<long>::min() / 4, N);
  for (const auto& [t, row] : acc)
    for (const auto& [q, c] : row) out.add(t, q, c);
  return out;
}

}  // namespace latzeta
