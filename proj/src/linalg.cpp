#include "nfsos/linalg.hpp"

#include <algorithm>
#include <utility>

namespace nfsos {

mpz_class determinant(ZMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

mpq_class determinant(QMatrix m) {
  const std::size_t n = m.size();
  mpq_class det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(m[k], m[piv]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      mpq_class c = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= c * m[k][j];
    }
  }
  return det;
}

std::optional<QVec> solve(QMatrix a, QVec b) {
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[k], a[piv]);
    std::swap(b[k], b[piv]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      mpq_class c = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= c * a[k][j];
      b[i] -= c * b[k];
    }
  }
  QVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

ZMatrix hermite_form(ZMatrix rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    // gcd-combine everything at or below row r into row r
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      if (rows[r][c] == 0) {
        std::swap(rows[r], rows[i]);
        continue;
      }
      mpz_class g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), rows[r][c].get_mpz_t(),
                 rows[i][c].get_mpz_t());
      mpz_class u = rows[r][c] / g, v = rows[i][c] / g;
      for (std::size_t j = c; j < cols; ++j) {
        mpz_class a = rows[r][j], b = rows[i][j];
        rows[r][j] = s * a + t * b;
        rows[i][j] = u * b - v * a;
      }
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (std::size_t j = c; j < cols; ++j) rows[r][j] = -rows[r][j];
    for (std::size_t i = 0; i < r; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::vector<mpz_class> smith_invariants(ZMatrix m) {
  const std::size_t n = m.size();
  std::vector<mpz_class> out;
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pi = n, pj = n;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (m[i][j] != 0 && (pi == n || abs(m[i][j]) < abs(m[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == n) {
        out.push_back(0);
        break;
      }
      std::swap(m[t], m[pi]);
      for (auto& row : m) std::swap(row[t], row[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
        if (q != 0)
          for (std::size_t j = t; j < n; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
        if (q != 0)
          for (std::size_t i = t; i < n; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = n;
      for (std::size_t i = t + 1; i < n && bad == n; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(m[i][j].get_mpz_t(), m[t][t].get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == n) {
        out.push_back(abs(m[t][t]));
        break;
      }
      for (std::size_t j = t; j < n; ++j) m[t][j] += m[bad][j];
    }
  }
  return out;
}

namespace {

mpq_class inner(const ZPoly& a, const ZPoly& b, const ZMatrix& gram) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    mpz_class row = 0;
    for (std::size_t j = 0; j < b.size(); ++j) row += gram[i][j] * b[j];
    s += a[i] * row;
  }
  return mpq_class(s);
}

}  // namespace

ZMatrix lll(ZMatrix b, const ZMatrix& gram) {
  const std::size_t n = b.size();
  if (n <= 1) return b;
  std::vector<std::vector<mpq_class>> mu(n, std::vector<mpq_class>(n));
  std::vector<mpq_class> bstar(n);  // squared lengths of Gram-Schmidt vectors
  // Gram-Schmidt in terms of inner products only
  auto recompute = [&]() {
    std::vector<std::vector<mpq_class>> r(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        mpq_class v = inner(b[i], b[j], gram);
        for (std::size_t k = 0; k < j; ++k) v -= mu[j][k] * r[i][k];
        r[i][j] = v;
        if (j < i) mu[i][j] = v / bstar[j];
      }
      bstar[i] = r[i][i];
    }
  };
  recompute();
  const mpq_class delta(3, 4);
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t jj = k; jj-- > 0;) {
      mpq_class m = mu[k][jj];
      mpz_class q;
      mpq_class shifted = m + mpq_class(1, 2);
      mpz_fdiv_q(q.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
      if (q == 0) continue;
      for (std::size_t t = 0; t < b[k].size(); ++t) b[k][t] -= q * b[jj][t];
      for (std::size_t t = 0; t < jj; ++t) mu[k][t] -= q * mu[jj][t];
      mu[k][jj] -= q;
    }
    if (bstar[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * bstar[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      recompute();
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  return b;
}

}  // namespace nfsos
