#include "nfsos/numeric.hpp"

#include <algorithm>
#include <cmath>

#include "nfsos/error.hpp"

namespace nfsos {

mpz_class Real::round() const {
  mpz_class z;
  Real t(*this);
  mpfr_round(t.get(), t.get());
  mpfr_get_z(z.get_mpz_t(), t.get(), MPFR_RNDN);
  return z;
}

Real Real::operator+(const Real& o) const {
  Real r(std::max(prec(), o.prec()));
  mpfr_add(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

Real Real::operator-(const Real& o) const {
  Real r(std::max(prec(), o.prec()));
  mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

Real Real::operator*(const Real& o) const {
  Real r(std::max(prec(), o.prec()));
  mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

Real Real::operator/(const Real& o) const {
  Real r(std::max(prec(), o.prec()));
  mpfr_div(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

Real Real::operator-() const {
  Real r(prec());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

Real& Real::operator+=(const Real& o) {
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real sqrt(const Real& x) {
  Real r(x.prec());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real abs(const Real& x) {
  Real r(x.prec());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()); }

Complex Complex::operator*(const Complex& o) const {
  return {re * o.re - im * o.im, re * o.im + im * o.re};
}

Complex Complex::operator/(const Complex& o) const {
  Real d = o.abs2();
  return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
}

Complex sqrt(const Complex& z) {
  // principal branch
  Real m = z.abs();
  Real two(z.prec(), 2);
  Real a = sqrt((m + abs(z.re)) / two);
  if (a.sign() == 0) return Complex(z.prec());
  Real b = z.im / (a * two);
  if (z.re.sign() >= 0) return {a, b};
  Real ab = abs(b);
  return {ab, z.im.sign() < 0 ? -a : a};
}

Complex evaluate(const QVec& poly, const Complex& z) {
  Complex acc(z.prec());
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
    acc = acc * z;
    acc.re += Real(z.prec(), *it);
  }
  return acc;
}

namespace {

void aberth(const QVec& f, const QVec& df, std::vector<Complex>& z, mpfr_prec_t prec, int max_iter) {
  const std::size_t n = z.size();
  Real tol(prec, 1);
  mpfr_mul_2si(tol.get(), tol.get(), -static_cast<long>(prec) + 8, MPFR_RNDN);
  for (int iter = 0; iter < max_iter; ++iter) {
    bool done = true;
    for (std::size_t k = 0; k < n; ++k) {
      Complex fv = evaluate(f, z[k]);
      if (fv.re.sign() == 0 && fv.im.sign() == 0) continue;
      Complex w = fv / evaluate(df, z[k]);
      Complex s(prec);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        Complex one{Real(prec, 1), Real(prec)};
        s = s + one / (z[k] - z[j]);
      }
      Complex one{Real(prec, 1), Real(prec)};
      Complex corr = w / (one - w * s);
      z[k] = z[k] - corr;
      Real scale = z[k].abs();
      if (scale < Real(prec, 1)) scale = Real(prec, 1);
      if (!(corr.abs() < tol * scale)) done = false;
    }
    if (done) return;
  }
}

}  // namespace

RootSet complex_roots(const ZPoly& f, int real_count, mpfr_prec_t prec) {
  const int n = static_cast<int>(f.size()) - 1;
  RootSet out;
  out.prec = prec;
  out.r1 = real_count;
  out.r2 = (n - real_count) / 2;
  if (n < 1) return out;
  QVec fq(f.begin(), f.end()), df;
  for (int i = 1; i <= n; ++i) df.push_back(fq[i] * i);

  if (n == 1) {
    Complex r(prec);
    r.re = Real(prec, mpq_class(-f[0]));
    out.roots.push_back(r);
    return out;
  }

  double bound = 1.0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, 1.0 + std::fabs(f[i].get_d()));
  double radius = std::min(bound, 1e6);
  std::vector<Complex> z;
  mpfr_prec_t low = 80;
  for (int k = 0; k < n; ++k) {
    double ang = 2.0 * M_PI * (k + 0.25) / n + 0.4;
    Complex c(low);
    c.re = Real(low, mpq_class(radius * std::cos(ang) * 0.9));
    c.im = Real(low, mpq_class(radius * std::sin(ang) * 0.9));
    z.push_back(c);
  }
  aberth(fq, df, z, low, 4000);
  for (auto& c : z) {
    Real re(prec + 16), im(prec + 16);
    mpfr_set(re.get(), c.re.get(), MPFR_RNDN);
    mpfr_set(im.get(), c.im.get(), MPFR_RNDN);
    c = Complex(re, im);
  }
  aberth(fq, df, z, prec + 16, 200);

  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return abs(z[a].im) < abs(z[b].im); });
  std::vector<Complex> reals, cplx;
  for (int i = 0; i < n; ++i) {
    Complex c = z[idx[i]];
    if (i < real_count) {
      c.im = Real(c.prec());
      reals.push_back(c);
    } else if (c.im.sign() > 0) {
      cplx.push_back(c);
    }
  }
  if (static_cast<int>(cplx.size()) != out.r2)
    raise(ErrorKind::Internal, "root finder failed to separate conjugate pairs");
  std::sort(reals.begin(), reals.end(), [](const Complex& a, const Complex& b) { return a.re < b.re; });
  out.roots = std::move(reals);
  for (auto& c : cplx) out.roots.push_back(std::move(c));
  return out;
}

}  // namespace nfsos
