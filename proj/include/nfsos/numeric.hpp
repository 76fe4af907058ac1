#pragma once

#include <mpfr.h>

#include <vector>

#include "nfsos/place.hpp"

namespace nfsos {

/// RAII handle for an MPFR float at a fixed precision.
class Real {
 public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Real(mpfr_prec_t prec, const mpq_class& q) : Real(prec) { mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
  Real(mpfr_prec_t prec, long x) : Real(prec) { mpfr_set_si(v_, x, MPFR_RNDN); }
  Real(const Real& o) : Real(mpfr_get_prec(o.v_)) { mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(v_); }
  /// Nearest integer.
  mpz_class round() const;

  Real operator+(const Real& o) const;
  Real operator-(const Real& o) const;
  Real operator*(const Real& o) const;
  Real operator/(const Real& o) const;
  Real operator-() const;
  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);

 private:
  mpfr_t v_;
};

Real sqrt(const Real& x);
Real abs(const Real& x);
bool operator<(const Real& a, const Real& b);

struct Complex {
  Real re;
  Real im;
  explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  mpfr_prec_t prec() const { return re.prec(); }
  Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
  Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
  Complex operator*(const Complex& o) const;
  Complex operator/(const Complex& o) const;
  Complex conj() const { return {re, -im}; }
  Real abs2() const { return re * re + im * im; }
  Real abs() const { return sqrt(abs2()); }
};

Complex sqrt(const Complex& z);
/// Horner evaluation of a rational polynomial.
Complex evaluate(const QVec& poly, const Complex& z);

/// Complex roots of a squarefree integer polynomial. Real roots come first in
/// ascending order (imaginary parts set to zero), then one representative
/// with positive imaginary part per conjugate pair.
struct RootSet {
  mpfr_prec_t prec = 0;
  int r1 = 0;
  int r2 = 0;
  std::vector<Complex> roots;
};

/// `real_count` is the exact number of real roots (from Sturm sequences).
RootSet complex_roots(const ZPoly& f, int real_count, mpfr_prec_t prec);

}  // namespace nfsos
