#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nfsos/arith.hpp"
#include "nfsos/error.hpp"
#include "nfsos/place.hpp"
#include "nfsos/poly.hpp"

namespace nfsos {

class NumberField;
class FieldElement;
using Field = std::shared_ptr<const NumberField>;

/// Per-field memo table. Values are created on first use under a recursive
/// lock and never replaced, so references stay valid for the field's lifetime.
/// Mutable cached state (anything updated after creation) must be accessed
/// while holding lock().
class FieldCache {
 public:
  std::unique_lock<std::recursive_mutex> lock() const { return std::unique_lock(mu_); }

  template <class T, class Make>
  T& get(const std::string& key, Make&& make) const {
    std::lock_guard guard(mu_);
    auto it = slots_.find(key);
    if (it == slots_.end()) {
      auto value = std::make_shared<T>(make());
      it = slots_.emplace(key, std::move(value)).first;
    }
    return *static_cast<T*>(it->second.get());
  }

 private:
  mutable std::recursive_mutex mu_;
  mutable std::map<std::string, std::shared_ptr<void>> slots_;
};

/// Evidence about maximality of Z[θ]: Dedekind's criterion is run at every
/// prime whose square divides disc(f); other primes are automatically fine.
struct IndexCertificate {
  std::vector<u64> checked;
  std::vector<u64> failing;
  bool complete() const { return failing.empty(); }
};

/// K = Q[x]/(f) for a monic irreducible integer polynomial f.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  /// Throws NonMonic, ReduciblePolynomial, ParseError (for degree < 1).
  static Field create(const ZPoly& f);
  /// Parses `f` in the element grammar; coefficients must be integers.
  static Field create(std::string_view text);

  int degree() const { return static_cast<int>(f_.size()) - 1; }
  const ZPoly& polynomial() const { return f_; }
  std::string polynomial_string() const { return format_polynomial(f_); }
  const mpz_class& discriminant() const { return disc_; }
  const IndexCertificate& index_certificate() const;
  /// Dedekind's criterion at p (cached).
  bool maximal_at(u64 p) const;
  /// Upper bound for the index [O_K : Z[θ]] (1 when certified maximal).
  mpz_class index_bound() const;

  int r1() const { return static_cast<int>(real_roots_.size()); }
  int r2() const { return (degree() - r1()) / 2; }
  /// Initial isolating intervals of the real roots, ascending.
  const std::vector<std::pair<mpq_class, mpq_class>>& real_root_intervals() const { return real_roots_; }
  /// Exact sign of A(θ_i) for the i-th real root, A a nonzero rational polynomial.
  int sign_at_real_root(const QVec& a, int index) const;

  /// Tr(θ^k), k = 0..n-1.
  const std::vector<mpz_class>& power_traces() const { return traces_; }

  FieldCache& cache() const { return cache_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement gen() const;
  FieldElement from_rational(const mpq_class& q) const;
  FieldElement element(const QVec& coords) const;

  /// Reduces a rational polynomial modulo f (coordinates of length n).
  QVec reduce(QPoly a) const;

 private:
  explicit NumberField(ZPoly f);

  ZPoly f_;
  mpz_class disc_;
  std::vector<std::pair<mpq_class, mpq_class>> real_roots_;
  std::vector<mpz_class> traces_;
  mutable FieldCache cache_;
};

/// Element of K in power-basis coordinates; immutable value type.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(Field field, QVec coords);

  const Field& field() const { return field_; }
  const QVec& coords() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()); }

  bool is_zero() const;
  bool is_rational() const;
  /// Constant coordinate (meaningful when is_rational()).
  const mpq_class& rational() const { return c_[0]; }
  /// lcm of the coordinate denominators.
  mpz_class denominator() const;

  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(long e) const;
  mpq_class norm() const;
  mpq_class trace() const;

  std::string to_string() const { return format_polynomial(c_); }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const mpq_class& q, const FieldElement& a);
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

 private:
  Field field_;
  QVec c_;
};

enum class ArithOp { add, sub, mul, div };

/// Throws DivisionByZero, FieldMismatch.
FieldElement elem_arith(const FieldElement& a, const FieldElement& b, ArithOp op);

/// Square root with first nonzero coordinate positive, if a is a square.
/// Throws ZeroInput.
std::optional<FieldElement> is_square(const FieldElement& a);

/// (m, m²·a) with m a positive integer and m²·a integral. Throws ZeroInput.
std::pair<mpz_class, FieldElement> integral_scale(const FieldElement& a);

/// Element grammar: polynomial in x with rational coefficients.
FieldElement parse_element(const Field& field, std::string_view text);

/// Flips the sign so that the first nonzero coordinate is positive.
FieldElement canonical_sign(const FieldElement& a);

/// Quadratic-character filter: false means a is certainly not a square.
bool passes_square_characters(const FieldElement& a);

/// Dedekind's criterion for Z[θ] at p.
bool dedekind_maximal(const ZPoly& f, u64 p);

}  // namespace nfsos
