#include "nfsos/poly.hpp"

#include <cctype>
#include <sstream>

#include "nfsos/error.hpp"
#include "nfsos/linalg.hpp"

namespace nfsos {

void trim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const QPoly& a) { return static_cast<int>(a.size()) - 1; }
int degree(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

QPoly to_qpoly(const ZPoly& a) {
  QPoly r(a.begin(), a.end());
  trim(r);
  return r;
}

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

QPoly scale(const QPoly& a, const mpq_class& c) {
  if (c == 0) return {};
  QPoly r(a);
  for (auto& x : r) x *= c;
  return r;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.empty()) raise(ErrorKind::DivisionByZero, "polynomial division by zero");
  QPoly r = a;
  trim(r);
  if (r.size() < b.size()) return {{}, r};
  QPoly q(r.size() - b.size() + 1);
  const mpq_class& lead = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    mpq_class c = r.back() / lead;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    r.pop_back();
    trim(r);
  }
  trim(q);
  return {q, r};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  trim(x);
  trim(y);
  while (!y.empty()) {
    QPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (!x.empty()) x = scale(x, 1 / mpq_class(x.back()));
  return x;
}

QPoly derivative(const QPoly& a) {
  if (a.size() <= 1) return {};
  QPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<long>(i);
  trim(r);
  return r;
}

ZPoly derivative(const ZPoly& a) {
  if (a.size() <= 1) return {};
  ZPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<long>(i);
  trim(r);
  return r;
}

mpq_class evaluate(const QPoly& a, const mpq_class& x) {
  mpq_class r = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = r * x + *it;
  return r;
}

int sign_at(const ZPoly& a, const mpq_class& x) {
  mpq_class r = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = r * x + *it;
  return sgn(r);
}

mpz_class resultant(const ZPoly& a, const ZPoly& b) {
  int m = degree(a), n = degree(b);
  if (m < 0 || n < 0) return 0;
  mpz_class r;
  if (m == 0) {
    mpz_pow_ui(r.get_mpz_t(), a[0].get_mpz_t(), n);
    return r;
  }
  if (n == 0) {
    mpz_pow_ui(r.get_mpz_t(), b[0].get_mpz_t(), m);
    return r;
  }
  int size = m + n;
  ZMatrix s(size, ZPoly(size, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = a[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = b[n - j];
  return determinant(s);
}

mpz_class discriminant(const ZPoly& f) {
  int n = degree(f);
  if (n <= 1) return 1;
  mpz_class r = resultant(f, derivative(f));
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r / f.back();
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  QPoly parse() {
    QPoly r = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) {
    std::ostringstream os;
    os << why << " at position " << pos_ << " in \"" << text_ << "\"";
    raise(ErrorKind::ParseError, os.str());
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  QPoly expr() {
    QPoly r = term();
    for (;;) {
      if (accept('+'))
        r = add(r, term());
      else if (accept('-'))
        r = sub(r, term());
      else
        return r;
    }
  }

  QPoly term() {
    QPoly r = unary();
    for (;;) {
      if (accept('*')) {
        r = mul(r, unary());
      } else if (accept('/')) {
        QPoly d = unary();
        if (d.empty()) fail("division by zero");
        if (d.size() > 1) fail("division by a non-constant");
        r = scale(r, 1 / d[0]);
      } else {
        return r;
      }
    }
  }

  QPoly unary() {
    if (accept('-')) return scale(unary(), -1);
    if (accept('+')) return unary();
    return power();
  }

  QPoly power() {
    QPoly base = atom();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      if (pos_ - start > 4) fail("exponent too large");
      int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      QPoly r{1};
      for (int i = 0; i < e; ++i) r = mul(r, base);
      return r;
    }
    return base;
  }

  QPoly atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      QPoly r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (c == 'x') {
      ++pos_;
      return QPoly{0, 1};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class v(std::string(text_.substr(start, pos_ - start)), 10);
      QPoly r{mpq_class(v)};
      trim(r);
      return r;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace

QPoly parse_polynomial(std::string_view text) { return Parser(text).parse(); }

std::string format_polynomial(const QPoly& a) {
  std::string out;
  bool first = true;
  for (int k = degree(a); k >= 0; --k) {
    const mpq_class& c = a[k];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    std::string term;
    if (k == 0) {
      term = mag.get_str();
    } else {
      if (mag != 1) term = mag.get_str() + "*";
      term += "x";
      if (k > 1) term += "^" + std::to_string(k);
    }
    if (first) {
      out += (c < 0 ? "-" : "") + term;
      first = false;
    } else {
      out += (c < 0 ? "-" : "+") + term;
    }
  }
  return first ? "0" : out;
}

std::string format_polynomial(const ZPoly& a) { return format_polynomial(to_qpoly(a)); }

}  // namespace nfsos
