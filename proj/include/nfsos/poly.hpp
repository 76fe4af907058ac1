#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "nfsos/place.hpp"

namespace nfsos {

/// Dense rational polynomial, lowest degree first; the zero polynomial is empty.
using QPoly = QVec;

void trim(QPoly& a);
void trim(ZPoly& a);
int degree(const QPoly& a);
int degree(const ZPoly& a);

QPoly to_qpoly(const ZPoly& a);

QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const mpq_class& c);
/// Division with remainder; b must be nonzero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
/// Monic gcd (empty if both inputs are zero).
QPoly gcd(const QPoly& a, const QPoly& b);
QPoly derivative(const QPoly& a);
mpq_class evaluate(const QPoly& a, const mpq_class& x);
int sign_at(const ZPoly& a, const mpq_class& x);

ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly derivative(const ZPoly& a);

/// Res(a, b) via the Sylvester determinant.
mpz_class resultant(const ZPoly& a, const ZPoly& b);
/// Discriminant of a monic integer polynomial.
mpz_class discriminant(const ZPoly& f);

/// Parses a polynomial in `x` over the rationals: integers, `+ - * / ^`,
/// parentheses; whitespace is ignored. Division only by constants.
/// Throws Error(ParseError).
QPoly parse_polynomial(std::string_view text);

/// Formats as e.g. "3/2*x+5", "x^2+1", "-x", "0".
std::string format_polynomial(const QPoly& a);
std::string format_polynomial(const ZPoly& a);

}  // namespace nfsos
