#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace metlie {

using Rational = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Rational>;

// Accepts "p/q", "-p", "p" with optional surrounding whitespace.
// Throws PreconditionError on malformed input or zero denominator.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
Vector vec_add(const Vector& a, const Vector& b);
Vector vec_sub(const Vector& a, const Vector& b);
Vector vec_scale(const Rational& c, const Vector& a);
// a += c * b
void vec_axpy(Vector& a, const Rational& c, const Vector& b);
Rational vec_dot(const Vector& a, const Vector& b);
bool vec_is_zero(const Vector& a);

// Exact square root when q is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& q);

}  // namespace metlie
