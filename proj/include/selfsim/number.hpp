// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace selfsim
{

// A real number carried either as an exact rational or as a double.
//
// Arithmetic between two exact operands stays exact; as soon as one operand is
// a double the result is a double. Comparisons between mixed operands are done
// in double precision.
class Number
{
public:
  Number() : value_(mpq_class(0)) {}
  Number(int v) : value_(mpq_class(v)) {}
  Number(long v) : value_(mpq_class(v)) {}
  Number(double v) : value_(v) {}
  explicit Number(mpq_class v);

  static Number fraction(long num, long den);

  // Accepts "p", "p/q", and plain decimals ("-0.125", "3e-2"); all exact.
  static Number parse(std::string_view text);

  bool is_exact() const noexcept { return std::holds_alternative<mpq_class>(value_); }
  double to_double() const;
  const mpq_class &rational() const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  Number abs() const;

  // Exact values print as a terminating decimal when the denominator allows it,
  // otherwise as "p/q". Doubles print in shortest round-trip form.
  std::string to_string() const;

  Number &operator+=(const Number &o);
  Number &operator-=(const Number &o);
  Number &operator*=(const Number &o);
  Number &operator/=(const Number &o);

  friend Number operator+(Number a, const Number &b) { return a += b; }
  friend Number operator-(Number a, const Number &b) { return a -= b; }
  friend Number operator*(Number a, const Number &b) { return a *= b; }
  friend Number operator/(Number a, const Number &b) { return a /= b; }
  Number operator-() const;

  friend bool operator==(const Number &a, const Number &b);
  friend std::partial_ordering operator<=>(const Number &a, const Number &b);

private:
  std::variant<mpq_class, double> value_;
};

Number pow(const Number &base, unsigned exponent);
Number min(const Number &a, const Number &b);
Number max(const Number &a, const Number &b);

std::ostream &operator<<(std::ostream &os, const Number &x);

}  // namespace selfsim
