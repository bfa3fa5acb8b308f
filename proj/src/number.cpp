// SPDX-License-Identifier: Apache-2.0
#include "selfsim/number.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include "selfsim/error.hpp"

namespace selfsim
{

namespace
{

mpz_class pow10(unsigned long k)
{
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

std::string format_double(double v)
{
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

// Terminating decimal expansion of q, or empty when the denominator has a
// prime factor other than 2 and 5.
std::string exact_decimal(const mpq_class &q)
{
  mpz_class den = q.get_den();
  unsigned long twos = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), mpz_class(2).get_mpz_t());
  unsigned long fives = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), mpz_class(5).get_mpz_t());
  if (den != 1)
    return {};
  unsigned long digits = std::max(twos, fives);
  if (digits == 0)
    return q.get_num().get_str();
  if (digits > 40)
    return {};
  mpz_class scaled = q.get_num() * pow10(digits) / q.get_den();
  bool negative = scaled < 0;
  std::string s = mpz_class(abs(scaled)).get_str();
  if (s.size() <= digits)
    s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  while (s.back() == '0')
    s.pop_back();
  if (s.back() == '.')
    s.pop_back();
  return negative ? "-" + s : s;
}

}  // namespace

Number::Number(mpq_class v) : value_(std::move(v))
{
  std::get<mpq_class>(value_).canonicalize();
}

Number Number::fraction(long num, long den)
{
  if (den == 0)
    throw Error(ErrorCode::InvalidArgument, "zero denominator");
  return Number(mpq_class(num, den));
}

Number Number::parse(std::string_view text)
{
  auto fail = [&] {
    return Error(ErrorCode::SchemaError, "not a number: \"" + std::string(text) + "\"");
  };
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty())
    throw fail();

  if (auto slash = text.find('/'); slash != std::string_view::npos)
  {
    mpz_class num, den;
    if (num.set_str(std::string(text.substr(0, slash)), 10) != 0 ||
        den.set_str(std::string(text.substr(slash + 1)), 10) != 0)
      throw fail();
    if (den == 0)
      throw Error(ErrorCode::SchemaError, "zero denominator in \"" + std::string(text) + "\"");
    return Number(mpq_class(num, den));
  }

  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-')
    negative = text[i++] == '-';
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  for (; i < text.size(); ++i)
  {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c)))
    {
      digits.push_back(c);
      if (seen_point)
        ++frac_digits;
    }
    else if (c == '.' && !seen_point)
      seen_point = true;
    else
      break;
  }
  if (digits.empty())
    throw fail();
  long exponent = 0;
  if (i < text.size())
  {
    if (text[i] != 'e' && text[i] != 'E')
      throw fail();
    ++i;
    auto rest = text.substr(i);
    if (!rest.empty() && rest.front() == '+')
      rest.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), exponent);
    if (ec != std::errc() || ptr != rest.data() + rest.size() || std::labs(exponent) > 4000)
      throw fail();
  }
  mpq_class q{mpz_class(digits, 10)};
  long shift = exponent - frac_digits;
  if (shift >= 0)
    q *= mpq_class(pow10(static_cast<unsigned long>(shift)));
  else
    q /= mpq_class(pow10(static_cast<unsigned long>(-shift)));
  if (negative)
    q = -q;
  return Number(q);
}

double Number::to_double() const
{
  if (auto q = std::get_if<mpq_class>(&value_))
    return q->get_d();
  return std::get<double>(value_);
}

const mpq_class &Number::rational() const
{
  if (auto q = std::get_if<mpq_class>(&value_))
    return *q;
  throw Error(ErrorCode::InvalidArgument, "number is not exact");
}

int Number::sign() const
{
  if (auto q = std::get_if<mpq_class>(&value_))
    return sgn(*q);
  double v = std::get<double>(value_);
  return (v > 0) - (v < 0);
}

Number Number::abs() const
{
  if (auto q = std::get_if<mpq_class>(&value_))
    return Number(mpq_class(::abs(*q)));
  return Number(std::fabs(std::get<double>(value_)));
}

std::string Number::to_string() const
{
  if (auto q = std::get_if<mpq_class>(&value_))
  {
    auto dec = exact_decimal(*q);
    return dec.empty() ? q->get_str() : dec;
  }
  return format_double(std::get<double>(value_));
}

Number &Number::operator+=(const Number &o)
{
  if (is_exact() && o.is_exact())
    std::get<mpq_class>(value_) += o.rational();
  else
    value_ = to_double() + o.to_double();
  return *this;
}

Number &Number::operator-=(const Number &o)
{
  if (is_exact() && o.is_exact())
    std::get<mpq_class>(value_) -= o.rational();
  else
    value_ = to_double() - o.to_double();
  return *this;
}

Number &Number::operator*=(const Number &o)
{
  if (is_exact() && o.is_exact())
    std::get<mpq_class>(value_) *= o.rational();
  else
    value_ = to_double() * o.to_double();
  return *this;
}

Number &Number::operator/=(const Number &o)
{
  if (is_exact() && o.is_exact())
  {
    if (o.is_zero())
      throw Error(ErrorCode::InvalidArgument, "division by zero");
    std::get<mpq_class>(value_) /= o.rational();
  }
  else
    value_ = to_double() / o.to_double();
  return *this;
}

Number Number::operator-() const
{
  if (auto q = std::get_if<mpq_class>(&value_))
    return Number(mpq_class(-*q));
  return Number(-std::get<double>(value_));
}

bool operator==(const Number &a, const Number &b)
{
  if (a.is_exact() && b.is_exact())
    return a.rational() == b.rational();
  return a.to_double() == b.to_double();
}

std::partial_ordering operator<=>(const Number &a, const Number &b)
{
  if (a.is_exact() && b.is_exact())
  {
    int c = cmp(a.rational(), b.rational());
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }
  return a.to_double() <=> b.to_double();
}

Number pow(const Number &base, unsigned exponent)
{
  if (base.is_exact())
  {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.rational().get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.rational().get_den_mpz_t(), exponent);
    return Number(mpq_class(num, den));
  }
  return Number(std::pow(base.to_double(), static_cast<double>(exponent)));
}

Number min(const Number &a, const Number &b) { return b < a ? b : a; }
Number max(const Number &a, const Number &b) { return a < b ? b : a; }

std::ostream &operator<<(std::ostream &os, const Number &x) { return os << x.to_string(); }

}  // namespace selfsim
