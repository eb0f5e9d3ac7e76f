#pragma once

// Exact scalar types and the Eigen aliases used throughout the library.
//
// BigInt and Rational are GMP-backed Boost.Multiprecision numbers with
// expression templates disabled, which is what Eigen expects from a custom
// scalar (see boost/multiprecision/eigen.hpp for the NumTraits glue).

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace riders {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<BigInt>;
using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;

/// Thrown when an input violates a documented precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a computation would exceed its configured work budget.
/// Never a silent wrong answer: callers either raise the budget or give up.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(const std::string& what, std::int64_t n = -1)
      : std::runtime_error(what), n_(n) {}
  /// The dilation parameter n at which the budget was hit, or -1.
  std::int64_t n() const { return n_; }

 private:
  std::int64_t n_;
};

inline BigInt numerator(const Rational& r) {
  return boost::multiprecision::numerator(r);
}
inline BigInt denominator(const Rational& r) {
  return boost::multiprecision::denominator(r);
}
inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0) return abs(b);
  if (b == 0) return abs(a);
  return abs(boost::multiprecision::lcm(a, b));
}

BigInt factorial(int k);
BigInt binomial(std::int64_t n, std::int64_t k);
BigInt ipow(const BigInt& base, unsigned exponent);

/// floor(r) and ceil(r) for exact rationals.
BigInt floor(const Rational& r);
BigInt ceil(const Rational& r);

/// Canonical text form: "p" for integers, "p/q" otherwise (q > 0, reduced).
std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

/// Parses "p", "-p", or "p/q". Throws InvalidArgument on malformed input or a
/// zero denominator.
Rational parse_rational(std::string_view text);
BigInt parse_bigint(std::string_view text);

}  // namespace riders
