#pragma once

// Exact quasipolynomial interpolation of count tables, period detection,
// evaluation (including n = -1), and coefficient extraction.

#include "riders/enumerator.hpp"
#include "riders/exact.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace riders {

/// f(n) = f_k(n) for n = k (mod p), residues in 0..p-1 for every integer n.
class Quasipolynomial {
 public:
  /// constituents[k][j] is the coefficient of n^j in f_k. Every constituent
  /// must have exactly degree+1 coefficients.
  Quasipolynomial(int degree, std::vector<std::vector<Rational>> constituents);

  int degree() const { return degree_; }
  int period() const { return static_cast<int>(constituents_.size()); }
  const std::vector<Rational>& constituent(int k) const { return constituents_.at(k); }
  const std::vector<std::vector<Rational>>& constituents() const { return constituents_; }

  /// Residue of n, in 0..p-1.
  int residue(std::int64_t n) const;
  Rational evaluate(std::int64_t n) const;
  /// Coefficient of n^{degree-i} in each constituent.
  std::vector<Rational> coefficient(int i) const;

  /// The n range the fit was checked on, if known.
  std::optional<std::pair<std::int64_t, std::int64_t>> verified_range;

  /// {"constituents": [["c0", ...], ...], "degree": d, "period": p, ...}
  std::string to_json() const;
  static Quasipolynomial from_json(const std::string& text);
  /// Descending powers; coefficients that vary with n are written
  /// (a + b(-1)^n) when p = 2 and {v_0, ..., v_{p-1}} otherwise.
  std::string pretty() const;

  friend bool operator==(const Quasipolynomial& a, const Quasipolynomial& b) {
    return a.degree_ == b.degree_ && a.constituents_ == b.constituents_;
  }

 private:
  int degree_;
  std::vector<std::vector<Rational>> constituents_;
};

struct Mismatch {
  std::int64_t n;
  Rational expected;
  Rational fitted;
};

/// A fit that could not be made or failed validation.
class FitError : public std::runtime_error {
 public:
  FitError(const std::string& what, std::vector<Mismatch> mismatches = {})
      : std::runtime_error(what), mismatches_(std::move(mismatches)) {}
  const std::vector<Mismatch>& mismatches() const { return mismatches_; }

 private:
  std::vector<Mismatch> mismatches_;
};

/// Interpolates each residue class through its degree+1 smallest n and checks
/// every remaining value. Requires at least degree+2 values per class.
Quasipolynomial fit(const std::map<std::int64_t, Rational>& values, int period,
                    int degree);

/// Table version with d = 2q by default; additionally checks the leading
/// coefficient (area^q / q! unlabelled, area^q labelled).
Quasipolynomial fit(const CountTable& table, int period, int degree = -1,
                    bool labelled = false);

/// Smallest p <= p_max whose fit validates. With a denominator bound only
/// its divisors are tried. Throws FitError listing the mismatches of the
/// last attempted period when nothing fits.
int detect_period(const std::map<std::int64_t, Rational>& values, int degree,
                  int p_max, const std::optional<BigInt>& denominator_bound = {});
int detect_period(const CountTable& table, int p_max,
                  const std::optional<BigInt>& denominator_bound = {},
                  bool labelled = false);

/// f(-1) via the last constituent. Throws FitError when the value is not a
/// nonnegative integer.
BigInt types_count(const Quasipolynomial& qp);

/// Exact polynomial through the given points (ascending coefficients).
/// Throws InvalidArgument on repeated abscissae.
std::vector<Rational> interpolate(const std::vector<std::pair<Rational, Rational>>& pts);
Rational evaluate_polynomial(const std::vector<Rational>& coeffs, const Rational& x);

}  // namespace riders
