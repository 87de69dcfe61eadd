#pragma once

// Exact Fibonacci and Lucas numbers for any signed index, plus golden-ratio
// powers derived from them.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fibint {

/// Largest |n| accepted by fib() and lucas().
inline constexpr long kMaxSeqIndex = 10000;

/// Largest |r| accepted by golden_powers().
inline constexpr long kMaxGoldenIndex = 40;

class IndexOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Arbitrary-precision signed integer.
class ExactInt {
 public:
  using Backend = boost::multiprecision::cpp_int;

  ExactInt() = default;
  ExactInt(long long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit ExactInt(Backend v) : v_(std::move(v)) {}

  /// Parses an optionally signed decimal string. Throws std::invalid_argument.
  static ExactInt from_string(std::string_view s);

  std::string to_string() const;

  /// Correctly rounded conversion (exact below 2^53, +-inf past DBL_MAX).
  double to_double() const;

  int sign() const { return v_.sign(); }
  const Backend& raw() const { return v_; }

  ExactInt operator-() const { return ExactInt(Backend(-v_)); }
  ExactInt& operator+=(const ExactInt& o) { v_ += o.v_; return *this; }
  ExactInt& operator-=(const ExactInt& o) { v_ -= o.v_; return *this; }
  ExactInt& operator*=(const ExactInt& o) { v_ *= o.v_; return *this; }

  friend ExactInt operator+(ExactInt a, const ExactInt& b) { return a += b; }
  friend ExactInt operator-(ExactInt a, const ExactInt& b) { return a -= b; }
  friend ExactInt operator*(ExactInt a, const ExactInt& b) { return a *= b; }

  friend bool operator==(const ExactInt& a, const ExactInt& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const ExactInt& a, const ExactInt& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Backend v_;
};

/// F_n for |n| <= kMaxSeqIndex, with F_{-n} = (-1)^{n-1} F_n.
ExactInt fib(long n);

/// L_n for |n| <= kMaxSeqIndex, with L_{-n} = (-1)^n L_n.
ExactInt lucas(long n);

/// Convenience: F_n and L_n rounded to binary64.
double fib_d(long n);
double lucas_d(long n);

/// alpha^r and beta^r in binary64.
struct GoldenPair {
  double alpha_pow;
  double beta_pow;
};

/// Computes (alpha^r, beta^r) from the exact F_r, L_r. For the beta power the
/// reciprocal form (-1)^r / alpha^r is used when r > 0, which avoids the
/// cancellation in (L_r - F_r sqrt5) / 2.
GoldenPair golden_powers(long r);

}  // namespace fibint
