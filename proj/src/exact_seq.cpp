#include "fibint/exact_seq.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>

namespace fibint {

namespace {

using Big = ExactInt::Backend;

void check_index(long n, const char* what) {
  if (n > kMaxSeqIndex || n < -kMaxSeqIndex) {
    throw IndexOutOfRange(std::string(what) + ": index " + std::to_string(n) +
                          " outside [-" + std::to_string(kMaxSeqIndex) + ", " +
                          std::to_string(kMaxSeqIndex) + "]");
  }
}

// Fast doubling: returns (F_k, F_{k+1}) for k >= 0.
std::pair<Big, Big> fib_pair(unsigned long k) {
  if (k == 0) return {Big(0), Big(1)};
  auto [a, b] = fib_pair(k >> 1);
  Big c = a * (2 * b - a);  // F_{2m}
  Big d = a * a + b * b;    // F_{2m+1}
  if (k & 1UL) return {d, c + d};
  return {c, d};
}

bool odd(long n) { return (n % 2) != 0; }

}  // namespace

ExactInt ExactInt::from_string(std::string_view s) {
  std::string_view digits = s;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty()) throw std::invalid_argument("ExactInt: empty string");
  Big v = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("ExactInt: bad digit in '" + std::string(s) + "'");
    }
    v = v * 10 + (c - '0');
  }
  if (negative) v = -v;
  return ExactInt(std::move(v));
}

std::string ExactInt::to_string() const { return v_.str(); }

double ExactInt::to_double() const {
  // strtod is correctly rounded; the decimal string is exact.
  const std::string s = v_.str();
  errno = 0;
  return std::strtod(s.c_str(), nullptr);
}

ExactInt fib(long n) {
  check_index(n, "fib");
  const unsigned long k = static_cast<unsigned long>(n < 0 ? -n : n);
  Big f = fib_pair(k).first;
  // F_{-n} = (-1)^{n-1} F_n
  if (n < 0 && !odd(n)) f = -f;
  return ExactInt(std::move(f));
}

ExactInt lucas(long n) {
  check_index(n, "lucas");
  const unsigned long k = static_cast<unsigned long>(n < 0 ? -n : n);
  auto [a, b] = fib_pair(k);
  Big l = 2 * b - a;  // L_k = F_{k-1} + F_{k+1} = 2F_{k+1} - F_k
  // L_{-n} = (-1)^n L_n
  if (n < 0 && odd(n)) l = -l;
  return ExactInt(std::move(l));
}

double fib_d(long n) { return fib(n).to_double(); }
double lucas_d(long n) { return lucas(n).to_double(); }

GoldenPair golden_powers(long r) {
  if (r > kMaxGoldenIndex || r < -kMaxGoldenIndex) {
    throw IndexOutOfRange("golden_powers: index " + std::to_string(r) + " outside [-" +
                          std::to_string(kMaxGoldenIndex) + ", " +
                          std::to_string(kMaxGoldenIndex) + "]");
  }
  const long m = r < 0 ? -r : r;
  const double sign = odd(m) ? -1.0 : 1.0;
  // alpha^m = (L_m + F_m sqrt5) / 2, both terms non-negative for m >= 0.
  const double big = (lucas_d(m) + fib_d(m) * std::sqrt(5.0)) / 2.0;
  // beta^m = (-1)^m / alpha^m since alpha * beta = -1.
  const double small = sign / big;
  if (r >= 0) return {big, small};
  // alpha^{-m} = (-beta)^m = (-1)^m beta^m, beta^{-m} = (-alpha)^m.
  return {sign * small, sign * big};
}

}  // namespace fibint
