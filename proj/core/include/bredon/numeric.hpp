#ifndef BREDON_NUMERIC_HPP
#define BREDON_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <vector>

namespace bredon {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer abs_int(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline Integer gcd_int(Integer a, Integer b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Integer t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline Integer lcm_int(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs_int(a / gcd_int(a, b) * b);
}

// Euler totient and divisor lists for the small moduli used by cyclotomics.
long totient(long n);
std::vector<long> divisors(long n);
std::vector<long> prime_factors(long n);  // distinct primes

// 64-bit FNV-1a, used for input hashes and cache keys.
std::uint64_t fnv1a64(const void* data, std::size_t len);

}  // namespace bredon

#endif
