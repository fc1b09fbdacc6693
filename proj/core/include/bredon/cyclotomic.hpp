#ifndef BREDON_CYCLOTOMIC_HPP
#define BREDON_CYCLOTOMIC_HPP

#include <string>
#include <vector>

#include "bredon/numeric.hpp"

namespace bredon {

// An element of the cyclotomic field Q(zeta_n), kept in canonical form: the
// conductor is the smallest divisor m of the construction modulus with the
// value inside Q(zeta_m), and coefficients live on the power basis
// 1, zeta_m, ..., zeta_m^(phi(m)-1). Canonical form makes equality a plain
// coefficient comparison.
class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coeffs_{Rational(0)} {}
  Cyclotomic(const Rational& r) : conductor_(1), coeffs_{r} {}  // NOLINT(implicit)
  Cyclotomic(const Integer& n) : conductor_(1), coeffs_{Rational(n)} {}  // NOLINT
  Cyclotomic(long n) : conductor_(1), coeffs_{Rational(n)} {}  // NOLINT
  Cyclotomic(int n) : conductor_(1), coeffs_{Rational(n)} {}  // NOLINT

  // zeta_n^k
  static Cyclotomic root_of_unity(long n, long k);

  Cyclotomic operator+(const Cyclotomic& rhs) const;
  Cyclotomic operator-(const Cyclotomic& rhs) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& rhs) const;
  Cyclotomic& operator+=(const Cyclotomic& rhs) { return *this = *this + rhs; }
  Cyclotomic& operator-=(const Cyclotomic& rhs) { return *this = *this - rhs; }
  Cyclotomic& operator*=(const Cyclotomic& rhs) { return *this = *this * rhs; }
  Cyclotomic scaled(const Rational& r) const;

  // Galois action zeta -> zeta^a; a must be prime to the conductor.
  Cyclotomic galois(long a) const;
  Cyclotomic conjugate() const { return galois(-1); }

  bool operator==(const Cyclotomic& rhs) const {
    return conductor_ == rhs.conductor_ && coeffs_ == rhs.coeffs_;
  }
  bool operator!=(const Cyclotomic& rhs) const { return !(*this == rhs); }

  bool is_zero() const { return conductor_ == 1 && coeffs_[0] == 0; }
  bool is_rational() const { return conductor_ == 1; }
  bool is_integer() const;
  Rational rational_value() const;  // requires is_rational()
  Integer integer_value() const;    // requires is_integer()

  long conductor() const { return conductor_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  // Deterministic total order used to fix character orderings: lower
  // conductor first, then the larger coefficient at the first difference.
  static int compare(const Cyclotomic& a, const Cyclotomic& b);

  std::string str() const;

 private:
  Cyclotomic(long conductor, std::vector<Rational> coeffs)
      : conductor_(conductor), coeffs_(std::move(coeffs)) {}
  static Cyclotomic canonical(long n, std::vector<Rational> powers);

  long conductor_;
  std::vector<Rational> coeffs_;
};

}  // namespace bredon

#endif
