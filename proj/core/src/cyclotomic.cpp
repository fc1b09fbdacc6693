#include "bredon/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bredon {

namespace {

using Poly = std::vector<Rational>;  // dense, index = power

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a modulo the monic polynomial m.
Poly poly_mod(Poly a, const Poly& m) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    Rational lead = a.back();
    std::size_t shift = a.size() - 1 - dm;
    if (lead != 0)
      for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] -= lead * m[i];
    a.pop_back();
    trim(a);
    if (a.size() <= dm) break;
  }
  a.resize(dm, Rational(0));
  return a;
}

// Exact division q = a / b for monic b dividing a.
Poly poly_div_exact(Poly a, const Poly& b) {
  trim(a);
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational lead = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = lead;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
    trim(a);
  }
  if (!a.empty()) throw std::logic_error("poly_div_exact: nonzero remainder");
  return q;
}

const Poly& cyclotomic_polynomial(long n) {
  static std::map<long, Poly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  Poly num(n + 1, Rational(0));
  num[0] = -1;
  num[n] = 1;
  for (long d : divisors(n)) {
    if (d == n) continue;
    auto jt = cache.find(d);
    if (jt == cache.end()) {
      // fill recursively (divisors are ascending, so plain recursion is shallow)
      Poly nd(d + 1, Rational(0));
      nd[0] = -1;
      nd[d] = 1;
      for (long e : divisors(d))
        if (e != d) nd = poly_div_exact(nd, cache.at(e));
      jt = cache.emplace(d, std::move(nd)).first;
    }
    num = poly_div_exact(num, jt->second);
  }
  return cache.emplace(n, std::move(num)).first->second;
}

// Solves sum_j c_j basis_j = target over Q; basis vectors all of length dim.
bool solve_linear(const std::vector<Poly>& basis, const Poly& target, Poly& out) {
  const std::size_t dim = target.size();
  const std::size_t k = basis.size();
  // augmented matrix dim x (k+1)
  std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(k + 1, Rational(0)));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < basis[j].size(); ++i) m[i][j] = basis[j][i];
  for (std::size_t i = 0; i < dim; ++i) m[i][k] = target[i];

  std::vector<long> pivot_col(dim, -1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < k && row < dim; ++col) {
    std::size_t p = row;
    while (p < dim && m[p][col] == 0) ++p;
    if (p == dim) continue;
    std::swap(m[p], m[row]);
    for (std::size_t i = 0; i < dim; ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rational f = m[i][col] / m[row][col];
      for (std::size_t j = col; j <= k; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_col[row] = static_cast<long>(col);
    ++row;
  }
  for (std::size_t i = row; i < dim; ++i)
    if (m[i][k] != 0) return false;  // inconsistent: not in the subfield
  out.assign(k, Rational(0));
  for (std::size_t i = 0; i < row; ++i)
    out[static_cast<std::size_t>(pivot_col[i])] = m[i][k] / m[i][static_cast<std::size_t>(pivot_col[i])];
  return true;
}

}  // namespace

Cyclotomic Cyclotomic::canonical(long n, std::vector<Rational> powers) {
  powers.resize(std::max<std::size_t>(powers.size(), 1), Rational(0));
  Poly reduced = poly_mod(std::move(powers), cyclotomic_polynomial(n));
  // reduced has length phi(n)
  const long phi_n = static_cast<long>(reduced.size());
  if (n == 1) return Cyclotomic(1, {reduced.empty() ? Rational(0) : reduced[0]});
  (void)phi_n;
  for (long m : divisors(n)) {
    if (m == n) break;
    // basis of Q(zeta_m) inside Q(zeta_n): zeta_n^{(n/m) j}, reduced
    const long phim = totient(m);
    std::vector<Poly> basis;
    basis.reserve(phim);
    for (long j = 0; j < phim; ++j) {
      Poly pj(static_cast<std::size_t>((n / m) * j) + 1, Rational(0));
      pj.back() = 1;
      basis.push_back(poly_mod(std::move(pj), cyclotomic_polynomial(n)));
      basis.back().resize(reduced.size(), Rational(0));
    }
    Poly coeffs;
    if (solve_linear(basis, reduced, coeffs)) {
      if (m == 1) return Cyclotomic(1, {coeffs[0]});
      return Cyclotomic(m, std::move(coeffs));
    }
  }
  return Cyclotomic(n, std::move(reduced));
}

Cyclotomic Cyclotomic::root_of_unity(long n, long k) {
  if (n < 1) throw std::invalid_argument("root_of_unity: modulus must be positive");
  k %= n;
  if (k < 0) k += n;
  Poly p(static_cast<std::size_t>(k) + 1, Rational(0));
  p[static_cast<std::size_t>(k)] = 1;
  return canonical(n, std::move(p));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& rhs) const {
  long l = std::lcm(conductor_, rhs.conductor_);
  Poly sum(static_cast<std::size_t>(l), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    sum[i * static_cast<std::size_t>(l / conductor_)] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    sum[i * static_cast<std::size_t>(l / rhs.conductor_)] += rhs.coeffs_[i];
  return canonical(l, std::move(sum));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& rhs) const { return *this + (-rhs); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& rhs) const {
  long l = std::lcm(conductor_, rhs.conductor_);
  std::size_t sa = static_cast<std::size_t>(l / conductor_);
  std::size_t sb = static_cast<std::size_t>(l / rhs.conductor_);
  Poly prod((coeffs_.size() - 1) * sa + (rhs.coeffs_.size() - 1) * sb + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      prod[i * sa + j * sb] += coeffs_[i] * rhs.coeffs_[j];
  }
  return canonical(l, std::move(prod));
}

Cyclotomic Cyclotomic::scaled(const Rational& r) const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c *= r;
  if (r == 0) return Cyclotomic();
  return out;
}

Cyclotomic Cyclotomic::galois(long a) const {
  long n = conductor_;
  a %= n;
  if (a < 0) a += n;
  if (n == 1) return *this;
  if (std::gcd(a, n) != 1) throw std::invalid_argument("galois: exponent not prime to conductor");
  Poly p(static_cast<std::size_t>(n), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    p[static_cast<std::size_t>((static_cast<long>(i) * a) % n)] += coeffs_[i];
  return canonical(n, std::move(p));
}

bool Cyclotomic::is_integer() const {
  return conductor_ == 1 && boost::multiprecision::denominator(coeffs_[0]) == 1;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::logic_error("cyclotomic value is irrational");
  return coeffs_[0];
}

Integer Cyclotomic::integer_value() const {
  if (!is_integer()) throw std::logic_error("cyclotomic value is not an integer");
  return boost::multiprecision::numerator(coeffs_[0]);
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ != b.conductor_) return a.conductor_ < b.conductor_ ? -1 : 1;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] > b.coeffs_[i] ? -1 : 1;
  }
  return 0;
}

std::string Cyclotomic::str() const {
  if (is_rational()) {
    std::ostringstream os;
    os << coeffs_[0];
    return os.str();
  }
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    Rational c = coeffs_[i];
    if (!first) {
      os << (c > 0 ? "+" : "-");
      if (c < 0) c = -c;
    } else if (c < 0) {
      os << "-";
      c = -c;
    }
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    os << "z" << conductor_;
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace bredon
