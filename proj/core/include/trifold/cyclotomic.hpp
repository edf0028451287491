#pragma once

#include <complex>
#include <string>
#include <vector>

#include "trifold/rational.hpp"

namespace trifold {

// Element of the N-th cyclotomic field, stored in the power basis
// 1, z, ..., z^(phi(N)-1) with z = exp(2*pi*i/N), reduced modulo the
// N-th cyclotomic polynomial. Arithmetic is exact; mixed conductors are
// promoted to the lcm automatically.
class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coeff_(1) {}
  explicit Cyclotomic(const Rational& r) : conductor_(1), coeff_{r} {}
  Cyclotomic(long long n) : Cyclotomic(Rational(n)) {}  // NOLINT

  static Cyclotomic root_of_unity(int n, long long k);

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coefficients() const { return coeff_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // throws if not rational

  Cyclotomic promoted(int m) const;  // conductor_ must divide m

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  Cyclotomic conjugate() const;
  Cyclotomic real_part() const { return (*this + conjugate()) / Cyclotomic(2); }
  Cyclotomic inverse() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }
  // Total order used only for deterministic output; promotes to a common
  // conductor and compares coefficient vectors lexicographically.
  friend bool operator<(const Cyclotomic& a, const Cyclotomic& b);

  std::complex<long double> to_complex() const;
  std::string str() const;

 private:
  Cyclotomic(int conductor, std::vector<Rational> coeff)
      : conductor_(conductor), coeff_(std::move(coeff)) {}
  static Cyclotomic from_powers(int n, std::vector<Rational> powers);

  int conductor_;
  std::vector<Rational> coeff_;
};

// Integer coefficients of the n-th cyclotomic polynomial (degree phi(n)),
// constant term first, leading coefficient included.
const std::vector<long long>& cyclotomic_polynomial(int n);

int euler_phi(int n);

}  // namespace trifold
