#include "trifold/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "trifold/error.hpp"

namespace trifold {

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// Exact division of integer polynomials, remainder must vanish.
std::vector<long long> poly_div(const std::vector<long long>& num,
                                const std::vector<long long>& den) {
  std::vector<long long> rem = num;
  std::vector<long long> quot(num.size() - den.size() + 1, 0);
  for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
    long long c = rem[i + den.size() - 1] / den.back();
    quot[i] = c;
    for (size_t j = 0; j < den.size(); ++j) rem[i + j] -= c * den[j];
  }
  for (long long r : rem)
    if (r != 0) throw Error("inexact cyclotomic polynomial division");
  return quot;
}

struct FieldContext {
  int n = 1;
  int degree = 1;
  std::vector<long long> phi;                     // cyclotomic polynomial
  std::vector<std::vector<Rational>> power_rows;  // z^j for j in [degree, n)
};

const FieldContext& context(int n);

std::vector<long long> compute_phi(int n) {
  if (n == 1) return {-1, 1};
  std::vector<long long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  std::vector<long long> acc = num;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) acc = poly_div(acc, context(d).phi);
  return acc;
}

std::mutex ctx_mutex;
std::map<int, FieldContext>* ctx_cache = nullptr;

const FieldContext& context(int n) {
  // compute_phi re-enters via the cache, so the lock is per lookup.
  {
    std::lock_guard<std::mutex> lock(ctx_mutex);
    if (!ctx_cache) ctx_cache = new std::map<int, FieldContext>();
    auto it = ctx_cache->find(n);
    if (it != ctx_cache->end()) return it->second;
  }
  FieldContext c;
  c.n = n;
  c.phi = compute_phi(n);
  c.degree = static_cast<int>(c.phi.size()) - 1;
  // z^j in the power basis, built upward from z^degree.
  std::vector<Rational> cur(c.degree);
  for (int i = 0; i < c.degree; ++i) cur[i] = Rational(-c.phi[i]);
  for (int j = c.degree; j < n; ++j) {
    c.power_rows.push_back(cur);
    // multiply by z: shift, then reduce the overflow coefficient
    Rational top = cur[c.degree - 1];
    for (int i = c.degree - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = Rational(0);
    if (!top.is_zero())
      for (int i = 0; i < c.degree; ++i) cur[i] += top * Rational(-c.phi[i]);
  }
  std::lock_guard<std::mutex> lock(ctx_mutex);
  auto [it, inserted] = ctx_cache->emplace(n, std::move(c));
  (void)inserted;
  return it->second;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(int n) { return context(n).phi; }

Cyclotomic Cyclotomic::from_powers(int n, std::vector<Rational> powers) {
  const auto& ctx = context(n);
  std::vector<Rational> out(ctx.degree);
  for (int j = 0; j < n && j < static_cast<int>(powers.size()); ++j) {
    if (powers[j].is_zero()) continue;
    if (j < ctx.degree) {
      out[j] += powers[j];
    } else {
      const auto& row = ctx.power_rows[j - ctx.degree];
      for (int i = 0; i < ctx.degree; ++i) out[i] += powers[j] * row[i];
    }
  }
  return Cyclotomic(n, std::move(out));
}

Cyclotomic Cyclotomic::root_of_unity(int n, long long k) {
  if (n <= 0) throw Error("conductor must be positive");
  k %= n;
  if (k < 0) k += n;
  std::vector<Rational> powers(n);
  powers[static_cast<size_t>(k)] = Rational(1);
  return from_powers(n, std::move(powers));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeff_)
    if (!c.is_zero()) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < coeff_.size(); ++i)
    if (!coeff_[i].is_zero()) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw Error("cyclotomic value is not rational: " + str());
  return coeff_[0];
}

Cyclotomic Cyclotomic::promoted(int m) const {
  if (m == conductor_) return *this;
  if (m % conductor_ != 0) throw Error("conductor does not divide target");
  const int step = m / conductor_;
  std::vector<Rational> powers(m);
  for (size_t k = 0; k < coeff_.size(); ++k)
    powers[k * step] += coeff_[k];
  return from_powers(m, std::move(powers));
}

namespace {
int common_conductor(const Cyclotomic& a, const Cyclotomic& b) {
  return static_cast<int>(std::lcm(a.conductor(), b.conductor()));
}
}  // namespace

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  int m = common_conductor(a, b);
  Cyclotomic x = a.promoted(m), y = b.promoted(m);
  for (size_t i = 0; i < x.coeff_.size(); ++i) x.coeff_[i] += y.coeff_[i];
  return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeff_) c = -c;
  return r;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  int m = common_conductor(a, b);
  Cyclotomic x = a.promoted(m), y = b.promoted(m);
  std::vector<Rational> powers(m);
  for (size_t i = 0; i < x.coeff_.size(); ++i) {
    if (x.coeff_[i].is_zero()) continue;
    for (size_t j = 0; j < y.coeff_.size(); ++j) {
      if (y.coeff_[j].is_zero()) continue;
      powers[(i + j) % m] += x.coeff_[i] * y.coeff_[j];
    }
  }
  return Cyclotomic::from_powers(m, std::move(powers));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error("cyclotomic division by zero");
  if (is_rational()) return Cyclotomic(Rational(1) / coeff_[0]);
  // Extended Euclid of this element (as a polynomial) against Phi_N over Q.
  const auto& phi_int = cyclotomic_polynomial(conductor_);
  std::vector<Rational> r0(phi_int.size());
  for (size_t i = 0; i < phi_int.size(); ++i) r0[i] = Rational(phi_int[i]);
  std::vector<Rational> r1 = coeff_;
  auto trim = [](std::vector<Rational>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
  };
  trim(r1);
  std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};  // cofactors of *this
  while (true) {
    trim(r1);
    if (r1.empty()) throw Error("element not invertible");
    if (r1.size() == 1) break;
    std::vector<Rational> q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0);
    std::vector<Rational> rem = r0;
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
      if (rem.size() < r1.size() + i) continue;
      Rational c = rem[i + r1.size() - 1] / r1.back();
      q[i] = c;
      for (size_t j = 0; j < r1.size(); ++j) rem[i + j] -= c * r1[j];
    }
    trim(rem);
    std::vector<Rational> s2(std::max(s0.size(), q.size() + s1.size()), Rational(0));
    for (size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
    for (size_t i = 0; i < q.size(); ++i)
      for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  std::vector<Rational> powers(conductor_);
  for (size_t i = 0; i < s1.size() && i < powers.size(); ++i)
    powers[i] = s1[i] / r1[0];
  return from_powers(conductor_, std::move(powers));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
  int m = common_conductor(a, b);
  return a.promoted(m) * b.promoted(m).inverse();
}

Cyclotomic Cyclotomic::conjugate() const {
  std::vector<Rational> powers(conductor_);
  powers[0] = coeff_[0];
  for (size_t k = 1; k < coeff_.size(); ++k)
    powers[conductor_ - k] += coeff_[k];
  return from_powers(conductor_, std::move(powers));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  int m = common_conductor(a, b);
  return a.promoted(m).coefficients() == b.promoted(m).coefficients();
}

bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
  int m = common_conductor(a, b);
  Cyclotomic pa = a.promoted(m), pb = b.promoted(m);
  const auto& x = pa.coefficients();
  const auto& y = pb.coefficients();
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] != y[i]) return x[i] < y[i];
  }
  return false;
}

std::complex<long double> Cyclotomic::to_complex() const {
  const long double tau = 2.0L * 3.14159265358979323846264338327950288L;
  std::complex<long double> acc(0, 0);
  for (size_t k = 0; k < coeff_.size(); ++k) {
    if (coeff_[k].is_zero()) continue;
    long double ang = tau * static_cast<long double>(k) / conductor_;
    acc += coeff_[k].to_double() *
           std::complex<long double>(std::cos(ang), std::sin(ang));
  }
  return acc;
}

std::string Cyclotomic::str() const {
  if (is_rational()) return coeff_[0].str();
  std::string out;
  for (size_t k = 0; k < coeff_.size(); ++k) {
    if (coeff_[k].is_zero()) continue;
    if (!out.empty()) out += "+";
    out += coeff_[k].str();
    if (k > 0) out += "*z" + std::to_string(conductor_) + "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace trifold
