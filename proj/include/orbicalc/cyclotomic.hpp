#pragma once

#include <complex>
#include <string>
#include <vector>

#include "orbicalc/rational.hpp"

namespace orbicalc {

/// Euler's totient.
int totient(int n);

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(int n);

/// An exact element of the cyclotomic field Q(zeta_n).
///
/// Stored in the power basis 1, z, ..., z^(phi(n)-1) of Q(z), z = exp(2 pi i / n),
/// which makes the representation canonical for a fixed conductor. Values with
/// different conductors are lifted to the lcm before any binary operation, so
/// equality and ordering are independent of the conductor a value happens to carry.
class Cyclotomic {
 public:
  Cyclotomic() : n_(1), c_{Rational(0)} {}
  Cyclotomic(long v) : n_(1), c_{Rational(v)} {}  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& q) : n_(1), c_{q} {}  // NOLINT(google-explicit-constructor)

  /// zeta_n^k.
  static Cyclotomic root_of_unity(int n, long k = 1);

  /// Builds sum_i coeffs[i] * zeta_n^i for arbitrary length (reduced on construction).
  static Cyclotomic from_powers(int n, const std::vector<Rational>& coeffs);

  int conductor() const { return n_; }
  const std::vector<Rational>& coefficients() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Requires is_rational().
  Rational to_rational() const;
  bool is_real() const;

  /// The Galois automorphism zeta -> zeta^k (gcd(k, conductor) = 1).
  Cyclotomic galois(long k) const;
  Cyclotomic conj() const { return galois(-1); }
  /// Field norm down to Q.
  Rational norm() const;
  /// Throws std::domain_error on zero.
  Cyclotomic inverse() const;

  /// Re-expresses the value over Q(zeta_m); requires conductor() | m.
  Cyclotomic lifted(int m) const;

  std::complex<double> to_complex() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }
  Cyclotomic operator-() const;

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Total order: coefficient vectors compared lexicographically at the common
  /// conductor. Arbitrary but deterministic; used only for canonical sorting.
  friend int compare(const Cyclotomic& a, const Cyclotomic& b);

  /// Human/JSON form, e.g. "3", "-1/2", "-1-E(3)", "E(5)+E(5)^4" (E(n) = zeta_n).
  std::string to_string() const;

 private:
  Cyclotomic(int n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}
  void reduce_from_cyclic(std::vector<Rational>& cyclic);

  int n_;
  std::vector<Rational> c_;
};

inline std::string to_string(const Cyclotomic& x) { return x.to_string(); }

}  // namespace orbicalc
