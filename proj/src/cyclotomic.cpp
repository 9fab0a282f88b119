#include "orbicalc/cyclotomic.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace orbicalc {

int totient(int n) {
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

std::vector<long> compute_cyclotomic_polynomial(int n) {
  // x^n - 1 divided by every Phi_d with d | n, d < n.
  std::vector<long> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& div = cyclotomic_polynomial(d);
    const int dd = static_cast<int>(div.size()) - 1;
    const int deg = static_cast<int>(poly.size()) - 1;
    std::vector<long> quot(deg - dd + 1, 0);
    for (int i = deg; i >= dd; --i) {
      const long c = poly[i];
      quot[i - dd] = c;
      if (c == 0) continue;
      for (int j = 0; j <= dd; ++j) poly[i - dd + j] -= c * div[j];
    }
    poly = std::move(quot);
  }
  return poly;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  thread_local std::unordered_map<int, std::vector<long>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto poly = compute_cyclotomic_polynomial(n);
  return cache.emplace(n, std::move(poly)).first->second;
}

void Cyclotomic::reduce_from_cyclic(std::vector<Rational>& a) {
  const auto& phi_poly = cyclotomic_polynomial(n_);
  const int phi = static_cast<int>(phi_poly.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= phi; --i) {
    if (sgn(a[i]) == 0) continue;
    const Rational c = a[i];
    for (int j = 0; j <= phi; ++j) {
      if (phi_poly[j] != 0) a[i - phi + j] -= c * phi_poly[j];
    }
  }
  a.resize(phi);
  c_ = std::move(a);
}

Cyclotomic Cyclotomic::root_of_unity(int n, long k) {
  if (n < 1) throw std::invalid_argument("root_of_unity: n must be positive");
  std::vector<Rational> cyclic(n, Rational(0));
  cyclic[((k % n) + n) % n] = 1;
  Cyclotomic out(n, {});
  out.reduce_from_cyclic(cyclic);
  return out;
}

Cyclotomic Cyclotomic::from_powers(int n, const std::vector<Rational>& coeffs) {
  std::vector<Rational> cyclic(n, Rational(0));
  for (std::size_t i = 0; i < coeffs.size(); ++i) cyclic[i % n] += coeffs[i];
  Cyclotomic out(n, {});
  out.reduce_from_cyclic(cyclic);
  return out;
}

bool Cyclotomic::is_zero() const {
  for (const auto& q : c_)
    if (sgn(q) != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

Rational Cyclotomic::to_rational() const {
  if (!is_rational()) throw std::domain_error("Cyclotomic::to_rational: value is irrational");
  return c_[0];
}

bool Cyclotomic::is_real() const { return *this == conj(); }

Cyclotomic Cyclotomic::lifted(int m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) throw std::invalid_argument("Cyclotomic::lifted: conductor must divide target");
  const int step = m / n_;
  std::vector<Rational> cyclic(m, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) cyclic[i * step] = c_[i];
  Cyclotomic out(m, {});
  out.reduce_from_cyclic(cyclic);
  return out;
}

namespace {

int common_conductor(int a, int b) { return std::lcm(a, b); }

}  // namespace

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (n_ == o.n_) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  const int m = common_conductor(n_, o.n_);
  *this = lifted(m);
  const Cyclotomic rhs = o.lifted(m);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (n_ == o.n_) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  const int m = common_conductor(n_, o.n_);
  *this = lifted(m);
  const Cyclotomic rhs = o.lifted(m);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.n_ == 1) {
    for (auto& q : c_) q *= o.c_[0];
    return *this;
  }
  if (n_ == 1) {
    const Rational s = c_[0];
    *this = o;
    for (auto& q : c_) q *= s;
    return *this;
  }
  const int m = common_conductor(n_, o.n_);
  const Cyclotomic a = lifted(m);
  const Cyclotomic b = o.lifted(m);
  std::vector<Rational> cyclic(m, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (sgn(b.c_[j]) == 0) continue;
      cyclic[(i + j) % m] += a.c_[i] * b.c_[j];
    }
  }
  n_ = m;
  reduce_from_cyclic(cyclic);
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& q : out.c_) q = -q;
  return out;
}

Cyclotomic Cyclotomic::galois(long k) const {
  if (n_ <= 2) return *this;
  const long kk = ((k % n_) + n_) % n_;
  if (std::gcd(kk, static_cast<long>(n_)) != 1)
    throw std::invalid_argument("Cyclotomic::galois: exponent not coprime to conductor");
  std::vector<Rational> cyclic(n_, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    cyclic[(static_cast<long>(i) * kk) % n_] += c_[i];
  }
  Cyclotomic out(n_, {});
  out.reduce_from_cyclic(cyclic);
  return out;
}

Rational Cyclotomic::norm() const {
  Cyclotomic prod(1L);
  for (int k = 1; k < std::max(n_, 2); ++k) {
    if (std::gcd(k, n_) == 1) prod *= galois(k);
  }
  return prod.to_rational();
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("Cyclotomic::inverse: division by zero");
  if (n_ == 1) return Cyclotomic(Rational(1) / c_[0]);
  Cyclotomic others(1L);
  for (int k = 2; k < n_; ++k) {
    if (std::gcd(k, n_) == 1) others *= galois(k);
  }
  const Cyclotomic full = others * *this;
  const Rational nrm = full.to_rational();
  for (auto& q : others.c_) q /= nrm;
  return others;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / n_;
    acc += c_[i].get_d() * std::polar(1.0, angle);
  }
  return acc;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  const int m = std::lcm(a.n_, b.n_);
  return a.lifted(m).c_ == b.lifted(m).c_;
}

int compare(const Cyclotomic& a, const Cyclotomic& b) {
  const int m = std::lcm(a.n_, b.n_);
  const Cyclotomic x = a.lifted(m);
  const Cyclotomic y = b.lifted(m);
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    const int s = cmp(x.c_[i], y.c_[i]);
    if (s != 0) return s < 0 ? -1 : 1;
  }
  return 0;
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return orbicalc::to_string(c_[0]);
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& q = c_[i];
    if (sgn(q) == 0) continue;
    const bool negative = sgn(q) < 0;
    const Rational mag = abs(q);
    if (negative) {
      out << '-';
    } else if (!first) {
      out << '+';
    }
    first = false;
    if (i == 0) {
      out << orbicalc::to_string(mag);
      continue;
    }
    if (mag != 1) out << orbicalc::to_string(mag) << '*';
    out << "E(" << n_ << ')';
    if (i > 1) out << '^' << i;
  }
  return out.str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  for (char ch : text) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/' || ch == '+'))
      throw std::invalid_argument("malformed rational '" + text + "'");
  }
  try {
    Rational q(text[0] == '+' ? text.substr(1) : text, 10);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
}

}  // namespace orbicalc
