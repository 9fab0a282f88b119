#include "orbicalc/character.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "orbicalc/errors.hpp"

namespace orbicalc {

namespace {

using Vec = std::vector<long>;
using Mat = std::vector<Vec>;

long mod(long a, long p) {
  a %= p;
  return a < 0 ? a + p : a;
}

long pow_mod(long b, long e, long p) {
  long r = 1;
  b = mod(b, p);
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

long inv_mod(long a, long p) { return pow_mod(a, p - 2, p); }

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long primitive_root(long p) {
  std::vector<long> factors;
  long m = p - 1;
  for (long q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      factors.push_back(q);
      while (m % q == 0) m /= q;
    }
  if (m > 1) factors.push_back(m);
  for (long g = 2; g < p; ++g) {
    bool ok = true;
    for (long q : factors)
      if (pow_mod(g, (p - 1) / q, p) == 1) ok = false;
    if (ok) return g;
  }
  return 1;  // p = 2
}

// Rows of m brought to reduced echelon form mod p; zero rows dropped.
Mat row_reduce(Mat m, long p, std::vector<std::size_t>* pivots = nullptr) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  std::size_t row = 0;
  std::vector<std::size_t> piv;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t r = row;
    while (r < m.size() && m[r][c] == 0) ++r;
    if (r == m.size()) continue;
    std::swap(m[r], m[row]);
    const long inv = inv_mod(m[row][c], p);
    for (auto& x : m[row]) x = x * inv % p;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k == row || m[k][c] == 0) continue;
      const long f = m[k][c];
      for (std::size_t j = 0; j < cols; ++j) m[k][j] = mod(m[k][j] - f * m[row][j], p);
    }
    piv.push_back(c);
    ++row;
  }
  m.resize(row);
  if (pivots) *pivots = std::move(piv);
  return m;
}

// Basis of {x : a x = 0} as row vectors.
Mat kernel(const Mat& a, long p) {
  const std::size_t n = a.empty() ? 0 : a[0].size();
  std::vector<std::size_t> piv;
  const Mat r = row_reduce(a, p, &piv);
  std::vector<bool> is_piv(n, false);
  for (auto c : piv) is_piv[c] = true;
  Mat out;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    Vec v(n, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = mod(-r[i][f], p);
    out.push_back(std::move(v));
  }
  return out;
}

// Splits the invariant subspace spanned by the rows of `basis` (reduced echelon form)
// into eigenspaces of m.
std::vector<Mat> split(const Mat& basis, const Mat& m, long p) {
  const std::size_t dim = basis.size();
  const std::size_t r = m.size();
  std::vector<std::size_t> piv;
  row_reduce(basis, p, &piv);
  // Coordinates of m b_t in the basis are its entries at the pivot columns.
  Mat a(dim, Vec(dim, 0));
  for (std::size_t t = 0; t < dim; ++t) {
    Vec img(r, 0);
    for (std::size_t j = 0; j < r; ++j) {
      long acc = 0;
      for (std::size_t k = 0; k < r; ++k) acc = (acc + m[j][k] * basis[t][k]) % p;
      img[j] = acc;
    }
    for (std::size_t s = 0; s < dim; ++s) a[s][t] = img[piv[s]];
  }
  std::vector<Mat> out;
  std::size_t found = 0;
  for (long lambda = 0; lambda < p && found < dim; ++lambda) {
    Mat shifted = a;
    for (std::size_t s = 0; s < dim; ++s) shifted[s][s] = mod(shifted[s][s] - lambda, p);
    const Mat coords = kernel(shifted, p);
    if (coords.empty()) continue;
    Mat vecs;
    for (const auto& c : coords) {
      Vec v(r, 0);
      for (std::size_t t = 0; t < dim; ++t)
        for (std::size_t k = 0; k < r; ++k) v[k] = (v[k] + c[t] * basis[t][k]) % p;
      vecs.push_back(std::move(v));
    }
    found += vecs.size();
    out.push_back(row_reduce(std::move(vecs), p));
  }
  if (found != dim) return {basis};  // not diagonalizable here; leave for the next class matrix
  return out;
}

}  // namespace

CharacterTable character_table(const FiniteGroup& g) {
  CharacterTable t;
  const int n = g.order();
  const auto& classes = g.classes();
  const std::size_t r = classes.size();
  t.group_order = n;
  t.exponent = g.exponent();
  for (const auto& cls : classes) {
    t.class_reps.push_back(*std::min_element(cls.begin(), cls.end()));
    t.class_sizes.push_back(static_cast<int>(cls.size()));
  }
  for (std::size_t j = 0; j < r; ++j) {
    const int x = t.class_reps[j];
    t.inverse_class.push_back(g.class_of(g.inv(x)));
    t.square_class.push_back(g.class_of(g.mul(x, x)));
  }

  const long e = t.exponent;
  long p = e + 1;
  while (!is_prime(p) || static_cast<double>(p) <= 2.0 * std::sqrt(static_cast<double>(n))) p += e;

  // (M_i)_{jk} = #{x in C_i : x^-1 g_k in C_j}
  std::vector<Mat> class_mats(r, Mat(r, Vec(r, 0)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k)
      for (int x : classes[i]) ++class_mats[i][g.class_of(g.mul(g.inv(x), t.class_reps[k]))][k];

  std::vector<Mat> spaces;
  {
    Mat id(r, Vec(r, 0));
    for (std::size_t i = 0; i < r; ++i) id[i][i] = 1;
    spaces.push_back(std::move(id));
  }
  for (std::size_t i = 1; i < r; ++i) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Mat& s) { return s.size() == 1; })) break;
    std::vector<Mat> next;
    for (const auto& s : spaces) {
      if (s.size() == 1) {
        next.push_back(s);
        continue;
      }
      for (auto& piece : split(s, class_mats[i], p)) next.push_back(std::move(piece));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) throw InternalError("character_table: eigenspaces failed to separate characters");

  const long z_e = pow_mod(primitive_root(p), (p - 1) / e, p);
  struct Row {
    int degree;
    std::vector<Cyclotomic> values;
  };
  std::vector<Row> rows;
  for (const auto& s : spaces) {
    Vec w = s[0];
    if (w[0] == 0) throw InternalError("character_table: eigenvector vanishes at the identity class");
    const long scale = inv_mod(w[0], p);
    for (auto& x : w) x = x * scale % p;

    long denom = 0;
    for (std::size_t j = 0; j < r; ++j)
      denom = (denom + w[j] * w[t.inverse_class[j]] % p * inv_mod(t.class_sizes[j], p)) % p;
    const long d2 = mod(n * inv_mod(denom, p), p);
    int degree = 0;
    for (int d = 1; d * d <= n; ++d)
      if (static_cast<long>(d) * d % p == d2) degree = d;
    if (degree == 0) throw InternalError("character_table: no integer degree lifts the residue");

    Vec chi_p(r);
    for (std::size_t j = 0; j < r; ++j) chi_p[j] = w[j] * degree % p * inv_mod(t.class_sizes[j], p) % p;

    Row row{degree, {}};
    for (std::size_t j = 0; j < r; ++j) {
      const int x = t.class_reps[j];
      const int o = g.element_order(x);
      const long z = pow_mod(z_e, e / o, p);
      std::vector<Rational> coeffs(o);
      for (int l = 0; l < o; ++l) {
        long acc = 0;
        for (int k = 0; k < o; ++k)
          acc = (acc + chi_p[g.class_of(g.power(x, k))] * pow_mod(z, mod(-static_cast<long>(l) * k, o), p)) % p;
        const long m = acc * inv_mod(o, p) % p;
        if (m > degree) throw InternalError("character_table: eigenvalue multiplicity out of range");
        coeffs[l] = m;
      }
      row.values.push_back(Cyclotomic::from_powers(o, coeffs));
    }
    rows.push_back(std::move(row));
  }

  auto is_trivial = [](const Row& row) {
    return std::all_of(row.values.begin(), row.values.end(), [](const Cyclotomic& v) { return v == Cyclotomic(1); });
  };
  std::sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
    const bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    if (a.degree != b.degree) return a.degree < b.degree;
    for (std::size_t j = 0; j < a.values.size(); ++j) {
      const int c = compare(a.values[j], b.values[j]);
      if (c != 0) return c > 0;
    }
    return false;
  });
  for (auto& row : rows) {
    t.degrees.push_back(row.degree);
    t.values.push_back(std::move(row.values));
  }

  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a; b < r; ++b)
      if (inner_product(t, t.values[a], t.values[b]) != Cyclotomic(a == b ? 1 : 0))
        throw InternalError("character_table: row orthogonality failed after lifting");
  return t;
}

Cyclotomic inner_product(const CharacterTable& t, const std::vector<Cyclotomic>& a,
                         const std::vector<Cyclotomic>& b) {
  Cyclotomic acc;
  for (std::size_t j = 0; j < t.class_sizes.size(); ++j)
    acc += Cyclotomic(static_cast<long>(t.class_sizes[j])) * a[j] * b[j].conj();
  return acc / Cyclotomic(static_cast<long>(t.group_order));
}

std::vector<Cyclotomic> to_class_function(const FiniteGroup& g, const std::vector<Cyclotomic>& per_element) {
  std::vector<Cyclotomic> out;
  for (const auto& cls : g.classes()) {
    const int rep = *std::min_element(cls.begin(), cls.end());
    for (int x : cls)
      if (per_element[x] != per_element[rep]) throw DomainError("class-function", "values are not constant on a conjugacy class");
    out.push_back(per_element[rep]);
  }
  return out;
}

std::vector<long> decompose(const CharacterTable& t, const std::vector<Cyclotomic>& chi) {
  std::vector<long> out;
  for (const auto& row : t.values) {
    const Cyclotomic m = inner_product(t, chi, row);
    if (!m.is_rational() || !is_integer(m.to_rational()))
      throw InternalError("decompose: non-integer multiplicity " + m.to_string());
    out.push_back(m.to_rational().get_num().get_si());
  }
  return out;
}

int frobenius_schur(const CharacterTable& t, std::size_t i) {
  Cyclotomic acc;
  for (std::size_t j = 0; j < t.class_sizes.size(); ++j)
    acc += Cyclotomic(static_cast<long>(t.class_sizes[j])) * t.values[i][t.square_class[j]];
  acc /= Cyclotomic(static_cast<long>(t.group_order));
  for (int v : {-1, 0, 1})
    if (acc == Cyclotomic(static_cast<long>(v))) return v;
  throw InternalError("frobenius_schur: indicator " + acc.to_string() + " is not -1, 0 or 1");
}

std::size_t conjugate_character(const CharacterTable& t, std::size_t i) {
  std::vector<Cyclotomic> c;
  for (const auto& v : t.values[i]) c.push_back(v.conj());
  for (std::size_t k = 0; k < t.size(); ++k)
    if (t.values[k] == c) return k;
  throw InternalError("conjugate_character: conjugate not found in the table");
}

}  // namespace orbicalc
