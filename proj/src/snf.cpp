#include "orbicalc/snf.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>

#include "orbicalc/errors.hpp"

namespace orbicalc {

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return sgn(x) == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix-shape", "IntMatrix product shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

}  // namespace

std::vector<Integer> smith_invariants(IntMatrix m) {
  std::vector<Integer> out;
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // least nonzero |entry| in the trailing block
      std::size_t pr = m.rows(), pc = m.cols();
      for (std::size_t r = t; r < m.rows(); ++r)
        for (std::size_t c = t; c < m.cols(); ++c)
          if (sgn(m(r, c)) != 0 && (pr == m.rows() || cmp(abs(m(r, c)), abs(m(pr, pc))) < 0)) {
            pr = r;
            pc = c;
          }
      if (pr == m.rows()) {
        std::sort(out.begin(), out.end());
        return out;
      }
      swap_rows(m, t, pr);
      swap_cols(m, t, pc);
      const Integer p = m(t, t);
      bool clean = true;
      for (std::size_t r = t + 1; r < m.rows(); ++r) {
        if (sgn(m(r, t)) == 0) continue;
        const Integer q = m(r, t) / p;
        for (std::size_t c = t; c < m.cols(); ++c) m(r, c) -= q * m(t, c);
        clean = clean && sgn(m(r, t)) == 0;
      }
      for (std::size_t c = t + 1; c < m.cols(); ++c) {
        if (sgn(m(t, c)) == 0) continue;
        const Integer q = m(t, c) / p;
        for (std::size_t r = t; r < m.rows(); ++r) m(r, c) -= q * m(r, t);
        clean = clean && sgn(m(t, c)) == 0;
      }
      if (!clean) continue;
      // divisibility: fold a row holding a non-multiple into the pivot row and retry
      std::size_t bad = m.rows();
      for (std::size_t r = t + 1; r < m.rows() && bad == m.rows(); ++r)
        for (std::size_t c = t + 1; c < m.cols(); ++c)
          if (m(r, c) % p != 0) {
            bad = r;
            break;
          }
      if (bad == m.rows()) break;
      for (std::size_t c = t; c < m.cols(); ++c) m(t, c) += m(bad, c);
    }
    out.push_back(abs(m(t, t)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void check_chain_complex(const ChainComplex& cc) {
  if (cc.ranks.empty()) throw DomainError("chain-complex", "a chain complex needs degree 0");
  if (cc.boundaries.size() + 1 != cc.ranks.size())
    throw DomainError("chain-complex", "one boundary matrix per positive degree");
  for (std::size_t p = 1; p < cc.ranks.size(); ++p) {
    const auto& d = cc.boundaries[p - 1];
    if (d.rows() != cc.ranks[p - 1] || d.cols() != cc.ranks[p])
      throw DomainError("chain-complex", "boundary matrix shape does not match the ranks");
  }
  for (std::size_t p = 1; p + 1 < cc.ranks.size(); ++p)
    if (!(cc.boundaries[p - 1] * cc.boundaries[p]).is_zero())
      throw InternalError("chain complex: d_" + std::to_string(p) + " d_" + std::to_string(p + 1) + " != 0");
}

std::vector<HomologyGroup> homology(const ChainComplex& cc, bool parallel) {
  check_chain_complex(cc);
  const std::size_t k = cc.ranks.size() - 1;
  std::vector<std::vector<Integer>> inv(k);
  if (parallel) {
    std::vector<std::future<std::vector<Integer>>> jobs;
    for (const auto& d : cc.boundaries) jobs.push_back(std::async(std::launch::async, smith_invariants, d));
    for (std::size_t i = 0; i < k; ++i) inv[i] = jobs[i].get();
  } else {
    for (std::size_t i = 0; i < k; ++i) inv[i] = smith_invariants(cc.boundaries[i]);
  }
  std::vector<HomologyGroup> out(k + 1);
  for (std::size_t p = 0; p <= k; ++p) {
    const long rank_out = p == 0 ? 0 : static_cast<long>(inv[p - 1].size());
    const long rank_in = p == k ? 0 : static_cast<long>(inv[p].size());
    out[p].betti = static_cast<long>(cc.ranks[p]) - rank_out - rank_in;
    if (p < k)
      for (const auto& d : inv[p])
        if (d > 1) out[p].torsion.push_back(d);
    out[p].reliable = p < k;
  }
  return out;
}

ChainComplex simplicial_chain_complex(const std::vector<std::vector<int>>& facets) {
  std::vector<std::set<std::vector<int>>> by_dim;
  for (auto f : facets) {
    std::sort(f.begin(), f.end());
    if (f.empty() || std::adjacent_find(f.begin(), f.end()) != f.end())
      throw DomainError("simplex", "facets must be nonempty sets of distinct vertices");
    if (f.size() > 24) throw DomainError("cap", "facet dimension limited to 23");
    if (by_dim.size() < f.size()) by_dim.resize(f.size());
    for (unsigned long mask = 1; mask < (1ul << f.size()); ++mask) {
      std::vector<int> face;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (mask >> i & 1ul) face.push_back(f[i]);
      by_dim[face.size() - 1].insert(face);
    }
  }
  ChainComplex cc;
  std::vector<std::map<std::vector<int>, std::size_t>> index(by_dim.size());
  for (std::size_t p = 0; p < by_dim.size(); ++p) {
    for (const auto& s : by_dim[p]) index[p].emplace(s, index[p].size());
    cc.ranks.push_back(by_dim[p].size());
  }
  for (std::size_t p = 1; p < by_dim.size(); ++p) {
    IntMatrix d(cc.ranks[p - 1], cc.ranks[p]);
    for (const auto& [s, col] : index[p])
      for (std::size_t i = 0; i < s.size(); ++i) {
        auto face = s;
        face.erase(face.begin() + static_cast<long>(i));
        d(index[p - 1].at(face), col) += i % 2 == 0 ? 1 : -1;
      }
    cc.boundaries.push_back(std::move(d));
  }
  return cc;
}

std::vector<std::vector<int>> rp2_triangulation() {
  return {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
          {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
}

std::vector<std::vector<int>> simplex_boundary(int n) {
  if (n < 1) throw DomainError("simplex", "simplex_boundary needs n >= 1");
  std::vector<std::vector<int>> out;
  for (int skip = 0; skip <= n; ++skip) {
    std::vector<int> f;
    for (int v = 0; v <= n; ++v)
      if (v != skip) f.push_back(v);
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace orbicalc
