#include "gc/oracle.hpp"

namespace gc::oracle {

int group_order(Group g, int n) { return g == Group::Dihedral ? 2 * n : 4 * n; }

int group_mul(Group g, int n, int x, int y) {
  int m = g == Group::Dihedral ? n : 2 * n;
  int i = x % m, e = x / m, j = y % m, f = y / m;
  // a^i b^e a^j b^f = a^{i + (-1)^e j} b^e b^f
  int k = e ? i - j : i + j;
  int h = e + f;
  if (h == 2) {
    h = 0;
    if (g == Group::Quaternion) k += n;  // b^2 = a^n
  }
  k %= m;
  if (k < 0) k += m;
  return k + h * m;
}

Vec group_algebra_mul(const FieldTable& F, Group g, int n, const Vec& u, const Vec& v) {
  int G = group_order(g, n);
  Vec w(size_t(G), ZERO);
  for (int x = 0; x < G; ++x)
    for (int y = 0; y < G; ++y) {
      Elem t = F.mul(u[size_t(x)], v[size_t(y)]);
      if (t == ZERO) continue;
      size_t z = size_t(group_mul(g, n, x, y));
      w[z] = F.add(w[z], t);
    }
  return w;
}

Rows echelon(const FieldTable& F, Rows m) {
  Rows out;
  if (m.empty()) return out;
  size_t cols = m[0].size();
  size_t lead = 0;
  for (size_t c = 0; c < cols && lead < m.size(); ++c) {
    size_t p = lead;
    while (p < m.size() && m[p][c] == ZERO) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[lead]);
    Elem s = F.inv(m[lead][c]);
    for (auto& x : m[lead]) x = F.mul(x, s);
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == lead || m[r][c] == ZERO) continue;
      Elem f = m[r][c];
      for (size_t j = 0; j < cols; ++j) m[r][j] = F.sub(m[r][j], F.mul(f, m[lead][j]));
    }
    ++lead;
  }
  m.resize(lead);
  return m;
}

size_t rank(const FieldTable& F, const Rows& m) { return echelon(F, m).size(); }

Rows nullspace(const FieldTable& F, const Rows& m, size_t cols) {
  Rows e = echelon(F, m);
  std::vector<long> pivot_of_col(cols, -1);
  for (size_t r = 0; r < e.size(); ++r)
    for (size_t c = 0; c < cols; ++c)
      if (e[r][c] != ZERO) {
        pivot_of_col[c] = long(r);
        break;
      }
  Rows out;
  for (size_t f = 0; f < cols; ++f) {
    if (pivot_of_col[f] >= 0) continue;
    Vec v(cols, ZERO);
    v[f] = F.one();
    for (size_t c = 0; c < cols; ++c)
      if (pivot_of_col[c] >= 0) v[c] = F.neg(e[size_t(pivot_of_col[c])][f]);
    out.push_back(v);
  }
  return out;
}

bool contains(const FieldTable& F, const Rows& a, const Rows& b) {
  if (b.empty()) return true;
  Rows both = a;
  both.insert(both.end(), b.begin(), b.end());
  return rank(F, both) == rank(F, a);
}

bool same_space(const FieldTable& F, const Rows& a, const Rows& b) {
  return rank(F, a) == rank(F, b) && contains(F, a, b);
}

Rows dual_nullspace(const FieldTable& F, const Rows& gen, size_t cols, bool hermitian, uint64_t qc) {
  Rows d = nullspace(F, gen, cols);
  if (hermitian)
    for (auto& r : d)
      for (auto& x : r) x = F.frobenius(x, qc);
  return d;
}

bool is_left_ideal(const FieldTable& F, Group g, int n, const Rows& gen) {
  int G = group_order(g, n);
  int m = g == Group::Dihedral ? n : 2 * n;
  Rows img;
  for (int h : {1, m})
    for (auto& r : gen) {
      Vec e(size_t(G), ZERO);
      e[size_t(h)] = F.one();
      img.push_back(group_algebra_mul(F, g, n, e, r));
    }
  return contains(F, gen, img);
}

bool is_self_orthogonal(const FieldTable& F, const Rows& gen, size_t cols, bool hermitian, uint64_t qc) {
  return contains(F, dual_nullspace(F, gen, cols, hermitian, qc), gen);
}

std::optional<int> min_distance(const FieldTable& F, uint64_t q, const Rows& gen, uint64_t budget) {
  Rows g = echelon(F, gen);
  if (g.empty()) return std::nullopt;
  size_t k = g.size(), n = g[0].size();
  uint64_t total = 1;
  for (size_t i = 0; i < k; ++i) {
    if (total > budget / q) throw FieldError("exhaustive distance budget exceeded");
    total *= q;
  }
  auto els = F.subfield_elements(q);
  // Projective enumeration: the last nonzero coefficient is 1.
  int best = int(n) + 1;
  std::vector<size_t> idx(k, 0);
  for (size_t lead = 0; lead < k; ++lead) {
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      Vec w = g[lead];
      for (size_t i = 0; i < lead; ++i) {
        Elem c = els[idx[i]];
        if (c == ZERO) continue;
        for (size_t j = 0; j < n; ++j) w[j] = F.add(w[j], F.mul(c, g[i][j]));
      }
      int wt = 0;
      for (auto x : w) wt += x != ZERO;
      if (wt < best) best = wt;
      size_t i = 0;
      while (i < lead && ++idx[i] == els.size()) idx[i++] = 0;
      if (i == lead) break;
    }
  }
  return best;
}

}  // namespace gc::oracle
