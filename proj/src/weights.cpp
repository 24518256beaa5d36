#include "gc/weights.hpp"

#include <algorithm>

namespace gc {

const char* status_name(BoundStatus s) {
  switch (s) {
    case BoundStatus::Exact: return "EXACT";
    case BoundStatus::UpperBound: return "UPPER_BOUND";
    case BoundStatus::LowerBound: return "LOWER_BOUND";
  }
  return "?";
}

namespace {

int weight_of(const std::vector<Elem>& v) {
  int w = 0;
  for (Elem x : v) w += x != ZERO;
  return w;
}

// Row space in RREF for membership tests.
struct Span {
  Matrix basis;
  std::vector<size_t> pivots;

  Span(const FieldTable& F, const Matrix* m) {
    if (!m) return;
    basis = *m;
    size_t r = rref(F, basis, &pivots);
    basis.rows = r;
    basis.a.resize(r * basis.cols);
    pivots.resize(r);
  }
  bool contains(const FieldTable& F, std::vector<Elem> v) const {
    for (size_t t = 0; t < basis.rows; ++t) {
      Elem c = v[pivots[t]];
      if (c == ZERO) continue;
      const Elem* b = basis.row(t);
      for (size_t j = 0; j < v.size(); ++j)
        if (b[j] != ZERO) v[j] = F.sub(v[j], F.mul(c, b[j]));
    }
    return weight_of(v) == 0;
  }
  bool empty() const { return basis.rows == 0; }
};

// Elements of F_q as F_p digit vectors: m coordinates of the master
// polynomial basis that are independent on the subfield.
struct DigitMap {
  int p = 2, m = 1;
  uint64_t q = 2;
  int64_t step = 1;
  std::vector<uint8_t> digits;  // (q-1) x m

  DigitMap(const FieldTable& F, uint64_t q_) : q(q_) {
    auto [pp, mm] = prime_power(q);
    p = int(pp);
    m = int(mm);
    F.check_subfield(q);
    step = F.units() / int64_t(q - 1);
    int M = int(F.degree());
    auto expand = [&](Elem x) {
      std::vector<int> d(size_t(M), 0);
      uint32_t v = F.to_poly(x);
      for (int i = 0; i < M; ++i, v /= uint32_t(p)) d[size_t(i)] = int(v % uint32_t(p));
      return d;
    };
    Elem tau = F.subfield_gen(q);
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < m; ++i) rows.push_back(expand(F.pow(tau, i)));
    auto inv = [&](int a) {
      for (int b = 1; b < p; ++b)
        if (a * b % p == 1) return b;
      return 1;
    };
    std::vector<int> pos;
    size_t lead = 0;
    for (int c = 0; c < M && lead < rows.size(); ++c) {
      size_t r = lead;
      while (r < rows.size() && rows[r][size_t(c)] == 0) ++r;
      if (r == rows.size()) continue;
      std::swap(rows[r], rows[lead]);
      int s = inv(rows[lead][size_t(c)]);
      for (auto& x : rows[lead]) x = x * s % p;
      for (size_t o = 0; o < rows.size(); ++o) {
        if (o == lead || rows[o][size_t(c)] == 0) continue;
        int f = rows[o][size_t(c)];
        for (int j = 0; j < M; ++j) rows[o][size_t(j)] = ((rows[o][size_t(j)] - f * rows[lead][size_t(j)]) % p + p) % p;
      }
      pos.push_back(c);
      ++lead;
    }
    digits.assign(size_t(q - 1) * size_t(m), 0);
    for (uint64_t e = 0; e + 1 < q; ++e) {
      auto d = expand(Elem(int64_t(e) * step));
      for (int i = 0; i < m; ++i) digits[e * size_t(m) + size_t(i)] = uint8_t(d[size_t(pos[size_t(i)])]);
    }
  }
  size_t index(Elem x) const { return size_t(x / step); }
  Elem elem(size_t idx) const { return Elem(int64_t(idx) * step); }
};

struct InfoSet {
  std::vector<size_t> info, red;
  size_t rank = 0;
  Matrix sys;                   // rows with identity on `info`
  std::vector<uint8_t> planes;  // [row][scalar][plane][stride]
  int done = 0;
};

struct Isd {
  const FieldTable& F;
  const kernels::Ops& ops;
  const Span& excl;
  DigitMap dm;
  size_t n, k, stride;
  uint64_t budget;
  std::vector<InfoSet> sets;
  int best;
  std::vector<Elem> witness;
  uint64_t work = 0;

  Isd(const FieldTable& F_, uint64_t q, const Matrix& G, const IsdOptions& opt, const kernels::Ops& o, const Span& ex)
      : F(F_), ops(o), excl(ex), dm(F_, q), n(G.cols), k(G.rows), budget(opt.work_budget), best(int(G.cols) + 1) {
    if (dm.p > kernels::kMaxPrime) throw FieldError("characteristic too large for the enumeration kernels");
    size_t rlen = n - k;
    stride = std::max<size_t>(32, (rlen + 31) / 32 * 32);
    std::vector<size_t> remaining(n);
    for (size_t j = 0; j < n; ++j) remaining[j] = j;
    std::vector<size_t> used;
    while (!remaining.empty()) {
      if (opt.max_info_sets > 0 && int(sets.size()) >= opt.max_info_sets) break;
      std::vector<size_t> order = remaining;
      order.insert(order.end(), used.begin(), used.end());
      Matrix P(k, n);
      for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < n; ++j) P.at(i, j) = G.at(i, order[j]);
      std::vector<size_t> piv;
      rref(F, P, &piv);
      InfoSet S;
      std::vector<bool> is_info(n, false);
      for (size_t t = 0; t < k; ++t) {
        if (piv[t] < remaining.size()) ++S.rank;
        S.info.push_back(order[piv[t]]);
        is_info[order[piv[t]]] = true;
      }
      if (S.rank == 0) break;
      S.sys = Matrix(k, n);
      for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < n; ++j) S.sys.at(i, order[j]) = P.at(i, j);
      for (size_t j = 0; j < n; ++j)
        if (!is_info[j]) S.red.push_back(j);
      build_planes(S);
      std::vector<size_t> rest;
      for (size_t j : remaining)
        if (!is_info[j]) rest.push_back(j);
      for (size_t j : remaining)
        if (is_info[j]) used.push_back(j);
      remaining = rest;
      sets.push_back(std::move(S));
    }
  }

  size_t plane_bytes() const { return size_t(dm.m) * stride; }
  const uint8_t* plane(const InfoSet& S, size_t row, size_t scalar) const {
    return S.planes.data() + (row * (dm.q - 1) + scalar) * plane_bytes();
  }

  void build_planes(InfoSet& S) {
    size_t R = dm.q - 1, m = size_t(dm.m);
    S.planes.assign(k * R * plane_bytes(), 0);
    for (size_t t = 0; t < k; ++t)
      for (size_t e = 0; e < R; ++e) {
        uint8_t* out = S.planes.data() + (t * R + e) * plane_bytes();
        Elem s = dm.elem(e);
        for (size_t j = 0; j < S.red.size(); ++j) {
          Elem x = F.mul(s, S.sys.at(t, S.red[j]));
          if (x == ZERO) continue;
          const uint8_t* d = &dm.digits[dm.index(x) * m];
          for (size_t i = 0; i < m; ++i) out[i * stride + j] = d[i];
        }
      }
  }

  void visit(const InfoSet& S, const std::vector<size_t>& c, const std::vector<size_t>& a, int total) {
    if (total >= best) return;
    std::vector<Elem> word(n, ZERO);
    for (size_t i = 0; i < c.size(); ++i) {
      Elem coef = i == 0 ? F.one() : dm.elem(a[i - 1]);
      const Elem* r = S.sys.row(c[i]);
      for (size_t j = 0; j < n; ++j)
        if (r[j] != ZERO) word[j] = F.add(word[j], F.mul(coef, r[j]));
    }
    if (weight_of(word) != total) throw FieldError("enumeration kernel produced an inconsistent weight");
    if (!excl.empty() && excl.contains(F, word)) return;
    best = total;
    witness = std::move(word);
  }

  // All words with exactly w nonzero coefficients on the information set,
  // first nonzero coefficient 1. Returns false when the budget runs out.
  bool enumerate(const InfoSet& S, int w) {
    size_t W = size_t(w), R = dm.q - 1;
    if (W > k) return true;
    std::vector<size_t> c(W);
    for (size_t i = 0; i < W; ++i) c[i] = i;
    size_t nd = R >= 2 ? W - 1 : 0;
    std::vector<uint8_t> acc(plane_bytes());
    std::vector<size_t> a(std::max<size_t>(W, 1)), f(nd + 1);
    std::vector<int> o(nd + 1);
    while (true) {
      std::fill(acc.begin(), acc.end(), 0);
      int wt = 0;
      for (size_t i = 0; i < W; ++i) wt = ops.add_weight(acc.data(), plane(S, c[i], 0), dm.m, stride, dm.p);
      std::fill(a.begin(), a.end(), 0);
      for (size_t j = 0; j <= nd; ++j) {
        f[j] = j;
        o[j] = 1;
      }
      visit(S, c, a, wt + w);
      ++work;
      // loopless reflected Gray code over the remaining coefficients
      while (true) {
        size_t j = f[0];
        f[0] = 0;
        if (j == nd) break;
        size_t old = a[j];
        a[j] = size_t(int64_t(a[j]) + o[j]);
        Elem delta = F.sub(dm.elem(a[j]), dm.elem(old));
        wt = ops.add_weight(acc.data(), plane(S, c[j + 1], dm.index(delta)), dm.m, stride, dm.p);
        visit(S, c, a, wt + w);
        if (++work > budget) return false;
        if (a[j] == 0 || a[j] == R - 1) {
          o[j] = -o[j];
          f[j] = f[j + 1];
          f[j + 1] = j + 1;
        }
      }
      if (work > budget) return false;
      // next combination
      size_t i = W;
      while (i > 0 && c[i - 1] == k - W + i - 1) --i;
      if (i == 0) break;
      ++c[i - 1];
      for (size_t t = i; t < W; ++t) c[t] = c[t - 1] + 1;
    }
    return true;
  }

  int lower_bound() const {
    int lb = 0;
    for (auto& S : sets) {
      if (S.rank == k && S.done >= int(k)) return best;
      lb += std::max(0, S.done + 1 - int(k - S.rank));
    }
    return lb;
  }

  DistanceResult run(int max_w) {
    DistanceResult res;
    res.method = "isd";
    int top = int(k);
    if (max_w > 0) top = std::min(top, max_w);
    bool stopped = false;
    for (int w = 1; w <= top && !stopped; ++w) {
      for (auto& S : sets) {
        if (w + 1 - int(k - S.rank) <= 0) continue;
        while (S.done < w) {
          if (!enumerate(S, S.done + 1)) {
            stopped = true;
            break;
          }
          ++S.done;
        }
        if (stopped) break;
      }
      if (lower_bound() >= best) break;
    }
    res.work = work;
    int lb = std::max(1, std::min(lower_bound(), best));
    res.upper = best;
    res.lower = lb;
    if (best <= int(n)) res.witness = witness;
    if (lb >= best) {
      if (best > int(n)) {
        res.empty = true;
        res.value = 0;
        res.lower = res.upper = 0;
      } else {
        res.value = best;
        res.lower = best;
      }
      res.status = BoundStatus::Exact;
    } else if (best <= int(n)) {
      res.value = best;
      res.status = BoundStatus::UpperBound;
    } else {
      res.value = lb;
      res.status = BoundStatus::LowerBound;
    }
    return res;
  }
};

DistanceResult empty_result(const char* method) {
  DistanceResult r;
  r.empty = true;
  r.method = method;
  return r;
}

}  // namespace

DistanceResult min_distance_isd(const FieldTable& F, uint64_t q, const Matrix& gen, const IsdOptions& opt,
                                const Matrix* exclude) {
  if (gen.rows == 0) return empty_result("isd");
  if (rank(F, gen) != gen.rows) throw FieldError("generator matrix is rank deficient");
  Matrix G = gen;
  rref(F, G);
  Span ex(F, exclude);
  Isd isd(F, q, G, opt, opt.ops ? *opt.ops : kernels::best_ops(), ex);
  return isd.run(opt.max_info_weight);
}

DistanceResult min_distance_exhaustive(const FieldTable& F, uint64_t q, const Matrix& gen, uint64_t budget,
                                       const kernels::Ops* ops) {
  Matrix G = row_basis(F, gen);
  if (G.rows == 0) return empty_result("exhaustive");
  uint64_t total = 1;
  for (size_t i = 0; i < G.rows; ++i) {
    if (total > budget / q) throw FieldError("exhaustive distance budget exceeded");
    total *= q;
  }
  IsdOptions opt;
  opt.max_info_sets = 1;
  opt.work_budget = UINT64_MAX;
  opt.ops = ops;
  Span none(F, nullptr);
  Isd isd(F, q, G, opt, ops ? *ops : kernels::best_ops(), none);
  auto r = isd.run(0);
  r.method = "exhaustive";
  return r;
}

namespace {

struct ParitySearch {
  const FieldTable& F;
  Matrix H;
  const Span& excl;
  size_t r, n;
  uint64_t budget, nodes = 0;
  int w = 0;
  std::vector<std::vector<Elem>> cols;
  std::vector<std::vector<Elem>> basis;
  std::vector<size_t> piv, chosen;
  std::vector<Elem> witness;

  ParitySearch(const FieldTable& F_, const Matrix& H_, const Span& ex, uint64_t b)
      : F(F_), H(row_basis(F_, H_)), excl(ex), r(H.rows), n(H_.cols), budget(b) {
    cols.assign(n, std::vector<Elem>(r, ZERO));
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < n; ++j) cols[j][i] = H.at(i, j);
  }

  // Reduces v against the basis; returns true when it becomes zero.
  bool reduce(std::vector<Elem>& v) const {
    for (size_t t = 0; t < basis.size(); ++t) {
      Elem c = v[piv[t]];
      if (c == ZERO) continue;
      const auto& b = basis[t];
      for (size_t i = 0; i < r; ++i)
        if (b[i] != ZERO) v[i] = F.sub(v[i], F.mul(c, b[i]));
    }
    for (size_t i = 0; i < r; ++i)
      if (v[i] != ZERO) return false;
    return true;
  }

  bool leaf() {
    Matrix Hs(r, chosen.size());
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < chosen.size(); ++j) Hs.at(i, j) = cols[chosen[j]][i];
    Matrix K = nullspace(F, Hs);
    for (size_t t = 0; t < K.rows; ++t) {
      std::vector<Elem> z(n, ZERO);
      for (size_t j = 0; j < chosen.size(); ++j) z[chosen[j]] = K.at(t, j);
      if (!excl.empty() && excl.contains(F, z)) continue;
      witness = std::move(z);
      return true;
    }
    return false;
  }

  // 1: found, 0: exhausted, -1: budget
  int dfs(size_t start, int depth, int dependent) {
    for (size_t c = start; c + size_t(w - depth) <= n; ++c) {
      if (++nodes > budget) return -1;
      std::vector<Elem> v = cols[c];
      bool dep = reduce(v);
      chosen.push_back(c);
      int res = 0;
      if (depth + 1 == w) {
        if ((dep || dependent > 0) && leaf()) res = 1;
      } else if (dep) {
        // a smaller dependent set exists; only needed when it was excluded
        if (!excl.empty()) res = dfs(c + 1, depth + 1, dependent + 1);
      } else {
        size_t p = 0;
        while (v[p] == ZERO) ++p;
        Elem s = F.inv(v[p]);
        for (auto& x : v) x = F.mul(x, s);
        basis.push_back(std::move(v));
        piv.push_back(p);
        res = dfs(c + 1, depth + 1, dependent);
        basis.pop_back();
        piv.pop_back();
      }
      chosen.pop_back();
      if (res != 0) return res;
    }
    return 0;
  }
};

}  // namespace

DistanceResult min_weight_parity_search(const FieldTable& F, const Matrix& H, const Matrix* exclude, uint64_t budget) {
  Span ex(F, exclude);
  ParitySearch ps(F, H, ex, budget);
  DistanceResult res;
  res.method = "parity-search";
  size_t n = H.cols;
  for (int w = 1; w <= int(n); ++w) {
    ps.w = w;
    int out = ps.dfs(0, 0, 0);
    res.work = ps.nodes;
    if (out == 1) {
      int wt = weight_of(ps.witness);
      res.value = res.lower = res.upper = wt;
      res.witness = ps.witness;
      res.status = BoundStatus::Exact;
      return res;
    }
    if (out == -1) {
      res.value = res.lower = w;
      res.upper = int(n) + 1;
      res.status = BoundStatus::LowerBound;
      return res;
    }
  }
  res.empty = true;
  res.status = BoundStatus::Exact;
  return res;
}

namespace {

// Merges a lower-bound search with an enumeration result on the same quantity.
DistanceResult combine(const DistanceResult& lo, const DistanceResult& up) {
  DistanceResult r = up;
  r.work = lo.work + up.work;
  r.method = lo.method + "+" + up.method;
  if (up.empty) return r;
  r.lower = std::max(lo.lower, up.lower);
  if (!r.witness.empty() && r.lower >= r.upper) {
    r.lower = r.upper;
    r.value = r.upper;
    r.status = BoundStatus::Exact;
  }
  return r;
}

}  // namespace

QuantumRecord css_hermitian(const Decomposition& D, const IdealSpec& s, const CssOptions& opt) {
  if (D.group != GroupKind::Dihedral || D.fs.mode != FactorMode::Hermitian)
    throw FieldError("hermitian CSS needs a hermitian dihedral decomposition");
  auto rep = hermitian_selforth(D, s);
  if (!rep.self_orthogonal) throw FieldError("not hermitian self-orthogonal: " + rep.reason);
  const FieldTable& F = *D.F;
  QuantumRecord rec;
  Matrix gen = ideal_to_code(D, s).gen;
  uint64_t qc = D.fs.conj;
  rec.n = D.order();
  rec.k = int(gen.rows);
  rec.kq = rec.n - 2 * rec.k;
  rec.q_code = D.q;
  rec.q_quantum = qc;
  rec.self_dual = rep.self_dual;
  if (opt.code_distance || rec.self_dual) rec.dC = min_distance_isd(F, D.q, gen, opt.isd);
  if (rec.self_dual) {
    rec.dDual = rec.dC;
    rec.dQ = rec.dC;
    return rec;
  }
  Matrix H = frobenius(F, gen, qc);
  Matrix Gd = frobenius(F, nullspace(F, gen), qc);
  Span C(F, &gen);

  rec.dDual = min_weight_parity_search(F, H, nullptr, opt.parity_budget);
  if (rec.dDual.status != BoundStatus::Exact)
    rec.dDual = combine(rec.dDual, min_distance_isd(F, D.q, Gd, opt.isd));

  if (rec.dDual.status == BoundStatus::Exact && !C.contains(F, rec.dDual.witness)) {
    rec.dQ = rec.dDual;
    return rec;
  }
  rec.dQ = min_weight_parity_search(F, H, &gen, opt.parity_budget);
  if (rec.dQ.status != BoundStatus::Exact) rec.dQ = combine(rec.dQ, min_distance_isd(F, D.q, Gd, opt.isd, &gen));
  rec.dQ.lower = std::max(rec.dQ.lower, rec.dDual.lower);
  return rec;
}

}  // namespace gc
