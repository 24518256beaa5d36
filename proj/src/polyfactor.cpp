#include "gc/polyfactor.hpp"

#include <algorithm>
#include <numeric>

namespace gc {

const char* tag_name(ClassTag t) {
  switch (t) {
    case ClassTag::J0: return "J0";
    case ClassTag::J1: return "J1";
    case ClassTag::J2: return "J2";
    case ClassTag::J3: return "J3";
    case ClassTag::J4: return "J4";
    case ClassTag::SelfRecip: return "SELF_RECIP";
    case ClassTag::RecipPair: return "RECIP_PAIR";
  }
  return "?";
}

const char* mode_name(FactorMode m) {
  switch (m) {
    case FactorMode::Euclidean: return "euclidean";
    case FactorMode::Hermitian: return "hermitian";
    case FactorMode::Quaternion: return "quaternion";
  }
  return "?";
}

std::vector<std::vector<int>> cyclotomic_cosets(int n, uint64_t q) {
  if (n < 1) throw FieldError("n must be positive");
  if (std::gcd(uint64_t(n), q) != 1) throw FieldError("gcd(q, n) != 1");
  std::vector<std::vector<int>> out;
  std::vector<char> seen(size_t(n), 0);
  for (int s = 0; s < n; ++s) {
    if (seen[size_t(s)]) continue;
    std::vector<int> c;
    int64_t e = s;
    do {
      c.push_back(int(e));
      seen[size_t(e)] = 1;
      e = int64_t((__int128(e) * q) % n);
    } while (e != s);
    std::sort(c.begin(), c.end());
    out.push_back(c);
  }
  return out;
}

uint32_t master_degree(uint64_t q, int n, bool quaternion) {
  auto [p, m] = prime_power(q);
  (void)p;
  uint64_t L = quaternion ? 2 : 1;
  for (auto& c : cyclotomic_cosets(quaternion ? 2 * n : n, q)) L = std::lcm(L, uint64_t(c.size()));
  return uint32_t(m * L);
}

std::string poly_str(const FieldTable& F, const Poly& f, uint64_t q) {
  std::string s;
  for (size_t i = f.size(); i-- > 0;) {
    if (f[i] == ZERO) continue;
    if (!s.empty()) s += " + ";
    std::string c;
    if (f[i] != 0 || i == 0) {
      if (F.in_subfield(f[i], F.p()))
        c = std::to_string(F.to_poly(f[i]));
      else
        c = "w^" + std::to_string(F.sub_log(f[i], q));
    }
    if (i == 0)
      s += c;
    else
      s += (c.empty() ? "" : c + "*") + (i == 1 ? std::string("x") : "x^" + std::to_string(i));
  }
  return s.empty() ? "0" : s;
}

Poly poly_mul(const FieldTable& F, const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, ZERO);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  return r;
}

Elem poly_eval(const FieldTable& F, const Poly& f, Elem x) {
  Elem acc = ZERO;
  for (size_t i = f.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f[i]);
  return acc;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

Poly reciprocal(const FieldTable& F, const Poly& f) {
  if (f.empty() || f[0] == ZERO) throw FieldError("reciprocal of polynomial with zero constant term");
  Poly r(f.rbegin(), f.rend());
  Elem c = F.inv(f[0]);
  for (auto& e : r) e = F.mul(e, c);
  return r;
}

Poly conjugate(const FieldTable& F, const Poly& f, uint64_t qc) {
  Poly r(f);
  for (auto& e : r) e = F.frobenius(e, qc);
  return r;
}

Poly dagger(const FieldTable& F, const Poly& f, uint64_t qc) {
  return conjugate(F, reciprocal(F, f), qc);
}

namespace {

Elem root_of_unity(const FieldTable& F, int order) {
  if (F.units() % order) throw FieldError("master field lacks the required roots of unity");
  return Elem(F.units() / order);
}

std::vector<Poly> factors_from_cosets(const FieldTable& F, const std::vector<std::vector<int>>& cos,
                                      Elem zeta, uint64_t q) {
  std::vector<Poly> out;
  for (auto& c : cos) {
    Poly f{0};
    for (int e : c) f = poly_mul(F, f, Poly{F.neg(F.pow(zeta, e)), 0});
    for (Elem x : f)
      if (!F.in_subfield(x, q)) throw FieldError("factor coefficients escape the coefficient field");
    out.push_back(f);
  }
  return out;
}

std::vector<FactorClass> classify_list(const FieldTable& F, int order, Elem zeta, uint64_t qc,
                                       const std::vector<Poly>& factors, FactorMode mode, bool plus) {
  size_t m = factors.size();
  std::vector<std::vector<int>> roots(m);
  for (size_t i = 0; i < m; ++i) {
    for (int e = 0; e < order; ++e)
      if (poly_eval(F, factors[i], F.pow(zeta, e)) == ZERO) roots[i].push_back(e);
    if (int(roots[i].size()) + 1 != int(factors[i].size()))
      throw FieldError("factor list is not a complete factorisation");
  }
  auto find = [&](const Poly& g) -> int {
    for (size_t i = 0; i < m; ++i)
      if (factors[i] == g) return int(i);
    throw FieldError("inconsistent factor list: missing companion");
  };
  std::vector<char> used(m, 0);
  std::vector<FactorClass> out;
  bool herm = mode == FactorMode::Hermitian;
  for (size_t i = 0; i < m; ++i) {
    if (used[i]) continue;
    const Poly& f = factors[i];
    Poly fs = reciprocal(F, f);
    std::vector<Poly> orbit{f, fs};
    if (herm) {
      orbit.push_back(conjugate(F, f, qc));
      orbit.push_back(dagger(F, f, qc));
    }
    Poly rep = *std::min_element(orbit.begin(), orbit.end(), poly_less);
    Poly rs = reciprocal(F, rep);
    Poly rb = herm ? conjugate(F, rep, qc) : rep;
    Poly rd = herm ? dagger(F, rep, qc) : rs;
    FactorClass c;
    c.plus = plus;
    c.rep = rep;
    c.degree = int(rep.size()) - 1;
    bool selfrecip = rs == rep;
    if (!herm) {
      if (selfrecip && c.degree == 1)
        c.tag = ClassTag::J0;
      else if (selfrecip)
        c.tag = ClassTag::SelfRecip;
      else {
        c.tag = ClassTag::RecipPair;
        c.companions = {rs};
      }
    } else {
      bool selfconj = rb == rep;
      if (selfrecip && selfconj) {
        c.tag = ClassTag::J0;
      } else if (selfrecip) {
        c.tag = ClassTag::J1;
        c.companions = {rb};
      } else if (selfconj) {
        c.tag = ClassTag::J2;
        c.companions = {rs};
      } else if (rb == rs) {
        c.tag = ClassTag::J3;
        c.companions = {rs};
      } else {
        c.tag = ClassTag::J4;
        c.companions = {rs, rb, rd};
      }
    }
    if (c.tag == ClassTag::J0 && c.degree != 1) throw FieldError("J0 factor of degree > 1");
    int ri = find(rep);
    used[size_t(ri)] = 1;
    for (auto& g : c.companions) used[size_t(find(g))] = 1;
    c.coset = roots[size_t(ri)];
    c.root = ZERO;
    for (int e : c.coset) {
      Elem x = F.pow(zeta, e);
      if (c.root == ZERO || x < c.root) c.root = x;
    }
    out.push_back(c);
  }
  std::stable_sort(out.begin(), out.end(), [](const FactorClass& a, const FactorClass& b) {
    bool a0 = a.tag == ClassTag::J0, b0 = b.tag == ClassTag::J0;
    if (a0 != b0) return a0;
    if (a0) return a.root < b.root;
    if (a.degree != b.degree) return a.degree < b.degree;
    return poly_less(a.rep, b.rep);
  });
  return out;
}

}  // namespace

std::vector<Poly> factor_cyclic(const FieldTable& F, int n, uint64_t q) {
  F.check_subfield(q);
  return factors_from_cosets(F, cyclotomic_cosets(n, q), root_of_unity(F, n), q);
}

FactorSystem classify(const FieldTable& F, int n, uint64_t q, const std::vector<Poly>& factors,
                      FactorMode mode) {
  F.check_subfield(q);
  FactorSystem fs;
  fs.mode = mode;
  fs.n = n;
  fs.q = q;
  if (mode == FactorMode::Hermitian) {
    auto [p, m] = prime_power(q);
    if (m % 2) throw FieldError("hermitian mode needs a square field order");
    fs.conj = 1;
    for (uint32_t i = 0; i < m / 2; ++i) fs.conj *= p;
  }
  Poly prod{0};
  for (auto& f : factors) prod = poly_mul(F, prod, f);
  Poly target(size_t(n) + 1, ZERO);
  target[0] = F.minus_one();
  target[size_t(n)] = 0;
  if (prod != target) throw FieldError("factors do not multiply to x^n - 1");
  fs.classes = classify_list(F, n, root_of_unity(F, n), fs.conj, factors,
                             mode == FactorMode::Quaternion ? FactorMode::Euclidean : mode, false);
  return fs;
}

FactorSystem factor_dihedral(const FieldTable& F, int n, uint64_t q, FactorMode mode) {
  return classify(F, n, q, factor_cyclic(F, n, q), mode);
}

FactorSystem factor_quaternion(const FieldTable& F, int n, uint64_t q) {
  F.check_subfield(q);
  if (n % 2 == 0) throw FieldError("quaternion factorisation needs n odd");
  if (std::gcd(uint64_t(4 * n), q) != 1) throw FieldError("gcd(q, 4n) != 1");
  Elem zeta = root_of_unity(F, 2 * n);
  std::vector<std::vector<int>> even, odd;
  for (auto& c : cyclotomic_cosets(2 * n, q)) (c[0] % 2 ? odd : even).push_back(c);
  FactorSystem fs;
  fs.mode = FactorMode::Quaternion;
  fs.n = n;
  fs.q = q;
  fs.classes = classify_list(F, 2 * n, zeta, 0, factors_from_cosets(F, even, zeta, q),
                             FactorMode::Euclidean, false);
  fs.plus_classes = classify_list(F, 2 * n, zeta, 0, factors_from_cosets(F, odd, zeta, q),
                                  FactorMode::Euclidean, true);
  for (auto& c : fs.classes) (c.tag == ClassTag::RecipPair ? fs.s : fs.r)++;
  for (auto& c : fs.plus_classes) (c.tag == ClassTag::RecipPair ? fs.k : fs.t)++;
  return fs;
}

}  // namespace gc
