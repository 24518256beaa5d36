#include "gc/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace gc {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::pair<uint32_t, uint32_t> prime_power(uint64_t q) {
  if (q < 2) throw FieldError("not a prime power: " + std::to_string(q));
  auto f = prime_factors(q);
  if (f.size() != 1) throw FieldError("not a prime power: " + std::to_string(q));
  uint32_t m = 0;
  for (uint64_t t = q; t > 1; t /= f[0]) ++m;
  return {uint32_t(f[0]), m};
}

namespace {

using Poly = std::vector<uint32_t>;  // constant first

// a * b mod f over F_p, f monic of degree M
Poly mulmod(const Poly& a, const Poly& b, const Poly& f, uint32_t p) {
  size_t M = f.size() - 1;
  std::vector<uint64_t> t(2 * M, 0);
  for (size_t i = 0; i < M; ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < M; ++j) t[i + j] = (t[i + j] + uint64_t(a[i]) * b[j]) % p;
  }
  for (size_t k = 2 * M - 1; k >= M; --k) {
    uint64_t c = t[k] % p;
    if (!c) continue;
    t[k] = 0;
    for (size_t i = 0; i < M; ++i)
      t[k - M + i] = (t[k - M + i] + (p - c) * f[i]) % p;
  }
  Poly r(M);
  for (size_t i = 0; i < M; ++i) r[i] = uint32_t(t[i] % p);
  return r;
}

Poly x_pow(uint64_t e, const Poly& f, uint32_t p) {
  size_t M = f.size() - 1;
  Poly r(M, 0), b(M, 0);
  r[0] = 1;
  if (M == 1) {
    b[0] = (p - f[0]) % p;
  } else {
    b[1] = 1;
  }
  while (e) {
    if (e & 1) r = mulmod(r, b, f, p);
    b = mulmod(b, b, f, p);
    e >>= 1;
  }
  return r;
}

bool is_one(const Poly& a) {
  if (a[0] != 1) return false;
  for (size_t i = 1; i < a.size(); ++i)
    if (a[i]) return false;
  return true;
}

bool is_zero(const Poly& a) {
  return std::all_of(a.begin(), a.end(), [](uint32_t c) { return c == 0; });
}

uint64_t ipow(uint64_t b, uint32_t e) {
  uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::mutex g_conway_mu;
std::map<std::pair<uint32_t, uint32_t>, Poly> g_conway;

}  // namespace

std::vector<uint32_t> conway_polynomial(uint32_t p, uint32_t M) {
  if (!is_prime(p)) throw FieldError("characteristic not prime");
  if (M == 0) throw FieldError("extension degree must be positive");
  {
    std::lock_guard<std::mutex> lk(g_conway_mu);
    auto it = g_conway.find({p, M});
    if (it != g_conway.end()) return it->second;
  }
  uint64_t N = ipow(p, M) - 1;
  auto ell = prime_factors(N);

  uint32_t g = 1;
  if (p > 2) {
    auto pf = prime_factors(p - 1);
    for (g = 2; g < p; ++g) {
      bool ok = true;
      for (auto l : pf) {
        uint64_t r = 1, b = g, e = (p - 1) / l;
        while (e) {
          if (e & 1) r = r * b % p;
          b = b * b % p;
          e >>= 1;
        }
        if (r == 1) ok = false;
      }
      if (ok) break;
    }
  }

  std::vector<std::pair<uint32_t, Poly>> sub;
  for (uint32_t m = 1; m < M; ++m)
    if (M % m == 0) sub.push_back({m, conway_polynomial(p, m)});

  // f = x^M + sum_i (-1)^i a_i x^{M-i}; a_M is fixed by the m = 1 condition.
  std::vector<uint32_t> a(M + 1, 0);
  a[M] = g;
  Poly result;
  for (;;) {
    Poly f(M + 1);
    f[M] = 1;
    for (uint32_t i = 1; i <= M; ++i) {
      uint32_t c = a[i] % p;
      f[M - i] = (i % 2 == 1) ? (p - c) % p : c;
    }
    bool ok = is_one(x_pow(N, f, p));
    for (size_t k = 0; ok && k < ell.size(); ++k)
      if (is_one(x_pow(N / ell[k], f, p))) ok = false;
    for (size_t k = 0; ok && k < sub.size(); ++k) {
      uint32_t m = sub[k].first;
      const Poly& h = sub[k].second;
      Poly y = x_pow(N / (ipow(p, m) - 1), f, p);
      Poly acc(M, 0);
      for (size_t d = h.size(); d-- > 0;) {
        acc = mulmod(acc, y, f, p);
        acc[0] = (acc[0] + h[d]) % p;
      }
      if (!is_zero(acc)) ok = false;
    }
    if (ok) {
      result = f;
      break;
    }
    int i = int(M) - 1;
    while (i >= 1 && a[size_t(i)] == p - 1) a[size_t(i--)] = 0;
    if (i < 1) throw FieldError("no Conway polynomial found");
    ++a[size_t(i)];
  }
  std::lock_guard<std::mutex> lk(g_conway_mu);
  g_conway[{p, M}] = result;
  return result;
}

FieldTable::FieldTable(uint32_t p, uint32_t M, uint64_t budget) : p_(p), M_(M) {
  if (M == 0) throw FieldError("extension degree must be positive");
  if (!is_prime(p)) throw FieldError("characteristic not prime");
  size_ = 1;
  for (uint32_t i = 0; i < M; ++i) {
    size_ *= p;
    if (size_ > budget) throw FieldError("field size exceeds budget");
  }
  N_ = int64_t(size_ - 1);
  modulus_ = conway_polynomial(p, M);

  exp_.resize(size_t(N_));
  log_.assign(size_t(size_), ZERO);
  std::vector<uint32_t> digits(M, 0), pw(M, 1);
  for (uint32_t i = 1; i < M; ++i) pw[i] = pw[i - 1] * p;
  digits[0] = 1;
  for (int64_t k = 0; k < N_; ++k) {
    uint32_t v = 0;
    for (uint32_t i = 0; i < M; ++i) v += digits[i] * pw[i];
    if (log_[v] != ZERO) throw FieldError("modulus is not primitive");
    exp_[size_t(k)] = v;
    log_[v] = Elem(k);
    // multiply by x
    uint32_t top = digits[M - 1];
    for (uint32_t i = M - 1; i > 0; --i) digits[i] = digits[i - 1];
    digits[0] = 0;
    if (top)
      for (uint32_t i = 0; i < M; ++i)
        digits[i] = uint32_t((digits[i] + uint64_t(p - modulus_[i]) * top) % p);
  }
  zech_.resize(size_t(N_));
  for (int64_t k = 0; k < N_; ++k) {
    uint32_t v = exp_[size_t(k)];
    uint32_t c = v % p;
    uint32_t w = v - c + (c + 1) % p;
    zech_[size_t(k)] = w == 0 ? ZERO : log_[w];
  }
}

Elem FieldTable::pow(Elem a, int64_t e) const {
  if (a == ZERO) {
    if (e == 0) return 0;
    if (e < 0) throw FieldError("inverse of zero");
    return ZERO;
  }
  __int128 r = (__int128(a) * e) % N_;
  if (r < 0) r += N_;
  return Elem(r);
}

Elem FieldTable::from_int(int64_t k) const {
  int64_t r = k % int64_t(p_);
  if (r < 0) r += p_;
  return from_poly(uint32_t(r));
}

void FieldTable::check_subfield(uint64_t q) const {
  auto [pp, m] = prime_power(q);
  if (pp != p_ || M_ % m != 0)
    throw FieldError("F_" + std::to_string(q) + " is not a subfield of F_" +
                     std::to_string(p_) + "^" + std::to_string(M_));
}

bool FieldTable::in_subfield(Elem x, uint64_t q) const {
  if (x == ZERO) return true;
  return x % (N_ / int64_t(q - 1)) == 0;
}

Elem FieldTable::subfield_gen(uint64_t q) const {
  check_subfield(q);
  return Elem(N_ / int64_t(q - 1));
}

std::vector<Elem> FieldTable::subfield_elements(uint64_t q) const {
  check_subfield(q);
  std::vector<Elem> out;
  out.reserve(size_t(q));
  out.push_back(ZERO);
  int64_t s = N_ / int64_t(q - 1);
  for (int64_t k = 0; k < int64_t(q - 1); ++k) out.push_back(Elem(k * s));
  return out;
}

Elem FieldTable::frobenius(Elem x, uint64_t q) const {
  check_subfield(q);
  if (x == ZERO) return ZERO;
  return Elem((__int128(x) * q) % N_);
}

int64_t FieldTable::sub_log(Elem x, uint64_t q) const {
  if (x == ZERO || !in_subfield(x, q)) throw FieldError("sub_log outside subfield");
  return x / (N_ / int64_t(q - 1));
}

Elem FieldTable::sub_exp(int64_t k, uint64_t q) const {
  int64_t m = int64_t(q - 1);
  k %= m;
  if (k < 0) k += m;
  return Elem(k * (N_ / m));
}

std::optional<Elem> FieldTable::sqrt(Elem x, uint64_t q) const {
  check_subfield(q);
  if (x == ZERO) return ZERO;
  if (!in_subfield(x, q)) throw FieldError("sqrt argument outside subfield");
  if (p_ == 2) return pow(x, int64_t(q / 2));
  int64_t k = sub_log(x, q);
  if (k % 2) return std::nullopt;
  Elem r1 = sub_exp(k / 2, q);
  Elem r2 = neg(r1);
  return std::min(r1, r2);
}

std::optional<Elem> FieldTable::sqrt_minus_one(uint64_t q) const {
  if (p_ == 2) throw FieldError("sqrt(-1) requested in characteristic 2");
  check_subfield(q);
  if ((q - 1) % 4 != 0) return std::nullopt;
  return Elem(N_ / 4);
}

std::pair<Elem, Elem> FieldTable::solve_sum_of_squares(Elem k, uint64_t q) const {
  check_subfield(q);
  if (!in_subfield(k, q)) throw FieldError("sum of squares target outside subfield");
  if (k == ZERO) return {ZERO, ZERO};
  auto elems = subfield_elements(q);
  std::rotate(elems.begin(), elems.begin() + 1, elems.end());
  for (Elem u : elems) {
    Elem rest = sub(k, mul(u, u));
    if (auto v = sqrt(rest, q)) return {u, *v};
  }
  throw FieldError("no solution to u^2 + v^2 = k");
}

Elem FieldTable::trace(Elem x, uint64_t Q, uint32_t d) const {
  Elem acc = ZERO, y = x;
  for (uint32_t i = 0; i < d; ++i) {
    acc = add(acc, y);
    if (y != ZERO) y = Elem((__int128(y) * Q) % N_);
  }
  return acc;
}

std::string FieldTable::str(Elem a) const {
  if (a == ZERO) return "0";
  if (a == 0) return "1";
  return "z^" + std::to_string(a);
}

}  // namespace gc
