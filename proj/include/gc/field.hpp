#pragma once
// Finite fields F_{p^M} in discrete-log form with Zech addition.
//
// Every field in a run lives inside one master table; a subfield F_{p^m}
// (m | M) is the set {0} u {xi^{k (p^M-1)/(p^m-1)}}.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gc {

// A field element: discrete log with respect to the master generator, or ZERO.
using Elem = int32_t;
inline constexpr Elem ZERO = -1;

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Conway polynomial of degree M over F_p, constant term first, monic.
// Found by deterministic search; results are memoised per (p, M).
std::vector<uint32_t> conway_polynomial(uint32_t p, uint32_t M);

std::vector<uint64_t> prime_factors(uint64_t n);
bool is_prime(uint64_t n);
// Returns (p, m) with q = p^m, or throws.
std::pair<uint32_t, uint32_t> prime_power(uint64_t q);

class FieldTable {
 public:
  static constexpr uint64_t kDefaultBudget = uint64_t(1) << 24;

  FieldTable(uint32_t p, uint32_t M, uint64_t budget = kDefaultBudget);

  uint32_t p() const { return p_; }
  uint32_t degree() const { return M_; }
  uint64_t order() const { return size_; }
  int64_t units() const { return N_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  Elem one() const { return 0; }
  Elem minus_one() const { return p_ == 2 ? 0 : Elem(N_ / 2); }
  Elem gen() const { return N_ == 1 ? 0 : 1; }

  Elem add(Elem a, Elem b) const {
    if (a == ZERO) return b;
    if (b == ZERO) return a;
    int64_t d = int64_t(b) - a;
    if (d < 0) d += N_;
    Elem z = zech_[size_t(d)];
    if (z == ZERO) return ZERO;
    int64_t r = int64_t(a) + z;
    if (r >= N_) r -= N_;
    return Elem(r);
  }
  Elem neg(Elem a) const {
    if (a == ZERO || p_ == 2) return a;
    int64_t r = int64_t(a) + N_ / 2;
    return Elem(r >= N_ ? r - N_ : r);
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == ZERO || b == ZERO) return ZERO;
    int64_t r = int64_t(a) + b;
    return Elem(r >= N_ ? r - N_ : r);
  }
  Elem inv(Elem a) const {
    if (a == ZERO) throw FieldError("inverse of zero");
    return a == 0 ? 0 : Elem(N_ - a);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, int64_t e) const;

  // Image of an integer under Z -> F_p.
  Elem from_int(int64_t k) const;
  // Polynomial-basis integer encoding (base p digits, constant first).
  uint32_t to_poly(Elem a) const { return a == ZERO ? 0 : exp_[size_t(a)]; }
  Elem from_poly(uint32_t v) const { return v == 0 ? ZERO : log_[v]; }

  // q must be p^m with m | M.
  void check_subfield(uint64_t q) const;
  bool in_subfield(Elem x, uint64_t q) const;
  Elem subfield_gen(uint64_t q) const;
  // Zero first, then ascending discrete log.
  std::vector<Elem> subfield_elements(uint64_t q) const;
  Elem frobenius(Elem x, uint64_t q) const;
  // Log of x relative to the primitive element of F_q (x nonzero, in F_q).
  int64_t sub_log(Elem x, uint64_t q) const;
  Elem sub_exp(int64_t k, uint64_t q) const;

  // Square root inside F_q (smaller discrete log of the two roots).
  std::optional<Elem> sqrt(Elem x, uint64_t q) const;
  std::optional<Elem> sqrt_minus_one(uint64_t q) const;
  // u^2 + v^2 = k with u, v in F_q. k = 0 gives (0, 0); otherwise u scans
  // ascending logs then zero and v is the smaller root.
  std::pair<Elem, Elem> solve_sum_of_squares(Elem k, uint64_t q) const;

  // Trace from F_{Q^d} down to F_Q.
  Elem trace(Elem x, uint64_t Q, uint32_t d) const;

  std::string str(Elem a) const;

 private:
  uint32_t p_, M_;
  uint64_t size_;
  int64_t N_;
  std::vector<uint32_t> modulus_;
  std::vector<uint32_t> exp_;
  std::vector<Elem> log_;
  std::vector<Elem> zech_;
};

}  // namespace gc
