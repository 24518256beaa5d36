#pragma once
// Factorisation of x^n - 1 (and x^n + 1) via cyclotomic cosets, plus the
// reciprocal / conjugate classification of the irreducible factors.

#include <string>
#include <vector>

#include "gc/field.hpp"

namespace gc {

// Coefficients over the master field, constant term first.
using Poly = std::vector<Elem>;

enum class ClassTag { J0, J1, J2, J3, J4, SelfRecip, RecipPair };
enum class FactorMode { Euclidean, Hermitian, Quaternion };

const char* tag_name(ClassTag t);
const char* mode_name(FactorMode m);

struct FactorClass {
  ClassTag tag;
  Poly rep;                    // canonical representative f_j
  std::vector<Poly> companions;  // distinct members besides rep: f*, fbar, f-dagger as they occur
  int degree = 0;              // r_j
  Elem root = ZERO;            // alpha_j, smallest discrete log among roots of rep
  std::vector<int> coset;      // exponents e with zeta^e a root of rep
  bool plus = false;           // quaternion mode: divides x^n + 1
};

struct FactorSystem {
  FactorMode mode;
  int n = 0;
  uint64_t q = 0;       // coefficient field order
  uint64_t conj = 0;    // hermitian mode: sqrt(q), the conjugation exponent
  std::vector<FactorClass> classes;       // divisors of x^n - 1
  std::vector<FactorClass> plus_classes;  // quaternion: divisors of x^n + 1
  // Quaternion counts in the sense of the usual notation: r, t include x-1, x+1.
  int r = 0, s = 0, t = 0, k = 0;
};

// q-cyclotomic cosets mod n, each sorted, ordered by least element.
std::vector<std::vector<int>> cyclotomic_cosets(int n, uint64_t q);

// Degree M of the master field F_{p^M} needed for (q, n, group).
uint32_t master_degree(uint64_t q, int n, bool quaternion);

std::string poly_str(const FieldTable& F, const Poly& f, uint64_t q);
Poly poly_mul(const FieldTable& F, const Poly& a, const Poly& b);
Elem poly_eval(const FieldTable& F, const Poly& f, Elem x);
// Lexicographic by discrete logs from the leading coefficient down; zero sorts first.
bool poly_less(const Poly& a, const Poly& b);

Poly reciprocal(const FieldTable& F, const Poly& f);
Poly conjugate(const FieldTable& F, const Poly& f, uint64_t qc);
Poly dagger(const FieldTable& F, const Poly& f, uint64_t qc);

// Monic irreducible factors of x^n - 1 over F_q, one per coset.
std::vector<Poly> factor_cyclic(const FieldTable& F, int n, uint64_t q);

// Classify a complete factor list of x^n - 1 over F_q. Hermitian mode needs q square.
FactorSystem classify(const FieldTable& F, int n, uint64_t q, const std::vector<Poly>& factors,
                      FactorMode mode);

FactorSystem factor_dihedral(const FieldTable& F, int n, uint64_t q, FactorMode mode);
// n odd, gcd(q, 4n) = 1.
FactorSystem factor_quaternion(const FieldTable& F, int n, uint64_t q);

}  // namespace gc
