#pragma once
// Closed-form duals of ideal specs, self-orthogonality and counts.

#include "gc/ideals.hpp"

namespace gc {

enum class Metric { Euclidean, Hermitian };
const char* metric_name(Metric m);

// Any dihedral decomposition (the coefficient field is the one the code lives
// over) or a quaternion one.
IdealSpec euclid_dual(const Decomposition& D, const IdealSpec& s);
// Dihedral decomposition built in hermitian mode.
IdealSpec hermitian_dual(const Decomposition& D, const IdealSpec& s);
IdealSpec dual(const Decomposition& D, const IdealSpec& s, Metric m);

// Summand-wise inclusion of ideals.
bool spec_contained(const Decomposition& D, const IdealSpec& a, const IdealSpec& b);

struct SelfOrthReport {
  bool self_orthogonal = false;
  bool self_dual = false;
  int failing_block = -1;  // block index, -1 when none
  std::string reason;
};

// Block clauses of the hermitian self-orthogonality classification.
SelfOrthReport hermitian_selforth(const Decomposition& D, const IdealSpec& s);
// Block clauses for euclidean self-orthogonal Q_n codes.
SelfOrthReport quaternion_euclid_selforth(const Decomposition& D, const IdealSpec& s);
// C subset of its dual, via the closed-form dual.
bool is_selforth(const Decomposition& D, const IdealSpec& s, Metric m);

// Closed-form counts. Throw on uint64 overflow.
uint64_t count_hermitian_selforth(const Decomposition& D);
uint64_t count_euclid_selforth_quaternion(const Decomposition& D);
// Per-block enumeration of admissible block ideals, multiplied.
uint64_t count_selforth_by_blocks(const Decomposition& D, Metric m);
// Admissible ideals of one block (one entry per summand of the block).
std::vector<std::vector<BlockIdeal>> selforth_block_options(const Decomposition& D, size_t block, Metric m);

// Solutions in F_{qc^{2r}} of
//   NegFrob:    x = -x^{qc^r}   (qc odd, includes 0)
//   NegInvFrob: x = -x^{-qc^r}  (qc odd)
//   InvFrob:    x =  x^{-qc^r}  (qc even)
enum class LambdaEq { NegFrob, NegInvFrob, InvFrob };
std::vector<Elem> lambda_solution_set(const FieldTable& F, LambdaEq kind, uint32_t r, uint64_t qc);

}  // namespace gc
