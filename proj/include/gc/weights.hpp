#pragma once
// Minimum distance of linear codes and hermitian CSS quantum parameters.

#include <string>

#include "gc/duality.hpp"
#include "gc/kernels.hpp"
#include "gc/linalg.hpp"

namespace gc {

enum class BoundStatus { Exact, UpperBound, LowerBound };
const char* status_name(BoundStatus s);

struct DistanceResult {
  bool empty = false;  // zero code, no nonzero word
  int value = 0;       // upper when found, else lower
  int lower = 0;
  int upper = 0;       // n + 1 while no word is known
  BoundStatus status = BoundStatus::Exact;
  std::vector<Elem> witness;  // a word of weight `upper`
  uint64_t work = 0;          // words enumerated or column sets visited
  std::string method;
};

struct IsdOptions {
  uint64_t work_budget = uint64_t(1) << 36;
  int max_info_weight = 0;  // 0: no cap
  int max_info_sets = 0;    // 0: all disjoint sets
  const kernels::Ops* ops = nullptr;  // nullptr: best available
};

// Full enumeration; throws when q^k exceeds budget.
DistanceResult min_distance_exhaustive(const FieldTable& F, uint64_t q, const Matrix& gen,
                                       uint64_t budget = uint64_t(1) << 24, const kernels::Ops* ops = nullptr);

// Brouwer-Zimmermann enumeration over disjoint information sets. gen must have
// full row rank. Words in the row space of `exclude` are skipped.
DistanceResult min_distance_isd(const FieldTable& F, uint64_t q, const Matrix& gen, const IsdOptions& opt = {},
                                const Matrix* exclude = nullptr);

// Smallest weight of { z : H z^T = 0 } outside span(exclude), by growing sets
// of dependent columns of H. Exact unless the visit budget runs out, in which
// case the result is a lower bound.
DistanceResult min_weight_parity_search(const FieldTable& F, const Matrix& H, const Matrix* exclude,
                                        uint64_t budget = uint64_t(1) << 32);

struct CssOptions {
  IsdOptions isd;
  uint64_t parity_budget = uint64_t(1) << 32;
  bool code_distance = true;  // also compute d(C)
};

struct QuantumRecord {
  int n = 0, k = 0, kq = 0;
  uint64_t q_code = 0, q_quantum = 0;
  bool self_dual = false;
  DistanceResult dC;     // d(C), when requested
  DistanceResult dDual;  // d(C^{perp_H}), the floor for d_Q
  DistanceResult dQ;     // min weight of C^{perp_H} \ C
};

// Throws FieldError unless s is hermitian self-orthogonal.
QuantumRecord css_hermitian(const Decomposition& D, const IdealSpec& s, const CssOptions& opt = {});

}  // namespace gc
