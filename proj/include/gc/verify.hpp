#pragma once
// Oracle-equivalence checks over one algebra.

#include <map>
#include <string>

#include "gc/duality.hpp"

namespace gc {

struct VerifyOptions {
  int iso_samples = 500;
  int dual_samples = 200;
  uint64_t seed = 1;
};

struct CheckTally {
  uint64_t checks = 0, failures = 0;
  std::string first_failure;
};

struct VerifyReport {
  std::string algebra;
  std::map<std::string, CheckTally> tallies;
  uint64_t failures() const;
};

std::string algebra_name(const Decomposition& D);

// rho multiplicativity against the convolution oracle, round trips and
// generator relations.
void verify_isomorphism(const Decomposition& D, const VerifyOptions& opt, VerifyReport& rep);
// Closed-form duals against nullspace duals, involution, dimensions,
// self-orthogonality against containment, ideal round trips. Hermitian
// checks run when D is a hermitian dihedral decomposition.
void verify_duality(const Decomposition& D, const VerifyOptions& opt, VerifyReport& rep);

VerifyReport verify_all(const Decomposition& D, const VerifyOptions& opt);

}  // namespace gc
