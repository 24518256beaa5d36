#pragma once
// Left ideals as per-summand row-echelon generators, and their codes.

#include <functional>
#include <optional>
#include <string>

#include "gc/algebra.hpp"

namespace gc {

// Per-summand ideal. Row means <[1 lambda; 0 0]>; on a C2 summand Row with
// lambda = 1 is the middle ideal <I + S>.
enum class IdealKind { Zero, Full, E01, Row };

struct BlockIdeal {
  IdealKind kind = IdealKind::Zero;
  Elem lambda = ZERO;
  bool operator==(const BlockIdeal&) const = default;
};

struct IdealSpec {
  std::vector<BlockIdeal> parts;  // one per summand
  bool operator==(const IdealSpec&) const = default;
};

struct CodeRecord {
  Matrix gen;      // basis rows, columns ordered 1, a, ..., b, ab, ...
  int length = 0;  // |G|
  int k = 0;
};

BlockIdeal c2_mid();
// Generator matrix of a summand ideal inside its summand.
Mat2 ideal_generator(const Decomposition& D, size_t summand, const BlockIdeal& b);
// Rank of the generator (0, 1 or 2; C2 mid counts as 1).
int ideal_rank(const Decomposition& D, size_t summand, const BlockIdeal& b);
void validate(const Decomposition& D, const IdealSpec& s);

int ideal_dimension(const Decomposition& D, const IdealSpec& s);
IdealSpec zero_spec(const Decomposition& D);
IdealSpec full_spec(const Decomposition& D);

// Basis in block coordinates, then mapped through rho_inv.
CodeRecord ideal_to_code(const Decomposition& D, const IdealSpec& s);
// nullopt means NOT_AN_IDEAL.
std::optional<IdealSpec> code_to_ideal(const Decomposition& D, const Matrix& gen);
// Row space of { g u : g in G }.
Matrix left_ideal_of(const Decomposition& D, const std::vector<Elem>& u);
// Is the row space closed under left multiplication by a and b?
bool is_left_ideal(const Decomposition& D, const Matrix& gen);

std::string to_string(const Decomposition& D, const IdealSpec& s);
IdealSpec parse_spec(const Decomposition& D, const std::string& text);

// Options per summand in enumeration order: zero, e01, row(0), row(tau^k)
// by ascending k, full. Field summands: zero, full. C2: zero, mid, full.
std::vector<BlockIdeal> summand_options(const Decomposition& D, size_t summand);
// Saturates at UINT64_MAX.
uint64_t count_ideals(const Decomposition& D);
// Mixed radix, first summand most significant.
IdealSpec spec_at(const Decomposition& D, uint64_t index);

using IdealFilter = std::function<bool(size_t summand, const BlockIdeal&)>;
// Visits specs in order until visit returns false. Throws when the (filtered)
// count exceeds budget. Returns the number visited.
uint64_t enumerate_ideals(const Decomposition& D, const std::function<bool(const IdealSpec&)>& visit,
                          uint64_t budget, const IdealFilter& filter = nullptr);

}  // namespace gc
