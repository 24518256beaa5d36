#pragma once
// Brute-force reference implementations for validation. Shares only the
// field tables with the rest of the library.

#include <optional>
#include <vector>

#include "gc/field.hpp"

namespace gc::oracle {

enum class Group { Dihedral, Quaternion };

using Vec = std::vector<Elem>;
using Rows = std::vector<Vec>;

// Group elements are a^i b^e, stored at column i + e*m with m = n (dihedral)
// or 2n (quaternion).
int group_order(Group g, int n);
int group_mul(Group g, int n, int x, int y);
Vec group_algebra_mul(const FieldTable& F, Group g, int n, const Vec& u, const Vec& v);

// Independent Gaussian elimination.
Rows echelon(const FieldTable& F, Rows m);
size_t rank(const FieldTable& F, const Rows& m);
Rows nullspace(const FieldTable& F, const Rows& m, size_t cols);
// Every row of b lies in span(a).
bool contains(const FieldTable& F, const Rows& a, const Rows& b);
bool same_space(const FieldTable& F, const Rows& a, const Rows& b);

// Euclidean: nullspace. Hermitian: nullspace, then x -> x^qc entrywise.
Rows dual_nullspace(const FieldTable& F, const Rows& gen, size_t cols, bool hermitian, uint64_t qc);
bool is_left_ideal(const FieldTable& F, Group g, int n, const Rows& gen);
bool is_self_orthogonal(const FieldTable& F, const Rows& gen, size_t cols, bool hermitian, uint64_t qc);

// Minimum weight by full enumeration over F_q; nullopt for the zero code.
// Throws when q^k exceeds budget.
std::optional<int> min_distance(const FieldTable& F, uint64_t q, const Rows& gen, uint64_t budget);

}  // namespace gc::oracle
