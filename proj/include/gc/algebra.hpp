#pragma once
// Wedderburn decompositions of F[D_n] and F[Q_n] with explicit generator
// images, and the coordinate isomorphism rho : F[G] -> (+) blocks.

#include <array>
#include <vector>

#include "gc/linalg.hpp"
#include "gc/polyfactor.hpp"

namespace gc {

class DelegateToDihedral : public FieldError {
 public:
  using FieldError::FieldError;
};

enum class GroupKind { Dihedral, Quaternion };

// 2x2 matrix, row-major. Scalar summands use only e[0].
struct Mat2 {
  std::array<Elem, 4> e{ZERO, ZERO, ZERO, ZERO};
  Elem& operator()(int i, int j) { return e[size_t(2 * i + j)]; }
  Elem operator()(int i, int j) const { return e[size_t(2 * i + j)]; }
  bool operator==(const Mat2&) const = default;
  static Mat2 make(Elem a, Elem b, Elem c, Elem d) { return Mat2{{a, b, c, d}}; }
  static Mat2 identity() { return make(0, ZERO, ZERO, 0); }
  static Mat2 scalar(Elem x) { return make(x, ZERO, ZERO, x); }
};

Mat2 m2_add(const FieldTable& F, const Mat2& x, const Mat2& y);
Mat2 m2_sub(const FieldTable& F, const Mat2& x, const Mat2& y);
Mat2 m2_mul(const FieldTable& F, const Mat2& x, const Mat2& y);
Mat2 m2_scale(const FieldTable& F, Elem c, const Mat2& x);
Elem m2_det(const FieldTable& F, const Mat2& x);
Mat2 m2_inv(const FieldTable& F, const Mat2& x);
Mat2 m2_pow(const FieldTable& F, const Mat2& x, int64_t k);
Mat2 m2_frob(const FieldTable& F, const Mat2& x, uint64_t q);

// Z = [[1, -a], [1, -a^{-1}]]; sigma(X) = Z^{-1} X Z.
Mat2 sigma(const FieldTable& F, Elem alpha, const Mat2& x);
Mat2 sigma_inv(const FieldTable& F, Elem alpha, const Mat2& x);
// Z = [[i, -b], [i, -b^{-1}]], i^2 = -1.
Mat2 gamma(const FieldTable& F, Elem i, Elem beta, const Mat2& x);
Mat2 gamma_inv(const FieldTable& F, Elem i, Elem beta, const Mat2& x);
// W = [[w, z], [-z^Q, w^Q]] -> M_2 over the fixed field of x -> x^Q.
// Throws if W is not of that shape.
Mat2 theta(const FieldTable& F, uint64_t Q, Elem i, Elem u, Elem v, const Mat2& w);
Mat2 theta_inv(const FieldTable& F, uint64_t Q, Elem i, Elem u, Elem v, const Mat2& y);

enum class SummandKind {
  Field,  // scalar, d coordinates
  C2,     // F[C_2] as c0 I + c1 S
  Sigma,  // self-reciprocal matrix block, sigma-conjugated images
  Diag,   // diag(alpha, alpha^{-1}), antidiag(1, 1)
  Gamma,  // quaternion, 4 | deg
  Theta,  // quaternion, 4 does not divide deg
  QPair,  // quaternion reciprocal pair
};
const char* summand_kind_name(SummandKind k);

struct Summand {
  SummandKind kind;
  int block = 0;      // index into Decomposition::blocks
  int part = 0;       // position inside its block
  uint32_t d = 1;     // degree of the block field over the coefficient field
  uint64_t field = 0; // order of the block field
  Elem tau = 0;       // primitive element of the block field
  Elem root = ZERO;   // alpha (or its conjugate) / beta / the J0 sign
  Elem s = ZERO;      // root + root^{-1}
  uint64_t Q = 0;     // Theta: q^{deg/2}
  Elem u = ZERO, v = ZERO;  // Theta: u^2 + v^2 = -1
  Mat2 img_a, img_b;
  std::vector<Elem> dual;  // trace-dual basis of 1, tau, ..., tau^{d-1}

  bool is_matrix() const { return kind != SummandKind::Field && kind != SummandKind::C2; }
  int entries() const { return kind == SummandKind::Field ? 1 : kind == SummandKind::C2 ? 2 : 4; }
  int coords() const { return entries() * int(d); }
};

struct Block {
  FactorClass cls;
  std::vector<int> summands;
};

struct Decomposition {
  const FieldTable* F = nullptr;
  GroupKind group = GroupKind::Dihedral;
  int n = 0;
  uint64_t q = 0;  // coefficient field
  FactorSystem fs;
  Elem sqrt_m1 = ZERO;  // quaternion only
  std::vector<Block> blocks;
  std::vector<Summand> sum;
  Matrix phi, phi_inv;

  int rotations() const { return group == GroupKind::Dihedral ? n : 2 * n; }
  int order() const { return 2 * rotations(); }
  // Column index of a^i b^e.
  int index(int i, int e) const {
    int r = rotations();
    return ((i % r) + r) % r + e * r;
  }
  const FieldTable& field() const { return *F; }
};

using BlockValue = std::vector<Mat2>;

// mode is Euclidean (over F_q) or Hermitian (over F_q, q square).
Decomposition build_dihedral_decomposition(const FieldTable& F, int n, uint64_t q, FactorMode mode);
// Throws DelegateToDihedral when q = 1 mod 4 or n even.
Decomposition build_quaternion_decomposition(const FieldTable& F, int n, uint64_t q);

// Index of the product of group elements x, y (column indices).
int group_mul(const Decomposition& D, int x, int y);
std::vector<Elem> algebra_mul(const Decomposition& D, const std::vector<Elem>& u,
                              const std::vector<Elem>& v);

BlockValue image_of(const Decomposition& D, int g);
BlockValue rho(const Decomposition& D, const std::vector<Elem>& u);
std::vector<Elem> rho_inv(const Decomposition& D, const BlockValue& x);
std::vector<Elem> flatten(const Decomposition& D, const BlockValue& x);
BlockValue unflatten(const Decomposition& D, const std::vector<Elem>& c);

BlockValue bv_zero(const Decomposition& D);
BlockValue bv_one(const Decomposition& D);
BlockValue bv_mul(const Decomposition& D, const BlockValue& x, const BlockValue& y);
BlockValue bv_add(const Decomposition& D, const BlockValue& x, const BlockValue& y);

// Coordinates of x (in the block field) over the coefficient field, and back.
std::vector<Elem> field_coords(const Decomposition& D, const Summand& s, Elem x);
Elem field_from_coords(const Decomposition& D, const Summand& s, const Elem* c);

}  // namespace gc
