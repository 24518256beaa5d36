#include "gc/algebra.hpp"

#include <numeric>

namespace gc {

Mat2 m2_add(const FieldTable& F, const Mat2& x, const Mat2& y) {
  Mat2 r;
  for (size_t k = 0; k < 4; ++k) r.e[k] = F.add(x.e[k], y.e[k]);
  return r;
}

Mat2 m2_sub(const FieldTable& F, const Mat2& x, const Mat2& y) {
  Mat2 r;
  for (size_t k = 0; k < 4; ++k) r.e[k] = F.sub(x.e[k], y.e[k]);
  return r;
}

Mat2 m2_mul(const FieldTable& F, const Mat2& x, const Mat2& y) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = F.add(F.mul(x(i, 0), y(0, j)), F.mul(x(i, 1), y(1, j)));
  return r;
}

Mat2 m2_scale(const FieldTable& F, Elem c, const Mat2& x) {
  Mat2 r;
  for (size_t k = 0; k < 4; ++k) r.e[k] = F.mul(c, x.e[k]);
  return r;
}

Elem m2_det(const FieldTable& F, const Mat2& x) {
  return F.sub(F.mul(x(0, 0), x(1, 1)), F.mul(x(0, 1), x(1, 0)));
}

Mat2 m2_inv(const FieldTable& F, const Mat2& x) {
  Elem di = F.inv(m2_det(F, x));
  return m2_scale(F, di, Mat2::make(x(1, 1), F.neg(x(0, 1)), F.neg(x(1, 0)), x(0, 0)));
}

Mat2 m2_pow(const FieldTable& F, const Mat2& x, int64_t k) {
  Mat2 base = k < 0 ? m2_inv(F, x) : x;
  if (k < 0) k = -k;
  Mat2 r = Mat2::identity();
  while (k) {
    if (k & 1) r = m2_mul(F, r, base);
    base = m2_mul(F, base, base);
    k >>= 1;
  }
  return r;
}

Mat2 m2_frob(const FieldTable& F, const Mat2& x, uint64_t q) {
  Mat2 r;
  for (size_t k = 0; k < 4; ++k) r.e[k] = F.frobenius(x.e[k], q);
  return r;
}

namespace {

Mat2 conj_by(const FieldTable& F, const Mat2& z, const Mat2& x) {
  return m2_mul(F, m2_mul(F, m2_inv(F, z), x), z);
}

Mat2 conj_by_inv(const FieldTable& F, const Mat2& z, const Mat2& x) {
  return m2_mul(F, m2_mul(F, z, x), m2_inv(F, z));
}

Mat2 z_sigma(const FieldTable& F, Elem a) {
  return Mat2::make(0, F.neg(a), 0, F.neg(F.inv(a)));
}

Mat2 z_gamma(const FieldTable& F, Elem i, Elem b) {
  return Mat2::make(i, F.neg(b), i, F.neg(F.inv(b)));
}

uint64_t ipow(uint64_t b, uint64_t e) {
  uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

Mat2 sigma(const FieldTable& F, Elem alpha, const Mat2& x) { return conj_by(F, z_sigma(F, alpha), x); }
Mat2 sigma_inv(const FieldTable& F, Elem alpha, const Mat2& x) {
  return conj_by_inv(F, z_sigma(F, alpha), x);
}
Mat2 gamma(const FieldTable& F, Elem i, Elem beta, const Mat2& x) {
  return conj_by(F, z_gamma(F, i, beta), x);
}
Mat2 gamma_inv(const FieldTable& F, Elem i, Elem beta, const Mat2& x) {
  return conj_by_inv(F, z_gamma(F, i, beta), x);
}

Mat2 theta(const FieldTable& F, uint64_t Q, Elem i, Elem u, Elem v, const Mat2& W) {
  Elem w = W(0, 0), z = W(0, 1);
  Elem wq = F.frobenius(w, Q), zq = F.frobenius(z, Q);
  if (W(1, 0) != F.neg(zq) || W(1, 1) != wq) throw FieldError("theta applied outside its domain");
  Elem h = F.inv(F.from_int(2));
  Elem hi = F.mul(h, F.inv(i));
  Elem x1 = F.mul(h, F.add(w, wq)), x2 = F.mul(hi, F.sub(w, wq));
  Elem x3 = F.mul(h, F.add(z, zq)), x4 = F.mul(hi, F.sub(z, zq));
  Elem x2u = F.mul(x2, u), x2v = F.mul(x2, v), x4u = F.mul(x4, u), x4v = F.mul(x4, v);
  return Mat2::make(F.sub(F.add(x1, x2u), x4v), F.add(F.add(x3, x2v), x4u),
                    F.add(F.add(F.neg(x3), x2v), x4u), F.add(F.sub(x1, x2u), x4v));
}

Mat2 theta_inv(const FieldTable& F, uint64_t Q, Elem i, Elem u, Elem v, const Mat2& Y) {
  Elem h = F.inv(F.from_int(2));
  Elem x1 = F.mul(h, F.add(Y(0, 0), Y(1, 1)));
  Elem x3 = F.mul(h, F.sub(Y(0, 1), Y(1, 0)));
  Elem A = F.mul(h, F.sub(Y(0, 0), Y(1, 1)));
  Elem B = F.mul(h, F.add(Y(0, 1), Y(1, 0)));
  // [u -v; v u] (x2, x4) = (A, B), determinant u^2 + v^2 = -1
  Elem x2 = F.neg(F.add(F.mul(u, A), F.mul(v, B)));
  Elem x4 = F.sub(F.mul(v, A), F.mul(u, B));
  Elem w = F.add(x1, F.mul(x2, i)), z = F.add(x3, F.mul(x4, i));
  return Mat2::make(w, z, F.neg(F.frobenius(z, Q)), F.frobenius(w, Q));
}

const char* summand_kind_name(SummandKind k) {
  switch (k) {
    case SummandKind::Field: return "field";
    case SummandKind::C2: return "c2";
    case SummandKind::Sigma: return "sigma";
    case SummandKind::Diag: return "diag";
    case SummandKind::Gamma: return "gamma";
    case SummandKind::Theta: return "theta";
    case SummandKind::QPair: return "qpair";
  }
  return "?";
}

namespace {

void finish_summand(const FieldTable& F, uint64_t q, Summand& s) {
  s.d = 0;
  for (uint64_t f = 1; f < s.field; f *= q) ++s.d;
  if (ipow(q, s.d) != s.field) throw FieldError("block field is not an extension of the coefficient field");
  s.tau = F.subfield_gen(s.field);
  size_t d = s.d;
  Matrix G(d, d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) G.at(i, j) = F.trace(F.pow(s.tau, int64_t(i + j)), q, s.d);
  auto Gi = inverse(F, G);
  if (!Gi) throw FieldError("degenerate trace form");
  s.dual.assign(d, ZERO);
  for (size_t k = 0; k < d; ++k)
    for (size_t j = 0; j < d; ++j)
      s.dual[k] = F.add(s.dual[k], F.mul(Gi->at(k, j), F.pow(s.tau, int64_t(j))));
}

Mat2 diag_inv(const FieldTable& F, Elem a) { return Mat2::make(a, ZERO, ZERO, F.inv(a)); }
Mat2 antidiag(Elem x) { return Mat2::make(ZERO, x, x, ZERO); }

void finish_decomposition(Decomposition& D) {
  const FieldTable& F = *D.F;
  int total = 0;
  for (auto& s : D.sum) {
    finish_summand(F, D.q, s);
    total += s.coords();
  }
  int G = D.order();
  if (total != G) throw FieldError("dimension audit failed");
  D.phi = Matrix(size_t(G), size_t(G));
  for (int g = 0; g < G; ++g) {
    auto row = flatten(D, image_of(D, g));
    std::copy(row.begin(), row.end(), D.phi.row(size_t(g)));
  }
  auto inv = inverse(F, D.phi);
  if (!inv) throw FieldError("coordinate matrix is singular");
  D.phi_inv = *inv;
}

Summand make_summand(SummandKind k, int block, int part, uint64_t field, Elem root) {
  Summand s;
  s.kind = k;
  s.block = block;
  s.part = part;
  s.field = field;
  s.root = root;
  return s;
}

void add_field_pair(const FieldTable& F, Decomposition& D, Block& blk, int b, uint64_t q, Elem sign) {
  for (int part = 0; part < 2; ++part) {
    Summand s = make_summand(SummandKind::Field, b, part, q, sign);
    s.img_a = Mat2::make(sign, ZERO, ZERO, ZERO);
    s.img_b = Mat2::make(part ? F.minus_one() : 0, ZERO, ZERO, ZERO);
    blk.summands.push_back(int(D.sum.size()));
    D.sum.push_back(s);
  }
}

void add_sigma(const FieldTable& F, Decomposition& D, Block& blk, int b, int part, uint64_t field,
               Elem alpha) {
  Summand s = make_summand(SummandKind::Sigma, b, part, field, alpha);
  s.s = F.add(alpha, F.inv(alpha));
  s.img_a = sigma(F, alpha, diag_inv(F, alpha));
  s.img_b = sigma(F, alpha, antidiag(0));
  blk.summands.push_back(int(D.sum.size()));
  D.sum.push_back(s);
}

void add_diag(const FieldTable& F, Decomposition& D, Block& blk, int b, int part, uint64_t field,
              Elem alpha) {
  Summand s = make_summand(SummandKind::Diag, b, part, field, alpha);
  s.img_a = diag_inv(F, alpha);
  s.img_b = antidiag(0);
  blk.summands.push_back(int(D.sum.size()));
  D.sum.push_back(s);
}

}  // namespace

Decomposition build_dihedral_decomposition(const FieldTable& F, int n, uint64_t q, FactorMode mode) {
  if (mode == FactorMode::Quaternion) throw FieldError("use build_quaternion_decomposition");
  if (std::gcd(uint64_t(n), uint64_t(F.p())) != 1) throw FieldError("characteristic divides n");
  Decomposition D;
  D.F = &F;
  D.group = GroupKind::Dihedral;
  D.n = n;
  D.q = q;
  D.fs = factor_dihedral(F, n, q, mode);
  uint64_t qc = D.fs.conj;
  for (auto& c : D.fs.classes) {
    int b = int(D.blocks.size());
    Block blk{c, {}};
    uint64_t half = c.degree % 2 == 0 ? ipow(q, uint64_t(c.degree / 2)) : 0;
    uint64_t full = ipow(q, uint64_t(c.degree));
    switch (c.tag) {
      case ClassTag::J0:
        if (F.p() != 2) {
          add_field_pair(F, D, blk, b, q, c.root);
        } else {
          Summand s = make_summand(SummandKind::C2, b, 0, q, 0);
          s.img_a = Mat2::identity();
          s.img_b = antidiag(0);
          blk.summands.push_back(int(D.sum.size()));
          D.sum.push_back(s);
        }
        break;
      case ClassTag::SelfRecip:
        add_sigma(F, D, blk, b, 0, half, c.root);
        break;
      case ClassTag::J1:
        add_sigma(F, D, blk, b, 0, half, c.root);
        add_sigma(F, D, blk, b, 1, half, F.frobenius(c.root, qc));
        break;
      case ClassTag::RecipPair:
      case ClassTag::J2:
      case ClassTag::J3:
        add_diag(F, D, blk, b, 0, full, c.root);
        break;
      case ClassTag::J4:
        add_diag(F, D, blk, b, 0, full, c.root);
        add_diag(F, D, blk, b, 1, full, F.frobenius(c.root, qc));
        break;
    }
    D.blocks.push_back(blk);
  }
  finish_decomposition(D);
  return D;
}

Decomposition build_quaternion_decomposition(const FieldTable& F, int n, uint64_t q) {
  if (n % 2 == 0 || q % 4 == 1)
    throw DelegateToDihedral("DELEGATE_TO_DIHEDRAL: F_q[Q_n] is isomorphic to F_q[D_2n] here");
  Decomposition D;
  D.F = &F;
  D.group = GroupKind::Quaternion;
  D.n = n;
  D.q = q;
  D.fs = factor_quaternion(F, n, q);
  auto i = F.sqrt_minus_one(q * q);
  if (!i) throw FieldError("no square root of -1 in F_q^2");
  D.sqrt_m1 = *i;
  Elem m1 = F.minus_one();
  for (auto& c : D.fs.classes) {
    int b = int(D.blocks.size());
    Block blk{c, {}};
    if (c.tag == ClassTag::J0)
      add_field_pair(F, D, blk, b, q, c.root);
    else if (c.tag == ClassTag::SelfRecip)
      add_sigma(F, D, blk, b, 0, ipow(q, uint64_t(c.degree / 2)), c.root);
    else
      add_diag(F, D, blk, b, 0, ipow(q, uint64_t(c.degree)), c.root);
    D.blocks.push_back(blk);
  }
  for (auto& c : D.fs.plus_classes) {
    int b = int(D.blocks.size());
    Block blk{c, {}};
    Elem beta = c.root;
    Summand s;
    if (c.tag == ClassTag::J0) {
      s = make_summand(SummandKind::Field, b, 0, q * q, beta);
      s.img_a = Mat2::make(m1, ZERO, ZERO, ZERO);
      s.img_b = Mat2::make(D.sqrt_m1, ZERO, ZERO, ZERO);
    } else if (c.tag == ClassTag::SelfRecip && c.degree % 4 == 0) {
      s = make_summand(SummandKind::Gamma, b, 0, ipow(q, uint64_t(c.degree / 2)), beta);
      s.s = F.add(beta, F.inv(beta));
      s.img_a = gamma(F, D.sqrt_m1, beta, diag_inv(F, beta));
      s.img_b = gamma(F, D.sqrt_m1, beta, antidiag(D.sqrt_m1));
    } else if (c.tag == ClassTag::SelfRecip) {
      s = make_summand(SummandKind::Theta, b, 0, ipow(q, uint64_t(c.degree / 2)), beta);
      s.s = F.add(beta, F.inv(beta));
      s.Q = s.field;
      auto [u, v] = F.solve_sum_of_squares(m1, s.Q);
      s.u = u;
      s.v = v;
      s.img_a = theta(F, s.Q, D.sqrt_m1, u, v, diag_inv(F, beta));
      s.img_b = theta(F, s.Q, D.sqrt_m1, u, v, antidiag(D.sqrt_m1));
    } else {
      s = make_summand(SummandKind::QPair, b, 0, ipow(q, uint64_t(c.degree)), beta);
      s.img_a = diag_inv(F, beta);
      s.img_b = Mat2::make(ZERO, m1, 0, ZERO);
    }
    blk.summands.push_back(int(D.sum.size()));
    D.sum.push_back(s);
    D.blocks.push_back(blk);
  }
  finish_decomposition(D);
  return D;
}

int group_mul(const Decomposition& D, int x, int y) {
  int r = D.rotations();
  int i = x % r, e = x / r, j = y % r, f = y / r;
  int k = e ? i - j : i + j;
  int g = e ^ f;
  if (D.group == GroupKind::Quaternion && e && f) k += D.n;
  return D.index(k, g);
}

std::vector<Elem> algebra_mul(const Decomposition& D, const std::vector<Elem>& u,
                              const std::vector<Elem>& v) {
  const FieldTable& F = *D.F;
  int G = D.order();
  if (int(u.size()) != G || int(v.size()) != G) throw FieldError("element length mismatch");
  std::vector<Elem> w(size_t(G), ZERO);
  for (int x = 0; x < G; ++x) {
    if (u[size_t(x)] == ZERO) continue;
    for (int y = 0; y < G; ++y) {
      if (v[size_t(y)] == ZERO) continue;
      size_t z = size_t(group_mul(D, x, y));
      w[z] = F.add(w[z], F.mul(u[size_t(x)], v[size_t(y)]));
    }
  }
  return w;
}

BlockValue image_of(const Decomposition& D, int g) {
  const FieldTable& F = *D.F;
  int r = D.rotations();
  int i = g % r, e = g / r;
  BlockValue out;
  for (auto& s : D.sum) {
    Mat2 m;
    if (s.kind == SummandKind::Field) {
      m = Mat2::make(F.mul(F.pow(s.img_a.e[0], i), e ? s.img_b.e[0] : 0), ZERO, ZERO, ZERO);
    } else {
      m = m2_pow(F, s.img_a, i);
      if (e) m = m2_mul(F, m, s.img_b);
    }
    out.push_back(m);
  }
  return out;
}

std::vector<Elem> field_coords(const Decomposition& D, const Summand& s, Elem x) {
  const FieldTable& F = *D.F;
  std::vector<Elem> c(s.d);
  for (size_t k = 0; k < s.d; ++k) c[k] = F.trace(F.mul(x, s.dual[k]), D.q, s.d);
  return c;
}

Elem field_from_coords(const Decomposition& D, const Summand& s, const Elem* c) {
  const FieldTable& F = *D.F;
  Elem x = ZERO;
  for (size_t k = 0; k < s.d; ++k) x = F.add(x, F.mul(c[k], F.pow(s.tau, int64_t(k))));
  return x;
}

std::vector<Elem> flatten(const Decomposition& D, const BlockValue& x) {
  if (x.size() != D.sum.size()) throw FieldError("block value has the wrong number of summands");
  std::vector<Elem> out;
  out.reserve(size_t(D.order()));
  for (size_t k = 0; k < D.sum.size(); ++k) {
    const Summand& s = D.sum[k];
    int ne = s.entries();
    for (int t = 0; t < ne; ++t) {
      Elem e = x[k].e[size_t(t)];
      auto c = field_coords(D, s, e);
      if (field_from_coords(D, s, c.data()) != e) throw FieldError("block entry outside its block field");
      out.insert(out.end(), c.begin(), c.end());
    }
    if (s.kind == SummandKind::C2 && (x[k](1, 0) != x[k](0, 1) || x[k](1, 1) != x[k](0, 0)))
      throw FieldError("C2 block value not of the form c0 I + c1 S");
    if (s.kind == SummandKind::Field && (x[k](0, 1) != ZERO || x[k](1, 0) != ZERO || x[k](1, 1) != ZERO))
      throw FieldError("scalar block value with matrix entries");
  }
  return out;
}

BlockValue unflatten(const Decomposition& D, const std::vector<Elem>& c) {
  if (int(c.size()) != D.order()) throw FieldError("coordinate vector length mismatch");
  BlockValue out;
  size_t pos = 0;
  for (auto& s : D.sum) {
    Mat2 m;
    int ne = s.entries();
    for (int t = 0; t < ne; ++t) {
      m.e[size_t(t)] = field_from_coords(D, s, c.data() + pos);
      pos += s.d;
    }
    if (s.kind == SummandKind::C2) m = Mat2::make(m.e[0], m.e[1], m.e[1], m.e[0]);
    out.push_back(m);
  }
  return out;
}

BlockValue rho(const Decomposition& D, const std::vector<Elem>& u) {
  if (int(u.size()) != D.order()) throw FieldError("element length mismatch");
  return unflatten(D, vec_mat(*D.F, u, D.phi));
}

std::vector<Elem> rho_inv(const Decomposition& D, const BlockValue& x) {
  return vec_mat(*D.F, flatten(D, x), D.phi_inv);
}

BlockValue bv_zero(const Decomposition& D) { return BlockValue(D.sum.size()); }

BlockValue bv_one(const Decomposition& D) {
  BlockValue out;
  for (auto& s : D.sum)
    out.push_back(s.kind == SummandKind::Field ? Mat2::make(0, ZERO, ZERO, ZERO) : Mat2::identity());
  return out;
}

BlockValue bv_mul(const Decomposition& D, const BlockValue& x, const BlockValue& y) {
  BlockValue out(x.size());
  for (size_t k = 0; k < x.size(); ++k) out[k] = m2_mul(*D.F, x[k], y[k]);
  return out;
}

BlockValue bv_add(const Decomposition& D, const BlockValue& x, const BlockValue& y) {
  BlockValue out(x.size());
  for (size_t k = 0; k < x.size(); ++k) out[k] = m2_add(*D.F, x[k], y[k]);
  return out;
}

}  // namespace gc
