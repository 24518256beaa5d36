#include "gc/duality.hpp"

namespace gc {

const char* metric_name(Metric m) { return m == Metric::Euclidean ? "euclidean" : "hermitian"; }

namespace {

uint64_t checked_mul(uint64_t a, uint64_t b) {
  uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw FieldError("count overflows 64 bits");
  return r;
}

uint64_t checked_add(uint64_t a, uint64_t b) {
  uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw FieldError("count overflows 64 bits");
  return r;
}

uint64_t checked_pow(uint64_t b, uint64_t e) {
  uint64_t r = 1;
  while (e--) r = checked_mul(r, b);
  return r;
}

// x^{qc^e}
Elem frob_iter(const FieldTable& F, Elem x, uint64_t qc, int e) {
  for (int i = 0; i < e; ++i) x = F.frobenius(x, qc);
  return x;
}

bool trivial(const BlockIdeal& b) { return b.kind == IdealKind::Zero || b.kind == IdealKind::Full; }

BlockIdeal complement(const BlockIdeal& b) {
  if (b.kind == IdealKind::Zero) return {IdealKind::Full, ZERO};
  if (b.kind == IdealKind::Full) return {IdealKind::Zero, ZERO};
  throw FieldError("complement of a proper ideal");
}

// Row echelon form of the rank-1 ideal generated by the row (a b).
BlockIdeal rank1(const FieldTable& F, Elem a, Elem b) {
  if (a != ZERO) return {IdealKind::Row, F.div(b, a)};
  if (b != ZERO) return {IdealKind::E01, ZERO};
  throw FieldError("degenerate rank-1 generator");
}

BlockIdeal euclid_summand(const Decomposition& D, size_t k, const BlockIdeal& b) {
  const FieldTable& F = *D.F;
  const Summand& s = D.sum[k];
  if (trivial(b)) return complement(b);
  Elem two = F.from_int(2);
  switch (s.kind) {
    case SummandKind::Sigma:
      if (b.kind == IdealKind::E01) return rank1(F, two, F.neg(s.s));
      return rank1(F, F.add(s.s, F.mul(two, b.lambda)), F.sub(F.neg(two), F.mul(s.s, b.lambda)));
    case SummandKind::Diag:
      return b.kind == IdealKind::E01 ? b : BlockIdeal{IdealKind::Row, F.neg(b.lambda)};
    default:
      // C2 middle ideal and the quaternion B side are self-paired
      return b;
  }
}

// X1 (from the first summand's ideal X) and Y1 (from the second's Y).
BlockIdeal herm_x1(const Decomposition& D, const Block& blk, const BlockIdeal& X) {
  const FieldTable& F = *D.F;
  if (trivial(X)) return complement(X);
  uint64_t qc = D.fs.conj;
  const Summand& s0 = D.sum[size_t(blk.summands[0])];
  Elem two = F.from_int(2);
  switch (blk.cls.tag) {
    case ClassTag::J1:
      if (X.kind == IdealKind::E01) return rank1(F, two, F.neg(F.frobenius(s0.s, qc)));
      return rank1(F, F.frobenius(F.add(F.mul(two, X.lambda), s0.s), qc),
                   F.frobenius(F.sub(F.neg(two), F.mul(s0.s, X.lambda)), qc));
    case ClassTag::J2:
      if (X.kind == IdealKind::E01) return X;
      return {IdealKind::Row, F.neg(frob_iter(F, X.lambda, qc, blk.cls.degree))};
    case ClassTag::J3:
      if (X.kind == IdealKind::E01) return {IdealKind::Row, ZERO};
      return rank1(F, F.neg(frob_iter(F, X.lambda, qc, blk.cls.degree)), 0);
    case ClassTag::J4:
      if (X.kind == IdealKind::E01) return X;
      return {IdealKind::Row, F.neg(F.frobenius(X.lambda, qc))};
    default: throw FieldError("not a hermitian block");
  }
}

BlockIdeal herm_y1(const Decomposition& D, const Block& blk, const BlockIdeal& Y) {
  const FieldTable& F = *D.F;
  if (trivial(Y)) return complement(Y);
  uint64_t qc = D.fs.conj;
  int r = blk.cls.degree;
  const Summand& s0 = D.sum[size_t(blk.summands[0])];
  Elem two = F.from_int(2);
  if (blk.cls.tag == ClassTag::J1) {
    if (Y.kind == IdealKind::E01) return rank1(F, two, F.neg(s0.s));
    Elem mu = frob_iter(F, Y.lambda, qc, r - 1);
    return rank1(F, F.add(F.mul(two, mu), s0.s), F.sub(F.neg(two), F.mul(s0.s, mu)));
  }
  if (Y.kind == IdealKind::E01) return Y;
  return {IdealKind::Row, F.neg(frob_iter(F, Y.lambda, qc, 2 * r - 1))};
}

bool summand_contained(const BlockIdeal& a, const BlockIdeal& b) {
  if (a.kind == IdealKind::Zero || b.kind == IdealKind::Full) return true;
  if (a.kind == IdealKind::Full || b.kind == IdealKind::Zero) return false;
  return a == b;
}

SelfOrthReport finish(const Decomposition& D, const IdealSpec& s, Metric m, SelfOrthReport rep) {
  if (rep.self_orthogonal) rep.self_dual = dual(D, s, m) == s;
  return rep;
}

SelfOrthReport fail(size_t block, const std::string& why) {
  SelfOrthReport r;
  r.failing_block = int(block);
  r.reason = why;
  return r;
}

}  // namespace

IdealSpec euclid_dual(const Decomposition& D, const IdealSpec& s) {
  validate(D, s);
  IdealSpec out = s;
  for (size_t k = 0; k < s.parts.size(); ++k) out.parts[k] = euclid_summand(D, k, s.parts[k]);
  return out;
}

IdealSpec hermitian_dual(const Decomposition& D, const IdealSpec& s) {
  if (D.group != GroupKind::Dihedral || D.fs.mode != FactorMode::Hermitian)
    throw FieldError("hermitian dual needs a hermitian dihedral decomposition");
  validate(D, s);
  IdealSpec out = s;
  for (auto& blk : D.blocks) {
    size_t k0 = size_t(blk.summands[0]);
    switch (blk.cls.tag) {
      case ClassTag::J0:
        for (int k : blk.summands) out.parts[size_t(k)] = euclid_summand(D, size_t(k), s.parts[size_t(k)]);
        break;
      case ClassTag::J2:
      case ClassTag::J3:
        out.parts[k0] = herm_x1(D, blk, s.parts[k0]);
        break;
      case ClassTag::J1:
      case ClassTag::J4: {
        size_t k1 = size_t(blk.summands[1]);
        out.parts[k0] = herm_y1(D, blk, s.parts[k1]);
        out.parts[k1] = herm_x1(D, blk, s.parts[k0]);
        break;
      }
      default: throw FieldError("unexpected class in hermitian decomposition");
    }
  }
  return out;
}

IdealSpec dual(const Decomposition& D, const IdealSpec& s, Metric m) {
  return m == Metric::Euclidean ? euclid_dual(D, s) : hermitian_dual(D, s);
}

bool spec_contained(const Decomposition& D, const IdealSpec& a, const IdealSpec& b) {
  validate(D, a);
  validate(D, b);
  for (size_t k = 0; k < a.parts.size(); ++k)
    if (!summand_contained(a.parts[k], b.parts[k])) return false;
  return true;
}

bool is_selforth(const Decomposition& D, const IdealSpec& s, Metric m) {
  return spec_contained(D, s, dual(D, s, m));
}

SelfOrthReport hermitian_selforth(const Decomposition& D, const IdealSpec& s) {
  if (D.group != GroupKind::Dihedral || D.fs.mode != FactorMode::Hermitian)
    throw FieldError("hermitian classification needs a hermitian dihedral decomposition");
  validate(D, s);
  const FieldTable& F = *D.F;
  uint64_t qc = D.fs.conj;
  for (size_t b = 0; b < D.blocks.size(); ++b) {
    const Block& blk = D.blocks[b];
    const BlockIdeal& X = s.parts[size_t(blk.summands[0])];
    int r = blk.cls.degree;
    switch (blk.cls.tag) {
      case ClassTag::J0:
        for (int k : blk.summands) {
          const BlockIdeal& I = s.parts[size_t(k)];
          bool ok = I.kind == IdealKind::Zero || (D.sum[size_t(k)].kind == SummandKind::C2 && I == c2_mid());
          if (!ok) return fail(b, "J0 block must be zero (or the middle ideal in characteristic 2)");
        }
        break;
      case ClassTag::J1:
      case ClassTag::J4: {
        const BlockIdeal& Y = s.parts[size_t(blk.summands[1])];
        if (X.kind == IdealKind::Zero || Y.kind == IdealKind::Zero) break;
        if (X.kind == IdealKind::Full || Y.kind == IdealKind::Full)
          return fail(b, "paired block with a full summand and a nonzero partner");
        if (Y != herm_x1(D, blk, X)) return fail(b, "second summand is not matched to the first");
        break;
      }
      case ClassTag::J2:
        if (X.kind == IdealKind::Zero || X.kind == IdealKind::E01) break;
        if (X.kind == IdealKind::Full) return fail(b, "J2 block is full");
        if (X.lambda != F.neg(frob_iter(F, X.lambda, qc, r)))
          return fail(b, "J2 lambda does not satisfy x = -x^(q^r)");
        break;
      case ClassTag::J3:
        if (X.kind == IdealKind::Zero) break;
        if (X.kind != IdealKind::Row || X.lambda == ZERO) return fail(b, "J3 block must be zero or row(lambda != 0)");
        if (X.lambda != F.neg(frob_iter(F, F.inv(X.lambda), qc, r)))
          return fail(b, "J3 lambda does not satisfy x = -x^(-q^r)");
        break;
      default: throw FieldError("unexpected class in hermitian decomposition");
    }
  }
  SelfOrthReport ok;
  ok.self_orthogonal = true;
  return finish(D, s, Metric::Hermitian, ok);
}

SelfOrthReport quaternion_euclid_selforth(const Decomposition& D, const IdealSpec& s) {
  if (D.group != GroupKind::Quaternion) throw FieldError("quaternion classification needs a quaternion decomposition");
  validate(D, s);
  for (size_t b = 0; b < D.blocks.size(); ++b) {
    const Block& blk = D.blocks[b];
    for (int k : blk.summands) {
      const BlockIdeal& I = s.parts[size_t(k)];
      if (blk.cls.plus) {
        if (I.kind == IdealKind::Full) return fail(b, "B block is full");
      } else if (blk.cls.tag == ClassTag::RecipPair) {
        bool ok = I.kind == IdealKind::Zero || I.kind == IdealKind::E01 ||
                  (I.kind == IdealKind::Row && I.lambda == ZERO);
        if (!ok) return fail(b, "A pair block must be zero, e01 or row(0)");
      } else if (I.kind != IdealKind::Zero) {
        return fail(b, "self-reciprocal A block must be zero");
      }
    }
  }
  SelfOrthReport ok;
  ok.self_orthogonal = true;
  return finish(D, s, Metric::Euclidean, ok);
}

uint64_t count_hermitian_selforth(const Decomposition& D) {
  if (D.group != GroupKind::Dihedral || D.fs.mode != FactorMode::Hermitian)
    throw FieldError("hermitian count needs a hermitian dihedral decomposition");
  uint64_t qc = D.fs.conj, c = 1;
  for (auto& blk : D.blocks) {
    uint64_t r = uint64_t(blk.cls.degree);
    switch (blk.cls.tag) {
      case ClassTag::J0:
        if (qc % 2 == 0) c = checked_mul(c, 2);
        break;
      case ClassTag::J1: c = checked_mul(c, checked_add(checked_mul(3, checked_pow(qc, r)), 6)); break;
      case ClassTag::J2:
      case ClassTag::J3: c = checked_mul(c, checked_add(checked_pow(qc, r), 2)); break;
      case ClassTag::J4: c = checked_mul(c, checked_add(checked_mul(3, checked_pow(qc, 2 * r)), 6)); break;
      default: throw FieldError("unexpected class in hermitian decomposition");
    }
  }
  return c;
}

uint64_t count_euclid_selforth_quaternion(const Decomposition& D) {
  if (D.group != GroupKind::Quaternion) throw FieldError("quaternion count needs a quaternion decomposition");
  uint64_t c = 1;
  for (auto& blk : D.blocks) {
    uint64_t d = uint64_t(blk.cls.degree);
    if (!blk.cls.plus) {
      if (blk.cls.tag == ClassTag::RecipPair) c = checked_mul(c, 3);
    } else if (blk.cls.tag == ClassTag::SelfRecip) {
      c = checked_mul(c, checked_add(checked_pow(D.q, d / 2), 2));
    } else if (blk.cls.tag == ClassTag::RecipPair) {
      c = checked_mul(c, checked_add(checked_pow(D.q, d), 2));
    }
  }
  return c;
}

std::vector<std::vector<BlockIdeal>> selforth_block_options(const Decomposition& D, size_t block, Metric m) {
  const Block& blk = D.blocks.at(block);
  std::vector<std::vector<BlockIdeal>> opts;
  for (int k : blk.summands) opts.push_back(summand_options(D, size_t(k)));
  std::vector<std::vector<BlockIdeal>> out;
  std::vector<size_t> idx(opts.size(), 0);
  IdealSpec s = zero_spec(D);
  while (true) {
    for (size_t i = 0; i < idx.size(); ++i) s.parts[size_t(blk.summands[i])] = opts[i][idx[i]];
    if (is_selforth(D, s, m)) {
      std::vector<BlockIdeal> combo;
      for (int k : blk.summands) combo.push_back(s.parts[size_t(k)]);
      out.push_back(combo);
    }
    size_t i = idx.size();
    while (i-- > 0) {
      if (++idx[i] < opts[i].size()) break;
      idx[i] = 0;
    }
    if (i == size_t(-1)) break;
  }
  return out;
}

uint64_t count_selforth_by_blocks(const Decomposition& D, Metric m) {
  uint64_t c = 1;
  for (size_t b = 0; b < D.blocks.size(); ++b) c = checked_mul(c, selforth_block_options(D, b, m).size());
  return c;
}

std::vector<Elem> lambda_solution_set(const FieldTable& F, LambdaEq kind, uint32_t r, uint64_t qc) {
  bool even = qc % 2 == 0;
  if ((kind == LambdaEq::InvFrob) != even) throw FieldError("parity of q does not match the equation");
  uint64_t Qr = checked_pow(qc, r);
  uint64_t big = checked_mul(Qr, Qr);
  F.check_subfield(big);
  Elem xi = F.subfield_gen(big);
  int64_t N = int64_t(big - 1);
  std::vector<Elem> out;
  auto push = [&](int64_t e) { out.push_back(F.pow(xi, e % N)); };
  switch (kind) {
    case LambdaEq::NegFrob:
      out.push_back(ZERO);
      for (uint64_t k = 0; k + 2 <= Qr; ++k) push(int64_t((2 * k + 1) * (Qr + 1) / 2));
      break;
    case LambdaEq::NegInvFrob:
      for (uint64_t k = 0; k <= Qr; ++k) push(int64_t((2 * k + 1) * (Qr - 1) / 2));
      break;
    case LambdaEq::InvFrob:
      for (uint64_t k = 0; k <= Qr; ++k) push(int64_t(k * (Qr - 1)));
      break;
  }
  return out;
}

}  // namespace gc
