#include "gc/verify.hpp"

#include <random>

#include "gc/oracle.hpp"

namespace gc {

uint64_t VerifyReport::failures() const {
  uint64_t f = 0;
  for (auto& [k, t] : tallies) f += t.failures;
  return f;
}

std::string algebra_name(const Decomposition& D) {
  std::string g = D.group == GroupKind::Dihedral ? "D" : "Q";
  std::string s = "F_" + std::to_string(D.q) + "[" + g + "_" + std::to_string(D.n) + "]";
  if (D.group == GroupKind::Dihedral && D.fs.mode == FactorMode::Hermitian) s += " (hermitian)";
  return s;
}

namespace {

void tally(VerifyReport& rep, const std::string& name, bool ok, const std::string& detail = "") {
  auto& t = rep.tallies[name];
  ++t.checks;
  if (!ok) {
    if (t.failures == 0) t.first_failure = detail;
    ++t.failures;
  }
}

oracle::Group oracle_group(const Decomposition& D) {
  return D.group == GroupKind::Dihedral ? oracle::Group::Dihedral : oracle::Group::Quaternion;
}

std::vector<Elem> random_element(const Decomposition& D, std::mt19937_64& rng) {
  auto els = D.F->subfield_elements(D.q);
  std::uniform_int_distribution<size_t> pick(0, els.size() - 1);
  std::vector<Elem> u(size_t(D.order()));
  for (auto& x : u) x = els[pick(rng)];
  return u;
}

oracle::Rows rows_of(const Matrix& m) {
  oracle::Rows r;
  for (size_t i = 0; i < m.rows; ++i) r.push_back(m.row_vec(i));
  return r;
}

IdealSpec random_spec(const Decomposition& D, std::mt19937_64& rng) {
  uint64_t total = count_ideals(D);
  std::uniform_int_distribution<uint64_t> pick(0, total - 1);
  return spec_at(D, pick(rng));
}

BlockValue bv_pow(const Decomposition& D, const BlockValue& x, int e) {
  BlockValue r = bv_one(D);
  for (int i = 0; i < e; ++i) r = bv_mul(D, r, x);
  return r;
}

}  // namespace

void verify_isomorphism(const Decomposition& D, const VerifyOptions& opt, VerifyReport& rep) {
  std::mt19937_64 rng(opt.seed);
  const FieldTable& F = *D.F;
  auto g = oracle_group(D);
  for (int t = 0; t < opt.iso_samples; ++t) {
    auto u = random_element(D, rng), v = random_element(D, rng);
    auto uv = oracle::group_algebra_mul(F, g, D.n, u, v);
    tally(rep, "iso.multiplicative", rho(D, uv) == bv_mul(D, rho(D, u), rho(D, v)));
    tally(rep, "iso.roundtrip", rho_inv(D, rho(D, u)) == u);
  }
  BlockValue a = image_of(D, D.index(1, 0)), b = image_of(D, D.index(0, 1));
  int r = D.rotations();
  tally(rep, "iso.relations", bv_pow(D, a, r) == bv_one(D), "a^order");
  BlockValue b2 = bv_mul(D, b, b);
  tally(rep, "iso.relations", b2 == (D.group == GroupKind::Dihedral ? bv_one(D) : bv_pow(D, a, D.n)), "b^2");
  BlockValue ainv = bv_pow(D, a, r - 1);
  tally(rep, "iso.relations", bv_mul(D, b, a) == bv_mul(D, ainv, b), "ba = a^-1 b");
  tally(rep, "iso.relations", rho(D, std::vector<Elem>(size_t(D.order()), ZERO)) == bv_zero(D), "zero");
}

void verify_duality(const Decomposition& D, const VerifyOptions& opt, VerifyReport& rep) {
  std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
  const FieldTable& F = *D.F;
  auto g = oracle_group(D);
  size_t n = size_t(D.order());
  std::vector<Metric> metrics{Metric::Euclidean};
  if (D.group == GroupKind::Dihedral && D.fs.mode == FactorMode::Hermitian) metrics.push_back(Metric::Hermitian);
  for (int t = 0; t < opt.dual_samples; ++t) {
    IdealSpec s = random_spec(D, rng);
    std::string text = to_string(D, s);
    Matrix gen = ideal_to_code(D, s).gen;
    auto rows = rows_of(gen);
    auto back = code_to_ideal(D, gen);
    tally(rep, "ideal.roundtrip", back && *back == s, text);
    tally(rep, "ideal.closure", oracle::is_left_ideal(F, g, D.n, rows), text);
    for (Metric m : metrics) {
      std::string pre = std::string("dual.") + metric_name(m) + ".";
      IdealSpec d = dual(D, s, m);
      bool herm = m == Metric::Hermitian;
      auto od = oracle::dual_nullspace(F, rows, n, herm, D.fs.conj);
      auto cd = rows_of(ideal_to_code(D, d).gen);
      tally(rep, pre + "oracle", oracle::same_space(F, cd, od), text);
      tally(rep, pre + "involution", dual(D, d, m) == s, text);
      tally(rep, pre + "dimension", ideal_dimension(D, s) + ideal_dimension(D, d) == int(n), text);
      tally(rep, pre + "ideal", oracle::is_left_ideal(F, g, D.n, od), text);
      bool so = is_selforth(D, s, m);
      tally(rep, std::string("selforth.") + metric_name(m), so == oracle::is_self_orthogonal(F, rows, n, herm, D.fs.conj),
            text);
      if (herm) tally(rep, "selforth.hermitian.clauses", so == hermitian_selforth(D, s).self_orthogonal, text);
      if (D.group == GroupKind::Quaternion)
        tally(rep, "selforth.euclidean.clauses", so == quaternion_euclid_selforth(D, s).self_orthogonal, text);
    }
  }
}

VerifyReport verify_all(const Decomposition& D, const VerifyOptions& opt) {
  VerifyReport rep;
  rep.algebra = algebra_name(D);
  verify_isomorphism(D, opt, rep);
  verify_duality(D, opt, rep);
  return rep;
}

}  // namespace gc
