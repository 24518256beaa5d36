#include "test_main.hpp"

#include <memory>
#include <random>

#include "gc/algebra.hpp"

using namespace gc;

namespace {

std::unique_ptr<FieldTable> master(uint64_t q, int n, bool quat) {
  auto [p, m] = prime_power(q);
  (void)m;
  return std::make_unique<FieldTable>(p, master_degree(q, n, quat));
}

std::vector<Elem> random_element(const Decomposition& D, std::mt19937& rng) {
  auto els = D.F->subfield_elements(D.q);
  std::uniform_int_distribution<size_t> pick(0, els.size() - 1);
  std::vector<Elem> u(size_t(D.order()));
  for (auto& x : u) x = els[pick(rng)];
  return u;
}

BlockValue random_blocks(const Decomposition& D, std::mt19937& rng) {
  return unflatten(D, random_element(D, rng));
}

void check_relations(const Decomposition& D) {
  const FieldTable& F = *D.F;
  for (auto& s : D.sum) {
    Mat2 one = s.kind == SummandKind::Field ? Mat2::make(0, ZERO, ZERO, ZERO) : Mat2::identity();
    auto pw = [&](const Mat2& x, int k) {
      Mat2 r = one;
      for (int i = 0; i < k; ++i) r = m2_mul(F, r, x);
      return r;
    };
    CHECK(pw(s.img_a, D.rotations()) == one);
    if (D.group == GroupKind::Dihedral)
      CHECK(pw(s.img_b, 2) == one);
    else
      CHECK(pw(s.img_b, 2) == pw(s.img_a, D.n));
    // b^{-1} a b = a^{-1}
    Mat2 lhs = m2_mul(F, m2_mul(F, pw(s.img_b, 3), s.img_a), s.img_b);
    CHECK(lhs == pw(s.img_a, D.rotations() - 1));
    // images live in the block field
    for (auto e : s.img_a.e) CHECK(F.in_subfield(e, s.field));
    for (auto e : s.img_b.e) CHECK(F.in_subfield(e, s.field));
  }
}

void check_isomorphism(const Decomposition& D, int trials) {
  std::mt19937 rng(7);
  const FieldTable& F = *D.F;
  int G = D.order();
  CHECK(D.phi.rows == size_t(G));
  for (int t = 0; t < trials; ++t) {
    auto u = random_element(D, rng), v = random_element(D, rng);
    CHECK(rho_inv(D, rho(D, u)) == u);
    auto x = random_blocks(D, rng);
    CHECK(rho(D, rho_inv(D, x)) == x);
    CHECK(rho(D, algebra_mul(D, u, v)) == bv_mul(D, rho(D, u), rho(D, v)));
    std::vector<Elem> w(u.size());
    for (size_t i = 0; i < u.size(); ++i) w[i] = F.add(u[i], v[i]);
    CHECK(rho(D, w) == bv_add(D, rho(D, u), rho(D, v)));
  }
  std::vector<Elem> e(size_t(G), ZERO);
  e[0] = 0;
  CHECK(rho(D, e) == bv_one(D));
  CHECK(rho_inv(D, bv_one(D)) == e);
  CHECK(rho_inv(D, bv_zero(D)) == std::vector<Elem>(size_t(G), ZERO));
  // a * a^{r-1} = 1
  std::vector<Elem> a(size_t(G), ZERO), ar(size_t(G), ZERO);
  a[size_t(D.index(1, 0))] = 0;
  ar[size_t(D.index(D.rotations() - 1, 0))] = 0;
  CHECK(bv_mul(D, rho(D, a), rho(D, ar)) == bv_one(D));
}

Mat2 diag(Elem x, Elem y) { return Mat2::make(x, ZERO, ZERO, y); }

}  // namespace

TEST_CASE("sigma closed forms") {
  FieldTable F(3, 4);
  Elem alpha = 25;
  Elem s = F.add(alpha, F.inv(alpha));
  CHECK(sigma(F, alpha, diag(alpha, F.inv(alpha))) == Mat2::make(ZERO, 0, F.minus_one(), s));
  CHECK(sigma(F, alpha, Mat2::make(ZERO, 0, 0, ZERO)) == Mat2::make(0, F.neg(s), ZERO, F.minus_one()));
  CHECK(sigma(F, alpha, Mat2::identity()) == Mat2::identity());
  Mat2 x = Mat2::make(3, 17, ZERO, 40);
  CHECK(sigma_inv(F, alpha, sigma(F, alpha, x)) == x);
}

TEST_CASE("F_9[D_16], hermitian") {
  auto F = master(9, 16, false);
  auto D = build_dihedral_decomposition(*F, 16, 9, FactorMode::Hermitian);
  REQUIRE(D.sum.size() == 9);
  REQUIRE(D.blocks.size() == 5);
  Elem w = 10, m1 = F->minus_one();
  // rho(a) = 1 + 1 + -1 + -1 + diag(w^5,w^3) + diag(w^7,w) + diag(w^6,w^2) + diag(xi^25,xi^55) + diag(xi^75,xi^5)
  std::vector<Elem> scal_a{0, 0, m1, m1}, scal_b{0, m1, 0, m1};
  for (size_t k = 0; k < 4; ++k) {
    CHECK(D.sum[k].kind == SummandKind::Field);
    CHECK(D.sum[k].img_a.e[0] == scal_a[k]);
    CHECK(D.sum[k].img_b.e[0] == scal_b[k]);
  }
  std::vector<Mat2> diags{diag(5 * w, 3 * w), diag(7 * w, w), diag(6 * w, 2 * w), diag(25, 55), diag(75, 5)};
  for (size_t k = 0; k < 5; ++k) {
    CHECK(D.sum[4 + k].kind == SummandKind::Diag);
    CHECK(D.sum[4 + k].img_a == diags[k]);
    CHECK(D.sum[4 + k].img_b == Mat2::make(ZERO, 0, 0, ZERO));
  }
  CHECK(D.sum[4].field == 9);
  CHECK(D.sum[7].field == 81);
  check_relations(D);
  check_isomorphism(D, 30);
}

TEST_CASE("F_4[D_7]: C2 block plus M_2(F_64)") {
  auto F = master(4, 7, false);
  auto D = build_dihedral_decomposition(*F, 7, 4, FactorMode::Hermitian);
  REQUIRE(D.sum.size() == 2);
  CHECK(D.sum[0].kind == SummandKind::C2);
  CHECK(D.sum[1].kind == SummandKind::Diag);
  CHECK(D.sum[1].field == 64);
  check_relations(D);
  check_isomorphism(D, 30);
}

TEST_CASE("relations and isomorphism across algebras") {
  struct Case {
    uint64_t q;
    int n;
    FactorMode mode;
  };
  for (auto c : {Case{9, 16, FactorMode::Euclidean}, Case{4, 5, FactorMode::Hermitian},
                 Case{4, 5, FactorMode::Euclidean}, Case{25, 3, FactorMode::Hermitian},
                 Case{9, 10, FactorMode::Hermitian}, Case{49, 8, FactorMode::Hermitian},
                 Case{3, 1, FactorMode::Euclidean}, Case{2, 1, FactorMode::Euclidean},
                 Case{5, 6, FactorMode::Euclidean}, Case{16, 15, FactorMode::Hermitian}}) {
    CAPTURE(c.q);
    CAPTURE(c.n);
    auto F = master(c.q, c.n, false);
    auto D = build_dihedral_decomposition(*F, c.n, c.q, c.mode);
    int dim = 0;
    for (auto& s : D.sum) dim += s.coords();
    CHECK(dim == 2 * c.n);
    check_relations(D);
    check_isomorphism(D, 10);
  }
}

TEST_CASE("sigma-form blocks appear for self-reciprocal classes") {
  auto F = master(4, 5, false);
  auto D = build_dihedral_decomposition(*F, 5, 4, FactorMode::Hermitian);
  int sig = 0;
  for (auto& s : D.sum) {
    if (s.kind != SummandKind::Sigma) continue;
    ++sig;
    CHECK(s.img_a == Mat2::make(ZERO, 0, F->minus_one(), s.s));
    CHECK(s.img_b == Mat2::make(0, F->neg(s.s), ZERO, F->minus_one()));
  }
  CHECK(sig == 2);
}

TEST_CASE("F_11[Q_7]") {
  auto F = master(11, 7, true);
  auto D = build_quaternion_decomposition(*F, 7, 11);
  REQUIRE(D.sum.size() == 5);
  Elem eta = 1332, m1 = F->minus_one();
  auto ep = [&](int k) { return F->pow(eta, k); };
  CHECK(D.sum[0].img_a.e[0] == 0);
  CHECK(D.sum[1].img_a.e[0] == 0);
  CHECK(D.sum[0].img_b.e[0] == 0);
  CHECK(D.sum[1].img_b.e[0] == m1);
  CHECK(D.sum[2].img_a == diag(ep(570), ep(760)));
  CHECK(D.sum[2].img_b == Mat2::make(ZERO, 0, 0, ZERO));
  CHECK(D.sum[3].img_a.e[0] == m1);
  CHECK(D.sum[3].img_b.e[0] == D.sqrt_m1);
  CHECK(F->mul(D.sqrt_m1, D.sqrt_m1) == m1);
  CHECK(D.sum[4].img_a == diag(ep(95), ep(1235)));
  CHECK(D.sum[4].img_b == Mat2::make(ZERO, m1, 0, ZERO));
  CHECK(D.order() == 28);
  check_relations(D);
  check_isomorphism(D, 20);
}

TEST_CASE("quaternion gamma and theta blocks") {
  for (int n : {5, 7, 1, 11, 13}) {
    CAPTURE(n);
    auto F = master(3, n, true);
    auto D = build_quaternion_decomposition(*F, n, 3);
    check_relations(D);
    check_isomorphism(D, 10);
    for (auto& s : D.sum) {
      if (s.kind == SummandKind::Gamma) CHECK(D.blocks[size_t(s.block)].cls.degree % 4 == 0);
      if (s.kind == SummandKind::Theta) CHECK(D.blocks[size_t(s.block)].cls.degree % 4 == 2);
    }
  }
  auto F5 = master(3, 5, true);
  auto D5 = build_quaternion_decomposition(*F5, 5, 3);
  bool has_gamma = false;
  for (auto& s : D5.sum) has_gamma |= s.kind == SummandKind::Gamma;
  CHECK(has_gamma);

  auto F7 = master(3, 7, true);
  auto D7 = build_quaternion_decomposition(*F7, 7, 3);
  const Summand* th = nullptr;
  for (auto& s : D7.sum)
    if (s.kind == SummandKind::Theta) th = &s;
  REQUIRE(th);
  const FieldTable& F = *F7;
  CHECK(F.add(F.mul(th->u, th->u), F.mul(th->v, th->v)) == F.minus_one());
  CHECK(F.frobenius(th->root, th->Q) == F.inv(th->root));
  Elem i = D7.sqrt_m1;
  CHECK(theta(F, th->Q, i, th->u, th->v, Mat2::identity()) == Mat2::identity());
  // theta is multiplicative on S = {[[w, z], [-z^Q, w^Q]]}
  std::mt19937 rng(3);
  auto big = F.subfield_elements(th->Q * th->Q);
  std::uniform_int_distribution<size_t> pick(0, big.size() - 1);
  auto rs = [&] {
    Elem w = big[pick(rng)], z = big[pick(rng)];
    return Mat2::make(w, z, F.neg(F.frobenius(z, th->Q)), F.frobenius(w, th->Q));
  };
  for (int t = 0; t < 100; ++t) {
    Mat2 x = rs(), y = rs();
    Mat2 tx = theta(F, th->Q, i, th->u, th->v, x), ty = theta(F, th->Q, i, th->u, th->v, y);
    CHECK(theta(F, th->Q, i, th->u, th->v, m2_mul(F, x, y)) == m2_mul(F, tx, ty));
    CHECK(theta_inv(F, th->Q, i, th->u, th->v, tx) == x);
    for (auto e : tx.e) CHECK(F.in_subfield(e, th->Q));
  }
  CHECK_THROWS_AS(theta(F, th->Q, i, th->u, th->v, Mat2::make(0, 0, 0, 0)), FieldError);
}

TEST_CASE("quaternion delegation and errors") {
  FieldTable F(5, 2);
  CHECK_THROWS_AS(build_quaternion_decomposition(F, 3, 5), DelegateToDihedral);
  FieldTable G(3, 2);
  CHECK_THROWS_AS(build_quaternion_decomposition(G, 4, 3), DelegateToDihedral);
  CHECK_THROWS_AS(build_dihedral_decomposition(G, 3, 3, FactorMode::Euclidean), FieldError);
  auto D = build_dihedral_decomposition(G, 4, 3, FactorMode::Euclidean);
  CHECK_THROWS_AS(rho(D, std::vector<Elem>(3, ZERO)), FieldError);
  auto bad = bv_one(D);
  bad.pop_back();
  CHECK_THROWS_AS(rho_inv(D, bad), FieldError);
}

TEST_CASE("group multiplication") {
  FieldTable F(3, 4);
  auto D = build_dihedral_decomposition(F, 5, 9, FactorMode::Hermitian);
  // b a b = a^{-1}
  int a = D.index(1, 0), b = D.index(0, 1);
  CHECK(group_mul(D, group_mul(D, b, a), b) == D.index(-1, 0));
  CHECK(group_mul(D, b, b) == 0);
  auto Fq = master(3, 5, true);
  auto Q = build_quaternion_decomposition(*Fq, 5, 3);
  int qb = Q.index(0, 1);
  CHECK(group_mul(Q, qb, qb) == Q.index(5, 0));
  CHECK(group_mul(Q, group_mul(Q, qb, Q.index(1, 0)), Q.index(5, 1)) == Q.index(-1, 0));
}
