#include "test_main.hpp"

#include "gc/polyfactor.hpp"

using namespace gc;

namespace {

// Build a polynomial over F_q from discrete logs relative to the F_q generator
// (-1 meaning zero), constant term first.
Poly from_logs(const FieldTable& F, uint64_t q, std::vector<int> logs) {
  Poly f;
  for (int l : logs) f.push_back(l < 0 ? ZERO : F.sub_exp(l, q));
  return f;
}

Poly from_ints(const FieldTable& F, std::vector<int> c) {
  Poly f;
  for (int v : c) f.push_back(F.from_int(v));
  return f;
}

int count_tag(const FactorSystem& fs, ClassTag t) {
  int k = 0;
  for (auto& c : fs.classes) k += c.tag == t;
  return k;
}

}  // namespace

TEST_CASE("cyclotomic cosets") {
  auto c = cyclotomic_cosets(7, 4);
  REQUIRE(c.size() == 3);
  CHECK(c[0] == std::vector<int>{0});
  CHECK(c[1] == std::vector<int>{1, 2, 4});
  CHECK(c[2] == std::vector<int>{3, 5, 6});
  auto d = cyclotomic_cosets(16, 9);
  int ones = 0, twos = 0;
  for (auto& x : d) (x.size() == 1 ? ones : twos) += 1;
  CHECK(ones == 8);
  CHECK(twos == 4);
  CHECK(cyclotomic_cosets(1, 5).size() == 1);
  CHECK_THROWS_AS(cyclotomic_cosets(6, 9), FieldError);
}

TEST_CASE("master degrees") {
  CHECK(master_degree(9, 16, false) == 4);
  CHECK(master_degree(4, 7, false) == 6);
  CHECK(master_degree(25, 3, false) == 2);
  CHECK(master_degree(9, 10, false) == 4);
  CHECK(master_degree(11, 7, true) == 6);
}

TEST_CASE("x^7 - 1 over F_4") {
  FieldTable F(2, 6);
  auto fac = factor_cyclic(F, 7, 4);
  REQUIRE(fac.size() == 3);
  CHECK(fac[0] == from_ints(F, {1, 1}));
  CHECK(fac[1] == from_ints(F, {1, 1, 0, 1}));
  CHECK(fac[2] == from_ints(F, {1, 0, 1, 1}));
  CHECK(conjugate(F, fac[1], 2) == fac[1]);
  auto fs = classify(F, 7, 4, fac, FactorMode::Hermitian);
  REQUIRE(fs.classes.size() == 2);
  CHECK(fs.classes[0].tag == ClassTag::J0);
  CHECK(fs.classes[1].tag == ClassTag::J2);
  CHECK(fs.classes[1].rep == from_ints(F, {1, 1, 0, 1}));
  CHECK(fs.classes[1].degree == 3);
}

TEST_CASE("x^16 - 1 over F_9") {
  FieldTable F(3, 4);
  auto fac = factor_cyclic(F, 16, 9);
  CHECK(fac.size() == 12);
  Poly prod{0};
  for (auto& f : fac) prod = poly_mul(F, prod, f);
  CHECK(prod.size() == 17);
  auto fs = classify(F, 16, 9, fac, FactorMode::Hermitian);
  REQUIRE(fs.classes.size() == 5);
  CHECK(count_tag(fs, ClassTag::J0) == 2);
  CHECK(count_tag(fs, ClassTag::J1) == 0);
  CHECK(count_tag(fs, ClassTag::J2) == 0);
  CHECK(count_tag(fs, ClassTag::J3) == 1);
  CHECK(count_tag(fs, ClassTag::J4) == 2);
  // f1 = x-1, f2 = x+1, f3 = x+w, f4 = x+w^2, f5 = x^2+w
  CHECK(fs.classes[0].rep == from_ints(F, {-1, 1}));
  CHECK(fs.classes[1].rep == from_ints(F, {1, 1}));
  CHECK(fs.classes[2].rep == from_logs(F, 9, {1, 0}));
  CHECK(fs.classes[2].tag == ClassTag::J4);
  CHECK(fs.classes[3].rep == from_logs(F, 9, {2, 0}));
  CHECK(fs.classes[3].tag == ClassTag::J3);
  CHECK(fs.classes[4].rep == from_logs(F, 9, {1, -1, 0}));
  CHECK(fs.classes[4].tag == ClassTag::J4);
  // companions as labelled: f3* = x+w^7, fbar3 = x+w^3, f3dagger = x+w^5
  CHECK(fs.classes[2].companions[0] == from_logs(F, 9, {7, 0}));
  CHECK(fs.classes[2].companions[1] == from_logs(F, 9, {3, 0}));
  CHECK(fs.classes[2].companions[2] == from_logs(F, 9, {5, 0}));
  // f4* = fbar4 = x+w^6
  CHECK(reciprocal(F, fs.classes[3].rep) == from_logs(F, 9, {6, 0}));
  CHECK(conjugate(F, fs.classes[3].rep, 3) == from_logs(F, 9, {6, 0}));
  // roots: w^5, w^6 and xi^25 (w = xi^10 in F_81)
  CHECK(fs.classes[2].root == 50);
  CHECK(fs.classes[3].root == 60);
  CHECK(fs.classes[4].root == 25);
}

TEST_CASE("class invariants") {
  struct Case {
    uint32_t p, M;
    int n;
    uint64_t q;
  };
  for (auto cs : {Case{3, 4, 16, 9}, Case{2, 6, 7, 4}, Case{5, 2, 3, 25}, Case{3, 4, 10, 9},
                  Case{2, 4, 5, 4}, Case{7, 2, 8, 49}}) {
    FieldTable F(cs.p, cs.M);
    auto fs = factor_dihedral(F, cs.n, cs.q, FactorMode::Hermitian);
    uint64_t qc = fs.conj;
    int total = 0;
    Poly prod{0};
    for (auto& c : fs.classes) {
      total += c.degree * int(1 + c.companions.size());
      prod = poly_mul(F, prod, c.rep);
      for (auto& g : c.companions) prod = poly_mul(F, prod, g);
      CHECK(poly_eval(F, c.rep, c.root) == ZERO);
      CHECK(poly_eval(F, conjugate(F, c.rep, qc), F.frobenius(c.root, qc)) == ZERO);
      CHECK(poly_eval(F, reciprocal(F, c.rep), F.inv(c.root)) == ZERO);
      if (c.tag == ClassTag::J1) CHECK(c.degree % 2 == 0);
      if (c.tag == ClassTag::J2 || c.tag == ClassTag::J3) CHECK(c.degree % 2 == 1);
      if (c.tag == ClassTag::J3) {
        Elem qr = F.pow(c.root, 1);
        for (int i = 0; i < c.degree; ++i) qr = F.frobenius(qr, qc);
        CHECK(qr == F.inv(c.root));
      }
    }
    CHECK(total == cs.n);
    Poly target(size_t(cs.n) + 1, ZERO);
    target[0] = F.minus_one();
    target[size_t(cs.n)] = 0;
    CHECK(prod == target);
  }
}

TEST_CASE("trivial and error cases") {
  FieldTable F(5, 1);
  auto fs = factor_dihedral(F, 1, 5, FactorMode::Euclidean);
  REQUIRE(fs.classes.size() == 1);
  CHECK(fs.classes[0].tag == ClassTag::J0);
  CHECK(fs.classes[0].rep == from_ints(F, {-1, 1}));
  CHECK_THROWS_AS(reciprocal(F, Poly{ZERO, 0}), FieldError);
  CHECK_THROWS_AS(classify(F, 4, 5, {from_ints(F, {-1, 1})}, FactorMode::Euclidean), FieldError);
  FieldTable G(3, 2);
  Poly f = from_logs(G, 9, {2, 0});
  CHECK(reciprocal(G, reciprocal(G, f)) == f);
  CHECK(conjugate(G, conjugate(G, f, 3), 3) == f);
  CHECK(dagger(G, f, 3) == conjugate(G, reciprocal(G, f), 3));
  CHECK(reciprocal(G, from_ints(G, {-1, 1})) == from_ints(G, {-1, 1}));
}

TEST_CASE("quaternion factorisation over F_11, n = 7") {
  FieldTable F(11, 6);
  auto fs = factor_quaternion(F, 7, 11);
  REQUIRE(fs.classes.size() == 2);
  REQUIRE(fs.plus_classes.size() == 2);
  // r and t count x-1 and x+1 themselves; no further self-reciprocal factors
  CHECK(fs.r == 1);
  CHECK(fs.t == 1);
  CHECK(fs.s == 1);
  CHECK(fs.k == 1);
  CHECK(fs.classes[1].rep == from_ints(F, {-1, 4, 5, 1}));
  CHECK(fs.classes[1].companions[0] == from_ints(F, {-1, 6, 7, 1}));
  CHECK(fs.plus_classes[0].rep == from_ints(F, {1, 1}));
  CHECK(fs.plus_classes[1].rep == from_ints(F, {1, 6, 4, 1}));
  CHECK(fs.plus_classes[1].companions[0] == from_ints(F, {1, 4, 6, 1}));
  // eta = xi^1332 generates F_{11^3}; alpha = eta^570, beta = eta^95
  CHECK(fs.classes[1].root == F.pow(1332, 570));
  CHECK(fs.plus_classes[1].root == F.pow(1332, 95));
  CHECK_THROWS_AS(factor_quaternion(F, 4, 11), FieldError);
}

TEST_CASE("quaternion product reconstruction, q = 3, n = 5") {
  FieldTable F(3, 4);
  auto fs = factor_quaternion(F, 5, 3);
  Poly prod{0};
  for (auto* list : {&fs.classes, &fs.plus_classes})
    for (auto& c : *list) {
      prod = poly_mul(F, prod, c.rep);
      for (auto& g : c.companions) prod = poly_mul(F, prod, g);
    }
  Poly target(11, ZERO);
  target[0] = F.minus_one();
  target[10] = 0;
  CHECK(prod == target);
  CHECK(fs.t == 2);
  CHECK(fs.plus_classes[1].degree == 4);
  auto one = factor_quaternion(F, 1, 3);
  CHECK(one.classes.size() == 1);
  CHECK(one.plus_classes.size() == 1);
}
