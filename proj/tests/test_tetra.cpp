#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtet/gen.hpp"
#include "qtet/ratfun.hpp"
#include "qtet/tetra.hpp"

using namespace qtet;

TEST_CASE("generator indices validate and name themselves") {
  CHECK(GenIndex(0, 1).name() == "x01");
  CHECK(GenIndex(3, 0).name() == "x30");
  CHECK(GenIndex(3, 1).name() == "x31");
  CHECK(GenIndex::from_name("x20") == GenIndex(2, 0));
  CHECK_THROWS_AS(GenIndex(0, 3), std::invalid_argument);  // s - r = 3
  CHECK_THROWS_AS(GenIndex(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(GenIndex::from_name("x03"), std::invalid_argument);
  CHECK(all_generators().size() == 8);
}

TEST_CASE("relation inventory: 4 inversions, 12 q-Weyl, 4 q-Serre") {
  auto rels = all_relations();
  CHECK(rels.size() == 20);
  int t1 = 0, t2 = 0, qs = 0;
  for (const auto& r : rels) {
    switch (r.family) {
      case RelationId::Family::T1: ++t1; break;
      case RelationId::Family::T2: ++t2; break;
      case RelationId::Family::QSerre: ++qs; break;
    }
  }
  CHECK(t1 == 4);
  CHECK(t2 == 12);
  CHECK(qs == 4);
}

TEST_CASE("relation labels carry the indices") {
  auto rels = all_relations();
  bool saw_t1 = false, saw_t2 = false, saw_qs = false;
  for (const auto& r : rels) {
    if (r.label() == "Def2.1.t1.r0") saw_t1 = true;
    if (r.label() == "Def2.1.t2.(0,1,2)") saw_t2 = true;
    if (r.label() == "Def2.1.qserre.r0") saw_qs = true;
  }
  CHECK(saw_t1);
  CHECK(saw_t2);
  CHECK(saw_qs);
}

TEST_CASE("all 20 residuals vanish on a certified module and flag corruption") {
  QParam<Rat> q(Rat(2));
  auto m = evaluation_module(q, 2);
  for (const auto& rel : all_relations()) CHECK(relation_residual(q, m.assignment(), rel).is_zero());
  auto bad = corrupt(m, GenIndex(0, 1), 0, 1, Rat(1) / 7);
  bool some_fail = false;
  for (const auto& rel : all_relations())
    if (!relation_residual(q, bad, rel).is_zero()) some_fail = true;
  CHECK(some_fail);
}

TEST_CASE("the identity assignment satisfies t1 and t2 but not by accident") {
  QParam<Rat> q(Rat(2));
  GenAssignment<Rat> a(2);
  for (const auto& g : all_generators()) a.set(g, Matrix<Rat>::identity(2));
  CHECK(residual_t1(a, 0).is_zero());
  CHECK(residual_t2(q, a, 0, 1, 2).is_zero());
  CHECK(residual_qserre(q, a, 0).is_zero());
}

TEST_CASE("t2 residual is nonzero for non-commuting non-solutions") {
  QParam<Rat> q(Rat(2));
  GenAssignment<Rat> a(2);
  Matrix<Rat> j(2, 2);
  j(0, 1) = Rat(1);
  for (const auto& g : all_generators()) a.set(g, Matrix<Rat>::identity(2) + j);
  CHECK_FALSE(residual_t2(q, a, 0, 1, 2).is_zero());
}

TEST_CASE("t2 index patterns are validated") {
  QParam<Rat> q(Rat(2));
  GenAssignment<Rat> a(1);
  for (const auto& g : all_generators()) a.set(g, Matrix<Rat>::identity(1));
  CHECK_NOTHROW(residual_t2(q, a, 0, 1, 2));  // (1,1)
  CHECK_NOTHROW(residual_t2(q, a, 0, 1, 3));  // (1,2)
  CHECK_NOTHROW(residual_t2(q, a, 0, 2, 3));  // (2,1)
  CHECK_THROWS_AS(residual_t2(q, a, 0, 2, 0), std::invalid_argument);  // (2,2)
}

TEST_CASE("rho rotates the assignment and has order four") {
  QParam<Rat> q(Rat(2));
  auto m = evaluation_module(q, 1);
  auto a = m.assignment();
  auto r1 = apply_rho(a);
  CHECK(r1.at(GenIndex(1, 2)) == a.at(GenIndex(0, 1)));
  CHECK(r1.at(GenIndex(0, 2)) == a.at(GenIndex(3, 1)));
  auto r4 = apply_rho(apply_rho(apply_rho(r1)));
  CHECK(r4 == a);
  // rho sends solutions to solutions.
  for (const auto& rel : all_relations()) CHECK(relation_residual(q, r1, rel).is_zero());
}

TEST_CASE("sign flip negates every generator and preserves the relations") {
  QParam<Rat> q(Rat(2));
  auto m = evaluation_module(q, 1);
  auto f = apply_sign_flip(m.assignment());
  CHECK(f.at(GenIndex(0, 1)) == Matrix<Rat>(2, 2) - m.generator(GenIndex(0, 1)));
  for (const auto& rel : all_relations()) CHECK(relation_residual(q, f, rel).is_zero());
  CHECK(apply_sign_flip(f) == m.assignment());
}

TEST_CASE("relations hold symbolically over the rational-function field at d=0") {
  QParam<RatFun> q(RatFun::var());
  GenAssignment<RatFun> a(1);
  Matrix<RatFun> one(1, 1);
  one(0, 0) = RatFun(Rat(1));
  for (const auto& g : all_generators()) a.set(g, one);
  for (const auto& rel : all_relations()) CHECK(relation_residual(q, a, rel).is_zero());
}
