#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "qtet/gen.hpp"

using namespace qtet;
using qtest::random_unimodular;

TEST_CASE("the trivial module certifies for both types and rejects others") {
  QParam<Rat> q(Rat(2));
  auto plus = trivial_module(q, 1);
  CHECK(plus.type() == 1);
  CHECK(plus.diameter() == 0);
  CHECK(plus.generator(GenIndex(0, 2))(0, 0) == Rat(1));
  auto minus = trivial_module(q, -1);
  CHECK(minus.type() == -1);
  CHECK(minus.generator(GenIndex(0, 2))(0, 0) == Rat(-1));
  CHECK_THROWS_AS(trivial_module(q, 2), std::invalid_argument);
}

TEST_CASE("evaluation_module is deterministic") {
  QParam<Rat> q(Rat(2));
  for (int d = 1; d <= 3; ++d) {
    auto m1 = evaluation_module(q, d);
    auto m2 = evaluation_module(q, d);
    CHECK(m1 == m2);
  }
}

TEST_CASE("evaluation_module pins x12 to diag(q^{d-2i})") {
  QParam<Rat> q(Rat(2));
  for (int d = 1; d <= 4; ++d) {
    auto m = evaluation_module(q, d);
    std::vector<Rat> eigs(static_cast<std::size_t>(d + 1));
    for (int i = 0; i <= d; ++i) eigs[static_cast<std::size_t>(i)] = q_power(q, d - 2 * i);
    CHECK(m.generator(GenIndex(1, 2)) == diagonal(eigs));
  }
}

TEST_CASE("evaluation_module rejects out-of-range diameters") {
  QParam<Rat> q(Rat(2));
  CHECK_THROWS_AS(evaluation_module(q, 0), std::invalid_argument);
  CHECK_THROWS_AS(evaluation_module(q, 5), std::invalid_argument);
}

TEST_CASE("evaluation_module works across q values") {
  for (const Rat& qv : {Rat(2), Rat(3), Rat(1) / 2, Rat(5) / 3, Rat(-2)}) {
    QParam<Rat> q(qv);
    auto m = evaluation_module(q, 2);
    CHECK(m.diameter() == 2);
    CHECK(verify_module(q, m.assignment()).report.ok());
  }
}

TEST_CASE("conjugate preserves certification and rejects singular bases") {
  QParam<Rat> q(Rat(2));
  auto m = evaluation_module(q, 2);
  std::mt19937 rng(5150);
  auto t = random_unimodular(rng, 3);
  auto mc = conjugate(m, t);
  CHECK(mc.diameter() == 2);
  CHECK(mc.type() == 1);
  CHECK_FALSE(mc == m);  // the sampled basis change is not the identity
  Matrix<Rat> sing(3, 3);
  CHECK_THROWS_AS(conjugate(m, sing), std::invalid_argument);
}

TEST_CASE("corrupting any single generator entry breaks certification") {
  QParam<Rat> q(Rat(2));
  auto m = evaluation_module(q, 1);
  for (const auto& g : all_generators())
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        auto bad = corrupt(m, g, i, j, Rat(1) / 11);
        CHECK_FALSE(verify_module(q, bad).module);
      }
}

TEST_CASE("the relation solver reports inconsistent systems instead of guessing") {
  // x + 0*y = 1 and x = 2 over a single unknown pattern entry.
  Matrix<Rat> base(1, 1);
  detail::PatternSolver<Rat> s(base, {{0, 0}});
  Matrix<Rat> one = Matrix<Rat>::identity(1);
  Matrix<Rat> two = Rat(2) * one;
  s.add_constraint({{one, one}}, one);
  s.add_constraint({{one, one}}, two);
  CHECK_FALSE(s.solve());
}

TEST_CASE("free unknowns default to one") {
  // No constraints at all: every pattern entry becomes base + 1.
  Matrix<Rat> base(2, 2);
  base(0, 0) = Rat(5);
  detail::PatternSolver<Rat> s(base, {{0, 0}, {1, 1}});
  auto y = s.solve();
  REQUIRE(y);
  CHECK((*y)(0, 0) == Rat(6));
  CHECK((*y)(1, 1) == Rat(1));
  CHECK((*y)(0, 1) == Rat(0));
}
