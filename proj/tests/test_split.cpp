#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "qtet/gen.hpp"
#include "qtet/split.hpp"

using namespace qtet;
using qtest::random_int_matrix;
using qtest::random_unimodular;

namespace {

QParam<Rat> q2() { return QParam<Rat>(Rat(2)); }

QInvertingPair<Rat> fixture_pair(int d) {
  return extract_qinverting(d == 0 ? trivial_module(q2(), 1) : evaluation_module(q2(), d));
}

}  // namespace

TEST_CASE("v_ij out-of-range conventions: zero below, everything above") {
  auto p = fixture_pair(2);
  CHECK(v_ij(p, -1, 2).is_zero());
  CHECK(v_ij(p, 2, -1).is_zero());
  CHECK(v_ij(p, 5, 7).is_full());
  CHECK(v_ij(p, 5, 2) == p.witness_star().partial_sum(0, 2));
  CHECK(v_ij(p, 2, 7) == p.witness().partial_sum(0, 2));
}

TEST_CASE("the V_ij lemmas hold on extracted pairs") {
  for (int d = 0; d <= 3; ++d) {
    auto p = fixture_pair(d);
    CHECK(check_vij_lemmas(p).ok());
  }
}

TEST_CASE("the split decomposition has diameter d and all-ones shape on fixtures") {
  for (int d = 1; d <= 3; ++d) {
    auto p = fixture_pair(d);
    auto u = split_decomposition(p);
    CHECK(u.diameter() == d);
    for (int i = 0; i <= d; ++i) CHECK(u.component(i).dim() == 1);
    CHECK(check_split_lemmas(p).ok());
  }
}

TEST_CASE("split lemmas survive a change of basis") {
  std::mt19937 rng(808);
  auto m = evaluation_module(q2(), 2);
  for (int t = 0; t < 3; ++t) {
    auto p = extract_qinverting(conjugate(m, random_unimodular(rng, 3)));
    CHECK(check_vij_lemmas(p).ok());
    CHECK(check_split_lemmas(p).ok());
  }
}

TEST_CASE("the split operator acts as q^{d-2i} on U_i") {
  auto p = fixture_pair(3);
  auto s = split_operator(p);
  auto u = split_decomposition(p);
  for (int i = 0; i <= 3; ++i) {
    Matrix<Rat> shifted = s;
    Rat lambda = q_power(p.q(), 3 - 2 * i);
    for (int r = 0; r < shifted.rows(); ++r) shifted(r, r) -= lambda;
    CHECK(image_under(shifted, u.component(i)).is_zero());
  }
}

TEST_CASE("reconstruction rebuilds the original module exactly") {
  auto q = q2();
  for (int d = 0; d <= 3; ++d) {
    auto m = d == 0 ? trivial_module(q, 1) : evaluation_module(q, d);
    auto back = reconstruct_module(extract_qinverting(m));
    for (const auto& g : all_generators()) CHECK(back.generator(g) == m.generator(g));
  }
}

TEST_CASE("reconstruction is basis-independent") {
  std::mt19937 rng(313);
  auto m = evaluation_module(q2(), 2);
  for (int t = 0; t < 3; ++t) {
    auto mc = conjugate(m, random_unimodular(rng, 3));
    auto back = reconstruct_module(extract_qinverting(mc));
    for (const auto& g : all_generators()) CHECK(back.generator(g) == mc.generator(g));
  }
}

TEST_CASE("reconstruction works at q = 3 and q = 1/3") {
  for (const Rat& qv : {Rat(3), Rat(1) / 3}) {
    QParam<Rat> q(qv);
    auto m = evaluation_module(q, 2);
    auto back = reconstruct_module(extract_qinverting(m));
    for (const auto& g : all_generators()) CHECK(back.generator(g) == m.generator(g));
  }
}

TEST_CASE("eigenspace-containment equivalences: randomized sweep, both truth values") {
  auto q = q2();
  std::mt19937 rng(60601);
  int count[3] = {0, 0, 0};
  int truthy[3] = {0, 0, 0}, falsy[3] = {0, 0, 0};
  auto tally = [&](int which, std::pair<bool, bool> sides) {
    CHECK(sides.first == sides.second);
    ++count[which];
    (sides.first ? truthy : falsy)[which]++;
  };
  std::uniform_int_distribution<int> dim(2, 4);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int t = 0; t < 60; ++t) {
    int n = dim(rng);
    int d = n - 1;
    std::vector<Rat> eigs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) eigs[static_cast<std::size_t>(i)] = q_power(q, d - 2 * i);
    Matrix<Rat> a = diagonal(eigs);
    bool structured = coin(rng) == 1;

    // Lemma 6.1: B tridiagonal shifts each eigenline by at most one q^2 step.
    Matrix<Rat> b = random_int_matrix(rng, n, -2, 2);
    if (structured)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (j < i - 1 || j > i + 1) b(i, j) = Rat(0);
    for (int i = 0; i < n; ++i) tally(0, lemma_key(q, a, b, eigs[static_cast<std::size_t>(i)]));

    // Lemma 6.2: lower bidiagonal with diagonal 1/theta on each eigenline.
    Matrix<Rat> b2 = random_int_matrix(rng, n, -2, 2);
    if (structured) {
      b2 = Matrix<Rat>(n, n);
      for (int i = 0; i < n; ++i) {
        b2(i, i) = Rat(1) / eigs[static_cast<std::size_t>(i)];
        if (i + 1 < n) b2(i + 1, i) = Rat(1 + t % 3);
      }
    }
    for (int i = 0; i < n; ++i) tally(1, lemma_qweyl(q, a, b2, eigs[static_cast<std::size_t>(i)]));

    // Lemma 6.3: same on the B side, with A upper bidiagonal.
    Matrix<Rat> a3 = random_int_matrix(rng, n, -2, 2);
    if (structured) {
      a3 = Matrix<Rat>(n, n);
      for (int i = 0; i < n; ++i) {
        a3(i, i) = Rat(1) / eigs[static_cast<std::size_t>(i)];
        if (i > 0) a3(i - 1, i) = Rat(1 + t % 3);
      }
    }
    for (int i = 0; i < n; ++i) tally(2, lemma_qweyl2(q, a3, a, eigs[static_cast<std::size_t>(i)]));
  }
  for (int w = 0; w < 3; ++w) {
    CHECK(count[w] >= 100);
    CHECK(truthy[w] >= 10);
    CHECK(falsy[w] >= 10);
  }
}

TEST_CASE("theta = 0 is rejected by every lemma") {
  auto q = q2();
  Matrix<Rat> a = Matrix<Rat>::identity(2);
  CHECK_THROWS_AS(lemma_key(q, a, a, Rat(0)), std::invalid_argument);
  CHECK_THROWS_AS(lemma_qweyl(q, a, a, Rat(0)), std::invalid_argument);
  CHECK_THROWS_AS(lemma_qweyl2(q, a, a, Rat(0)), std::invalid_argument);
}
