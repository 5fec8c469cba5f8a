#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace bkl;
using support::nf;
using support::simple;

TEST_CASE("normalization golden values") {
  CHECK(nf(6, "d^3 [4,2] [4,3] [2,1]") == nf(6, "d^3 [4,3,2,1]"));
  CHECK(nf(6, "d^3 [4,2] [4,3] [2,1]") == NormalForm::epsilon_power(6, 3));

  // a a^{-1} collapses for any simple factor
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    int n = 3 + static_cast<int>(rng() % 8);
    SimpleElement a = random_simple(rng, n);
    BraidWord w(n);
    w.append(a);
    w.append_inverse(a);
    CHECK(NormalForm::of(w).is_identity());
  }

  NormalForm g3 = nf(6, "d^3 [4,3][5,2,1]");
  NormalForm sq = mul(g3, g3);
  CHECK(sq.inf() == 6);
  REQUIRE(sq.len() == 2);
  CHECK(sq.factors()[0] == simple(6, {{6, 1}, {5, 4, 3, 2}}));
  CHECK(sq.factors()[1] == simple(6, {{5, 2, 1}}));
}

TEST_CASE("delta powers stay collected") {
  NormalForm x = nf(9, "d^100000 [3,1] d^-100000");
  CHECK(x.inf() == 0);
  REQUIRE(x.len() == 1);
  CHECK(x.factors()[0] == tau_power(simple(9, {{3, 1}}), -100000));
  CHECK(nf(5, "d^7").is_delta_power());
  CHECK(nf(5, "d^7").inf() == 7);
}

TEST_CASE("multiplication") {
  NormalForm id6 = NormalForm::identity(6);
  NormalForm x = nf(6, "d [5,2] [3,1]");
  CHECK(mul(x, id6) == x);
  CHECK(mul(id6, x) == x);

  // epsilon^{n-1} = delta^n via a mul chain
  for (int n = 3; n <= 8; ++n) {
    NormalForm eps = nf(n, "d [2,1]");
    NormalForm acc = NormalForm::identity(n);
    for (int i = 0; i < n - 1; ++i) acc = mul(acc, eps);
    CHECK(acc == NormalForm::delta_power(n, n));
    CHECK(mul(eps, NormalForm::epsilon_power(n, n - 2)) == NormalForm::delta_power(n, n));
  }

  // (delta [2,1])^2 = delta^3 in B_3
  NormalForm e3 = nf(3, "d [2,1]");
  CHECK(mul(e3, e3) == NormalForm::delta_power(3, 3));
}

TEST_CASE("inverse and power") {
  CHECK(inverse(NormalForm::identity(4)).is_identity());
  CHECK(inverse(NormalForm::delta_power(4, 1)) == NormalForm::delta_power(4, -1));

  NormalForm eps13 = NormalForm::epsilon_power(13, 1);
  CHECK(mul(eps13, inverse(eps13)).is_identity());
  CHECK(power(eps13, 12) == NormalForm::delta_power(13, 13));
  CHECK(power(eps13, 0).is_identity());
  CHECK(power(nf(13, "d^3 [13,10] [12,11] [6,4]"), 4) == NormalForm::delta_power(13, 13));
  CHECK(power(eps13, -12) == NormalForm::delta_power(13, -13));

  Rng rng(23);
  for (int i = 0; i < 50; ++i) {
    int n = 3 + static_cast<int>(rng() % 6);
    NormalForm x = NormalForm::of(random_word(rng, n, 4));
    CHECK(mul(power(x, 3), power(x, -3)).is_identity());
    CHECK(power(x, 5) == mul(power(x, 2), power(x, 3)));
  }
}

TEST_CASE("epsilon powers in closed form") {
  for (int n : {4, 6, 9, 13})
    for (int k = -2 * n; k <= 2 * n; ++k) {
      NormalForm direct = power(nf(n, "d [2,1]"), k);
      CHECK(direct == NormalForm::epsilon_power(n, k));
    }
}

TEST_CASE("exponent sum") {
  CHECK(exponent_sum(NormalForm::identity(5)) == 0);
  for (int n : {4, 7, 10}) CHECK(exponent_sum(NormalForm::delta_power(n, 1)) == n - 1);
  for (int n : {5, 9})
    for (int k = 1; k <= 2 * n; ++k)
      CHECK(exponent_sum(NormalForm::epsilon_power(n, k)) == static_cast<long long>(k) * n);
}

TEST_CASE("induced permutations") {
  auto idperm = permutation_of(NormalForm::identity(6));
  for (int i = 1; i <= 6; ++i) CHECK(idperm[static_cast<std::size_t>(i)] == i);

  for (int n : {5, 8}) {
    auto dp = permutation_of(NormalForm::delta_power(n, 1));
    for (int i = 1; i < n; ++i) CHECK(dp[static_cast<std::size_t>(i)] == i + 1);
    CHECK(dp[static_cast<std::size_t>(n)] == 1);
  }

  // epsilon^d for proper divisors d of n-1 fixes exactly strand 1
  for (int n : {5, 7, 9, 13})
    for (int d = 1; d < n - 1; ++d) {
      if ((n - 1) % d != 0) continue;
      auto p = permutation_of(NormalForm::epsilon_power(n, d));
      CHECK(p[1] == 1);
      for (int i = 2; i <= n; ++i) CHECK(p[static_cast<std::size_t>(i)] != i);
    }
}

TEST_CASE("checked exponent arithmetic") {
  NormalForm big = NormalForm::delta_power(10, (1LL << 62));
  CHECK_THROWS_AS(mul(big, big), error);
  CHECK_THROWS_AS(power(nf(4, "d^2"), 1LL << 62), error);
}

TEST_CASE("randomized soundness and homomorphism") {
  // Smaller sample here; the acceptance suite runs the full 10^4.
  SuiteResult r = suite_normal_form(10, 1500, 20240817);
  INFO(r.first_failure);
  CHECK(r.failures == 0);
  CHECK(r.cases == 1500);
}
