#include "doctest.h"
#include "monadic/probability.hpp"

using namespace monadic;

namespace {

using Pmf = std::map<int, Rational>;

Rational q(long long n, long long d) { return Rational(n, d); }

/// Independent bind: accumulate Σ p(a)·f(a)(b) over a flat list of terms.
template <class F>
Pmf naive_bind(const Pmf& p, F f) {
  std::vector<std::pair<int, Rational>> terms;
  for (const auto& [a, pa] : p) {
    for (const auto& [b, fb] : f(a)) terms.emplace_back(b, pa * fb);
  }
  Pmf out;
  for (const auto& [b, w] : terms) out[b] = out[b] + w;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

TEST_SUITE("probability") {

TEST_CASE("probabilities are validated") {
  CHECK(Prob(1, 3).value() == q(1, 3));
  CHECK(Prob(1, 3).complement().value() == q(2, 3));
  CHECK_THROWS_AS(Prob(4, 3), InvalidProbability);
  CHECK_THROWS_AS(Prob(-1, 3), InvalidProbability);
}

TEST_CASE("distributions keep their invariants") {
  CHECK(dirac(7).pmf() == Pmf{{7, 1}});
  CHECK_THROWS_AS(Dist<int>(Pmf{{0, q(1, 2)}}), InvalidDistribution);
  CHECK_THROWS_AS(Dist<int>(Pmf{{0, q(3, 2)}, {1, q(-1, 2)}}), InvalidDistribution);
  CHECK(Dist<int>(Pmf{{0, 1}, {1, 0}}).support() == std::vector<int>{0});
  const auto before = dist_invariant_checks();
  (void)uniform(std::vector<int>{1, 2, 3});
  CHECK(dist_invariant_checks() > before);
}

TEST_CASE("dirac is neutral for bind") {
  const auto f = [](int x) { return uniform(std::vector<int>{x, x + 1}); };
  CHECK(dbind(dirac(3), f) == f(3));
  const auto p = uniform(std::vector<int>{0, 1, 4});
  CHECK(dbind(p, [](int x) { return dirac(x); }) == p);
}

TEST_CASE("bind by hand") {
  const auto coin = uniform(std::vector<int>{0, 1});
  CHECK(dbind(coin, [](int x) { return dirac(x % 1); }) == dirac(0));
  const auto spread = dbind(coin, [](int x) { return uniform(std::vector<int>{x, x + 2}); });
  CHECK(spread.pmf() == Pmf{{0, q(1, 4)}, {1, q(1, 4)}, {2, q(1, 4)}, {3, q(1, 4)}});
}

TEST_CASE("bind associativity on a two-point distribution") {
  const Dist<int> m(Pmf{{0, q(1, 3)}, {1, q(2, 3)}});
  const auto f = [](int x) { return Dist<int>(Pmf{{x, q(1, 2)}, {x + 1, q(1, 2)}}); };
  const auto g = [](int y) { return y == 1 ? dirac(10) : Dist<int>(Pmf{{10, q(1, 4)}, {20, q(3, 4)}}); };
  const auto lhs = dbind(dbind(m, f), g);
  const auto rhs = dbind(m, [&](int x) { return dbind(f(x), g); });
  // m >>= f = {0↦1/6, 1↦1/2, 2↦1/3}; then 10 gets 1/6·1/4 + 1/2 + 1/3·1/4 = 5/8.
  CHECK(lhs.pmf() == Pmf{{10, q(5, 8)}, {20, q(3, 8)}});
  CHECK(lhs == rhs);
}

TEST_CASE("bind agrees with a naive double sum") {
  Rng rng(11);
  const auto dists = three_point_dists();
  const auto fx = dist_fixture();
  for (int t = 0; t < 200; ++t) {
    const auto p = dists.sample(rng);
    const auto k = fx.konts.sample(rng);
    const auto expected = naive_bind(p.value.pmf(), [&](int a) { return k.value(a).pmf(); });
    CHECK(dbind(p.value, k.value).pmf() == expected);
  }
}

TEST_CASE("choice") {
  const auto a = dirac(0);
  const auto b = dirac(1);
  CHECK(choice(Prob(1, 1), a, b) == a);
  CHECK(choice(Prob(0, 1), a, b) == b);
  CHECK(choice(Prob(1, 3), a, a) == a);
  CHECK(choice(Prob(1, 3), a, b) == choice(Prob(2, 3), b, a));
  CHECK(choice(Prob(1, 3), a, b).pmf() == Pmf{{0, q(1, 3)}, {1, q(2, 3)}});
}

TEST_CASE("s and r") {
  CHECK(s_of(Prob(1, 1), Prob(1, 5)).value() == 1);
  CHECK(r_of(Prob(1, 1), Prob(1, 5)).value() == 1);
  CHECK(s_of(Prob(1, 2), Prob(1, 2)).value() == q(3, 4));
  CHECK(r_of(Prob(1, 2), Prob(1, 2)).value() == q(2, 3));
  CHECK(s_of(Prob(0, 1), Prob(0, 1)).value() == 0);
  CHECK(r_of(Prob(0, 1), Prob(0, 1)).value() == 0);
}

TEST_CASE("quasi associativity by hand") {
  const Prob half(1, 2);
  const auto a = dirac(0);
  const auto b = dirac(1);
  const auto c = dirac(2);
  const auto lhs = choice(half, a, choice(half, b, c));
  const auto rhs = choice(s_of(half, half), choice(r_of(half, half), a, b), c);
  CHECK(lhs.pmf() == Pmf{{0, q(1, 2)}, {1, q(1, 4)}, {2, q(1, 4)}});
  CHECK(lhs == rhs);
  const Prob zero(0, 1);
  const Prob third(1, 3);
  CHECK(choice(zero, a, choice(third, b, c)) == choice(third, b, c));
  CHECK(choice(s_of(zero, third), choice(r_of(zero, third), a, b), c) == choice(third, b, c));
}

TEST_CASE("bind distributes over choice") {
  const auto f = [](int x) { return uniform(std::vector<int>{x, x + 3}); };
  const auto a = uniform(std::vector<int>{0, 1, 2});
  const auto b = dirac(5);
  for (const Prob& p : {Prob(0, 1), Prob(1, 4), Prob(1, 1)}) {
    CHECK(dbind(choice(p, a, b), f) == choice(p, dbind(a, f), dbind(b, f)));
    CHECK(dbind(choice(p, a, a), f) == dbind(a, f));
  }
}

TEST_CASE("all distribution laws on 200 random instances") {
  const auto before = dist_invariant_checks();
  const auto rs = check_all(dist_handle(), CheckConfig{});
  CHECK(all_passed(rs));
  for (const auto& r : rs) CHECK(r.instances >= 200);
  CHECK(dist_invariant_checks() > before);
}

}
