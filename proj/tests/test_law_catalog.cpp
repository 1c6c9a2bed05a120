#include <set>

#include "doctest.h"
#include "json.hpp"
#include "monadic/generic_laws.hpp"
#include "monadic/probability.hpp"
#include "monadic/suites.hpp"
#include "monadic/typed_store.hpp"
#include "support/broken_models.hpp"

using namespace monadic;
using monadic::testing::list_alt_fixture;
using monadic::testing::list_fixture;

namespace {

const LawReport& find(const std::vector<LawReport>& rs, std::string_view law) {
  for (const auto& r : rs) {
    if (r.law.name == law) return r;
  }
  FAIL("no report for " << law);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_SUITE("law-catalog") {

TEST_CASE("catalog names are unique and cover the law families") {
  std::set<std::string_view> names;
  for (const auto& l : all_laws()) {
    CHECK(names.insert(l.name).second);
    CHECK_FALSE(l.source.empty());
  }
  CHECK(names.size() >= 40);
  CHECK(find_law("altCI.idempotent"));
  CHECK_FALSE(find_law("no.such.law"));
}

TEST_CASE("functor laws on identity") {
  const auto rs = check_functor_laws(identity_fixture(), CheckConfig{});
  REQUIRE(rs.size() == 2);
  CHECK(all_passed(rs));
}

TEST_CASE("list functor composition over [1;2;3]") {
  const testing::ListModel list;
  const std::vector<int> xs{1, 2, 3};
  const auto f = [](int x) { return 2 * x; };
  const auto g = [](int x) { return x + 1; };
  // Direct traversal.
  std::vector<int> expected;
  for (int x : xs) expected.push_back(g(f(x)));
  CHECK(list.map([&](int x) { return g(f(x)); }, xs) == expected);
  CHECK(list.map(g, list.map(f, xs)) == expected);
  CHECK(all_passed(check_functor_laws(list_fixture(false), CheckConfig{})));
}

TEST_CASE("map dropping the last element breaks functor.id at [1]") {
  const auto r = law::functor_id(list_fixture(true), CheckConfig{});
  CHECK_FALSE(r.passed());
  REQUIRE(r.counterexample);
  CHECK(r.counterexample->instance == "m=[1]");
  CHECK(r.counterexample->lhs == "[]");
  CHECK(r.counterexample->rhs == "[1]");
  CHECK(r.counterexample->reproduce());
}

TEST_CASE("bind laws on concrete instances") {
  CHECK(powerset.bind(powerset.ret(3), [](int x) { return powerset.ret(x + 1); }) == powerset.ret(4));
  const auto st = make_option_state();
  const auto m = then(st, st.put(2), st.get());
  const auto right = st.bind(m, [st](int x) { return st.ret(x); });
  for (int s : int_states()) CHECK(st.run(right, s) == st.run(m, s));
  CHECK(all_passed(check_monad_laws(option_state_fixture(), CheckConfig{})));
}

TEST_CASE("list monad with concatenating alt is not a plus monad") {
  const auto h = make_handle(list_alt_fixture());
  const std::vector<LawId> nondet{laws::fail_left_zero, laws::alt_associative, laws::nondet_altfailm,
                                  laws::nondet_altmfail};
  CHECK(all_passed(check_law_suite(nondet, h, CheckConfig{})));
  const std::vector<LawId> ci{laws::altci_idempotent};
  const auto rs = check_law_suite(ci, h, CheckConfig{});
  REQUIRE(rs.size() == 1);
  CHECK_FALSE(rs[0].passed());
  REQUIRE(rs[0].counterexample);
  CHECK(rs[0].counterexample->instance == "m=[1]");
  CHECK(rs[0].counterexample->reproduce());
}

TEST_CASE("unsupported laws are rejected before evaluation") {
  const auto h = typed_store_handle();
  const std::vector<LawId> arr{laws::array_aputput};
  CHECK_THROWS_AS(check_law_suite(arr, h, CheckConfig{}), UnsupportedLaw);

  int evaluated = 0;
  ModelHandle counting("counting");
  counting.add(laws::bind_left_neutral, [&evaluated](const CheckConfig&) {
    ++evaluated;
    return LawReport{laws::bind_left_neutral, "counting"};
  });
  const std::vector<LawId> mixed{laws::bind_left_neutral, laws::state_putput};
  CHECK_THROWS_AS(check_law_suite(mixed, counting, CheckConfig{}), UnsupportedLaw);
  CHECK(evaluated == 0);
}

TEST_CASE("capabilities decide which laws a handle offers") {
  CHECK_FALSE(make_handle(identity_fixture()).supports("fail.left_zero"));
  CHECK(make_handle(option_fixture()).supports("fail.left_zero"));
  CHECK_FALSE(make_handle(option_fixture()).supports("alt.associative"));
  CHECK(make_handle(except_fixture()).supports("except.catchA"));
  CHECK(make_handle(pure_array_fixture(0)).supports("array.aputgetC"));
  CHECK_FALSE(make_handle(pure_array_fixture(0)).supports("state.putput"));
}

TEST_CASE("for_all enumerates exhaustively before sampling") {
  CheckConfig cfg;
  cfg.exhaustive_bound = 2;
  cfg.random_trials = 5;
  std::vector<std::pair<int, int>> seen;
  const auto r = for_all(
      laws::bind_left_neutral, "probe", cfg, {"a", "b"},
      [&seen](int a, int b) {
        seen.emplace_back(a, b);
        return Verdict::holds();
      },
      naturals(9), naturals(9));
  CHECK(r.instances == 9 + 5);
  REQUIRE(seen.size() == 14);
  // First domain varies fastest.
  CHECK(seen[0] == std::pair{0, 0});
  CHECK(seen[1] == std::pair{1, 0});
  CHECK(seen[3] == std::pair{0, 1});
}

TEST_CASE("for_all counts skipped instances apart") {
  CheckConfig cfg;
  cfg.random_trials = 0;
  const auto r = for_all(
      laws::bind_left_neutral, "probe", cfg, {"a"},
      [](int a) { return a % 2 == 0 ? Verdict::holds() : Verdict::skipped(); }, naturals(9));
  CHECK(r.instances == 2);
  CHECK(r.skipped == 2);
  CHECK(r.passed());
}

TEST_CASE("sample streams depend only on seed, law and model") {
  CHECK(instance_seed(0, "a", "m") == instance_seed(0, "a", "m"));
  CHECK(instance_seed(0, "a", "m") != instance_seed(1, "a", "m"));
  CHECK(instance_seed(0, "a", "m") != instance_seed(0, "b", "m"));
  CHECK(instance_seed(0, "a", "m") != instance_seed(0, "a", "n"));
}

TEST_CASE("parallel checking gives the sequential report") {
  const auto h = make_handle(powerset_fixture());
  CheckConfig cfg;
  cfg.seed = 3;
  const auto seq = check_all(h, cfg, 1);
  const auto par = check_all(h, cfg, 4);
  CHECK(render_json(seq) == render_json(par));
}

TEST_CASE("structured reports follow the record schema") {
  const auto rs = std::vector<LawReport>{law::functor_id(list_fixture(true), CheckConfig{}),
                                         law::functor_id(list_fixture(false), CheckConfig{})};
  const auto doc = nlohmann::json::parse(render_json(rs));
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 2);
  for (const auto& rec : doc) {
    CHECK(rec.at("law").is_string());
    CHECK(rec.at("source").is_string());
    CHECK(rec.at("instances").is_number_unsigned());
    CHECK(rec.at("status").is_string());
  }
  CHECK(doc[0]["status"] == "fail");
  CHECK(doc[0]["counterexample"]["instance"] == "m=[1]");
  CHECK(doc[1]["status"] == "pass");
  CHECK_FALSE(doc[1].contains("counterexample"));
}

TEST_CASE("named suites") {
  CHECK(is_suite("plus"));
  CHECK_FALSE(is_suite("bogus"));
  CHECK_THROWS_AS(build_suite("bogus"), UnknownSuite);
  const auto plus = run_suite("plus", CheckConfig{});
  CHECK(all_passed(plus));
  CHECK(find(plus, "altCI.idempotent").instances > 0);
  CHECK(all_passed(run_suite("nondet", CheckConfig{})));
  CHECK(all_passed(run_suite("array", CheckConfig{})));
}

}
