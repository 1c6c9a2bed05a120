#include "doctest.h"
#include "monadic/typed_store.hpp"
#include "support/broken_models.hpp"

using namespace monadic;

namespace {

const MlType t_bool = MlType::ml_bool();
const MlType t_nat = MlType::ml_nat();

template <class A>
using Run = OptionVal<std::pair<A, TypedStore>>;

}  // namespace

TEST_SUITE("typed-store") {

TEST_CASE("type interpretation") {
  CHECK(interpret(t_bool).describe() == "booleans");
  CHECK(interpret(t_bool).admits(Value(true)));
  CHECK_FALSE(interpret(t_bool).admits(Value(1)));
  const auto ref_nat = interpret(MlType::ml_ref(t_nat));
  CHECK(ref_nat.describe() == "locations tagged nat");
  CHECK(ref_nat.admits(Value(Loc{t_nat, 4})));
  CHECK_FALSE(ref_nat.admits(Value(Loc{t_bool, 4})));
  const auto rl = MlType::ml_rlist(t_bool);
  CHECK(interpret(rl).describe() == "rlists over booleans");
  CHECK(interpret(rl).admits(Value(nil())));
  CHECK(interpret(rl).admits(Value(cons(true, Loc{rl, 0}))));
  CHECK_FALSE(interpret(rl).admits(Value(cons(3, Loc{rl, 0}))));
  CHECK_THROWS_AS(Binding(t_bool, Value(3)), std::invalid_argument);
}

TEST_CASE("coercion checks the tag") {
  CHECK(coerce(t_nat, Binding(t_nat, 5)) == std::optional<Value>(Value(5)));
  CHECK_FALSE(coerce(t_bool, Binding(t_nat, 5)));
  const auto rl = MlType::ml_rlist(t_nat);
  const Value cell = cons(2, Loc{rl, 1});
  CHECK(coerce(rl, Binding(rl, cell)) == std::optional<Value>(cell));
}

TEST_CASE("cnew appends") {
  const auto ts = make_typed_store();
  const auto one = ts.run(ts.cnew(t_nat, 4), {});
  REQUIRE(one);
  CHECK(one->first == Loc{t_nat, 0});
  CHECK(one->second.size() == 1);
  const auto two = ts.run(then(ts, ts.cnew(t_nat, 4), ts.cnew(t_bool, true)), {});
  REQUIRE(two);
  CHECK(two->first == Loc{t_bool, 1});
  for (const auto& s : ts.probes()) {
    const auto r = ts.run(ts.cnew(t_nat, 4), s);
    REQUIRE(r);
    CHECK(r->first.id == s.size());
  }
}

TEST_CASE("cget") {
  const auto ts = make_typed_store();
  const TypedStore st{Binding(t_nat, 9)};
  CHECK(ts.run(ts.cget(Loc{t_nat, 0}), st) == Run<Value>({Value(9), st}));
  CHECK_FALSE(ts.run(ts.cget(Loc{t_nat, 1}), st));
  CHECK_FALSE(ts.run(ts.cget(Loc{t_bool, 0}), st));
}

TEST_CASE("cput") {
  const auto ts = make_typed_store();
  const TypedStore st{Binding(t_nat, 9)};
  CHECK(ts.run(ts.cput(Loc{t_nat, 0}, 7), st) == Run<Unit>({tt, TypedStore{Binding(t_nat, 7)}}));
  CHECK_FALSE(ts.run(ts.cput(Loc{t_nat, 3}, 7), st));
  CHECK_FALSE(ts.run(ts.cput(Loc{t_nat, 0}, true), st));
  const Loc r{t_nat, 0};
  CHECK(ts.same(then(ts, ts.cput(r, 1), ts.cput(r, 2)), ts.cput(r, 2)));
}

TEST_CASE("cchk") {
  const auto ts = make_typed_store();
  const TypedStore st{Binding(t_nat, 9)};
  CHECK(ts.run(ts.cchk(Loc{t_nat, 0}), st) == Run<Unit>({tt, st}));
  CHECK_FALSE(ts.run(ts.cchk(Loc{t_bool, 0}), st));
  const auto k = [ts](const Loc& r) { return ts.cget(r); };
  const auto lhs = ts.bind(ts.cnew(t_nat, 3), [ts, k](const Loc& r) { return then(ts, ts.cchk(r), k(r)); });
  const auto rhs = ts.bind(ts.cnew(t_nat, 3), k);
  CHECK(ts.same(lhs, rhs));
}

TEST_CASE("store laws") {
  const auto ts = make_typed_store();
  const auto r = ts.run(ts.bind(ts.cget(Loc{t_nat, 0}), [ts](const Value& v) { return ts.cput(Loc{t_nat, 0}, v); }),
                        TypedStore{Binding(t_nat, 9)});
  CHECK(r == Run<Unit>({tt, TypedStore{Binding(t_nat, 9)}}));
  const auto k = [ts](const Loc& r2) { return ts.cget(r2); };
  const auto lhs = ts.bind(ts.cnew(t_nat, 1), [ts, k](const Loc& r2) { return then(ts, ts.cput(r2, 5), k(r2)); });
  const auto rhs = ts.bind(ts.cnew(t_nat, 5), k);
  CHECK(ts.same(lhs, rhs));
  const auto reports = check_all(typed_store_handle(), CheckConfig{});
  CHECK(reports.size() == 15);
  CHECK(all_passed(reports));
  for (const auto& rep : reports) CHECK(rep.instances > 0);
}

TEST_CASE("cycle builds two cells pointing at each other") {
  const auto ts = make_typed_store();
  const auto rl = MlType::ml_rlist(t_bool);
  const auto out = ts.run(cycle(ts, t_bool, true, false), {});
  REQUIRE(out);
  CHECK(out->first == Loc{rl, 0});
  REQUIRE(out->second.size() == 2);
  CHECK(out->second[0].value() == Value(cons(true, Loc{rl, 1})));
  CHECK(out->second[1].value() == Value(cons(false, Loc{rl, 0})));

  const auto tail = ts.run(ts.bind(cycle(ts, t_bool, true, false), [ts](const Loc& r) { return rtl(ts, r); }), {});
  REQUIRE(tail);
  CHECK(tail->first == Loc{rl, 1});

  const TypedStore just_nil{Binding(rl, nil())};
  CHECK(ts.run(rtl(ts, Loc{rl, 0}), just_nil) == Run<Loc>({Loc{rl, 0}, just_nil}));
}

TEST_CASE("rtl twice returns to the start") {
  const auto ts = make_typed_store();
  CHECK(check_rtl_tl_self(ts, t_bool, true, false, {TypedStore{}}));
  CHECK(check_rtl_tl_self(ts, t_nat, 1, 2, {TypedStore{Binding(t_bool, true)}}));
  CHECK(check_rtl_tl_self(ts, t_nat, 1, 2, ts.probes()));
  const auto r = check_rtl_tl_self_random(50, 0);
  CHECK(r.passed());
  CHECK(r.instances == 50);
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<Value> xs;
    for (std::size_t k = 0; k < n; ++k) xs.emplace_back(static_cast<Nat>(k));
    CHECK(check_rtl_n_self(ts, t_nat, xs, ts.probes()));
  }
}

TEST_CASE("a cput that also appends breaks cputput") {
  const testing::AppendingStore broken;
  const auto h = typed_store_handle(broken);
  const auto r = h.check(laws::store_cputput, CheckConfig{});
  CHECK_FALSE(r.passed());
  REQUIRE(r.counterexample);
  CHECK(r.counterexample->reproduce());
}

}
