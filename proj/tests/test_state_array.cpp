#include "doctest.h"
#include "monadic/state_array.hpp"
#include "monadic/suites.hpp"
#include "support/oracles.hpp"

using namespace monadic;

namespace {

using Store = ArrayStore<int>;

Store store_of(std::initializer_list<std::pair<const std::size_t, int>> cells, int def = 0) {
  Store st(def);
  for (const auto& [i, v] : cells) st = st.with(i, v);
  return st;
}

/// Final store of a pure-array program.
template <class A>
Store final_store(const PureArray& am, const comp_t<PureArray, A>& m, const Store& s) {
  return am.run(m, s).second;
}

/// Store with noise in cells 0..extent-1, then the list at offset i.
Store noisy(std::size_t extent, std::size_t i, const std::vector<int>& xs) {
  Store st(0);
  for (std::size_t k = 0; k < extent; ++k) st = st.with(k, 7 + static_cast<int>(k));
  for (std::size_t k = 0; k < xs.size(); ++k) st = st.with(i + k, xs[k]);
  return st;
}

}  // namespace

TEST_SUITE("state-array") {

TEST_CASE("int state") {
  const auto st = make_id_state();
  CHECK(st.run(then(st, st.put(3), st.get()), 0) == std::pair{3, 3});
  for (int s : int_states()) {
    CHECK(st.run(st.bind(st.get(), [st](int x) { return st.put(x); }), s) == std::pair{tt, s});
  }
  CHECK(st.run(then(st, st.put(1), st.put(2)), 0) == std::pair{tt, 2});
}

TEST_CASE("array store is canonical") {
  CHECK(Store(0).with(3, 0) == Store(0));
  CHECK(Store(0).with(3, 5).with(3, 0) == Store(0));
  CHECK(Store(0).with(1, 5) != Store(0).with(2, 5));
  CHECK(Store::from_list(0, 2, {9, 8}) == store_of({{2, 9}, {3, 8}}));
  CHECK(show(store_of({{0, 1}, {2, 3}})) == "[0↦1, 2↦3 | _↦0]");
}

TEST_CASE("aget and aput") {
  const auto am = make_pure_array(0);
  CHECK(am.run(then(am, am.aput(0, 7), am.aget(0)), am.empty_store()).first == 7);
  CHECK(am.run(am.aget(5), am.empty_store()).first == 0);
  CHECK(make_pure_array(2).run(make_pure_array(2).aget(5), Store(2)).first == 2);
  const auto ab = then(am, am.aput(0, 1), am.aput(1, 2));
  const auto ba = then(am, am.aput(1, 2), am.aput(0, 1));
  CHECK(am.same(ab, ba));
}

TEST_CASE("aswap") {
  const auto am = make_pure_array(0);
  CHECK(final_store(am, aswap(am, 0, 1), store_of({{0, 4}, {1, 5}})) == store_of({{0, 5}, {1, 4}}));
  for (const auto& s : am.probes()) CHECK(final_store(am, aswap(am, 2, 2), s) == s);
  const auto d = make_pure_array(6);
  CHECK(final_store(d, aswap(d, 0, 2), store_of({{0, 1}}, 6)) == store_of({{2, 1}}, 6));
}

TEST_CASE("write_list") {
  const auto am = make_pure_array(0);
  for (const auto& s : am.probes()) CHECK(final_store(am, write_list(am, 0, {}), s) == s);
  CHECK(final_store(am, write_list(am, 2, {9, 8}), am.empty_store()) == store_of({{2, 9}, {3, 8}}));
  const auto w = write_list(am, 1, {3, 1});
  CHECK(am.same(then(am, w, w), w));
}

TEST_CASE("ipartl") {
  const auto am = make_pure_array(0);
  for (const auto& s : am.probes()) {
    const auto [sizes, after] = am.run(ipartl(am, 3, 1, 2, 1, 0), s);
    CHECK(sizes == Sizes{2, 1});
    CHECK(after == s);
  }
  const auto [sizes, after] = am.run(ipartl(am, 3, 1, 0, 0, 2), Store::from_list(0, 0, {3, 1, 2}));
  CHECK(sizes == Sizes{2, 0});
  CHECK(after.segment(1, 2) == std::vector<int>{1, 2});
}

TEST_CASE("ipartl partitions every small segment") {
  const auto am = make_pure_array(0);
  for (const auto& xs : oracle::lists_upto(5, 4)) {
    for (int p = 0; p < 4; ++p) {
      const auto [sizes, after] = am.run(ipartl(am, p, 0, 0, 0, xs.size()), Store::from_list(0, 0, xs));
      const auto seg = after.segment(0, xs.size());
      CHECK(oracle::sorted(seg) == oracle::sorted(xs));
      CHECK(sizes.first + sizes.second == xs.size());
      for (std::size_t k = 0; k < sizes.first; ++k) CHECK(seg[k] <= p);
      for (std::size_t k = sizes.first; k < xs.size(); ++k) CHECK(seg[k] > p);
    }
  }
}

TEST_CASE("dipartl certificates") {
  const auto pa = make_plus_array(0);
  for (const auto& xs : oracle::lists_upto(4, 3)) {
    const auto out = pa.run(dipartl(pa, 1, 0, 0, 0, xs.size()), Store::from_list(0, 0, xs));
    REQUIRE(out.size() == 1);
    CHECK(out.begin()->first.ny() + out.begin()->first.nz() == xs.size());
  }
  const auto zero = pa.run(dipartl(pa, 1, 0, 0, 0, 0), pa.empty_store());
  REQUIRE(zero.size() == 1);
  CHECK(zero.begin()->first == PartitionSizes(0, 0, 0));

  const Partition<PlusArray> faulty = [pa](int, std::size_t, std::size_t y, std::size_t z, std::size_t x) {
    return pa.ret(Sizes{x + y + z + 1, 0});
  };
  CHECK(pa.run(dipartl(pa, 1, 0, 0, 0, 2, faulty), pa.empty_store()).empty());
  CHECK_THROWS_AS(PartitionSizes(3, 0, 2), SizeCertificateViolation);
}

TEST_CASE("iqsort with an oversized partition has no outcome") {
  const auto pa = make_plus_array(0);
  const Partition<PlusArray> oversized = [pa](int, std::size_t, std::size_t y, std::size_t z, std::size_t x) {
    return pa.ret(Sizes{x + y + z + 1, 0});
  };
  CHECK(pa.run(iqsort(pa, 0, 2, oversized), Store::from_list(0, 0, {1, 1})).empty());
}

TEST_CASE("iqsort against a reference sort") {
  const auto am = make_pure_array(0);
  for (const auto& s : am.probes()) CHECK(final_store(am, iqsort(am, 0, 0), s) == s);
  CHECK(final_store(am, then(am, write_list(am, 0, {3, 1, 2}), iqsort(am, 0, 3)), am.empty_store()).segment(0, 3) ==
        std::vector<int>{1, 2, 3});
  for (const auto& xs : oracle::lists_upto(5, 4)) {
    for (std::size_t i = 0; i < 3; ++i) {
      const Store init = noisy(8, i, xs);
      const Store after = final_store(am, iqsort(am, i, xs.size()), init);
      CHECK(after == noisy(8, i, oracle::sorted(xs)));
    }
  }
}

TEST_CASE("iqsort in the plus-array model is deterministic") {
  const auto pa = make_plus_array(0);
  for (const auto& xs : oracle::lists_upto(3, 3)) {
    const auto out = pa.run(iqsort(pa, 1, xs.size()), noisy(4, 1, xs));
    REQUIRE(out.size() == 1);
    CHECK(out.begin()->second == noisy(4, 1, oracle::sorted(xs)));
  }
}

TEST_CASE("iqsort refines slowsort") {
  const auto trivial = check_iqsort_refines_slowsort(0, 3, 1);
  CHECK(trivial.holds);
  const auto pa = make_plus_array(0);
  const std::vector<int> xs{2, 1};
  const auto lhs = then(pa, write_list(pa, 0, xs), iqsort(pa, 0, 2));
  const auto rhs = pa.bind(slowsort(pa, xs), [pa](const std::vector<int>& ys) { return write_list(pa, 0, ys); });
  const auto l = pa.run(lhs, pa.empty_store());
  REQUIRE(l.size() == 1);
  CHECK(l.begin()->second.segment(0, 2) == std::vector<int>{1, 2});
  CHECK(pa.run(rhs, pa.empty_store()).contains(*l.begin()));
  const auto r = check_iqsort_refines_slowsort(4, 3, 3);
  CHECK(r.holds);
  CHECK_FALSE(r.witness);
}

TEST_CASE("refinement catches a wrong sort") {
  const auto pa = make_plus_array(0);
  const std::vector<int> xs{2, 1};
  const auto wrong = write_list(pa, 0, xs);
  const auto reference = pa.bind(slowsort(pa, xs), [pa](const std::vector<int>& ys) { return write_list(pa, 0, ys); });
  const auto r = refines_at<Unit>(pa, wrong, reference, refinement_stores(2));
  CHECK_FALSE(r.holds);
  CHECK(r.witness);
}

TEST_CASE("swap refinement") {
  for (int x = 0; x < 3; ++x) {
    CHECK(check_swap_rcons_refinement(0, x, {1}, {}).holds);
    for (int a = 0; a < 3; ++a) {
      CHECK(check_swap_rcons_refinement(1, x, {}, {a}).holds);
      // LHS unfolded by hand: [a; x] becomes [x; a].
      const auto pa = make_plus_array(0);
      const auto lhs = then(pa, write_list(pa, 0, {a, x}), aswap(pa, 0, 1));
      CHECK(pa.run(lhs, pa.empty_store()).begin()->second.segment(0, 2) == std::vector<int>{x, a});
    }
  }
  CHECK(check_swap_rcons_suite(3, 3, 2).holds);
}

TEST_CASE("registered witnesses") {
  const auto pa = make_plus_array(0);
  const auto w = plus_is_nondet(pa, registered_qperm(pa, std::vector<int>{1, 2}));
  REQUIRE(w);
  CHECK(w->sem() == OutcomeSet<std::vector<int>>{{1, 2}, {2, 1}});
  const auto r = plus_is_nondet(pa, registered_ret(pa, 0));
  REQUIRE(r);
  CHECK(r->kind() == Term<int>::Kind::ret);
  CHECK_FALSE(plus_is_nondet(pa, unregistered<int>(pa.aget(0))));
  const Registered<int> lying{pa.aget(0), Term<int>::ret(0)};
  CHECK_THROWS_AS(plus_is_nondet(pa, lying), WitnessMismatch);
}

TEST_CASE("array laws with two defaults") {
  CHECK(all_passed(run_suite("array", CheckConfig{})));
  CHECK(all_passed(run_suite("plus-array", CheckConfig{})));
  CHECK(all_passed(run_suite("state", CheckConfig{})));
}

}
