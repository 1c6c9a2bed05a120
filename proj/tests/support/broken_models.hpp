#pragma once

// Models used to check that the law checkers notice broken instances.

#include <vector>

#include "monadic/generic_laws.hpp"
#include "monadic/typed_store.hpp"

namespace monadic::testing {

/// Lists as a functor and monad (concatMap). `drop_last` makes map lose the
/// final element.
struct ListModel {
  template <class A>
  using comp = std::vector<A>;

  bool drop_last = false;

  std::string name() const { return drop_last ? "list[map drops last]" : "list"; }

  template <class A>
  std::vector<A> ret(A a) const {
    return {std::move(a)};
  }

  template <class A, class F>
  auto bind(const std::vector<A>& m, F&& f) const {
    std::remove_cvref_t<std::invoke_result_t<F&, const A&>> out;
    for (const auto& x : m) {
      auto ys = f(x);
      out.insert(out.end(), ys.begin(), ys.end());
    }
    return out;
  }

  template <class A, class F>
  auto map(F&& h, const std::vector<A>& m) const {
    std::vector<std::remove_cvref_t<std::invoke_result_t<F&, const A&>>> out;
    for (const auto& x : m) out.push_back(h(x));
    if (drop_last && !out.empty()) out.pop_back();
    return out;
  }

  template <class A>
  bool same(const std::vector<A>& a, const std::vector<A>& b) const {
    return a == b;
  }

  template <class A>
  std::string show(const std::vector<A>& a) const {
    return show_value(a);
  }
};

/// Lists with fail = [] and alt = concatenation: a lawful nondeterminism
/// monad but not a plus monad, since m [~] m duplicates outcomes.
struct ListAlt : ListModel {
  std::string name() const { return "list[alt = concat]"; }

  template <class A>
  std::vector<A> fail() const {
    return {};
  }

  template <class A>
  std::vector<A> alt(const std::vector<A>& m, const std::vector<A>& n) const {
    auto out = m;
    out.insert(out.end(), n.begin(), n.end());
    return out;
  }
};

inline Fixture<ListModel> list_fixture(bool drop_last) {
  using F = Fixture<ListModel>;
  const ListModel m{drop_last};
  F fx{m, m.name()};
  fx.values = naturals(3);
  fx.comps = catalog(std::vector<Named<std::vector<int>>>{
      {"[]", {}}, {"[1]", {1}}, {"[1;2]", {1, 2}}, {"[1;2;3]", {1, 2, 3}}});
  fx.konts = catalog(std::vector<Named<F::K>>{
      {"λx. [x]", [](int x) { return std::vector<int>{x}; }},
      {"λx. [x; x+10]", [](int x) { return std::vector<int>{x, x + 10}; }},
      {"λx. []", [](int) { return std::vector<int>{}; }},
  });
  fx.funcs = catalog(std::vector<Named<F::H>>{
      {"λx. x+1", [](int x) { return x + 1; }},
      {"λx. 2x", [](int x) { return 2 * x; }},
  });
  return fx;
}

inline Fixture<ListAlt> list_alt_fixture() {
  using F = Fixture<ListAlt>;
  const ListAlt m{};
  F fx{m, m.name()};
  fx.values = naturals(3);
  fx.comps = catalog(std::vector<Named<std::vector<int>>>{{"[]", {}}, {"[1]", {1}}, {"[1;2]", {1, 2}}});
  fx.konts = catalog(std::vector<Named<F::K>>{
      {"λx. [x]", [](int x) { return std::vector<int>{x}; }},
      {"λx. [x; x+1]", [](int x) { return std::vector<int>{x, x + 1}; }},
  });
  fx.funcs = catalog(std::vector<Named<F::H>>{{"λx. x+1", [](int x) { return x + 1; }}});
  return fx;
}

/// A typed store whose cput also appends a copy of the written binding.
class AppendingStore : public TypedStoreMonad {
 public:
  AppendingStore() : TypedStoreMonad(store_probes(), "typed-store[cput appends]") {}

  comp<Unit> cput(const Loc& r, const Value& v) const {
    return then(*this, TypedStoreMonad::cput(r, v), then(*this, cnew(r.tag, v), ret(tt)));
  }
};

}  // namespace monadic::testing
