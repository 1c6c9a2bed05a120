#pragma once

// Base monads (identity, option), the exception model, the state transformer
// over a base monad, monad morphisms and the fastprod example.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "monadic/generic_laws.hpp"
#include "monadic/law_catalog.hpp"
#include "monadic/nondet.hpp"

namespace monadic {

/// The identity monad: a computation is its value.
struct Identity {
  template <class A>
  using comp = A;

  std::string name() const { return "identity"; }

  template <class A>
  A ret(A a) const {
    return a;
  }

  template <class A, class F>
  auto bind(const A& m, F&& f) const {
    return f(m);
  }

  template <class A, class F>
  auto map(F&& h, const A& m) const {
    return h(m);
  }

  template <class A>
  bool same(const A& a, const A& b) const {
    return a == b;
  }

  template <class A>
  std::string show(const A& a) const {
    return show_value(a);
  }
};

template <class A>
using OptionVal = std::optional<A>;

/// The option monad: None is absorbing.
struct Option {
  template <class A>
  using comp = OptionVal<A>;

  std::string name() const { return "option"; }

  template <class A>
  OptionVal<A> ret(A a) const {
    return OptionVal<A>(std::move(a));
  }

  template <class A, class F>
  auto bind(const OptionVal<A>& m, F&& f) const {
    using R = std::remove_cvref_t<std::invoke_result_t<F&, const A&>>;
    if (!m) return R{};
    return R(f(*m));
  }

  template <class A, class F>
  auto map(F&& h, const OptionVal<A>& m) const {
    using B = std::remove_cvref_t<std::invoke_result_t<F&, const A&>>;
    if (!m) return OptionVal<B>{};
    return OptionVal<B>(h(*m));
  }

  template <class A>
  OptionVal<A> fail() const {
    return std::nullopt;
  }

  template <class A>
  bool same(const OptionVal<A>& a, const OptionVal<A>& b) const {
    return a == b;
  }

  template <class A>
  std::string show(const OptionVal<A>& a) const {
    return show_value(a);
  }
};

/// Failure-based exceptions with a single, payload-free exception.
struct Except : Option {
  std::string name() const { return "except"; }

  template <class A>
  OptionVal<A> catch_with(const OptionVal<A>& m, const OptionVal<A>& h) const {
    return m ? m : h;
  }
};

inline constexpr Identity identity{};
inline constexpr Option option{};
inline constexpr Except except{};

/// Value type carried by a base computation type.
template <class Base, class C>
struct value_of {
  using type = typename C::value_type;
};

template <class C>
struct value_of<Identity, C> {
  using type = C;
};

template <class Base, class C>
using value_of_t = typename value_of<Base, C>::type;

/// A state-transformer computation: a function from the initial state to a
/// base computation of (result, final state).
template <class S, class Base, class A>
class StateComp {
 public:
  using value_type = A;
  using result_type = comp_t<Base, std::pair<A, S>>;

  StateComp() = default;
  explicit StateComp(std::function<result_type(const S&)> run) : run_(std::move(run)) {}

  result_type operator()(const S& s) const { return run_(s); }

 private:
  std::function<result_type(const S&)> run_;
};

/// The state monad transformer over `Base`. Equality of computations is
/// extensional over the declared probe states.
template <class S, class Base>
class StateT {
 public:
  using state_type = S;
  using base_type = Base;

  template <class A>
  using comp = StateComp<S, Base, A>;

  StateT(Base base, std::vector<S> probes, std::string label)
      : base_(std::move(base)),
        probes_(std::make_shared<const std::vector<S>>(std::move(probes))),
        label_(std::move(label)) {}

  const std::string& name() const { return label_; }
  const Base& base() const { return base_; }
  const std::vector<S>& probes() const { return *probes_; }

  template <class A>
  comp<A> ret(A a) const {
    const Base b = base_;
    return comp<A>([b, a](const S& s) { return b.ret(std::pair<A, S>{a, s}); });
  }

  template <class A, class F>
  auto bind(const comp<A>& m, F f) const {
    using R = std::remove_cvref_t<std::invoke_result_t<F&, const A&>>;
    const Base b = base_;
    return R([b, m, f](const S& s) {
      return b.bind(m(s), [f](const std::pair<A, S>& as) { return f(as.first)(as.second); });
    });
  }

  template <class A, class F>
  auto map(F h, const comp<A>& m) const {
    using B = std::remove_cvref_t<std::invoke_result_t<F&, const A&>>;
    const Base b = base_;
    return comp<B>([b, m, h](const S& s) {
      return b.bind(m(s), [b, h](const std::pair<A, S>& as) { return b.ret(std::pair<B, S>{h(as.first), as.second}); });
    });
  }

  comp<S> get() const {
    const Base b = base_;
    return comp<S>([b](const S& s) { return b.ret(std::pair<S, S>{s, s}); });
  }

  comp<Unit> put(S next) const {
    const Base b = base_;
    return comp<Unit>([b, next](const S&) { return b.ret(std::pair<Unit, S>{tt, next}); });
  }

  template <class A>
  comp<A> fail() const
    requires FailModel<Base>
  {
    const Base b = base_;
    return comp<A>([b](const S&) { return b.template fail<std::pair<A, S>>(); });
  }

  template <class A>
  comp<A> alt(const comp<A>& m, const comp<A>& n) const
    requires AltModel<Base>
  {
    const Base b = base_;
    return comp<A>([b, m, n](const S& s) { return b.alt(m(s), n(s)); });
  }

  /// State-preserving embedding of a base computation.
  template <class BM>
  auto lift(const BM& m) const {
    using A = value_of_t<Base, BM>;
    const Base b = base_;
    return comp<A>([b, m](const S& s) { return b.bind(m, [b, s](const A& x) { return b.ret(std::pair<A, S>{x, s}); }); });
  }

  template <class A>
  auto run(const comp<A>& m, const S& s) const {
    return m(s);
  }

  template <class A>
  bool same(const comp<A>& m, const comp<A>& n) const {
    for (const auto& s : *probes_) {
      if (!base_.same(m(s), n(s))) return false;
    }
    return true;
  }

  /// Runs at up to the first eight probe states.
  template <class A>
  std::string show(const comp<A>& m) const {
    std::string out = "⟨";
    std::size_t k = 0;
    for (const auto& s : *probes_) {
      if (k == 8) {
        out += "; …";
        break;
      }
      if (k++) out += "; ";
      out += show_value(s) + " ↦ " + base_.show(m(s));
    }
    return out + "⟩";
  }

 private:
  Base base_;
  std::shared_ptr<const std::vector<S>> probes_;
  std::string label_;
};

/// A family of maps from computations of `Src` to computations of `Tgt`,
/// given as one callable generic in the value type.
template <class Src, class Tgt, class E>
struct MonadMorphism {
  std::string name;
  Src source;
  Tgt target;
  E component;
};

template <class Src, class Tgt, class E>
MonadMorphism<Src, Tgt, E> make_morphism(std::string name, Src source, Tgt target, E component) {
  return {std::move(name), std::move(source), std::move(target), std::move(component)};
}

template <class S, class Base>
auto lift_morphism(const StateT<S, Base>& st) {
  return make_morphism("liftS[" + st.name() + "]", st.base(), st, [st](const auto& m) { return st.lift(m); });
}

template <class M>
auto identity_morphism(const M& model) {
  return make_morphism("id[" + model.name() + "]", model, model, [](const auto& m) { return m; });
}

/// Checks the ret and bind laws of a monad morphism and spot-checks
/// naturality, with instances drawn from a fixture of the source model.
template <class Src, class Tgt, class E>
std::vector<LawReport> check_monad_morphism(const MonadMorphism<Src, Tgt, E>& e, const Fixture<Src>& fx,
                                            const CheckConfig& cfg) {
  using F = Fixture<Src>;
  const Src src = e.source;
  const Tgt tgt = e.target;
  const E f = e.component;
  std::vector<LawReport> out;
  out.push_back(for_all(
      laws::morphism_ret, e.name, cfg, {"a"}, [tgt, src, f](int a) { return compare(tgt, f(src.ret(a)), tgt.ret(a)); },
      fx.values));
  out.push_back(for_all(
      laws::morphism_bind, e.name, cfg, {"m", "k"},
      [tgt, src, f](const Named<typename F::C>& m, const Named<typename F::K>& k) {
        const auto lhs = f(src.bind(m.value, k.value));
        const auto rhs = tgt.bind(f(m.value), [f, k](int x) { return f(k.value(x)); });
        return compare(tgt, lhs, rhs);
      },
      fx.comps, fx.konts));
  out.push_back(for_all(
      laws::morphism_naturality, e.name, cfg, {"m", "h"},
      [tgt, src, f](const Named<typename F::C>& m, const Named<typename F::H>& h) {
        return compare(tgt, f(fmap(src, h.value, m.value)), fmap(tgt, h.value, f(m.value)));
      },
      fx.comps, fx.funcs));
  return out;
}

// The fastprod example.

using Nat = std::uint64_t;

Nat product(const std::vector<Nat>& s);

/// Fails as soon as a zero is seen, otherwise returns the product.
template <class M>
comp_t<M, Nat> work(const M& m, const std::vector<Nat>& s) {
  for (Nat x : s) {
    if (x == 0) return m.template fail<Nat>();
  }
  return m.ret(product(s));
}

template <class M>
comp_t<M, Nat> fastprod(const M& m, const std::vector<Nat>& s) {
  return m.catch_with(work(m, s), m.ret(Nat{0}));
}

OptionVal<Nat> work(const std::vector<Nat>& s);
OptionVal<Nat> fastprod(const std::vector<Nat>& s);

/// Checks `fastprod s = Ret (product s)` on every list of length at most
/// `max_len` over {0..max_value}.
LawReport check_fastprod(std::size_t max_len, Nat max_value);

}  // namespace monadic
