#pragma once

// Law templates shared by every model, and the fixtures that supply their
// instance generators. A model is registered for exactly the laws whose
// operations it provides.

#include <concepts>
#include <functional>
#include <string>
#include <utility>

#include "monadic/law_catalog.hpp"
#include "monadic/nondet.hpp"

namespace monadic {

template <class M>
concept FunctorModel = MonadModel<M> && requires(const M& m, comp_t<M, int> c) {
  { m.map([](int x) { return x; }, c) } -> std::same_as<comp_t<M, int>>;
};

template <class M>
concept ExceptModel = FailModel<M> && requires(const M& m, comp_t<M, int> c) {
  { m.catch_with(c, c) } -> std::same_as<comp_t<M, int>>;
};

template <class M>
concept IntStateModel = MonadModel<M> && requires(const M& m) {
  { m.get() } -> std::same_as<comp_t<M, int>>;
  { m.put(0) } -> std::same_as<comp_t<M, Unit>>;
};

template <class M>
concept ArrayModel = MonadModel<M> && requires(const M& m, std::size_t i) {
  { m.aget(i) } -> std::same_as<comp_t<M, int>>;
  { m.aput(i, 0) } -> std::same_as<comp_t<M, Unit>>;
};

template <class M>
concept JoinModel = MonadModel<M> && std::totally_ordered<comp_t<M, int>>;

/// `fmap h m`, by the model's own map when it has one.
template <class M, class H, class C>
auto fmap(const M& model, H h, const C& m) {
  if constexpr (requires { model.map(h, m); }) {
    return model.map(h, m);
  } else {
    return model.bind(m, [model, h](const auto& a) { return model.ret(h(a)); });
  }
}

template <class M, class CC>
auto join(const M& model, const CC& mm) {
  return model.bind(mm, [](const auto& m) { return m; });
}

/// Instance generators for one model. Domains left empty disable the laws
/// that need them.
template <class M>
struct Fixture {
  using C = comp_t<M, int>;
  using K = std::function<C(int)>;
  using K2 = std::function<C(int, int)>;
  using H = std::function<int(int)>;

  M model;
  std::string label;
  Domain<int> values;
  Domain<Named<C>> comps;
  Domain<Named<K>> konts;
  Domain<Named<K2>> konts2;
  Domain<Named<H>> funcs;
  Domain<std::size_t> indices;
};

namespace law {

template <class M>
LawReport functor_id(const Fixture<M>& fx, const CheckConfig& cfg) {
  using F = Fixture<M>;
  const M md = fx.model;
  return for_all(
      laws::functor_id, fx.label, cfg, {"m"},
      [md](const Named<typename F::C>& m) { return compare(md, md.map([](int x) { return x; }, m.value), m.value); },
      fx.comps);
}

template <class M>
LawReport functor_comp(const Fixture<M>& fx, const CheckConfig& cfg) {
  using F = Fixture<M>;
  const M md = fx.model;
  return for_all(
      laws::functor_comp, fx.label, cfg, {"m", "f", "g"},
      [md](const Named<typename F::C>& m, const Named<typename F::H>& f, const Named<typename F::H>& g) {
        auto gf = [f, g](int x) { return g.value(f.value(x)); };
        return compare(md, md.map(gf, m.value), md.map(g.value, md.map(f.value, m.value)));
      },
      fx.comps, fx.funcs, fx.funcs);
}

template <class M>
LawReport join_left_unit(const Fixture<M>& fx, const CheckConfig& cfg) {
  using F = Fixture<M>;
  const M md = fx.model;
  return for_all(
      laws::join_left_unit, fx.label, cfg, {"m"},
      [md](const Named<typename F::C>& m) { return compare(md, join(md, md.ret(m.value)), m.value); }, fx.comps);
}

template <class M>
LawReport join_right_unit(const Fixture<M>& fx, const CheckConfig& cfg) {
  using F = Fixture<M>;
  const M md = fx.model;
  return for_all(
      laws::join_right_unit, fx.label, cfg, {"m"},
      [md](const Named<typename F::C>& m) {
        return compare(md, join(md, fmap(md, [md](int x) { return md.ret(x); }, m.value)), m.value);
      },
      fx.comps);
}

template <class M>
LawReport join_associativity(const Fixture<M>& fx, const CheckConfig& cfg) {
  using F = Fixture<M>;
  const M md = fx.model;
  return for_all(
      laws::join_associativity, fx.label, cfg, {"m", "f", "g"},
      [md](const Named<typename F::C>& m, const Named<typename F::K>& f, const Named<typename F::K>& g) {
        // A three-level computation built from m, f and g.
        auto inner = [md, f, g](int x) { return fmap(md, g.value, f.value(x)); };
        const auto mmm = fmap(md, inner, m.value);
        auto join1 = [md](const auto& mm) { return join(md, mm); };
        return compare(md, join(md, fmap(md, join1, mmm)), join(md, join(md, mmm)));
      },
      fx.comps, fx.konts, fx.konts);
}

template <class M>
LawReport bind_left_neutral(const Fixture<M>& fx, const CheckConfig& cfg) {
  using F = Fixture<M>;
  const M md = fx.model;
  return for_all(
      laws::bind_left_neutral, fx.label, cfg, {"a", "f"},
      [md](int a, const Named<typename F::K>& f) { return compare(md, md.bind(md.ret(a), f.value), f.value(a)); },
      fx.values, fx.konts);
}

template <class M>
LawReport bind_right_neutral(const Fixture<M>& fx, const CheckConfig& cfg) {
  using F = Fixture<M>;
  const M md = fx.model;
  return for_all(
      laws::bind_right_neutral, fx.label, cfg, {"m"},
      [md](const Named<typename F::C>& m) {
        return compare(md, md.bind(m.value, [md](int x) { return md.ret(x); }), m.value);
      },
      fx.comps);
}

template <class M>
LawReport bind_associative(const Fixture<M>& fx, const CheckConfig& cfg) {
  using F = Fixture<M>;
  const M md = fx.model;
  return for_all(
      laws::bind_associative, fx.label, cfg, {"m", "f", "g"},
      [md](const Named<typename F::C>& m, const Named<typename F::K>& f, const Named<typename F::K>& g) {
        const auto lhs = md.bind(md.bind(m.value, f.value), g.value);
        const auto rhs = md.bind(m.value, [md, f, g](int x) { return md.bind(f.value(x), g.value); });
        return compare(md, lhs, rhs);
      },
      fx.comps, fx.konts, fx.konts);
}

template <class M>
LawReport fail_left_zero(const Fixture<M>& fx, const CheckConfig& cfg) {
  using F = Fixture<M>;
  const M md = fx.model;
  return for_all(
      laws::fail_left_zero, fx.label, cfg, {"f"},
      [md](const Named<typename F::K>& f) {
        return compare(md, md.bind(md.template fail<int>(), f.value), md.template fail<int>());
      },
      fx.konts);
}

template <class M>
LawReport fail_right_zero(const Fixture<M>& fx, const CheckConfig& cfg) {
  using F = Fixture<M>;
  const M md = fx.model;
  return for_all(
      laws::fail_right_zero, fx.label, cfg, {"m"},
      [md](const Named<typename F::C>& m) {
        return compare(md, then(md, m.value, md.template fail<int>()), md.template fail<int>());
      },
      fx.comps);
}

template <class M>
LawReport alt_associative(const Fixture<M>& fx, const CheckConfig& cfg) {
  using F = Fixture<M>;
  const M md = fx.model;
  return for_all(
      laws::alt_associative, fx.label, cfg, {"m", "n", "o"},
      [md](const Named<typename F::C>& m, const Named<typename F::C>& n, const Named<typename F::C>& o) {
        return compare(md, md.alt(md.alt(m.value, n.value), o.value), md.alt(m.value, md.alt(n.value, o.value)));
      },
      fx.comps, fx.comps, fx.comps);
}

template <class M>
LawReport alt_left_distributive(const Fixture<M>& fx, const CheckConfig& cfg) {
  using F = Fixture<M>;
  const M md = fx.model;
  return for_all(
      laws::alt_left_distributive, fx.label, cfg, {"m", "n", "f"},
      [md](const Named<typename F::C>& m, const Named<typename F::C>& n, const Named<typename F::K>& f) {
        return compare(md, md.bind(md.alt(m.value, n.value), f.value),
                       md.alt(md.bind(m.value, f.value), md.bind(n.value, f.value)));
      },
      fx.comps, fx.comps, fx.konts);
}

template <class M>
LawReport nondet_altfailm(const Fixture<M>& fx, const CheckConfig& cfg) {
  using F = Fixture<M>;
  const M md = fx.model;
  return for_all(
      laws::nondet_altfailm, fx.label, cfg, {"m"},
      [md](const Named<typename F::C>& m) { return compare(md, md.alt(md.template fail<int>(), m.value), m.value); },
      fx.comps);
}

template <class M>
LawReport nondet_altmfail(const Fixture<M>& fx, const CheckConfig& cfg) {
  using F = Fixture<M>;
  const M md = fx.model;
  return for_all(
      laws::nondet_altmfail, fx.label, cfg, {"m"},
      [md](const Named<typename F::C>& m) { return compare(md, md.alt(m.value, md.template fail<int>()), m.value); },
      fx.comps);
}

template <class M>
LawReport altci_idempotent(const Fixture<M>& fx, const CheckConfig& cfg) {
  using F = Fixture<M>;
  const M md = fx.model;
  return for_all(
      laws::altci_idempotent, fx.label, cfg, {"m"},
      [md](const Named<typename F::C>& m) { return compare(md, md.alt(m.value, m.value), m.value); }, fx.comps);
}

template <class M>
LawReport altci_commutative(const Fixture<M>& fx, const CheckConfig& cfg) {
  using F = Fixture<M>;
  const M md = fx.model;
  return for_all(
      laws::altci_commutative, fx.label, cfg, {"m", "n"},
      [md](const Named<typename F::C>& m, const Named<typename F::C>& n) {
        return compare(md, md.alt(m.value, n.value), md.alt(n.value, m.value));
      },
      fx.comps, fx.comps);
}

template <class M>
LawReport plus_right_distributive(const Fixture<M>& fx, const CheckConfig& cfg) {
  using F = Fixture<M>;
  const M md = fx.model;
  return for_all(
      laws::plus_right_distributive, fx.label, cfg, {"m", "f", "g"},
      [md](const Named<typename F::C>& m, const Named<typename F::K>& f, const Named<typename F::K>& g) {
        const auto lhs = md.bind(m.value, [md, f, g](int x) { return md.alt(f.value(x), g.value(x)); });
        return compare(md, lhs, md.alt(md.bind(m.value, f.value), md.bind(m.value, g.value)));
      },
      fx.comps, fx.konts, fx.konts);
}

template <class M>
LawReport except_catchmfail(const Fixture<M>& fx, const CheckConfig& cfg) {
  using F = Fixture<M>;
  const M md = fx.model;
  return for_all(
      laws::except_catchmfail, fx.label, cfg, {"m"},
      [md](const Named<typename F::C>& m) {
        return compare(md, md.catch_with(m.value, md.template fail<int>()), m.value);
      },
      fx.comps);
}

template <class M>
LawReport except_catchfailm(const Fixture<M>& fx, const CheckConfig& cfg) {
  using F = Fixture<M>;
  const M md = fx.model;
  return for_all(
      laws::except_catchfailm, fx.label, cfg, {"m"},
      [md](const Named<typename F::C>& m) {
        return compare(md, md.catch_with(md.template fail<int>(), m.value), m.value);
      },
      fx.comps);
}

template <class M>
LawReport except_catcha(const Fixture<M>& fx, const CheckConfig& cfg) {
  using F = Fixture<M>;
  const M md = fx.model;
  return for_all(
      laws::except_catcha, fx.label, cfg, {"m", "n", "o"},
      [md](const Named<typename F::C>& m, const Named<typename F::C>& n, const Named<typename F::C>& o) {
        return compare(md, md.catch_with(md.catch_with(m.value, n.value), o.value),
                       md.catch_with(m.value, md.catch_with(n.value, o.value)));
      },
      fx.comps, fx.comps, fx.comps);
}

template <class M>
LawReport except_catchret(const Fixture<M>& fx, const CheckConfig& cfg) {
  using F = Fixture<M>;
  const M md = fx.model;
  return for_all(
      laws::except_catchret, fx.label, cfg, {"x", "h"},
      [md](int x, const Named<typename F::C>& h) { return compare(md, md.catch_with(md.ret(x), h.value), md.ret(x)); },
      fx.values, fx.comps);
}

template <class M>
LawReport state_putput(const Fixture<M>& fx, const CheckConfig& cfg) {
  const M md = fx.model;
  return for_all(
      laws::state_putput, fx.label, cfg, {"s", "s'"},
      [md](int s, int s2) { return compare(md, then(md, md.put(s), md.put(s2)), md.put(s2)); }, fx.values,
      fx.values);
}

template <class M>
LawReport state_putget(const Fixture<M>& fx, const CheckConfig& cfg) {
  using F = Fixture<M>;
  const M md = fx.model;
  return for_all(
      laws::state_putget, fx.label, cfg, {"s", "k"},
      [md](int s, const Named<typename F::K>& k) {
        return compare(md, then(md, md.put(s), md.bind(md.get(), k.value)), then(md, md.put(s), k.value(s)));
      },
      fx.values, fx.konts);
}

/// Checked in context, `(get >>= put) >> c = skip >> c` for every c.
template <class M>
LawReport state_getputskip(const Fixture<M>& fx, const CheckConfig& cfg) {
  using F = Fixture<M>;
  const M md = fx.model;
  return for_all(
      laws::state_getputskip, fx.label, cfg, {"c"},
      [md](const Named<typename F::C>& c) {
        const auto getput = md.bind(md.get(), [md](int s) { return md.put(s); });
        return compare(md, then(md, getput, c.value), then(md, skip(md), c.value));
      },
      fx.comps);
}

template <class M>
LawReport state_getget(const Fixture<M>& fx, const CheckConfig& cfg) {
  using F = Fixture<M>;
  const M md = fx.model;
  return for_all(
      laws::state_getget, fx.label, cfg, {"k"},
      [md](const Named<typename F::K2>& k) {
        const auto lhs =
            md.bind(md.get(), [md, k](int s) { return md.bind(md.get(), [k, s](int s2) { return k.value(s, s2); }); });
        const auto rhs = md.bind(md.get(), [k](int s) { return k.value(s, s); });
        return compare(md, lhs, rhs);
      },
      fx.konts2);
}

template <class M>
LawReport array_aputput(const Fixture<M>& fx, const CheckConfig& cfg) {
  const M md = fx.model;
  return for_all(
      laws::array_aputput, fx.label, cfg, {"i", "v", "v'"},
      [md](std::size_t i, int v, int v2) { return compare(md, then(md, md.aput(i, v), md.aput(i, v2)), md.aput(i, v2)); },
      fx.indices, fx.values, fx.values);
}

template <class M>
LawReport array_aputget(const Fixture<M>& fx, const CheckConfig& cfg) {
  using F = Fixture<M>;
  const M md = fx.model;
  return for_all(
      laws::array_aputget, fx.label, cfg, {"i", "v", "k"},
      [md](std::size_t i, int v, const Named<typename F::K>& k) {
        return compare(md, then(md, md.aput(i, v), md.bind(md.aget(i), k.value)), then(md, md.aput(i, v), k.value(v)));
      },
      fx.indices, fx.values, fx.konts);
}

template <class M>
LawReport array_agetputskip(const Fixture<M>& fx, const CheckConfig& cfg) {
  const M md = fx.model;
  return for_all(
      laws::array_agetputskip, fx.label, cfg, {"i"},
      [md](std::size_t i) {
        return compare(md, md.bind(md.aget(i), [md, i](int v) { return md.aput(i, v); }), skip(md));
      },
      fx.indices);
}

template <class M>
LawReport array_agetget(const Fixture<M>& fx, const CheckConfig& cfg) {
  using F = Fixture<M>;
  const M md = fx.model;
  return for_all(
      laws::array_agetget, fx.label, cfg, {"i", "k"},
      [md](std::size_t i, const Named<typename F::K2>& k) {
        const auto lhs = md.bind(md.aget(i), [md, i, k](int u) {
          return md.bind(md.aget(i), [k, u](int v) { return k.value(u, v); });
        });
        const auto rhs = md.bind(md.aget(i), [k](int u) { return k.value(u, u); });
        return compare(md, lhs, rhs);
      },
      fx.indices, fx.konts2);
}

template <class M>
LawReport array_agetc(const Fixture<M>& fx, const CheckConfig& cfg) {
  using F = Fixture<M>;
  const M md = fx.model;
  return for_all(
      laws::array_agetc, fx.label, cfg, {"i", "j", "k"},
      [md](std::size_t i, std::size_t j, const Named<typename F::K2>& k) {
        const auto lhs = md.bind(md.aget(i), [md, j, k](int u) {
          return md.bind(md.aget(j), [k, u](int v) { return k.value(u, v); });
        });
        const auto rhs = md.bind(md.aget(j), [md, i, k](int v) {
          return md.bind(md.aget(i), [k, v](int u) { return k.value(u, v); });
        });
        return compare(md, lhs, rhs);
      },
      fx.indices, fx.indices, fx.konts2);
}

template <class M>
LawReport array_aputc(const Fixture<M>& fx, const CheckConfig& cfg) {
  const M md = fx.model;
  return for_all(
      laws::array_aputc, fx.label, cfg, {"i", "j", "u", "v"},
      [md](std::size_t i, std::size_t j, int u, int v) {
        if (i == j && u != v) return Verdict::skipped();
        return compare(md, then(md, md.aput(i, u), md.aput(j, v)), then(md, md.aput(j, v), md.aput(i, u)));
      },
      fx.indices, fx.indices, fx.values, fx.values);
}

template <class M>
LawReport array_aputgetc(const Fixture<M>& fx, const CheckConfig& cfg) {
  using F = Fixture<M>;
  const M md = fx.model;
  return for_all(
      laws::array_aputgetc, fx.label, cfg, {"i", "j", "u", "k"},
      [md](std::size_t i, std::size_t j, int u, const Named<typename F::K>& k) {
        if (i == j) return Verdict::skipped();
        const auto lhs = then(md, md.aput(i, u), md.bind(md.aget(j), k.value));
        const auto rhs = md.bind(md.aget(j), [md, i, u, k](int v) { return then(md, md.aput(i, u), k.value(v)); });
        return compare(md, lhs, rhs);
      },
      fx.indices, fx.indices, fx.values, fx.konts);
}

}  // namespace law

/// Registers on `handle` every generic law whose operations `M` provides.
template <class M>
void register_generic_laws(ModelHandle& handle, const Fixture<M>& fx) {
  auto add = [&handle, fx](const LawId& id, LawReport (*run)(const Fixture<M>&, const CheckConfig&)) {
    handle.add(id, [fx, run](const CheckConfig& cfg) { return run(fx, cfg); });
  };
  const bool has_comps = static_cast<bool>(fx.comps);
  const bool has_konts = static_cast<bool>(fx.konts);
  if constexpr (FunctorModel<M>) {
    if (has_comps && fx.funcs) {
      add(laws::functor_id, &law::functor_id<M>);
      add(laws::functor_comp, &law::functor_comp<M>);
    }
  }
  if constexpr (JoinModel<M>) {
    if (has_comps && has_konts) {
      add(laws::join_left_unit, &law::join_left_unit<M>);
      add(laws::join_right_unit, &law::join_right_unit<M>);
      add(laws::join_associativity, &law::join_associativity<M>);
    }
  }
  if (has_comps && has_konts && fx.values) {
    add(laws::bind_left_neutral, &law::bind_left_neutral<M>);
    add(laws::bind_right_neutral, &law::bind_right_neutral<M>);
    add(laws::bind_associative, &law::bind_associative<M>);
  }
  if constexpr (FailModel<M>) {
    if (has_comps && has_konts) {
      add(laws::fail_left_zero, &law::fail_left_zero<M>);
      add(laws::fail_right_zero, &law::fail_right_zero<M>);
    }
  }
  if constexpr (AltModel<M>) {
    if (has_comps && has_konts) {
      add(laws::alt_associative, &law::alt_associative<M>);
      add(laws::alt_left_distributive, &law::alt_left_distributive<M>);
      add(laws::altci_idempotent, &law::altci_idempotent<M>);
      add(laws::altci_commutative, &law::altci_commutative<M>);
      add(laws::plus_right_distributive, &law::plus_right_distributive<M>);
    }
  }
  if constexpr (NondetModel<M>) {
    if (has_comps) {
      add(laws::nondet_altfailm, &law::nondet_altfailm<M>);
      add(laws::nondet_altmfail, &law::nondet_altmfail<M>);
    }
  }
  if constexpr (ExceptModel<M>) {
    if (has_comps && fx.values) {
      add(laws::except_catchmfail, &law::except_catchmfail<M>);
      add(laws::except_catchfailm, &law::except_catchfailm<M>);
      add(laws::except_catcha, &law::except_catcha<M>);
      add(laws::except_catchret, &law::except_catchret<M>);
    }
  }
  if constexpr (IntStateModel<M>) {
    if (fx.values && has_comps && has_konts && fx.konts2) {
      add(laws::state_putput, &law::state_putput<M>);
      add(laws::state_putget, &law::state_putget<M>);
      add(laws::state_getputskip, &law::state_getputskip<M>);
      add(laws::state_getget, &law::state_getget<M>);
    }
  }
  if constexpr (ArrayModel<M>) {
    if (fx.values && fx.indices && has_konts && fx.konts2) {
      add(laws::array_aputput, &law::array_aputput<M>);
      add(laws::array_aputget, &law::array_aputget<M>);
      add(laws::array_agetputskip, &law::array_agetputskip<M>);
      add(laws::array_agetget, &law::array_agetget<M>);
      add(laws::array_agetc, &law::array_agetc<M>);
      add(laws::array_aputc, &law::array_aputc<M>);
      add(laws::array_aputgetc, &law::array_aputgetc<M>);
    }
  }
}

template <class M>
ModelHandle make_handle(const Fixture<M>& fx) {
  ModelHandle handle(fx.label);
  register_generic_laws(handle, fx);
  return handle;
}

/// Functor laws of one model.
template <class M>
std::vector<LawReport> check_functor_laws(const Fixture<M>& fx, const CheckConfig& cfg) {
  const std::array suite{laws::functor_id, laws::functor_comp};
  return check_law_suite(suite, make_handle(fx), cfg);
}

/// Join and bind laws of one model.
template <class M>
std::vector<LawReport> check_monad_laws(const Fixture<M>& fx, const CheckConfig& cfg) {
  const auto handle = make_handle(fx);
  std::vector<LawId> suite;
  if (handle.supports(laws::join_left_unit.name)) {
    suite = {laws::join_left_unit, laws::join_right_unit, laws::join_associativity};
  }
  suite.insert(suite.end(), {laws::bind_left_neutral, laws::bind_right_neutral, laws::bind_associative});
  return check_law_suite(suite, handle, cfg);
}

}  // namespace monadic
