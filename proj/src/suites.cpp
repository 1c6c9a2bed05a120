#include "monadic/suites.hpp"

#include <algorithm>

#include "monadic/probability.hpp"
#include "monadic/typed_store.hpp"

namespace monadic {

std::vector<int> int_states() { return {0, 1, 2, 3}; }

IdState make_id_state() { return IdState(identity, int_states(), "state[identity]"); }
OptionState make_option_state() { return OptionState(option, int_states(), "state[option]"); }
PowersetState make_powerset_state() { return PowersetState(powerset, int_states(), "state[powerset]"); }

Domain<Named<std::function<int(int)>>> int_funcs() {
  using H = std::function<int(int)>;
  Domain<Named<H>> d;
  d.enumerate = [](std::size_t) {
    return std::vector<Named<H>>{
        {"λx. x+1", [](int x) { return x + 1; }},
        {"λx. 2x", [](int x) { return 2 * x; }},
        {"λx. x mod 2", [](int x) { return x % 2; }},
        {"λx. 0", [](int) { return 0; }},
    };
  };
  d.sample = [](Rng& rng) -> Named<H> {
    const int a = static_cast<int>(pick(rng, 4));
    const int b = static_cast<int>(pick(rng, 5));
    return {"λx. (" + show(a) + "x+" + show(b) + ") mod 5", [a, b](int x) { return (a * x + b) % 5; }};
  };
  return d;
}

namespace {

/// Catalog entries for comps, continuations and binary continuations, built
/// from the operations the model provides.
template <class M>
Fixture<M> build_fixture(const M& m, std::string label) {
  using F = Fixture<M>;
  using C = typename F::C;
  using K = typename F::K;
  using K2 = typename F::K2;

  std::vector<Named<C>> comps{{"ret 0", m.ret(0)}, {"ret 3", m.ret(3)}};
  std::vector<Named<K>> konts{
      {"λx. ret x", [m](int x) { return m.ret(x); }},
      {"λx. ret (x+1)", [m](int x) { return m.ret(x + 1); }},
      {"λx. ret (2x mod 5)", [m](int x) { return m.ret((2 * x) % 5); }},
  };
  std::vector<Named<K2>> konts2{
      {"λu v. ret (u+v)", [m](int u, int v) { return m.ret(u + v); }},
      {"λu v. ret u", [m](int u, int) { return m.ret(u); }},
      {"λu v. ret v", [m](int, int v) { return m.ret(v); }},
  };

  if constexpr (FailModel<M>) {
    comps.push_back({"fail", m.template fail<int>()});
    konts.push_back({"λx. fail", [m](int) { return m.template fail<int>(); }});
    konts.push_back({"λx. if even x then ret x else fail",
                     [m](int x) { return x % 2 == 0 ? m.ret(x) : m.template fail<int>(); }});
  }
  if constexpr (AltModel<M>) {
    comps.push_back({"ret 1 [~] ret 2", m.alt(m.ret(1), m.ret(2))});
    comps.push_back({"ret 0 [~] (ret 3 [~] ret 0)", m.alt(m.ret(0), m.alt(m.ret(3), m.ret(0)))});
    konts.push_back({"λx. ret x [~] ret (x+1)", [m](int x) { return m.alt(m.ret(x), m.ret(x + 1)); }});
    konts2.push_back({"λu v. ret u [~] ret v", [m](int u, int v) { return m.alt(m.ret(u), m.ret(v)); }});
  }
  if constexpr (ExceptModel<M>) {
    comps.push_back({"catch fail (ret 2)", m.catch_with(m.template fail<int>(), m.ret(2))});
  }
  if constexpr (IntStateModel<M>) {
    comps.push_back({"get", m.get()});
    comps.push_back({"put 2 >> ret 1", then(m, m.put(2), m.ret(1))});
    comps.push_back({"get >>= λs. put (s+1) >> ret s",
                     m.bind(m.get(), [m](int s) { return then(m, m.put(s + 1), m.ret(s)); })});
    konts.push_back({"λx. put x >> ret 0", [m](int x) { return then(m, m.put(x), m.ret(0)); }});
    konts.push_back({"λx. get >>= λs. ret (x+s)",
                     [m](int x) { return m.bind(m.get(), [m, x](int s) { return m.ret(x + s); }); }});
    konts2.push_back({"λu v. put v >> ret u", [m](int u, int v) { return then(m, m.put(v), m.ret(u)); }});
  }
  if constexpr (ArrayModel<M>) {
    comps.push_back({"aget 0", m.aget(0)});
    comps.push_back({"aput 1 3 >> ret 0", then(m, m.aput(1, 3), m.ret(0))});
    comps.push_back({"aget 2 >>= λv. aput 0 v >> ret v",
                     m.bind(m.aget(2), [m](int v) { return then(m, m.aput(0, v), m.ret(v)); })});
    konts.push_back({"λx. aput 1 x >> ret 0", [m](int x) { return then(m, m.aput(1, x), m.ret(0)); }});
    konts.push_back({"λx. aget (x mod 5)", [m](int x) { return m.aget(static_cast<std::size_t>(x % 5)); }});
    konts.push_back({"λx. aget 0 >>= λv. ret (x+v)",
                     [m](int x) { return m.bind(m.aget(0), [m, x](int v) { return m.ret(x + v); }); }});
    konts2.push_back({"λu v. aput 0 u >> ret v", [m](int u, int v) { return then(m, m.aput(0, u), m.ret(v)); }});
    konts2.push_back({"λu v. aput (v mod 5) u >> aget 0",
                      [m](int u, int v) { return then(m, m.aput(static_cast<std::size_t>(v % 5), u), m.aget(0)); }});
  }

  F fx{m, std::move(label)};
  fx.values = naturals(3);
  fx.indices = indices(4);
  fx.funcs = int_funcs();
  fx.konts2 = catalog(konts2);

  // Random phase: catalog entries and one- or two-step compositions of them.
  fx.comps.enumerate = [comps](std::size_t) { return comps; };
  fx.comps.sample = [m, comps, konts](Rng& rng) -> Named<C> {
    const auto& c = comps[pick(rng, comps.size())];
    switch (pick(rng, 3)) {
      case 0:
        return c;
      case 1: {
        const auto& k = konts[pick(rng, konts.size())];
        return {c.name + " >>= " + k.name, m.bind(c.value, k.value)};
      }
      default: {
        const auto& d = comps[pick(rng, comps.size())];
        if constexpr (AltModel<M>) {
          return {"(" + c.name + ") [~] (" + d.name + ")", m.alt(c.value, d.value)};
        } else {
          return {c.name + " >> " + d.name, then(m, c.value, d.value)};
        }
      }
    }
  };
  fx.konts.enumerate = [konts](std::size_t) { return konts; };
  fx.konts.sample = [m, konts](Rng& rng) -> Named<K> {
    const auto& f = konts[pick(rng, konts.size())];
    if (pick(rng, 2) == 0) return f;
    const auto& g = konts[pick(rng, konts.size())];
    K fg = [m, f, g](int x) { return m.bind(f.value(x), g.value); };
    return {"(" + f.name + ") >=> (" + g.name + ")", fg};
  };
  return fx;
}

std::vector<LawId> concat(std::initializer_list<std::vector<LawId>> parts) {
  std::vector<LawId> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

const std::vector<LawId> kFunctor{laws::functor_id, laws::functor_comp};
const std::vector<LawId> kJoin{laws::join_left_unit, laws::join_right_unit, laws::join_associativity};
const std::vector<LawId> kBind{laws::bind_left_neutral, laws::bind_right_neutral, laws::bind_associative};
const std::vector<LawId> kFail{laws::fail_left_zero, laws::fail_right_zero};
const std::vector<LawId> kAlt{laws::alt_associative, laws::alt_left_distributive};
const std::vector<LawId> kNondet{laws::nondet_altfailm, laws::nondet_altmfail};
const std::vector<LawId> kAltCI{laws::altci_idempotent, laws::altci_commutative};
const std::vector<LawId> kPlus{laws::plus_right_distributive};
const std::vector<LawId> kExcept{laws::except_catchmfail, laws::except_catchfailm, laws::except_catcha,
                                 laws::except_catchret};
const std::vector<LawId> kState{laws::state_putput, laws::state_putget, laws::state_getputskip, laws::state_getget};
const std::vector<LawId> kArray{laws::array_aputput, laws::array_aputget, laws::array_agetputskip,
                                laws::array_agetget, laws::array_agetc,   laws::array_aputc,
                                laws::array_aputgetc};
const std::vector<LawId> kConvex{laws::convex_choice1, laws::convex_choicec, laws::convex_choicemm,
                                 laws::convex_choicea};
const std::vector<LawId> kMorphism{laws::morphism_ret, laws::morphism_bind, laws::morphism_naturality};

template <class M>
SuiteEntry entry(const Fixture<M>& fx, std::vector<LawId> laws) {
  return {make_handle(fx), std::move(laws)};
}

template <class Src, class Tgt, class E>
SuiteEntry morphism_entry(const MonadMorphism<Src, Tgt, E>& e, const Fixture<Src>& fx) {
  ModelHandle h(e.name);
  for (std::size_t k = 0; k < kMorphism.size(); ++k) {
    h.add(kMorphism[k], [e, fx, k](const CheckConfig& cfg) { return check_monad_morphism(e, fx, cfg)[k]; });
  }
  return {std::move(h), kMorphism};
}

std::vector<SuiteEntry> suite_entries(const std::string& name) {
  if (name == "functor") {
    return {entry(powerset_fixture(), kFunctor), entry(option_fixture(), kFunctor),
            entry(identity_fixture(), kFunctor), entry(option_state_fixture(), kFunctor),
            {dist_handle(), kFunctor}};
  }
  if (name == "monad") {
    const auto jb = concat({kJoin, kBind});
    return {entry(powerset_fixture(), jb),        entry(option_fixture(), jb),
            entry(identity_fixture(), jb),        {dist_handle(), jb},
            entry(syntax_fixture(), kBind),       entry(id_state_fixture(), kBind),
            entry(option_state_fixture(), kBind), entry(powerset_state_fixture(), kBind)};
  }
  if (name == "fail") {
    return {entry(powerset_fixture(), kFail), entry(option_fixture(), kFail), entry(syntax_fixture(), kFail),
            entry(option_state_fixture(), kFail), entry(powerset_state_fixture(), kFail)};
  }
  if (name == "alt") {
    return {entry(powerset_fixture(), kAlt), entry(syntax_fixture(), kAlt), entry(powerset_state_fixture(), kAlt)};
  }
  if (name == "nondet") {
    const auto nd = concat({kFail, kAlt, kNondet});
    return {entry(powerset_fixture(), nd), entry(syntax_fixture(), nd), entry(powerset_state_fixture(), nd)};
  }
  if (name == "plus") {
    const auto pl = concat({kFail, kAlt, kNondet, kAltCI, kPlus});
    return {entry(powerset_fixture(), pl), entry(syntax_fixture(), pl), entry(powerset_state_fixture(), pl)};
  }
  if (name == "except") {
    return {entry(except_fixture(), concat({kFail, kExcept}))};
  }
  if (name == "state") {
    return {entry(id_state_fixture(), kState), entry(option_state_fixture(), kState),
            entry(powerset_state_fixture(), kState)};
  }
  if (name == "array") {
    return {entry(pure_array_fixture(0), kArray), entry(pure_array_fixture(2), kArray)};
  }
  if (name == "plus-array") {
    const auto pa = concat({kBind, kFail, kAlt, kNondet, kAltCI, kPlus, kArray});
    return {entry(plus_array_fixture(0), pa), entry(plus_array_fixture(2), pa)};
  }
  if (name == "morphism") return morphism_entries();
  if (name == "convex") return {{dist_handle(), kConvex}};
  if (name == "prob") {
    return {{dist_handle(), concat({kBind, kJoin, kFunctor, {laws::prob_choice_bind_dl}})}};
  }
  if (name == "typed-store") return {{typed_store_handle(), typed_store_laws()}};
  throw UnknownSuite(name);
}

}  // namespace

Fixture<Powerset> powerset_fixture() { return build_fixture(powerset, "powerset"); }
Fixture<Syntax> syntax_fixture() { return build_fixture(syntax, "syntax"); }
Fixture<Option> option_fixture() { return build_fixture(option, "option"); }
Fixture<Except> except_fixture() { return build_fixture(except, "except"); }
Fixture<Identity> identity_fixture() { return build_fixture(identity, "identity"); }
Fixture<IdState> id_state_fixture() { return build_fixture(make_id_state(), "state[identity]"); }
Fixture<OptionState> option_state_fixture() { return build_fixture(make_option_state(), "state[option]"); }
Fixture<PowersetState> powerset_state_fixture() { return build_fixture(make_powerset_state(), "state[powerset]"); }

Fixture<PureArray> pure_array_fixture(int def) {
  const auto am = make_pure_array(def);
  return build_fixture(am, am.name());
}

Fixture<PlusArray> plus_array_fixture(int def) {
  const auto am = make_plus_array(def);
  return build_fixture(am, am.name());
}

std::vector<SuiteEntry> morphism_entries() {
  return {morphism_entry(lift_morphism(make_id_state()), identity_fixture()),
          morphism_entry(lift_morphism(make_option_state()), option_fixture()),
          morphism_entry(lift_morphism(make_powerset_state()), powerset_fixture()),
          morphism_entry(identity_morphism(powerset), powerset_fixture())};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"functor", "monad",      "fail",     "alt",    "nondet",
                                              "plus",    "except",     "state",    "array",  "plus-array",
                                              "morphism", "convex",    "prob",     "typed-store", "all"};
  return names;
}

bool is_suite(std::string_view name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<SuiteEntry> build_suite(const std::string& name) {
  if (!is_suite(name)) throw UnknownSuite(name);
  if (name != "all") return suite_entries(name);
  std::vector<SuiteEntry> out;
  for (const auto& n : suite_names()) {
    if (n == "all") continue;
    auto part = suite_entries(n);
    for (auto& e : part) out.push_back(std::move(e));
  }
  return out;
}

std::vector<LawReport> run_suite(const std::string& name, const CheckConfig& cfg, unsigned jobs) {
  std::vector<LawReport> out;
  for (const auto& e : build_suite(name)) {
    auto reports = check_law_suite(e.laws, e.handle, cfg, jobs);
    out.insert(out.end(), reports.begin(), reports.end());
  }
  return out;
}

}  // namespace monadic
