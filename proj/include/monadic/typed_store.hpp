#pragma once

// A store of dynamically typed bindings over a small first-order ML type
// universe, its monad (state over the store with option for failure), the
// store laws, and the cyclic-list example.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "monadic/law_catalog.hpp"
#include "monadic/transformers.hpp"

namespace monadic {

/// ml_bool | ml_nat | ml_ref T | ml_rlist T.
class MlType {
 public:
  enum class Kind { boolean, nat, ref, rlist };

  static MlType ml_bool() { return MlType(Kind::boolean, nullptr); }
  static MlType ml_nat() { return MlType(Kind::nat, nullptr); }
  static MlType ml_ref(const MlType& t) { return MlType(Kind::ref, std::make_shared<const MlType>(t)); }
  static MlType ml_rlist(const MlType& t) { return MlType(Kind::rlist, std::make_shared<const MlType>(t)); }

  Kind kind() const { return kind_; }
  /// Argument of ref and rlist.
  const MlType& arg() const;

  friend bool operator==(const MlType& a, const MlType& b);
  friend std::strong_ordering operator<=>(const MlType& a, const MlType& b);

 private:
  MlType(Kind k, std::shared_ptr<const MlType> arg) : kind_(k), arg_(std::move(arg)) {}

  Kind kind_;
  std::shared_ptr<const MlType> arg_;
};

std::string show(const MlType& t);

/// A location: a position in the store, tagged with the type it holds.
struct Loc {
  MlType tag = MlType::ml_nat();
  std::size_t id = 0;

  friend bool operator==(const Loc&, const Loc&) = default;
  friend std::strong_ordering operator<=>(const Loc& a, const Loc& b);
};

/// Location identity across types.
inline std::size_t loc_id(const Loc& r) { return r.id; }

std::string show(const Loc& r);

struct Value;

/// Nil | Cons head tail, the tail being a location of the same list type.
struct RList {
  std::shared_ptr<const Value> head;
  std::optional<Loc> tail;

  bool is_nil() const { return !tail.has_value(); }
  friend bool operator==(const RList& a, const RList& b);
};

using Nat = std::uint64_t;

struct Value {
  std::variant<bool, Nat, Loc, RList> v;

  Value(bool b) : v(b) {}  // NOLINT
  Value(Nat n) : v(n) {}   // NOLINT
  Value(int n) : v(static_cast<Nat>(n)) {}  // NOLINT
  Value(Loc r) : v(std::move(r)) {}  // NOLINT
  Value(RList l) : v(std::move(l)) {}  // NOLINT

  friend bool operator==(const Value&, const Value&) = default;
};

RList nil();
RList cons(Value head, Loc tail);

std::string show(const Value& v);

/// The runtime shape of the interpretation of an ML type.
class TypeDescriptor {
 public:
  explicit TypeDescriptor(MlType t) : type_(std::move(t)) {}

  const MlType& type() const { return type_; }
  bool admits(const Value& v) const;
  std::string describe() const;

 private:
  MlType type_;
};

TypeDescriptor interpret(const MlType& t);

/// A value together with its type; the value is checked against the type.
class Binding {
 public:
  Binding(MlType type, Value val);

  const MlType& type() const { return type_; }
  const Value& value() const { return val_; }

  friend bool operator==(const Binding&, const Binding&) = default;

 private:
  MlType type_;
  Value val_;
};

std::string show(const Binding& b);

using TypedStore = std::vector<Binding>;

/// The value, if the binding has exactly the expected type.
std::optional<Value> coerce(const MlType& expected, const Binding& b);

/// State over the binding list, with option as the base monad.
class TypedStoreMonad : public StateT<TypedStore, Option> {
 public:
  using State = StateT<TypedStore, Option>;
  template <class A>
  using comp = State::comp<A>;

  TypedStoreMonad(std::vector<TypedStore> probes, std::string label);

  /// Appends a binding and returns its location.
  comp<Loc> cnew(const MlType& t, const Value& v) const;
  comp<Value> cget(const Loc& r) const;
  comp<Unit> cput(const Loc& r, const Value& v) const;
  /// `cget r >> skip`.
  comp<Unit> cchk(const Loc& r) const;
};

/// Sample bindings used to build probe stores.
std::vector<Binding> sample_bindings();
/// Every store of length ≤ 2 over the sample bindings, plus a few longer ones.
std::vector<TypedStore> store_probes();
TypedStoreMonad make_typed_store();

/// Types used by the law generators.
std::vector<MlType> sample_types();
/// The k-th canonical value of type t (cyclically).
Value value_for(const MlType& t, std::size_t k);
/// A random value of type t.
Value random_value(const MlType& t, Rng& rng);

/// `r <- cnew (rlist T) Nil; v <- cnew (rlist T) (Cons b r); cput r (Cons a v); ret r`.
TypedStoreMonad::comp<Loc> cycle(const TypedStoreMonad& ts, const MlType& t, const Value& a, const Value& b);

/// The tail location of a list cell, or the cell itself on Nil.
TypedStoreMonad::comp<Loc> rtl(const TypedStoreMonad& ts, const Loc& r);

/// A cycle of n = |xs| cells holding xs in order, starting at the returned
/// location.
TypedStoreMonad::comp<Loc> cycle_n(const TypedStoreMonad& ts, const MlType& t, const std::vector<Value>& xs);

/// `cycle t a b >>= λl. rtl l >>= rtl` equals `cycle t a b` at every given
/// initial store.
bool check_rtl_tl_self(const TypedStoreMonad& ts, const MlType& t, const Value& a, const Value& b,
                       const std::vector<TypedStore>& initial);

/// n applications of rtl after cycle_n give back cycle_n.
bool check_rtl_n_self(const TypedStoreMonad& ts, const MlType& t, const std::vector<Value>& xs,
                      const std::vector<TypedStore>& initial);

/// rtl_tl_self on `instances` random (type, a, b, initial store) choices.
LawReport check_rtl_tl_self_random(std::size_t instances, std::uint64_t seed);

/// The fifteen store laws.
std::vector<LawId> typed_store_laws();

/// Locations over the sample types with ids 0..2.
Domain<Loc> sample_locs();
/// Locations with ids 0..5, used to check premises quantified over locations.
std::vector<Loc> premise_locs();

/// Instance generators for the store laws of a store model `TS`.
template <class TS>
struct StoreFixture {
  using C = comp_t<TS, Value>;
  using KV = std::function<C(const Value&)>;
  using KVV = std::function<C(const Value&, const Value&)>;
  using KL = std::function<C(const Loc&)>;
  using KLV = std::function<C(const Loc&, const Value&)>;
  using KPair = std::function<std::pair<KL, KL>(const Loc&)>;

  TS model;
  Domain<Loc> locs;
  Domain<MlType> types;
  Domain<std::size_t> picks;
  Domain<Named<KV>> kv;
  Domain<Named<KVV>> kvv;
  Domain<Named<KL>> kl;
  Domain<Named<KLV>> klv;
  Domain<Named<KPair>> kpairs;
};

template <class TS>
StoreFixture<TS> store_fixture(const TS& ts) {
  using F = StoreFixture<TS>;
  using C = typename F::C;
  const Loc n0{MlType::ml_nat(), 0};
  const Loc b1{MlType::ml_bool(), 1};
  F fx{ts, sample_locs(), catalog(sample_types()), indices(2)};
  fx.kv = catalog(std::vector<Named<typename F::KV>>{
      {"λv. ret v", [ts](const Value& v) { return ts.ret(v); }},
      {"λv. cput nat#0 7 >> ret v", [ts, n0](const Value& v) { return then(ts, ts.cput(n0, Value(7)), ts.ret(v)); }},
      {"λv. cget bool#1 >> ret v", [ts, b1](const Value& v) { return then(ts, ts.cget(b1), ts.ret(v)); }},
      {"λv. cnew nat 3 >>= ret", [ts](const Value&) {
         return ts.bind(ts.cnew(MlType::ml_nat(), Value(3)), [ts](const Loc& r) { return ts.ret(Value(r)); });
       }},
  });
  fx.kvv = catalog(std::vector<Named<typename F::KVV>>{
      {"λu v. ret u", [ts](const Value& u, const Value&) { return ts.ret(u); }},
      {"λu v. ret v", [ts](const Value&, const Value& v) { return ts.ret(v); }},
      {"λu v. cput nat#0 1 >> ret u",
       [ts, n0](const Value& u, const Value&) { return then(ts, ts.cput(n0, Value(1)), ts.ret(u)); }},
      {"λu v. cnew nat 2 >> ret v",
       [ts](const Value&, const Value& v) { return then(ts, ts.cnew(MlType::ml_nat(), Value(2)), ts.ret(v)); }},
  });
  fx.kl = catalog(std::vector<Named<typename F::KL>>{
      {"λr. ret r", [ts](const Loc& r) { return ts.ret(Value(r)); }},
      {"λr. cget r", [ts](const Loc& r) { return ts.cget(r); }},
      {"λr. cput nat#0 5 >> ret r", [ts, n0](const Loc& r) { return then(ts, ts.cput(n0, Value(5)), ts.ret(Value(r))); }},
      {"λr. cchk bool#1 >> ret r", [ts, b1](const Loc& r) { return then(ts, ts.cchk(b1), ts.ret(Value(r))); }},
      {"λr. cget r >>= cput r >> ret r", [ts](const Loc& r) {
         return ts.bind(ts.cget(r), [ts, r](const Value& v) { return then(ts, ts.cput(r, v), ts.ret(Value(r))); });
       }},
  });
  fx.klv = catalog(std::vector<Named<typename F::KLV>>{
      {"λr v. ret v", [ts](const Loc&, const Value& v) { return ts.ret(v); }},
      {"λr v. cput r v >> ret r",
       [ts](const Loc& r, const Value& v) { return then(ts, ts.cput(r, v), ts.ret(Value(r))); }},
      {"λr v. cget nat#0 >> ret v", [ts, n0](const Loc&, const Value& v) { return then(ts, ts.cget(n0), ts.ret(v)); }},
  });
  // Pairs that agree on every location whose id differs from r1's; the last
  // one does not, so its instances are skipped.
  std::vector<Named<typename F::KPair>> pairs;
  for (const auto& body : fx.kl.enumerate(0)) {
    pairs.push_back({"k1 = λr2. if loc_id r2 = loc_id r1 then ret false else (" + body.name + "), k2 = " + body.name,
                     [ts, body](const Loc& r1) {
                       typename F::KL k1 = [ts, body, r1](const Loc& r2) -> C {
                         if (loc_id(r2) == loc_id(r1)) return ts.ret(Value(false));
                         return body.value(r2);
                       };
                       return std::pair{k1, body.value};
                     }});
  }
  pairs.push_back({"k1 = λr. ret 0, k2 = λr. ret 1", [ts](const Loc&) {
                     typename F::KL k1 = [ts](const Loc&) { return ts.ret(Value(0)); };
                     typename F::KL k2 = [ts](const Loc&) { return ts.ret(Value(1)); };
                     return std::pair{k1, k2};
                   }});
  fx.kpairs = catalog(std::move(pairs));
  return fx;
}

namespace store_law {

template <class TS>
LawReport cputput(const StoreFixture<TS>& fx, const CheckConfig& cfg) {
  const TS ts = fx.model;
  return for_all(
      laws::store_cputput, ts.name(), cfg, {"r", "a", "b"},
      [ts](const Loc& r, std::size_t a, std::size_t b) {
        const Value s = value_for(r.tag, a);
        const Value t = value_for(r.tag, b);
        return compare(ts, then(ts, ts.cput(r, s), ts.cput(r, t)), ts.cput(r, t));
      },
      fx.locs, fx.picks, fx.picks);
}

template <class TS>
LawReport cputget(const StoreFixture<TS>& fx, const CheckConfig& cfg) {
  using F = StoreFixture<TS>;
  const TS ts = fx.model;
  return for_all(
      laws::store_cputget, ts.name(), cfg, {"r", "a", "k"},
      [ts](const Loc& r, std::size_t a, const Named<typename F::KV>& k) {
        const Value s = value_for(r.tag, a);
        return compare(ts, then(ts, ts.cput(r, s), ts.bind(ts.cget(r), k.value)), then(ts, ts.cput(r, s), k.value(s)));
      },
      fx.locs, fx.picks, fx.kv);
}

template <class TS>
LawReport cgetget(const StoreFixture<TS>& fx, const CheckConfig& cfg) {
  using F = StoreFixture<TS>;
  const TS ts = fx.model;
  return for_all(
      laws::store_cgetget, ts.name(), cfg, {"r", "k"},
      [ts](const Loc& r, const Named<typename F::KVV>& k) {
        const auto lhs = ts.bind(ts.cget(r), [ts, r, k](const Value& u) {
          return ts.bind(ts.cget(r), [k, u](const Value& v) { return k.value(u, v); });
        });
        const auto rhs = ts.bind(ts.cget(r), [k](const Value& u) { return k.value(u, u); });
        return compare(ts, lhs, rhs);
      },
      fx.locs, fx.kvv);
}

template <class TS>
LawReport cgetC(const StoreFixture<TS>& fx, const CheckConfig& cfg) {
  using F = StoreFixture<TS>;
  const TS ts = fx.model;
  return for_all(
      laws::store_cgetc, ts.name(), cfg, {"r1", "r2", "k"},
      [ts](const Loc& r1, const Loc& r2, const Named<typename F::KVV>& k) {
        const auto lhs = ts.bind(ts.cget(r1), [ts, r2, k](const Value& u) {
          return ts.bind(ts.cget(r2), [k, u](const Value& v) { return k.value(u, v); });
        });
        const auto rhs = ts.bind(ts.cget(r2), [ts, r1, k](const Value& v) {
          return ts.bind(ts.cget(r1), [k, v](const Value& u) { return k.value(u, v); });
        });
        return compare(ts, lhs, rhs);
      },
      fx.locs, fx.locs, fx.kvv);
}

template <class TS>
LawReport cgetputskip(const StoreFixture<TS>& fx, const CheckConfig& cfg) {
  const TS ts = fx.model;
  return for_all(
      laws::store_cgetputskip, ts.name(), cfg, {"r"},
      [ts](const Loc& r) {
        return compare(ts, ts.bind(ts.cget(r), [ts, r](const Value& v) { return ts.cput(r, v); }),
                       then(ts, ts.cget(r), skip(ts)));
      },
      fx.locs);
}

template <class TS>
LawReport cputC(const StoreFixture<TS>& fx, const CheckConfig& cfg) {
  const TS ts = fx.model;
  return for_all(
      laws::store_cputc, ts.name(), cfg, {"r1", "a", "r2", "b"},
      [ts](const Loc& r1, std::size_t a, const Loc& r2, std::size_t b) {
        const Value s1 = value_for(r1.tag, a);
        const Value s2 = value_for(r2.tag, b);
        // Values of different types are never equal.
        const bool jmeq = r1.tag == r2.tag && s1 == s2;
        if (loc_id(r1) == loc_id(r2) && !jmeq) return Verdict::skipped();
        return compare(ts, then(ts, ts.cput(r1, s1), ts.cput(r2, s2)), then(ts, ts.cput(r2, s2), ts.cput(r1, s1)));
      },
      fx.locs, fx.picks, fx.locs, fx.picks);
}

template <class TS>
LawReport cputgetC(const StoreFixture<TS>& fx, const CheckConfig& cfg) {
  using F = StoreFixture<TS>;
  const TS ts = fx.model;
  return for_all(
      laws::store_cputgetc, ts.name(), cfg, {"r1", "a", "r2", "k"},
      [ts](const Loc& r1, std::size_t a, const Loc& r2, const Named<typename F::KV>& k) {
        if (loc_id(r1) == loc_id(r2)) return Verdict::skipped();
        const Value s = value_for(r1.tag, a);
        const auto lhs = then(ts, ts.cput(r1, s), ts.bind(ts.cget(r2), k.value));
        const auto rhs =
            ts.bind(ts.cget(r2), [ts, r1, s, k](const Value& v) { return then(ts, ts.cput(r1, s), k.value(v)); });
        return compare(ts, lhs, rhs);
      },
      fx.locs, fx.picks, fx.locs, fx.kv);
}

template <class TS>
LawReport cgetputC(const StoreFixture<TS>& fx, const CheckConfig& cfg) {
  const TS ts = fx.model;
  return for_all(
      laws::store_cgetputc, ts.name(), cfg, {"r1", "r2", "a"},
      [ts](const Loc& r1, const Loc& r2, std::size_t a) {
        const Value s = value_for(r2.tag, a);
        return compare(ts, then(ts, ts.cget(r1), ts.cput(r2, s)),
                       then(ts, ts.cput(r2, s), then(ts, ts.cget(r1), skip(ts))));
      },
      fx.locs, fx.locs, fx.picks);
}

template <class TS>
LawReport cnewget(const StoreFixture<TS>& fx, const CheckConfig& cfg) {
  using F = StoreFixture<TS>;
  const TS ts = fx.model;
  return for_all(
      laws::store_cnewget, ts.name(), cfg, {"T", "a", "k"},
      [ts](const MlType& t, std::size_t a, const Named<typename F::KLV>& k) {
        const Value s = value_for(t, a);
        const auto lhs = ts.bind(ts.cnew(t, s), [ts, k](const Loc& r) {
          return ts.bind(ts.cget(r), [k, r](const Value& v) { return k.value(r, v); });
        });
        const auto rhs = ts.bind(ts.cnew(t, s), [k, s](const Loc& r) { return k.value(r, s); });
        return compare(ts, lhs, rhs);
      },
      fx.types, fx.picks, fx.klv);
}

template <class TS>
LawReport cnewput(const StoreFixture<TS>& fx, const CheckConfig& cfg) {
  using F = StoreFixture<TS>;
  const TS ts = fx.model;
  return for_all(
      laws::store_cnewput, ts.name(), cfg, {"T", "a", "b", "k"},
      [ts](const MlType& t, std::size_t a, std::size_t b, const Named<typename F::KL>& k) {
        const Value s = value_for(t, a);
        const Value u = value_for(t, b);
        const auto lhs =
            ts.bind(ts.cnew(t, s), [ts, k, u](const Loc& r) { return then(ts, ts.cput(r, u), k.value(r)); });
        return compare(ts, lhs, ts.bind(ts.cnew(t, u), k.value));
      },
      fx.types, fx.picks, fx.picks, fx.kl);
}

template <class TS>
LawReport cnewchk(const StoreFixture<TS>& fx, const CheckConfig& cfg) {
  using F = StoreFixture<TS>;
  const TS ts = fx.model;
  return for_all(
      laws::store_cnewchk, ts.name(), cfg, {"T", "a", "k"},
      [ts](const MlType& t, std::size_t a, const Named<typename F::KL>& k) {
        const Value s = value_for(t, a);
        const auto lhs = ts.bind(ts.cnew(t, s), [ts, k](const Loc& r) { return then(ts, ts.cchk(r), k.value(r)); });
        return compare(ts, lhs, ts.bind(ts.cnew(t, s), k.value));
      },
      fx.types, fx.picks, fx.kl);
}

template <class TS>
LawReport cchknewC(const StoreFixture<TS>& fx, const CheckConfig& cfg) {
  using F = StoreFixture<TS>;
  const TS ts = fx.model;
  return for_all(
      laws::store_cchknewc, ts.name(), cfg, {"r1", "T", "a", "k"},
      [ts](const Loc& r1, const MlType& t, std::size_t a, const Named<typename F::KL>& k) {
        const Value s = value_for(t, a);
        const auto lhs = then(ts, ts.cchk(r1), ts.bind(ts.cnew(t, s), [ts, r1, k](const Loc& r2) {
          return then(ts, ts.cchk(r1), k.value(r2));
        }));
        const auto rhs = then(ts, ts.cchk(r1), ts.bind(ts.cnew(t, s), k.value));
        return compare(ts, lhs, rhs);
      },
      fx.locs, fx.types, fx.picks, fx.kl);
}

template <class TS>
LawReport cchknewE(const StoreFixture<TS>& fx, const CheckConfig& cfg) {
  using F = StoreFixture<TS>;
  const TS ts = fx.model;
  const auto premise = premise_locs();
  return for_all(
      laws::store_cchknewe, ts.name(), cfg, {"r1", "T", "a", "k1,k2"},
      [ts, premise](const Loc& r1, const MlType& t, std::size_t a, const Named<typename F::KPair>& kk) {
        const auto [k1, k2] = kk.value(r1);
        for (const auto& r2 : premise) {
          if (loc_id(r2) != loc_id(r1) && !ts.same(k1(r2), k2(r2))) return Verdict::skipped();
        }
        const Value s = value_for(t, a);
        return compare(ts, then(ts, ts.cchk(r1), ts.bind(ts.cnew(t, s), k1)),
                       then(ts, ts.cchk(r1), ts.bind(ts.cnew(t, s), k2)));
      },
      fx.locs, fx.types, fx.picks, fx.kpairs);
}

template <class TS>
LawReport cchkputC(const StoreFixture<TS>& fx, const CheckConfig& cfg) {
  const TS ts = fx.model;
  return for_all(
      laws::store_cchkputc, ts.name(), cfg, {"r1", "r2", "a"},
      [ts](const Loc& r1, const Loc& r2, std::size_t a) {
        const Value s = value_for(r2.tag, a);
        return compare(ts, then(ts, ts.cchk(r1), ts.cput(r2, s)), then(ts, ts.cput(r2, s), ts.cchk(r1)));
      },
      fx.locs, fx.locs, fx.picks);
}

template <class TS>
LawReport cgetputchk(const StoreFixture<TS>& fx, const CheckConfig& cfg) {
  const TS ts = fx.model;
  return for_all(
      laws::store_cgetputchk, ts.name(), cfg, {"r"},
      [ts](const Loc& r) {
        return compare(ts, ts.bind(ts.cget(r), [ts, r](const Value& v) { return ts.cput(r, v); }), ts.cchk(r));
      },
      fx.locs);
}

}  // namespace store_law

/// Handle with every store law, checked over the model's probe stores.
template <class TS>
ModelHandle typed_store_handle(const TS& ts) {
  ModelHandle h(ts.name());
  const auto fx = store_fixture(ts);
  auto add = [&h, fx](const LawId& id, LawReport (*run)(const StoreFixture<TS>&, const CheckConfig&)) {
    h.add(id, [fx, run](const CheckConfig& cfg) { return run(fx, cfg); });
  };
  add(laws::store_cputput, &store_law::cputput<TS>);
  add(laws::store_cputget, &store_law::cputget<TS>);
  add(laws::store_cgetget, &store_law::cgetget<TS>);
  add(laws::store_cgetc, &store_law::cgetC<TS>);
  add(laws::store_cgetputskip, &store_law::cgetputskip<TS>);
  add(laws::store_cputc, &store_law::cputC<TS>);
  add(laws::store_cputgetc, &store_law::cputgetC<TS>);
  add(laws::store_cgetputc, &store_law::cgetputC<TS>);
  add(laws::store_cnewget, &store_law::cnewget<TS>);
  add(laws::store_cnewput, &store_law::cnewput<TS>);
  add(laws::store_cnewchk, &store_law::cnewchk<TS>);
  add(laws::store_cchknewc, &store_law::cchknewC<TS>);
  add(laws::store_cchknewe, &store_law::cchknewE<TS>);
  add(laws::store_cchkputc, &store_law::cchkputC<TS>);
  add(laws::store_cgetputchk, &store_law::cgetputchk<TS>);
  return h;
}

ModelHandle typed_store_handle();

}  // namespace monadic
