#include "monadic/typed_store.hpp"

namespace monadic {

const MlType& MlType::arg() const {
  if (!arg_) throw std::logic_error("type " + show(*this) + " has no argument");
  return *arg_;
}

bool operator==(const MlType& a, const MlType& b) {
  if (a.kind_ != b.kind_) return false;
  if (!a.arg_) return true;
  return *a.arg_ == *b.arg_;
}

std::strong_ordering operator<=>(const MlType& a, const MlType& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (!a.arg_) return std::strong_ordering::equal;
  return *a.arg_ <=> *b.arg_;
}

std::string show(const MlType& t) {
  switch (t.kind()) {
    case MlType::Kind::boolean:
      return "bool";
    case MlType::Kind::nat:
      return "nat";
    case MlType::Kind::ref:
      return "ref(" + show(t.arg()) + ")";
    case MlType::Kind::rlist:
      return "rlist(" + show(t.arg()) + ")";
  }
  return "?";
}

std::strong_ordering operator<=>(const Loc& a, const Loc& b) {
  if (auto c = a.tag <=> b.tag; c != 0) return c;
  return a.id <=> b.id;
}

std::string show(const Loc& r) { return show(r.tag) + "#" + std::to_string(r.id); }

bool operator==(const RList& a, const RList& b) {
  if (a.tail != b.tail) return false;
  if (a.is_nil()) return true;
  return *a.head == *b.head;
}

RList nil() { return RList{}; }

RList cons(Value head, Loc tail) { return RList{std::make_shared<const Value>(std::move(head)), std::move(tail)}; }

std::string show(const Value& v) {
  struct Visitor {
    std::string operator()(bool b) const { return show(b); }
    std::string operator()(Nat n) const { return show(n); }
    std::string operator()(const Loc& r) const { return show(r); }
    std::string operator()(const RList& l) const {
      if (l.is_nil()) return "Nil";
      return "Cons(" + show(*l.head) + ", " + show(*l.tail) + ")";
    }
  };
  return std::visit(Visitor{}, v.v);
}

bool TypeDescriptor::admits(const Value& v) const {
  switch (type_.kind()) {
    case MlType::Kind::boolean:
      return std::holds_alternative<bool>(v.v);
    case MlType::Kind::nat:
      return std::holds_alternative<Nat>(v.v);
    case MlType::Kind::ref: {
      const auto* r = std::get_if<Loc>(&v.v);
      return r != nullptr && r->tag == type_.arg();
    }
    case MlType::Kind::rlist: {
      const auto* l = std::get_if<RList>(&v.v);
      if (l == nullptr) return false;
      if (l->is_nil()) return true;
      return l->tail->tag == type_ && interpret(type_.arg()).admits(*l->head);
    }
  }
  return false;
}

std::string TypeDescriptor::describe() const {
  switch (type_.kind()) {
    case MlType::Kind::boolean:
      return "booleans";
    case MlType::Kind::nat:
      return "naturals";
    case MlType::Kind::ref:
      return "locations tagged " + show(type_.arg());
    case MlType::Kind::rlist:
      return "rlists over " + interpret(type_.arg()).describe();
  }
  return "?";
}

TypeDescriptor interpret(const MlType& t) { return TypeDescriptor(t); }

Binding::Binding(MlType type, Value val) : type_(std::move(type)), val_(std::move(val)) {
  if (!interpret(type_).admits(val_)) {
    throw std::invalid_argument("value " + show(val_) + " is not of type " + show(type_));
  }
}

std::string show(const Binding& b) { return show(b.type()) + ":" + show(b.value()); }

std::optional<Value> coerce(const MlType& expected, const Binding& b) {
  if (b.type() != expected) return std::nullopt;
  return b.value();
}

TypedStoreMonad::TypedStoreMonad(std::vector<TypedStore> probes, std::string label)
    : State(option, std::move(probes), std::move(label)) {}

TypedStoreMonad::comp<Loc> TypedStoreMonad::cnew(const MlType& t, const Value& v) const {
  const Binding b(t, v);
  return comp<Loc>([b](const TypedStore& st) {
    TypedStore next = st;
    next.push_back(b);
    return option.ret(std::pair<Loc, TypedStore>{Loc{b.type(), st.size()}, std::move(next)});
  });
}

TypedStoreMonad::comp<Value> TypedStoreMonad::cget(const Loc& r) const {
  return comp<Value>([r](const TypedStore& st) -> OptionVal<std::pair<Value, TypedStore>> {
    if (r.id >= st.size()) return std::nullopt;
    auto v = coerce(r.tag, st[r.id]);
    if (!v) return std::nullopt;
    return std::pair<Value, TypedStore>{*v, st};
  });
}

TypedStoreMonad::comp<Unit> TypedStoreMonad::cput(const Loc& r, const Value& v) const {
  return comp<Unit>([r, v](const TypedStore& st) -> OptionVal<std::pair<Unit, TypedStore>> {
    if (r.id >= st.size() || st[r.id].type() != r.tag || !interpret(r.tag).admits(v)) return std::nullopt;
    TypedStore next = st;
    next[r.id] = Binding(r.tag, v);
    return std::pair<Unit, TypedStore>{tt, std::move(next)};
  });
}

TypedStoreMonad::comp<Unit> TypedStoreMonad::cchk(const Loc& r) const { return then(*this, cget(r), skip(*this)); }

std::vector<Binding> sample_bindings() {
  const auto nat = MlType::ml_nat();
  const auto rl = MlType::ml_rlist(nat);
  return {
      Binding(MlType::ml_bool(), true),
      Binding(MlType::ml_bool(), false),
      Binding(nat, 0),
      Binding(nat, 2),
      Binding(MlType::ml_ref(nat), Loc{nat, 0}),
      Binding(rl, nil()),
      Binding(rl, cons(1, Loc{rl, 0})),
  };
}

std::vector<TypedStore> store_probes() {
  const auto bs = sample_bindings();
  std::vector<TypedStore> out{{}};
  for (const auto& a : bs) out.push_back({a});
  for (const auto& a : bs) {
    for (const auto& b : bs) out.push_back({a, b});
  }
  out.push_back({bs[2], bs[0], bs[5]});
  out.push_back({bs[5], bs[6], bs[1]});
  out.push_back({bs[0], bs[3], bs[4], bs[6]});
  out.push_back({bs[3], bs[3], bs[1], bs[2]});
  return out;
}

TypedStoreMonad make_typed_store() { return TypedStoreMonad(store_probes(), "typed-store"); }

std::vector<MlType> sample_types() {
  const auto nat = MlType::ml_nat();
  return {MlType::ml_bool(), nat, MlType::ml_ref(nat), MlType::ml_rlist(nat)};
}

Value value_for(const MlType& t, std::size_t k) {
  switch (t.kind()) {
    case MlType::Kind::boolean:
      return k % 2 == 1;
    case MlType::Kind::nat:
      return static_cast<Nat>(k % 3);
    case MlType::Kind::ref:
      return Loc{t.arg(), k % 2};
    case MlType::Kind::rlist:
      if (k % 3 == 0) return nil();
      return cons(value_for(t.arg(), k), Loc{t, k % 3 - 1});
  }
  return false;
}

Value random_value(const MlType& t, Rng& rng) {
  switch (t.kind()) {
    case MlType::Kind::boolean:
      return pick(rng, 2) == 1;
    case MlType::Kind::nat:
      return static_cast<Nat>(pick(rng, 10));
    case MlType::Kind::ref:
      return Loc{t.arg(), pick(rng, 4)};
    case MlType::Kind::rlist:
      if (pick(rng, 3) == 0) return nil();
      return cons(random_value(t.arg(), rng), Loc{t, pick(rng, 4)});
  }
  return false;
}

TypedStoreMonad::comp<Loc> cycle(const TypedStoreMonad& ts, const MlType& t, const Value& a, const Value& b) {
  const auto rt = MlType::ml_rlist(t);
  return ts.bind(ts.cnew(rt, nil()), [ts, rt, a, b](const Loc& r) {
    return ts.bind(ts.cnew(rt, cons(b, r)), [ts, a, r](const Loc& v) {
      return then(ts, ts.cput(r, cons(a, v)), ts.ret(r));
    });
  });
}

TypedStoreMonad::comp<Loc> rtl(const TypedStoreMonad& ts, const Loc& r) {
  return ts.bind(ts.cget(r), [ts, r](const Value& v) {
    const auto* l = std::get_if<RList>(&v.v);
    if (l == nullptr) return ts.fail<Loc>();
    return l->is_nil() ? ts.ret(r) : ts.ret(*l->tail);
  });
}

namespace {

/// Allocates cells xs[k..] in reverse, each pointing at the next, the last
/// pointing at `last`; returns the first of them.
TypedStoreMonad::comp<Loc> build_chain(const TypedStoreMonad& ts, const MlType& rt, const std::vector<Value>& xs,
                                       std::size_t k, const Loc& last) {
  if (k == xs.size()) return ts.ret(last);
  if (k + 1 == xs.size()) return ts.cnew(rt, cons(xs[k], last));
  return ts.bind(build_chain(ts, rt, xs, k + 1, last),
                 [ts, rt, x = xs[k]](const Loc& next) { return ts.cnew(rt, cons(x, next)); });
}

TypedStoreMonad::comp<Loc> rtl_n(const TypedStoreMonad& ts, const TypedStoreMonad::comp<Loc>& m, std::size_t n) {
  auto out = m;
  for (std::size_t k = 0; k < n; ++k) out = ts.bind(out, [ts](const Loc& l) { return rtl(ts, l); });
  return out;
}

}  // namespace

TypedStoreMonad::comp<Loc> cycle_n(const TypedStoreMonad& ts, const MlType& t, const std::vector<Value>& xs) {
  if (xs.empty()) throw std::invalid_argument("cycle_n needs at least one element");
  const auto rt = MlType::ml_rlist(t);
  return ts.bind(ts.cnew(rt, nil()), [ts, rt, xs](const Loc& r0) {
    return ts.bind(build_chain(ts, rt, xs, 1, r0), [ts, r0, a = xs[0]](const Loc& second) {
      return then(ts, ts.cput(r0, cons(a, second)), ts.ret(r0));
    });
  });
}

bool check_rtl_tl_self(const TypedStoreMonad& ts, const MlType& t, const Value& a, const Value& b,
                       const std::vector<TypedStore>& initial) {
  const auto rhs = cycle(ts, t, a, b);
  const auto lhs = rtl_n(ts, rhs, 2);
  for (const auto& st : initial) {
    if (ts.run(lhs, st) != ts.run(rhs, st)) return false;
  }
  return true;
}

bool check_rtl_n_self(const TypedStoreMonad& ts, const MlType& t, const std::vector<Value>& xs,
                      const std::vector<TypedStore>& initial) {
  const auto rhs = cycle_n(ts, t, xs);
  const auto lhs = rtl_n(ts, rhs, xs.size());
  for (const auto& st : initial) {
    if (ts.run(lhs, st) != ts.run(rhs, st)) return false;
  }
  return true;
}

namespace {

struct RtlInstance {
  MlType type = MlType::ml_bool();
  Value a = false;
  Value b = false;
  TypedStore initial;
};

std::string show(const RtlInstance& i) {
  return "T=" + show(i.type) + " a=" + show(i.a) + " b=" + show(i.b) + " store=" + monadic::show(i.initial);
}

}  // namespace

LawReport check_rtl_tl_self_random(std::size_t instances, std::uint64_t seed) {
  const auto ts = make_typed_store();
  const auto bindings = sample_bindings();
  auto types = sample_types();
  types.push_back(MlType::ml_rlist(MlType::ml_bool()));
  Domain<RtlInstance> inst;
  inst.enumerate = [](std::size_t) { return std::vector<RtlInstance>{}; };
  inst.sample = [types, bindings](Rng& rng) {
    RtlInstance i;
    i.type = types[pick(rng, types.size())];
    i.a = random_value(i.type, rng);
    i.b = random_value(i.type, rng);
    const std::size_t len = pick(rng, 4);
    for (std::size_t k = 0; k < len; ++k) i.initial.push_back(bindings[pick(rng, bindings.size())]);
    return i;
  };
  const CheckConfig cfg{seed, 0, instances};
  return for_all(
      laws::rtl_tl_self, ts.name(), cfg, {"instance"},
      [ts](const RtlInstance& i) {
        const auto rhs = cycle(ts, i.type, i.a, i.b);
        const auto lhs = rtl_n(ts, rhs, 2);
        return compare(option, ts.run(lhs, i.initial), ts.run(rhs, i.initial));
      },
      inst);
}

std::vector<LawId> typed_store_laws() {
  return {laws::store_cputput,  laws::store_cputget,  laws::store_cgetget,   laws::store_cgetc,
          laws::store_cgetputskip, laws::store_cputc, laws::store_cputgetc,  laws::store_cgetputc,
          laws::store_cnewget,  laws::store_cnewput,  laws::store_cnewchk,   laws::store_cchknewc,
          laws::store_cchknewe, laws::store_cchkputc, laws::store_cgetputchk};
}

Domain<Loc> sample_locs() {
  std::vector<Loc> out;
  for (const auto& t : sample_types()) {
    for (std::size_t id = 0; id <= 2; ++id) out.push_back(Loc{t, id});
  }
  return catalog(std::move(out));
}

std::vector<Loc> premise_locs() {
  std::vector<Loc> out;
  for (const auto& t : sample_types()) {
    for (std::size_t id = 0; id <= 5; ++id) out.push_back(Loc{t, id});
  }
  return out;
}

ModelHandle typed_store_handle() { return typed_store_handle(make_typed_store()); }

}  // namespace monadic
