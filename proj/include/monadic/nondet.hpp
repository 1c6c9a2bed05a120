#pragma once

// Finite outcome-set semantics of nondeterminism, the guard/assert library,
// the nondeterministic permutation programs (splits, qperm, slowsort), the
// syntactic nondeterminism fragment with its semantics, and refinement.
//
// Programs are written once against a model object `M` exposing
// `ret`, `bind`, `fail<A>()` and `alt` and then run in any model: the
// powerset model below, the syntax model (which builds a Term), or the
// plus-array model of state_array.hpp.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "monadic/show.hpp"

namespace monadic {

/// Finite, duplicate-free set of outcomes in canonical order.
template <class A>
class OutcomeSet {
 public:
  using value_type = A;
  using set_type = std::set<A>;
  using const_iterator = typename set_type::const_iterator;

  OutcomeSet() = default;
  OutcomeSet(std::initializer_list<A> xs) : elems_(xs) {}
  explicit OutcomeSet(set_type xs) : elems_(std::move(xs)) {}

  const set_type& elems() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  bool contains(const A& a) const { return elems_.count(a) != 0; }
  const_iterator begin() const { return elems_.begin(); }
  const_iterator end() const { return elems_.end(); }

  friend bool operator==(const OutcomeSet&, const OutcomeSet&) = default;
  friend auto operator<=>(const OutcomeSet& a, const OutcomeSet& b) { return a.elems_ <=> b.elems_; }

 private:
  set_type elems_;
};

template <class A>
std::string show(const OutcomeSet<A>& m) {
  return show(m.elems());
}

template <class M, class A>
using comp_t = typename M::template comp<A>;

template <class M>
concept MonadModel = requires(const M& m, comp_t<M, int> c, std::function<comp_t<M, int>(int)> k) {
  { m.ret(0) } -> std::same_as<comp_t<M, int>>;
  { m.bind(c, k) } -> std::same_as<comp_t<M, int>>;
  { m.same(c, c) } -> std::same_as<bool>;
  { m.show(c) } -> std::convertible_to<std::string>;
};

template <class M>
concept FailModel = MonadModel<M> && requires(const M& m) {
  { m.template fail<int>() } -> std::same_as<comp_t<M, int>>;
};

template <class M>
concept AltModel = MonadModel<M> && requires(const M& m, comp_t<M, int> c) {
  { m.alt(c, c) } -> std::same_as<comp_t<M, int>>;
};

template <class M>
concept NondetModel = FailModel<M> && AltModel<M>;

/// Powerset model of the plus monad: ret is a singleton, bind is the union of
/// the images, fail is empty and alt is union.
struct Powerset {
  template <class A>
  using comp = OutcomeSet<A>;

  std::string name() const { return "powerset"; }

  template <class A>
  OutcomeSet<A> ret(A a) const {
    return OutcomeSet<A>{std::move(a)};
  }

  template <class A, class F>
  auto bind(const OutcomeSet<A>& m, F&& f) const {
    using R = std::remove_cvref_t<std::invoke_result_t<F&, const A&>>;
    typename R::set_type out;
    for (const auto& a : m) {
      const R image = f(a);
      out.insert(image.begin(), image.end());
    }
    return R(std::move(out));
  }

  template <class A, class F>
  auto map(F&& h, const OutcomeSet<A>& m) const {
    using B = std::remove_cvref_t<std::invoke_result_t<F&, const A&>>;
    std::set<B> out;
    for (const auto& a : m) out.insert(h(a));
    return OutcomeSet<B>(std::move(out));
  }

  template <class A>
  OutcomeSet<A> fail() const {
    return {};
  }

  template <class A>
  OutcomeSet<A> alt(const OutcomeSet<A>& m, const OutcomeSet<A>& n) const {
    auto out = m.elems();
    out.insert(n.begin(), n.end());
    return OutcomeSet<A>(std::move(out));
  }

  template <class A>
  bool same(const OutcomeSet<A>& a, const OutcomeSet<A>& b) const {
    return a == b;
  }

  template <class A>
  std::string show(const OutcomeSet<A>& m) const {
    return show_value(m);
  }
};

inline constexpr Powerset powerset{};

// Free-standing powerset operations.

template <class A>
OutcomeSet<A> ret(A a) {
  return powerset.ret(std::move(a));
}

template <class A, class F>
auto bind(const OutcomeSet<A>& m, F&& f) {
  return powerset.bind(m, std::forward<F>(f));
}

template <class A>
OutcomeSet<A> alt(const OutcomeSet<A>& m, const OutcomeSet<A>& n) {
  return powerset.alt(m, n);
}

// Generic library over any model.

template <class M>
comp_t<M, Unit> skip(const M& m) {
  return m.ret(tt);
}

/// `first >> second`.
template <class M, class CA, class CB>
CB then(const M& m, const CA& first, CB second) {
  return m.bind(first, [second](const auto&) { return second; });
}

template <class M>
comp_t<M, Unit> guard(const M& m, bool b) {
  return b ? m.ret(tt) : m.template fail<Unit>();
}

/// Fails unless `p(a)`; otherwise returns `a`.
template <class M, class P, class A>
comp_t<M, A> assert_that(const M& m, P p, A a) {
  return m.bind(guard(m, static_cast<bool>(p(a))), [m, a](Unit) { return m.ret(a); });
}

struct ProofToken {
  std::string predicate;
  bool held = false;

  friend auto operator<=>(const ProofToken&, const ProofToken&) = default;
};

/// A value paired with a token stating that a named predicate held of it.
/// Only `issue` constructs one, and it refuses when the predicate is false.
template <class A>
class Certified {
 public:
  template <class P>
  static Certified issue(std::string predicate, P p, A a) {
    if (!p(a)) throw std::logic_error("certificate refused: predicate '" + predicate + "' does not hold");
    return Certified(std::move(a), ProofToken{std::move(predicate), true});
  }

  const A& value() const { return value_; }
  const ProofToken& token() const { return token_; }

  friend auto operator<=>(const Certified&, const Certified&) = default;
  friend bool operator==(const Certified&, const Certified&) = default;

 private:
  Certified(A a, ProofToken t) : value_(std::move(a)), token_(std::move(t)) {}

  A value_;
  ProofToken token_;
};

template <class A>
std::string show(const Certified<A>& c) {
  return "(" + show(c.value()) + ", token(" + c.token().predicate + "," + show(c.token().held) + "))";
}

/// Dependently-typed assertion: fails, or returns the value with a token.
template <class M, class P, class A>
comp_t<M, Certified<A>> dassert(const M& m, std::string predicate, P p, A a) {
  if constexpr (FailModel<M>) {
    if (!p(a)) return m.template fail<Certified<A>>();
  }
  // Without fail, a false predicate is refused by the certificate.
  return m.ret(Certified<A>::issue(std::move(predicate), p, std::move(a)));
}

/// Kleisli composition `f >=> g`.
template <class M, class F, class G>
auto kleisli(const M& m, F f, G g) {
  return [m, f, g](const auto& a) { return m.bind(f(a), g); };
}

template <class M, class H, class A, class B>
auto lift_m2(const M& m, H h, const comp_t<M, A>& ma, const comp_t<M, B>& mb) {
  using C = std::remove_cvref_t<std::invoke_result_t<H&, const A&, const B&>>;
  return m.bind(ma, [m, h, mb](const A& a) -> comp_t<M, C> {
    return m.bind(mb, [m, h, a](const B& b) { return m.ret(h(a, b)); });
  });
}

template <class A>
using Split = std::pair<std::vector<A>, std::vector<A>>;

/// All ways to distribute `s` into two order-preserving subsequences.
template <class M, class A>
comp_t<M, Split<A>> splits(const M& m, const std::vector<A>& s) {
  if (s.empty()) return m.ret(Split<A>{});
  const A h = s.front();
  const std::vector<A> t(s.begin() + 1, s.end());
  return m.bind(splits(m, t), [m, h](const Split<A>& xy) {
    auto left = xy.first;
    left.insert(left.begin(), h);
    auto right = xy.second;
    right.insert(right.begin(), h);
    return m.alt(m.ret(Split<A>{std::move(left), xy.second}), m.ret(Split<A>{xy.first, std::move(right)}));
  });
}

class SizeCertificateViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class FuelExhausted : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A split whose two parts are checked to have length at most `bound`.
template <class A>
class BoundedSplit {
 public:
  BoundedSplit(std::vector<A> left, std::vector<A> right, std::size_t bound)
      : left_(std::move(left)), right_(std::move(right)), bound_(bound) {
    if (left_.size() > bound_ || right_.size() > bound_) {
      throw SizeCertificateViolation("split part longer than bound " + std::to_string(bound_));
    }
  }

  const std::vector<A>& left() const { return left_; }
  const std::vector<A>& right() const { return right_; }
  std::size_t bound() const { return bound_; }

  /// The same split seen under a larger bound.
  BoundedSplit widen(std::size_t bound) const { return BoundedSplit(left_, right_, bound); }

  friend auto operator<=>(const BoundedSplit&, const BoundedSplit&) = default;
  friend bool operator==(const BoundedSplit&, const BoundedSplit&) = default;

 private:
  std::vector<A> left_;
  std::vector<A> right_;
  std::size_t bound_;
};

template <class A>
std::string show(const BoundedSplit<A>& s) {
  return "(" + show(s.left()) + ", " + show(s.right()) + ")≤" + std::to_string(s.bound());
}

/// `splits` with a size certificate of |s| on both parts.
template <class M, class A>
comp_t<M, BoundedSplit<A>> splits_bounded(const M& m, const std::vector<A>& s) {
  if (s.empty()) return m.ret(BoundedSplit<A>({}, {}, 0));
  const A h = s.front();
  const std::vector<A> t(s.begin() + 1, s.end());
  const std::size_t n = s.size();
  return m.bind(splits_bounded(m, t), [m, h, n](const BoundedSplit<A>& xy) {
    auto left = xy.left();
    left.insert(left.begin(), h);
    auto right = xy.right();
    right.insert(right.begin(), h);
    return m.alt(m.ret(BoundedSplit<A>(std::move(left), xy.right(), n)),
                 m.ret(BoundedSplit<A>(xy.left(), std::move(right), n)));
  });
}

namespace detail {

template <class M, class A>
comp_t<M, std::vector<A>> qperm_fuel(const M& m, const std::vector<A>& s, std::size_t fuel) {
  if (s.empty()) return m.ret(std::vector<A>{});
  if (fuel == 0) throw FuelExhausted("qperm: no fuel left for a list of length " + std::to_string(s.size()));
  const A x = s.front();
  const std::vector<A> xs(s.begin() + 1, s.end());
  return m.bind(splits_bounded(m, xs), [m, x, fuel](const BoundedSplit<A>& yz) {
    // Each part is at most |xs| = fuel - 1 long, so recursion descends.
    if (yz.bound() >= fuel) throw FuelExhausted("qperm: split bound does not decrease");
    auto glue = [x](const std::vector<A>& a, const std::vector<A>& b) {
      std::vector<A> out = a;
      out.push_back(x);
      out.insert(out.end(), b.begin(), b.end());
      return out;
    };
    return lift_m2<M, decltype(glue), std::vector<A>, std::vector<A>>(m, glue, qperm_fuel(m, yz.left(), fuel - 1),
                                                                      qperm_fuel(m, yz.right(), fuel - 1));
  });
}

}  // namespace detail

/// Nondeterministic permutations, recursing on the two parts of every split.
template <class M, class A>
comp_t<M, std::vector<A>> qperm(const M& m, const std::vector<A>& s) {
  return detail::qperm_fuel(m, s, s.size());
}

template <class A>
bool is_sorted(const std::vector<A>& xs) {
  return std::is_sorted(xs.begin(), xs.end());
}

/// `qperm >=> assert sorted`.
template <class M, class A>
comp_t<M, std::vector<A>> slowsort(const M& m, const std::vector<A>& s) {
  return m.bind(qperm(m, s), [m](const std::vector<A>& xs) { return assert_that(m, is_sorted<A>, xs); });
}

/// `m >>= (x => n >>= (y => f x y))` equals `n >>= (y => m >>= (x => f x y))`.
template <class M, class A, class B, class F>
bool check_commute(const M& model, const comp_t<M, A>& m, const comp_t<M, B>& n, F f) {
  const auto lhs = model.bind(m, [model, n, f](const A& x) { return model.bind(n, [f, x](const B& y) { return f(x, y); }); });
  const auto rhs = model.bind(n, [model, m, f](const B& y) { return model.bind(m, [f, y](const A& x) { return f(x, y); }); });
  return model.same(lhs, rhs);
}

// ---------------------------------------------------------------------------
// Syntax of the nondeterminism fragment.

template <class A>
class Term;

/// Higher-order abstract syntax: Ret, Bind, Fail and Alt. The continuation of
/// a Bind is an ordinary function producing a term.
template <class A>
class Term {
 public:
  using value_type = A;
  enum class Kind { ret, bind, fail, alt };

  static Term ret(A a) { return Term(std::make_shared<RetNode>(std::move(a))); }
  static Term fail() { return Term(std::make_shared<FailNode>()); }
  static Term alt(Term l, Term r) { return Term(std::make_shared<AltNode>(std::move(l), std::move(r))); }

  template <class B>
  static Term bind(Term<B> m, std::function<Term(const B&)> k) {
    return Term(std::make_shared<BindNode<B>>(std::move(m), std::move(k)));
  }

  Kind kind() const { return node_->kind(); }
  /// Homomorphic interpretation into outcome sets.
  OutcomeSet<A> sem() const { return node_->sem(); }
  std::string show() const { return node_->show(); }

 private:
  struct Node {
    virtual ~Node() = default;
    virtual Kind kind() const = 0;
    virtual OutcomeSet<A> sem() const = 0;
    virtual std::string show() const = 0;
  };

  struct RetNode final : Node {
    explicit RetNode(A a) : value(std::move(a)) {}
    Kind kind() const override { return Kind::ret; }
    OutcomeSet<A> sem() const override { return powerset.ret(value); }
    std::string show() const override { return "Ret " + show_value(value); }
    A value;
  };

  struct FailNode final : Node {
    Kind kind() const override { return Kind::fail; }
    OutcomeSet<A> sem() const override { return powerset.fail<A>(); }
    std::string show() const override { return "Fail"; }
  };

  struct AltNode final : Node {
    AltNode(Term l, Term r) : left(std::move(l)), right(std::move(r)) {}
    Kind kind() const override { return Kind::alt; }
    OutcomeSet<A> sem() const override { return powerset.alt(left.sem(), right.sem()); }
    std::string show() const override { return "Alt(" + left.show() + ", " + right.show() + ")"; }
    Term left;
    Term right;
  };

  template <class B>
  struct BindNode final : Node {
    BindNode(Term<B> m, std::function<Term(const B&)> k) : head(std::move(m)), cont(std::move(k)) {}
    Kind kind() const override { return Kind::bind; }
    OutcomeSet<A> sem() const override {
      return powerset.bind(head.sem(), [this](const B& b) { return cont(b).sem(); });
    }
    std::string show() const override { return "Bind(" + head.show() + ", λ)"; }
    Term<B> head;
    std::function<Term(const B&)> cont;
  };

  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

template <class A>
OutcomeSet<A> sem(const Term<A>& t) {
  return t.sem();
}

template <class A>
std::string show(const Term<A>& t) {
  return t.show();
}

/// Running a program in this model builds its syntax tree.
struct Syntax {
  template <class A>
  using comp = Term<A>;

  std::string name() const { return "syntax"; }

  template <class A>
  Term<A> ret(A a) const {
    return Term<A>::ret(std::move(a));
  }

  template <class B, class F>
  auto bind(const Term<B>& m, F f) const {
    using R = std::remove_cvref_t<std::invoke_result_t<F&, const B&>>;
    using A = typename R::value_type;
    return Term<A>::template bind<B>(m, std::function<Term<A>(const B&)>(std::move(f)));
  }

  template <class A>
  Term<A> fail() const {
    return Term<A>::fail();
  }

  template <class A>
  Term<A> alt(const Term<A>& l, const Term<A>& r) const {
    return Term<A>::alt(l, r);
  }

  template <class A>
  bool same(const Term<A>& a, const Term<A>& b) const {
    return a.sem() == b.sem();
  }

  template <class A>
  std::string show(const Term<A>& t) const {
    return t.show() + " ⟦" + show_value(t.sem()) + "⟧";
  }
};

inline constexpr Syntax syntax{};

// ---------------------------------------------------------------------------
// Refinement.

/// `holds` is false exactly when `witness` names an outcome of the refining
/// side that the refined side lacks.
template <class W>
struct RefinementResult {
  bool holds = true;
  std::optional<W> witness;
  std::size_t instances = 1;
};

/// `m1` refines `m2` when `m1 [~] m2 = m2`.
template <class A>
RefinementResult<A> refines(const OutcomeSet<A>& m1, const OutcomeSet<A>& m2) {
  RefinementResult<A> r;
  r.holds = powerset.alt(m1, m2) == m2;
  if (!r.holds) {
    for (const auto& a : m1) {
      if (!m2.contains(a)) {
        r.witness = a;
        break;
      }
    }
  }
  return r;
}

}  // namespace monadic
