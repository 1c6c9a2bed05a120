#pragma once

// Named algebraic laws, the instance generator that exercises them, and the
// report types produced by a run.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "monadic/show.hpp"

namespace monadic {

struct LawId {
  std::string_view name;
  std::string_view source;

  friend bool operator==(const LawId& a, const LawId& b) { return a.name == b.name; }
};

namespace laws {

// Functors and monads.
inline constexpr LawId functor_id{"functor.id", "FunctorLaws.id"};
inline constexpr LawId functor_comp{"functor.comp", "FunctorLaws.comp"};
inline constexpr LawId join_left_unit{"join.left_unit", "JoinLaws.left_unit"};
inline constexpr LawId join_right_unit{"join.right_unit", "JoinLaws.right_unit"};
inline constexpr LawId join_associativity{"join.associativity", "JoinLaws.associativity"};
inline constexpr LawId bind_left_neutral{"bind.left_neutral", "BindLaws.left_neutral"};
inline constexpr LawId bind_right_neutral{"bind.right_neutral", "BindLaws.right_neutral"};
inline constexpr LawId bind_associative{"bind.associative", "BindLaws.associative"};

// Failure, choice and the plus monad.
inline constexpr LawId fail_left_zero{"fail.left_zero", "bindfailf; left_zero"};
inline constexpr LawId fail_right_zero{"failR0.right_zero", "MonadFailR0; right_zero"};
inline constexpr LawId alt_associative{"alt.associative", "altA; associative"};
inline constexpr LawId alt_left_distributive{"alt.left_distributive",
                                             "alt_bindDl; left_distributivity"};
inline constexpr LawId nondet_altfailm{"nondet.altfailm", "altfailm; left_id"};
inline constexpr LawId nondet_altmfail{"nondet.altmfail", "altmfail; right_id"};
inline constexpr LawId altci_idempotent{"altCI.idempotent", "MonadAltCI altmm; idempotent"};
inline constexpr LawId altci_commutative{"altCI.commutative", "MonadAltCI altC"};
inline constexpr LawId plus_right_distributive{"plus.right_distributive",
                                               "alt_bindDr; right_distributivity"};

// Exceptions.
inline constexpr LawId except_catchmfail{"except.catchmfail", "catchmfail; right_id"};
inline constexpr LawId except_catchfailm{"except.catchfailm", "catchfailm; left_id"};
inline constexpr LawId except_catcha{"except.catchA", "catchA; associative"};
inline constexpr LawId except_catchret{"except.catchret", "catchret; left_zero"};

// State.
inline constexpr LawId state_putput{"state.putput", "putput"};
inline constexpr LawId state_putget{"state.putget", "putget"};
inline constexpr LawId state_getputskip{"state.getputskip", "getputskip"};
inline constexpr LawId state_getget{"state.getget", "getget"};

// Arrays.
inline constexpr LawId array_aputput{"array.aputput", "aputput"};
inline constexpr LawId array_aputget{"array.aputget", "aputget"};
inline constexpr LawId array_agetputskip{"array.agetputskip", "agetputskip"};
inline constexpr LawId array_agetget{"array.agetget", "agetget"};
inline constexpr LawId array_agetc{"array.agetC", "agetC"};
inline constexpr LawId array_aputc{"array.aputC", "aputC"};
inline constexpr LawId array_aputgetc{"array.aputgetC", "aputgetC"};

// Convex spaces and probability.
inline constexpr LawId convex_choice1{"convex.choice1", "choice1"};
inline constexpr LawId convex_choicec{"convex.choiceC", "choiceC (skewed commutativity)"};
inline constexpr LawId convex_choicemm{"convex.choicemm", "choicemm (idempotence)"};
inline constexpr LawId convex_choicea{"convex.choiceA", "choiceA (quasi associativity)"};
inline constexpr LawId prob_choice_bind_dl{"prob.choice_bindDl", "choice_bindDl; prob_bindDl"};

// Monad morphisms.
inline constexpr LawId morphism_ret{"morphism.ret", "MonadMLaws.ret"};
inline constexpr LawId morphism_bind{"morphism.bind", "MonadMLaws.bind"};
inline constexpr LawId morphism_naturality{"morphism.naturality", "naturality"};

// Typed store.
inline constexpr LawId store_cputput{"typed.cputput", "cputput"};
inline constexpr LawId store_cputget{"typed.cputget", "cputget"};
inline constexpr LawId store_cgetget{"typed.cgetget", "cgetget"};
inline constexpr LawId store_cgetc{"typed.cgetC", "cgetC"};
inline constexpr LawId store_cgetputskip{"typed.cgetputskip", "cgetputskip"};
inline constexpr LawId store_cputc{"typed.cputC", "cputC"};
inline constexpr LawId store_cputgetc{"typed.cputgetC", "cputgetC"};
inline constexpr LawId store_cgetputc{"typed.cgetputC", "cgetputC"};
inline constexpr LawId store_cnewget{"typed.cnewget", "cnewget"};
inline constexpr LawId store_cnewput{"typed.cnewput", "cnewput"};
inline constexpr LawId store_cnewchk{"typed.cnewchk", "cnewchk"};
inline constexpr LawId store_cchknewc{"typed.cchknewC", "cchknewC"};
inline constexpr LawId store_cchknewe{"typed.cchknewE", "cchknewE"};
inline constexpr LawId store_cchkputc{"typed.cchkputC", "cchkputC"};
inline constexpr LawId store_cgetputchk{"typed.cgetputchk", "cgetputchk"};

// Derived equations of the worked examples.
inline constexpr LawId fastprod_example{"example.fastprodE", "fastprodE"};
inline constexpr LawId rtl_tl_self{"example.rtl_tl_self", "rtl_tl_self"};

}  // namespace laws

/// Every law known to the catalog, in a fixed order.
std::span<const LawId> all_laws();
std::optional<LawId> find_law(std::string_view name);

struct CheckConfig {
  std::uint64_t seed = 0;
  std::size_t exhaustive_bound = 3;
  std::size_t random_trials = 200;
};

using Rng = std::mt19937_64;

/// Seed for one (law, model) instance stream; independent of evaluation order.
std::uint64_t instance_seed(std::uint64_t seed, std::string_view law, std::string_view model);

/// Uniform pick in [0, n). Avoids distribution objects so that streams are
/// identical across standard libraries.
inline std::size_t pick(Rng& rng, std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng() % n); }

enum class Status { pass, fail };

struct Counterexample {
  std::string instance;
  std::string lhs;
  std::string rhs;
  /// Re-evaluates the stored instance; true when both sides still differ.
  std::function<bool()> reproduce;
};

struct LawReport {
  LawId law;
  std::string model;
  std::size_t instances = 0;
  std::size_t skipped = 0;
  Status status = Status::pass;
  std::optional<Counterexample> counterexample;

  bool passed() const { return status == Status::pass; }
};

/// Outcome of evaluating a single law instance.
struct Verdict {
  enum class Kind { holds, differs, skipped };
  Kind kind = Kind::holds;
  std::string lhs;
  std::string rhs;

  static Verdict holds() { return {}; }
  static Verdict skipped() { return {Kind::skipped, {}, {}}; }
  static Verdict differs(std::string lhs, std::string rhs) {
    return {Kind::differs, std::move(lhs), std::move(rhs)};
  }
};

/// Decides `lhs = rhs` with the model's denotation equality.
template <class Model, class T>
Verdict compare(const Model& model, const T& lhs, const T& rhs) {
  if (model.same(lhs, rhs)) return Verdict::holds();
  return Verdict::differs(model.show(lhs), model.show(rhs));
}

/// A quantified parameter: an exhaustive enumeration up to a size bound and a
/// seeded sampler for the random phase.
template <class T>
struct Domain {
  std::function<std::vector<T>(std::size_t)> enumerate;
  std::function<T(Rng&)> sample;

  explicit operator bool() const { return static_cast<bool>(enumerate) && static_cast<bool>(sample); }
};

/// Finite catalog: enumeration ignores the bound, sampling is uniform.
template <class T>
Domain<T> catalog(std::vector<T> items) {
  Domain<T> d;
  d.enumerate = [items](std::size_t) { return items; };
  d.sample = [items](Rng& rng) { return items[pick(rng, items.size())]; };
  return d;
}

/// Naturals: enumerates 0..min(bound, max), samples 0..max.
Domain<int> naturals(int max);
/// Indices: enumerates 0..min(bound, max), samples 0..max.
Domain<std::size_t> indices(std::size_t max);
/// Lists over {low..high}: enumerates lengths up to min(bound, max_len).
Domain<std::vector<int>> lists(int low, int high, std::size_t max_len);

namespace detail {

template <class... Ts, std::size_t... I>
std::string render_instance(const std::array<std::string_view, sizeof...(Ts)>& names,
                            const std::tuple<Ts...>& args, std::index_sequence<I...>) {
  std::string out;
  ((out += (I ? ", " : "") + std::string(names[I]) + "=" + show(std::get<I>(args))), ...);
  return out;
}

}  // namespace detail

/// Runs `body` over the exhaustive instances of the domains and then over
/// `cfg.random_trials` sampled instances. Stops at the first counterexample.
template <class Body, class... Ts>
LawReport for_all(const LawId& law, const std::string& model, const CheckConfig& cfg,
                  const std::array<std::string_view, sizeof...(Ts)>& names, Body body,
                  const Domain<Ts>&... domains) {
  LawReport report{law, model};

  auto visit = [&](const std::tuple<Ts...>& args) {
    Verdict v = std::apply(body, args);
    switch (v.kind) {
      case Verdict::Kind::skipped:
        ++report.skipped;
        return true;
      case Verdict::Kind::holds:
        ++report.instances;
        return true;
      case Verdict::Kind::differs:
        ++report.instances;
        report.status = Status::fail;
        report.counterexample = Counterexample{
            detail::render_instance(names, args, std::index_sequence_for<Ts...>{}), std::move(v.lhs),
            std::move(v.rhs), [body, args] { return std::apply(body, args).kind == Verdict::Kind::differs; }};
        return false;
    }
    return true;
  };

  std::tuple<std::vector<Ts>...> pools{domains.enumerate(cfg.exhaustive_bound)...};
  std::size_t total = 1;
  std::apply([&total](const auto&... pool) { ((total *= pool.size()), ...); }, pools);

  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rest = flat;
    auto args = std::apply(
        [&rest](const auto&... pool) {
          // Braced initialization evaluates left to right.
          return std::tuple<Ts...>{[&rest](const auto& p) -> const auto& {
            const auto& x = p[rest % p.size()];
            rest /= p.size();
            return x;
          }(pool)...};
        },
        pools);
    if (!visit(args)) return report;
  }

  if constexpr (sizeof...(Ts) == 0) return report;
  Rng rng(instance_seed(cfg.seed, law.name, model));
  for (std::size_t t = 0; t < cfg.random_trials; ++t) {
    std::tuple<Ts...> args{domains.sample(rng)...};
    if (!visit(args)) return report;
  }
  return report;
}

class UnsupportedLaw : public std::runtime_error {
 public:
  UnsupportedLaw(std::string_view law, std::string_view model);
};

/// Opaque model handle: the set of laws a concrete model can be checked
/// against, each bound to its instance generators.
class ModelHandle {
 public:
  using Check = std::function<LawReport(const CheckConfig&)>;

  explicit ModelHandle(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  void add(const LawId& law, Check check);
  bool supports(std::string_view law) const;
  std::vector<LawId> laws() const;
  LawReport check(const LawId& law, const CheckConfig& cfg) const;

 private:
  std::string name_;
  std::vector<std::pair<LawId, Check>> checks_;
};

/// Checks every law in `suite` against `model`. Throws UnsupportedLaw before
/// evaluating anything if the model lacks an operation some law needs.
/// With `jobs > 1` distinct laws are evaluated concurrently; the result order
/// is always the suite order.
std::vector<LawReport> check_law_suite(std::span<const LawId> suite, const ModelHandle& model,
                                       const CheckConfig& cfg, unsigned jobs = 1);

/// All laws registered on the handle, in registration order.
std::vector<LawReport> check_all(const ModelHandle& model, const CheckConfig& cfg, unsigned jobs = 1);

std::string render_text(const LawReport& report);
std::string render_text(std::span<const LawReport> reports);
std::string render_json(std::span<const LawReport> reports);

bool all_passed(std::span<const LawReport> reports);

}  // namespace monadic
