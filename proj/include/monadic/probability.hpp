#pragma once

// Finitely-supported distributions with exact rational weights, probabilistic
// choice, and the convex-space and probability laws.

#include <atomic>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "monadic/generic_laws.hpp"
#include "monadic/law_catalog.hpp"

namespace monadic {

using Rational = boost::multiprecision::cpp_rational;

std::string show(const Rational& r);

class InvalidProbability : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidDistribution : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A rational in [0, 1].
class Prob {
 public:
  Prob() = default;
  explicit Prob(Rational v);
  Prob(long long num, long long den);

  const Rational& value() const { return value_; }
  Prob complement() const { return Prob(Rational(1) - value_); }

  friend bool operator==(const Prob& a, const Prob& b) { return a.value_ == b.value_; }
  friend bool operator<(const Prob& a, const Prob& b) { return a.value_ < b.value_; }

 private:
  Rational value_{0};
};

std::string show(const Prob& p);

namespace detail {
/// Number of distribution invariant checks performed so far.
inline std::atomic<std::size_t> dist_checks{0};
}  // namespace detail

inline std::size_t dist_invariant_checks() { return detail::dist_checks.load(); }

/// A probability mass function: every stored weight is positive and the
/// weights sum to exactly one. Checked on every construction.
template <class A>
class Dist {
 public:
  using value_type = A;
  using Pmf = std::map<A, Rational>;

  /// Zero weights are dropped before the invariants are checked.
  explicit Dist(const Pmf& weights) {
    Rational total = 0;
    for (const auto& [a, w] : weights) {
      if (w < 0) throw InvalidDistribution("negative weight for " + show(a));
      if (w == 0) continue;
      pmf_.emplace(a, w);
      total += w;
    }
    ++detail::dist_checks;
    if (total != 1) throw InvalidDistribution("total mass " + total.str() + " is not 1");
  }

  const Pmf& pmf() const { return pmf_; }

  Rational weight(const A& a) const {
    auto it = pmf_.find(a);
    return it == pmf_.end() ? Rational(0) : it->second;
  }

  std::vector<A> support() const {
    std::vector<A> out;
    for (const auto& [a, w] : pmf_) out.push_back(a);
    return out;
  }

  friend bool operator==(const Dist& a, const Dist& b) { return a.pmf_ == b.pmf_; }
  friend bool operator<(const Dist& a, const Dist& b) { return a.pmf_ < b.pmf_; }
  friend bool operator>(const Dist& a, const Dist& b) { return b < a; }
  friend bool operator<=(const Dist& a, const Dist& b) { return !(b < a); }
  friend bool operator>=(const Dist& a, const Dist& b) { return !(a < b); }

 private:
  Pmf pmf_;
};

template <class A>
std::string show(const Dist<A>& d) {
  std::string out = "{";
  bool first = true;
  for (const auto& [a, w] : d.pmf()) {
    if (!first) out += ", ";
    first = false;
    out += show(a) + "↦" + w.str();
  }
  return out + "}";
}

template <class A>
Dist<A> dirac(A a) {
  return Dist<A>({{std::move(a), Rational(1)}});
}

template <class A>
Dist<A> uniform(const std::vector<A>& xs) {
  if (xs.empty()) throw InvalidDistribution("uniform over an empty list");
  std::map<A, Rational> w;
  for (const auto& x : xs) w[x] += Rational(1, static_cast<long long>(xs.size()));
  return Dist<A>(w);
}

/// Weighted sum Σ p(a)·g(a)(b).
template <class A, class G>
auto dbind(const Dist<A>& p, G&& g) {
  using R = std::remove_cvref_t<std::invoke_result_t<G&, const A&>>;
  std::map<typename R::value_type, Rational> w;
  for (const auto& [a, pa] : p.pmf()) {
    const R image = g(a);
    for (const auto& [b, gb] : image.pmf()) w[b] += pa * gb;
  }
  return R(w);
}

/// `a ◁p▷ b`: weight p on a and 1-p on b.
template <class A>
Dist<A> choice(const Prob& p, const Dist<A>& a, const Dist<A>& b) {
  std::map<A, Rational> w;
  for (const auto& [x, wx] : a.pmf()) w[x] += p.value() * wx;
  for (const auto& [x, wx] : b.pmf()) w[x] += p.complement().value() * wx;
  return Dist<A>(w);
}

/// 1 - (1-p)(1-q).
Prob s_of(const Prob& p, const Prob& q);
/// p / s_of(p, q), and 0 when s_of(p, q) = 0.
Prob r_of(const Prob& p, const Prob& q);

/// The probability monad over finitely-supported distributions.
struct DistModel {
  template <class A>
  using comp = Dist<A>;

  std::string name() const { return "dist"; }

  template <class A>
  Dist<A> ret(A a) const {
    return dirac(std::move(a));
  }

  template <class A, class G>
  auto bind(const Dist<A>& p, G&& g) const {
    return dbind(p, std::forward<G>(g));
  }

  template <class A, class F>
  auto map(F&& h, const Dist<A>& p) const {
    using B = std::remove_cvref_t<std::invoke_result_t<F&, const A&>>;
    std::map<B, Rational> w;
    for (const auto& [a, pa] : p.pmf()) w[h(a)] += pa;
    return Dist<B>(w);
  }

  template <class A>
  Dist<A> choice(const Prob& p, const Dist<A>& a, const Dist<A>& b) const {
    return monadic::choice(p, a, b);
  }

  template <class A>
  bool same(const Dist<A>& a, const Dist<A>& b) const {
    return a == b;
  }

  template <class A>
  std::string show(const Dist<A>& d) const {
    return show_value(d);
  }
};

inline constexpr DistModel dist_model{};

/// Probabilities k/d with 0 ≤ k ≤ d ≤ 12; enumerates {0, 1/3, 1/2, 1}.
Domain<Prob> probs();
/// Distributions with a support of exactly three points in 0..5 (and a few
/// fixed ones when enumerated).
Domain<Named<Dist<int>>> three_point_dists();
/// Generic fixture of the distribution model.
Fixture<DistModel> dist_fixture();

LawReport check_choice1(const CheckConfig& cfg);
LawReport check_choiceC(const CheckConfig& cfg);
LawReport check_choicemm(const CheckConfig& cfg);
LawReport check_choiceA(const CheckConfig& cfg);
LawReport check_prob_bindDl(const CheckConfig& cfg);

/// Handle with the monad, functor, join, convex and probability laws.
ModelHandle dist_handle();

}  // namespace monadic
