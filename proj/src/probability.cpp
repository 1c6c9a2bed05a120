#include "monadic/probability.hpp"

namespace monadic {

std::string show(const Rational& r) { return r.str(); }

Prob::Prob(Rational v) : value_(std::move(v)) {
  if (value_ < 0 || value_ > 1) throw InvalidProbability("probability " + value_.str() + " outside [0,1]");
}

Prob::Prob(long long num, long long den) : Prob(Rational(num, den)) {}

std::string show(const Prob& p) { return p.value().str(); }

Prob s_of(const Prob& p, const Prob& q) {
  return Prob(Rational(1) - p.complement().value() * q.complement().value());
}

Prob r_of(const Prob& p, const Prob& q) {
  const Prob s = s_of(p, q);
  if (s.value() == 0) return Prob(0, 1);
  return Prob(p.value() / s.value());
}

namespace {

Prob random_prob(Rng& rng) {
  const auto den = static_cast<long long>(1 + pick(rng, 12));
  const auto num = static_cast<long long>(pick(rng, static_cast<std::size_t>(den) + 1));
  return Prob(num, den);
}

Dist<int> random_three_point(Rng& rng) {
  std::vector<int> pool{0, 1, 2, 3, 4, 5};
  std::map<int, Rational> w;
  long long total = 0;
  std::vector<std::pair<int, long long>> raw;
  for (int k = 0; k < 3; ++k) {
    const std::size_t at = pick(rng, pool.size());
    const long long weight = 1 + static_cast<long long>(pick(rng, 6));
    raw.emplace_back(pool[at], weight);
    total += weight;
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(at));
  }
  for (const auto& [x, weight] : raw) w[x] = Rational(weight, total);
  return Dist<int>(w);
}

Named<Dist<int>> named(Dist<int> d) { return {show(d), std::move(d)}; }

using K = Fixture<DistModel>::K;
using H = Fixture<DistModel>::H;

Named<K> random_kont(Rng& rng) {
  switch (pick(rng, 4)) {
    case 0: {
      const int c = static_cast<int>(pick(rng, 3));
      return {"λx. dirac (x+" + show(c) + ")", [c](int x) { return dirac(x + c); }};
    }
    case 1: {
      const int c = 1 + static_cast<int>(pick(rng, 2));
      return {"λx. uniform {x, x+" + show(c) + "}", [c](int x) { return uniform(std::vector<int>{x, x + c}); }};
    }
    case 2: {
      const auto d1 = random_three_point(rng);
      const auto d2 = random_three_point(rng);
      return {"λx. if even x then " + show(d1) + " else " + show(d2), [d1, d2](int x) { return x % 2 == 0 ? d1 : d2; }};
    }
    default: {
      const Prob p = random_prob(rng);
      const auto d = random_three_point(rng);
      return {"λx. dirac x ◁" + show(p) + "▷ " + show(d), [p, d](int x) { return choice(p, dirac(x), d); }};
    }
  }
}

Named<H> random_func(Rng& rng) {
  const int a = static_cast<int>(pick(rng, 4));
  const int b = static_cast<int>(pick(rng, 5));
  return {"λx. (" + show(a) + "x+" + show(b) + ") mod 5", [a, b](int x) { return (a * x + b) % 5; }};
}

}  // namespace

Domain<Prob> probs() {
  Domain<Prob> d;
  d.enumerate = [](std::size_t) { return std::vector<Prob>{Prob(0, 1), Prob(1, 3), Prob(1, 2), Prob(1, 1)}; };
  d.sample = random_prob;
  return d;
}

Domain<Named<Dist<int>>> three_point_dists() {
  Domain<Named<Dist<int>>> d;
  d.enumerate = [](std::size_t) {
    return std::vector<Named<Dist<int>>>{
        named(dirac(0)), named(uniform(std::vector<int>{0, 1})),
        named(Dist<int>({{0, Rational(1, 6)}, {2, Rational(1, 3)}, {3, Rational(1, 2)}}))};
  };
  d.sample = [](Rng& rng) { return named(random_three_point(rng)); };
  return d;
}

Fixture<DistModel> dist_fixture() {
  Fixture<DistModel> fx{dist_model, "dist"};
  fx.values = naturals(3);
  fx.comps = three_point_dists();
  fx.konts.enumerate = [](std::size_t) {
    return std::vector<Named<K>>{
        {"λx. dirac (x+1)", [](int x) { return dirac(x + 1); }},
        {"λx. uniform {x, x+2}", [](int x) { return uniform(std::vector<int>{x, x + 2}); }},
        {"λx. dirac (x mod 2) ◁1/3▷ dirac 3", [](int x) { return choice(Prob(1, 3), dirac(x % 2), dirac(3)); }},
    };
  };
  fx.konts.sample = random_kont;
  fx.funcs.enumerate = [](std::size_t) {
    return std::vector<Named<H>>{
        {"λx. x+1", [](int x) { return x + 1; }},
        {"λx. 2x", [](int x) { return 2 * x; }},
        {"λx. x mod 2", [](int x) { return x % 2; }},
        {"λx. 0", [](int) { return 0; }},
    };
  };
  fx.funcs.sample = random_func;
  return fx;
}

LawReport check_choice1(const CheckConfig& cfg) {
  return for_all(
      laws::convex_choice1, "dist", cfg, {"a", "b"},
      [](const Named<Dist<int>>& a, const Named<Dist<int>>& b) {
        return compare(dist_model, choice(Prob(1, 1), a.value, b.value), a.value);
      },
      three_point_dists(), three_point_dists());
}

LawReport check_choiceC(const CheckConfig& cfg) {
  return for_all(
      laws::convex_choicec, "dist", cfg, {"p", "a", "b"},
      [](const Prob& p, const Named<Dist<int>>& a, const Named<Dist<int>>& b) {
        return compare(dist_model, choice(p, a.value, b.value), choice(p.complement(), b.value, a.value));
      },
      probs(), three_point_dists(), three_point_dists());
}

LawReport check_choicemm(const CheckConfig& cfg) {
  return for_all(
      laws::convex_choicemm, "dist", cfg, {"p", "a"},
      [](const Prob& p, const Named<Dist<int>>& a) { return compare(dist_model, choice(p, a.value, a.value), a.value); },
      probs(), three_point_dists());
}

LawReport check_choiceA(const CheckConfig& cfg) {
  return for_all(
      laws::convex_choicea, "dist", cfg, {"p", "q", "a", "b", "c"},
      [](const Prob& p, const Prob& q, const Named<Dist<int>>& a, const Named<Dist<int>>& b,
         const Named<Dist<int>>& c) {
        const auto lhs = choice(p, a.value, choice(q, b.value, c.value));
        const auto rhs = choice(s_of(p, q), choice(r_of(p, q), a.value, b.value), c.value);
        return compare(dist_model, lhs, rhs);
      },
      probs(), probs(), three_point_dists(), three_point_dists(), three_point_dists());
}

LawReport check_prob_bindDl(const CheckConfig& cfg) {
  const auto fx = dist_fixture();
  return for_all(
      laws::prob_choice_bind_dl, "dist", cfg, {"p", "a", "b", "f"},
      [](const Prob& p, const Named<Dist<int>>& a, const Named<Dist<int>>& b, const Named<K>& f) {
        return compare(dist_model, dbind(choice(p, a.value, b.value), f.value),
                       choice(p, dbind(a.value, f.value), dbind(b.value, f.value)));
      },
      probs(), three_point_dists(), three_point_dists(), fx.konts);
}

ModelHandle dist_handle() {
  ModelHandle h = make_handle(dist_fixture());
  h.add(laws::convex_choice1, check_choice1);
  h.add(laws::convex_choicec, check_choiceC);
  h.add(laws::convex_choicemm, check_choicemm);
  h.add(laws::convex_choicea, check_choiceA);
  h.add(laws::prob_choice_bind_dl, check_prob_bindDl);
  return h;
}

}  // namespace monadic
