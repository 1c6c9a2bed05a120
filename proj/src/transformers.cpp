#include "monadic/transformers.hpp"

#include <numeric>

namespace monadic {

Nat product(const std::vector<Nat>& s) { return std::accumulate(s.begin(), s.end(), Nat{1}, std::multiplies<>()); }

OptionVal<Nat> work(const std::vector<Nat>& s) { return work(except, s); }

OptionVal<Nat> fastprod(const std::vector<Nat>& s) { return fastprod(except, s); }

LawReport check_fastprod(std::size_t max_len, Nat max_value) {
  Domain<std::vector<Nat>> lists_of;
  lists_of.enumerate = [max_len, max_value](std::size_t) {
    std::vector<std::vector<Nat>> out{{}};
    std::vector<std::vector<Nat>> layer{{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::vector<std::vector<Nat>> next;
      for (const auto& prefix : layer) {
        for (Nat v = 0; v <= max_value; ++v) {
          auto xs = prefix;
          xs.push_back(v);
          next.push_back(std::move(xs));
        }
      }
      out.insert(out.end(), next.begin(), next.end());
      layer = std::move(next);
    }
    return out;
  };
  lists_of.sample = [](Rng&) { return std::vector<Nat>{}; };
  const CheckConfig cfg{0, max_len, 0};
  return for_all(
      laws::fastprod_example, except.name(), cfg, {"s"},
      [](const std::vector<Nat>& s) { return compare(except, fastprod(s), except.ret(product(s))); }, lists_of);
}

}  // namespace monadic
