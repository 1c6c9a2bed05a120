#include "monadic/state_array.hpp"

namespace monadic {

std::vector<ArrayStore<int>> array_probes(int def) {
  const std::vector<std::vector<int>> rows{
      {1, 2, 3, 0, 1}, {3, 3, 3, 3, 3}, {0, 1, 0, 1, 0}, {2, 0, 3, 1, 2}, {def, def, 1}, {0, 0, 0, 0, 0},
  };
  std::vector<ArrayStore<int>> out{ArrayStore<int>(def)};
  for (const auto& row : rows) out.push_back(ArrayStore<int>::from_list(def, 0, row));
  out.push_back(ArrayStore<int>(def).with(2, 3).with(4, 1));
  return out;
}

PureArray make_pure_array(int def) {
  return PureArray(identity, def, array_probes(def), "array[identity,d=" + std::to_string(def) + "]");
}

PlusArray make_plus_array(int def) {
  return PlusArray(powerset, def, array_probes(def), "plus-array[d=" + std::to_string(def) + "]");
}

std::string show(const PartitionSizes& ps) {
  return "(" + show(ps.ny()) + ", " + show(ps.nz()) + ")≤" + show(ps.bound());
}

std::vector<ArrayStore<int>> refinement_stores(std::size_t extent) {
  ArrayStore<int> noisy(0);
  for (std::size_t k = 0; k < extent; ++k) noisy = noisy.with(k, static_cast<int>((k * 7 + 3) % 5) + 5);
  return {ArrayStore<int>(0), noisy};
}

std::vector<std::vector<int>> all_lists(std::size_t max_len, int alphabet) {
  std::vector<std::vector<int>> out{{}};
  std::vector<std::vector<int>> layer{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : layer) {
      for (int v = 0; v < alphabet; ++v) {
        auto xs = prefix;
        xs.push_back(v);
        next.push_back(std::move(xs));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

namespace {

void absorb(RefinementResult<std::string>& total, const RefinementResult<std::string>& r, const std::string& where) {
  total.instances += r.instances;
  if (!r.holds && total.holds) {
    total.holds = false;
    total.witness = where + " " + *r.witness;
  }
}

}  // namespace

RefinementResult<std::string> check_iqsort_refines_slowsort(std::size_t max_len, int alphabet, std::size_t offsets) {
  const PlusArray pa = make_plus_array(0);
  RefinementResult<std::string> total;
  total.instances = 0;
  for (const auto& xs : all_lists(max_len, alphabet)) {
    const auto rhs_perm = slowsort(pa, xs);
    for (std::size_t i = 0; i < std::max<std::size_t>(offsets, 1); ++i) {
      const auto lhs = then(pa, write_list(pa, i, xs), iqsort(pa, i, xs.size()));
      const auto rhs = pa.bind(rhs_perm, [pa, i](const std::vector<int>& ys) { return write_list(pa, i, ys); });
      absorb(total, refines_at<Unit>(pa, lhs, rhs, refinement_stores(i + xs.size() + 2)),
             "xs=" + show(xs) + " i=" + show(i));
      if (!total.holds) return total;
    }
  }
  return total;
}

RefinementResult<std::string> check_swap_rcons_refinement(std::size_t i, int x, const std::vector<int>& ys,
                                                          const std::vector<int>& zs) {
  const PlusArray pa = make_plus_array(0);
  std::vector<int> yszs = ys;
  yszs.insert(yszs.end(), zs.begin(), zs.end());
  std::vector<int> written = yszs;
  written.push_back(x);
  const auto lhs = then(pa, write_list(pa, i, written), aswap(pa, i + ys.size(), i + yszs.size()));
  const auto rhs = pa.bind(qperm(pa, zs), [pa, i, x, ys](const std::vector<int>& zs2) {
    std::vector<int> out = ys;
    out.push_back(x);
    out.insert(out.end(), zs2.begin(), zs2.end());
    return write_list(pa, i, out);
  });
  return refines_at<Unit>(pa, lhs, rhs, refinement_stores(i + written.size() + 2));
}

RefinementResult<std::string> check_swap_rcons_suite(std::size_t max_len, int alphabet, std::size_t offsets) {
  RefinementResult<std::string> total;
  total.instances = 0;
  const auto lists = all_lists(max_len, alphabet);
  for (const auto& ys : lists) {
    for (const auto& zs : lists) {
      for (int x = 0; x < alphabet; ++x) {
        for (std::size_t i = 0; i < std::max<std::size_t>(offsets, 1); ++i) {
          absorb(total, check_swap_rcons_refinement(i, x, ys, zs),
                 "i=" + show(i) + " x=" + show(x) + " ys=" + show(ys) + " zs=" + show(zs));
          if (!total.holds) return total;
        }
      }
    }
  }
  return total;
}

}  // namespace monadic
