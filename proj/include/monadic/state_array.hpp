#pragma once

// Total arrays over natural indices, the array monad as a state transformer
// over a base monad, the plus-array model, and in-place quicksort with its
// refinement checks against slowsort.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "monadic/nondet.hpp"
#include "monadic/transformers.hpp"

namespace monadic {

/// Finite map from indices to values with a default for unwritten cells.
/// Cells holding the default are never stored, so structural equality is
/// extensional equality of the total arrays.
template <class V>
class ArrayStore {
 public:
  ArrayStore() = default;
  explicit ArrayStore(V def) : default_(std::move(def)) {}

  static ArrayStore from_list(V def, std::size_t i, const std::vector<V>& xs) {
    ArrayStore st(std::move(def));
    for (const auto& x : xs) st = st.with(i++, x);
    return st;
  }

  const V& at(std::size_t i) const {
    auto it = cells_.find(i);
    return it == cells_.end() ? default_ : it->second;
  }

  ArrayStore with(std::size_t i, V v) const {
    ArrayStore out = *this;
    if (v == default_) {
      out.cells_.erase(i);
    } else {
      out.cells_[i] = std::move(v);
    }
    return out;
  }

  std::vector<V> segment(std::size_t i, std::size_t n) const {
    std::vector<V> out;
    for (std::size_t k = 0; k < n; ++k) out.push_back(at(i + k));
    return out;
  }

  const V& default_value() const { return default_; }
  const std::map<std::size_t, V>& cells() const { return cells_; }

  friend bool operator==(const ArrayStore&, const ArrayStore&) = default;
  friend auto operator<=>(const ArrayStore&, const ArrayStore&) = default;

 private:
  V default_{};
  std::map<std::size_t, V> cells_;
};

template <class V>
std::string show(const ArrayStore<V>& st) {
  std::string out = "[";
  bool first = true;
  for (const auto& [i, v] : st.cells()) {
    if (!first) out += ", ";
    first = false;
    out += show(i) + "↦" + show(v);
  }
  return out + (first ? "" : " ") + "| _↦" + show(st.default_value()) + "]";
}

/// The array monad: state over an ArrayStore, with aget/aput.
template <class V, class Base>
class ArrayMonad : public StateT<ArrayStore<V>, Base> {
 public:
  using Store = ArrayStore<V>;
  using State = StateT<Store, Base>;
  template <class A>
  using comp = typename State::template comp<A>;

  ArrayMonad(Base base, V def, std::vector<Store> probes, std::string label)
      : State(std::move(base), std::move(probes), std::move(label)), default_(std::move(def)) {}

  const V& default_value() const { return default_; }
  Store empty_store() const { return Store(default_); }

  comp<V> aget(std::size_t i) const {
    const Base b = this->base();
    return comp<V>([b, i](const Store& s) { return b.ret(std::pair<V, Store>{s.at(i), s}); });
  }

  comp<Unit> aput(std::size_t i, V v) const {
    const Base b = this->base();
    return comp<Unit>([b, i, v](const Store& s) { return b.ret(std::pair<Unit, Store>{tt, s.with(i, v)}); });
  }

 private:
  V default_;
};

using PureArray = ArrayMonad<int, Identity>;
using PlusArray = ArrayMonad<int, Powerset>;

/// Probe stores over indices 0..4 with values 0..3 plus the empty store.
std::vector<ArrayStore<int>> array_probes(int def);

PureArray make_pure_array(int def = 0);
PlusArray make_plus_array(int def = 0);

template <class AM>
comp_t<AM, Unit> aswap(const AM& am, std::size_t i, std::size_t j) {
  return am.bind(am.aget(i), [am, i, j](int x) {
    return am.bind(am.aget(j), [am, i, j, x](int y) { return then(am, am.aput(i, y), am.aput(j, x)); });
  });
}

template <class AM>
comp_t<AM, Unit> write_list(const AM& am, std::size_t i, const std::vector<int>& s) {
  comp_t<AM, Unit> out = skip(am);
  for (std::size_t k = s.size(); k-- > 0;) out = then(am, am.aput(i + k, s[k]), out);
  return out;
}

using Sizes = std::pair<std::size_t, std::size_t>;

/// Partitions cells i+ny+nz .. i+ny+nz+nx-1 about the pivot p, given that
/// the ny cells from i are ≤ p and the next nz are > p.
template <class AM>
comp_t<AM, Sizes> ipartl(const AM& am, int p, std::size_t i, std::size_t ny, std::size_t nz, std::size_t nx) {
  if (nx == 0) return am.ret(Sizes{ny, nz});
  return am.bind(am.aget(i + ny + nz), [am, p, i, ny, nz, nx](int x) {
    if (x <= p) return then(am, aswap(am, i + ny, i + ny + nz), ipartl(am, p, i, ny + 1, nz, nx - 1));
    return ipartl(am, p, i, ny, nz + 1, nx - 1);
  });
}

/// Partition sizes certified against the bound x+y+z of the call.
class PartitionSizes {
 public:
  PartitionSizes(std::size_t ny, std::size_t nz, std::size_t bound) : ny_(ny), nz_(nz), bound_(bound) {
    if (ny_ > bound_ || nz_ > bound_) {
      throw SizeCertificateViolation("partition sizes exceed bound " + std::to_string(bound_));
    }
  }

  std::size_t ny() const { return ny_; }
  std::size_t nz() const { return nz_; }
  std::size_t bound() const { return bound_; }

  friend auto operator<=>(const PartitionSizes&, const PartitionSizes&) = default;
  friend bool operator==(const PartitionSizes&, const PartitionSizes&) = default;

 private:
  std::size_t ny_;
  std::size_t nz_;
  std::size_t bound_;
};

std::string show(const PartitionSizes& ps);

template <class AM>
using Partition = std::function<comp_t<AM, Sizes>(int, std::size_t, std::size_t, std::size_t, std::size_t)>;

template <class AM>
Partition<AM> default_partition(const AM& am) {
  return [am](int p, std::size_t i, std::size_t y, std::size_t z, std::size_t x) { return ipartl(am, p, i, y, z, x); };
}

/// `ipartl p i y z x >>= dassert`, with sizes bounded by x+y+z.
template <class AM>
comp_t<AM, PartitionSizes> dipartl(const AM& am, int p, std::size_t i, std::size_t y, std::size_t z, std::size_t x,
                                   const Partition<AM>& part) {
  const std::size_t bound = x + y + z;
  auto within = [bound](const Sizes& n) { return n.first <= bound && n.second <= bound; };
  return am.bind(part(p, i, y, z, x), [am, within, bound](const Sizes& n) {
    return am.bind(dassert(am, "sizes<=x+y+z", within, n), [am, bound](const Certified<Sizes>& c) {
      return am.ret(PartitionSizes(c.value().first, c.value().second, bound));
    });
  });
}

template <class AM>
comp_t<AM, PartitionSizes> dipartl(const AM& am, int p, std::size_t i, std::size_t y, std::size_t z, std::size_t x) {
  return dipartl(am, p, i, y, z, x, default_partition(am));
}

/// Sorts cells i..i+n-1 in place. Each recursive call is on a segment
/// strictly shorter than n.
template <class AM>
comp_t<AM, Unit> iqsort(const AM& am, std::size_t i, std::size_t n, const Partition<AM>& part) {
  if (n == 0) return skip(am);
  return am.bind(am.aget(i), [am, i, n, part](int p) {
    return am.bind(dipartl(am, p, i + 1, 0, 0, n - 1, part), [am, i, n, part](const PartitionSizes& ps) {
      const std::size_t ny = ps.ny();
      const std::size_t nz = ps.nz();
      if (ny >= n || nz >= n) throw FuelExhausted("iqsort: partition does not shrink the segment");
      return then(am, aswap(am, i, i + ny), then(am, iqsort(am, i, ny, part), iqsort(am, i + ny + 1, nz, part)));
    });
  });
}

template <class AM>
comp_t<AM, Unit> iqsort(const AM& am, std::size_t i, std::size_t n) {
  return iqsort(am, i, n, default_partition(am));
}

class WitnessMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A plus-array computation together with an optional syntactic witness,
/// registered when the computation was defined.
template <class A>
struct Registered {
  comp_t<PlusArray, A> comp;
  std::optional<Term<A>> witness;
};

template <class A>
Registered<std::vector<A>> registered_qperm(const PlusArray& pa, const std::vector<A>& s) {
  return {qperm(pa, s), qperm(syntax, s)};
}

template <class A>
Registered<A> registered_ret(const PlusArray& pa, A a) {
  return {pa.ret(a), Term<A>::ret(a)};
}

template <class A>
Registered<A> unregistered(comp_t<PlusArray, A> m) {
  return {std::move(m), std::nullopt};
}

/// The registered witness, after checking that its semantics matches the
/// computation at every probe store with the store left unchanged.
template <class A>
std::optional<Term<A>> plus_is_nondet(const PlusArray& pa, const Registered<A>& r) {
  if (!r.witness) return std::nullopt;
  const auto outcomes = r.witness->sem();
  for (const auto& s : pa.probes()) {
    std::set<std::pair<A, ArrayStore<int>>> expected;
    for (const auto& a : outcomes) expected.emplace(a, s);
    if (pa.run(r.comp, s) != OutcomeSet<std::pair<A, ArrayStore<int>>>(std::move(expected))) {
      throw WitnessMismatch("registered witness " + r.witness->show() + " disagrees at store " + show(s));
    }
  }
  return r.witness;
}

/// Inclusion of outcome sets at each of the given initial stores.
template <class A>
RefinementResult<std::string> refines_at(const PlusArray& pa, const comp_t<PlusArray, A>& m1,
                                         const comp_t<PlusArray, A>& m2, const std::vector<ArrayStore<int>>& stores) {
  RefinementResult<std::string> r;
  r.instances = 0;
  for (const auto& s : stores) {
    ++r.instances;
    const auto sub = refines(pa.run(m1, s), pa.run(m2, s));
    if (!sub.holds) {
      r.holds = false;
      r.witness = "store=" + show(s) + " outcome=" + show(*sub.witness);
      return r;
    }
  }
  return r;
}

/// The empty store and a store with non-default values on 0..extent-1.
std::vector<ArrayStore<int>> refinement_stores(std::size_t extent);

/// `writeList i xs >> iqsort (i, |xs|)` refines `slowsort xs >>= writeList i`
/// for all xs with |xs| ≤ max_len over {0..alphabet-1}, offsets i < offsets.
RefinementResult<std::string> check_iqsort_refines_slowsort(std::size_t max_len, int alphabet, std::size_t offsets);

/// One instance of the swap refinement:
/// `writeList i (rcons (ys ++ zs) x) >> aswap (i + |ys|) (i + |ys ++ zs|)`
/// refines `qperm zs >>= λzs'. writeList i (ys ++ x :: zs')`.
RefinementResult<std::string> check_swap_rcons_refinement(std::size_t i, int x, const std::vector<int>& ys,
                                                          const std::vector<int>& zs);

/// All instances with |ys|, |zs| ≤ max_len and x over {0..alphabet-1}.
RefinementResult<std::string> check_swap_rcons_suite(std::size_t max_len, int alphabet, std::size_t offsets);

/// Every list of length at most max_len over {0..alphabet-1}.
std::vector<std::vector<int>> all_lists(std::size_t max_len, int alphabet);

}  // namespace monadic
