#pragma once

// Human-readable rendering of the values that appear in law instances and
// denotations. All overloads are declared before any is defined so that
// nested standard containers resolve to the right overload.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace monadic {

/// The unit value `tt`.
struct Unit {
  friend constexpr auto operator<=>(Unit, Unit) = default;
};

inline constexpr Unit tt{};

/// A value together with the label used to render it. Generated functions
/// and computations cannot print themselves, so they travel with a name.
template <class T>
struct Named {
  std::string name;
  T value;
};

std::string show(bool b);
std::string show(int n);
std::string show(long n);
std::string show(long long n);
std::string show(unsigned n);
std::string show(unsigned long n);
std::string show(unsigned long long n);
std::string show(const std::string& s);
std::string show(Unit);

template <class T>
std::string show(const Named<T>& n);
template <class A, class B>
std::string show(const std::pair<A, B>& p);
template <class... Ts>
std::string show(const std::tuple<Ts...>& t);
template <class T>
std::string show(const std::vector<T>& v);
template <class T>
std::string show(const std::set<T>& s);
template <class K, class V>
std::string show(const std::map<K, V>& m);
template <class T>
std::string show(const std::optional<T>& o);

template <class T>
std::string show(const Named<T>& n) {
  return n.name;
}

template <class A, class B>
std::string show(const std::pair<A, B>& p) {
  return "(" + show(p.first) + ", " + show(p.second) + ")";
}

template <class... Ts>
std::string show(const std::tuple<Ts...>& t) {
  std::string out = "(";
  std::apply(
      [&out](const auto&... xs) {
        std::size_t k = 0;
        ((out += (k++ ? ", " : "") + show(xs)), ...);
      },
      t);
  return out + ")";
}

template <class T>
std::string show(const std::vector<T>& v) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ";";
    out += show(v[k]);
  }
  return out + "]";
}

template <class T>
std::string show(const std::set<T>& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& x : s) {
    if (!first) out += ", ";
    first = false;
    out += show(x);
  }
  return out + "}";
}

template <class K, class V>
std::string show(const std::map<K, V>& m) {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, v] : m) {
    if (!first) out += ", ";
    first = false;
    out += show(k) + "↦" + show(v);
  }
  return out + "}";
}

template <class T>
std::string show(const std::optional<T>& o) {
  return o ? "Some " + show(*o) : std::string("None");
}

/// Usable from class members named show; resolves by ADL at instantiation.
template <class T>
std::string show_value(const T& x) {
  return show(x);
}

}  // namespace monadic
