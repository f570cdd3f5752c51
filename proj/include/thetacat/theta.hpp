#pragma once

// The site Theta^n: objects are tuples of positive integers of length <= n,
// morphisms are componentwise monotone maps of Delta^n taken modulo the
// identification that discards everything after the first constant
// component.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "thetacat/errors.hpp"

namespace thetacat {

// Image list of an order-preserving map {0..s} -> {0..t}.
using MonotoneMap = std::vector<int>;

inline bool is_constant(const MonotoneMap& f) {
  return std::adjacent_find(f.begin(), f.end(), std::not_equal_to<>()) == f.end();
}

inline bool is_monotone(const MonotoneMap& f) {
  return std::is_sorted(f.begin(), f.end());
}

inline MonotoneMap identity_map(int m) {
  MonotoneMap f(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) f[static_cast<std::size_t>(i)] = i;
  return f;
}

inline MonotoneMap constant_map(int source, int value) {
  return MonotoneMap(static_cast<std::size_t>(source) + 1, value);
}

// g then f, i.e. f o g.
inline MonotoneMap after(const MonotoneMap& f, const MonotoneMap& g) {
  MonotoneMap out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = f[static_cast<std::size_t>(g[i])];
  return out;
}

// All monotone maps {0..s} -> {0..t}, lexicographic.
inline std::vector<MonotoneMap> monotone_maps(int s, int t) {
  std::vector<MonotoneMap> out;
  MonotoneMap cur(static_cast<std::size_t>(s) + 1, 0);
  while (true) {
    out.push_back(cur);
    int i = s;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == t) --i;
    if (i < 0) break;
    int v = cur[static_cast<std::size_t>(i)] + 1;
    for (int j = i; j <= s; ++j) cur[static_cast<std::size_t>(j)] = v;
  }
  return out;
}

inline std::string map_str(const MonotoneMap& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(f[i]);
  }
  return s + "]";
}

class ThetaObject {
 public:
  ThetaObject() = default;

  // Truncates at the first zero; rejects negatives and over-long tuples.
  static ThetaObject of(int n, const std::vector<int>& entries) {
    if (n < 0) throw InvalidObject("negative ambient dimension");
    ThetaObject m;
    m.n_ = n;
    for (int e : entries) {
      if (e < 0) throw InvalidObject("negative entry in Theta object");
      if (e == 0) break;
      m.entries_.push_back(e);
    }
    if (m.entries_.size() > static_cast<std::size_t>(n)) {
      throw InvalidObject("object of length " + std::to_string(m.entries_.size()) +
                          " in Theta^" + std::to_string(n));
    }
    return m;
  }

  static ThetaObject zero(int n) { return of(n, {}); }

  int dim() const { return n_; }
  std::size_t length() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  const std::vector<int>& entries() const { return entries_; }
  int operator[](std::size_t j) const { return entries_[j]; }

  // Entry of the zero-padded Delta^n tuple.
  int padded(std::size_t j) const { return j < entries_.size() ? entries_[j] : 0; }

  int max_entry() const {
    return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
  }

  int entry_sum() const {
    int s = 0;
    for (int e : entries_) s += e;
    return s;
  }

  // Drops the first coordinate; (p, T) -> T in Theta^{n-1}.
  ThetaObject tail() const {
    if (n_ == 0) throw InvalidObject("tail of a Theta^0 object");
    ThetaObject t;
    t.n_ = n_ - 1;
    if (!entries_.empty()) t.entries_.assign(entries_.begin() + 1, entries_.end());
    return t;
  }

  // Drops the first k coordinates.
  ThetaObject drop(std::size_t k) const {
    ThetaObject t = *this;
    for (std::size_t i = 0; i < k; ++i) t = t.tail();
    return t;
  }

  // (p, this) in Theta^{n+1}; p == 0 gives the zero object.
  ThetaObject prepend(int p) const {
    if (p < 0) throw InvalidObject("negative entry in Theta object");
    if (p == 0) return zero(n_ + 1);
    ThetaObject t;
    t.n_ = n_ + 1;
    t.entries_.push_back(p);
    t.entries_.insert(t.entries_.end(), entries_.begin(), entries_.end());
    return t;
  }

  // The same tuple read in Theta^m, m >= length.
  ThetaObject in_dim(int m) const { return of(m, entries_); }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(entries_[i]);
    }
    return s + ")";
  }

  // Canonical order: dimension, then length, then entries lexicographically.
  friend std::strong_ordering operator<=>(const ThetaObject& a, const ThetaObject& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.entries_.size() <=> b.entries_.size(); c != 0) return c;
    return a.entries_ <=> b.entries_;
  }
  friend bool operator==(const ThetaObject&, const ThetaObject&) = default;

  friend std::ostream& operator<<(std::ostream& os, const ThetaObject& m) { return os << m.str(); }

 private:
  int n_ = 0;
  std::vector<int> entries_;
};

class ThetaMorphism;
ThetaMorphism normalize_morphism(const ThetaObject& source, const ThetaObject& target,
                                 const std::vector<MonotoneMap>& lift);

// A morphism source -> target. Components are stored up to and including the
// first constant one; a component out of a zero-padded source position is a
// map {0} -> {0..t} and counts as constant.
class ThetaMorphism {
 public:
  ThetaMorphism() = default;

  const ThetaObject& source() const { return source_; }
  const ThetaObject& target() const { return target_; }
  const std::vector<MonotoneMap>& components() const { return components_; }
  int dim() const { return source_.dim(); }

  bool is_identity() const { return source_ == target_ && *this == normalize_morphism(source_, target_, identity_lift(source_)); }

  // Stored components padded with arbitrary (constant 0) maps to a full
  // Delta^n lift. Any lift of the class would do.
  std::vector<MonotoneMap> lift() const {
    std::vector<MonotoneMap> out = components_;
    for (std::size_t j = components_.size(); j < static_cast<std::size_t>(dim()); ++j) {
      out.push_back(constant_map(source_.padded(j), 0));
    }
    return out;
  }

  // The Theta^{n-1} morphism formed by components 2..n. Only meaningful when
  // the first component is not constant.
  ThetaMorphism tail() const {
    if (dim() == 0 || components_.empty() || is_constant(components_.front())) {
      throw InvalidMorphism("tail of a morphism whose first component is constant");
    }
    ThetaMorphism t;
    t.source_ = source_.tail();
    t.target_ = target_.tail();
    t.components_.assign(components_.begin() + 1, components_.end());
    return t;
  }

  // Drops the first k components (all assumed non-constant).
  ThetaMorphism drop(std::size_t k) const {
    ThetaMorphism t = *this;
    for (std::size_t i = 0; i < k; ++i) t = t.tail();
    return t;
  }

  std::string str() const {
    std::string s = source_.str() + "->" + target_.str() + "{";
    for (std::size_t i = 0; i < components_.size(); ++i) {
      if (i) s += ';';
      s += map_str(components_[i]);
    }
    return s + "}";
  }

  static std::vector<MonotoneMap> identity_lift(const ThetaObject& m) {
    std::vector<MonotoneMap> lift;
    for (int j = 0; j < m.dim(); ++j) lift.push_back(identity_map(m.padded(static_cast<std::size_t>(j))));
    return lift;
  }

  friend std::strong_ordering operator<=>(const ThetaMorphism& a, const ThetaMorphism& b) {
    if (auto c = a.source_ <=> b.source_; c != 0) return c;
    if (auto c = a.target_ <=> b.target_; c != 0) return c;
    return a.components_ <=> b.components_;
  }
  friend bool operator==(const ThetaMorphism&, const ThetaMorphism&) = default;

  friend std::ostream& operator<<(std::ostream& os, const ThetaMorphism& f) { return os << f.str(); }

 private:
  friend ThetaMorphism normalize_morphism(const ThetaObject&, const ThetaObject&,
                                          const std::vector<MonotoneMap>&);
  ThetaObject source_;
  ThetaObject target_;
  std::vector<MonotoneMap> components_;
};

inline ThetaMorphism normalize_morphism(const ThetaObject& source, const ThetaObject& target,
                                        const std::vector<MonotoneMap>& lift) {
  if (source.dim() != target.dim()) throw InvalidMorphism("endpoints in different Theta^n");
  const int n = source.dim();
  if (lift.size() != static_cast<std::size_t>(n)) {
    throw InvalidMorphism("lift has " + std::to_string(lift.size()) + " components, expected " +
                          std::to_string(n));
  }
  ThetaMorphism f;
  f.source_ = source;
  f.target_ = target;
  for (std::size_t j = 0; j < lift.size(); ++j) {
    const MonotoneMap& c = lift[j];
    const int s = source.padded(j);
    const int t = target.padded(j);
    if (c.size() != static_cast<std::size_t>(s) + 1) {
      throw InvalidMorphism("component " + std::to_string(j + 1) + " has wrong source size");
    }
    if (!is_monotone(c)) throw InvalidMorphism("component " + std::to_string(j + 1) + " is not monotone");
    for (int v : c) {
      if (v < 0 || v > t) throw InvalidMorphism("component " + std::to_string(j + 1) + " leaves its target");
    }
  }
  for (const MonotoneMap& c : lift) {
    f.components_.push_back(c);
    if (is_constant(c)) break;
  }
  return f;
}

inline ThetaMorphism identity(const ThetaObject& m) {
  return normalize_morphism(m, m, ThetaMorphism::identity_lift(m));
}

// f o g, defined when target(g) == source(f).
inline ThetaMorphism compose(const ThetaMorphism& f, const ThetaMorphism& g) {
  if (g.target() != f.source()) {
    throw CompositionError("cannot compose " + f.str() + " after " + g.str());
  }
  const auto lf = f.lift();
  const auto lg = g.lift();
  std::vector<MonotoneMap> lift(lf.size());
  for (std::size_t j = 0; j < lf.size(); ++j) lift[j] = after(lf[j], lg[j]);
  return normalize_morphism(g.source(), f.target(), lift);
}

namespace detail {

inline void enumerate_from(const ThetaObject& s, const ThetaObject& t, std::size_t j,
                           std::vector<MonotoneMap>& prefix, std::vector<ThetaMorphism>& out) {
  const int n = s.dim();
  if (j == static_cast<std::size_t>(n)) {
    out.push_back(normalize_morphism(s, t, prefix));
    return;
  }
  for (const MonotoneMap& c : monotone_maps(s.padded(j), t.padded(j))) {
    prefix.push_back(c);
    if (is_constant(c)) {
      auto lift = prefix;
      for (std::size_t k = j + 1; k < static_cast<std::size_t>(n); ++k) {
        lift.push_back(constant_map(s.padded(k), 0));
      }
      out.push_back(normalize_morphism(s, t, lift));
    } else {
      enumerate_from(s, t, j + 1, prefix, out);
    }
    prefix.pop_back();
  }
}

}  // namespace detail

// Every normal form source -> target, in lexicographic order of components.
inline std::vector<ThetaMorphism> enumerate_morphisms(const ThetaObject& source,
                                                      const ThetaObject& target) {
  if (source.dim() != target.dim()) throw InvalidMorphism("endpoints in different Theta^n");
  std::vector<ThetaMorphism> out;
  if (source.dim() == 0) {
    out.push_back(identity(source));
    return out;
  }
  std::vector<MonotoneMap> prefix;
  detail::enumerate_from(source, target, 0, prefix, out);
  return out;
}

// The unique morphism M -> 0.
inline ThetaMorphism to_zero(const ThetaObject& m) {
  std::vector<MonotoneMap> lift;
  for (int j = 0; j < m.dim(); ++j) lift.push_back(constant_map(m.padded(static_cast<std::size_t>(j)), 0));
  return normalize_morphism(m, ThetaObject::zero(m.dim()), lift);
}

// 0 -> M picking vertex i in the first direction.
inline ThetaMorphism vertex(const ThetaObject& m, int i) {
  if (m.dim() == 0) throw InvalidArgument("vertex in Theta^0");
  std::vector<MonotoneMap> lift{MonotoneMap{i}};
  for (int j = 1; j < m.dim(); ++j) lift.push_back(MonotoneMap{0});
  return normalize_morphism(ThetaObject::zero(m.dim()), m, lift);
}

// (p, g.source) -> (q, g.target) with first component phi: {0..p} -> {0..q}.
inline ThetaMorphism with_first(const MonotoneMap& phi, int q, const ThetaMorphism& g) {
  const int p = static_cast<int>(phi.size()) - 1;
  const ThetaObject s = g.source().prepend(p);
  const ThetaObject t = g.target().prepend(q);
  std::vector<MonotoneMap> lift{phi};
  const auto tail = g.lift();
  for (std::size_t j = 0; j < tail.size(); ++j) {
    // Positions after a zero first entry only need a valid map.
    if (p == 0 || q == 0) {
      lift.push_back(constant_map(s.padded(j + 1), 0));
    } else {
      lift.push_back(tail[j]);
    }
  }
  return normalize_morphism(s, t, lift);
}

// Reads a Theta^k morphism inside Theta^n (n >= k) by zero padding.
inline ThetaMorphism embed(const ThetaMorphism& f, int n) {
  const ThetaObject s = f.source().in_dim(n);
  const ThetaObject t = f.target().in_dim(n);
  auto lift = f.lift();
  for (int j = f.dim(); j < n; ++j) lift.push_back(MonotoneMap{0});
  return normalize_morphism(s, t, lift);
}

// The Segal faces (1, tail) -> (p, tail): 0 -> i, 1 -> i+1, identity on tail.
inline std::vector<ThetaMorphism> segal_face_family(int p, const ThetaObject& tail) {
  if (p < 1) throw InvalidArgument("Segal faces need p >= 1");
  std::vector<ThetaMorphism> out;
  for (int i = 0; i < p; ++i) out.push_back(with_first(MonotoneMap{i, i + 1}, p, identity(tail)));
  return out;
}

}  // namespace thetacat
