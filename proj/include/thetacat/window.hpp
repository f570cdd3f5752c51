#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "thetacat/theta.hpp"

namespace thetacat {

// Finite set of levels used for every extensional check: objects with all
// entries <= B and length <= L (L < 0 means the ambient dimension).
struct Window {
  int B = 3;
  int L = -1;

  int length_bound(int n) const { return L < 0 ? n : std::min(L, n); }
  bool contains(const ThetaObject& m) const {
    return static_cast<int>(m.length()) <= length_bound(m.dim()) && m.max_entry() <= B;
  }
};

// Window objects in canonical order.
inline std::vector<ThetaObject> window_objects(int n, const Window& w) {
  if (w.B < 1) throw InvalidArgument("window bound B must be >= 1");
  std::vector<ThetaObject> out{ThetaObject::zero(n)};
  std::vector<std::vector<int>> frontier{{}};
  for (int len = 1; len <= w.length_bound(n); ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& e : frontier) {
      for (int v = 1; v <= w.B; ++v) {
        auto f = e;
        f.push_back(v);
        next.push_back(f);
      }
    }
    for (const auto& e : next) out.push_back(ThetaObject::of(n, e));
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Ordering used by the isomorphism search: length, then entry sum.
inline std::vector<ThetaObject> search_order(std::vector<ThetaObject> objs) {
  std::stable_sort(objs.begin(), objs.end(), [](const ThetaObject& a, const ThetaObject& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.entry_sum() < b.entry_sum();
  });
  return objs;
}

inline std::vector<ThetaMorphism> window_morphisms(int n, const Window& w) {
  const auto objs = window_objects(n, w);
  std::vector<ThetaMorphism> out;
  for (const auto& s : objs) {
    for (const auto& t : objs) {
      auto fs = enumerate_morphisms(s, t);
      out.insert(out.end(), fs.begin(), fs.end());
    }
  }
  return out;
}

// Images of the elementary faces and degeneracies of Delta^n between window
// objects. Every window morphism is a composite of these through window
// objects, so naturality against them is naturality on the window.
inline std::vector<ThetaMorphism> window_generators(int n, const Window& w) {
  std::set<ThetaMorphism> gens;
  const int lmax = w.length_bound(n);
  for (const auto& t : window_objects(n, w)) {
    const std::size_t top = std::min<std::size_t>(t.length() + 1, static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < top; ++j) {
      const int m = t.padded(j);
      auto make = [&](const MonotoneMap& c, int src_entry) {
        std::vector<int> src = t.entries();
        if (j < src.size()) {
          src[j] = src_entry;
        } else {
          src.push_back(src_entry);
        }
        const ThetaObject s = ThetaObject::of(n, src);
        if (!w.contains(s)) return;
        std::vector<MonotoneMap> lift;
        for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) {
          if (k == j) {
            lift.push_back(c);
          } else if (s.padded(k) == t.padded(k)) {
            lift.push_back(identity_map(t.padded(k)));
          } else {
            lift.push_back(constant_map(s.padded(k), 0));
          }
        }
        gens.insert(normalize_morphism(s, t, lift));
      };
      // faces {0..m-1} -> {0..m} skipping i
      for (int i = 0; i <= m && m >= 1; ++i) {
        MonotoneMap c;
        for (int x = 0; x <= m; ++x) {
          if (x != i) c.push_back(x);
        }
        make(c, m - 1);
      }
      // degeneracies {0..m+1} -> {0..m} hitting i twice
      if (m + 1 <= w.B && (j < t.length() || static_cast<int>(t.length()) + 1 <= lmax)) {
        for (int i = 0; i <= m; ++i) {
          MonotoneMap c;
          for (int x = 0; x <= m + 1; ++x) c.push_back(x <= i ? x : x - 1);
          make(c, m + 1);
        }
      }
    }
  }
  return {gens.begin(), gens.end()};
}

}  // namespace thetacat
