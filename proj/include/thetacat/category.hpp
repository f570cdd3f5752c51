#pragma once

// Finite categories given by explicit composition tables.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "thetacat/errors.hpp"

namespace thetacat {

struct Arrow {
  int src = 0;
  int tgt = 0;
  std::string label;
};

class FiniteCategory {
 public:
  static constexpr int none = -1;

  std::string name;
  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::vector<int> ids;                  // object -> identity arrow
  std::vector<std::vector<int>> table;   // table[g][f] = g o f, or none

  std::size_t num_objects() const { return objects.size(); }
  std::size_t num_arrows() const { return arrows.size(); }

  int compose(int g, int f) const {
    if (arrows.at(static_cast<std::size_t>(f)).tgt != arrows.at(static_cast<std::size_t>(g)).src) {
      throw CompositionError("arrows " + arrows[static_cast<std::size_t>(g)].label + " and " +
                             arrows[static_cast<std::size_t>(f)].label + " are not composable");
    }
    return table[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)];
  }

  bool is_identity(int f) const { return ids[static_cast<std::size_t>(arrows[static_cast<std::size_t>(f)].src)] == f; }

  std::vector<int> hom(int x, int y) const {
    std::vector<int> out;
    for (std::size_t f = 0; f < arrows.size(); ++f) {
      if (arrows[f].src == x && arrows[f].tgt == y) out.push_back(static_cast<int>(f));
    }
    return out;
  }

  // Empty string when the table is a category; otherwise the first problem.
  std::string problem() const {
    const int no = static_cast<int>(objects.size());
    const int na = static_cast<int>(arrows.size());
    if (static_cast<int>(ids.size()) != no) return "identity list has the wrong length";
    if (static_cast<int>(table.size()) != na) return "composition table has the wrong size";
    for (const auto& a : arrows) {
      if (a.src < 0 || a.src >= no || a.tgt < 0 || a.tgt >= no) return "arrow " + a.label + " has a bad endpoint";
    }
    for (int x = 0; x < no; ++x) {
      const int i = ids[static_cast<std::size_t>(x)];
      if (i < 0 || i >= na || arrows[static_cast<std::size_t>(i)].src != x || arrows[static_cast<std::size_t>(i)].tgt != x) {
        return "identity of " + objects[static_cast<std::size_t>(x)] + " is not an endomorphism";
      }
    }
    auto at = [&](int g, int f) { return table[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)]; };
    auto arr = [&](int f) -> const Arrow& { return arrows[static_cast<std::size_t>(f)]; };
    for (int g = 0; g < na; ++g) {
      if (static_cast<int>(table[static_cast<std::size_t>(g)].size()) != na) return "composition table has the wrong size";
      for (int f = 0; f < na; ++f) {
        const int h = at(g, f);
        if (arr(f).tgt != arr(g).src) {
          if (h != none) return "composite defined on a non-composable pair";
          continue;
        }
        if (h < 0 || h >= na || arr(h).src != arr(f).src || arr(h).tgt != arr(g).tgt) {
          return "composite " + arr(g).label + "." + arr(f).label + " has wrong endpoints";
        }
      }
    }
    for (int f = 0; f < na; ++f) {
      if (at(f, ids[static_cast<std::size_t>(arr(f).src)]) != f || at(ids[static_cast<std::size_t>(arr(f).tgt)], f) != f) {
        return "identity law fails at " + arr(f).label;
      }
    }
    for (int f = 0; f < na; ++f) {
      for (int g = 0; g < na; ++g) {
        if (arr(f).tgt != arr(g).src) continue;
        for (int h = 0; h < na; ++h) {
          if (arr(g).tgt != arr(h).src) continue;
          if (at(h, at(g, f)) != at(at(h, g), f)) {
            return "associativity fails at " + arr(h).label + "," + arr(g).label + "," + arr(f).label;
          }
        }
      }
    }
    return "";
  }

  void validate() const {
    if (auto p = problem(); !p.empty()) throw ConstructionError("invalid category " + name + ": " + p);
  }
};

// Builds a category from its non-identity arrows; composites of two
// non-identity arrows are looked up by label in `composites` (missing
// composable pairs are an error). Identities are labelled "1_x".
inline FiniteCategory make_category(std::string name, std::vector<std::string> objects,
                                    std::vector<Arrow> nonidentity,
                                    const std::map<std::pair<std::string, std::string>, std::string>& composites) {
  FiniteCategory c;
  c.name = std::move(name);
  c.objects = std::move(objects);
  for (std::size_t x = 0; x < c.objects.size(); ++x) {
    c.ids.push_back(static_cast<int>(c.arrows.size()));
    c.arrows.push_back({static_cast<int>(x), static_cast<int>(x), "1_" + c.objects[x]});
  }
  for (auto& a : nonidentity) c.arrows.push_back(std::move(a));
  std::map<std::string, int> by_label;
  for (std::size_t f = 0; f < c.arrows.size(); ++f) {
    if (!by_label.emplace(c.arrows[f].label, static_cast<int>(f)).second) {
      throw ConstructionError("duplicate arrow label " + c.arrows[f].label);
    }
  }
  const std::size_t na = c.arrows.size();
  c.table.assign(na, std::vector<int>(na, FiniteCategory::none));
  for (std::size_t g = 0; g < na; ++g) {
    for (std::size_t f = 0; f < na; ++f) {
      if (c.arrows[f].tgt != c.arrows[g].src) continue;
      if (c.is_identity(static_cast<int>(g))) {
        c.table[g][f] = static_cast<int>(f);
      } else if (c.is_identity(static_cast<int>(f))) {
        c.table[g][f] = static_cast<int>(g);
      } else {
        auto it = composites.find({c.arrows[g].label, c.arrows[f].label});
        if (it == composites.end()) {
          throw ConstructionError("missing composite " + c.arrows[g].label + "." + c.arrows[f].label);
        }
        auto jt = by_label.find(it->second);
        if (jt == by_label.end()) throw ConstructionError("unknown composite label " + it->second);
        c.table[g][f] = jt->second;
      }
    }
  }
  c.validate();
  return c;
}

namespace categories {

inline FiniteCategory discrete(std::size_t k) {
  std::vector<std::string> obj;
  for (std::size_t i = 0; i < k; ++i) obj.push_back(std::to_string(i));
  return make_category(std::to_string(k) + "*", obj, {}, {});
}

inline FiniteCategory point() {
  auto c = discrete(1);
  c.name = "point";
  return c;
}

// 0 -> 1 -> ... -> k
inline FiniteCategory chain(int k) {
  std::vector<std::string> obj;
  for (int i = 0; i <= k; ++i) obj.push_back(std::to_string(i));
  std::vector<Arrow> arrows;
  auto lab = [](int i, int j) { return std::to_string(i) + ">" + std::to_string(j); };
  for (int i = 0; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) arrows.push_back({i, j, lab(i, j)});
  }
  std::map<std::pair<std::string, std::string>, std::string> comp;
  for (int i = 0; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      for (int l = j + 1; l <= k; ++l) comp[{lab(j, l), lab(i, j)}] = lab(i, l);
    }
  }
  return make_category(k == 1 ? "I" : "chain" + std::to_string(k), obj, arrows, comp);
}

inline FiniteCategory I() { return chain(1); }

// k objects, exactly one arrow between any two.
inline FiniteCategory contractible_groupoid(int k) {
  std::vector<std::string> obj;
  for (int i = 0; i < k; ++i) obj.push_back(std::to_string(i));
  std::vector<Arrow> arrows;
  auto lab = [](int i, int j) { return std::to_string(i) + "~" + std::to_string(j); };
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i != j) arrows.push_back({i, j, lab(i, j)});
    }
  }
  std::map<std::pair<std::string, std::string>, std::string> comp;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      for (int l = 0; l < k && i != j; ++l) {
        if (j == l) continue;
        comp[{lab(j, l), lab(i, j)}] = i == l ? "1_" + obj[static_cast<std::size_t>(i)] : lab(i, l);
      }
    }
  }
  return make_category(k == 2 ? "Ibar" : "groupoid" + std::to_string(k), obj, arrows, comp);
}

inline FiniteCategory Ibar() { return contractible_groupoid(2); }

// One object, arrows Z/m under addition.
inline FiniteCategory cyclic_group(int m) {
  std::vector<Arrow> arrows;
  auto lab = [](int a) { return "g" + std::to_string(a); };
  for (int a = 1; a < m; ++a) arrows.push_back({0, 0, lab(a)});
  std::map<std::pair<std::string, std::string>, std::string> comp;
  for (int a = 1; a < m; ++a) {
    for (int b = 1; b < m; ++b) comp[{lab(a), lab(b)}] = (a + b) % m == 0 ? "1_x" : lab((a + b) % m);
  }
  return make_category("Z/" + std::to_string(m), {"x"}, arrows, comp);
}

}  // namespace categories

// Whether some pair of bijections on objects and arrows carries one
// composition table onto the other.
inline bool isomorphic(const FiniteCategory& c, const FiniteCategory& d) {
  if (c.num_objects() != d.num_objects() || c.num_arrows() != d.num_arrows()) return false;
  const std::size_t no = c.num_objects();
  const std::size_t na = c.num_arrows();
  std::vector<int> perm(no);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool counts_ok = true;
    for (std::size_t x = 0; x < no && counts_ok; ++x) {
      for (std::size_t y = 0; y < no && counts_ok; ++y) {
        counts_ok = c.hom(static_cast<int>(x), static_cast<int>(y)).size() ==
                    d.hom(perm[x], perm[y]).size();
      }
    }
    if (!counts_ok) continue;
    std::vector<int> img(na, -1);
    std::vector<bool> used(na, false);
    // Identities are forced.
    for (std::size_t x = 0; x < no; ++x) {
      img[static_cast<std::size_t>(c.ids[x])] = d.ids[static_cast<std::size_t>(perm[x])];
      used[static_cast<std::size_t>(d.ids[static_cast<std::size_t>(perm[x])])] = true;
    }
    std::vector<int> order;
    for (std::size_t f = 0; f < na; ++f) {
      if (img[f] < 0) order.push_back(static_cast<int>(f));
    }
    auto consistent = [&](int f) {
      for (std::size_t g = 0; g < na; ++g) {
        if (img[g] < 0) continue;
        const int gi = static_cast<int>(g);
        for (auto [a, b] : {std::pair{gi, f}, std::pair{f, gi}}) {
          const int h = c.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
          if (h == FiniteCategory::none || img[static_cast<std::size_t>(h)] < 0) continue;
          if (d.table[static_cast<std::size_t>(img[static_cast<std::size_t>(a)])][static_cast<std::size_t>(img[static_cast<std::size_t>(b)])] !=
              img[static_cast<std::size_t>(h)]) {
            return false;
          }
        }
      }
      return true;
    };
    std::vector<std::size_t> next(order.size() + 1, 0);
    std::size_t pos = 0;
    bool found = false;
    while (true) {
      if (pos == order.size()) {
        found = true;
        break;
      }
      const int f = order[pos];
      const auto& a = c.arrows[static_cast<std::size_t>(f)];
      const auto cand = d.hom(perm[static_cast<std::size_t>(a.src)], perm[static_cast<std::size_t>(a.tgt)]);
      bool placed = false;
      for (std::size_t i = next[pos]; i < cand.size(); ++i) {
        const int t = cand[i];
        if (used[static_cast<std::size_t>(t)]) continue;
        img[static_cast<std::size_t>(f)] = t;
        if (!consistent(f)) {
          img[static_cast<std::size_t>(f)] = -1;
          continue;
        }
        used[static_cast<std::size_t>(t)] = true;
        next[pos] = i + 1;
        ++pos;
        next[pos] = 0;
        placed = true;
        break;
      }
      if (placed) continue;
      if (pos == 0) break;
      --pos;
      const int back = order[pos];
      used[static_cast<std::size_t>(img[static_cast<std::size_t>(back)])] = false;
      img[static_cast<std::size_t>(back)] = -1;
    }
    if (found) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// All categories with at most max_objects objects and at most max_arrows
// non-identity arrows, one per isomorphism class, in order of (objects,
// arrows). Stops after limit classes.
inline std::vector<FiniteCategory> enumerate_categories(int max_objects, int max_arrows,
                                                        std::size_t limit = 1000) {
  std::vector<FiniteCategory> out;
  for (int no = 1; no <= max_objects; ++no) {
    const int cells = no * no;
    for (int total = 0; total <= max_arrows; ++total) {
      // Hom counts (non-identity) summing to total.
      std::vector<int> h(static_cast<std::size_t>(cells), 0);
      std::vector<std::vector<int>> shapes;
      auto fill = [&](auto&& self, int idx, int left) -> void {
        if (idx == cells) {
          if (left == 0) shapes.push_back(h);
          return;
        }
        for (int v = 0; v <= left; ++v) {
          h[static_cast<std::size_t>(idx)] = v;
          self(self, idx + 1, left - v);
        }
        h[static_cast<std::size_t>(idx)] = 0;
      };
      fill(fill, 0, total);
      std::vector<FiniteCategory> found;
      for (const auto& shape : shapes) {
        FiniteCategory c;
        for (int x = 0; x < no; ++x) c.objects.push_back(std::to_string(x));
        for (int x = 0; x < no; ++x) {
          c.ids.push_back(static_cast<int>(c.arrows.size()));
          c.arrows.push_back({x, x, "1_" + std::to_string(x)});
        }
        for (int x = 0; x < no; ++x) {
          for (int y = 0; y < no; ++y) {
            for (int k = 0; k < shape[static_cast<std::size_t>(x * no + y)]; ++k) {
              c.arrows.push_back({x, y, "a" + std::to_string(c.arrows.size() - static_cast<std::size_t>(no))});
            }
          }
        }
        const std::size_t na = c.arrows.size();
        c.table.assign(na, std::vector<int>(na, FiniteCategory::none));
        std::vector<std::pair<int, int>> open;  // (g, f) non-identity composable
        for (std::size_t g = 0; g < na; ++g) {
          for (std::size_t f = 0; f < na; ++f) {
            if (c.arrows[f].tgt != c.arrows[g].src) continue;
            if (c.is_identity(static_cast<int>(g))) {
              c.table[g][f] = static_cast<int>(f);
            } else if (c.is_identity(static_cast<int>(f))) {
              c.table[g][f] = static_cast<int>(g);
            } else {
              open.push_back({static_cast<int>(g), static_cast<int>(f)});
            }
          }
        }
        auto assoc_ok = [&](int g, int f) {
          // Every triple touching the freshly set entry table[g][f].
          for (std::size_t h = 0; h < na; ++h) {
            if (c.arrows[h].src == c.arrows[static_cast<std::size_t>(g)].tgt) {
              const int hg = c.table[h][static_cast<std::size_t>(g)];
              const int gf = c.table[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)];
              if (hg >= 0 && gf >= 0) {
                const int l = c.table[h][static_cast<std::size_t>(gf)];
                const int r = c.table[static_cast<std::size_t>(hg)][static_cast<std::size_t>(f)];
                if (l >= 0 && r >= 0 && l != r) return false;
              }
            }
            if (c.arrows[static_cast<std::size_t>(f)].src == c.arrows[h].tgt) {
              const int fh = c.table[static_cast<std::size_t>(f)][h];
              const int gf = c.table[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)];
              if (fh >= 0 && gf >= 0) {
                const int l = c.table[static_cast<std::size_t>(g)][static_cast<std::size_t>(fh)];
                const int r = c.table[static_cast<std::size_t>(gf)][h];
                if (l >= 0 && r >= 0 && l != r) return false;
              }
            }
          }
          return true;
        };
        auto search = [&](auto&& self, std::size_t i) -> void {
          if (out.size() + found.size() >= limit) return;
          if (i == open.size()) {
            if (!c.problem().empty()) return;
            for (const auto& prev : found) {
              if (isomorphic(prev, c)) return;
            }
            found.push_back(c);
            return;
          }
          auto [g, f] = open[i];
          for (int cand : c.hom(c.arrows[static_cast<std::size_t>(f)].src, c.arrows[static_cast<std::size_t>(g)].tgt)) {
            c.table[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)] = cand;
            bool ok = true;
            for (std::size_t j = 0; j <= i && ok; ++j) ok = assoc_ok(open[j].first, open[j].second);
            if (ok) self(self, i + 1);
          }
          c.table[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)] = FiniteCategory::none;
        };
        search(search, 0);
      }
      for (auto& c : found) {
        c.name = "cat" + std::to_string(out.size());
        out.push_back(std::move(c));
        if (out.size() >= limit) return out;
      }
    }
  }
  return out;
}

}  // namespace thetacat
