#pragma once

// Extensional checks on a window: functoriality, naturality, cofibrations,
// isomorphism search and enumeration of maps.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thetacat/precat.hpp"
#include "thetacat/window.hpp"

namespace thetacat {

struct Violation {
  std::string kind;
  std::vector<ThetaMorphism> morphisms;
  Cell cell = 0;
  std::string detail;
};

struct FunctorialityReport {
  Window window;
  std::size_t morphisms_checked = 0;
  std::size_t pairs_checked = 0;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Identity and composition laws for every window morphism.
inline FunctorialityReport check_functoriality(const Precat& p, const Window& w,
                                               std::size_t max_violations = 20) {
  FunctorialityReport rep;
  rep.window = w;
  const int n = p.dim();
  const auto objs = window_objects(n, w);
  std::map<ThetaObject, std::vector<ThetaMorphism>> into;  // by target
  std::map<ThetaObject, std::vector<ThetaMorphism>> out_of;  // by source
  auto record = [&](Violation v) {
    if (rep.violations.size() < max_violations) rep.violations.push_back(std::move(v));
  };
  for (const auto& s : objs) {
    for (const auto& t : objs) {
      for (auto& f : enumerate_morphisms(s, t)) {
        ++rep.morphisms_checked;
        auto r = p.restriction(f);
        const std::size_t ns = p.count(s);
        if (r->size() != p.count(t)) {
          record({"size", {f}, 0, "restriction table has the wrong length"});
          continue;
        }
        for (std::size_t c = 0; c < r->size(); ++c) {
          if ((*r)[c] >= ns) record({"range", {f}, static_cast<Cell>(c), "restriction leaves its level"});
        }
        if (f.is_identity()) {
          for (std::size_t c = 0; c < r->size(); ++c) {
            if ((*r)[c] != c) record({"identity", {f}, static_cast<Cell>(c), "identity moves a cell"});
          }
        }
        into[t].push_back(f);
        out_of[s].push_back(f);
      }
    }
  }
  if (!rep.ok()) return rep;
  // (g o f)^* = f^* o g^* for f: M -> M', g: M' -> M''.
  for (const auto& mid : objs) {
    for (const auto& f : into[mid]) {
      auto rf = p.restriction(f);
      for (const auto& g : out_of[mid]) {
        ++rep.pairs_checked;
        auto rg = p.restriction(g);
        auto rgf = p.restriction(compose(g, f));
        for (std::size_t c = 0; c < rg->size(); ++c) {
          if ((*rgf)[c] != (*rf)[(*rg)[c]]) {
            record({"composition", {f, g}, static_cast<Cell>(c),
                    "acting by the composite differs from acting in turn"});
            break;
          }
        }
      }
    }
  }
  return rep;
}

// Naturality squares of u against the window generators.
inline std::vector<Violation> naturality_violations(const PrecatMap& u, const Window& w,
                                                    std::size_t max_violations = 20) {
  std::vector<Violation> out;
  for (const auto& f : window_generators(u.dim(), w)) {
    auto rp = u.domain().restriction(f);
    auto rq = u.codomain().restriction(f);
    auto us = u.component(f.source());
    auto ut = u.component(f.target());
    for (std::size_t c = 0; c < rp->size(); ++c) {
      if ((*us)[(*rp)[c]] != (*rq)[(*ut)[c]]) {
        out.push_back({"naturality", {f}, static_cast<Cell>(c), "square does not commute"});
        if (out.size() >= max_violations) return out;
        break;
      }
    }
  }
  return out;
}

inline bool is_natural(const PrecatMap& u, const Window& w) { return naturality_violations(u, w, 1).empty(); }

// Two maps agree on every window level.
inline bool maps_equal(const PrecatMap& a, const PrecatMap& b, const Window& w) {
  if (!same(a.domain(), b.domain()) || !same(a.codomain(), b.codomain())) return false;
  for (const auto& m : window_objects(a.dim(), w)) {
    if (*a.component(m) != *b.component(m)) return false;
  }
  return true;
}

inline bool is_injective_at(const PrecatMap& u, const ThetaObject& m) {
  auto t = *u.component(m);
  std::sort(t.begin(), t.end());
  return std::adjacent_find(t.begin(), t.end()) == t.end();
}

inline bool is_surjective_at(const PrecatMap& u, const ThetaObject& m) {
  auto t = *u.component(m);
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  return t.size() == u.codomain().count(m);
}

// Injective at every window level of non-maximal length.
inline bool is_cofibration(const PrecatMap& u, const Window& w) {
  const int n = u.dim();
  for (const auto& m : window_objects(n, w)) {
    if (static_cast<int>(m.length()) < n && !is_injective_at(u, m)) return false;
  }
  return true;
}

namespace detail {

// Levels, generators and restriction tables of a precat pair, indexed so the
// search below can run on plain integers.
struct WindowFrame {
  std::vector<ThetaObject> levels;  // search order
  std::map<ThetaObject, std::size_t> level_index;
  std::vector<ThetaMorphism> gens;
  std::vector<std::size_t> gen_source, gen_target;   // level indices
  std::vector<std::vector<std::size_t>> gens_into;   // level -> generators with that target
  std::vector<std::vector<std::size_t>> gens_out;    // level -> generators with that source

  WindowFrame(int n, const Window& w) {
    levels = search_order(window_objects(n, w));
    for (std::size_t i = 0; i < levels.size(); ++i) level_index[levels[i]] = i;
    gens = window_generators(n, w);
    gens_into.resize(levels.size());
    gens_out.resize(levels.size());
    for (std::size_t g = 0; g < gens.size(); ++g) {
      gen_source.push_back(level_index.at(gens[g].source()));
      gen_target.push_back(level_index.at(gens[g].target()));
      gens_into[gen_target.back()].push_back(g);
      gens_out[gen_source.back()].push_back(g);
    }
  }
};

struct SideTables {
  std::vector<std::size_t> counts;                             // per level
  std::vector<std::shared_ptr<const Table>> rest;              // per generator
  std::vector<std::vector<std::vector<std::pair<std::size_t, Cell>>>> preimages;  // level -> cell -> (gen, cell')

  SideTables(const Precat& p, const WindowFrame& fr) {
    for (const auto& m : fr.levels) counts.push_back(p.count(m));
    preimages.resize(fr.levels.size());
    for (std::size_t l = 0; l < fr.levels.size(); ++l) preimages[l].resize(counts[l]);
    for (std::size_t g = 0; g < fr.gens.size(); ++g) {
      rest.push_back(p.restriction(fr.gens[g]));
      const auto& r = *rest.back();
      for (std::size_t c = 0; c < r.size(); ++c) {
        preimages[fr.gen_source[g]][r[c]].push_back({g, static_cast<Cell>(c)});
      }
    }
  }
};

// Colour refinement run jointly on both sides so colours are comparable.
inline void refine_colours(const WindowFrame& fr, const SideTables& a, const SideTables& b,
                           std::vector<std::vector<int>>& ca, std::vector<std::vector<int>>& cb) {
  const std::size_t nl = fr.levels.size();
  ca.assign(nl, {});
  cb.assign(nl, {});
  for (std::size_t l = 0; l < nl; ++l) {
    ca[l].assign(a.counts[l], static_cast<int>(l));
    cb[l].assign(b.counts[l], static_cast<int>(l));
  }
  std::size_t colours = nl;
  while (true) {
    std::map<std::vector<long>, int> dict;
    auto step = [&](const SideTables& s, const std::vector<std::vector<int>>& old) {
      std::vector<std::vector<int>> next(nl);
      for (std::size_t l = 0; l < nl; ++l) {
        next[l].resize(s.counts[l]);
        for (std::size_t c = 0; c < s.counts[l]; ++c) {
          std::vector<long> sig{old[l][c]};
          for (std::size_t g : fr.gens_into[l]) {
            sig.push_back(static_cast<long>(g));
            sig.push_back(old[fr.gen_source[g]][(*s.rest[g])[c]]);
          }
          sig.push_back(-1);
          std::vector<long> in;
          for (auto [g, cp] : s.preimages[l][c]) {
            in.push_back(static_cast<long>(g) * 1000003L + old[fr.gen_target[g]][cp]);
          }
          std::sort(in.begin(), in.end());
          sig.insert(sig.end(), in.begin(), in.end());
          auto [it, fresh] = dict.emplace(std::move(sig), static_cast<int>(dict.size()));
          next[l][c] = it->second;
        }
      }
      return next;
    };
    auto na = step(a, ca);
    auto nb = step(b, cb);
    ca = std::move(na);
    cb = std::move(nb);
    if (dict.size() == colours) break;
    colours = dict.size();
  }
}

// Backtracking search for a natural family phi: P -> Q on the window.
// With bijective = true, phi must be a levelwise bijection respecting the
// colours; otherwise every natural map is a candidate.
class MapSearch {
 public:
  MapSearch(const WindowFrame& fr, const SideTables& a, const SideTables& b, bool bijective,
            const std::vector<std::vector<int>>* ca = nullptr, const std::vector<std::vector<int>>* cb = nullptr)
      : fr_(fr), a_(a), b_(b), bijective_(bijective), ca_(ca), cb_(cb) {
    for (std::size_t l = 0; l < fr.levels.size(); ++l) {
      for (std::size_t c = 0; c < a.counts[l]; ++c) order_.push_back({l, static_cast<Cell>(c)});
    }
    phi_.resize(fr.levels.size());
    used_.resize(fr.levels.size());
    for (std::size_t l = 0; l < fr.levels.size(); ++l) {
      phi_[l].assign(a.counts[l], unset);
      used_[l].assign(b.counts[l], false);
    }
  }

  // Calls visit(phi) for each solution until it returns false.
  template <class Visit>
  void run(Visit&& visit) {
    const std::size_t total = order_.size();
    std::vector<std::size_t> next(total + 1, 0);
    std::size_t pos = 0;
    while (true) {
      if (pos == total) {
        if (!visit(phi_)) return;
        if (total == 0) return;
        --pos;
        unassign(pos);
        continue;
      }
      auto [l, c] = order_[pos];
      bool placed = false;
      for (std::size_t d = next[pos]; d < b_.counts[l]; ++d) {
        if (bijective_ && used_[l][d]) continue;
        if (ca_ && (*ca_)[l][c] != (*cb_)[l][d]) continue;
        if (!consistent(l, c, static_cast<Cell>(d))) continue;
        phi_[l][c] = static_cast<Cell>(d);
        if (bijective_) used_[l][d] = true;
        next[pos] = d + 1;
        ++pos;
        next[pos] = 0;
        placed = true;
        break;
      }
      if (!placed) {
        next[pos] = 0;
        if (pos == 0) return;
        --pos;
        unassign(pos);
      }
    }
  }

 private:
  static constexpr Cell unset = static_cast<Cell>(-1);

  void unassign(std::size_t pos) {
    auto [l, c] = order_[pos];
    if (bijective_) used_[l][phi_[l][c]] = false;
    phi_[l][c] = unset;
  }

  bool consistent(std::size_t l, Cell c, Cell d) const {
    for (std::size_t g : fr_.gens_into[l]) {
      const std::size_t ls = fr_.gen_source[g];
      const Cell c0 = (*a_.rest[g])[c];
      if (ls == l && c0 == c) {
        if ((*b_.rest[g])[d] != d) return false;
        continue;
      }
      const Cell img = phi_[ls][c0];
      if (img != unset && img != (*b_.rest[g])[d]) return false;
    }
    for (auto [g, cp] : a_.preimages[l][c]) {
      const std::size_t lt = fr_.gen_target[g];
      const Cell img = phi_[lt][cp];
      if (img != unset && (*b_.rest[g])[img] != d) return false;
    }
    return true;
  }

  const WindowFrame& fr_;
  const SideTables& a_;
  const SideTables& b_;
  bool bijective_;
  const std::vector<std::vector<int>>* ca_;
  const std::vector<std::vector<int>>* cb_;
  std::vector<std::pair<std::size_t, Cell>> order_;
  std::vector<std::vector<Cell>> phi_;
  std::vector<std::vector<bool>> used_;
};

inline PrecatMap frame_map(const Precat& p, const Precat& q, const WindowFrame& fr,
                           const std::vector<std::vector<Cell>>& phi, std::string name) {
  std::map<ThetaObject, Table> tables;
  for (std::size_t l = 0; l < fr.levels.size(); ++l) tables[fr.levels[l]] = phi[l];
  return table_map(p, q, std::move(tables), std::move(name));
}

}  // namespace detail

// A levelwise bijection natural on the window, if one exists.
inline std::optional<PrecatMap> iso_windowed(const Precat& p, const Precat& q, const Window& w) {
  if (p.dim() != q.dim()) return std::nullopt;
  detail::WindowFrame fr(p.dim(), w);
  for (const auto& m : fr.levels) {
    if (p.count(m) != q.count(m)) return std::nullopt;
  }
  detail::SideTables a(p, fr);
  detail::SideTables b(q, fr);
  std::vector<std::vector<int>> ca, cb;
  detail::refine_colours(fr, a, b, ca, cb);
  for (std::size_t l = 0; l < fr.levels.size(); ++l) {
    auto x = ca[l];
    auto y = cb[l];
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return std::nullopt;
  }
  std::optional<PrecatMap> found;
  detail::MapSearch search(fr, a, b, true, &ca, &cb);
  search.run([&](const std::vector<std::vector<Cell>>& phi) {
    found = detail::frame_map(p, q, fr, phi, "iso");
    return false;
  });
  return found;
}

// The inverse of a windowed bijection.
inline PrecatMap invert(const PrecatMap& u, const Window& w) {
  std::map<ThetaObject, Table> tables;
  for (const auto& m : window_objects(u.dim(), w)) {
    auto t = u.component(m);
    Table inv(t->size());
    for (std::size_t c = 0; c < t->size(); ++c) inv[(*t)[c]] = static_cast<Cell>(c);
    tables[m] = std::move(inv);
  }
  return table_map(u.codomain(), u.domain(), std::move(tables), "inv");
}

// Every natural map P -> Q on the window (up to limit of them).
inline std::vector<PrecatMap> enumerate_maps(const Precat& p, const Precat& q, const Window& w,
                                             std::size_t limit = 100000) {
  detail::WindowFrame fr(p.dim(), w);
  detail::SideTables a(p, fr);
  detail::SideTables b(q, fr);
  std::vector<PrecatMap> out;
  detail::MapSearch search(fr, a, b, false);
  search.run([&](const std::vector<std::vector<Cell>>& phi) {
    out.push_back(detail::frame_map(p, q, fr, phi, "map"));
    return out.size() < limit;
  });
  return out;
}

}  // namespace thetacat
