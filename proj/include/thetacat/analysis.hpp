#pragma once

// Segal maps, strict categories read off a precat, truncation and
// connectivity for strict-Segal inputs, and minimal dimension of maps of
// sets.

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "thetacat/category.hpp"
#include "thetacat/precat.hpp"
#include "thetacat/window.hpp"

namespace thetacat {

// ---------------------------------------------------------------------------
// Segal maps

struct SegalEntry {
  ThetaObject level;           // (P, p, T)
  std::size_t direction = 0;   // 0-based position of p
  int p = 0;
  std::size_t source_size = 0;
  std::uint64_t target_size = 0;  // iterated fiber product over A(P)
  std::size_t image_size = 0;
  bool injective = false;
  bool surjective = false;
  bool bijective() const { return injective && surjective; }
};

struct SegalReport {
  Window window;
  std::vector<SegalEntry> entries;

  bool strict() const {
    return std::all_of(entries.begin(), entries.end(), [](const SegalEntry& e) { return e.bijective(); });
  }
  std::optional<SegalEntry> first_failure() const {
    for (const auto& e : entries) {
      if (!e.bijective()) return e;
    }
    return std::nullopt;
  }
};

namespace detail {

// (P, 1, T) -> (P, p, T) hitting i, i+1 in direction d.
inline ThetaMorphism segal_face(const ThetaObject& m, std::size_t d, int i) {
  std::vector<int> src = m.entries();
  src[d] = 1;
  const ThetaObject s = ThetaObject::of(m.dim(), src);
  std::vector<MonotoneMap> lift;
  for (std::size_t j = 0; j < static_cast<std::size_t>(m.dim()); ++j) {
    if (j == d) {
      lift.push_back({i, i + 1});
    } else {
      lift.push_back(identity_map(m.padded(j)));
    }
  }
  return normalize_morphism(s, m, lift);
}

// (P) -> (P, 1, T) picking endpoint v in direction d.
inline ThetaMorphism segal_vertex(const ThetaObject& l1, std::size_t d, int v) {
  const std::vector<int> prefix(l1.entries().begin(), l1.entries().begin() + static_cast<std::ptrdiff_t>(d));
  const ThetaObject s = ThetaObject::of(l1.dim(), prefix);
  std::vector<MonotoneMap> lift;
  for (std::size_t j = 0; j < static_cast<std::size_t>(l1.dim()); ++j) {
    if (j < d) {
      lift.push_back(identity_map(l1[j]));
    } else if (j == d) {
      lift.push_back({v});
    } else {
      lift.push_back({0});
    }
  }
  return normalize_morphism(s, l1, lift);
}

}  // namespace detail

// The Segal maps in every direction at every window level with p >= 2.
inline SegalReport segal_check(const Precat& a, const Window& w) {
  SegalReport rep;
  rep.window = w;
  for (const auto& m : window_objects(a.dim(), w)) {
    for (std::size_t d = 0; d < m.length(); ++d) {
      const int p = m[d];
      if (p < 2) continue;
      SegalEntry e;
      e.level = m;
      e.direction = d;
      e.p = p;
      std::vector<std::shared_ptr<const Table>> faces;
      for (int i = 0; i < p; ++i) faces.push_back(a.restriction(detail::segal_face(m, d, i)));
      const ThetaObject l1 = detail::segal_face(m, d, 0).source();
      auto s0 = a.restriction(detail::segal_vertex(l1, d, 0));
      auto s1 = a.restriction(detail::segal_vertex(l1, d, 1));
      const std::size_t base = a.count(detail::segal_vertex(l1, d, 0).source());
      std::vector<std::uint64_t> dp(base, 0);
      for (std::size_t x = 0; x < s1->size(); ++x) ++dp[(*s1)[x]];
      for (int r = 1; r < p; ++r) {
        std::vector<std::uint64_t> next(base, 0);
        for (std::size_t x = 0; x < s1->size(); ++x) next[(*s1)[x]] += dp[(*s0)[x]];
        dp = std::move(next);
      }
      e.target_size = std::accumulate(dp.begin(), dp.end(), std::uint64_t{0});
      e.source_size = a.count(m);
      std::set<std::vector<Cell>> image;
      for (std::size_t c = 0; c < e.source_size; ++c) {
        std::vector<Cell> tuple;
        for (const auto& f : faces) tuple.push_back((*f)[c]);
        image.insert(std::move(tuple));
      }
      e.image_size = image.size();
      e.injective = e.image_size == e.source_size;
      e.surjective = e.image_size == e.target_size;
      rep.entries.push_back(e);
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Categories from strict-Segal data

// A partition of a finite set into classes numbered by first appearance.
struct Partition {
  std::vector<std::size_t> class_of;
  std::size_t count = 0;

  static Partition discrete(std::size_t n) {
    Partition p;
    p.class_of.resize(n);
    std::iota(p.class_of.begin(), p.class_of.end(), std::size_t{0});
    p.count = n;
    return p;
  }
  std::vector<std::vector<std::size_t>> classes() const {
    std::vector<std::vector<std::size_t>> out(count);
    for (std::size_t x = 0; x < class_of.size(); ++x) out[class_of[x]].push_back(x);
    return out;
  }
};

namespace detail {

inline ThetaObject first_level(int n, int p) { return ThetaObject::of(n, {p}); }

inline ThetaMorphism first_map(int n, const MonotoneMap& phi, int q) {
  return with_first(phi, q, identity(ThetaObject::zero(n - 1)));
}

// Map on classes induced by the restriction f between levels with the given
// partitions; throws when members of one class land in different classes.
inline std::vector<std::size_t> on_classes(const Precat& a, const ThetaMorphism& f, const Partition& src,
                                           const Partition& tgt) {
  auto r = a.restriction(f);
  std::vector<std::size_t> out(tgt.count, static_cast<std::size_t>(-1));
  for (std::size_t c = 0; c < r->size(); ++c) {
    const std::size_t img = src.class_of[(*r)[c]];
    std::size_t& slot = out[tgt.class_of[c]];
    if (slot == static_cast<std::size_t>(-1)) {
      slot = img;
    } else if (slot != img) {
      throw NotStrict("restriction along " + f.str() + " is not defined on equivalence classes");
    }
  }
  return out;
}

// The category whose objects, arrows and 2-simplices are the given classes
// of A at levels 0, 1, 2 (first direction, empty tail).
inline FiniteCategory category_of_classes(const Precat& a, const std::vector<Partition>& parts) {
  const int n = a.dim();
  const ThetaObject l1 = first_level(n, 1);
  const ThetaObject l2 = first_level(n, 2);
  auto a1_labels = a.labels(l1);
  auto a0_labels = a.labels(ThetaObject::zero(n));
  const auto src = on_classes(a, first_map(n, {0}, 1), parts[0], parts[1]);
  const auto tgt = on_classes(a, first_map(n, {1}, 1), parts[0], parts[1]);
  const auto ids = on_classes(a, first_map(n, {0, 0}, 0), parts[1], parts[0]);
  const auto d01 = on_classes(a, first_map(n, {0, 1}, 2), parts[1], parts[2]);
  const auto d12 = on_classes(a, first_map(n, {1, 2}, 2), parts[1], parts[2]);
  const auto d02 = on_classes(a, first_map(n, {0, 2}, 2), parts[1], parts[2]);

  FiniteCategory c;
  c.name = "C(" + a.name() + ")";
  const auto obj_classes = parts[0].classes();
  for (const auto& cl : obj_classes) c.objects.push_back((*a0_labels)[cl.front()]);
  const auto arr_classes = parts[1].classes();
  for (std::size_t f = 0; f < arr_classes.size(); ++f) {
    c.arrows.push_back({static_cast<int>(src[f]), static_cast<int>(tgt[f]), (*a1_labels)[arr_classes[f].front()]});
  }
  for (std::size_t x = 0; x < obj_classes.size(); ++x) c.ids.push_back(static_cast<int>(ids[x]));
  const std::size_t na = arr_classes.size();
  c.table.assign(na, std::vector<int>(na, FiniteCategory::none));
  std::size_t composable = 0;
  for (std::size_t f = 0; f < na; ++f) {
    for (std::size_t g = 0; g < na; ++g) composable += tgt[f] == src[g];
  }
  if (parts[2].count != composable) {
    throw NotStrict("Segal map at level 2 is not a bijection (" + std::to_string(parts[2].count) + " vs " +
                    std::to_string(composable) + ")");
  }
  for (std::size_t s = 0; s < parts[2].count; ++s) {
    int& slot = c.table[d12[s]][d01[s]];
    if (tgt[d01[s]] != src[d12[s]] || slot != FiniteCategory::none) {
      throw NotStrict("Segal map at level 2 is not a bijection");
    }
    slot = static_cast<int>(d02[s]);
  }
  if (auto p = c.problem(); !p.empty()) throw NotStrict("composition read off the precat fails: " + p);
  return c;
}

}  // namespace detail

// The 1-category read off levels 0, 1, 2 of a strict-Segal precat.
inline FiniteCategory category_from_nerve(const Precat& a, const Window& w = {}) {
  if (a.dim() < 1) throw InvalidArgument("category_from_nerve needs n >= 1");
  Window w1{std::max(w.B, 3), 1};
  std::vector<Partition> parts;
  for (int p = 0; p <= 2; ++p) parts.push_back(Partition::discrete(a.count(detail::first_level(a.dim(), p))));
  auto c = detail::category_of_classes(a, parts);
  for (const auto& e : segal_check(a, w1).entries) {
    if (!e.bijective()) {
      throw NotStrict("Segal map at " + e.level.str() + " has source " + std::to_string(e.source_size) +
                      " and target " + std::to_string(e.target_size));
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// tau_0, truncation, connectivity

// Isomorphism classes of objects of a finite category.
inline Partition iso_classes(const FiniteCategory& c) {
  const std::size_t no = c.num_objects();
  std::vector<std::size_t> parent(no);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t x = 0; x < no; ++x) {
    for (std::size_t y = x + 1; y < no; ++y) {
      bool iso = false;
      for (int f : c.hom(static_cast<int>(x), static_cast<int>(y))) {
        for (int g : c.hom(static_cast<int>(y), static_cast<int>(x))) {
          if (c.compose(g, f) == c.ids[x] && c.compose(f, g) == c.ids[y]) iso = true;
        }
      }
      if (iso) parent[find(y)] = find(x);
    }
  }
  Partition p;
  p.class_of.resize(no);
  std::map<std::size_t, std::size_t> number;
  for (std::size_t x = 0; x < no; ++x) {
    auto [it, fresh] = number.emplace(find(x), number.size());
    p.class_of[x] = it->second;
  }
  p.count = number.size();
  return p;
}

// tau_0 as a partition of the objects (level 0) of A. At n = 0 every cell is
// its own class; above, tau_0 of the rows A_{p/} gives a category whose
// isomorphism classes are returned.
inline Partition tau_zero(const Precat& a, const Window& w = {}) {
  const int n = a.dim();
  const std::size_t objects = a.count(ThetaObject::zero(n));
  if (n == 0) return Partition::discrete(objects);
  std::vector<Partition> parts{Partition::discrete(objects)};
  for (int p = 1; p <= 2; ++p) parts.push_back(tau_zero(row(a, p), w));
  return iso_classes(detail::category_of_classes(a, parts));
}

namespace impl {

// tau_{<=k}: levels of length < k as in A, and level M of length k is
// tau_0 of the iterated row A_{M/}.
class Truncation : public PrecatImpl {
 public:
  Truncation(Precat a, int k, Window w)
      : PrecatImpl(k, "tau<=" + std::to_string(k) + "(" + a.name() + ")"), a_(std::move(a)), w_(w) {
    if (k < 0 || k > a_.dim()) throw InvalidArgument("truncation degree out of range");
  }

  std::shared_ptr<const Partition> partition(const ThetaObject& m) const {
    return parts_.get(m, [&] {
      if (static_cast<int>(m.length()) < dim()) return Partition::discrete(a_.count(m.in_dim(a_.dim())));
      Precat r = a_;
      for (int e : m.entries()) r = row(r, e);
      return tau_zero(r, w_);
    });
  }

 protected:
  Labels make_labels(const ThetaObject& m) const override {
    auto part = partition(m);
    auto base = a_.labels(m.in_dim(a_.dim()));
    Labels out;
    const bool top = static_cast<int>(m.length()) == dim();
    for (const auto& cl : part->classes()) out.push_back(top ? "[" + (*base)[cl.front()] + "]" : (*base)[cl.front()]);
    return out;
  }

  Table make_restriction(const ThetaMorphism& f) const override {
    auto tgt = partition(f.target());
    auto src = partition(f.source());
    auto r = a_.restriction(embed(f, a_.dim()));
    Table t;
    for (const auto& cl : tgt->classes()) t.push_back(static_cast<Cell>(src->class_of[(*r)[cl.front()]]));
    return t;
  }

 private:
  Precat a_;
  Window w_;
  Memo<ThetaObject, Partition> parts_;
};

}  // namespace impl

inline Precat truncate(const Precat& a, int k, const Window& w = {}) {
  return make_precat<impl::Truncation>(a, k, w);
}

inline bool equivalent_to_point(const Precat& a, const Window& w = {}) {
  const int n = a.dim();
  const std::size_t objects = a.count(ThetaObject::zero(n));
  if (n == 0) return objects == 1;
  if (tau_zero(a, w).count != 1) return false;
  for (Cell x = 0; x < objects; ++x) {
    for (Cell y = 0; y < objects; ++y) {
      if (!equivalent_to_point(hom(a, x, y).object, w)) return false;
    }
  }
  return true;
}

inline bool is_k_connected(const Precat& a, int k, const Window& w = {}) {
  return equivalent_to_point(truncate(a, k, w), w);
}

// ---------------------------------------------------------------------------
// Minimal dimension of a map of sets

enum class MinDim0 { Zero, One, Infinite };

inline std::string to_string(MinDim0 m) {
  switch (m) {
    case MinDim0::Zero: return "0";
    case MinDim0::One: return "1";
    case MinDim0::Infinite: return "inf";
  }
  return "?";
}

inline MinDim0 min_dim_sets(const Table& f, std::size_t codomain_size) {
  std::vector<bool> hit(codomain_size, false);
  std::size_t distinct = 0;
  for (Cell c : f) {
    if (c >= codomain_size) throw DomainError("min_dim_sets: value outside the codomain");
    if (!hit[c]) ++distinct;
    hit[c] = true;
  }
  if (distinct < codomain_size) return MinDim0::Zero;
  return distinct == f.size() ? MinDim0::Infinite : MinDim0::One;
}

inline MinDim0 min_dim_sets(const PrecatMap& f) {
  if (f.dim() != 0) throw InvalidArgument("min_dim_sets is only defined at n = 0");
  const ThetaObject z = ThetaObject::zero(0);
  return min_dim_sets(*f.component(z), f.codomain().count(z));
}

}  // namespace thetacat
