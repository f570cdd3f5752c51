#pragma once

// Named constructions: nerves, Upsilon and its faces, cells, sigma^k,
// suspension, the delooping X, the Whitehead sub-presheaf, pushout-products,
// Q, the monoidal delooping c^k and the objects of the codiagonal claim.

#include <functional>
#include <numeric>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "thetacat/category.hpp"
#include "thetacat/checks.hpp"
#include "thetacat/keyed.hpp"
#include "thetacat/precat.hpp"

namespace thetacat {

struct PointedPrecat {
  Precat space;
  Cell point = 0;
};

// ---------------------------------------------------------------------------
// Nerve

namespace impl {

// Level (p, T) holds the composable p-chains, independent of T.
class Nerve : public Keyed {
 public:
  Nerve(FiniteCategory c, int n) : Keyed(n, "N(" + c.name + ")"), c_(std::move(c)) {
    if (n < 1) throw InvalidArgument("nerve needs n >= 1");
    c_.validate();
  }

  const FiniteCategory& category() const { return c_; }

  Key act_key(const ThetaMorphism& f, const Key& k) const override {
    const ThetaObject& s = f.source();
    const ThetaObject& t = f.target();
    std::vector<long> verts;
    if (t.is_zero()) {
      verts = {k[0]};
    } else {
      verts.push_back(c_.arrows[static_cast<std::size_t>(k[0])].src);
      for (long a : k) verts.push_back(c_.arrows[static_cast<std::size_t>(a)].tgt);
    }
    const MonotoneMap& phi = f.components().front();
    if (s.is_zero()) return {verts[static_cast<std::size_t>(phi[0])]};
    Key out;
    for (std::size_t j = 1; j < phi.size(); ++j) {
      const int lo = phi[j - 1];
      const int hi = phi[j];
      long arrow = c_.ids[static_cast<std::size_t>(verts[static_cast<std::size_t>(hi)])];
      if (lo < hi) {
        arrow = k[static_cast<std::size_t>(lo)];
        for (int i = lo + 1; i < hi; ++i) {
          arrow = c_.table[static_cast<std::size_t>(k[static_cast<std::size_t>(i)])][static_cast<std::size_t>(arrow)];
        }
      }
      out.push_back(arrow);
    }
    return out;
  }

 protected:
  std::vector<Key> make_keys(const ThetaObject& m) const override {
    std::vector<Key> out;
    if (m.is_zero()) {
      for (std::size_t x = 0; x < c_.num_objects(); ++x) out.push_back({static_cast<long>(x)});
      return out;
    }
    Key cur;
    auto extend = [&](auto&& self, int len) -> void {
      if (len == m[0]) {
        out.push_back(cur);
        return;
      }
      for (std::size_t a = 0; a < c_.num_arrows(); ++a) {
        if (!cur.empty() && c_.arrows[a].src != c_.arrows[static_cast<std::size_t>(cur.back())].tgt) continue;
        cur.push_back(static_cast<long>(a));
        self(self, len + 1);
        cur.pop_back();
      }
    };
    extend(extend, 0);
    return out;
  }

  std::string key_label(const ThetaObject& m, const Key& k) const override {
    if (m.is_zero()) return c_.objects[static_cast<std::size_t>(k[0])];
    std::string s = "[";
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (i) s += '|';
      s += c_.arrows[static_cast<std::size_t>(k[i])].label;
    }
    return s + "]";
  }

 private:
  FiniteCategory c_;
};

}  // namespace impl

inline Precat nerve(const FiniteCategory& c, int n) { return make_precat<impl::Nerve>(c, n); }

// The precat map induced by a functor, given on objects and arrows.
inline PrecatMap nerve_map(const Precat& source, const Precat& target, std::vector<long> on_objects,
                           std::vector<long> on_arrows) {
  const auto& s = dynamic_cast<const impl::Nerve&>(keyed(source));
  if (on_objects.size() != s.category().num_objects() || on_arrows.size() != s.category().num_arrows()) {
    throw InvalidArgument("nerve_map: functor tables have the wrong size");
  }
  return PrecatMap(source, target, [source, target, on_objects, on_arrows](const ThetaObject& m) {
    const auto& ks = keyed(source);
    const auto& kt = keyed(target);
    auto lv = ks.level(m);
    Table t;
    for (const auto& k : lv->keys) {
      Key img;
      for (long x : k) img.push_back(m.is_zero() ? on_objects[static_cast<std::size_t>(x)] : on_arrows[static_cast<std::size_t>(x)]);
      t.push_back(kt.index(m, img));
    }
    return t;
  }, "N(F)");
}

// The identity on cells between two precats built by the same formula.
inline PrecatMap relabel(const Precat& from, const Precat& to) {
  return PrecatMap(from, to, [from, to](const ThetaObject& m) {
    const std::size_t c = from.count(m);
    if (to.count(m) != c) throw ConstructionError("relabel between precats of different size at " + m.str());
    Table t(c);
    std::iota(t.begin(), t.end(), Cell{0});
    return t;
  }, "relabel");
}

// Objects of a category as a discrete sub-precat of its nerve.
inline PrecatMap objects_inclusion(const Precat& objects, const Precat& nerve_precat) {
  return PrecatMap(objects, nerve_precat, [objects, nerve_precat](const ThetaObject& m) {
    Table t;
    for (Cell x = 0; x < objects.count(ThetaObject::zero(m.dim())); ++x) t.push_back(nerve_precat.degeneracy(x, m));
    return t;
  }, "obj");
}

// ---------------------------------------------------------------------------
// Upsilon

// Which morphism objects a non-constant y: [p] -> [k] collects. Corrected
// takes E_i for y_0 < i <= y_p. PreErratum starts at y_0 (with E_0 read as
// the point), as in the formula before correction.
enum class Indexing { Corrected, PreErratum };

namespace impl {

class Upsilon : public Keyed {
 public:
  Upsilon(std::vector<Precat> e, Indexing ix)
      : Keyed(check(e), "U(" + joined(e) + ")"), e_(std::move(e)), ix_(ix) {}

  const std::vector<Precat>& factors() const { return e_; }
  int k() const { return static_cast<int>(e_.size()); }
  Indexing indexing() const { return ix_; }

  // Factor indices (1-based) collected by y; empty for constant y.
  std::vector<int> range(const std::vector<long>& y) const {
    std::vector<int> out;
    const long y0 = y.front();
    const long yp = y.back();
    if (y0 == yp) return out;
    const long lo = ix_ == Indexing::Corrected ? y0 + 1 : std::max<long>(y0, 1);
    for (long i = lo; i <= yp; ++i) out.push_back(static_cast<int>(i));
    return out;
  }

  const Precat& factor(int i) const { return e_[static_cast<std::size_t>(i - 1)]; }

  Key act_key(const ThetaMorphism& f, const Key& key) const override {
    const ThetaObject& s = f.source();
    const ThetaObject& t = f.target();
    if (t.is_zero()) {
      if (s.is_zero()) return key;
      return Key(static_cast<std::size_t>(s[0]) + 1, key[0]);
    }
    const std::size_t p = static_cast<std::size_t>(t[0]);
    const MonotoneMap& phi = f.components().front();
    if (s.is_zero()) return {key[static_cast<std::size_t>(phi[0])]};
    std::vector<long> y(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(p) + 1);
    Key out;
    for (int v : phi) out.push_back(y[static_cast<std::size_t>(v)]);
    const auto r_new = range(out);
    if (r_new.empty()) return out;
    const auto r_old = range(y);
    const ThetaMorphism g = f.tail();
    for (int i : r_new) {
      const std::size_t pos = static_cast<std::size_t>(i - r_old.front());
      const long c = key[p + 1 + pos];
      out.push_back(factor(i).act(g, static_cast<Cell>(c)));
    }
    return out;
  }

 protected:
  std::vector<Key> make_keys(const ThetaObject& m) const override {
    std::vector<Key> out;
    if (m.is_zero()) {
      for (int v = 0; v <= k(); ++v) out.push_back({v});
      return out;
    }
    const ThetaObject t = m.tail();
    for (const auto& y : monotone_maps(m[0], k())) {
      Key base(y.begin(), y.end());
      const auto r = range(base);
      std::vector<std::size_t> sizes;
      for (int i : r) sizes.push_back(factor(i).count(t));
      for_each_tuple(sizes, [&](const std::vector<long>& tuple) {
        Key key = base;
        key.insert(key.end(), tuple.begin(), tuple.end());
        out.push_back(std::move(key));
      });
    }
    return out;
  }

  std::string key_label(const ThetaObject& m, const Key& key) const override {
    if (m.is_zero()) return std::to_string(key[0]);
    const std::size_t p = static_cast<std::size_t>(m[0]);
    std::string s = "<";
    for (std::size_t i = 0; i <= p; ++i) s += std::to_string(key[i]);
    s += ">";
    std::vector<long> y(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(p) + 1);
    const auto r = range(y);
    const ThetaObject t = m.tail();
    for (std::size_t j = 0; j < r.size(); ++j) {
      s += (j ? "," : "(") + factor(r[j]).label(t, static_cast<Cell>(key[p + 1 + j]));
    }
    if (!r.empty()) s += ")";
    return s;
  }

 private:
  static int check(const std::vector<Precat>& e) {
    if (e.empty()) throw InvalidArgument("Upsilon needs at least one input");
    for (const auto& x : e) {
      if (x.dim() != e.front().dim()) throw InvalidArgument("Upsilon inputs have different dimensions");
    }
    return e.front().dim() + 1;
  }
  static std::string joined(const std::vector<Precat>& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + e[i].name();
    return s;
  }

  std::vector<Precat> e_;
  Indexing ix_;
};

}  // namespace impl

inline Precat upsilon(std::vector<Precat> e, Indexing ix = Indexing::Corrected) {
  return make_precat<impl::Upsilon>(std::move(e), ix);
}

inline const impl::Upsilon& as_upsilon(const Precat& p) {
  const auto* u = dynamic_cast<const impl::Upsilon*>(p.get());
  if (!u) throw InvalidArgument(p.name() + " is not an Upsilon construction");
  return *u;
}

// Upsilon(u_1, ..., u_k): keeps y and maps each collected factor.
inline PrecatMap upsilon_map(const Precat& source, const Precat& target, std::vector<PrecatMap> maps) {
  const auto& us = as_upsilon(source);
  const auto& ut = as_upsilon(target);
  if (us.k() != ut.k() || static_cast<int>(maps.size()) != us.k() || us.indexing() != ut.indexing()) {
    throw InvalidArgument("upsilon_map: shapes do not match");
  }
  for (int i = 1; i <= us.k(); ++i) {
    const auto& u = maps[static_cast<std::size_t>(i - 1)];
    if (!same(u.domain(), us.factor(i)) || !same(u.codomain(), ut.factor(i))) {
      throw InvalidArgument("upsilon_map: map " + std::to_string(i) + " does not fit");
    }
  }
  return PrecatMap(source, target, [source, target, maps](const ThetaObject& m) {
    const auto& us = as_upsilon(source);
    const auto& ut = as_upsilon(target);
    auto lv = us.level(m);
    Table t;
    t.reserve(lv->keys.size());
    for (const auto& k : lv->keys) {
      if (m.is_zero()) {
        t.push_back(ut.index(m, k));
        continue;
      }
      const std::size_t p = static_cast<std::size_t>(m[0]);
      Key img(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(p) + 1);
      const auto r = us.range(img);
      const ThetaObject tail = m.tail();
      for (std::size_t j = 0; j < r.size(); ++j) {
        img.push_back(maps[static_cast<std::size_t>(r[j] - 1)](tail, static_cast<Cell>(k[p + 1 + j])));
      }
      t.push_back(ut.index(m, img));
    }
    return t;
  }, "U(maps)");
}

enum class FaceKind { DropFirst, DropLast, Merge };

// The principal face Upsilon^{k-1} -> Upsilon^k. For Merge at position i
// (1 <= i < k) the source's i-th input must be the product of the target's
// inputs i and i+1.
inline PrecatMap upsilon_face(const Precat& source, const Precat& target, FaceKind kind, int i = 0) {
  const auto& us = as_upsilon(source);
  const auto& ut = as_upsilon(target);
  const int k = ut.k();
  if (k < 2 || us.k() != k - 1 || us.indexing() != ut.indexing()) {
    throw InvalidArgument("upsilon_face: needs Upsilon^{k-1} -> Upsilon^k with k >= 2");
  }
  int skip = 0;
  switch (kind) {
    case FaceKind::DropFirst: skip = 0; break;
    case FaceKind::DropLast: skip = k; break;
    case FaceKind::Merge:
      if (i < 1 || i >= k) throw InvalidArgument("upsilon_face: merge position out of range");
      skip = i;
      break;
  }
  std::vector<long> delta;  // {0..k-1} -> {0..k}
  for (int j = 0; j <= k; ++j) {
    if (j != skip) delta.push_back(j);
  }
  // Source input j covers target inputs (delta(j-1), delta(j)].
  for (int j = 1; j < k; ++j) {
    const long lo = delta[static_cast<std::size_t>(j - 1)] + 1;
    const long hi = delta[static_cast<std::size_t>(j)];
    if (lo == hi) {
      if (!same(us.factor(j), ut.factor(static_cast<int>(lo)))) throw InvalidArgument("upsilon_face: input mismatch");
    } else {
      const auto* pr = as_product(us.factor(j));
      if (!pr || !same(pr->left(), ut.factor(static_cast<int>(lo))) || !same(pr->right(), ut.factor(static_cast<int>(hi)))) {
        throw InvalidArgument("upsilon_face: merged input is not the product of the target inputs");
      }
    }
  }
  return PrecatMap(source, target, [source, target, delta](const ThetaObject& m) {
    const auto& us = as_upsilon(source);
    const auto& ut = as_upsilon(target);
    auto lv = us.level(m);
    Table t;
    t.reserve(lv->keys.size());
    for (const auto& k : lv->keys) {
      if (m.is_zero()) {
        t.push_back(ut.index(m, {delta[static_cast<std::size_t>(k[0])]}));
        continue;
      }
      const std::size_t p = static_cast<std::size_t>(m[0]);
      const ThetaObject tail = m.tail();
      std::vector<long> y(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(p) + 1);
      const auto r_src = us.range(y);
      Key img;
      for (long v : y) img.push_back(delta[static_cast<std::size_t>(v)]);
      for (int i : ut.range(img)) {
        std::size_t j = 1;
        while (j < delta.size() && !(delta[j - 1] < i && i <= delta[j])) ++j;
        auto it = std::find(r_src.begin(), r_src.end(), static_cast<int>(j));
        if (j == delta.size() || it == r_src.end()) {
          throw ConstructionError("upsilon_face: undefined for this indexing");
        }
        Cell c = static_cast<Cell>(k[p + 1 + static_cast<std::size_t>(it - r_src.begin())]);
        if (delta[j] - delta[j - 1] == 2) {
          const std::size_t nb = ut.factor(static_cast<int>(delta[j])).count(tail);
          c = i == delta[j] ? static_cast<Cell>(c % nb) : static_cast<Cell>(c / nb);
        }
        img.push_back(c);
      }
      t.push_back(ut.index(m, img));
    }
    return t;
  }, "face");
}

// ---------------------------------------------------------------------------
// Cells

struct CellBoundary {
  Precat cell;
  Precat boundary;
  PrecatMap inclusion;
};

// F^i and its boundary as n-precats, 0 <= i <= n+1.
inline CellBoundary cell(int i, int n, Indexing ix = Indexing::Corrected) {
  if (n < 0 || i < 0 || i > n + 1) throw InvalidArgument("cell index out of range");
  if (i == n + 1) {
    auto c = cell(n, n, ix);
    auto po = pushout(c.inclusion, c.inclusion);
    auto fold = pushout_induced(po, identity_map(c.cell), identity_map(c.cell));
    return {c.cell, po.object, fold};
  }
  if (i == 0) {
    Precat e = empty(n);
    Precat pt = terminal(n);
    return {pt, e, from_empty(e, pt)};
  }
  auto prev = cell(i - 1, n - 1, ix);
  Precat f = upsilon({prev.cell}, ix);
  Precat b = upsilon({prev.boundary}, ix);
  return {f, b, upsilon_map(b, f, {prev.inclusion})};
}

// sigma^k = F^k u^{dF^k} *, pointed at the collapsed boundary.
inline PointedPrecat sigma(int k, int n, Indexing ix = Indexing::Corrected) {
  if (k < 0 || k > n) throw InvalidArgument("sigma needs 0 <= k <= n");
  auto c = cell(k, n, ix);
  Precat pt = terminal(n);
  auto po = pushout(c.inclusion, to_terminal(c.boundary, pt));
  return {po.object, po.right(ThetaObject::zero(n), 0)};
}

// ---------------------------------------------------------------------------
// Suspension

struct Suspension {
  Precat space;          // Sigma(A, a)
  Cell point = 0;        // its unique object
  Pushout pushout;       // U(A) u^{U({a})} *
  Precat upsilon_a;      // U(A)
  PointedPrecat base;    // (A, a)
};

inline Suspension suspension(const PointedPrecat& a, Indexing ix = Indexing::Corrected) {
  const int n = a.space.dim();
  Precat ua = upsilon({a.space}, ix);
  Precat pt = terminal(n);
  Precat upt = upsilon({pt}, ix);
  auto inc = upsilon_map(upt, ua, {point_map(pt, a.space, a.point)});
  auto po = pushout(inc, to_terminal(upt, terminal(n + 1)));
  return {po.object, 0, po, ua, a};
}

// The variant U(A) u^{U({a})} Ibar.
inline Precat suspension_ibar(const PointedPrecat& a, Indexing ix = Indexing::Corrected) {
  const int n = a.space.dim();
  Precat ua = upsilon({a.space}, ix);
  Precat pt = terminal(n);
  Precat upt = upsilon({pt}, ix);
  auto inc = upsilon_map(upt, ua, {point_map(pt, a.space, a.point)});
  Precat ibar = nerve(categories::Ibar(), n + 1);
  PrecatMap to_ibar(upt, ibar, [upt, ibar](const ThetaObject& m) {
    const auto& ku = keyed(upt);
    const auto& ki = keyed(ibar);
    const auto& cat = dynamic_cast<const impl::Nerve&>(ki).category();
    auto lv = ku.level(m);
    Table t;
    for (const auto& k : lv->keys) {
      if (m.is_zero()) {
        t.push_back(ki.index(m, {k[0]}));
        continue;
      }
      Key chain;
      for (int j = 1; j <= m[0]; ++j) {
        const int x = static_cast<int>(k[static_cast<std::size_t>(j - 1)]);
        const int y = static_cast<int>(k[static_cast<std::size_t>(j)]);
        chain.push_back(cat.hom(x, y).front());
      }
      t.push_back(ki.index(m, chain));
    }
    return t;
  }, "I->Ibar");
  return pushout(inc, to_ibar).object;
}

// A -> Sigma(A, a)_{1/}(x, x).
struct SuspensionUnit {
  Sub hom;
  PrecatMap map;
};

inline SuspensionUnit suspension_unit(const Suspension& s) {
  Sub h = hom(s.space, s.point, s.point);
  Precat a = s.base.space;
  Precat ua = s.upsilon_a;
  PrecatMap left = s.pushout.left;
  PrecatMap map(a, h.object, [a, ua, left, h](const ThetaObject& t) {
    const auto& ku = keyed(ua);
    const ThetaObject m = t.prepend(1);
    Table out;
    for (Cell c = 0; c < a.count(t); ++c) {
      const Cell u = ku.index(m, {0, 1, static_cast<long>(c)});
      const auto idx = h.index_of(t, left(m, u));
      if (!idx) throw ConstructionError("suspension unit leaves the hom precat");
      out.push_back(*idx);
    }
    return out;
  }, "unit");
  return {h, map};
}

// ---------------------------------------------------------------------------
// Delooping X(A, a)

namespace impl {

// Level (p, T): the shared base cell, and (i, x) for 1 <= i <= p and
// x in A(T) other than the degenerate base point.
class Delooping : public Keyed {
 public:
  explicit Delooping(PointedPrecat a)
      : Keyed(a.space.dim() + 1, "X(" + a.space.name() + ")"), a_(std::move(a)) {}

  Key act_key(const ThetaMorphism& f, const Key& key) const override {
    const ThetaObject& s = f.source();
    if (s.is_zero() || f.target().is_zero() || key.size() == 1) return {0};
    const MonotoneMap& phi = f.components().front();
    if (is_constant(phi)) return {0};
    const long i = key[0];
    for (std::size_t j = 1; j < phi.size(); ++j) {
      if (phi[j - 1] < i && i <= phi[j]) {
        const ThetaMorphism g = f.tail();
        const Cell x = a_.space.act(g, static_cast<Cell>(key[1]));
        if (x == a_.space.degeneracy(a_.point, s.tail())) return {0};
        return {static_cast<long>(j), x};
      }
    }
    return {0};
  }

 protected:
  std::vector<Key> make_keys(const ThetaObject& m) const override {
    std::vector<Key> out{{0}};
    if (m.is_zero()) return out;
    const ThetaObject t = m.tail();
    const Cell base = a_.space.degeneracy(a_.point, t);
    for (int i = 1; i <= m[0]; ++i) {
      for (Cell x = 0; x < a_.space.count(t); ++x) {
        if (x != base) out.push_back({i, x});
      }
    }
    return out;
  }

  std::string key_label(const ThetaObject& m, const Key& key) const override {
    if (key.size() == 1) return "*";
    return std::to_string(key[0]) + ":" + a_.space.label(m.tail(), static_cast<Cell>(key[1]));
  }

 private:
  PointedPrecat a_;
};

}  // namespace impl

inline Precat delooping_X(const PointedPrecat& a) { return make_precat<impl::Delooping>(a); }

// ---------------------------------------------------------------------------
// Whitehead sub-presheaf

// Objects U with |U| <= len and U_j <= M_j.
inline std::vector<ThetaObject> objects_below(const ThetaObject& m, std::size_t len) {
  std::vector<ThetaObject> out{ThetaObject::zero(m.dim())};
  std::vector<std::vector<int>> frontier{{}};
  for (std::size_t l = 1; l <= std::min(len, m.length()); ++l) {
    std::vector<std::vector<int>> next;
    for (const auto& e : frontier) {
      for (int v = 1; v <= m[l - 1]; ++v) {
        auto f = e;
        f.push_back(v);
        out.push_back(ThetaObject::of(m.dim(), f));
        next.push_back(std::move(f));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

// Wh_{>k}(A, a): cells all of whose restrictions to objects of length <= k
// are degeneracies of a. Images of such restrictions factor through objects
// bounded by M, so only those are inspected.
inline Sub whitehead(const Precat& a, Cell point, int k) {
  if (k < 0 || k > a.dim()) throw InvalidArgument("whitehead needs 0 <= k <= n");
  if (point >= a.count(ThetaObject::zero(a.dim()))) throw DomainError("whitehead: base point is not an object");
  return subpresheaf(a, [a, point, k](const ThetaObject& m, Cell c) {
    for (const auto& u : objects_below(m, static_cast<std::size_t>(k))) {
      const Cell d = a.degeneracy(point, u);
      for (const auto& f : enumerate_morphisms(u, m)) {
        if (a.act(f, c) != d) return false;
      }
    }
    return true;
  }, "Wh>" + std::to_string(k) + "(" + a.name() + ")");
}

// ---------------------------------------------------------------------------
// Pushout-products

struct PushoutProduct {
  Pushout domain;  // A x D u^{A x C} B x C
  PrecatMap map;   // -> B x D
};

inline PushoutProduct pushout_product(const PrecatMap& f, const PrecatMap& g) {
  const Precat& a = f.domain();
  const Precat& b = f.codomain();
  const Precat& c = g.domain();
  const Precat& d = g.codomain();
  Precat ad = product(a, d), ac = product(a, c), bc = product(b, c), bd = product(b, d);
  auto ia = identity_map(a), ib = identity_map(b), ic = identity_map(c), id = identity_map(d);
  auto po = pushout(product_map(ia, g, ac, ad), product_map(f, ic, ac, bc));
  auto map = pushout_induced(po, product_map(f, id, ad, bd), product_map(ib, g, bc, bd));
  return {po, map};
}

// ---------------------------------------------------------------------------
// Q(A, B, C, D) = U^2(A, D) u^{U^2(A, C)} U^2(B, C)

struct QObject {
  Pushout po;
  Precat ad, ac, bc;
};

inline QObject q_construction(const PrecatMap& f, const PrecatMap& g, Indexing ix = Indexing::Corrected) {
  const Precat& a = f.domain();
  const Precat& b = f.codomain();
  const Precat& c = g.domain();
  const Precat& d = g.codomain();
  Precat ad = upsilon({a, d}, ix), ac = upsilon({a, c}, ix), bc = upsilon({b, c}, ix);
  auto po = pushout(upsilon_map(ac, ad, {identity_map(a), g}), upsilon_map(ac, bc, {f, identity_map(c)}));
  return {po, ad, ac, bc};
}

// P u^* Q joining object `right_end` of P with object `left_start` of Q.
inline Pushout wedge(const Precat& p, Cell right_end, const Precat& q, Cell left_start) {
  Precat pt = terminal(p.dim());
  return pushout(point_map(pt, p, right_end), point_map(pt, q, left_start));
}

// Map of pushouts induced by maps on the two corners (given as P -> P', Q -> Q').
inline PrecatMap pushout_map(const Pushout& from, const Pushout& to, const PrecatMap& on_left,
                             const PrecatMap& on_right) {
  return pushout_induced(from, compose(to.left, on_left), compose(to.right, on_right));
}

// ---------------------------------------------------------------------------
// Monoid objects and the monoidal delooping c^k

struct MonoidObject {
  Precat carrier;
  Precat square;    // carrier x carrier
  PrecatMap mult;   // square -> carrier
  PrecatMap unit;   // * -> carrier
  bool commutative = false;
};

// Z/order as a constant m-precat.
inline MonoidObject cyclic_monoid(int m, int order) {
  if (order < 1) throw InvalidArgument("cyclic monoid needs order >= 1");
  Labels cells;
  for (int i = 0; i < order; ++i) cells.push_back(std::to_string(i));
  Precat a = discrete(m, cells, "Z/" + std::to_string(order));
  Precat sq = product(a, a);
  PrecatMap mult(sq, a, [order](const ThetaObject&) {
    Table t;
    for (int x = 0; x < order; ++x) {
      for (int y = 0; y < order; ++y) t.push_back(static_cast<Cell>((x + y) % order));
    }
    return t;
  }, "+");
  Precat pt = terminal(m);
  PrecatMap unit(pt, a, [](const ThetaObject&) { return Table{0}; }, "0");
  return {a, sq, mult, unit, true};
}

// Associativity, unit and (if flagged) commutativity on window levels.
inline bool monoid_laws_hold(const MonoidObject& mon, const Window& w) {
  for (const auto& m : window_objects(mon.carrier.dim(), w)) {
    const std::size_t na = mon.carrier.count(m);
    auto mul = mon.mult.component(m);
    auto op = [&](Cell x, Cell y) { return (*mul)[x * na + y]; };
    const Cell e = mon.unit(m, 0);
    for (Cell x = 0; x < na; ++x) {
      if (op(e, x) != x || op(x, e) != x) return false;
      for (Cell y = 0; y < na; ++y) {
        if (mon.commutative && op(x, y) != op(y, x)) return false;
        for (Cell z = 0; z < na; ++z) {
          if (op(op(x, y), z) != op(x, op(y, z))) return false;
        }
      }
    }
  }
  return naturality_violations(mon.mult, w).empty() && naturality_violations(mon.unit, w).empty();
}

namespace impl {

// Levels of length < k are the point. Level (p_1..p_k, T) is the set of
// families of carrier cells at T indexed by boxes of [p_1] x ... x [p_k];
// restriction multiplies the boxes covered by each source box.
class Monoidal : public Keyed {
 public:
  Monoidal(MonoidObject mon, int k)
      : Keyed(mon.carrier.dim() + k, "c" + std::to_string(k) + "(" + mon.carrier.name() + ")"),
        mon_(std::move(mon)), k_(static_cast<std::size_t>(k)) {
    if (k < 1) throw InvalidArgument("c^k needs k >= 1");
    if (k >= 2 && !mon_.commutative) throw InvalidArgument("c^k with k >= 2 needs a commutative monoid");
  }

  Key act_key(const ThetaMorphism& f, const Key& key) const override {
    const ThetaObject& s = f.source();
    const ThetaObject& t = f.target();
    if (s.length() < k_) return {};
    const ThetaObject ts = s.drop(k_);
    const std::size_t na = mon_.carrier.count(ts);
    const Cell e = mon_.unit(ts, 0);
    const std::size_t boxes = box_count(s);
    const auto& comps = f.components();
    bool collapsed = t.length() < k_;
    for (std::size_t d = 0; d < k_ && !collapsed; ++d) collapsed = is_constant(comps[d]);
    if (collapsed) return Key(boxes, e);
    const ThetaMorphism g = f.drop(k_);
    auto mul = mon_.mult.component(ts);
    auto rest = mon_.carrier.restriction(g);
    Key out;
    out.reserve(boxes);
    std::vector<std::size_t> src_sizes, tgt_sizes;
    for (std::size_t d = 0; d < k_; ++d) {
      src_sizes.push_back(static_cast<std::size_t>(s[d]));
      tgt_sizes.push_back(static_cast<std::size_t>(t[d]));
    }
    for_each_tuple(src_sizes, [&](const std::vector<long>& j) {
      // Target boxes i with phi_d(j_d) < i_d + 1 <= phi_d(j_d + 1), 0-based.
      std::vector<std::size_t> lo(k_), len(k_);
      for (std::size_t d = 0; d < k_; ++d) {
        lo[d] = static_cast<std::size_t>(comps[d][static_cast<std::size_t>(j[d])]);
        len[d] = static_cast<std::size_t>(comps[d][static_cast<std::size_t>(j[d]) + 1]) - lo[d];
      }
      Cell acc = e;
      for_each_tuple(len, [&](const std::vector<long>& off) {
        std::size_t flat = 0;
        for (std::size_t d = 0; d < k_; ++d) flat = flat * tgt_sizes[d] + lo[d] + static_cast<std::size_t>(off[d]);
        const Cell x = (*rest)[static_cast<std::size_t>(key[flat])];
        acc = (*mul)[acc * na + x];
      });
      out.push_back(acc);
    });
    return out;
  }

 protected:
  std::vector<Key> make_keys(const ThetaObject& m) const override {
    if (m.length() < k_) return {Key{}};
    const ThetaObject t = m.drop(k_);
    std::vector<std::size_t> sizes(box_count(m), mon_.carrier.count(t));
    std::vector<Key> out;
    for_each_tuple(sizes, [&](const std::vector<long>& tuple) { out.push_back(tuple); });
    return out;
  }

  std::string key_label(const ThetaObject& m, const Key& key) const override {
    if (m.length() < k_) return "*";
    const ThetaObject t = m.drop(k_);
    std::string s = "[";
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i) s += ',';
      s += mon_.carrier.label(t, static_cast<Cell>(key[i]));
    }
    return s + "]";
  }

 private:
  std::size_t box_count(const ThetaObject& m) const {
    std::size_t b = 1;
    for (std::size_t d = 0; d < k_; ++d) b *= static_cast<std::size_t>(m[d]);
    return b;
  }

  MonoidObject mon_;
  std::size_t k_;
};

}  // namespace impl

inline Precat ck_monoidal(const MonoidObject& mon, int k) { return make_precat<impl::Monoidal>(mon, k); }

// ---------------------------------------------------------------------------
// Objects of the codiagonal claim for a cofibration i: E -> F

struct ClaimObjects {
  Pushout codiagonal;      // F u^E F
  PrecatMap fold;          // -> F
  PushoutProduct corner;   // E x Ibar u^{E x {0,1}} F x {0,1} -> F x Ibar
  Precat three_term;       // (F0 u E x Ibar) u^{E x Ibar} (F1 u E x Ibar)
  PrecatMap comparison;    // corner domain -> three_term
  PrecatMap to_codiagonal; // three_term -> F u^E F
  PrecatMap corner_to_f;   // F x Ibar -> F
};

inline ClaimObjects claim_objects(const PrecatMap& i) {
  const Precat& e = i.domain();
  const Precat& f = i.codomain();
  const int n = e.dim();
  auto codiag = pushout(i, i);
  auto fold = pushout_induced(codiag, identity_map(f), identity_map(f));

  Precat ibar = nerve(categories::Ibar(), n);
  Precat ends = discrete(n, Labels{"0", "1"});
  auto corner = pushout_product(i, objects_inclusion(ends, ibar));

  Precat ei = product(e, ibar);
  auto piece = [&](Cell end) {
    Precat pt = discrete(n, Labels{std::to_string(end)});
    Precat f0 = product(f, pt), e0 = product(e, pt);
    PrecatMap at_end(pt, ibar, [ibar, end](const ThetaObject& m) { return Table{ibar.degeneracy(end, m)}; }, "end");
    auto po = pushout(product_map(i, identity_map(pt), e0, f0), product_map(identity_map(e), at_end, e0, ei));
    auto to_f = pushout_induced(po, projection(f0, 0), compose(i, projection(ei, 0)));
    return std::pair{po, to_f};
  };
  auto [l0, l0_to_f] = piece(0);
  auto [r1, r1_to_f] = piece(1);
  auto three = pushout(l0.right, r1.right);

  // F x {0,1} -> three_term, sending (x, end) into the matching piece.
  const Precat& f2 = corner.domain.right.domain();
  PrecatMap l0_left = compose(three.left, l0.left);
  PrecatMap r1_left = compose(three.right, r1.left);
  PrecatMap ends_map(f2, three.object, [f2, l0_left, r1_left](const ThetaObject& m) {
    Table t;
    for (Cell c = 0; c < f2.count(m); ++c) {
      const Cell x = c / 2;
      t.push_back(c % 2 == 0 ? l0_left(m, x) : r1_left(m, x));
    }
    return t;
  }, "ends");
  const Precat& ad = corner.domain.left.domain();
  auto comparison = descend(corner.domain.object, three.object,
                            {{corner.domain.left, compose(compose(three.left, l0.right), relabel(ad, ei))},
                             {corner.domain.right, ends_map}},
                            "comparison");
  auto to_codiag = pushout_induced(three, compose(codiag.left, l0_to_f), compose(codiag.right, r1_to_f));
  return {codiag, fold, corner, three.object, comparison, to_codiag, projection(corner.map.codomain(), 0)};
}

}  // namespace thetacat
