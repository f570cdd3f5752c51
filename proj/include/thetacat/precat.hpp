#pragma once

// n-precats as lazily evaluated presheaves of finite sets on Theta^n.
//
// A level is a list of cell labels; a cell is its index in that list. The
// action of f: M -> M' is a restriction table indexed by cells of M' whose
// entries are cells of M. Both are computed on demand and memoized.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thetacat/memo.hpp"
#include "thetacat/theta.hpp"

namespace thetacat {

using Cell = std::uint32_t;
using Labels = std::vector<std::string>;
using Table = std::vector<Cell>;

class PrecatImpl {
 public:
  PrecatImpl(int dim, std::string name) : dim_(dim), name_(std::move(name)) {}
  virtual ~PrecatImpl() = default;
  PrecatImpl(const PrecatImpl&) = delete;
  PrecatImpl& operator=(const PrecatImpl&) = delete;

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }

  std::shared_ptr<const Labels> labels(const ThetaObject& m) const {
    if (m.dim() != dim_) {
      throw DomainError("level " + m.str() + " of Theta^" + std::to_string(m.dim()) +
                        " asked of an " + std::to_string(dim_) + "-precat");
    }
    return levels_.get(m, [&] { return make_labels(m); });
  }

  std::shared_ptr<const Table> restriction(const ThetaMorphism& f) const {
    if (f.dim() != dim_) throw DomainError("morphism " + f.str() + " in the wrong Theta^n");
    return actions_.get(f, [&] { return make_restriction(f); });
  }

 protected:
  virtual Labels make_labels(const ThetaObject& m) const = 0;
  virtual Table make_restriction(const ThetaMorphism& f) const = 0;

 private:
  int dim_;
  std::string name_;
  Memo<ThetaObject, Labels> levels_;
  Memo<ThetaMorphism, Table> actions_;
};

class Precat {
 public:
  Precat() = default;
  explicit Precat(std::shared_ptr<const PrecatImpl> impl) : impl_(std::move(impl)) {}

  int dim() const { return impl_->dim(); }
  const std::string& name() const { return impl_->name(); }
  const PrecatImpl* get() const { return impl_.get(); }
  explicit operator bool() const { return static_cast<bool>(impl_); }

  std::shared_ptr<const Labels> labels(const ThetaObject& m) const { return impl_->labels(m); }
  std::size_t count(const ThetaObject& m) const { return impl_->labels(m)->size(); }
  std::string label(const ThetaObject& m, Cell c) const {
    auto l = labels(m);
    if (c >= l->size()) throw DomainError("no cell " + std::to_string(c) + " at " + m.str());
    return (*l)[c];
  }

  std::shared_ptr<const Table> restriction(const ThetaMorphism& f) const {
    return impl_->restriction(f);
  }

  Cell act(const ThetaMorphism& f, Cell c) const {
    auto t = restriction(f);
    if (c >= t->size()) {
      throw DomainError("cell " + std::to_string(c) + " is not at level " + f.target().str() +
                        " of " + name());
    }
    return (*t)[c];
  }

  // Cells of level 0 are objects; this is the degeneracy of one at M.
  Cell degeneracy(Cell object, const ThetaObject& m) const { return act(to_zero(m), object); }

  friend bool same(const Precat& a, const Precat& b) { return a.impl_ == b.impl_; }

 private:
  std::shared_ptr<const PrecatImpl> impl_;
};

template <class Impl, class... Args>
Precat make_precat(Args&&... args) {
  return Precat(std::make_shared<const Impl>(std::forward<Args>(args)...));
}

// A natural family of functions between two precats, computed levelwise on
// demand. Naturality is not checked at construction; see checks.hpp.
class PrecatMap {
 public:
  using ComponentFn = std::function<Table(const ThetaObject&)>;

  PrecatMap() = default;
  PrecatMap(Precat domain, Precat codomain, ComponentFn fn, std::string name = "map")
      : state_(std::make_shared<State>()) {
    if (domain.dim() != codomain.dim()) throw InvalidArgument("map between precats of different dimension");
    state_->domain = std::move(domain);
    state_->codomain = std::move(codomain);
    state_->fn = std::move(fn);
    state_->name = std::move(name);
  }

  const Precat& domain() const { return state_->domain; }
  const Precat& codomain() const { return state_->codomain; }
  const std::string& name() const { return state_->name; }
  int dim() const { return state_->domain.dim(); }
  explicit operator bool() const { return static_cast<bool>(state_); }

  std::shared_ptr<const Table> component(const ThetaObject& m) const {
    return state_->memo.get(m, [&] {
      Table t = state_->fn(m);
      if (t.size() != state_->domain.count(m)) {
        throw ConstructionError("component of " + state_->name + " at " + m.str() + " has wrong size");
      }
      return t;
    });
  }

  Cell operator()(const ThetaObject& m, Cell c) const {
    auto t = component(m);
    if (c >= t->size()) throw DomainError("cell outside the domain of " + name());
    return (*t)[c];
  }

 private:
  struct State {
    Precat domain;
    Precat codomain;
    ComponentFn fn;
    std::string name;
    Memo<ThetaObject, Table> memo;
  };
  std::shared_ptr<State> state_;
};

// ---------------------------------------------------------------------------
// Elementary presheaves

namespace impl {

class ConstantSet : public PrecatImpl {
 public:
  ConstantSet(int dim, Labels cells, std::string name)
      : PrecatImpl(dim, std::move(name)), cells_(std::move(cells)) {}

 protected:
  Labels make_labels(const ThetaObject&) const override { return cells_; }
  Table make_restriction(const ThetaMorphism&) const override {
    Table t(cells_.size());
    std::iota(t.begin(), t.end(), Cell{0});
    return t;
  }

 private:
  Labels cells_;
};

}  // namespace impl

inline Precat terminal(int n) { return make_precat<impl::ConstantSet>(n, Labels{"*"}, "point"); }

inline Precat empty(int n) { return make_precat<impl::ConstantSet>(n, Labels{}, "empty"); }

// The discrete precat on a finite set (k* for k points).
inline Precat discrete(int n, Labels cells, std::string name = "") {
  if (name.empty()) name = std::to_string(cells.size()) + "*";
  return make_precat<impl::ConstantSet>(n, std::move(cells), std::move(name));
}

inline Precat discrete(int n, std::size_t k) {
  Labels cells;
  for (std::size_t i = 0; i < k; ++i) cells.push_back(std::to_string(i));
  return discrete(n, std::move(cells));
}

// ---------------------------------------------------------------------------
// Basic maps

inline PrecatMap identity_map(const Precat& p) {
  return PrecatMap(p, p, [p](const ThetaObject& m) {
    Table t(p.count(m));
    std::iota(t.begin(), t.end(), Cell{0});
    return t;
  }, "id");
}

// g o f
inline PrecatMap compose(const PrecatMap& g, const PrecatMap& f) {
  if (!same(f.codomain(), g.domain())) {
    throw CompositionError("cannot compose " + g.name() + " after " + f.name());
  }
  return PrecatMap(f.domain(), g.codomain(), [f, g](const ThetaObject& m) {
    auto a = f.component(m);
    auto b = g.component(m);
    Table t(a->size());
    for (std::size_t i = 0; i < a->size(); ++i) t[i] = (*b)[(*a)[i]];
    return t;
  }, g.name() + "." + f.name());
}

inline PrecatMap to_terminal(const Precat& p, const Precat& point) {
  return PrecatMap(p, point, [p](const ThetaObject& m) { return Table(p.count(m), 0); }, "!");
}

inline PrecatMap from_empty(const Precat& e, const Precat& p) {
  return PrecatMap(e, p, [e](const ThetaObject& m) {
    if (e.count(m) != 0) throw ConstructionError("from_empty: domain is not empty");
    return Table{};
  }, "0");
}

// point -> P picking an object.
inline PrecatMap point_map(const Precat& point, const Precat& p, Cell object) {
  if (object >= p.count(ThetaObject::zero(p.dim()))) throw DomainError("point is not an object");
  return PrecatMap(point, p, [p, object](const ThetaObject& m) {
    return Table{p.degeneracy(object, m)};
  }, "pt");
}

// A map given by explicit tables on finitely many levels (e.g. a windowed
// isomorphism). Asking for any other level is a domain error.
inline PrecatMap table_map(const Precat& dom, const Precat& cod,
                           std::map<ThetaObject, Table> tables, std::string name = "table") {
  auto shared = std::make_shared<const std::map<ThetaObject, Table>>(std::move(tables));
  return PrecatMap(dom, cod, [shared](const ThetaObject& m) {
    auto it = shared->find(m);
    if (it == shared->end()) throw DomainError("map is only defined on its window; asked for " + m.str());
    return it->second;
  }, std::move(name));
}

// ---------------------------------------------------------------------------
// Products

namespace impl {

// Cell (a, b) has index a * |Q_M| + b.
class Product : public PrecatImpl {
 public:
  Product(Precat p, Precat q)
      : PrecatImpl(p.dim(), "(" + p.name() + "x" + q.name() + ")"), p_(std::move(p)), q_(std::move(q)) {
    if (p_.dim() != q_.dim()) throw InvalidArgument("product of precats of different dimension");
  }
  const Precat& left() const { return p_; }
  const Precat& right() const { return q_; }

 protected:
  Labels make_labels(const ThetaObject& m) const override {
    auto a = p_.labels(m);
    auto b = q_.labels(m);
    Labels out;
    out.reserve(a->size() * b->size());
    for (const auto& x : *a) {
      for (const auto& y : *b) out.push_back("(" + x + "," + y + ")");
    }
    return out;
  }
  Table make_restriction(const ThetaMorphism& f) const override {
    auto ra = p_.restriction(f);
    auto rb = q_.restriction(f);
    const std::size_t nb_src = q_.count(f.source());
    Table t;
    t.reserve(ra->size() * rb->size());
    for (Cell a : *ra) {
      for (Cell b : *rb) t.push_back(static_cast<Cell>(a * nb_src + b));
    }
    return t;
  }

 private:
  Precat p_;
  Precat q_;
};

}  // namespace impl

inline Precat product(const Precat& p, const Precat& q) { return make_precat<impl::Product>(p, q); }

inline const impl::Product* as_product(const Precat& p) {
  return dynamic_cast<const impl::Product*>(p.get());
}

inline PrecatMap projection(const Precat& prod, int which) {
  const auto* pr = as_product(prod);
  if (!pr) throw InvalidArgument("projection from a precat that is not a product");
  Precat l = pr->left();
  Precat r = pr->right();
  return PrecatMap(prod, which == 0 ? l : r, [l, r, which](const ThetaObject& m) {
    const std::size_t na = l.count(m);
    const std::size_t nb = r.count(m);
    Table t(na * nb);
    for (std::size_t a = 0; a < na; ++a) {
      for (std::size_t b = 0; b < nb; ++b) t[a * nb + b] = static_cast<Cell>(which == 0 ? a : b);
    }
    return t;
  }, which == 0 ? "pr1" : "pr2");
}

// <f, g>: X -> P x Q into a given product object.
inline PrecatMap pairing(const PrecatMap& f, const PrecatMap& g, const Precat& prod) {
  const auto* pr = as_product(prod);
  if (!pr || !same(pr->left(), f.codomain()) || !same(pr->right(), g.codomain()) ||
      !same(f.domain(), g.domain())) {
    throw InvalidArgument("pairing into a mismatched product");
  }
  Precat r = pr->right();
  return PrecatMap(f.domain(), prod, [f, g, r](const ThetaObject& m) {
    auto a = f.component(m);
    auto b = g.component(m);
    const std::size_t nb = r.count(m);
    Table t(a->size());
    for (std::size_t i = 0; i < a->size(); ++i) t[i] = static_cast<Cell>((*a)[i] * nb + (*b)[i]);
    return t;
  }, "<" + f.name() + "," + g.name() + ">");
}

// f x g between two given product objects.
inline PrecatMap product_map(const PrecatMap& f, const PrecatMap& g, const Precat& dom, const Precat& cod) {
  const auto* d = as_product(dom);
  const auto* c = as_product(cod);
  if (!d || !c || !same(d->left(), f.domain()) || !same(d->right(), g.domain()) ||
      !same(c->left(), f.codomain()) || !same(c->right(), g.codomain())) {
    throw InvalidArgument("product_map with mismatched factors");
  }
  Precat db = d->right();
  Precat cb = c->right();
  return PrecatMap(dom, cod, [f, g, db, cb](const ThetaObject& m) {
    auto a = f.component(m);
    auto b = g.component(m);
    const std::size_t nb = db.count(m);
    const std::size_t mb = cb.count(m);
    Table t(a->size() * nb);
    for (std::size_t i = 0; i < a->size(); ++i) {
      for (std::size_t j = 0; j < nb; ++j) t[i * nb + j] = static_cast<Cell>((*a)[i] * mb + (*b)[j]);
    }
    return t;
  }, "(" + f.name() + "x" + g.name() + ")");
}

// P x Q -> Q x P between two given product objects.
inline PrecatMap swap_map(const Precat& pq, const Precat& qp) {
  const auto* a = as_product(pq);
  const auto* b = as_product(qp);
  if (!a || !b || !same(a->left(), b->right()) || !same(a->right(), b->left())) {
    throw InvalidArgument("swap between mismatched products");
  }
  Precat p = a->left();
  Precat q = a->right();
  return PrecatMap(pq, qp, [p, q](const ThetaObject& m) {
    const std::size_t np = p.count(m);
    const std::size_t nq = q.count(m);
    Table t(np * nq);
    for (std::size_t x = 0; x < np; ++x) {
      for (std::size_t y = 0; y < nq; ++y) t[x * nq + y] = static_cast<Cell>(y * np + x);
    }
    return t;
  }, "swap");
}

// ---------------------------------------------------------------------------
// Pushouts

namespace impl {

inline Cell find_root(std::vector<Cell>& parent, Cell x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

// P u^R Q levelwise: (P_M + Q_M) / f(r) ~ g(r). Classes are numbered by their
// first member (P cells before Q cells); a class is labelled by that member.
class Pushout : public PrecatImpl {
 public:
  Pushout(PrecatMap f, PrecatMap g)
      : PrecatImpl(f.dim(), "(" + f.codomain().name() + "+" + g.codomain().name() + ")"),
        f_(std::move(f)), g_(std::move(g)) {
    if (!same(f_.domain(), g_.domain())) throw InvalidArgument("pushout of maps with different domains");
  }

  struct Level {
    std::size_t left_size = 0;
    std::vector<Cell> class_of;        // member -> class
    std::vector<std::size_t> first;    // class -> first member
  };

  const PrecatMap& left_leg() const { return f_; }
  const PrecatMap& right_leg() const { return g_; }

  std::shared_ptr<const Level> level(const ThetaObject& m) const {
    return data_.get(m, [&] {
      Level lv;
      const std::size_t np = f_.codomain().count(m);
      const std::size_t nq = g_.codomain().count(m);
      lv.left_size = np;
      std::vector<Cell> parent(np + nq);
      std::iota(parent.begin(), parent.end(), Cell{0});
      auto fr = f_.component(m);
      auto gr = g_.component(m);
      for (std::size_t r = 0; r < fr->size(); ++r) {
        Cell a = find_root(parent, (*fr)[r]);
        Cell b = find_root(parent, static_cast<Cell>(np + (*gr)[r]));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
      lv.class_of.assign(np + nq, 0);
      std::vector<Cell> root_class(np + nq, static_cast<Cell>(-1));
      for (std::size_t x = 0; x < np + nq; ++x) {
        Cell root = find_root(parent, static_cast<Cell>(x));
        if (root_class[root] == static_cast<Cell>(-1)) {
          root_class[root] = static_cast<Cell>(lv.first.size());
          lv.first.push_back(x);
        }
        lv.class_of[x] = root_class[root];
      }
      return lv;
    });
  }

 protected:
  Labels make_labels(const ThetaObject& m) const override {
    auto lv = level(m);
    auto lp = f_.codomain().labels(m);
    auto lq = g_.codomain().labels(m);
    Labels out;
    for (std::size_t x : lv->first) {
      out.push_back(x < lv->left_size ? "l" + (*lp)[x] : "r" + (*lq)[x - lv->left_size]);
    }
    return out;
  }

  Table make_restriction(const ThetaMorphism& f) const override {
    auto tgt = level(f.target());
    auto src = level(f.source());
    auto rp = f_.codomain().restriction(f);
    auto rq = g_.codomain().restriction(f);
    Table t;
    t.reserve(tgt->first.size());
    for (std::size_t x : tgt->first) {
      if (x < tgt->left_size) {
        t.push_back(src->class_of[(*rp)[x]]);
      } else {
        t.push_back(src->class_of[src->left_size + (*rq)[x - tgt->left_size]]);
      }
    }
    return t;
  }

 private:
  PrecatMap f_;
  PrecatMap g_;
  Memo<ThetaObject, Level> data_;
};

}  // namespace impl

struct Pushout {
  Precat object;
  PrecatMap left;   // P -> P u^R Q
  PrecatMap right;  // Q -> P u^R Q
};

inline Pushout pushout(const PrecatMap& f, const PrecatMap& g) {
  auto po = std::make_shared<const impl::Pushout>(f, g);
  Precat obj(po);
  PrecatMap left(f.codomain(), obj, [po](const ThetaObject& m) {
    auto lv = po->level(m);
    return Table(lv->class_of.begin(), lv->class_of.begin() + static_cast<std::ptrdiff_t>(lv->left_size));
  }, "inl");
  PrecatMap right(g.codomain(), obj, [po](const ThetaObject& m) {
    auto lv = po->level(m);
    return Table(lv->class_of.begin() + static_cast<std::ptrdiff_t>(lv->left_size), lv->class_of.end());
  }, "inr");
  return {obj, left, right};
}

inline Pushout coproduct(const Precat& p, const Precat& q) {
  Precat e = empty(p.dim());
  return pushout(from_empty(e, p), from_empty(e, q));
}

// A map out of X determined on a jointly surjective family of legs
// e_i: S_i -> X by maps t_i: S_i -> T. Throws if the legs miss a cell or
// disagree on one.
inline PrecatMap descend(const Precat& x, const Precat& t,
                         std::vector<std::pair<PrecatMap, PrecatMap>> legs, std::string name = "induced") {
  for (const auto& [e, u] : legs) {
    if (!same(e.codomain(), x) || !same(u.codomain(), t) || !same(e.domain(), u.domain())) {
      throw InvalidArgument("descend: leg does not fit");
    }
  }
  return PrecatMap(x, t, [x, legs, name](const ThetaObject& m) {
    constexpr Cell unset = static_cast<Cell>(-1);
    Table out(x.count(m), unset);
    for (const auto& [e, u] : legs) {
      auto ec = e.component(m);
      auto uc = u.component(m);
      for (std::size_t s = 0; s < ec->size(); ++s) {
        Cell& slot = out[(*ec)[s]];
        if (slot == unset) {
          slot = (*uc)[s];
        } else if (slot != (*uc)[s]) {
          throw ConstructionError(name + ": legs disagree at level " + m.str());
        }
      }
    }
    for (Cell c : out) {
      if (c == unset) throw ConstructionError(name + ": legs do not cover level " + m.str());
    }
    return out;
  }, name);
}

// The map out of a pushout induced by a cocone (u on the left, v on the right).
inline PrecatMap pushout_induced(const Pushout& po, const PrecatMap& u, const PrecatMap& v) {
  return descend(po.object, u.codomain(), {{po.left, u}, {po.right, v}}, "copair");
}

// ---------------------------------------------------------------------------
// Sub-presheaves

namespace impl {

class Sub : public PrecatImpl {
 public:
  using Predicate = std::function<bool(const ThetaObject&, Cell)>;
  Sub(Precat base, Predicate keep, std::string name)
      : PrecatImpl(base.dim(), std::move(name)), base_(std::move(base)), keep_(std::move(keep)) {}

  const Precat& base() const { return base_; }

  // Base cells kept at M, ascending.
  std::shared_ptr<const std::vector<Cell>> members(const ThetaObject& m) const {
    return members_.get(m, [&] {
      std::vector<Cell> out;
      const std::size_t nb = base_.count(m);
      for (Cell c = 0; c < nb; ++c) {
        if (keep_(m, c)) out.push_back(c);
      }
      return out;
    });
  }

  std::optional<Cell> index_of(const ThetaObject& m, Cell base_cell) const {
    auto mem = members(m);
    auto it = std::lower_bound(mem->begin(), mem->end(), base_cell);
    if (it == mem->end() || *it != base_cell) return std::nullopt;
    return static_cast<Cell>(it - mem->begin());
  }

 protected:
  Labels make_labels(const ThetaObject& m) const override {
    auto mem = members(m);
    auto bl = base_.labels(m);
    Labels out;
    for (Cell c : *mem) out.push_back((*bl)[c]);
    return out;
  }
  Table make_restriction(const ThetaMorphism& f) const override {
    auto mem = members(f.target());
    auto r = base_.restriction(f);
    Table t;
    for (Cell c : *mem) {
      auto idx = index_of(f.source(), (*r)[c]);
      if (!idx) throw ConstructionError(name() + " is not closed under " + f.str());
      t.push_back(*idx);
    }
    return t;
  }

 private:
  Precat base_;
  Predicate keep_;
  Memo<ThetaObject, std::vector<Cell>> members_;
};

}  // namespace impl

struct Sub {
  Precat object;
  PrecatMap inclusion;

  std::optional<Cell> index_of(const ThetaObject& m, Cell base_cell) const {
    return dynamic_cast<const impl::Sub*>(object.get())->index_of(m, base_cell);
  }
};

inline Sub subpresheaf(const Precat& base, impl::Sub::Predicate keep, std::string name) {
  auto s = std::make_shared<const impl::Sub>(base, std::move(keep), std::move(name));
  Precat obj(s);
  PrecatMap inc(obj, base, [s](const ThetaObject& m) { return *s->members(m); }, "incl");
  return {obj, inc};
}

// ---------------------------------------------------------------------------
// Rows, slices and hom precats

namespace impl {

// A_{p/}: the (n-1)-precat T -> A_{(p,T)}.
class Row : public PrecatImpl {
 public:
  Row(Precat a, int p)
      : PrecatImpl(a.dim() - 1, a.name() + "_" + std::to_string(p) + "/"), a_(std::move(a)), p_(p) {
    if (a_.dim() < 1) throw InvalidArgument("rows need dimension >= 1");
    if (p < 0) throw InvalidArgument("negative row index");
  }

 protected:
  Labels make_labels(const ThetaObject& t) const override { return *a_.labels(t.prepend(p_)); }
  Table make_restriction(const ThetaMorphism& g) const override {
    if (p_ == 0) {
      Table t(a_.count(ThetaObject::zero(a_.dim())));
      std::iota(t.begin(), t.end(), Cell{0});
      return t;
    }
    return *a_.restriction(with_first(identity_map(p_), p_, g));
  }

 private:
  Precat a_;
  int p_;
};

}  // namespace impl

inline Precat row(const Precat& a, int p) { return make_precat<impl::Row>(a, p); }

// Vertices of a cell at (p, T), read through the maps 0 -> (p, T).
inline std::vector<Cell> vertices(const Precat& a, const ThetaObject& m, Cell c) {
  std::vector<Cell> out;
  if (m.is_zero()) return {c};
  for (int i = 0; i <= m[0]; ++i) out.push_back(a.act(vertex(m, i), c));
  return out;
}

// A_{p/}(x_0, ..., x_p) as a sub-presheaf of the row.
inline Sub slice(const Precat& a, int p, const std::vector<Cell>& objects) {
  if (objects.size() != static_cast<std::size_t>(p) + 1) throw InvalidArgument("slice needs p+1 objects");
  Precat r = row(a, p);
  std::string name = a.name() + "_" + std::to_string(p) + "/(";
  for (std::size_t i = 0; i < objects.size(); ++i) name += (i ? "," : "") + std::to_string(objects[i]);
  name += ")";
  return subpresheaf(r, [a, p, objects](const ThetaObject& t, Cell c) {
    const ThetaObject m = t.prepend(p);
    for (int i = 0; i <= p; ++i) {
      const Cell v = m.is_zero() ? c : a.act(vertex(m, i), c);
      if (v != objects[static_cast<std::size_t>(i)]) return false;
    }
    return true;
  }, name);
}

inline Sub hom(const Precat& a, Cell x, Cell y) { return slice(a, 1, {x, y}); }

}  // namespace thetacat
