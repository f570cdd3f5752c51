#pragma once

// Presheaves whose cells are described by integer keys. Subclasses list the
// keys of a level and say how a morphism acts on a key; indexing and
// restriction tables are derived from that.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "thetacat/precat.hpp"

namespace thetacat {

using Key = std::vector<long>;

namespace impl {

class Keyed : public PrecatImpl {
 public:
  struct Level {
    std::vector<Key> keys;
    std::map<Key, Cell> index;
  };

  using PrecatImpl::PrecatImpl;

  std::shared_ptr<const Level> level(const ThetaObject& m) const {
    return keyed_.get(m, [&] {
      Level lv;
      lv.keys = make_keys(m);
      for (std::size_t i = 0; i < lv.keys.size(); ++i) {
        if (!lv.index.emplace(lv.keys[i], static_cast<Cell>(i)).second) {
          throw ConstructionError(name() + ": repeated key at " + m.str());
        }
      }
      return lv;
    });
  }

  const Key& key(const ThetaObject& m, Cell c) const {
    auto lv = level(m);
    if (c >= lv->keys.size()) throw DomainError("no cell " + std::to_string(c) + " at " + m.str());
    return lv->keys[c];
  }

  Cell index(const ThetaObject& m, const Key& k) const {
    auto lv = level(m);
    auto it = lv->index.find(k);
    if (it == lv->index.end()) throw ConstructionError(name() + ": key not present at " + m.str());
    return it->second;
  }

  virtual Key act_key(const ThetaMorphism& f, const Key& k) const = 0;

 protected:
  virtual std::vector<Key> make_keys(const ThetaObject& m) const = 0;
  virtual std::string key_label(const ThetaObject& m, const Key& k) const = 0;

  Labels make_labels(const ThetaObject& m) const override {
    auto lv = level(m);
    Labels out;
    out.reserve(lv->keys.size());
    for (const auto& k : lv->keys) out.push_back(key_label(m, k));
    return out;
  }

  Table make_restriction(const ThetaMorphism& f) const override {
    auto tgt = level(f.target());
    auto src = level(f.source());
    Table t;
    t.reserve(tgt->keys.size());
    for (const auto& k : tgt->keys) {
      auto it = src->index.find(act_key(f, k));
      if (it == src->index.end()) throw ConstructionError(name() + ": action of " + f.str() + " leaves the level");
      t.push_back(it->second);
    }
    return t;
  }

 private:
  Memo<ThetaObject, Level> keyed_;
};

}  // namespace impl

inline const impl::Keyed& keyed(const Precat& p) {
  const auto* k = dynamic_cast<const impl::Keyed*>(p.get());
  if (!k) throw InvalidArgument(p.name() + " is not a formula-defined precat");
  return *k;
}

// Calls visit(tuple) for every tuple with tuple[i] < sizes[i], lexicographically.
template <class Visit>
void for_each_tuple(const std::vector<std::size_t>& sizes, Visit&& visit) {
  for (std::size_t s : sizes) {
    if (s == 0) return;
  }
  std::vector<long> cur(sizes.size(), 0);
  while (true) {
    visit(cur);
    std::size_t i = sizes.size();
    while (i > 0) {
      --i;
      if (static_cast<std::size_t>(++cur[i]) < sizes[i]) break;
      cur[i] = 0;
      if (i == 0) return;
    }
    if (sizes.empty()) return;
  }
}

}  // namespace thetacat
