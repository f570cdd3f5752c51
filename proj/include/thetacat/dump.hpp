#pragma once

// Canonical windowed JSON dumps and precats read back from them.

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "thetacat/precat.hpp"
#include "thetacat/window.hpp"

namespace thetacat {

using json = nlohmann::json;

inline json to_json(const ThetaObject& m) { return m.entries(); }

inline json to_json(const ThetaMorphism& f) {
  return {{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"components", f.components()}};
}

inline ThetaObject object_from_json(int n, const json& j) {
  if (!j.is_array()) throw InvalidArgument("object must be an integer array");
  return ThetaObject::of(n, j.get<std::vector<int>>());
}

inline ThetaMorphism morphism_from_json(int n, const json& j) {
  const ThetaObject s = object_from_json(n, j.at("source"));
  const ThetaObject t = object_from_json(n, j.at("target"));
  auto comps = j.at("components").get<std::vector<MonotoneMap>>();
  for (std::size_t k = comps.size(); k < static_cast<std::size_t>(n); ++k) comps.push_back(constant_map(s.padded(k), 0));
  auto f = normalize_morphism(s, t, comps);
  if (f.components().size() != j.at("components").size()) throw InvalidMorphism("morphism is not in normal form");
  return f;
}

// Levels in canonical order, cells sorted by label, one action per window
// morphism mapping target-cell labels to source-cell labels.
inline json dump(const Precat& p, const Window& w) {
  const int n = p.dim();
  json levels = json::array();
  std::map<ThetaObject, std::shared_ptr<const Labels>> labels;
  for (const auto& m : window_objects(n, w)) {
    auto l = p.labels(m);
    labels[m] = l;
    Labels sorted = *l;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ConstructionError("dump: repeated label at level " + m.str());
    }
    levels.push_back({{"object", to_json(m)}, {"cells", sorted}});
  }
  json actions = json::array();
  for (const auto& f : window_morphisms(n, w)) {
    auto r = p.restriction(f);
    const auto& lt = *labels.at(f.target());
    const auto& ls = *labels.at(f.source());
    json map = json::object();
    for (std::size_t c = 0; c < r->size(); ++c) map[lt[c]] = ls[(*r)[c]];
    actions.push_back({{"morphism", to_json(f)}, {"map", map}});
  }
  return {{"n", n}, {"window", {{"B", w.B}}}, {"levels", levels}, {"actions", actions}};
}

namespace impl {

class TablePrecat : public PrecatImpl {
 public:
  TablePrecat(int n, std::string name, std::map<ThetaObject, Labels> levels,
              std::map<ThetaMorphism, Table> actions)
      : PrecatImpl(n, std::move(name)), levels_(std::move(levels)), actions_(std::move(actions)) {}

 protected:
  Labels make_labels(const ThetaObject& m) const override {
    auto it = levels_.find(m);
    if (it == levels_.end()) throw DomainError(name() + " has no level " + m.str());
    return it->second;
  }
  Table make_restriction(const ThetaMorphism& f) const override {
    auto it = actions_.find(f);
    if (it == actions_.end()) throw DomainError(name() + " has no action for " + f.str());
    return it->second;
  }

 private:
  std::map<ThetaObject, Labels> levels_;
  std::map<ThetaMorphism, Table> actions_;
};

}  // namespace impl

struct LoadedDump {
  Precat precat;
  Window window;
};

inline LoadedDump load_dump(const json& j, std::string name = "dump") {
  try {
    const int n = j.at("n").get<int>();
    Window w{j.at("window").at("B").get<int>(), -1};
    std::map<ThetaObject, Labels> levels;
    std::map<ThetaObject, std::map<std::string, Cell>> index;
    for (const auto& lv : j.at("levels")) {
      const ThetaObject m = object_from_json(n, lv.at("object"));
      Labels cells = lv.at("cells").get<Labels>();
      auto& idx = index[m];
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (!idx.emplace(cells[c], static_cast<Cell>(c)).second) throw InvalidArgument("repeated cell label");
      }
      levels[m] = std::move(cells);
    }
    std::map<ThetaMorphism, Table> actions;
    for (const auto& a : j.at("actions")) {
      const ThetaMorphism f = morphism_from_json(n, a.at("morphism"));
      const auto& ti = index.at(f.target());
      const auto& si = index.at(f.source());
      Table t(ti.size());
      if (a.at("map").size() != ti.size()) throw InvalidArgument("action of " + f.str() + " is incomplete");
      for (const auto& [from, to] : a.at("map").items()) t[ti.at(from)] = si.at(to.get<std::string>());
      actions[f] = std::move(t);
    }
    return {make_precat<impl::TablePrecat>(n, std::move(name), std::move(levels), std::move(actions)), w};
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed dump: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw InvalidArgument(std::string("malformed dump: ") + e.what());
  }
}

}  // namespace thetacat
