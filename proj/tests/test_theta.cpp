#include <map>
#include <random>
#include <set>

#include "catch_amalgamated.hpp"
#include "thetacat/theta.hpp"
#include "thetacat/window.hpp"

using namespace thetacat;

namespace {

// Reference quotient of Delta^n: all lifts between padded tuples, identified
// when they agree up to and including the first constant component.
using Lift = std::vector<std::vector<int>>;

std::vector<std::vector<int>> all_monotone(int s, int t) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int lo) -> void {
    if (static_cast<int>(cur.size()) == s + 1) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v <= t; ++v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<int> padded(const std::vector<int>& e, int n) {
  std::vector<int> p(static_cast<std::size_t>(n), 0);
  for (std::size_t j = 0; j < e.size() && e[j] != 0; ++j) p[j] = e[j];
  return p;
}

Lift truncated(const Lift& l) {
  Lift out;
  for (const auto& c : l) {
    out.push_back(c);
    if (std::all_of(c.begin(), c.end(), [&](int v) { return v == c.front(); })) break;
  }
  return out;
}

std::vector<Lift> all_lifts(const std::vector<int>& s, const std::vector<int>& t) {
  std::vector<Lift> out{{}};
  for (std::size_t j = 0; j < s.size(); ++j) {
    std::vector<Lift> next;
    for (const auto& l : out) {
      for (const auto& c : all_monotone(s[j], t[j])) {
        auto m = l;
        m.push_back(c);
        next.push_back(m);
      }
    }
    out = std::move(next);
  }
  return out;
}

std::set<Lift> reference_classes(const std::vector<int>& s, const std::vector<int>& t) {
  std::set<Lift> out;
  for (const auto& l : all_lifts(s, t)) out.insert(truncated(l));
  return out;
}

std::vector<ThetaObject> small_objects(int n) { return window_objects(n, Window{2, -1}); }

}  // namespace

TEST_CASE("objects normalize by truncating at the first zero") {
  auto a = ThetaObject::of(2, {2, 1});
  CHECK(a.length() == 2);
  CHECK(a.str() == "(2,1)");
  auto b = ThetaObject::of(3, {1, 0, 2});
  CHECK(b == ThetaObject::of(3, {1}));
  CHECK(b.length() == 1);
  CHECK(ThetaObject::of(2, {}).is_zero());
  CHECK_THROWS_AS(ThetaObject::of(1, {1, 1}), InvalidObject);
  CHECK_THROWS_AS(ThetaObject::of(2, {-1}), InvalidObject);
}

TEST_CASE("normal forms of lifts") {
  auto one = ThetaObject::of(1, {1});
  auto c0 = normalize_morphism(one, one, {{0, 0}});
  auto c1 = normalize_morphism(one, one, {{1, 1}});
  CHECK(c0.components() == std::vector<MonotoneMap>{{0, 0}});
  CHECK(c0 != c1);

  auto m = ThetaObject::of(3, {1, 1, 1});
  auto g = normalize_morphism(m, m, {{0, 1}, {0, 0}, {0, 1}});
  auto h = normalize_morphism(m, m, {{0, 1}, {0, 0}, {1, 1}});
  CHECK(g == h);
  CHECK(g.components().size() == 2);

  auto sq = ThetaObject::of(2, {2, 2});
  CHECK(identity(sq).components() == std::vector<MonotoneMap>{{0, 1, 2}, {0, 1, 2}});
  CHECK(identity(sq).is_identity());

  CHECK_THROWS_AS(normalize_morphism(one, one, {{1, 0}}), InvalidMorphism);
  CHECK_THROWS_AS(normalize_morphism(one, one, {{0, 2}}), InvalidMorphism);
  CHECK_THROWS_AS(normalize_morphism(one, one, {{0}}), InvalidMorphism);
}

TEST_CASE("morphism counts") {
  auto o1 = ThetaObject::of(1, {1});
  auto o2 = ThetaObject::of(1, {2});
  CHECK(enumerate_morphisms(o1, o1).size() == 3);
  CHECK(enumerate_morphisms(o1, o2).size() == 6);
  CHECK(enumerate_morphisms(ThetaObject::of(2, {1}), ThetaObject::of(2, {1, 1})).size() == 4);
}

TEST_CASE("enumeration agrees with the quotient of Delta^n lifts") {
  for (int n = 1; n <= 3; ++n) {
    const auto objs = window_objects(n, Window{2, -1});
    for (const auto& s : objs) {
      for (const auto& t : objs) {
        const auto ref = reference_classes(padded(s.entries(), n), padded(t.entries(), n));
        const auto got = enumerate_morphisms(s, t);
        std::set<Lift> mine;
        for (const auto& f : got) mine.insert(f.components());
        INFO(s.str() << " -> " << t.str());
        CHECK(got.size() == ref.size());
        CHECK(mine == ref);
      }
    }
  }
}

TEST_CASE("composition agrees with composing arbitrary lifts") {
  const int n = 2;
  const auto objs = small_objects(n);
  std::size_t checked = 0;
  for (const auto& a : objs) {
    for (const auto& b : objs) {
      for (const auto& c : objs) {
        const auto pa = padded(a.entries(), n), pb = padded(b.entries(), n), pc = padded(c.entries(), n);
        const auto lg = all_lifts(pa, pb);
        const auto lf = all_lifts(pb, pc);
        for (std::size_t x = 0; x < lg.size(); x += 3) {
          for (std::size_t y = 0; y < lf.size(); y += 3) {
            Lift comp(n);
            for (int j = 0; j < n; ++j) {
              for (int v : lg[x][j]) comp[j].push_back(lf[y][j][v]);
            }
            auto g = normalize_morphism(a, b, lg[x]);
            auto f = normalize_morphism(b, c, lf[y]);
            CHECK(compose(f, g).components() == truncated(comp));
            ++checked;
          }
        }
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("a constant first component survives composition alone") {
  auto s = ThetaObject::of(2, {1, 1});
  auto t = ThetaObject::of(2, {2, 1});
  auto f = normalize_morphism(t, s, {{1, 1, 1}, {0, 1}});
  for (const auto& g : enumerate_morphisms(s, t)) {
    auto fg = compose(f, g);
    CHECK(fg.components().size() == 1);
    CHECK(is_constant(fg.components().front()));
  }
}

TEST_CASE("identity and associativity laws") {
  for (int n = 1; n <= 2; ++n) {
    const auto objs = small_objects(n);
    for (const auto& s : objs) {
      for (const auto& t : objs) {
        for (const auto& f : enumerate_morphisms(s, t)) {
          CHECK(compose(identity(t), f) == f);
          CHECK(compose(f, identity(s)) == f);
        }
      }
    }
  }
  std::mt19937 rng(7);
  const auto objs = small_objects(2);
  std::uniform_int_distribution<std::size_t> pick(0, objs.size() - 1);
  for (int trial = 0; trial < 400; ++trial) {
    const auto& a = objs[pick(rng)];
    const auto& b = objs[pick(rng)];
    const auto& c = objs[pick(rng)];
    const auto& d = objs[pick(rng)];
    auto hs = enumerate_morphisms(a, b), gs = enumerate_morphisms(b, c), fs = enumerate_morphisms(c, d);
    auto h = hs[rng() % hs.size()], g = gs[rng() % gs.size()], f = fs[rng() % fs.size()];
    CHECK(compose(f, compose(g, h)) == compose(compose(f, g), h));
  }
  CHECK_THROWS_AS(compose(identity(objs[1]), identity(objs[2])), CompositionError);
}

TEST_CASE("segal face families") {
  auto two = segal_face_family(2, ThetaObject::zero(0));
  REQUIRE(two.size() == 2);
  CHECK(two[0].components() == std::vector<MonotoneMap>{{0, 1}});
  CHECK(two[1].components() == std::vector<MonotoneMap>{{1, 2}});
  auto tail = ThetaObject::of(1, {2});
  auto one = segal_face_family(1, tail);
  REQUIRE(one.size() == 1);
  CHECK(one[0].is_identity());
  auto three = segal_face_family(3, ThetaObject::of(1, {1}));
  REQUIRE(three.size() == 3);
  for (const auto& f : three) {
    CHECK(f.source() == ThetaObject::of(2, {1, 1}));
    CHECK(f.target() == ThetaObject::of(2, {3, 1}));
    CHECK(f.components()[1] == identity_map(1));
  }
  CHECK_THROWS_AS(segal_face_family(0, tail), InvalidArgument);
}

TEST_CASE("window generators generate every window morphism") {
  for (int n = 1; n <= 3; ++n) {
    for (int b = 1; b <= (n == 3 ? 2 : 3); ++b) {
      const Window w{b, -1};
      const auto all = window_morphisms(n, w);
      const auto gens = window_generators(n, w);
      std::map<ThetaObject, std::vector<ThetaMorphism>> by_source;
      for (const auto& g : gens) by_source[g.source()].push_back(g);
      std::set<ThetaMorphism> closure;
      std::vector<ThetaMorphism> todo;
      for (const auto& m : window_objects(n, w)) todo.push_back(identity(m));
      while (!todo.empty()) {
        auto f = todo.back();
        todo.pop_back();
        if (!closure.insert(f).second) continue;
        for (const auto& g : by_source[f.target()]) todo.push_back(compose(g, f));
      }
      INFO("n=" << n << " B=" << b);
      CHECK(closure.size() == all.size());
      CHECK(std::set<ThetaMorphism>(all.begin(), all.end()) == closure);
    }
  }
}

TEST_CASE("window object lists") {
  CHECK(window_objects(2, Window{2, -1}).size() == 7);
  CHECK(window_objects(2, Window{3, 1}).size() == 4);
  CHECK(window_objects(0, Window{3, -1}).size() == 1);
  CHECK_THROWS_AS(window_objects(1, Window{0, -1}), InvalidArgument);
}
