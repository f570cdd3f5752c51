#include "catch_amalgamated.hpp"
#include "thetacat/thetacat.hpp"

using namespace thetacat;

namespace {

const Window w2{2, -1};

// A nerve with one entry of one action table redirected.
class Corrupted : public PrecatImpl {
 public:
  Corrupted(Precat base, ThetaMorphism bad) : PrecatImpl(base.dim(), "corrupted"), base_(std::move(base)), bad_(std::move(bad)) {}

 protected:
  Labels make_labels(const ThetaObject& m) const override { return *base_.labels(m); }
  Table make_restriction(const ThetaMorphism& f) const override {
    Table t = *base_.restriction(f);
    if (f == bad_) t[0] = (t[0] + 1) % static_cast<Cell>(base_.count(f.source()));
    return t;
  }

 private:
  Precat base_;
  ThetaMorphism bad_;
};

bool commutes(const PrecatMap& a, const PrecatMap& b, const PrecatMap& c, const PrecatMap& d, const Window& w) {
  // a o b == c o d
  return maps_equal(compose(a, b), compose(c, d), w);
}

}  // namespace

TEST_CASE("functoriality of nerves and pushouts") {
  for (const auto& c : {categories::I(), categories::Ibar(), categories::chain(2), categories::cyclic_group(3)}) {
    for (int n = 1; n <= 2; ++n) {
      auto rep = check_functoriality(nerve(c, n), w2);
      CHECK(rep.ok());
      CHECK(rep.morphisms_checked == window_morphisms(n, w2).size());
    }
  }
  auto i = nerve(categories::I(), 2);
  auto pt = terminal(2);
  auto po = pushout(point_map(pt, i, 1), point_map(pt, i, 0));
  CHECK(check_functoriality(po.object, w2).ok());
}

TEST_CASE("a corrupted action is reported") {
  auto base = nerve(categories::I(), 1);
  const ThetaObject one = ThetaObject::of(1, {1});
  const ThetaObject two = ThetaObject::of(1, {2});
  auto bad = normalize_morphism(one, two, {{0, 2}});
  auto p = make_precat<Corrupted>(base, bad);
  auto rep = check_functoriality(p, Window{2, -1});
  REQUIRE_FALSE(rep.ok());
  const auto& v = rep.violations.front();
  CHECK(v.kind == "composition");
  CHECK(v.morphisms.size() == 2);
  bool mentions_bad = false;
  for (const auto& x : rep.violations) {
    const auto& f = x.morphisms[0];
    const auto& g = x.morphisms[1];
    mentions_bad = mentions_bad || f == bad || g == bad || compose(g, f) == bad;
  }
  CHECK(mentions_bad);
}

TEST_CASE("windowed isomorphism search") {
  auto i = nerve(categories::I(), 1);
  auto ib = nerve(categories::Ibar(), 1);
  auto self = iso_windowed(i, i, Window{3, -1});
  REQUIRE(self);
  CHECK(maps_equal(*self, identity_map(i), Window{3, -1}));
  CHECK_FALSE(iso_windowed(i, ib, Window{3, -1}));

  auto s2 = sigma(2, 2);
  auto ss1 = suspension(sigma(1, 1));
  auto iso = iso_windowed(s2.space, ss1.space, w2);
  REQUIRE(iso);
  CHECK(is_natural(*iso, w2));
  CHECK(is_natural(invert(*iso, w2), w2));
}

TEST_CASE("cofibrations") {
  auto a = nerve(categories::I(), 1);
  auto pt = terminal(1);
  CHECK(is_cofibration(point_map(pt, a, 0), w2));
  auto two = discrete(1, 2);
  CHECK_FALSE(is_cofibration(to_terminal(two, pt), w2));
  auto two0 = discrete(0, 2);
  CHECK(is_cofibration(to_terminal(two0, terminal(0)), w2));
}

TEST_CASE("enumerated maps between nerves are functors") {
  // Functors I -> I: three; Ibar -> I: two constants; I -> Ibar: four.
  auto i = nerve(categories::I(), 1);
  auto ib = nerve(categories::Ibar(), 1);
  CHECK(enumerate_maps(i, i, Window{3, -1}).size() == 3);
  CHECK(enumerate_maps(ib, i, Window{3, -1}).size() == 2);
  CHECK(enumerate_maps(i, ib, Window{3, -1}).size() == 4);
  for (const auto& u : enumerate_maps(i, ib, w2)) CHECK(is_natural(u, w2));
}

TEST_CASE("pushout universal property on the window") {
  for (int n = 1; n <= 2; ++n) {
    auto i = nerve(categories::I(), n);
    auto pt = terminal(n);
    auto f = point_map(pt, i, 1);
    auto g = point_map(pt, i, 0);
    auto po = pushout(f, g);
    for (const auto& t : {nerve(categories::chain(2), n), nerve(categories::Ibar(), n), discrete(n, 2)}) {
      const auto from_po = enumerate_maps(po.object, t, w2);
      std::size_t cocones = 0;
      for (const auto& u : enumerate_maps(i, t, w2)) {
        for (const auto& v : enumerate_maps(i, t, w2)) {
          if (!commutes(u, f, v, g, w2)) continue;
          ++cocones;
          auto h = pushout_induced(po, u, v);
          CHECK(is_natural(h, w2));
          CHECK(maps_equal(compose(h, po.left), u, w2));
          CHECK(maps_equal(compose(h, po.right), v, w2));
          std::size_t matches = 0;
          for (const auto& k : from_po) {
            if (maps_equal(compose(k, po.left), u, w2) && maps_equal(compose(k, po.right), v, w2)) ++matches;
          }
          CHECK(matches == 1);
        }
      }
      INFO("n=" << n << " into " << t.name());
      CHECK(cocones == from_po.size());
      CHECK(cocones > 0);
    }
  }
}

TEST_CASE("product and terminal laws on the window") {
  for (int n = 0; n <= 2; ++n) {
    auto a = n == 0 ? discrete(0, 2) : nerve(categories::I(), n);
    auto b = n == 0 ? discrete(0, 3) : nerve(categories::Ibar(), n);
    auto pt = terminal(n);
    auto ab = product(a, b);
    for (const auto& t : {pt, a, b}) {
      // Maps into A x B correspond to pairs of maps.
      const auto into = enumerate_maps(t, ab, w2);
      const auto to_a = enumerate_maps(t, a, w2);
      const auto to_b = enumerate_maps(t, b, w2);
      CHECK(into.size() == to_a.size() * to_b.size());
      for (const auto& u : to_a) {
        for (const auto& v : to_b) {
          auto p = pairing(u, v, ab);
          CHECK(is_natural(p, w2));
          CHECK(maps_equal(compose(projection(ab, 0), p), u, w2));
          CHECK(maps_equal(compose(projection(ab, 1), p), v, w2));
        }
      }
      // Exactly one map to the terminal object.
      CHECK(enumerate_maps(t, pt, w2).size() == 1);
    }
  }
}
