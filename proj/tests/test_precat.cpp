#include <atomic>
#include <thread>

#include "catch_amalgamated.hpp"
#include "thetacat/thetacat.hpp"

using namespace thetacat;

namespace {

const Window w2{2, -1};

ThetaObject obj(int n, std::vector<int> e) { return ThetaObject::of(n, e); }

}  // namespace

TEST_CASE("terminal, empty and discrete levels") {
  for (const auto& m : window_objects(2, w2)) {
    CHECK(terminal(2).count(m) == 1);
    CHECK(empty(2).count(m) == 0);
    CHECK(discrete(2, 3).count(m) == 3);
  }
  auto p = discrete(1, 2);
  CHECK(p.label(obj(1, {1}), 1) == "1");
  CHECK_THROWS_AS(p.label(obj(1, {1}), 2), DomainError);
}

TEST_CASE("nerve levels and actions") {
  auto n = nerve(categories::I(), 1);
  CHECK(n.count(obj(1, {1})) == 3);
  const ThetaObject two = obj(1, {2});
  for (Cell c = 0; c < n.count(two); ++c) CHECK(n.act(identity(two), c) == c);

  // Degenerating an object to (p) gives the chain of identities on it.
  for (Cell x = 0; x < 2; ++x) {
    for (int p = 1; p <= 3; ++p) {
      const ThetaObject m = obj(1, {p});
      const Cell d = n.degeneracy(x, m);
      CHECK(vertices(n, m, d) == std::vector<Cell>(static_cast<std::size_t>(p) + 1, x));
    }
  }
  // Lifts with the same normal form are the same morphism, hence act alike.
  auto a = normalize_morphism(obj(2, {1, 1}), obj(2, {1, 1}), {{0, 1}, {0, 0}});
  auto b = normalize_morphism(obj(2, {1, 1}), obj(2, {1, 1}), {{0, 1}, {0, 0}});
  auto n2 = nerve(categories::I(), 2);
  for (Cell c = 0; c < n2.count(obj(2, {1, 1})); ++c) CHECK(n2.act(a, c) == n2.act(b, c));
}

TEST_CASE("products") {
  auto i = nerve(categories::I(), 1);
  auto ii = product(i, i);
  CHECK(ii.count(obj(1, {1})) == 9);
  auto ib = nerve(categories::Ibar(), 1);
  auto prod = product(i, ib);
  for (const auto& m : window_objects(1, Window{3, -1})) CHECK(prod.count(m) == i.count(m) * ib.count(m));
  CHECK(check_functoriality(prod, w2).ok());

  auto unit = product(terminal(1), i);
  auto iso = iso_windowed(unit, i, Window{3, -1});
  REQUIRE(iso);
  CHECK(is_natural(*iso, Window{3, -1}));
  CHECK(is_natural(projection(unit, 1), Window{3, -1}));

  // Pairing the projections is the identity; projections of a pairing recover the legs.
  auto pr = pairing(projection(ii, 0), projection(ii, 1), ii);
  CHECK(maps_equal(pr, identity_map(ii), w2));
  auto f = identity_map(i);
  auto pt = terminal(1);
  auto g = to_terminal(i, pt);
  auto ip = product(i, pt);
  auto fg = pairing(f, g, ip);
  CHECK(maps_equal(compose(projection(ip, 0), fg), f, w2));
  CHECK(maps_equal(compose(projection(ip, 1), fg), g, w2));
  auto i_ib = product(i, ib), ib_i = product(ib, i);
  auto sw = swap_map(i_ib, ib_i);
  CHECK(is_natural(sw, w2));
  CHECK(maps_equal(compose(swap_map(ib_i, i_ib), sw), identity_map(i_ib), w2));
}

TEST_CASE("pushouts") {
  auto pt = terminal(0);
  auto e = empty(0);
  auto two = coproduct(pt, terminal(0));
  CHECK(two.object.count(ThetaObject::zero(0)) == 2);

  auto d2 = discrete(0, 2);
  auto sq = product(d2, d2);
  auto po = pushout(projection(sq, 0), projection(sq, 1));
  CHECK(po.object.count(ThetaObject::zero(0)) == 1);

  auto s1 = sigma(1, 1);
  CHECK(s1.space.count(obj(1, {1})) == 2);
  CHECK(check_functoriality(s1.space, Window{3, -1}).ok());
  (void)e;
}

TEST_CASE("pushouts of nerves are functorial and the legs are natural") {
  auto i = nerve(categories::I(), 1);
  auto pt = terminal(1);
  auto po = pushout(point_map(pt, i, 1), point_map(pt, i, 0));
  CHECK(po.object.count(ThetaObject::zero(1)) == 3);
  CHECK(check_functoriality(po.object, Window{3, -1}).ok());
  CHECK(is_natural(po.left, Window{3, -1}));
  CHECK(is_natural(po.right, Window{3, -1}));
}

TEST_CASE("rows, slices and homs") {
  auto ib = nerve(categories::Ibar(), 2);
  auto r = row(ib, 1);
  CHECK(r.dim() == 1);
  CHECK(r.count(ThetaObject::zero(1)) == 4);
  auto h = hom(ib, 0, 1);
  CHECK(h.object.count(ThetaObject::zero(1)) == 1);
  CHECK(is_natural(h.inclusion, w2));
  CHECK(check_functoriality(h.object, w2).ok());
}

TEST_CASE("memoized levels are shared between threads") {
  auto a = product(nerve(categories::chain(3), 2), nerve(categories::Ibar(), 2));
  const auto objs = window_objects(2, w2);
  std::vector<std::vector<std::size_t>> seen(8);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < seen.size(); ++t) {
    pool.emplace_back([&, t] {
      for (const auto& f : window_morphisms(2, w2)) seen[t].push_back(a.restriction(f)->size() + a.count(f.source()));
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& s : seen) CHECK(s == seen.front());
  CHECK(check_functoriality(a, w2).ok());
}
