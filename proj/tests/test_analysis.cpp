#include "catch_amalgamated.hpp"
#include "thetacat/thetacat.hpp"

using namespace thetacat;

namespace {

const Window w2{2, -1};
const Window w3{3, -1};

ThetaObject obj(int n, std::vector<int> e) { return ThetaObject::of(n, e); }

// Isomorphism classes of objects by brute force over pairs of arrows.
std::size_t reference_iso_classes(const FiniteCategory& c) {
  const int no = static_cast<int>(c.num_objects());
  std::vector<int> rep(static_cast<std::size_t>(no), -1);
  std::size_t classes = 0;
  for (int x = 0; x < no; ++x) {
    for (int y = 0; y < x && rep[static_cast<std::size_t>(x)] < 0; ++y) {
      for (int f : c.hom(x, y)) {
        for (int g : c.hom(y, x)) {
          if (c.table[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)] == c.ids[static_cast<std::size_t>(x)] &&
              c.table[static_cast<std::size_t>(f)][static_cast<std::size_t>(g)] == c.ids[static_cast<std::size_t>(y)]) {
            rep[static_cast<std::size_t>(x)] = rep[static_cast<std::size_t>(y)];
          }
        }
      }
    }
    if (rep[static_cast<std::size_t>(x)] < 0) rep[static_cast<std::size_t>(x)] = static_cast<int>(classes++);
  }
  return classes;
}

}  // namespace

TEST_CASE("segal maps of nerves, upsilon and monoidal objects are bijective") {
  CHECK(segal_check(nerve(categories::Ibar(), 2), w3).strict());
  CHECK(segal_check(nerve(categories::chain(2), 1), Window{4, -1}).strict());
  CHECK(segal_check(upsilon({discrete(0, 2)}), Window{4, -1}).strict());
  CHECK(segal_check(upsilon({discrete(1, 2), nerve(categories::I(), 1)}), w2).strict());
  auto rep = segal_check(ck_monoidal(cyclic_monoid(0, 2), 2), w3);
  CHECK(rep.strict());
  CHECK_FALSE(rep.entries.empty());
}

TEST_CASE("the delooping of two points is not strict") {
  auto x = delooping_X({discrete(0, 2), 0});
  auto rep = segal_check(x, w3);
  REQUIRE_FALSE(rep.strict());
  auto e = rep.first_failure();
  REQUIRE(e);
  CHECK(e->p == 2);
  CHECK(e->source_size == 3);
  CHECK(e->target_size == 4);
  CHECK(e->injective);
  CHECK_FALSE(e->surjective);
  CHECK_THROWS_AS(category_from_nerve(x), NotStrict);
}

TEST_CASE("categories read back from nerves") {
  auto i = category_from_nerve(nerve(categories::I(), 1));
  CHECK(isomorphic(i, categories::I()));
  auto ib = category_from_nerve(nerve(categories::Ibar(), 2));
  CHECK(isomorphic(ib, categories::Ibar()));
  auto z3 = category_from_nerve(nerve(categories::cyclic_group(3), 1));
  CHECK(isomorphic(z3, categories::cyclic_group(3)));
}

TEST_CASE("tau_0") {
  CHECK(tau_zero(nerve(categories::Ibar(), 1)).count == 1);
  CHECK(tau_zero(nerve(categories::I(), 1)).count == 2);
  CHECK(tau_zero(nerve(categories::I(), 2)).count == 2);
  CHECK(tau_zero(discrete(0, 3)).count == 3);
  CHECK(tau_zero(sigma(0, 0).space).count == 2);
  // tau_0 of a product is the product of tau_0's.
  auto cats = enumerate_categories(3, 2, 30);
  for (std::size_t a = 0; a < cats.size(); a += 3) {
    for (std::size_t b = 1; b < cats.size(); b += 4) {
      auto pa = nerve(cats[a], 1), pb = nerve(cats[b], 1);
      INFO(cats[a].name << " x " << cats[b].name);
      CHECK(tau_zero(pa).count == reference_iso_classes(cats[a]));
      CHECK(tau_zero(product(pa, pb)).count == tau_zero(pa).count * tau_zero(pb).count);
    }
  }
}

TEST_CASE("truncation") {
  auto i2 = nerve(categories::I(), 2);
  auto t = truncate(i2, 1);
  CHECK(t.dim() == 1);
  CHECK(iso_windowed(t, nerve(categories::I(), 1), w3));
  CHECK(check_functoriality(t, w3).ok());
  auto s0 = truncate(sigma(0, 0).space, 0);
  CHECK(s0.count(ThetaObject::zero(0)) == 2);
  auto c1 = truncate(ck_monoidal(cyclic_monoid(0, 2), 1), 1);
  CHECK(c1.count(ThetaObject::zero(1)) == 1);
  CHECK(c1.count(obj(1, {1})) == 2);
  auto back = category_from_nerve(c1);
  CHECK(isomorphic(back, categories::cyclic_group(2)));
}

TEST_CASE("contractibility and connectivity") {
  CHECK(equivalent_to_point(nerve(categories::Ibar(), 1)));
  CHECK(equivalent_to_point(nerve(categories::contractible_groupoid(3), 2)));
  CHECK_FALSE(equivalent_to_point(nerve(categories::I(), 1)));
  CHECK(equivalent_to_point(terminal(2)));
  CHECK_FALSE(equivalent_to_point(empty(1)));

  CHECK(is_k_connected(nerve(categories::Ibar(), 1), 0));
  CHECK_FALSE(is_k_connected(nerve(categories::I(), 1), 0));
  auto z2 = cyclic_monoid(0, 2);
  CHECK(is_k_connected(ck_monoidal(z2, 1), 0));
  CHECK_FALSE(is_k_connected(ck_monoidal(z2, 1), 1));
  CHECK(is_k_connected(ck_monoidal(z2, 2), 0));
  CHECK(is_k_connected(ck_monoidal(z2, 2), 1));
  CHECK_FALSE(is_k_connected(ck_monoidal(z2, 2), 2));
}

TEST_CASE("minimal dimension of maps of sets") {
  CHECK(min_dim_sets(Table{0, 1, 2}, 3) == MinDim0::Infinite);
  CHECK(min_dim_sets(Table{0, 0}, 1) == MinDim0::One);
  CHECK(min_dim_sets(Table{}, 1) == MinDim0::Zero);
  CHECK(min_dim_sets(Table{}, 0) == MinDim0::Infinite);
  CHECK(min_dim_sets(Table{0, 0, 1}, 3) == MinDim0::Zero);
  CHECK(to_string(MinDim0::Infinite) == "inf");
  CHECK_THROWS_AS(min_dim_sets(Table{3}, 2), DomainError);
  CHECK_THROWS_AS(min_dim_sets(identity_map(terminal(1))), InvalidArgument);
}
