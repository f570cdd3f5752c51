// One line per acceptance criterion; exit status 0 iff every line passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "thetacat/thetacat.hpp"

using namespace thetacat;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string what;
  double limit_seconds;
  std::function<Outcome()> run;
};

Outcome suite_items(const std::vector<std::string>& names, int window) {
  SuiteOptions o;
  o.window = Window{window, -1};
  Outcome out{true, ""};
  for (const auto& r : run_suite(o, names)) {
    out.pass = out.pass && r.pass;
    out.detail += (out.detail.empty() ? "" : "; ") + r.name + " " + r.verdict() + " [" + r.detail + "]";
  }
  return out;
}

Outcome casezero_table() {
  Precat e = empty(0), pt = terminal(0), two = discrete(0, 2);
  PrecatMap a = from_empty(e, pt), b = to_terminal(two, pt);
  const MinDim0 aa = min_dim_sets(pushout_product(a, a).map);
  const MinDim0 ab = min_dim_sets(pushout_product(a, b).map);
  const MinDim0 ba = min_dim_sets(pushout_product(b, a).map);
  const MinDim0 bb = min_dim_sets(pushout_product(b, b).map);
  const bool ok = aa == MinDim0::Zero && ab == MinDim0::One && ba == MinDim0::One && bb == MinDim0::Infinite;
  return {ok, "m(a^a)=" + to_string(aa) + " m(a^b)=" + to_string(ab) + " m(b^a)=" + to_string(ba) +
                  " m(b^b)=" + to_string(bb)};
}

Outcome pushout_identities() {
  auto good = suite_items({"square", "rem1", "rem2"}, 2);
  SuiteOptions pre;
  pre.indexing = Indexing::PreErratum;
  const bool control_fails = !suite::square_identity(discrete(0, 2), terminal(0), pre);
  good.detail += std::string("; uncorrected indexing on E=2*, F=*: ") + (control_fails ? "fails as required" : "HOLDS");
  good.pass = good.pass && control_fails;
  return good;
}

Outcome nerve_round_trip() {
  std::vector<FiniteCategory> cats;
  for (const auto& c : enumerate_categories(3, 2)) cats.push_back(c);
  cats.push_back(categories::chain(2));
  cats.push_back(categories::contractible_groupoid(3));
  cats.push_back(categories::cyclic_group(4));
  std::size_t ok = 0, bad = 0;
  for (const auto& c : cats) {
    const bool small = c.num_objects() <= 3 && c.num_arrows() - c.num_objects() <= 6;
    auto n = nerve(c, 1);
    const bool strict = segal_check(n, Window{4, -1}).strict();
    bool round = false;
    try {
      round = isomorphic(category_from_nerve(n), c);
    } catch (const Error&) {
    }
    (small && strict && round ? ok : bad) += 1;
  }
  return {bad == 0 && ok >= 10, std::to_string(ok) + " categories (<=3 objects, <=6 non-identity arrows) strict at p<=4 "
                                    "and recovered up to isomorphism; " + std::to_string(bad) + " failures"};
}

Outcome strictness_counterexample() {
  auto rep = segal_check(delooping_X({discrete(0, 2), 0}), Window{3, -1});
  auto e = rep.first_failure();
  if (!e) return {false, "no failing Segal map"};
  const bool ok = e->p == 2 && e->source_size == 3 && e->target_size == 4;
  return {ok, "first failure at " + e->level.str() + " p=" + std::to_string(e->p) + ": source " +
                  std::to_string(e->source_size) + ", target " + std::to_string(e->target_size)};
}

Outcome connectivity() {
  const Window w{3, -1};
  auto z2 = cyclic_monoid(0, 2);
  const bool c1 = is_k_connected(ck_monoidal(z2, 1), 0, w);
  const bool c2 = is_k_connected(ck_monoidal(z2, 2), 1, w);
  const bool ni = is_k_connected(nerve(categories::I(), 1), 0, w);
  return {c1 && c2 && !ni, std::string("c1(Z/2) 0-connected=") + (c1 ? "true" : "false") +
                               " c2(Z/2) 1-connected=" + (c2 ? "true" : "false") +
                               " N(I) 0-connected=" + (ni ? "true" : "false")};
}

Outcome infrastructure_laws() {
  const Window w{2, -1};
  std::size_t violations = 0, checks = 0;
  auto expect = [&](bool b) {
    ++checks;
    if (!b) ++violations;
  };
  for (int n = 0; n <= 2; ++n) {
    std::vector<Precat> samples{terminal(n), empty(n), discrete(n, 2)};
    if (n >= 1) {
      samples.push_back(nerve(categories::I(), n));
      samples.push_back(nerve(categories::Ibar(), n));
      samples.push_back(upsilon({discrete(n - 1, 2)}));
      samples.push_back(sigma(1, n).space);
      samples.push_back(delooping_X({discrete(n - 1, 2), 0}));
    }
    for (const auto& p : samples) expect(check_functoriality(p, w).ok());
    for (const auto& p : samples) {
      for (const auto& q : samples) {
        if (p.count(ThetaObject::zero(n)) * q.count(ThetaObject::zero(n)) > 6) continue;
        auto pq = product(p, q);
        expect(check_functoriality(pq, w).ok());
        expect(is_natural(projection(pq, 0), w) && is_natural(projection(pq, 1), w));
      }
    }

    // Product and terminal universal properties against a few test objects.
    Precat a = n == 0 ? discrete(0, 2) : nerve(categories::I(), n);
    Precat b = n == 0 ? discrete(0, 3) : nerve(categories::Ibar(), n);
    Precat ab = product(a, b), pt = terminal(n);
    for (const auto& t : {pt, a, b}) {
      const auto to_a = enumerate_maps(t, a, w);
      const auto to_b = enumerate_maps(t, b, w);
      expect(enumerate_maps(t, ab, w).size() == to_a.size() * to_b.size());
      for (const auto& u : to_a) {
        for (const auto& v : to_b) {
          auto pr = pairing(u, v, ab);
          expect(is_natural(pr, w) && maps_equal(compose(projection(ab, 0), pr), u, w) &&
                 maps_equal(compose(projection(ab, 1), pr), v, w));
        }
      }
      expect(enumerate_maps(t, pt, w).size() == 1);
    }
    expect(static_cast<bool>(iso_windowed(product(pt, a), a, w)));

    // Pushout universal property: cocones correspond to maps out of the pushout.
    if (n >= 1) {
      auto i = nerve(categories::I(), n);
      auto f = point_map(pt, i, 1), g = point_map(pt, i, 0);
      auto po = pushout(f, g);
      expect(check_functoriality(po.object, w).ok());
      for (const auto& t : {nerve(categories::chain(2), n), nerve(categories::Ibar(), n), discrete(n, 2)}) {
        const auto out = enumerate_maps(po.object, t, w);
        std::size_t cocones = 0;
        for (const auto& u : enumerate_maps(i, t, w)) {
          for (const auto& v : enumerate_maps(i, t, w)) {
            if (!maps_equal(compose(u, f), compose(v, g), w)) continue;
            ++cocones;
            auto h = pushout_induced(po, u, v);
            expect(is_natural(h, w) && maps_equal(compose(h, po.left), u, w) && maps_equal(compose(h, po.right), v, w));
            std::size_t matches = 0;
            for (const auto& k : out) {
              if (maps_equal(compose(k, po.left), u, w) && maps_equal(compose(k, po.right), v, w)) ++matches;
            }
            expect(matches == 1);
          }
        }
        expect(cocones == out.size());
      }
    } else {
      Precat none = empty(0);
      auto po = pushout(from_empty(none, pt), from_empty(none, pt));
      expect(po.object.count(ThetaObject::zero(0)) == 2);
    }
  }
  return {violations == 0, std::to_string(checks) + " law checks, " + std::to_string(violations) + " violations"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "n=0 minimal-dimension table", 1.0, casezero_table},
      {2, "suspension tower sigma^{k+1} = Sigma(sigma^k), k=0,1,2, window B=2", 60.0,
       [] { return suite_items({"itsanothersuspension"}, 2); }},
      {3, "delooping X(A,a) = Sigma(A,a) for 2*, N(I), sigma^1, window B=2", 60.0,
       [] { return suite_items({"itsasuspension"}, 2); }},
      {4, "square, rem1, rem2 identities over {0,*,2*,N(I)}, window B=2, plus negative control", 300.0,
       pushout_identities},
      {5, "three-term decomposition for 2* in 3*, n=1, window B=3", 600.0,
       [] { return suite_items({"proveclaim"}, 3); }},
      {6, "Whitehead laws for N(Ibar) and c2(Z/2), k in {0,1}, window B=3", 600.0,
       [] { return suite_items({"prooflemma2", "prooflemma3", "prooflemma3bis"}, 3); }},
      {7, "nerve/Segal round trip", 600.0, nerve_round_trip},
      {8, "strictness counterexample X(2*) at p=2", 600.0, strictness_counterexample},
      {9, "connectivity of c^k(Z/2) and N(I)", 600.0, connectivity},
      {10, "presheaf functoriality, pushout and product/terminal laws, window B=2, n<=2", 600.0,
       infrastructure_laws},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = o.pass && in_time;
    all = all && pass;
    std::printf("criterion %2d %s: %s (%.3fs, limit %.0fs%s) %s\n", c.id, pass ? "PASS" : "FAIL", c.what.c_str(),
                secs, c.limit_seconds, in_time ? "" : ", over time", o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
