#pragma once

// The verification suite: each item rebuilds both sides of an exact identity
// and compares them on a window.

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "thetacat/analysis.hpp"
#include "thetacat/checks.hpp"
#include "thetacat/constructions.hpp"

namespace thetacat {

struct SuiteOptions {
  Window window{2, -1};
  Indexing indexing = Indexing::Corrected;
};

struct ItemOutcome {
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::string anchor;
  int window = 0;
  bool pass = false;
  double seconds = 0;
  std::string detail;

  std::string verdict() const { return pass ? "pass" : "fail"; }
};

namespace suite {

// Bijective at every window level and natural against the generators.
inline bool is_window_iso(const PrecatMap& u, const Window& w) {
  for (const auto& m : window_objects(u.dim(), w)) {
    if (u.domain().count(m) != u.codomain().count(m) || !is_injective_at(u, m)) return false;
  }
  return is_natural(u, w);
}

// The four sample inputs of dimension n: empty, point, two points, N(I).
struct Samples {
  Precat none, pt, two, arrow;
  explicit Samples(int n)
      : none(empty(n)), pt(terminal(n)), two(discrete(n, 2)), arrow(nerve(categories::I(), n)) {}
  std::vector<std::pair<std::string, Precat>> all() const {
    return {{"0", none}, {"*", pt}, {"2*", two}, {"N(I)", arrow}};
  }
  // Inclusions among the samples (objects 0, 1 of N(I) for the two points).
  std::vector<std::pair<std::string, PrecatMap>> inclusions() const {
    PrecatMap pt_two(pt, two, [](const ThetaObject&) { return Table{0}; }, "*->2*");
    PrecatMap two_arrow = objects_inclusion(two, arrow);
    PrecatMap pt_arrow = point_map(pt, arrow, 0);
    return {{"0->*", from_empty(none, pt)},   {"0->N(I)", from_empty(none, arrow)},
            {"*->2*", pt_two},                {"*->N(I)", pt_arrow},
            {"2*->N(I)", two_arrow},          {"id*", identity_map(pt)}};
  }
};

inline ItemOutcome casezero(const SuiteOptions&) {
  Precat e = empty(0), pt = terminal(0), two = discrete(0, 2);
  PrecatMap a = from_empty(e, pt);
  PrecatMap b = to_terminal(two, pt);
  struct Row {
    std::string name;
    PrecatMap f, g;
    MinDim0 expect;
  };
  std::vector<Row> rows{{"a^a", a, a, MinDim0::Zero},
                        {"a^b", a, b, MinDim0::One},
                        {"b^a", b, a, MinDim0::One},
                        {"b^b", b, b, MinDim0::Infinite}};
  ItemOutcome out{true, ""};
  for (const auto& r : rows) {
    const MinDim0 got = min_dim_sets(pushout_product(r.f, r.g).map);
    out.pass = out.pass && got == r.expect;
    out.detail += (out.detail.empty() ? "" : " ") + r.name + "=" + to_string(got);
  }
  return out;
}

inline ItemOutcome itsanothersuspension(const SuiteOptions& o) {
  ItemOutcome out{true, ""};
  for (int k = 0; k <= 2; ++k) {
    auto lower = sigma(k, k + 1, o.indexing);
    auto susp = suspension(lower, o.indexing);
    auto upper = sigma(k + 1, k + 2, o.indexing);
    auto iso = iso_windowed(upper.space, susp.space, o.window);
    const bool ok = iso && is_window_iso(*iso, o.window);
    out.pass = out.pass && ok;
    out.detail += (k ? " " : "") + std::string("k=") + std::to_string(k) + (ok ? ":iso" : ":no-iso");
  }
  return out;
}

inline ItemOutcome itsasuspension(const SuiteOptions& o) {
  std::vector<std::pair<std::string, PointedPrecat>> inputs{
      {"2*", {discrete(0, 2), 0}},
      {"N(I)", {nerve(categories::I(), 1), 0}},
      {"sigma1", sigma(1, 1, o.indexing)}};
  ItemOutcome out{true, ""};
  for (const auto& [name, a] : inputs) {
    auto iso = iso_windowed(delooping_X(a), suspension(a, o.indexing).space, o.window);
    const bool ok = iso && is_window_iso(*iso, o.window);
    out.pass = out.pass && ok;
    out.detail += (out.detail.empty() ? "" : " ") + name + (ok ? ":iso" : ":no-iso");
  }
  return out;
}

// U(E) x U(F) against U^2(E, F) u^{U(E x F)} U^2(F, E).
inline bool square_identity(const Precat& e, const Precat& f, const SuiteOptions& o) {
  Precat lhs = product(upsilon({e}, o.indexing), upsilon({f}, o.indexing));
  Precat ef = product(e, f), fe = product(f, e);
  Precat u_ef = upsilon({ef}, o.indexing), u_fe = upsilon({fe}, o.indexing);
  Precat t1 = upsilon({e, f}, o.indexing), t2 = upsilon({f, e}, o.indexing);
  auto leg1 = upsilon_face(u_ef, t1, FaceKind::Merge, 1);
  auto leg2 = compose(upsilon_face(u_fe, t2, FaceKind::Merge, 1), upsilon_map(u_ef, u_fe, {swap_map(ef, fe)}));
  auto rhs = pushout(leg1, leg2);
  if (!is_cofibration(leg1, o.window) || !is_cofibration(leg2, o.window)) return false;
  auto iso = iso_windowed(lhs, rhs.object, o.window);
  return iso && is_window_iso(*iso, o.window);
}

inline ItemOutcome square(const SuiteOptions& o) {
  ItemOutcome out{true, ""};
  if (o.indexing == Indexing::PreErratum) {
    // The control pair on which the uncorrected indexing is known to break.
    Samples s(1);
    bool ok = false;
    try {
      ok = square_identity(s.two, s.pt, o);
    } catch (const Error& e) {
      return {false, std::string("E=2*,F=*: ") + e.what()};
    }
    return {ok, std::string("E=2*,F=*:") + (ok ? "iso" : "no-iso")};
  }
  Samples s(1);
  std::size_t good = 0, total = 0;
  for (const auto& [en, e] : s.all()) {
    for (const auto& [fn, f] : s.all()) {
      ++total;
      if (square_identity(e, f, o)) {
        ++good;
      } else {
        out.pass = false;
        out.detail += "fails E=" + en + ",F=" + fn + " ";
      }
    }
  }
  out.detail += std::to_string(good) + "/" + std::to_string(total) + " pairs";
  return out;
}

// (U(A) u* U(D)) u^{U(A) u* U(C)} (U(B) u* U(C)) against U(B) u* U(D).
inline bool rem1_identity(const PrecatMap& f, const PrecatMap& g, const SuiteOptions& o) {
  const Precat &a = f.domain(), &b = f.codomain(), &c = g.domain(), &d = g.codomain();
  Precat ua = upsilon({a}, o.indexing), ub = upsilon({b}, o.indexing);
  Precat uc = upsilon({c}, o.indexing), ud = upsilon({d}, o.indexing);
  auto ad = wedge(ua, 1, ud, 0), ac = wedge(ua, 1, uc, 0), bc = wedge(ub, 1, uc, 0), bd = wedge(ub, 1, ud, 0);
  auto to_ad = pushout_map(ac, ad, identity_map(ua), upsilon_map(uc, ud, {g}));
  auto to_bc = pushout_map(ac, bc, upsilon_map(ua, ub, {f}), identity_map(uc));
  auto lhs = pushout(to_ad, to_bc);
  auto iso = iso_windowed(lhs.object, bd.object, o.window);
  return iso && is_window_iso(*iso, o.window);
}

// U(A) x U(D) u^{U(A) x U(C)} U(B) x U(C) against Q(A,B,C,D) u^Y Q(C,D,A,B).
inline bool rem2_identity(const PrecatMap& f, const PrecatMap& g, const SuiteOptions& o) {
  const Precat &a = f.domain(), &b = f.codomain(), &c = g.domain(), &d = g.codomain();
  const Indexing ix = o.indexing;
  Precat ua = upsilon({a}, ix), ub = upsilon({b}, ix), uc = upsilon({c}, ix), ud = upsilon({d}, ix);
  Precat uad = product(ua, ud), uac = product(ua, uc), ubc = product(ub, uc);
  auto lhs = pushout(product_map(identity_map(ua), upsilon_map(uc, ud, {g}), uac, uad),
                     product_map(upsilon_map(ua, ub, {f}), identity_map(uc), uac, ubc));

  auto w = pushout_product(f, g).domain;  // W = A x D u^{A x C} B x C
  const Precat& p_ad = w.left.domain();
  const Precat& p_bc = w.right.domain();
  Precat y = upsilon({w.object}, ix);
  Precat y_ad = upsilon({p_ad}, ix), y_bc = upsilon({p_bc}, ix);
  auto in_ad = upsilon_map(y_ad, y, {w.left});
  auto in_bc = upsilon_map(y_bc, y, {w.right});

  auto q1 = q_construction(f, g, ix);  // U^2(A,D) u^{U^2(A,C)} U^2(B,C)
  auto q2 = q_construction(g, f, ix);  // U^2(C,B) u^{U^2(C,A)} U^2(D,A)
  auto y_to_q1 = descend(y, q1.po.object,
                         {{in_ad, compose(q1.po.left, upsilon_face(y_ad, q1.ad, FaceKind::Merge, 1))},
                          {in_bc, compose(q1.po.right, upsilon_face(y_bc, q1.bc, FaceKind::Merge, 1))}},
                         "Y->Q");
  Precat p_da = product(d, a), p_cb = product(c, b);
  Precat y_da = upsilon({p_da}, ix), y_cb = upsilon({p_cb}, ix);
  auto ad_to_q2 = compose(q2.po.right, compose(upsilon_face(y_da, q2.bc, FaceKind::Merge, 1),
                                               upsilon_map(y_ad, y_da, {swap_map(p_ad, p_da)})));
  auto bc_to_q2 = compose(q2.po.left, compose(upsilon_face(y_cb, q2.ad, FaceKind::Merge, 1),
                                              upsilon_map(y_bc, y_cb, {swap_map(p_bc, p_cb)})));
  auto y_to_q2 = descend(y, q2.po.object, {{in_ad, ad_to_q2}, {in_bc, bc_to_q2}}, "Y->Q'");
  auto rhs = pushout(y_to_q1, y_to_q2);
  auto iso = iso_windowed(lhs.object, rhs.object, o.window);
  return iso && is_window_iso(*iso, o.window);
}

inline ItemOutcome over_inclusions(const SuiteOptions& o,
                                   const std::function<bool(const PrecatMap&, const PrecatMap&, const SuiteOptions&)>& check) {
  Samples s(1);
  ItemOutcome out{true, ""};
  std::size_t good = 0, total = 0;
  const auto incl = s.inclusions();
  for (const auto& [fn, f] : incl) {
    for (const auto& [gn, g] : incl) {
      ++total;
      bool ok = false;
      try {
        ok = check(f, g, o);
      } catch (const Error& e) {
        out.detail += "error f=" + fn + ",g=" + gn + ": " + e.what() + " ";
      }
      if (ok) {
        ++good;
      } else {
        out.pass = false;
        out.detail += "fails f=" + fn + ",g=" + gn + " ";
      }
    }
  }
  out.detail += std::to_string(good) + "/" + std::to_string(total) + " pairs";
  return out;
}

inline ItemOutcome rem1(const SuiteOptions& o) { return over_inclusions(o, rem1_identity); }
inline ItemOutcome rem2(const SuiteOptions& o) { return over_inclusions(o, rem2_identity); }

inline ItemOutcome proveclaim(const SuiteOptions& o) {
  const int n = 1;
  Precat e = discrete(n, 2), f = discrete(n, 3);
  PrecatMap i(e, f, [](const ThetaObject&) { return Table{0, 1}; }, "2*->3*");
  auto cl = claim_objects(i);
  const Window& w = o.window;
  const bool comparison_iso = is_window_iso(cl.comparison, w);
  const bool found_iso = static_cast<bool>(iso_windowed(cl.corner.domain.object, cl.three_term, w));
  const bool natural = is_natural(cl.to_codiagonal, w) && is_natural(cl.fold, w) && is_natural(cl.corner.map, w);
  const bool commutes = maps_equal(compose(cl.fold, compose(cl.to_codiagonal, cl.comparison)),
                                   compose(cl.corner_to_f, cl.corner.map), w);
  std::ostringstream d;
  d << "comparison:" << (comparison_iso ? "iso" : "no-iso") << " search:" << (found_iso ? "iso" : "no-iso")
    << " natural:" << (natural ? "yes" : "no") << " square:" << (commutes ? "commutes" : "differs");
  return {comparison_iso && found_iso && natural && commutes, d.str()};
}

// Base precats for the Whitehead items, with their base points.
inline std::vector<std::pair<std::string, PointedPrecat>> whitehead_inputs() {
  return {{"N(Ibar)", {nerve(categories::Ibar(), 2), 0}}, {"c2(Z/2)", {ck_monoidal(cyclic_monoid(0, 2), 2), 0}}};
}

inline std::set<Cell> members_at(const Sub& s, const ThetaObject& m) {
  auto t = s.inclusion.component(m);
  return {t->begin(), t->end()};
}

inline ItemOutcome prooflemma2(const SuiteOptions& o) {
  ItemOutcome out{true, ""};
  for (const auto& [name, a] : whitehead_inputs()) {
    for (int k = 0; k <= 1; ++k) {
      auto wh = whitehead(a.space, a.point, k);
      bool ok = true;
      for (const auto& m : window_objects(a.space.dim(), o.window)) {
        if (static_cast<int>(m.length()) <= k && wh.object.count(m) != 1) ok = false;
      }
      // Idempotence: applying the operation to A' changes nothing.
      auto again = whitehead(wh.object, 0, k);
      for (const auto& m : window_objects(a.space.dim(), o.window)) {
        if (again.object.count(m) != wh.object.count(m)) ok = false;
      }
      ok = ok && is_natural(wh.inclusion, o.window);
      out.pass = out.pass && ok;
      out.detail += (out.detail.empty() ? "" : " ") + name + ",k=" + std::to_string(k) + (ok ? ":ok" : ":fail");
    }
  }
  return out;
}

// Wh_{>k}(A,a)_{p/} = Wh_{>k-1}(A_{p/}(a..a), d_p(a)), compared as subsets of A.
inline ItemOutcome prooflemma3(const SuiteOptions& o) {
  ItemOutcome out{true, ""};
  for (const auto& [name, a] : whitehead_inputs()) {
    const int n = a.space.dim();
    for (int k = 1; k <= 1; ++k) {
      auto wh = whitehead(a.space, a.point, k);
      bool ok = true;
      for (int p = 1; p <= o.window.B; ++p) {
        auto sl = slice(a.space, p, std::vector<Cell>(static_cast<std::size_t>(p) + 1, a.point));
        const ThetaObject lp = ThetaObject::of(n, {p});
        auto dp = sl.index_of(ThetaObject::zero(n - 1), a.space.degeneracy(a.point, lp));
        if (!dp) {
          ok = false;
          break;
        }
        auto inner = whitehead(sl.object, *dp, k - 1);
        for (const auto& t : window_objects(n - 1, o.window)) {
          const ThetaObject m = t.prepend(p);
          std::set<Cell> via_slice;
          auto inner_cells = inner.inclusion.component(t);
          auto slice_cells = sl.inclusion.component(t);
          for (Cell c : *inner_cells) via_slice.insert((*slice_cells)[c]);
          if (via_slice != members_at(wh, m)) ok = false;
        }
      }
      out.pass = out.pass && ok;
      out.detail += (out.detail.empty() ? "" : " ") + name + ",k=" + std::to_string(k) + (ok ? ":ok" : ":fail");
    }
  }
  return out;
}

// Wh_{>0}(A,a)_{1/}(a,a) = A_{1/}(a,a), compared as subsets of A.
inline ItemOutcome prooflemma3bis(const SuiteOptions& o) {
  ItemOutcome out{true, ""};
  for (const auto& [name, a] : whitehead_inputs()) {
    const int n = a.space.dim();
    auto wh = whitehead(a.space, a.point, 0);
    auto h = hom(a.space, a.point, a.point);
    bool ok = true;
    for (const auto& t : window_objects(n - 1, o.window)) {
      const ThetaObject m = t.prepend(1);
      auto hc = h.inclusion.component(t);
      const std::set<Cell> in_hom(hc->begin(), hc->end());
      std::set<Cell> in_wh;
      for (Cell c : members_at(wh, m)) {
        if (vertices(a.space, m, c) == std::vector<Cell>{a.point, a.point}) in_wh.insert(c);
      }
      if (in_hom != in_wh) ok = false;
    }
    out.pass = out.pass && ok;
    out.detail += (out.detail.empty() ? "" : " ") + name + (ok ? ":ok" : ":fail");
  }
  return out;
}

struct Item {
  std::string name;
  std::string anchor;
  std::function<ItemOutcome(const SuiteOptions&)> run;
};

inline const std::vector<Item>& items() {
  static const std::vector<Item> all{
      {"casezero", "casezero", casezero},
      {"itsanothersuspension", "itsanothersuspension", itsanothersuspension},
      {"itsasuspension", "itsasuspension", itsasuspension},
      {"prooflemma2", "prooflemma2", prooflemma2},
      {"prooflemma3", "prooflemma3", prooflemma3},
      {"prooflemma3bis", "prooflemma3bis", prooflemma3bis},
      {"proveclaim", "proveclaim", proveclaim},
      {"rem1", "rem1", rem1},
      {"rem2", "rem2", rem2},
      {"square", "square", square},
  };
  return all;
}

inline SuiteResult run_item(const Item& item, const SuiteOptions& o) {
  SuiteResult r;
  r.name = item.name;
  r.anchor = item.anchor;
  r.window = o.window.B;
  const auto start = std::chrono::steady_clock::now();
  try {
    auto out = item.run(o);
    r.pass = out.pass;
    r.detail = out.detail;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace suite

// Runs the selected items (all when `only` is empty), up to `jobs` at a
// time. Results come back in name order.
inline std::vector<SuiteResult> run_suite(const SuiteOptions& o, const std::vector<std::string>& only = {},
                                          unsigned jobs = 1) {
  std::vector<const suite::Item*> chosen;
  for (const auto& it : suite::items()) {
    if (only.empty() || std::find(only.begin(), only.end(), it.name) != only.end()) chosen.push_back(&it);
  }
  for (const auto& name : only) {
    if (std::none_of(chosen.begin(), chosen.end(), [&](const suite::Item* i) { return i->name == name; })) {
      throw InvalidArgument("unknown suite item " + name);
    }
  }
  std::vector<SuiteResult> results(chosen.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < chosen.size(); ++i) results[i] = suite::run_item(*chosen[i], o);
  } else {
    std::size_t next = 0;
    while (next < chosen.size()) {
      std::vector<std::pair<std::size_t, std::future<SuiteResult>>> batch;
      for (unsigned j = 0; j < jobs && next < chosen.size(); ++j, ++next) {
        const suite::Item* item = chosen[next];
        batch.emplace_back(next, std::async(std::launch::async, [item, o] { return suite::run_item(*item, o); }));
      }
      for (auto& [i, fut] : batch) results[i] = fut.get();
    }
  }
  std::sort(results.begin(), results.end(), [](const SuiteResult& a, const SuiteResult& b) { return a.name < b.name; });
  return results;
}

}  // namespace thetacat
