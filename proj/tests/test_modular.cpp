#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "support/generators.hpp"
#include "tourn/isomorphism.hpp"
#include "tourn/modular.hpp"
#include "tourn/oracle.hpp"

using namespace tourn;

namespace {

std::vector<VertexSet> members(const std::vector<CoModule>& mc) {
  std::vector<VertexSet> out;
  for (const CoModule& m : mc) out.push_back(m.members);
  return out;
}

std::vector<VertexSet> sorted(std::vector<VertexSet> v) {
  std::ranges::sort(v, lex_less);
  return v;
}

// Inclusion-minimal co-modules from the subset-scan module list.
std::vector<VertexSet> scan_minimal_comodules(const Tournament& t) {
  const int n = t.size();
  std::vector<VertexSet> family;
  for (VertexSet m : nontrivial_modules(t)) {
    family.push_back(m);
    family.push_back(m.complement(n));
  }
  std::ranges::sort(family, lex_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<VertexSet> minimal;
  for (VertexSet a : family) {
    const bool has_smaller = std::ranges::any_of(family, [&](VertexSet b) { return b != a && b.subset_of(a); });
    if (!has_smaller) minimal.push_back(a);
  }
  return minimal;
}

int overlap_count(const Tournament& t, VertexSet m) { return static_cast<int>(overlap_set(t, m).size()); }

std::vector<Tournament> small_classes(int max_n) {
  std::vector<Tournament> out;
  for (int n = 1; n <= max_n; ++n)
    for (const Tournament& t : enumerate_tournaments(n)) out.push_back(t);
  return out;
}

}  // namespace

TEST_CASE("modules of transitive tournaments are intervals") {
  const Tournament t5 = transitive(5);
  CHECK(is_module(t5, VertexSet::of({1, 2})));
  CHECK_FALSE(is_module(t5, VertexSet::of({0, 2})));
  CHECK(is_module(t5, VertexSet{}));
  CHECK(is_module(t5, VertexSet::singleton(3)));
  CHECK(is_module(t5, t5.vertices()));
  CHECK_FALSE(is_nontrivial_module(t5, t5.vertices()));

  const std::vector<VertexSet> expected{VertexSet::of({0, 1}), VertexSet::of({1, 2}), VertexSet::of({2, 3}),
                                        VertexSet::of({0, 1, 2}), VertexSet::of({1, 2, 3})};
  CHECK(nontrivial_modules(transitive(4)) == expected);
  CHECK(nontrivial_modules(t5).size() == 9u);
  CHECK(nontrivial_modules(cycle3()).empty());
  CHECK_THROWS_AS(nontrivial_modules(transitive(kSubsetScanBound + 1)), std::out_of_range);
}

TEST_CASE("indecomposability") {
  CHECK(is_indecomposable(cycle3()));
  CHECK_FALSE(is_indecomposable(transitive(3)));
  for (const Tournament& t : enumerate_tournaments(4)) CHECK_FALSE(is_indecomposable(t));
  for (const Tournament& t : small_classes(7)) CHECK(is_indecomposable(t) == oracle::brute_is_indecomposable(t));
}

TEST_CASE("smallest module containing a set") {
  CHECK(smallest_module_containing(transitive(5), VertexSet::of({1, 3})) == VertexSet::of({1, 2, 3}));
  CHECK(smallest_module_containing(transitive(5), VertexSet::singleton(4)) == VertexSet::singleton(4));
  CHECK(smallest_module_containing(cycle3(), VertexSet::of({0, 1})) == VertexSet::of({0, 1, 2}));
  CHECK_THROWS_AS(smallest_module_containing(cycle3(), VertexSet{}), std::invalid_argument);

  tourn::Rng rng(9);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 2 + static_cast<int>(rng.below(9));
    const Tournament t = gen::planted(n, rng);
    const VertexSet s = gen::random_nonempty_subset(n, rng);
    const VertexSet c = smallest_module_containing(t, s);
    CHECK(s.subset_of(c));
    CHECK(is_module(t, c));
    for (VertexSet m : oracle::brute_modules(t))
      if (s.subset_of(m)) CHECK(c.subset_of(m));
  }
}

TEST_CASE("minimal and maximal nontrivial modules agree with the subset scan") {
  tourn::Rng rng(4);
  for (int rep = 0; rep < 300; ++rep) {
    const int n = 3 + static_cast<int>(rng.below(10));
    const Tournament t = gen::planted(n, rng);
    const std::vector<VertexSet> all = nontrivial_modules(t);
    std::vector<VertexSet> minimal, maximal;
    for (VertexSet a : all) {
      if (std::ranges::none_of(all, [&](VertexSet b) { return b != a && b.subset_of(a); })) minimal.push_back(a);
      if (std::ranges::none_of(all, [&](VertexSet b) { return b != a && a.subset_of(b); })) maximal.push_back(a);
    }
    CHECK(sorted(minimal_nontrivial_modules(t)) == sorted(minimal));
    CHECK(sorted(maximal_nontrivial_modules(t)) == sorted(maximal));
  }
}

TEST_CASE("co-modules") {
  const Tournament t5 = transitive(5);
  CHECK(is_comodule(t5, VertexSet::singleton(0)));
  CHECK_FALSE(is_comodule(t5, VertexSet::singleton(1)));
  CHECK_FALSE(is_comodule(t5, VertexSet{}));
  CHECK_FALSE(is_comodule(t5, t5.vertices()));
  CHECK(comodule_kind(t5, VertexSet::singleton(0)) == CoModuleKind::complement_module);
  CHECK(comodule_kind(t5, VertexSet::of({1, 2})) == CoModuleKind::module);
  CHECK(comodule_kind(t5, VertexSet::of({0, 1})) == CoModuleKind::both);
  CHECK_THROWS(comodule_kind(t5, VertexSet::singleton(2)));
  CHECK(std::string(to_string(CoModuleKind::complement_module)) == "complement-module");
}

TEST_CASE("minimal co-modules of transitive tournaments") {
  const std::vector<VertexSet> expected{VertexSet::singleton(0), VertexSet::of({1, 2}), VertexSet::of({2, 3}),
                                        VertexSet::of({3, 4}), VertexSet::singleton(5)};
  CHECK(members(minimal_comodules(transitive(6))) == expected);
  for (int n = 3; n <= 12; ++n) {
    std::vector<VertexSet> want{VertexSet::singleton(0), VertexSet::singleton(n - 1)};
    for (int i = 1; i <= n - 3; ++i) want.push_back(VertexSet::of({i, i + 1}));
    CHECK(sorted(members(minimal_comodules(transitive(n)))) == sorted(want));
  }
  CHECK(minimal_comodules(cycle3()).empty());
}

TEST_CASE("minimal co-modules agree with the subset scan") {
  for (const Tournament& t : small_classes(6)) CHECK(sorted(members(minimal_comodules(t))) == scan_minimal_comodules(t));
  tourn::Rng rng(12);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 3 + static_cast<int>(rng.below(10));
    const Tournament t = gen::planted(n, rng);
    const std::vector<CoModule> mc = minimal_comodules(t);
    CHECK(sorted(members(mc)) == scan_minimal_comodules(t));
    for (const CoModule& m : mc) CHECK(m.kind == comodule_kind(t, m.members));
  }
}

TEST_CASE("minimal co-modules are shared with the dual") {
  for (const Tournament& t : small_classes(6)) CHECK(members(minimal_comodules(t)) == members(minimal_comodules(dual(t))));
}

TEST_CASE("twins contribute exactly one minimal co-module") {
  for (const Tournament& t : small_classes(6)) {
    if (t.size() < 3) continue;
    const std::vector<VertexSet> mc = members(minimal_comodules(t));
    for (int x = 0; x < t.size(); ++x) {
      for (int y = x + 1; y < t.size(); ++y) {
        const VertexSet w = VertexSet::of({x, y});
        if (!is_module(t, w)) continue;
        const auto hits = std::ranges::count_if(mc, [&](VertexSet m) {
          return m == w || m == VertexSet::singleton(x) || m == VertexSet::singleton(y);
        });
        CHECK(hits == 1);
      }
    }
  }
}

TEST_CASE("overlap sets and tilde") {
  const Tournament t6 = transitive(6);
  CHECK(members(overlap_set(t6, VertexSet::of({1, 2}))) == std::vector<VertexSet>{VertexSet::of({2, 3})});
  CHECK(overlap_set(t6, VertexSet::singleton(0)).empty());
  CHECK(overlap_set(t6, VertexSet::singleton(5)).empty());
  CHECK(sorted(members(overlap_set(transitive(7), VertexSet::of({2, 3})))) ==
        std::vector<VertexSet>{VertexSet::of({1, 2}), VertexSet::of({3, 4})});
  CHECK_THROWS_AS(overlap_set(t6, VertexSet::of({0, 1})), std::invalid_argument);

  CHECK(tilde(t6, VertexSet::of({1, 2})) == VertexSet::singleton(2));
  CHECK(tilde(t6, VertexSet::of({3, 4})) == VertexSet::singleton(3));
  CHECK(tilde(t6, VertexSet::singleton(0)) == VertexSet::singleton(0));
  CHECK(tilde(transitive(5), VertexSet::of({1, 2})) == VertexSet::singleton(2));
  CHECK_THROWS(tilde(transitive(7), VertexSet::of({2, 3})));
}

TEST_CASE("overlap degree is at most two and only twins overlap") {
  for (const Tournament& t : small_classes(6)) {
    for (const CoModule& m : minimal_comodules(t)) {
      const int o = overlap_count(t, m.members);
      CHECK(o <= 2);
      if (m.members.size() != 2) CHECK(o == 0);
    }
  }
}

TEST_CASE("doubly overlapped co-modules sit in large transitive components") {
  for (const Tournament& t : small_classes(7)) {
    for (const CoModule& m : minimal_comodules(t)) {
      if (overlap_count(t, m.members) != 2) continue;
      const VertexSet c = transitive_component_of(t, m.members.first());
      CHECK(m.members.subset_of(c));
      CHECK(c.size() >= 4);
    }
  }
}

TEST_CASE("transitive components") {
  CHECK(transitive_components(transitive(6)).blocks == std::vector<VertexSet>{VertexSet::full(6)});
  CHECK(transitive_components(cycle3()).blocks.size() == 3u);

  tourn::Rng rng(7);
  for (const Tournament& t : small_classes(6)) {
    const TransitiveComponentPartition p = transitive_components(t);
    VertexSet seen;
    for (VertexSet b : p.blocks) {
      CHECK_FALSE(b.intersects(seen));
      seen = seen | b;
      CHECK(is_module(t, b));
      CHECK(induces_transitive(t, b));
    }
    CHECK(seen == t.vertices());
    // Each block is the union of the transitive modules through any member.
    for (int v = 0; v < t.size(); ++v) {
      VertexSet u = VertexSet::singleton(v);
      for (VertexSet m : oracle::brute_modules(t))
        if (m.contains(v) && induces_transitive(t, m)) u = u | m;
      CHECK(p.block_of(v) == u);
    }
  }
}

TEST_CASE("a twin lies in a component of size at least two") {
  tourn::Rng rng(31);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 4 + static_cast<int>(rng.below(8));
    Tournament t = gen::uniform(n, rng);
    const VertexSet w = gen::random_subset(n, 2, rng);
    gen::plant_module(t, w, rng);
    CHECK(transitive_component_of(t, w.first()).size() >= 2);
  }
}

TEST_CASE("component co-modules of transitive tournaments") {
  for (int n = 3; n <= 9; ++n) {
    const Tournament t = transitive(n);
    const VertexSet c = t.vertices();
    CHECK(component_comodule(t, c, 0).members == VertexSet::singleton(0));
    CHECK(component_comodule(t, c, n - 2).members == VertexSet::singleton(n - 1));
    VertexSet all;
    for (int k = 0; k <= n - 2; ++k) {
      const VertexSet m = component_comodule(t, c, k).members;
      if (k >= 1 && k <= n - 3) CHECK(m == VertexSet::of({k, k + 1}));
      all = all | m;
    }
    if (n >= 4) CHECK(all == c);
  }
  // Three vertices in total: the end co-modules are the two singletons.
  CHECK(component_comodule(transitive(3), VertexSet::full(3), 1).members == VertexSet::singleton(2));
  CHECK_THROWS_AS(component_comodule(transitive(5), VertexSet::full(5), 4), std::invalid_argument);
  CHECK_THROWS_AS(component_comodule(transitive(5), VertexSet::of({1, 2}), 0), std::invalid_argument);
}

TEST_CASE("minimal co-modules meeting a component are its C(k)") {
  for (const Tournament& t : small_classes(6)) {
    if (t.size() < 3) continue;
    const std::vector<CoModule> mc = minimal_comodules(t);
    for (VertexSet c : transitive_components(t).blocks) {
      if (c.size() < 2) continue;
      std::vector<VertexSet> ck;
      for (int k = 0; k <= c.size() - 2; ++k) ck.push_back(component_comodule(t, c, k).members);
      for (const CoModule& m : mc) {
        const bool listed = std::ranges::find(ck, m.members) != ck.end();
        CHECK(m.members.intersects(c) == listed);
      }
      CHECK(overlap_count(t, ck.front()) <= 1);
      CHECK(overlap_count(t, ck.back()) <= 1);
      if (c.size() >= 3 && t.size() >= 4) {
        VertexSet all;
        for (VertexSet m : ck) all = all | m;
        CHECK(all == c);
      }
    }
  }
}

TEST_CASE("module closure properties") {
  auto check_instance = [](const Tournament& t, tourn::Rng& rng) {
    const int n = t.size();
    const std::vector<VertexSet> mods = oracle::brute_modules(t);
    const VertexSet w = gen::random_nonempty_subset(n, rng);
    const Subtournament sub = subtournament(t, w);
    for (VertexSet m : mods) {
      // restriction to W
      VertexSet restricted;
      for (std::size_t i = 0; i < sub.original_vertex.size(); ++i)
        if (m.contains(sub.original_vertex[i])) restricted = restricted.with(static_cast<int>(i));
      CHECK(is_module(sub.tournament, restricted));
      // modules of T[M] are modules of T
      if (!m.empty()) {
        const Subtournament inside = subtournament(t, m);
        const VertexSet local = gen::random_nonempty_subset(m.size(), rng);
        if (is_module(inside.tournament, local)) {
          VertexSet lifted;
          for (int i : local.members()) lifted = lifted.with(inside.original_vertex[static_cast<std::size_t>(i)]);
          CHECK(is_module(t, lifted));
        }
      }
    }
    for (VertexSet m : mods) {
      for (VertexSet k : mods) {
        CHECK(is_module(t, m & k));
        if (m.intersects(k)) CHECK(is_module(t, m | k));
        if (!(m - k).empty()) CHECK(is_module(t, k - m));
        if (!m.empty() && !k.empty() && !m.intersects(k)) {
          const bool forward = t.arc(m.first(), k.first());
          for (int x : m.members())
            for (int y : k.members()) CHECK(t.arc(x, y) == forward);
        }
      }
    }
  };
  tourn::Rng rng(17);
  for (const Tournament& t : small_classes(6)) check_instance(t, rng);
  for (int rep = 0; rep < 100; ++rep) check_instance(gen::planted(7 + static_cast<int>(rng.below(6)), rng), rng);
}

TEST_CASE("a module survives a single reversal iff it does not overlap the arc") {
  for (int n = 2; n <= 5; ++n) {
    for (const Tournament& t : gen::all_labelled(n)) {
      const std::vector<VertexSet> mods = oracle::brute_modules(t);
      for (const Arc& a : t.arcs()) {
        const Tournament inv = invert(t, a);
        const VertexSet ends = VertexSet::of({a.from, a.to});
        for (VertexSet m : mods) CHECK(is_module(inv, m) == !m.overlaps(ends));
      }
    }
  }
}
