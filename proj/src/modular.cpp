#include "tourn/modular.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tourn {
namespace {

/// Some outside vertex that distinguishes two members of x, or -1.
int find_splitter(const Tournament& t, VertexSet x) {
  const VertexSet outside = t.vertices() - x;
  for (std::uint32_t m = outside.bits; m != 0; m &= m - 1) {
    const int v = std::countr_zero(m);
    const VertexSet seen = t.out_neighbours(v) & x;
    if (!seen.empty() && seen != x) return v;
  }
  return -1;
}

std::vector<VertexSet> inclusion_minimal(std::vector<VertexSet> sets) {
  std::ranges::sort(sets, size_then_lex_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  for (VertexSet s : sets) {
    bool dominated = std::ranges::any_of(kept, [&](VertexSet k) { return k.subset_of(s); });
    if (!dominated) kept.push_back(s);
  }
  return kept;
}

std::vector<VertexSet> inclusion_maximal(std::vector<VertexSet> sets) {
  std::ranges::sort(sets, [](VertexSet a, VertexSet b) { return size_then_lex_less(b, a); });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  for (VertexSet s : sets) {
    bool dominated = std::ranges::any_of(kept, [&](VertexSet k) { return s.subset_of(k); });
    if (!dominated) kept.push_back(s);
  }
  return kept;
}

}  // namespace

const char* to_string(CoModuleKind kind) {
  switch (kind) {
    case CoModuleKind::module: return "module";
    case CoModuleKind::complement_module: return "complement-module";
    case CoModuleKind::both: return "both";
  }
  return "?";
}

VertexSet TransitiveComponentPartition::block_of(int v) const {
  for (VertexSet b : blocks)
    if (b.contains(v)) return b;
  throw std::invalid_argument("vertex " + std::to_string(v) + " is in no block");
}

bool is_module(const Tournament& t, VertexSet x) { return find_splitter(t, x) < 0; }

bool is_nontrivial_module(const Tournament& t, VertexSet x) {
  return x.size() >= 2 && x.size() < t.size() && is_module(t, x);
}

VertexSet smallest_module_containing(const Tournament& t, VertexSet s) {
  if (s.empty()) throw std::invalid_argument("closure of an empty set");
  for (int v = find_splitter(t, s); v >= 0; v = find_splitter(t, s)) s = s.with(v);
  return s;
}

bool is_indecomposable(const Tournament& t) {
  const int n = t.size();
  const VertexSet all = t.vertices();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (smallest_module_containing(t, VertexSet::of({x, y})) != all) return false;
  return true;
}

std::vector<VertexSet> nontrivial_modules(const Tournament& t) {
  const int n = t.size();
  if (n > kSubsetScanBound)
    throw std::out_of_range("subset scan is limited to " + std::to_string(kSubsetScanBound) + " vertices");
  std::vector<VertexSet> out;
  const std::uint32_t all = VertexSet::full(n).bits;
  for (std::uint32_t m = 1; m < all; ++m) {
    VertexSet x{m};
    if (x.size() >= 2 && is_module(t, x)) out.push_back(x);
  }
  std::ranges::sort(out, size_then_lex_less);
  return out;
}

std::vector<VertexSet> minimal_nontrivial_modules(const Tournament& t) {
  const int n = t.size();
  const VertexSet all = t.vertices();
  std::vector<VertexSet> closures;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      VertexSet c = smallest_module_containing(t, VertexSet::of({x, y}));
      if (c != all) closures.push_back(c);
    }
  }
  return inclusion_minimal(std::move(closures));
}

std::vector<VertexSet> maximal_modules_avoiding(const Tournament& t, int v) {
  std::vector<VertexSet> classes{t.vertices().without(v)};
  if (classes.front().empty()) return {};
  // Split any class that some outside vertex distinguishes; a module avoiding
  // v is never cut by such a split, so the fixpoint is the coarsest one.
  for (bool split = true; split;) {
    split = false;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const VertexSet x = classes[i];
      const int s = find_splitter(t, x);
      if (s < 0) continue;
      const VertexSet beaten = t.out_neighbours(s) & x;
      classes[i] = beaten;
      classes.push_back(x - beaten);
      split = true;
    }
  }
  std::ranges::sort(classes, lex_less);
  return classes;
}

std::vector<VertexSet> maximal_nontrivial_modules(const Tournament& t) {
  std::vector<VertexSet> candidates;
  for (int v = 0; v < t.size(); ++v)
    for (VertexSet c : maximal_modules_avoiding(t, v))
      if (c.size() >= 2) candidates.push_back(c);
  return inclusion_maximal(std::move(candidates));
}

bool is_comodule(const Tournament& t, VertexSet m) {
  const VertexSet rest = m.complement(t.size());
  if (m.empty() || rest.empty()) return false;
  return is_nontrivial_module(t, m) || is_nontrivial_module(t, rest);
}

CoModuleKind comodule_kind(const Tournament& t, VertexSet m) {
  const bool direct = is_nontrivial_module(t, m);
  const bool complement = !m.empty() && is_nontrivial_module(t, m.complement(t.size()));
  if (direct && complement) return CoModuleKind::both;
  if (direct) return CoModuleKind::module;
  if (complement) return CoModuleKind::complement_module;
  throw std::invalid_argument(m.to_string() + " is not a co-module");
}

std::vector<CoModule> minimal_comodules(const Tournament& t) {
  const int n = t.size();
  std::vector<VertexSet> candidates = minimal_nontrivial_modules(t);
  for (VertexSet m : maximal_nontrivial_modules(t)) candidates.push_back(m.complement(n));
  std::vector<VertexSet> minimal = inclusion_minimal(std::move(candidates));
  std::ranges::sort(minimal, lex_less);
  std::vector<CoModule> out;
  out.reserve(minimal.size());
  for (VertexSet m : minimal) out.push_back({m, comodule_kind(t, m)});
  return out;
}

std::vector<CoModule> overlap_set(const std::vector<CoModule>& mc, VertexSet m) {
  if (std::ranges::none_of(mc, [&](const CoModule& c) { return c.members == m; }))
    throw std::invalid_argument(m.to_string() + " is not a minimal co-module");
  std::vector<CoModule> out;
  for (const CoModule& c : mc)
    if (c.members.overlaps(m)) out.push_back(c);
  return out;
}

std::vector<CoModule> overlap_set(const Tournament& t, VertexSet m) {
  return overlap_set(minimal_comodules(t), m);
}

VertexSet tilde(const std::vector<CoModule>& mc, VertexSet m) {
  const std::vector<CoModule> overlapping = overlap_set(mc, m);
  if (overlapping.empty()) return m;
  if (overlapping.size() == 1) return m & overlapping.front().members;
  throw std::domain_error(m.to_string() + " overlaps two minimal co-modules");
}

VertexSet tilde(const Tournament& t, VertexSet m) { return tilde(minimal_comodules(t), m); }

VertexSet transitive_component_of(const Tournament& t, int v) {
  VertexSet c = VertexSet::singleton(v);
  // Every u in C_v - c extends c to a larger transitive module inside C_v, so
  // growth stops exactly at C_v.
  for (bool grew = true; grew;) {
    grew = false;
    const VertexSet outside = t.vertices() - c;
    for (int u : outside.members()) {
      const VertexSet candidate = smallest_module_containing(t, c.with(u));
      if (induces_transitive(t, candidate)) {
        c = candidate;
        grew = true;
        break;
      }
    }
  }
  return c;
}

TransitiveComponentPartition transitive_components(const Tournament& t) {
  TransitiveComponentPartition p;
  VertexSet covered;
  for (int v = 0; v < t.size(); ++v) {
    if (covered.contains(v)) continue;
    const VertexSet c = transitive_component_of(t, v);
    p.blocks.push_back(c);
    covered = covered | c;
  }
  return p;
}

CoModule component_comodule(const Tournament& t, VertexSet c, int k) {
  if (t.size() < 3) throw std::invalid_argument("C(k) needs at least three vertices");
  if (c.size() < 2) throw std::invalid_argument("C(k) needs a component with at least two vertices");
  if (k < 0 || k > c.size() - 2)
    throw std::invalid_argument("k = " + std::to_string(k) + " out of range for component " + c.to_string());
  if (transitive_component_of(t, c.first()) != c)
    throw std::invalid_argument(c.to_string() + " is not a transitive component");
  const std::vector<int> order = transitive_order(t, c);
  const VertexSet twin = VertexSet::of({order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k + 1)]});
  std::vector<CoModule> inside;
  for (const CoModule& m : minimal_comodules(t))
    if (m.members.subset_of(twin)) inside.push_back(m);
  if (inside.size() != 1)
    throw std::logic_error("twin " + twin.to_string() + " contains " + std::to_string(inside.size()) +
                           " minimal co-modules");
  return inside.front();
}

}  // namespace tourn
