#include "tourn/comodular.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace tourn {
namespace {

constexpr std::size_t kMaxConflictNodes = 64;
// Upper bound on δ-decompositions examined by the structured search.
constexpr std::size_t kStructuredSearchLimit = 1u << 20;

std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

/// Skip/take DP along a walk of path nodes.
int path_mis(std::size_t length) {
  int take = 0, skip = 0;
  for (std::size_t i = 0; i < length; ++i) {
    const int next_take = skip + 1;
    skip = std::max(skip, take);
    take = next_take;
  }
  return std::max(take, skip);
}

int node_index(const std::vector<CoModule>& nodes, VertexSet m) {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].members == m) return static_cast<int>(i);
  return -1;
}

struct SearchState {
  const Tournament& t;
  const ConflictGraph& graph;
  int delta;
};

/// Overlap count o_T of node i.
int overlap_count(const ConflictGraph& g, std::size_t i) { return std::popcount(g.neighbours(i)); }

std::vector<std::size_t> mask_nodes(std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (; mask != 0; mask &= mask - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
  return out;
}

CoModularDecomposition decomposition_of(const ConflictGraph& g, std::uint64_t mask) {
  CoModularDecomposition d;
  d.is_delta = true;
  for (std::size_t i : mask_nodes(mask)) d.parts.push_back(g.nodes()[i]);
  return d;
}

/// Labels the parts of a δ-decomposition per the structured contract, or
/// returns an empty vector when no labelling works.
std::vector<VertexSet> label_parts(const SearchState& s, std::uint64_t mask) {
  const std::vector<std::size_t> idx = mask_nodes(mask);
  const auto& nodes = s.graph.nodes();
  auto o = [&](std::size_t i) { return overlap_count(s.graph, i); };

  if (s.delta == 2) {
    if (o(idx[0]) > 1 || o(idx[1]) > 1) return {};
    const CoModule& a = nodes[idx[0]];
    const CoModule& b = nodes[idx[1]];
    if (!a.is_module() && b.is_module()) return {b.members, a.members};
    return {a.members, b.members};
  }
  if (s.delta == 3) {
    for (std::size_t i : idx)
      if (o(i) > 1) return {};
    return {nodes[idx[0]].members, nodes[idx[1]].members, nodes[idx[2]].members};
  }
  for (std::size_t i1 : idx) {
    if (o(i1) > 1) continue;
    const VertexSet m1 = nodes[i1].members;
    for (std::size_t i2 : idx) {
      const VertexSet m2 = nodes[i2].members;
      if (i2 == i1 || !dominates(s.t, m1, m2)) continue;
      for (std::size_t i3 : idx) {
        const VertexSet m3 = nodes[i3].members;
        if (i3 == i1 || i3 == i2 || o(i3) > 1 || !dominates(s.t, m2, m3)) continue;
        for (std::size_t i4 : idx) {
          if (i4 == i1 || i4 == i2 || i4 == i3 || o(i4) > 1) continue;
          const VertexSet m4 = nodes[i4].members;
          for (int x : m4.members()) {
            if (dominates(s.t, VertexSet::singleton(x), m1) || dominates(s.t, m3, VertexSet::singleton(x)))
              return {m1, m2, m3, m4};
          }
        }
      }
    }
  }
  return {};
}

/// Swaps C(1) -> C(0) and C(|C|-3) -> C(|C|-2) for every transitive component
/// with at least four vertices, keeping the decomposition a δ-decomposition.
std::uint64_t normalise_component_ends(const Tournament& t, const ConflictGraph& g, std::uint64_t mask) {
  const auto& nodes = g.nodes();
  auto inside = [&](VertexSet twin) {
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i].members.subset_of(twin)) return static_cast<int>(i);
    return -1;
  };
  for (VertexSet c : transitive_components(t).blocks) {
    if (c.size() < 4) continue;
    const std::vector<int> order = transitive_order(t, c);
    const std::size_t len = order.size();
    auto twin = [&](std::size_t k) { return VertexSet::of({order[k], order[k + 1]}); };
    const std::pair<std::size_t, std::size_t> ends[] = {{0, 1}, {len - 2, len - 3}};
    for (auto [end, next] : ends) {
      const int e = inside(twin(end));
      const int nb = inside(twin(next));
      if (e < 0 || nb < 0) continue;
      const auto ue = static_cast<std::size_t>(e), un = static_cast<std::size_t>(nb);
      if ((mask & bit(ue)) == 0 && (mask & bit(un)) != 0 && g.neighbours(ue) == bit(un))
        mask = (mask & ~bit(un)) | bit(ue);
    }
  }
  return mask;
}

/// Calls visit on maximum independent sets in lexicographic node order until
/// it returns true or the limit is reached.
bool for_each_max_independent(const ConflictGraph& g, int target, std::size_t limit,
                              const std::function<bool(std::uint64_t)>& visit) {
  std::size_t visited = 0;
  const std::size_t n = g.size();
  std::function<bool(std::size_t, std::uint64_t, std::uint64_t, int)> dfs =
      [&](std::size_t i, std::uint64_t chosen, std::uint64_t open, int count) -> bool {
    if (count == target) {
      ++visited;
      return visit(chosen) || visited >= limit;
    }
    if (i >= n) return false;
    if (count + g.max_independent(open) < target) return false;
    const std::uint64_t rest = open & ~bit(i);
    if (open & bit(i)) {
      if (dfs(i + 1, chosen | bit(i), rest & ~g.neighbours(i), count + 1)) return true;
    }
    return dfs(i + 1, chosen, rest, count);
  };
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : bit(n) - 1;
  return dfs(0, 0, all, 0);
}

}  // namespace

std::vector<VertexSet> CoModularDecomposition::member_sets() const {
  std::vector<VertexSet> out;
  for (const CoModule& p : parts) out.push_back(p.members);
  return out;
}

ConflictGraph::ConflictGraph(std::vector<CoModule> mc) : nodes_(std::move(mc)) {
  if (nodes_.size() > kMaxConflictNodes) throw std::length_error("too many minimal co-modules");
  adj_.assign(nodes_.size(), 0);
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    for (std::size_t j = i + 1; j < nodes_.size(); ++j)
      if (nodes_[i].members.overlaps(nodes_[j].members)) {
        adj_[i] |= bit(j);
        adj_[j] |= bit(i);
      }
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (std::popcount(adj_[i]) > 2)
      throw std::logic_error("minimal co-module " + nodes_[i].members.to_string() + " overlaps " +
                             std::to_string(std::popcount(adj_[i])) + " others");
}

int ConflictGraph::max_independent(std::uint64_t allowed) const {
  int total = 0;
  std::uint64_t remaining = allowed;
  while (remaining != 0) {
    const auto start = static_cast<std::size_t>(std::countr_zero(remaining));
    std::uint64_t comp = bit(start), frontier = bit(start);
    while (frontier != 0) {
      const auto u = static_cast<std::size_t>(std::countr_zero(frontier));
      frontier &= frontier - 1;
      const std::uint64_t fresh = adj_[u] & allowed & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    remaining &= ~comp;

    const std::size_t size = static_cast<std::size_t>(std::popcount(comp));
    bool has_end = false;
    for (std::size_t u : mask_nodes(comp))
      if (std::popcount(adj_[u] & comp) <= 1) has_end = true;
    if (has_end) {
      total += path_mis(size);
    } else {
      // Cycle: either the first node is left out (path on the rest) or taken
      // (path on the rest minus its two neighbours).
      total += std::max(path_mis(size - 1), size >= 3 ? 1 + path_mis(size - 3) : 0);
    }
  }
  return total;
}

std::uint64_t ConflictGraph::first_max_independent() const {
  const std::size_t n = nodes_.size();
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (n == 0 ? 0 : bit(n) - 1);
  const int target = max_independent(all);
  std::uint64_t chosen = 0, open = all;
  int count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if ((open & bit(i)) == 0) continue;
    open &= ~bit(i);
    const std::uint64_t if_taken = open & ~adj_[i];
    if (count + 1 + max_independent(if_taken) == target) {
      chosen |= bit(i);
      open = if_taken;
      ++count;
    }
  }
  return chosen;
}

bool dominates(const Tournament& t, VertexSet x, VertexSet y) {
  for (int v : x.members())
    if (!y.subset_of(t.out_neighbours(v))) return false;
  return true;
}

int comodular_index(const Tournament& t) {
  std::vector<CoModule> mc = minimal_comodules(t);
  if (mc.empty()) return 0;
  ConflictGraph g(std::move(mc));
  const std::uint64_t all = g.size() == 64 ? ~std::uint64_t{0} : bit(g.size()) - 1;
  return g.max_independent(all);
}

CoModularDecomposition delta_decomposition(const Tournament& t) {
  std::vector<CoModule> mc = minimal_comodules(t);
  if (mc.empty()) throw std::invalid_argument("indecomposable tournament has no δ-decomposition");
  ConflictGraph g(std::move(mc));
  return decomposition_of(g, g.first_max_independent());
}

StructuredDecomposition structured_delta_decomposition(const Tournament& t) {
  std::vector<CoModule> mc = minimal_comodules(t);
  if (mc.empty()) throw std::invalid_argument("indecomposable tournament has no δ-decomposition");
  const ConflictGraph g(std::move(mc));
  const SearchState s{t, g, g.max_independent(g.size() == 64 ? ~std::uint64_t{0} : bit(g.size()) - 1)};

  StructuredDecomposition result;
  auto accept = [&](std::uint64_t mask) {
    std::vector<VertexSet> labels = label_parts(s, mask);
    if (labels.empty()) return false;
    result.decomposition = decomposition_of(g, mask);
    result.labelled = std::move(labels);
    return true;
  };

  const std::uint64_t first = g.first_max_independent();
  if (!accept(normalise_component_ends(t, g, first)) && !accept(first)) {
    for_each_max_independent(g, s.delta, kStructuredSearchLimit, accept);
  }
  if (result.labelled.empty())
    throw std::logic_error("no δ-decomposition satisfies the structured contract");
  if (std::string why = check_structured_contract(t, result); !why.empty())
    throw std::logic_error("structured decomposition failed its contract: " + why);
  return result;
}

std::string check_structured_contract(const Tournament& t, const StructuredDecomposition& sd) {
  const std::vector<CoModule> mc = minimal_comodules(t);
  const auto& parts = sd.decomposition.parts;
  const int delta = comodular_index(t);
  if (static_cast<int>(parts.size()) != delta) return "decomposition size differs from the co-modular index";
  VertexSet used;
  for (const CoModule& p : parts) {
    if (node_index(mc, p.members) < 0) return p.members.to_string() + " is not a minimal co-module";
    if (used.intersects(p.members)) return "parts are not pairwise disjoint";
    used = used | p.members;
  }
  auto o = [&](VertexSet m) { return static_cast<int>(overlap_set(mc, m).size()); };
  auto in_parts = [&](VertexSet m) {
    return std::ranges::any_of(parts, [&](const CoModule& p) { return p.members == m; });
  };
  const auto& l = sd.labelled;
  for (VertexSet m : l)
    if (!in_parts(m)) return "labelled set " + m.to_string() + " is not a part";
  if (delta == 2 || delta == 3) {
    if (static_cast<int>(l.size()) != delta) return "wrong number of labelled parts";
    for (VertexSet m : l)
      if (o(m) > 1) return m.to_string() + " overlaps two minimal co-modules";
    return {};
  }
  if (l.size() != 4) return "wrong number of labelled parts";
  if (l[0] == l[1] || l[0] == l[2] || l[0] == l[3] || l[1] == l[2] || l[1] == l[3] || l[2] == l[3])
    return "labelled parts are not distinct";
  if (o(l[0]) > 1 || o(l[2]) > 1 || o(l[3]) > 1) return "(C1) fails";
  if (!dominates(t, l[0], l[1]) || !dominates(t, l[1], l[2])) return "(C2) fails";
  for (int x : l[3].members())
    if (dominates(t, VertexSet::singleton(x), l[0]) || dominates(t, l[2], VertexSet::singleton(x))) return {};
  return "(C3) fails";
}

VertexSet hereditary_witness(const Tournament& t, int k) {
  if (k < 1 || k > 4) throw std::invalid_argument("witness size must be in 1..4");
  const int n = t.size();
  if (n < 3 + k) throw std::invalid_argument("witness of size k needs at least k + 3 vertices");
  auto first_k_of = [k](VertexSet pool) {
    VertexSet x;
    for (int v : pool.members()) {
      if (x.size() == k) break;
      x = x.with(v);
    }
    return x;
  };

  const int delta = comodular_index(t);
  if (delta == 0) return first_k_of(t.vertices());
  if (delta <= 4) {
    // Keep two vertices of a nontrivial module and one vertex outside it, so
    // the module survives in T - X.
    const VertexSet m = minimal_nontrivial_modules(t).front();
    const std::vector<int> inside = m.members();
    const VertexSet keep = VertexSet::of({inside[0], inside[1], (t.vertices() - m).first()});
    return first_k_of(t.vertices() - keep);
  }
  // Δ >= 5: at most two parts are singletons, so two parts have >= 2 vertices
  // and X fits inside their union.
  VertexSet pool;
  int taken = 0;
  for (const CoModule& p : delta_decomposition(t).parts) {
    if (p.members.size() >= 2 && taken < 2) {
      pool = pool | p.members;
      ++taken;
    }
  }
  return first_k_of(pool);
}

}  // namespace tourn
