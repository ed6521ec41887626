#include "tourn/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace tourn::oracle {
namespace {

bool module_by_definition(const Tournament& t, std::uint32_t mask) {
  const int n = t.size();
  for (int v = 0; v < n; ++v) {
    if ((mask >> v) & 1u) continue;
    int reference = -1;
    for (int x = 0; x < n; ++x) {
      if (((mask >> x) & 1u) == 0) continue;
      const int a = t.arc(v, x) ? 1 : 0;
      if (reference < 0) reference = a;
      else if (a != reference) return false;
    }
  }
  return true;
}

void require_at_most(const Tournament& t, int bound, const char* what) {
  if (t.size() > bound)
    throw std::out_of_range(std::string(what) + " is limited to " + std::to_string(bound) + " vertices");
}

}  // namespace

std::vector<VertexSet> brute_modules(const Tournament& t) {
  require_at_most(t, kModuleScanBound, "module scan");
  std::vector<VertexSet> out;
  const std::uint32_t limit = std::uint32_t{1} << t.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask)
    if (module_by_definition(t, mask)) out.emplace_back(mask);
  return out;
}

bool brute_is_indecomposable(const Tournament& t) {
  const int n = t.size();
  for (VertexSet m : brute_modules(t))
    if (m.size() >= 2 && m.size() <= n - 1) return false;
  return true;
}

std::vector<VertexSet> brute_comodules(const Tournament& t) {
  const int n = t.size();
  std::vector<VertexSet> out;
  for (VertexSet m : brute_modules(t)) {
    if (m.size() < 2 || m.size() > n - 1) continue;
    out.push_back(m);
    out.push_back(m.complement(n));
  }
  std::ranges::sort(out, [](VertexSet a, VertexSet b) { return a.bits < b.bits; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<VertexSet> brute_max_packing(const Tournament& t) {
  require_at_most(t, kPackingBound, "brute packing");
  const int n = t.size();
  std::vector<VertexSet> comodules = brute_comodules(t);
  if (comodules.empty()) return {};
  std::ranges::stable_sort(comodules, [](VertexSet a, VertexSet b) { return a.size() < b.size(); });
  const int min_size = comodules.front().size();

  // Co-modules grouped by their smallest vertex.
  std::vector<std::vector<VertexSet>> by_first(static_cast<std::size_t>(n));
  for (VertexSet c : comodules) by_first[static_cast<std::size_t>(c.first())].push_back(c);

  std::vector<VertexSet> best, current;
  std::function<void(VertexSet)> search = [&](VertexSet undecided) {
    if (current.size() > best.size()) best = current;
    if (undecided.empty()) return;
    if (static_cast<int>(current.size()) + undecided.size() / min_size <= static_cast<int>(best.size())) return;
    // The smallest undecided vertex is either covered by a part starting at
    // it or left uncovered.
    const int v = undecided.first();
    for (VertexSet c : by_first[static_cast<std::size_t>(v)]) {
      if (!c.subset_of(undecided)) continue;
      current.push_back(c);
      search(undecided - c);
      current.pop_back();
    }
    search(undecided.without(v));
  };
  search(t.vertices());
  return best;
}

int brute_Delta(const Tournament& t) { return static_cast<int>(brute_max_packing(t).size()); }

int brute_delta(const Tournament& t) {
  const int n = t.size();
  if (n < 5) throw std::invalid_argument("the decomposability index needs at least five vertices");
  require_at_most(t, kInversionBound, "brute inversion search");
  if (brute_is_indecomposable(t)) return 0;

  // Any indecomposing arc set must touch every part of a co-modular
  // decomposition.
  const std::vector<VertexSet> parts = brute_max_packing(t);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  const int total = static_cast<int>(pairs.size());

  Tournament work = t;
  for (int m = 1; m <= total; ++m) {
    std::vector<int> pick(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
      VertexSet touched;
      for (int p : pick) {
        const auto& [a, b] = pairs[static_cast<std::size_t>(p)];
        touched = touched.with(a).with(b);
      }
      const bool meets_all = std::ranges::all_of(parts, [&](VertexSet part) { return part.intersects(touched); });
      if (meets_all) {
        for (int p : pick) work.reverse_pair(pairs[static_cast<std::size_t>(p)].first, pairs[static_cast<std::size_t>(p)].second);
        const bool done = brute_is_indecomposable(work);
        for (int p : pick) work.reverse_pair(pairs[static_cast<std::size_t>(p)].first, pairs[static_cast<std::size_t>(p)].second);
        if (done) return m;
      }
      // Next combination in lexicographic order.
      int i = m - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == total - m + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < m; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  throw std::logic_error("no arc set makes the tournament indecomposable");
}

}  // namespace tourn::oracle
