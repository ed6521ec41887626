#include "tourn/tournament.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tourn {

std::string VertexSet::to_string() const {
  std::string s = "{";
  bool first_member = true;
  for (int v : members()) {
    if (!first_member) s += ',';
    s += std::to_string(v);
    first_member = false;
  }
  return s + "}";
}

bool lex_less(VertexSet a, VertexSet b) {
  std::uint32_t x = a.bits, y = b.bits;
  while (x != 0 && y != 0) {
    int vx = std::countr_zero(x), vy = std::countr_zero(y);
    if (vx != vy) return vx < vy;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

bool size_then_lex_less(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

Tournament::Tournament(int n, const std::vector<bool>& orientation) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("tournament size must be in 1.." + std::to_string(kMaxVertices) +
                                ", got " + std::to_string(n));
  if (static_cast<int>(orientation.size()) != pair_count(n))
    throw std::invalid_argument("orientation has " + std::to_string(orientation.size()) +
                                " entries, expected " + std::to_string(pair_count(n)));
  out_.assign(static_cast<std::size_t>(n), VertexSet{});
  int idx = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++idx) {
      if (orientation[static_cast<std::size_t>(idx)])
        out_[static_cast<std::size_t>(i)] = out_[static_cast<std::size_t>(i)].with(j);
      else
        out_[static_cast<std::size_t>(j)] = out_[static_cast<std::size_t>(j)].with(i);
    }
  }
}

std::vector<bool> Tournament::orientation() const {
  const int n = size();
  std::vector<bool> bits;
  bits.reserve(static_cast<std::size_t>(pair_count(n)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) bits.push_back(arc(i, j));
  return bits;
}

std::string Tournament::bit_string() const {
  std::string s;
  for (bool b : orientation()) s += b ? '1' : '0';
  return s;
}

void Tournament::reverse_pair(int x, int y) {
  auto& ox = out_[static_cast<std::size_t>(x)];
  auto& oy = out_[static_cast<std::size_t>(y)];
  if (ox.contains(y)) {
    ox = ox.without(y);
    oy = oy.with(x);
  } else {
    oy = oy.without(x);
    ox = ox.with(y);
  }
}

std::vector<Arc> Tournament::arcs() const {
  std::vector<Arc> out;
  const int n = size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back(arc(i, j) ? Arc{i, j} : Arc{j, i});
  return out;
}

Tournament make_tournament(int n, const std::vector<bool>& orientation) {
  return Tournament(n, orientation);
}

Tournament transitive(int n) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("tournament size must be in 1.." + std::to_string(kMaxVertices));
  std::vector<VertexSet> out(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    out[static_cast<std::size_t>(v)] = VertexSet::full(n) - VertexSet::full(v + 1);
  return Tournament(std::move(out));
}

Tournament cycle3() { return Tournament(3, {true, false, true}); }

Tournament dual(const Tournament& t) {
  std::vector<bool> bits = t.orientation();
  bits.flip();
  return Tournament(t.size(), bits);
}

Tournament invert(const Tournament& t, std::span<const Arc> arcs) {
  const int n = t.size();
  Tournament result = t;
  std::vector<bool> seen(static_cast<std::size_t>(pair_count(n)), false);
  for (const Arc& a : arcs) {
    if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n || a.from == a.to)
      throw std::invalid_argument("arc (" + std::to_string(a.from) + "," + std::to_string(a.to) +
                                  ") is not a pair of distinct vertices");
    if (!t.arc(a.from, a.to))
      throw std::invalid_argument("arc (" + std::to_string(a.from) + "," + std::to_string(a.to) +
                                  ") is absent from the tournament");
    auto idx = static_cast<std::size_t>(
        pair_index(n, std::min(a.from, a.to), std::max(a.from, a.to)));
    if (seen[idx])
      throw std::invalid_argument("duplicate vertex pair in arc set");
    seen[idx] = true;
    result.reverse_pair(a.from, a.to);
  }
  return result;
}

Tournament invert(const Tournament& t, const Arc& arc) {
  return invert(t, std::span<const Arc>(&arc, 1));
}

Arc arc_between(const Tournament& t, int x, int y) {
  return t.arc(x, y) ? Arc{x, y} : Arc{y, x};
}

Subtournament subtournament(const Tournament& t, VertexSet w) {
  if (w.empty()) throw std::invalid_argument("subtournament of an empty vertex set");
  if (!w.subset_of(t.vertices()))
    throw std::invalid_argument("vertex set " + w.to_string() + " is not within the tournament");
  std::vector<int> original = w.members();
  const int m = static_cast<int>(original.size());
  std::vector<bool> bits;
  bits.reserve(static_cast<std::size_t>(pair_count(m)));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      bits.push_back(t.arc(original[static_cast<std::size_t>(i)], original[static_cast<std::size_t>(j)]));
  return {Tournament(m, bits), std::move(original)};
}

Tournament remove_vertices(const Tournament& t, VertexSet x) {
  return subtournament(t, t.vertices() - x).tournament;
}

Tournament relabel(const Tournament& t, std::span<const int> perm) {
  const int n = t.size();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> inverse(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    int p = perm[static_cast<std::size_t>(v)];
    if (p < 0 || p >= n || inverse[static_cast<std::size_t>(p)] != -1)
      throw std::invalid_argument("not a permutation");
    inverse[static_cast<std::size_t>(p)] = v;
  }
  std::vector<bool> bits;
  bits.reserve(static_cast<std::size_t>(pair_count(n)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      bits.push_back(t.arc(inverse[static_cast<std::size_t>(i)], inverse[static_cast<std::size_t>(j)]));
  return Tournament(n, bits);
}

bool induces_transitive(const Tournament& t, VertexSet x) {
  // A tournament is transitive iff its score sequence is 0, 1, ..., m-1.
  std::uint32_t scores = 0;
  for (int v : x.members()) {
    int s = (t.out_neighbours(v) & x).size();
    if ((scores >> s) & 1u) return false;
    scores |= std::uint32_t{1} << s;
  }
  return true;
}

bool is_transitive(const Tournament& t) { return induces_transitive(t, t.vertices()); }

std::vector<int> transitive_order(const Tournament& t, VertexSet x) {
  std::vector<int> order = x.members();
  std::ranges::sort(order, [&](int a, int b) {
    return (t.out_neighbours(a) & x).size() > (t.out_neighbours(b) & x).size();
  });
  return order;
}

}  // namespace tourn
