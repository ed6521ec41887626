#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tourn/vertex_set.hpp"

namespace tourn {

/// Position of the unordered pair {i, j}, i < j, in the orientation sequence
/// (row-major upper triangle).
constexpr int pair_index(int n, int i, int j) { return i * (2 * n - i - 1) / 2 + (j - i - 1); }

constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// An arc (from, to) of a tournament.
struct Arc {
  int from = 0;
  int to = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// A tournament on the vertices 0..n-1.
///
/// Every unordered pair {i, j} carries exactly one arc, so the tournament is
/// fully described by one orientation bit per pair: bit idx(i, j) for i < j is
/// true when (i, j) is an arc and false when (j, i) is. Internally the arcs are
/// held as out-neighbourhood masks so module tests reduce to mask operations.
class Tournament {
 public:
  /// Builds a tournament from its orientation sequence. Throws
  /// std::invalid_argument if n is outside 1..kMaxVertices or the sequence
  /// length is not n(n-1)/2.
  Tournament(int n, const std::vector<bool>& orientation);

  int size() const { return static_cast<int>(out_.size()); }
  VertexSet vertices() const { return VertexSet::full(size()); }

  /// T(x, y): true iff (x, y) is an arc. x != y.
  bool arc(int x, int y) const { return out_[static_cast<std::size_t>(x)].contains(y); }
  VertexSet out_neighbours(int v) const { return out_[static_cast<std::size_t>(v)]; }
  VertexSet in_neighbours(int v) const { return vertices() - out_[static_cast<std::size_t>(v)]; }

  std::vector<bool> orientation() const;
  /// Orientation as a string of '0'/'1' in pair-index order.
  std::string bit_string() const;

  /// Reverses the arc between x and y in place.
  void reverse_pair(int x, int y);

  std::vector<Arc> arcs() const;

  friend bool operator==(const Tournament& a, const Tournament& b) = default;

 private:
  explicit Tournament(std::vector<VertexSet> out) : out_(std::move(out)) {}
  friend Tournament transitive(int n);

  std::vector<VertexSet> out_;  // out_[v] excludes v itself
};

Tournament make_tournament(int n, const std::vector<bool>& orientation);

/// The transitive tournament with arcs (i, j) for all i < j.
Tournament transitive(int n);

/// The 3-cycle (0,1), (1,2), (2,0).
Tournament cycle3();

Tournament dual(const Tournament& t);

/// Reverses every arc of `arcs`. Each must be an arc of t and no two may share
/// a vertex pair; otherwise std::invalid_argument.
Tournament invert(const Tournament& t, std::span<const Arc> arcs);
Tournament invert(const Tournament& t, const Arc& arc);

/// Arc of t between distinct vertices x and y, in whichever direction t has it.
Arc arc_between(const Tournament& t, int x, int y);

struct Subtournament {
  Tournament tournament;
  /// original_vertex[i] is the vertex of the parent tournament relabelled to i.
  std::vector<int> original_vertex;
};

/// Induced subtournament on w, relabelled order-preservingly onto 0..|w|-1.
Subtournament subtournament(const Tournament& t, VertexSet w);

/// T - X.
Tournament remove_vertices(const Tournament& t, VertexSet x);

/// The tournament whose vertex perm[v] plays the role of v, i.e. arc (perm[x],
/// perm[y]) in the result iff arc (x, y) in t.
Tournament relabel(const Tournament& t, std::span<const int> perm);

bool is_transitive(const Tournament& t);

/// True iff t[x] is transitive.
bool induces_transitive(const Tournament& t, VertexSet x);

/// Members of x listed so that t[x] has arcs (v_i, v_j) for i < j. Requires
/// t[x] transitive.
std::vector<int> transitive_order(const Tournament& t, VertexSet x);

}  // namespace tourn
