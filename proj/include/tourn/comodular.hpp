#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tourn/modular.hpp"

namespace tourn {

/// Pairwise disjoint co-modules of one tournament. When is_delta is set the
/// decomposition has maximum size and uses only minimal co-modules.
struct CoModularDecomposition {
  std::vector<CoModule> parts;
  bool is_delta = false;

  std::vector<VertexSet> member_sets() const;
};

/// Overlap graph on mc(T). Degrees are at most 2, so each connected component
/// is a path or a cycle.
class ConflictGraph {
 public:
  explicit ConflictGraph(std::vector<CoModule> mc);

  const std::vector<CoModule>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  /// Neighbour mask of node i.
  std::uint64_t neighbours(std::size_t i) const { return adj_[i]; }

  /// Size of a maximum independent set of the subgraph induced by `allowed`.
  int max_independent(std::uint64_t allowed) const;

  /// The maximum independent set that is lexicographically first in node
  /// order, as a node mask.
  std::uint64_t first_max_independent() const;

 private:
  std::vector<CoModule> nodes_;
  std::vector<std::uint64_t> adj_;
};

/// Δ(T): largest number of pairwise disjoint co-modules.
int comodular_index(const Tournament& t);

/// A δ-decomposition: Δ(T) pairwise disjoint minimal co-modules, the
/// lexicographically first in mc order. Throws std::invalid_argument when t is
/// indecomposable.
CoModularDecomposition delta_decomposition(const Tournament& t);

/// A δ-decomposition with distinguished parts:
///   Δ = 2: labelled = {M, N}, M a nontrivial module whenever one is;
///   Δ = 3: labelled = {M, N, L}, all with o_T <= 1;
///   Δ >= 4: labelled = {M1, M2, M3, M4} with
///     (C1) o_T(Mi) <= 1 for i in {1, 3, 4},
///     (C2) T(M1, M2) = T(M2, M3) = 1,
///     (C3) some x in M4 has T(x, M1) = 1 or T(M3, x) = 1.
struct StructuredDecomposition {
  CoModularDecomposition decomposition;
  std::vector<VertexSet> labelled;
};

/// Searches δ-decompositions (after normalising end twins of transitive
/// components into the decomposition) for one meeting the contract above.
/// Throws std::invalid_argument when Δ(T) < 2 and std::logic_error if no
/// decomposition passes the contract check.
StructuredDecomposition structured_delta_decomposition(const Tournament& t);

/// Why a structured decomposition fails its contract, or empty if it passes.
std::string check_structured_contract(const Tournament& t, const StructuredDecomposition& sd);

/// T(X, Y) = 1: every vertex of x beats every vertex of y.
bool dominates(const Tournament& t, VertexSet x, VertexSet y);

/// X with |X| = k and Δ(T) <= Δ(T - X) + 2. Requires 1 <= k <= 4 and
/// v(T) >= 3 + k (std::invalid_argument otherwise).
VertexSet hereditary_witness(const Tournament& t, int k);

}  // namespace tourn
