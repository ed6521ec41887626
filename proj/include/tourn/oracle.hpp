#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tourn/tournament.hpp"

// Brute-force reference implementations. Nothing here calls into the module,
// co-module or inversion machinery; each answer comes from a direct scan of
// subsets.

namespace tourn::oracle {

inline constexpr int kModuleScanBound = 16;
inline constexpr int kPackingBound = 12;
inline constexpr int kInversionBound = 8;

/// Every module of t, trivial ones included, in increasing mask order.
std::vector<VertexSet> brute_modules(const Tournament& t);

/// Indecomposability by full subset scan.
bool brute_is_indecomposable(const Tournament& t);

/// Every co-module, from the module scan and complementation.
std::vector<VertexSet> brute_comodules(const Tournament& t);

/// A maximum family of pairwise disjoint co-modules, by branch and bound.
std::vector<VertexSet> brute_max_packing(const Tournament& t);

/// Δ(T) as the size of brute_max_packing.
int brute_Delta(const Tournament& t);

/// Smallest number of reversed arcs making t indecomposable, by breadth-first
/// search over arc subsets of increasing size. Requires 5 <= n <= 8.
int brute_delta(const Tournament& t);

}  // namespace tourn::oracle
