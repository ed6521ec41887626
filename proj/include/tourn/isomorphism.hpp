#pragma once

#include <cstdint>
#include <vector>

#include "tourn/tournament.hpp"

namespace tourn {

inline constexpr int kCanonicalBound = 9;
inline constexpr int kEnumerationBound = 8;

/// Lexicographically minimal orientation sequence over all relabellings of t.
/// Throws std::out_of_range above kCanonicalBound vertices.
std::vector<bool> canonical_form(const Tournament& t);

/// canonical_form packed into an integer whose numeric order is the
/// lexicographic order of the sequence (pair 0 is the most significant bit).
std::uint64_t canonical_key(const Tournament& t);

/// One representative per isomorphism class on n vertices. Representatives
/// use a colour-refined normal labelling and come in a fixed order. Throws
/// std::out_of_range above kEnumerationBound.
std::vector<Tournament> enumerate_tournaments(int n);

/// Deterministic tournament whose orientation bit idx is the top bit of the
/// idx-th output of Rng(seed).
Tournament random_tournament(int n, std::uint64_t seed);

}  // namespace tourn
