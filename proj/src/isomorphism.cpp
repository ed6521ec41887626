#include "tourn/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "tourn/rng.hpp"

namespace tourn {
namespace {

Tournament from_key(int n, std::uint64_t key) {
  const int pairs = pair_count(n);
  std::vector<bool> bits(static_cast<std::size_t>(pairs));
  for (int idx = 0; idx < pairs; ++idx) bits[static_cast<std::size_t>(idx)] = (key >> (pairs - 1 - idx)) & 1u;
  return Tournament(n, bits);
}

// Colour refinement on out-neighbourhoods: a vertex's next colour is the rank
// of (colour, out-neighbour count per colour) among all vertices. Colours are
// preserved by isomorphisms.
std::vector<int> refined_colours(const Tournament& t) {
  const int n = t.size();
  std::vector<int> colour(static_cast<std::size_t>(n), 0);
  int classes = 1;
  while (true) {
    std::vector<std::vector<int>> signature(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& sig = signature[static_cast<std::size_t>(v)];
      sig.assign(static_cast<std::size_t>(classes) + 1, 0);
      sig[0] = colour[static_cast<std::size_t>(v)];
      for (int w : t.out_neighbours(v).members()) ++sig[static_cast<std::size_t>(colour[static_cast<std::size_t>(w)]) + 1];
    }
    std::vector<std::vector<int>> distinct = signature;
    std::ranges::sort(distinct);
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v) {
      const auto& sig = signature[static_cast<std::size_t>(v)];
      colour[static_cast<std::size_t>(v)] =
          static_cast<int>(std::ranges::lower_bound(distinct, sig) - distinct.begin());
    }
    if (static_cast<int>(distinct.size()) == classes) return colour;
    classes = static_cast<int>(distinct.size());
  }
}

std::uint64_t minimal_key(const Tournament& t) {
  const int n = t.size();
  std::array<std::uint32_t, kCanonicalBound> out{};
  for (int v = 0; v < n; ++v) out[static_cast<std::size_t>(v)] = t.out_neighbours(v).bits;

  std::array<int, kCanonicalBound> perm{};
  std::iota(perm.begin(), perm.begin() + n, 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t key = 0;
    bool pruned = false;
    for (int i = 0; i < n && !pruned; ++i) {
      const std::uint32_t row = out[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
      for (int j = i + 1; j < n; ++j) key = (key << 1) | ((row >> perm[static_cast<std::size_t>(j)]) & 1u);
      // Row-major order: once the prefix exceeds the best key's prefix the
      // rest of this relabelling cannot win.
      if (i + 2 < n) {
        const int remaining = pair_count(n) - pair_index(n, i + 1, i + 2);
        pruned = (key << remaining) > best;
      }
    }
    if (!pruned && key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.begin() + n));
  return best;
}

std::uint64_t class_key(const Tournament& t) {
  const int n = t.size();
  std::array<std::uint32_t, kEnumerationBound> out{};
  for (int v = 0; v < n; ++v) out[static_cast<std::size_t>(v)] = t.out_neighbours(v).bits;

  // Minimum over the orders that list colour classes in increasing colour:
  // an isomorphism invariant, cheaper than the full minimum.
  const std::vector<int> colour = refined_colours(t);
  std::array<int, kEnumerationBound> perm{};
  std::iota(perm.begin(), perm.begin() + n, 0);
  std::sort(perm.begin(), perm.begin() + n, [&](int a, int b) {
    const auto ca = colour[static_cast<std::size_t>(a)], cb = colour[static_cast<std::size_t>(b)];
    return ca != cb ? ca < cb : a < b;
  });
  // Segment boundaries of equal colour within perm.
  std::vector<int> bounds{0};
  for (int i = 1; i < n; ++i)
    if (colour[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] !=
        colour[static_cast<std::size_t>(perm[static_cast<std::size_t>(i - 1)])])
      bounds.push_back(i);
  bounds.push_back(n);
  const int segments = static_cast<int>(bounds.size()) - 1;

  std::uint64_t best = ~std::uint64_t{0};
  while (true) {
    std::uint64_t key = 0;
    bool pruned = false;
    for (int i = 0; i < n && !pruned; ++i) {
      const std::uint32_t row = out[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
      for (int j = i + 1; j < n; ++j) key = (key << 1) | ((row >> perm[static_cast<std::size_t>(j)]) & 1u);
      if (i + 2 < n) {
        const int remaining = pair_count(n) - pair_index(n, i + 1, i + 2);
        pruned = (key << remaining) > best;
      }
    }
    if (!pruned && key < best) best = key;
    // Odometer over the permutations of every colour segment.
    int s = segments - 1;
    for (; s >= 0; --s) {
      auto first = perm.begin() + bounds[static_cast<std::size_t>(s)];
      auto last = perm.begin() + bounds[static_cast<std::size_t>(s) + 1];
      if (std::next_permutation(first, last)) break;
    }
    if (s < 0) return best;
  }
}

void check_canonical_bound(int n) {
  if (n > kCanonicalBound)
    throw std::out_of_range("canonical form is limited to " + std::to_string(kCanonicalBound) +
                            " vertices, got " + std::to_string(n));
}

std::vector<Tournament> compute_classes(int n) {
  std::set<std::uint64_t> keys;
  if (n <= 6) {
    const std::uint64_t labelled = std::uint64_t{1} << pair_count(n);
    for (std::uint64_t code = 0; code < labelled; ++code) keys.insert(class_key(from_key(n, code)));
  } else {
    // Extend every class on n-1 vertices by each orientation of the new
    // vertex n-1 against the others.
    for (const Tournament& base : enumerate_tournaments(n - 1)) {
      for (std::uint32_t edges = 0; edges < (std::uint32_t{1} << (n - 1)); ++edges) {
        std::vector<bool> bits(static_cast<std::size_t>(pair_count(n)));
        for (int i = 0; i < n; ++i) {
          for (int j = i + 1; j < n; ++j) {
            bool b = j == n - 1 ? ((edges >> i) & 1u) != 0 : base.arc(i, j);
            bits[static_cast<std::size_t>(pair_index(n, i, j))] = b;
          }
        }
        keys.insert(class_key(Tournament(n, bits)));
      }
    }
  }
  std::vector<Tournament> classes;
  classes.reserve(keys.size());
  for (std::uint64_t key : keys) classes.push_back(from_key(n, key));
  return classes;
}

}  // namespace

std::uint64_t canonical_key(const Tournament& t) {
  check_canonical_bound(t.size());
  return minimal_key(t);
}

std::vector<bool> canonical_form(const Tournament& t) {
  return from_key(t.size(), canonical_key(t)).orientation();
}

std::vector<Tournament> enumerate_tournaments(int n) {
  if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
  if (n > kEnumerationBound)
    throw std::out_of_range("enumeration is limited to " + std::to_string(kEnumerationBound) +
                            " vertices, got " + std::to_string(n));
  // Memoized; each entry is computed once under its own once_flag.
  static std::array<std::once_flag, kEnumerationBound + 1> once;
  static std::array<std::vector<Tournament>, kEnumerationBound + 1> cache;
  const auto slot = static_cast<std::size_t>(n);
  std::call_once(once[slot], [&] { cache[slot] = compute_classes(n); });
  return cache[slot];
}

Tournament random_tournament(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random tournament needs n >= 1");
  Rng rng(seed);
  std::vector<bool> bits(static_cast<std::size_t>(pair_count(n)));
  for (std::size_t idx = 0; idx < bits.size(); ++idx) bits[idx] = rng.next_bit();
  return Tournament(n, bits);
}

}  // namespace tourn
