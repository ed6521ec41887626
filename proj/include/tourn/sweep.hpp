#pragma once

#include <optional>
#include <string>
#include <vector>

namespace tourn {

inline constexpr int kSweepBound = 7;

/// Outcome of checking every isomorphism class on n vertices.
struct SweepReport {
  int n = 0;
  int class_count = 0;
  int max_Delta = 0;
  std::optional<int> max_delta;  // absent below five vertices
  /// Canonical bit strings of classes failing any checked identity.
  std::vector<std::string> violations;
  /// Certificate steps that needed the exhaustive fallback.
  int fallbacks = 0;

  /// No violations and both maxima equal their closed forms.
  bool ok() const;

  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

int closed_form_Delta(int n);  // ⌈(n+1)/2⌉
int closed_form_delta(int n);  // ⌈(n+1)/4⌉

/// Checks, for every class with n vertices:
///   - Δ from the conflict graph equals the brute packing, is never 1, and
///     is invariant under duality;
///   - for n >= 5, the synthesized certificate verifies and has length
///     ⌈Δ/2⌉, and brute_delta agrees.
/// Classes are distributed over `jobs` worker threads; the report does not
/// depend on `jobs`.
SweepReport sweep_size(int n, int jobs = 1);

/// sweep_size for n = 3..max_n. Throws std::out_of_range above kSweepBound.
std::vector<SweepReport> sweep_verify(int max_n, int jobs = 1);

}  // namespace tourn
