#pragma once

#include <string>
#include <vector>

#include "tourn/comodular.hpp"

namespace tourn {

/// Smallest vertex count for which the decomposability index is defined.
inline constexpr int kMinInversionVertices = 5;

/// A sequence of arc reversals taking `base` to an indecomposable `final`.
struct InversionCertificate {
  Tournament base;
  std::vector<Arc> arcs;    // each an arc of the tournament current at its step
  std::vector<int> trace;   // Δ before each reversal
  Tournament final;
  /// Steps whose guided arc choice failed verification and was replaced by an
  /// exhaustive scan. Zero on a correct build.
  int fallback_steps = 0;
};

/// Result of a guided reduction step.
struct ReductionStep {
  Arc arc;
  bool fallback = false;
};

/// δ(T) = ⌈Δ(T)/2⌉. Throws std::invalid_argument below five vertices.
int decomposability_index(const Tournament& t);

/// Builds a minimum certificate: reduce Δ by 2 while Δ >= 4, take Δ from 3 to
/// 2, then make the tournament indecomposable with one more arc.
InversionCertificate synthesize_certificate(const Tournament& t);

/// Δ >= 4: the arc between the smallest vertices of M̃1 and M̃3, verified to
/// lower Δ by exactly 2.
ReductionStep reduction_arc_high(const Tournament& t, const StructuredDecomposition& d);

/// Δ = 3: for roles (M, N, L) over all orderings of the three parts and
/// x in M̃, y in Ñ, z in L̃ with T(x, z) = T(z, y) = 1, the arc between x and
/// y; verified to leave Δ = 2.
ReductionStep reduction_arc_three(const Tournament& t, const StructuredDecomposition& d);

/// Δ = 2: an arc between M̃ and Ñ whose reversal is indecomposable, scanning
/// every arc when no such pair works.
ReductionStep reduction_arc_two(const Tournament& t, const StructuredDecomposition& d);

/// Every arc whose single reversal yields an indecomposable tournament.
std::vector<Arc> feasible_single_arcs(const Tournament& t);

enum class CertificateStatus {
  ok,
  base_mismatch,
  arc_absent,
  trace_mismatch,
  final_mismatch,
  final_decomposable,
  length_mismatch,
};

const char* to_string(CertificateStatus status);

CertificateStatus check_certificate(const Tournament& t, const InversionCertificate& cert);

bool verify_certificate(const Tournament& t, const InversionCertificate& cert);

/// First vertex ordering (lexicographic permutation order) whose transitive
/// tournament keeps every module of t and gains at least one. Requires t
/// non-transitive with at most 7 vertices.
Tournament erdos_transitive_extension(const Tournament& t);

inline constexpr int kExtensionBound = 7;

}  // namespace tourn
