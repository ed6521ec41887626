#pragma once

#include <vector>

#include "tourn/tournament.hpp"

namespace tourn {

inline constexpr int kSubsetScanBound = 16;

/// Which side of a co-module is a nontrivial module of the ambient tournament.
enum class CoModuleKind { module, complement_module, both };

const char* to_string(CoModuleKind kind);

/// A set M such that M or its complement is a nontrivial module.
struct CoModule {
  VertexSet members;
  CoModuleKind kind = CoModuleKind::module;

  bool is_module() const { return kind != CoModuleKind::complement_module; }

  friend bool operator==(const CoModule&, const CoModule&) = default;
};

/// Transitive components: the maximal transitive modules, which partition V(T).
struct TransitiveComponentPartition {
  std::vector<VertexSet> blocks;  // ordered by smallest member

  /// The block containing v.
  VertexSet block_of(int v) const;
};

/// No vertex outside x distinguishes two members of x.
bool is_module(const Tournament& t, VertexSet x);

/// x is a module with 2 <= |x| <= n-1.
bool is_nontrivial_module(const Tournament& t, VertexSet x);

bool is_indecomposable(const Tournament& t);

/// Smallest module containing the nonempty set s, grown by absorbing
/// splitters until none remain.
VertexSet smallest_module_containing(const Tournament& t, VertexSet s);

/// All nontrivial modules by subset scan, ordered by size then
/// lexicographically. Throws std::out_of_range above kSubsetScanBound.
std::vector<VertexSet> nontrivial_modules(const Tournament& t);

/// Inclusion-minimal nontrivial modules (pair-closure minima).
std::vector<VertexSet> minimal_nontrivial_modules(const Tournament& t);

/// Inclusion-maximal nontrivial modules, via the partition of V - {v} into
/// maximal modules avoiding v, for every v.
std::vector<VertexSet> maximal_nontrivial_modules(const Tournament& t);

/// The maximal modules not containing v; they partition V - {v}.
std::vector<VertexSet> maximal_modules_avoiding(const Tournament& t, int v);

bool is_comodule(const Tournament& t, VertexSet m);

/// Kind of a co-module. Throws std::invalid_argument if m is not one.
CoModuleKind comodule_kind(const Tournament& t, VertexSet m);

/// mc(T), ordered lexicographically by member list. Empty when t is
/// indecomposable.
std::vector<CoModule> minimal_comodules(const Tournament& t);

/// Elements of mc that overlap m; m must itself be in mc (std::invalid_argument
/// otherwise). At most two elements.
std::vector<CoModule> overlap_set(const Tournament& t, VertexSet m);

/// Same, against a precomputed mc.
std::vector<CoModule> overlap_set(const std::vector<CoModule>& mc, VertexSet m);

/// M itself when nothing in mc overlaps it, M ∩ M' when exactly M' does.
/// Throws std::domain_error when two elements overlap m.
VertexSet tilde(const Tournament& t, VertexSet m);
VertexSet tilde(const std::vector<CoModule>& mc, VertexSet m);

TransitiveComponentPartition transitive_components(const Tournament& t);

/// The transitive module C_v: union of all transitive modules containing v.
VertexSet transitive_component_of(const Tournament& t, int v);

/// C(k): the unique element of mc inside {v_k, v_{k+1}} where v_0..v_{|C|-1}
/// is the transitive order of the component c.
CoModule component_comodule(const Tournament& t, VertexSet c, int k);

}  // namespace tourn
