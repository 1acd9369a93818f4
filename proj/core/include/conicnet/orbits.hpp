#pragma once

// Orbits of PGL(3,q) on subspaces of PG(5,q): breadth-first closure,
// stabilizer orders, equivalence witnesses, and full orbit partitions.

#include <cstdint>
#include <optional>
#include <vector>

#include "conicnet/group.hpp"

namespace conicnet {

/// Largest orbit or partition orbit_of/orbit_partition will hold, from
/// CONICNET_ORBIT_LIMIT (default 20,000,000).
std::uint64_t orbit_memory_limit();

enum class OrbitMethod { Generators, FullGroup };

/// Canonical members of the K-orbit of s.  MemoryBoundExceeded when the
/// orbit grows past orbit_memory_limit().
std::vector<Subspace> orbit_of(const FieldPtr& field, const Subspace& s, OrbitMethod method = OrbitMethod::Generators);

/// Number of elements of PGL(3,q) fixing s setwise.
std::uint64_t stabilizer_order(const FieldPtr& field, const Subspace& s);

/// |PGL(3,q)| / stabilizer_order(s).
std::uint64_t orbit_size(const FieldPtr& field, const Subspace& s);

/// Invariants that must agree for two subspaces to be equivalent.
struct SubspaceProfile {
  int dim = 0;
  OrbitDistribution distribution;
  friend bool operator==(const SubspaceProfile&, const SubspaceProfile&) = default;
};
SubspaceProfile profile_of(const FieldPtr& field, const Subspace& s);

/// Largest group scanned by the witness search without a rank-1 frame.
inline constexpr std::uint64_t kWitnessFullScanLimit = 6'000'000;

/// Some A with act(A, a) = b, or nullopt when none exists.  Maps a rank-1
/// point of a onto each rank-1 point of b and searches the point stabilizer;
/// subspaces missing the Veronesean fall back to the full group.
/// DimensionMismatch, SearchBudgetExceeded.
std::optional<Mat3> find_witness(const FieldPtr& field, const Subspace& a, const Subspace& b);

/// Orbits of all k-flats of PG(5,q), indexed like SubspaceEnumerator(n=5, k).
struct OrbitPartition {
  std::vector<std::uint32_t> orbit;         // orbit id per enumerator index
  std::vector<std::uint64_t> sizes;         // per orbit id
  std::vector<std::uint64_t> first_member;  // least enumerator index per orbit
};

/// Union-find closure under the generators.  MemoryBoundExceeded when the
/// number of k-flats exceeds orbit_memory_limit().
OrbitPartition orbit_partition(const FieldPtr& field, int k);

}  // namespace conicnet
