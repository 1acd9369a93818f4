#pragma once

// Exhaustive audits: every plane (or line, point, solid) of PG(5,q) is
// classified and the tallies are checked against orbit sizes and the
// closed-form distribution tables.
//
// Work is split into shards, each an index range inside one pivot pattern of
// SubspaceEnumerator.  Workers classify shards independently; a sequential
// reducer adds the shard tallies in shard order, so the result does not
// depend on the worker count.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conicnet/classify.hpp"
#include "conicnet/orbits.hpp"

namespace conicnet {

struct AuditOptions {
  int workers = 1;
  std::uint64_t shard_size = 1 << 16;
  /// When non-empty, completed shards are recorded here (JSON) and skipped
  /// on the next run with the same kind and q.
  std::string checkpoint_path;
  /// Run brute-force orbit cross-checks (partitions, Gw orbits) when the
  /// group is small enough.  Default: q <= 5.
  std::optional<bool> orbit_checks;
  /// Called after each shard with (done, total) shard counts.
  std::function<void(std::size_t, std::size_t)> progress;
};

struct LabelTally {
  std::string label;
  std::uint64_t tally = 0;
  std::uint64_t expected_orbit_size = 0;
  std::uint64_t stabilizer_order = 0;
  bool consistent = false;
};

struct AuditReport {
  std::string kind;  // planes, lines, points, conic, solids
  int q = 0;
  std::uint64_t scanned = 0;
  std::vector<LabelTally> rows;
  /// Named counters, e.g. planes_missing_veronesean, lemma_b_lt_q_violations.
  std::map<std::string, std::uint64_t> counters;
  /// Human-readable description of every failed check.
  std::vector<std::string> violations;
  std::size_t shards = 0;
  std::size_t shards_resumed = 0;
  double seconds = 0;  // wall time; never written to the report files

  bool ok() const { return violations.empty(); }
  /// label,tally,expected_orbit_size,stabilizer_order,consistent
  std::string to_csv() const;
  std::string to_json() const;
};

/// Checks: exactly the 15 labels for q occur; each tally equals
/// |PGL(3,q)| / stabilizer of the representative; n1 in {0,1,2,3,q+1};
/// no plane with two rank-1 points has fewer than q rank-2 points; no
/// classifier inconsistency.
AuditReport audit_planes(const FieldPtr& field, const AuditOptions& options = {});

/// Checks: 15 labels, tallies equal orbit sizes, distributions match the
/// line table, and (orbit checks) the classifier is constant on each orbit
/// of the generator partition, which has exactly 15 orbits.
AuditReport audit_lines(const FieldPtr& field, const AuditOptions& options = {});

/// Class counts over PG(5,q) against the closed forms; (orbit checks) the
/// orbits of diag(1,-1,0) and diag(1,-eps,0) are exactly P2e and P2i.
AuditReport audit_points(const FieldPtr& field, const AuditOptions& options = {});

/// For the conic X0X2 - X1^2: point and line class counts, tangents per
/// point, and (orbit checks) the orbits of the stabilizer of a conic point
/// against the five expected sets.
AuditReport audit_conic(const FieldPtr& field, const AuditOptions& options = {});

/// Solids mapped to lines by the trace-form orthocomplement; the line label
/// must be constant on solid orbits, giving exactly 15 solid classes.
/// Requires the solid partition to fit in memory.
AuditReport audit_solids(const FieldPtr& field, const AuditOptions& options = {});

}  // namespace conicnet
