#pragma once

// Relative computability of two-process affine models.
//
// A* solves B iff some iterate A^k admits a simplicial, color-preserving map
// into B that is carried by B's carrier map. The decision itself is a class
// comparison; witness() additionally builds such a map, and the oracle_*
// functions search for one by brute force without consulting the classes.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "affine2/classify.hpp"
#include "affine2/task.hpp"

namespace affine2 {

/// Candidate simplicial map between two tasks, as (source vertex, target
/// vertex) pairs ascending by source. Only source-task vertices are assigned.
struct VertexMap {
  unsigned source_level = 0;
  unsigned target_level = 0;
  std::vector<std::pair<Index, Index>> assignment;

  std::optional<Index> image(Index source) const;
  bool operator==(const VertexMap&) const = default;
};

struct Witness {
  unsigned k = 1;
  VertexMap map;

  bool operator==(const Witness&) const = default;
};

enum class ViolationKind { Chromatic, Carrier, Simplicial };

std::string_view violation_name(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  Index source;       // offending vertex, or left end of the offending edge
  Index image;        // its image
  Index image_other;  // image of the right end (simplicial only)

  /// "carrier: vertex 3 -> 1", "simplicial: edge (0,1) -> (0,3)"
  std::string describe() const;
};

struct VerifyResult {
  std::optional<Violation> violation;

  bool ok() const { return !violation.has_value(); }
  explicit operator bool() const { return ok(); }
};

/// Checks, vertex by vertex then edge by edge, that m is chromatic,
/// carrier-preserving and simplicial from a into b, reporting the first
/// failure. Throws level_mismatch, partial_map, or index_out_of_range for a
/// target outside the path.
VerifyResult verify_map(const VertexMap& m, const AffineTask& a, const AffineTask& b);

/// A* solves B iff class(b) <= class(a).
bool solves(const AffineTask& a, const AffineTask& b);

/// Explicit (k, map) with verify_map(map, iterate(a, k), b) passing, or
/// nullopt when a* does not solve b. k is not necessarily minimal.
std::optional<Witness> witness(const AffineTask& a, const AffineTask& b, const Limits& limits = {});

/// Backtracking search for any valid map from source into target. Vertices
/// are assigned in ascending order, candidates tried ascending. Throws
/// search_budget_exceeded past limits.max_search_nodes.
std::optional<VertexMap> oracle_find_map(const AffineTask& source, const AffineTask& target,
                                         const Limits& limits = {});

/// Calls visit on every valid map from source into target; stops early if
/// visit returns false. Returns the number of maps visited.
std::uint64_t oracle_enumerate_maps(const AffineTask& source, const AffineTask& target,
                                    const std::function<bool(const VertexMap&)>& visit,
                                    const Limits& limits = {});

/// True iff some valid map iterate(a, k) -> b exists.
bool oracle_solves(const AffineTask& a, const AffineTask& b, unsigned k, const Limits& limits = {});

/// The task formed by the edges of b hit by m on the edges of a.
AffineTask image_task(const VertexMap& m, const AffineTask& a);

/// {"k": 2, "from_level": 2, "to_level": 1, "assignment": [[0,0],[1,1]]} plus newline.
std::string to_witness_text(const Witness& w);
Witness parse_witness_text(std::string_view text);

}  // namespace affine2
