#pragma once

// Positional representation of Chr^l s^1: a path of 3^l edges whose vertices
// are numbered 0..3^l from the process-0 solo vertex to the process-1 solo
// vertex. Colors alternate (process 0 at even indices); only the two ends
// have solo carriers.

#include "affine2/common.hpp"

namespace affine2 {

struct IntervalVertex {
  unsigned level = 0;
  Index index = 0;

  bool operator==(const IntervalVertex&) const = default;
};

/// The facet between vertices index and index + 1.
struct EdgeRef {
  unsigned level = 0;
  Index index = 0;

  bool operator==(const EdgeRef&) const = default;
};

inline Index vertex_count(unsigned level) { return pow3(level) + 1; }
inline Index edge_count(unsigned level) { return pow3(level); }

inline Color vertex_color(Index index) { return static_cast<Color>(index % 2); }

/// Throws index_out_of_range unless index <= 3^level.
ProcessSet vertex_carrier(const IntervalVertex& v);

/// Carrier of a vertex given the length 3^level of its path.
inline ProcessSet carrier_on_path(Index index, Index path_edges) {
  if (index == 0) return ProcessSet::single(0);
  if (index == path_edges) return ProcessSet::single(1);
  return ProcessSet::of({0, 1});
}

/// Forward edges have their color-0 endpoint on the left.
inline bool is_forward(Index edge_index) { return edge_index % 2 == 0; }

/// Throws index_out_of_range unless index < 3^level.
void check_edge(const EdgeRef& e);

/// True iff the path at this level is isomorphic, preserving colors, carriers
/// and adjacency, to the kernel's chr_iterate_dim1(level).
bool interval_matches_kernel(unsigned level, const Limits& limits = {});

}  // namespace affine2
