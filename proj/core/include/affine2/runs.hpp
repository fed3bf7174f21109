#pragma once

// Two-process iterated immediate-snapshot runs and their facets in Chr^m s^1.
//
// Each round has three outcomes: process 0 snapshots alone, both see each
// other, or process 1 snapshots alone. An m-round schedule picks one edge at
// level m by ternary descent; on a reversed edge the three sub-blocks are
// read right to left, matching the placement used by replace_facets.

#include <string>
#include <string_view>
#include <vector>

#include "affine2/interval.hpp"
#include "affine2/task.hpp"

namespace affine2 {

enum class Round { ZeroFirst, Concurrent, OneFirst };

using Schedule = std::vector<Round>;

/// Token for a round: "0", "c" or "1".
char round_token(Round r);

/// Throws empty_schedule for an empty schedule.
EdgeRef schedule_to_edge(const Schedule& s);

/// Inverse of schedule_to_edge; the single edge at level 0 gives the empty
/// schedule. Throws index_out_of_range.
Schedule edge_to_schedule(const EdgeRef& e);

/// True iff the schedule's edge lies in iterate(a, length / a.level()).
/// Throws length_not_multiple unless the length is a positive multiple of
/// the task level.
bool prefix_in_model(const AffineTask& a, const Schedule& s);

/// "c,c,0"
std::string to_schedule_text(const Schedule& s);
/// Comma-separated tokens, surrounding whitespace ignored. Throws
/// parse_error on unknown tokens and empty_schedule on empty input.
Schedule parse_schedule_text(std::string_view text);

}  // namespace affine2
