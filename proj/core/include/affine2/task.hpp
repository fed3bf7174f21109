#pragma once

// Two-process affine tasks: pure non-empty sub-complexes of Chr^l s^1, stored
// as the sorted set of present edge indices of the length-3^l path.
//
// The carrier map is implicit: the solo face {0} is sent to vertex 0 when
// edge 0 is present, {1} to vertex 3^l when the last edge is present, and
// {0,1} to the whole task.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "affine2/common.hpp"

namespace affine2 {

enum class CanonicalKind { Neither, OnlyV0, OnlyV1, Both, Connected };

inline constexpr std::array<CanonicalKind, 5> kAllKinds = {
    CanonicalKind::Neither, CanonicalKind::OnlyV0, CanonicalKind::OnlyV1,
    CanonicalKind::Both, CanonicalKind::Connected};

/// "Neither", "OnlyV0", ...
std::string_view kind_name(CanonicalKind kind);
/// Model name of the canonical task: "1-resilient", "adv-p1", "adv-p2",
/// "1-concurrent", "wait-free". Processes 0 and 1 are p1 and p2 there.
std::string_view model_name(CanonicalKind kind);
/// Accepts kind names and model names, case-insensitively.
std::optional<CanonicalKind> parse_kind(std::string_view text);

class AffineTask {
 public:
  /// Constructor gate. Edges may arrive in any order; they are stored sorted.
  /// Throws invalid_level, level_overflow, empty_task, index_out_of_range or
  /// duplicate_edge.
  static AffineTask validate(unsigned level, std::vector<Index> edges, const Limits& limits = {});

  unsigned level() const { return level_; }
  const std::vector<Index>& edges() const { return edges_; }
  /// Number of edges of the ambient path, 3^level.
  Index path_edges() const { return path_edges_; }

  bool has_edge(Index e) const;
  bool has_vertex(Index v) const;
  /// Vertices incident to a present edge, ascending.
  std::vector<Index> vertices() const;

  bool operator==(const AffineTask& o) const { return level_ == o.level_ && edges_ == o.edges_; }

 private:
  AffineTask(unsigned level, Index path_edges, std::vector<Index> edges)
      : level_(level), path_edges_(path_edges), edges_(std::move(edges)) {}

  unsigned level_;
  Index path_edges_;
  std::vector<Index> edges_;
};

/// Level-1 representatives: Neither = [1], OnlyV0 = [0], OnlyV1 = [2],
/// Both = [0,2], Connected = [0,1,2].
AffineTask canonical(CanonicalKind kind);

/// Replaces every facet of host by a copy of insert. Host edge e receives
/// insert edge j at e*3^l' + j when e is forward (even) and at
/// e*3^l' + (3^l' - 1 - j) when reversed, which is the only placement that
/// keeps colors consistent.
AffineTask replace_facets(const AffineTask& host, const AffineTask& insert,
                          const Limits& limits = {});

/// L^k: L^1 = a, L^k = replace_facets(L^(k-1), a).
AffineTask iterate(const AffineTask& a, unsigned k, const Limits& limits = {});

/// Color swap: edge j present iff 3^l - 1 - j present in a.
AffineTask mirror(const AffineTask& a);

/// Every non-empty task of the given level (2^(3^level) - 1 of them).
/// Level is limited to 2.
std::vector<AffineTask> enumerate_tasks(unsigned level);

/// Canonical text form: {"level": 2, "edges": [0, 4, 8]} plus newline.
std::string to_task_text(const AffineTask& a);
/// Parses the task document; edge order is not significant. Throws
/// parse_error on malformed input and the validate errors otherwise.
AffineTask parse_task_text(std::string_view text, const Limits& limits = {});

}  // namespace affine2
