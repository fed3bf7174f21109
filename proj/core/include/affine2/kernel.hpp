#pragma once

// Definition-level standard chromatic subdivision of the standard n-simplex.
//
// Facets of Chr s^n are the tuples ((0,t_0), ..., (n,t_n)) with i in t_i and
//   (a) for all i, j: t_i is a face of t_j or t_j is a face of t_i;
//   (b) if j in t_i then t_j is a subset of t_i.
// This module enumerates them literally and serves as ground truth for the
// positional representation in interval.hpp.

#include <cstddef>
#include <optional>
#include <vector>

#include "affine2/common.hpp"

namespace affine2 {

struct KernelVertex {
  Color color = 0;
  /// Face of the original simplex s, fully composed through every level.
  ProcessSet carrier;
  /// Position in the owning complex's vertex table.
  std::size_t id = 0;

  bool operator==(const KernelVertex&) const = default;
};

/// Vertices sorted by color.
struct KernelSimplex {
  std::vector<KernelVertex> vertices;

  bool operator==(const KernelSimplex&) const = default;
};

struct KernelComplex {
  int dimension = 0;
  unsigned iterations = 0;
  std::vector<KernelVertex> vertices;
  /// For each vertex, the ids (in the previous iteration's vertex table) of
  /// the simplex it subdivides. Empty at iteration 0.
  std::vector<std::vector<std::size_t>> local_faces;
  std::vector<KernelSimplex> facets;
};

bool is_chromatic(const KernelSimplex& s);
/// Condition (a): carriers are totally ordered by inclusion.
bool carriers_nested(const KernelSimplex& s);
/// Condition (b): if j is in t_i then t_j is a subset of t_i.
bool carriers_see_consistently(const KernelSimplex& s);

/// Facets of Chr s^n for 0 <= n <= 2, in canonical order.
KernelComplex chr_facets(int n);

/// Union of member carriers (the maximum under inclusion, by condition (a)).
ProcessSet kernel_carrier(const KernelSimplex& s);

/// Chr^m s^1 by repeated facet replacement.
KernelComplex chr_iterate_dim1(unsigned m, const Limits& limits = {});

/// Chr^m s^n for n <= 2; chr_iterate_dim1 is the n = 1 case.
KernelComplex chr_iterate(int n, unsigned m, const Limits& limits = {});

/// For a one-dimensional complex that is a path from the {0}-solo vertex to
/// the {1}-solo vertex, the vertices in path order. nullopt otherwise.
std::optional<std::vector<KernelVertex>> kernel_path(const KernelComplex& k);

/// "(0,{0}) (1,{0,1})"
std::string to_string(const KernelSimplex& s);

}  // namespace affine2
