#include "affine2/interval.hpp"

#include "affine2/kernel.hpp"

namespace affine2 {

ProcessSet vertex_carrier(const IntervalVertex& v) {
  const Index n = pow3(v.level);
  if (v.index > n) {
    throw Error(Errc::index_out_of_range,
                "vertex " + std::to_string(v.index) + " at level " + std::to_string(v.level));
  }
  return carrier_on_path(v.index, n);
}

void check_edge(const EdgeRef& e) {
  if (e.index >= pow3(e.level)) {
    throw Error(Errc::index_out_of_range,
                "edge " + std::to_string(e.index) + " at level " + std::to_string(e.level));
  }
}

bool interval_matches_kernel(unsigned level, const Limits& limits) {
  const KernelComplex k = chr_iterate_dim1(level, limits);
  const Index n = pow3(level);
  if (k.facets.size() != n || k.vertices.size() != n + 1) return false;

  // kernel_path already checks that facets form a single path joining the
  // two solo vertices; what remains is the labelling along it.
  const auto path = kernel_path(k);
  if (!path) return false;
  for (Index i = 0; i <= n; ++i) {
    const KernelVertex& kv = (*path)[i];
    if (kv.color != vertex_color(i)) return false;
    if (kv.carrier != vertex_carrier({level, i})) return false;
  }
  return true;
}

}  // namespace affine2
