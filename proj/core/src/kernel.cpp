#include "affine2/kernel.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>

namespace affine2 {
namespace {

// Canonical facet order: lexicographic on the (color, carrier) pairs, then on
// vertex ids to separate facets of iterated complexes with equal carriers.
bool facet_less(const KernelSimplex& x, const KernelSimplex& y) {
  auto key = [](const KernelVertex& v) { return std::make_tuple(v.color, v.carrier); };
  const auto& a = x.vertices;
  const auto& b = y.vertices;
  const bool lt = std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [&](const KernelVertex& u, const KernelVertex& v) { return key(u) < key(v); });
  const bool gt = std::lexicographical_compare(
      b.begin(), b.end(), a.begin(), a.end(),
      [&](const KernelVertex& u, const KernelVertex& v) { return key(u) < key(v); });
  if (lt != gt) return lt;
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [](const KernelVertex& u, const KernelVertex& v) { return u.id < v.id; });
}

void sort_facets(std::vector<KernelSimplex>& facets) {
  std::sort(facets.begin(), facets.end(), facet_less);
}

// One local pattern per facet of Chr s^n: entry i is the face t_i of the
// color-i vertex, expressed over local colors 0..n.
std::vector<std::vector<ProcessSet>> local_patterns(int n) {
  std::vector<std::vector<ProcessSet>> out;
  for (const auto& f : chr_facets(n).facets) {
    std::vector<ProcessSet> faces;
    for (const auto& v : f.vertices) faces.push_back(v.carrier);
    out.push_back(std::move(faces));
  }
  return out;
}

KernelComplex base_simplex(int n) {
  KernelComplex k;
  k.dimension = n;
  KernelSimplex facet;
  for (Color c = 0; c <= n; ++c) {
    KernelVertex v{c, ProcessSet::single(c), static_cast<std::size_t>(c)};
    k.vertices.push_back(v);
    k.local_faces.emplace_back();
    facet.vertices.push_back(v);
  }
  k.facets.push_back(std::move(facet));
  return k;
}

KernelComplex subdivide(const KernelComplex& prev,
                        const std::vector<std::vector<ProcessSet>>& patterns) {
  KernelComplex next;
  next.dimension = prev.dimension;
  next.iterations = prev.iterations + 1;

  // A vertex of Chr K is (p, sigma): its color and the simplex of K it sees.
  std::map<std::pair<Color, std::vector<std::size_t>>, std::size_t> index;

  for (const auto& facet : prev.facets) {
    for (const auto& pattern : patterns) {
      KernelSimplex sub;
      for (Color c = 0; c <= prev.dimension; ++c) {
        std::vector<std::size_t> face;
        ProcessSet carrier;
        for (Color member : pattern[static_cast<std::size_t>(c)].members()) {
          const KernelVertex& pv = facet.vertices[static_cast<std::size_t>(member)];
          face.push_back(pv.id);
          carrier |= pv.carrier;
        }
        std::sort(face.begin(), face.end());
        auto [it, inserted] = index.try_emplace({c, face}, next.vertices.size());
        if (inserted) {
          next.vertices.push_back(KernelVertex{c, carrier, it->second});
          next.local_faces.push_back(face);
        }
        sub.vertices.push_back(next.vertices[it->second]);
      }
      next.facets.push_back(std::move(sub));
    }
  }
  sort_facets(next.facets);
  return next;
}

}  // namespace

bool is_chromatic(const KernelSimplex& s) {
  for (std::size_t i = 0; i < s.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < s.vertices.size(); ++j) {
      if (s.vertices[i].color == s.vertices[j].color) return false;
    }
  }
  return true;
}

bool carriers_nested(const KernelSimplex& s) {
  for (const auto& u : s.vertices) {
    for (const auto& v : s.vertices) {
      if (!u.carrier.subset_of(v.carrier) && !v.carrier.subset_of(u.carrier)) return false;
    }
  }
  return true;
}

bool carriers_see_consistently(const KernelSimplex& s) {
  for (const auto& u : s.vertices) {
    for (const auto& v : s.vertices) {
      if (u.carrier.contains(v.color) && !v.carrier.subset_of(u.carrier)) return false;
    }
  }
  return true;
}

KernelComplex chr_facets(int n) {
  if (n < 0 || n > 2) {
    throw Error(Errc::dimension_out_of_range,
                "chr_facets supports 0 <= n <= 2, got " + std::to_string(n));
  }
  KernelComplex k;
  k.dimension = n;
  k.iterations = 1;

  // Vert(Chr s): every (color, face containing color), in canonical order.
  const int faces = 1 << (n + 1);
  std::vector<std::vector<KernelVertex>> by_color(static_cast<std::size_t>(n + 1));
  for (Color c = 0; c <= n; ++c) {
    for (int bits = 1; bits < faces; ++bits) {
      ProcessSet t(static_cast<std::uint8_t>(bits));
      if (t.contains(c)) by_color[static_cast<std::size_t>(c)].push_back({c, t, 0});
    }
    std::sort(by_color[static_cast<std::size_t>(c)].begin(),
              by_color[static_cast<std::size_t>(c)].end(),
              [](const KernelVertex& a, const KernelVertex& b) { return a.carrier < b.carrier; });
    for (auto& v : by_color[static_cast<std::size_t>(c)]) {
      v.id = k.vertices.size();
      k.vertices.push_back(v);
      std::vector<std::size_t> face;
      for (Color member : v.carrier.members()) face.push_back(static_cast<std::size_t>(member));
      k.local_faces.push_back(std::move(face));
    }
  }

  // Cartesian product over colors, filtered by (a) and (b).
  std::vector<std::size_t> choice(static_cast<std::size_t>(n + 1), 0);
  while (true) {
    KernelSimplex s;
    for (Color c = 0; c <= n; ++c) {
      s.vertices.push_back(by_color[static_cast<std::size_t>(c)][choice[static_cast<std::size_t>(c)]]);
    }
    if (carriers_nested(s) && carriers_see_consistently(s)) k.facets.push_back(std::move(s));

    std::size_t pos = 0;
    while (pos < choice.size() && ++choice[pos] == by_color[pos].size()) {
      choice[pos] = 0;
      ++pos;
    }
    if (pos == choice.size()) break;
  }
  sort_facets(k.facets);
  return k;
}

ProcessSet kernel_carrier(const KernelSimplex& s) {
  ProcessSet out;
  for (const auto& v : s.vertices) out |= v.carrier;
  return out;
}

KernelComplex chr_iterate(int n, unsigned m, const Limits& limits) {
  if (n < 0 || n > 2) {
    throw Error(Errc::dimension_out_of_range,
                "chr_iterate supports 0 <= n <= 2, got " + std::to_string(n));
  }
  if (m > limits.max_kernel_iterations) {
    throw Error(Errc::iteration_budget_exceeded,
                std::to_string(m) + " iterations exceeds cap " +
                    std::to_string(limits.max_kernel_iterations));
  }
  const auto patterns = local_patterns(n);
  KernelComplex k = base_simplex(n);
  for (unsigned i = 0; i < m; ++i) k = subdivide(k, patterns);
  return k;
}

KernelComplex chr_iterate_dim1(unsigned m, const Limits& limits) {
  return chr_iterate(1, m, limits);
}

std::optional<std::vector<KernelVertex>> kernel_path(const KernelComplex& k) {
  if (k.dimension != 1) return std::nullopt;

  std::vector<std::vector<std::size_t>> adjacent(k.vertices.size());
  for (const auto& f : k.facets) {
    if (f.vertices.size() != 2) return std::nullopt;
    adjacent[f.vertices[0].id].push_back(f.vertices[1].id);
    adjacent[f.vertices[1].id].push_back(f.vertices[0].id);
  }

  std::optional<std::size_t> start;
  for (const auto& v : k.vertices) {
    if (v.carrier == ProcessSet::single(0)) {
      if (start) return std::nullopt;
      start = v.id;
    }
  }
  if (!start) return std::nullopt;

  std::vector<KernelVertex> path;
  std::vector<bool> seen(k.vertices.size(), false);
  std::size_t cur = *start;
  while (true) {
    path.push_back(k.vertices[cur]);
    seen[cur] = true;
    std::optional<std::size_t> next;
    for (std::size_t nb : adjacent[cur]) {
      if (seen[nb]) continue;
      if (next) return std::nullopt;  // branching
      next = nb;
    }
    if (!next) break;
    cur = *next;
  }
  if (path.size() != k.vertices.size()) return std::nullopt;
  if (path.back().carrier != ProcessSet::single(1)) return std::nullopt;
  return path;
}

std::string to_string(const KernelSimplex& s) {
  std::string out;
  for (const auto& v : s.vertices) {
    if (!out.empty()) out += ' ';
    out += '(' + std::to_string(v.color) + ',' + v.carrier.to_string() + ')';
  }
  return out;
}

}  // namespace affine2
