#include "affine2/solve.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "affine2/interval.hpp"
#include "json.hpp"

namespace affine2 {
namespace {

bool by_source(const std::pair<Index, Index>& x, const std::pair<Index, Index>& y) {
  return x.first < y.first;
}

// Triangle wave of period 2m: climbs 0..m, falls back to 0, repeats.
//
// It is simplicial (consecutive inputs land on consecutive outputs) and
// parity preserving because 2m is even and 2m - r = r (mod 2). It fixes 0,
// and for n = 3^K with K >= level(m) it sends n to m: n = m * 3^(K - level),
// an odd multiple of m, so n = m (mod 2m).
Index fold(Index i, Index m) {
  const Index r = i % (2 * m);
  return r <= m ? r : 2 * m - r;
}

// Parity map onto target edge e: each vertex goes to the endpoint of its color.
Index onto_edge(Index i, Index e) { return (i % 2 == e % 2) ? e : e + 1; }

// Maximal runs of consecutive present edges, as vertex ranges [first, last].
std::vector<std::pair<Index, Index>> components(const AffineTask& a) {
  std::vector<std::pair<Index, Index>> out;
  for (Index e : a.edges()) {
    if (!out.empty() && out.back().second == e) {
      out.back().second = e + 1;
    } else {
      out.emplace_back(e, e + 1);
    }
  }
  return out;
}

class MapSearch {
 public:
  MapSearch(const AffineTask& source, const AffineTask& target, const Limits& limits)
      : source_(source),
        target_(target),
        vertices_(source.vertices()),
        images_(vertices_.size(), 0),
        n_(source.path_edges()),
        m_(target.path_edges()),
        cap_(limits.max_search_nodes) {}

  std::optional<VertexMap> find_any() {
    // Components share no edge, so each can be solved on its own; a failed
    // component means no map exists at all.
    std::size_t begin = 0;
    while (begin < vertices_.size()) {
      std::size_t end = begin + 1;
      while (end < vertices_.size() && source_.has_edge(vertices_[end] - 1)) ++end;
      bool found = false;
      descend(begin, end, [&] {
        found = true;
        return false;
      });
      if (!found) return std::nullopt;
      begin = end;
    }
    return current();
  }

  std::uint64_t enumerate(const std::function<bool(const VertexMap&)>& visit) {
    std::uint64_t count = 0;
    descend(0, vertices_.size(), [&] {
      ++count;
      return visit(current());
    });
    return count;
  }

 private:
  bool admissible(std::size_t pos, Index t) const {
    const Index v = vertices_[pos];
    if (t % 2 != v % 2) return false;
    if (!carrier_on_path(t, m_).subset_of(carrier_on_path(v, n_))) return false;
    if (!target_.has_vertex(t)) return false;
    if (v > 0 && source_.has_edge(v - 1)) {
      // vertices_ is ascending and v - 1 is in the task, so it sits at pos - 1.
      const Index u = images_[pos - 1];
      const Index lo = std::min(u, t);
      if (std::max(u, t) - lo != 1 || !target_.has_edge(lo)) return false;
    }
    return true;
  }

  // Depth-first over positions [pos, end); on_complete returns whether to
  // keep searching. Returns false once the search has been stopped.
  template <typename F>
  bool descend(std::size_t pos, std::size_t end, F&& on_complete) {
    if (pos == end) return on_complete();
    for (Index t = 0; t <= m_; ++t) {
      if (++nodes_ > cap_) {
        throw Error(Errc::search_budget_exceeded,
                    "more than " + std::to_string(cap_) + " search nodes");
      }
      if (!admissible(pos, t)) continue;
      images_[pos] = t;
      if (!descend(pos + 1, end, on_complete)) return false;
    }
    return true;
  }

  VertexMap current() const {
    VertexMap m{source_.level(), target_.level(), {}};
    m.assignment.reserve(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i) m.assignment.emplace_back(vertices_[i], images_[i]);
    return m;
  }

  const AffineTask& source_;
  const AffineTask& target_;
  std::vector<Index> vertices_;
  std::vector<Index> images_;
  Index n_;
  Index m_;
  std::uint64_t cap_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<Index> VertexMap::image(Index source) const {
  auto it = std::lower_bound(assignment.begin(), assignment.end(), std::make_pair(source, Index{0}), by_source);
  if (it == assignment.end() || it->first != source) return std::nullopt;
  return it->second;
}

std::string_view violation_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Chromatic: return "chromatic";
    case ViolationKind::Carrier: return "carrier";
    case ViolationKind::Simplicial: return "simplicial";
  }
  return "?";
}

std::string Violation::describe() const {
  std::ostringstream os;
  os << violation_name(kind) << ": ";
  if (kind == ViolationKind::Simplicial) {
    os << "edge (" << source << ',' << source + 1 << ") -> (" << image << ',' << image_other << ')';
  } else {
    os << "vertex " << source << " -> " << image;
  }
  return os.str();
}

VerifyResult verify_map(const VertexMap& m, const AffineTask& a, const AffineTask& b) {
  if (m.source_level != a.level() || m.target_level != b.level()) {
    throw Error(Errc::level_mismatch,
                "map is level " + std::to_string(m.source_level) + " -> " +
                    std::to_string(m.target_level) + ", tasks are level " +
                    std::to_string(a.level()) + " -> " + std::to_string(b.level()));
  }
  VertexMap sorted = m;
  if (!std::is_sorted(sorted.assignment.begin(), sorted.assignment.end(), by_source)) {
    std::stable_sort(sorted.assignment.begin(), sorted.assignment.end(), by_source);
  }

  const Index n = a.path_edges();
  const Index mm = b.path_edges();
  const auto vertices = a.vertices();
  std::vector<Index> images;
  images.reserve(vertices.size());
  for (Index v : vertices) {
    const auto t = sorted.image(v);
    if (!t) throw Error(Errc::partial_map, "no image for vertex " + std::to_string(v));
    if (*t > mm) {
      throw Error(Errc::index_out_of_range, "image " + std::to_string(*t) + " of vertex " +
                                                std::to_string(v) + " outside [0, " +
                                                std::to_string(mm) + "]");
    }
    images.push_back(*t);
  }

  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertex_color(images[i]) != vertex_color(vertices[i])) {
      return {Violation{ViolationKind::Chromatic, vertices[i], images[i], 0}};
    }
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!carrier_on_path(images[i], mm).subset_of(carrier_on_path(vertices[i], n))) {
      return {Violation{ViolationKind::Carrier, vertices[i], images[i], 0}};
    }
  }
  for (Index e : a.edges()) {
    const Index x = *sorted.image(e);
    const Index y = *sorted.image(e + 1);
    const Index lo = std::min(x, y);
    if (std::max(x, y) - lo != 1 || !b.has_edge(lo)) {
      return {Violation{ViolationKind::Simplicial, e, x, y}};
    }
  }
  return {};
}

bool solves(const AffineTask& a, const AffineTask& b) {
  const Order o = class_leq(classify(b), classify(a));
  return o == Order::LessOrEqual || o == Order::Equal;
}

std::optional<Witness> witness(const AffineTask& a, const AffineTask& b, const Limits& limits) {
  if (!solves(a, b)) return std::nullopt;

  const Index m = b.path_edges();
  Witness w;

  if (classify(a).kind == CanonicalKind::Connected) {
    // a is the whole of Chr^la; iterate until the path is at least as fine
    // as b's and fold it onto b (which is whole as well).
    w.k = (b.level() + a.level() - 1) / a.level();
    const AffineTask source = iterate(a, w.k, limits);
    w.map = VertexMap{source.level(), b.level(), {}};
    w.map.assignment.reserve(source.path_edges() + 1);
    for (Index i = 0; i <= source.path_edges(); ++i) w.map.assignment.emplace_back(i, fold(i, m));
    return w;
  }

  // No v0-v1 path: handle each component separately. The one holding v0 goes
  // onto b's first edge, the one holding v1 onto b's last edge (both exist
  // because class(b) <= class(a)); interior components have carrier {0,1}
  // everywhere and may land on any edge.
  w.k = 1;
  w.map = VertexMap{a.level(), b.level(), {}};
  const Index n = a.path_edges();
  Index interior_even = m;
  Index interior_odd = m;
  for (Index e : b.edges()) {
    if (e % 2 == 0 && interior_even == m) interior_even = e;
    if (e % 2 == 1 && interior_odd == m) interior_odd = e;
  }
  const Index lowest = b.edges().front();

  for (auto [first, last] : components(a)) {
    Index target_edge;
    if (first == 0) {
      target_edge = 0;
    } else if (last == n) {
      target_edge = m - 1;
    } else {
      target_edge = (first % 2 == 0) ? interior_even : interior_odd;
      if (target_edge == m) target_edge = lowest;
    }
    for (Index i = first; i <= last; ++i) w.map.assignment.emplace_back(i, onto_edge(i, target_edge));
  }
  return w;
}

std::optional<VertexMap> oracle_find_map(const AffineTask& source, const AffineTask& target,
                                         const Limits& limits) {
  MapSearch search(source, target, limits);
  auto found = search.find_any();
  if (found && !verify_map(*found, source, target)) {
    throw std::logic_error("map search produced a map that fails verify_map");
  }
  return found;
}

std::uint64_t oracle_enumerate_maps(const AffineTask& source, const AffineTask& target,
                                    const std::function<bool(const VertexMap&)>& visit,
                                    const Limits& limits) {
  MapSearch search(source, target, limits);
  return search.enumerate(visit);
}

bool oracle_solves(const AffineTask& a, const AffineTask& b, unsigned k, const Limits& limits) {
  return oracle_find_map(iterate(a, k, limits), b, limits).has_value();
}

AffineTask image_task(const VertexMap& m, const AffineTask& a) {
  std::vector<Index> edges;
  for (Index e : a.edges()) {
    const auto x = m.image(e);
    const auto y = m.image(e + 1);
    if (!x || !y) throw Error(Errc::partial_map, "edge " + std::to_string(e) + " is not mapped");
    edges.push_back(std::min(*x, *y));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  Limits limits;
  limits.max_level = std::max(limits.max_level, m.target_level);
  return AffineTask::validate(m.target_level, std::move(edges), limits);
}

std::string to_witness_text(const Witness& w) {
  std::ostringstream os;
  os << "{\"k\": " << w.k << ", \"from_level\": " << w.map.source_level
     << ", \"to_level\": " << w.map.target_level << ", \"assignment\": [";
  bool first = true;
  for (auto [s, t] : w.map.assignment) {
    if (!first) os << ',';
    os << '[' << s << ',' << t << ']';
    first = false;
  }
  os << "]}\n";
  return os.str();
}

Witness parse_witness_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse_error, e.what());
  }
  for (const char* key : {"k", "from_level", "to_level", "assignment"}) {
    if (!doc.is_object() || !doc.contains(key)) {
      throw Error(Errc::parse_error, std::string("witness document needs \"") + key + "\"");
    }
  }
  for (const char* key : {"k", "from_level", "to_level"}) {
    if (!doc[key].is_number_unsigned()) {
      throw Error(Errc::parse_error, std::string("\"") + key + "\" must be a non-negative integer");
    }
  }
  Witness w;
  w.k = doc["k"].get<unsigned>();
  if (w.k == 0) throw Error(Errc::invalid_count, "witness k must be >= 1");
  w.map.source_level = doc["from_level"].get<unsigned>();
  w.map.target_level = doc["to_level"].get<unsigned>();

  const auto& pairs = doc["assignment"];
  if (!pairs.is_array()) throw Error(Errc::parse_error, "\"assignment\" must be an array");
  for (const auto& p : pairs) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() || !p[1].is_number_unsigned()) {
      throw Error(Errc::parse_error, "assignment entries must be [source, target] pairs");
    }
    w.map.assignment.emplace_back(p[0].get<Index>(), p[1].get<Index>());
  }
  std::stable_sort(w.map.assignment.begin(), w.map.assignment.end(), by_source);
  auto dup = std::adjacent_find(w.map.assignment.begin(), w.map.assignment.end(),
                                [](const auto& x, const auto& y) { return x.first == y.first; });
  if (dup != w.map.assignment.end()) {
    throw Error(Errc::parse_error, "vertex " + std::to_string(dup->first) + " assigned twice");
  }
  return w;
}

}  // namespace affine2
