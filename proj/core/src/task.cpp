#include "affine2/task.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "affine2/interval.hpp"
#include "json.hpp"

namespace affine2 {
namespace {

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

void check_level(unsigned level, const Limits& limits) {
  if (level > limits.max_level) {
    throw Error(Errc::level_overflow, "level " + std::to_string(level) + " exceeds cap " +
                                          std::to_string(limits.max_level));
  }
}

}  // namespace

std::string_view kind_name(CanonicalKind kind) {
  switch (kind) {
    case CanonicalKind::Neither: return "Neither";
    case CanonicalKind::OnlyV0: return "OnlyV0";
    case CanonicalKind::OnlyV1: return "OnlyV1";
    case CanonicalKind::Both: return "Both";
    case CanonicalKind::Connected: return "Connected";
  }
  return "?";
}

std::string_view model_name(CanonicalKind kind) {
  switch (kind) {
    case CanonicalKind::Neither: return "1-resilient";
    case CanonicalKind::OnlyV0: return "adv-p1";
    case CanonicalKind::OnlyV1: return "adv-p2";
    case CanonicalKind::Both: return "1-concurrent";
    case CanonicalKind::Connected: return "wait-free";
  }
  return "?";
}

std::optional<CanonicalKind> parse_kind(std::string_view text) {
  const std::string needle = lower(text);
  for (CanonicalKind k : kAllKinds) {
    if (needle == lower(kind_name(k)) || needle == model_name(k)) return k;
  }
  return std::nullopt;
}

AffineTask AffineTask::validate(unsigned level, std::vector<Index> edges, const Limits& limits) {
  if (level == 0) throw Error(Errc::invalid_level, "affine tasks live at level >= 1");
  check_level(level, limits);
  if (edges.empty()) throw Error(Errc::empty_task, "task has no edges");

  const Index n = pow3(level);
  std::sort(edges.begin(), edges.end());
  if (edges.back() >= n) {
    throw Error(Errc::index_out_of_range, "edge " + std::to_string(edges.back()) +
                                              " outside [0, " + std::to_string(n) + ")");
  }
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw Error(Errc::duplicate_edge, "edge " + std::to_string(*dup) + " listed twice");
  }
  return AffineTask(level, n, std::move(edges));
}

bool AffineTask::has_edge(Index e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool AffineTask::has_vertex(Index v) const {
  return (v < path_edges_ && has_edge(v)) || (v > 0 && has_edge(v - 1));
}

std::vector<Index> AffineTask::vertices() const {
  std::vector<Index> out;
  out.reserve(edges_.size() * 2);
  for (Index e : edges_) {
    if (out.empty() || out.back() != e) out.push_back(e);
    out.push_back(e + 1);
  }
  return out;
}

AffineTask canonical(CanonicalKind kind) {
  switch (kind) {
    case CanonicalKind::Neither: return AffineTask::validate(1, {1});
    case CanonicalKind::OnlyV0: return AffineTask::validate(1, {0});
    case CanonicalKind::OnlyV1: return AffineTask::validate(1, {2});
    case CanonicalKind::Both: return AffineTask::validate(1, {0, 2});
    case CanonicalKind::Connected: return AffineTask::validate(1, {0, 1, 2});
  }
  throw Error(Errc::parse_error, "unknown canonical kind");
}

AffineTask replace_facets(const AffineTask& host, const AffineTask& insert, const Limits& limits) {
  const unsigned level = host.level() + insert.level();
  check_level(level, limits);

  const Index block = insert.path_edges();
  const auto& inner = insert.edges();
  std::vector<Index> out;
  out.reserve(host.edges().size() * inner.size());
  for (Index e : host.edges()) {
    const Index base = e * block;
    if (is_forward(e)) {
      for (Index j : inner) out.push_back(base + j);
    } else {
      // Reversed host edge: its color-0 end is on the right, so the insert is
      // laid down mirrored. Walking inner backwards keeps out ascending.
      for (auto it = inner.rbegin(); it != inner.rend(); ++it) out.push_back(base + (block - 1 - *it));
    }
  }
  return AffineTask::validate(level, std::move(out), limits);
}

AffineTask iterate(const AffineTask& a, unsigned k, const Limits& limits) {
  if (k == 0) throw Error(Errc::invalid_count, "iteration count must be >= 1");
  if (static_cast<unsigned long long>(k) * a.level() > limits.max_level) {
    throw Error(Errc::level_overflow, std::to_string(k) + " iterations of a level-" +
                                          std::to_string(a.level()) + " task exceed cap " +
                                          std::to_string(limits.max_level));
  }
  AffineTask out = a;
  for (unsigned i = 1; i < k; ++i) out = replace_facets(out, a, limits);
  return out;
}

AffineTask mirror(const AffineTask& a) {
  std::vector<Index> out;
  out.reserve(a.edges().size());
  for (auto it = a.edges().rbegin(); it != a.edges().rend(); ++it) {
    out.push_back(a.path_edges() - 1 - *it);
  }
  Limits same_level;
  same_level.max_level = a.level();
  return AffineTask::validate(a.level(), std::move(out), same_level);
}

std::vector<AffineTask> enumerate_tasks(unsigned level) {
  if (level == 0) throw Error(Errc::invalid_level, "affine tasks live at level >= 1");
  if (level > 2) throw Error(Errc::level_overflow, "task enumeration is limited to level <= 2");
  const Index n = pow3(level);
  std::vector<AffineTask> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Index> edges;
    for (Index e = 0; e < n; ++e) {
      if ((mask >> e) & 1u) edges.push_back(e);
    }
    out.push_back(AffineTask::validate(level, std::move(edges)));
  }
  return out;
}

std::string to_task_text(const AffineTask& a) {
  std::ostringstream os;
  os << "{\"level\": " << a.level() << ", \"edges\": [";
  for (std::size_t i = 0; i < a.edges().size(); ++i) {
    if (i) os << ", ";
    os << a.edges()[i];
  }
  os << "]}\n";
  return os.str();
}

AffineTask parse_task_text(std::string_view text, const Limits& limits) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse_error, e.what());
  }
  if (!doc.is_object() || !doc.contains("level") || !doc.contains("edges")) {
    throw Error(Errc::parse_error, "task document needs \"level\" and \"edges\"");
  }
  const auto& level = doc["level"];
  const auto& edges = doc["edges"];
  if (!level.is_number_unsigned() || !edges.is_array()) {
    throw Error(Errc::parse_error, "\"level\" must be a non-negative integer, \"edges\" an array");
  }
  std::vector<Index> out;
  for (const auto& e : edges) {
    if (!e.is_number_unsigned()) throw Error(Errc::parse_error, "edge indices must be non-negative integers");
    out.push_back(e.get<Index>());
  }
  const auto lvl = level.get<std::uint64_t>();
  if (lvl > limits.max_level) {
    throw Error(Errc::level_overflow, "level " + std::to_string(lvl) + " exceeds cap " +
                                          std::to_string(limits.max_level));
  }
  return AffineTask::validate(static_cast<unsigned>(lvl), std::move(out), limits);
}

}  // namespace affine2
