#include "affine2/classify.hpp"

#include <array>
#include <deque>
#include <utility>
#include <vector>

namespace affine2 {
namespace {

constexpr std::size_t kKinds = kAllKinds.size();

constexpr std::size_t slot(CanonicalKind k) { return static_cast<std::size_t>(k); }

// Covering pairs (lower, upper) of the Hasse diagram.
constexpr std::array<std::pair<CanonicalKind, CanonicalKind>, 5> kCovers = {{
    {CanonicalKind::Connected, CanonicalKind::Both},
    {CanonicalKind::Both, CanonicalKind::OnlyV0},
    {CanonicalKind::Both, CanonicalKind::OnlyV1},
    {CanonicalKind::OnlyV0, CanonicalKind::Neither},
    {CanonicalKind::OnlyV1, CanonicalKind::Neither},
}};

using Relation = std::array<std::array<bool, kKinds>, kKinds>;

Relation reflexive_transitive_closure() {
  Relation below{};
  for (std::size_t i = 0; i < kKinds; ++i) below[i][i] = true;
  for (auto [lo, hi] : kCovers) below[slot(lo)][slot(hi)] = true;
  for (std::size_t m = 0; m < kKinds; ++m) {
    for (std::size_t i = 0; i < kKinds; ++i) {
      for (std::size_t j = 0; j < kKinds; ++j) {
        if (below[i][m] && below[m][j]) below[i][j] = true;
      }
    }
  }
  return below;
}

const Relation& order_table() {
  static const Relation table = reflexive_transitive_closure();
  return table;
}

}  // namespace

CanonicalKind kind_from_properties(bool p1, bool p2, bool p3) {
  if (p1) return CanonicalKind::Connected;
  if (p2 && p3) return CanonicalKind::Both;
  if (p2) return CanonicalKind::OnlyV0;
  if (p3) return CanonicalKind::OnlyV1;
  return CanonicalKind::Neither;
}

TaskClass classify(const AffineTask& a) {
  const Index n = a.path_edges();
  TaskClass c;
  c.p2 = a.has_edge(0);
  c.p3 = a.has_edge(n - 1);

  // Breadth-first search from v0 over present edges. On a path this reduces
  // to "every edge is present", which the tests check separately.
  if (c.p2) {
    std::vector<bool> present(n, false);
    for (Index e : a.edges()) present[e] = true;
    std::vector<bool> seen(n + 1, false);
    std::deque<Index> queue{0};
    seen[0] = true;
    while (!queue.empty() && !seen[n]) {
      const Index v = queue.front();
      queue.pop_front();
      if (v > 0 && present[v - 1] && !seen[v - 1]) {
        seen[v - 1] = true;
        queue.push_back(v - 1);
      }
      if (v < n && present[v] && !seen[v + 1]) {
        seen[v + 1] = true;
        queue.push_back(v + 1);
      }
    }
    c.p1 = seen[n];
  }
  c.kind = kind_from_properties(c.p1, c.p2, c.p3);
  return c;
}

std::string_view order_name(Order o) {
  switch (o) {
    case Order::LessOrEqual: return "less-or-equal";
    case Order::Greater: return "greater";
    case Order::Incomparable: return "incomparable";
    case Order::Equal: return "equal";
  }
  return "?";
}

Order class_leq(CanonicalKind x, CanonicalKind y) {
  if (x == y) return Order::Equal;
  const auto& below = order_table();
  if (below[slot(x)][slot(y)]) return Order::LessOrEqual;
  if (below[slot(y)][slot(x)]) return Order::Greater;
  return Order::Incomparable;
}

std::string describe(const TaskClass& c) {
  auto b = [](bool v) { return v ? "true" : "false"; };
  return std::string(kind_name(c.kind)) + " (P1=" + b(c.p1) + " P2=" + b(c.p2) + " P3=" + b(c.p3) + ")";
}

}  // namespace affine2
