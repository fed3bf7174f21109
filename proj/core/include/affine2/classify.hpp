#pragma once

// The three properties of a two-process affine task and the five classes
// they induce:
//   P1  a path of present edges joins the solo vertices v0 and v1
//   P2  v0 belongs to the task
//   P3  v1 belongs to the task
// Classes, from weakest model to strongest:
//   Connected (P1) < Both < {OnlyV0, OnlyV1} < Neither.

#include <string>
#include <string_view>

#include "affine2/task.hpp"

namespace affine2 {

struct TaskClass {
  bool p1 = false;
  bool p2 = false;
  bool p3 = false;
  CanonicalKind kind = CanonicalKind::Neither;

  bool operator==(const TaskClass&) const = default;
};

/// Kind for a property triple; Connected wins, then presence of v0 and v1.
CanonicalKind kind_from_properties(bool p1, bool p2, bool p3);

TaskClass classify(const AffineTask& a);

enum class Order { LessOrEqual, Greater, Incomparable, Equal };

std::string_view order_name(Order o);

/// Position of x relative to y in the class order. LessOrEqual means x is
/// strictly below y (a weaker model); Equal is reported separately.
Order class_leq(CanonicalKind x, CanonicalKind y);
inline Order class_leq(const TaskClass& x, const TaskClass& y) { return class_leq(x.kind, y.kind); }

/// "Neither (P1=false P2=false P3=false)"
std::string describe(const TaskClass& c);

}  // namespace affine2
