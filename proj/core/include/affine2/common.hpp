#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace affine2 {

/// Position along the subdivided interval (vertex or edge index).
using Index = std::uint64_t;

/// Process identifier. Processes are numbered 0..n.
using Color = int;

// =============================================================================
// Errors
// =============================================================================

enum class Errc {
  dimension_out_of_range,
  iteration_budget_exceeded,
  index_out_of_range,
  invalid_level,
  invalid_count,
  empty_task,
  duplicate_edge,
  level_overflow,
  partial_map,
  level_mismatch,
  search_budget_exceeded,
  empty_schedule,
  length_not_multiple,
  parse_error,
};

/// Stable, hyphenated name used in CLI diagnostics ("empty-task", ...).
std::string_view error_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  Errc code_;
};

// =============================================================================
// Limits
// =============================================================================

/// Resource caps shared by the modules. Defaults bound memory to a few MB.
struct Limits {
  /// Highest subdivision level an affine task may live in (3^12 edges).
  unsigned max_level = 12;
  /// Highest iteration count accepted by the generic kernel.
  unsigned max_kernel_iterations = 8;
  /// Node budget for the brute-force map search.
  std::uint64_t max_search_nodes = 10'000'000;
};

/// 3^exponent. Throws level_overflow when the result would not fit in Index.
Index pow3(unsigned exponent);

// =============================================================================
// ProcessSet
// =============================================================================

/// A set of process ids in {0..7}, used for faces of the standard simplex
/// and for carriers.
class ProcessSet {
 public:
  constexpr ProcessSet() = default;
  constexpr explicit ProcessSet(std::uint8_t bits) : bits_(bits) {}

  static constexpr ProcessSet single(Color c) {
    return ProcessSet(static_cast<std::uint8_t>(1u << c));
  }
  static constexpr ProcessSet range(int count) {
    return ProcessSet(static_cast<std::uint8_t>((1u << count) - 1u));
  }
  static ProcessSet of(std::initializer_list<Color> members);

  constexpr std::uint8_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(Color c) const { return (bits_ >> c) & 1u; }
  constexpr bool subset_of(ProcessSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  int size() const;
  std::vector<Color> members() const;

  constexpr ProcessSet operator|(ProcessSet o) const {
    return ProcessSet(static_cast<std::uint8_t>(bits_ | o.bits_));
  }
  constexpr ProcessSet& operator|=(ProcessSet o) {
    bits_ = static_cast<std::uint8_t>(bits_ | o.bits_);
    return *this;
  }

  constexpr bool operator==(const ProcessSet&) const = default;
  /// Lexicographic on the ascending member lists: {0} < {0,1} < {0,1,2} < {0,2} < {1}.
  std::strong_ordering operator<=>(const ProcessSet& o) const;

  /// "{0,1}"
  std::string to_string() const;

 private:
  std::uint8_t bits_ = 0;
};

}  // namespace affine2
