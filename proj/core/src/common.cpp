#include "affine2/common.hpp"

#include <bit>
#include <limits>

namespace affine2 {

std::string_view error_name(Errc code) noexcept {
  switch (code) {
    case Errc::dimension_out_of_range: return "dimension-out-of-range";
    case Errc::iteration_budget_exceeded: return "iteration-budget-exceeded";
    case Errc::index_out_of_range: return "index-out-of-range";
    case Errc::invalid_level: return "invalid-level";
    case Errc::invalid_count: return "invalid-count";
    case Errc::empty_task: return "empty-task";
    case Errc::duplicate_edge: return "duplicate-edge";
    case Errc::level_overflow: return "level-overflow";
    case Errc::partial_map: return "partial-map";
    case Errc::level_mismatch: return "level-mismatch";
    case Errc::search_budget_exceeded: return "search-budget-exceeded";
    case Errc::empty_schedule: return "empty-schedule";
    case Errc::length_not_multiple: return "length-not-multiple";
    case Errc::parse_error: return "parse-error";
  }
  return "unknown-error";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

Index pow3(unsigned exponent) {
  Index result = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (result > std::numeric_limits<Index>::max() / 3) {
      throw Error(Errc::level_overflow, "3^" + std::to_string(exponent) + " does not fit");
    }
    result *= 3;
  }
  return result;
}

ProcessSet ProcessSet::of(std::initializer_list<Color> members) {
  ProcessSet s;
  for (Color c : members) s |= single(c);
  return s;
}

int ProcessSet::size() const { return std::popcount(bits_); }

std::vector<Color> ProcessSet::members() const {
  std::vector<Color> out;
  for (Color c = 0; c < 8; ++c) {
    if (contains(c)) out.push_back(c);
  }
  return out;
}

std::strong_ordering ProcessSet::operator<=>(const ProcessSet& o) const {
  const auto a = members();
  const auto b = o.members();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::string ProcessSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (Color c : members()) {
    if (!first) out += ',';
    out += std::to_string(c);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace affine2
