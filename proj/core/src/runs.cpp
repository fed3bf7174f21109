#include "affine2/runs.hpp"

#include <algorithm>

namespace affine2 {
namespace {

unsigned round_digit(Round r) { return static_cast<unsigned>(r); }

}  // namespace

char round_token(Round r) {
  switch (r) {
    case Round::ZeroFirst: return '0';
    case Round::Concurrent: return 'c';
    case Round::OneFirst: return '1';
  }
  return '?';
}

EdgeRef schedule_to_edge(const Schedule& s) {
  if (s.empty()) throw Error(Errc::empty_schedule, "a schedule needs at least one round");
  const auto level = static_cast<unsigned>(s.size());
  pow3(level);  // rejects schedules whose edge index would overflow

  Index index = 0;
  for (Round r : s) {
    const unsigned d = round_digit(r);
    index = index * 3 + (is_forward(index) ? d : 2 - d);
  }
  return {level, index};
}

Schedule edge_to_schedule(const EdgeRef& e) {
  check_edge(e);
  std::vector<unsigned> digits(e.level);
  Index rest = e.index;
  for (unsigned i = e.level; i-- > 0;) {
    digits[i] = static_cast<unsigned>(rest % 3);
    rest /= 3;
  }
  Schedule out;
  out.reserve(e.level);
  Index prefix = 0;
  for (unsigned d : digits) {
    out.push_back(static_cast<Round>(is_forward(prefix) ? d : 2 - d));
    prefix = prefix * 3 + d;
  }
  return out;
}

bool prefix_in_model(const AffineTask& a, const Schedule& s) {
  if (s.empty()) throw Error(Errc::empty_schedule, "a schedule needs at least one round");
  if (s.size() % a.level() != 0) {
    throw Error(Errc::length_not_multiple, std::to_string(s.size()) + " rounds is not a multiple of level " +
                                               std::to_string(a.level()));
  }
  const EdgeRef edge = schedule_to_edge(s);

  // Undo the facet replacements of iterate(a, k) one block of a.level()
  // rounds at a time; every block must land on an edge of a.
  const Index block = a.path_edges();
  const std::size_t blocks = s.size() / a.level();
  std::vector<Index> digits(blocks);
  Index rest = edge.index;
  for (std::size_t i = blocks; i-- > 0;) {
    digits[i] = rest % block;
    rest /= block;
  }
  Index host = 0;
  for (Index c : digits) {
    const Index local = is_forward(host) ? c : block - 1 - c;
    if (!a.has_edge(local)) return false;
    host = host * block + c;
  }
  return true;
}

std::string to_schedule_text(const Schedule& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += round_token(s[i]);
  }
  return out;
}

Schedule parse_schedule_text(std::string_view text) {
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (text.empty()) throw Error(Errc::empty_schedule, "no rounds given");

  Schedule out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!token.empty() && is_space(token.front())) token.remove_prefix(1);
    while (!token.empty() && is_space(token.back())) token.remove_suffix(1);
    if (token == "0") {
      out.push_back(Round::ZeroFirst);
    } else if (token == "c" || token == "C") {
      out.push_back(Round::Concurrent);
    } else if (token == "1") {
      out.push_back(Round::OneFirst);
    } else {
      throw Error(Errc::parse_error, "unknown round token '" + std::string(token) + "'");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace affine2
