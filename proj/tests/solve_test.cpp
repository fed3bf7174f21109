#include <gtest/gtest.h>

#include <map>

#include "affine2/classify.hpp"
#include "affine2/interval.hpp"
#include "affine2/solve.hpp"
#include "oracle/brute_force.hpp"

namespace affine2 {
namespace {

using K = CanonicalKind;

std::map<Index, Index> as_map(const VertexMap& m) { return {m.assignment.begin(), m.assignment.end()}; }

AffineTask full(unsigned level) {
  std::vector<Index> e(edge_count(level));
  for (Index i = 0; i < e.size(); ++i) e[i] = i;
  return AffineTask::validate(level, e);
}

VertexMap identity(const AffineTask& a) {
  VertexMap m{a.level(), a.level(), {}};
  for (Index v : a.vertices()) m.assignment.emplace_back(v, v);
  return m;
}

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::parse_error;
}

TEST(VerifyMap, IdentityOnFullTask) {
  const auto c = canonical(K::Connected);
  EXPECT_TRUE(verify_map(identity(c), c, c).ok());
}

TEST(VerifyMap, ParityFoldBreaksCarrier) {
  const auto c = canonical(K::Connected);
  const VertexMap m{1, 1, {{0, 0}, {1, 1}, {2, 0}, {3, 1}}};
  const auto r = verify_map(m, c, c);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violation->kind, ViolationKind::Carrier);
  EXPECT_EQ(r.violation->source, 3u);
  EXPECT_EQ(r.violation->describe(), "carrier: vertex 3 -> 1");
  EXPECT_FALSE(oracle::map_is_valid(as_map(m), c, c));
}

TEST(VerifyMap, NonAdjacentImageIsSimplicialViolation) {
  const auto a = canonical(K::Neither);
  const auto b = full(2);
  const VertexMap m{1, 2, {{1, 1}, {2, 4}}};
  const auto r = verify_map(m, a, b);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violation->kind, ViolationKind::Simplicial);
  EXPECT_EQ(r.violation->describe(), "simplicial: edge (1,2) -> (1,4)");
}

TEST(VerifyMap, ImageMustBeAnEdgeOfTheTarget) {
  const auto a = canonical(K::Neither);
  const VertexMap m{1, 1, {{1, 1}, {2, 2}}};
  EXPECT_TRUE(verify_map(m, a, canonical(K::Connected)).ok());
  EXPECT_EQ(verify_map(m, a, canonical(K::Both)).violation->kind, ViolationKind::Simplicial);
}

TEST(VerifyMap, ColorSwapIsChromaticViolation) {
  const auto a = canonical(K::Neither);
  const VertexMap m{1, 1, {{1, 2}, {2, 1}}};
  EXPECT_EQ(verify_map(m, a, canonical(K::Connected)).violation->kind, ViolationKind::Chromatic);
}

TEST(VerifyMap, Errors) {
  const auto a = canonical(K::Neither);
  const auto b = canonical(K::Connected);
  EXPECT_EQ(code_of([&] { verify_map({1, 1, {{1, 1}}}, a, b); }), Errc::partial_map);
  EXPECT_EQ(code_of([&] { verify_map({2, 1, {{1, 1}, {2, 2}}}, a, b); }), Errc::level_mismatch);
  EXPECT_EQ(code_of([&] { verify_map({1, 1, {{1, 1}, {2, 4}}}, a, b); }), Errc::index_out_of_range);
}

TEST(Solves, Examples) {
  EXPECT_TRUE(solves(canonical(K::Neither), canonical(K::Connected)));
  EXPECT_FALSE(solves(canonical(K::Connected), canonical(K::Neither)));
  EXPECT_FALSE(solves(canonical(K::OnlyV0), canonical(K::OnlyV1)));
}

TEST(Solves, CanonicalTable) {
  // Row solves column.
  const std::map<K, std::vector<K>> solvable = {
      {K::Connected, {K::Connected}},
      {K::Both, {K::Connected, K::Both}},
      {K::OnlyV0, {K::Connected, K::Both, K::OnlyV0}},
      {K::OnlyV1, {K::Connected, K::Both, K::OnlyV1}},
      {K::Neither, {K::Connected, K::Both, K::OnlyV0, K::OnlyV1, K::Neither}},
  };
  for (auto a : kAllKinds) {
    for (auto b : kAllKinds) {
      const auto& row = solvable.at(a);
      const bool expected = std::find(row.begin(), row.end(), b) != row.end();
      EXPECT_EQ(solves(canonical(a), canonical(b)), expected) << kind_name(a) << " vs " << kind_name(b);
    }
  }
}

TEST(Witness, FullToFullIsIdentity) {
  const auto c = canonical(K::Connected);
  const auto w = witness(c, c);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->k, 1u);
  EXPECT_EQ(w->map, identity(c));
}

TEST(Witness, MiddleEdgeIntoFullTask) {
  const auto w = witness(canonical(K::Neither), canonical(K::Connected));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->k, 1u);
  EXPECT_EQ(w->map.image(1), 1u);
  EXPECT_EQ(w->map.image(2), 2u);
}

TEST(Witness, IteratesShortSourceToReachTargetLevel) {
  const auto w = witness(canonical(K::Connected), full(2));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->k, 2u);
  EXPECT_EQ(w->map.source_level, 2u);
  EXPECT_TRUE(verify_map(w->map, iterate(canonical(K::Connected), 2), full(2)).ok());
}

TEST(Witness, FoldsLongPathOntoShortOne) {
  const auto a = full(3);
  const auto b = full(2);
  const auto w = witness(a, b);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->k, 1u);
  ASSERT_EQ(w->map.assignment.size(), 28u);
  EXPECT_EQ(w->map.image(0), 0u);
  EXPECT_EQ(w->map.image(9), 9u);
  EXPECT_EQ(w->map.image(10), 8u);
  EXPECT_EQ(w->map.image(18), 0u);
  EXPECT_EQ(w->map.image(27), 9u);
  EXPECT_TRUE(verify_map(w->map, a, b).ok());
  EXPECT_TRUE(oracle::map_is_valid(as_map(w->map), a, b));
}

TEST(Witness, UnsolvableGivesNothing) {
  EXPECT_FALSE(witness(canonical(K::Connected), canonical(K::Neither)).has_value());
  EXPECT_FALSE(witness(canonical(K::OnlyV1), canonical(K::OnlyV0)).has_value());
}

TEST(Witness, SourceLevelOverflow) {
  EXPECT_EQ(code_of([] { witness(full(5), full(12)); }), Errc::level_overflow);
}

TEST(Witness, SoundOverLevelOneAndTwo) {
  const auto l1 = enumerate_tasks(1);
  const auto l2 = enumerate_tasks(2);
  auto check = [](const AffineTask& a, const AffineTask& b) {
    const auto w = witness(a, b);
    ASSERT_EQ(w.has_value(), solves(a, b));
    if (!w) return;
    const auto source = iterate(a, w->k);
    EXPECT_TRUE(verify_map(w->map, source, b).ok()) << to_task_text(a) << to_task_text(b);
    EXPECT_TRUE(oracle::map_is_valid(as_map(w->map), source, b));
  };
  for (const auto& a : l1) {
    for (const auto& b : l1) check(a, b);
    for (const auto& b : l2) {
      check(a, b);
      check(b, a);
    }
  }
}

TEST(Oracle, Examples) {
  EXPECT_TRUE(oracle_solves(canonical(K::Neither), canonical(K::Connected), 1));
  for (unsigned k = 1; k <= 3; ++k) EXPECT_FALSE(oracle_solves(canonical(K::Connected), canonical(K::Neither), k));
  for (const auto& a : enumerate_tasks(1)) EXPECT_TRUE(oracle_solves(a, a, 1));
}

TEST(Oracle, AgreesWithEnumerationAtOneIteration) {
  for (const auto& a : enumerate_tasks(1)) {
    for (const auto& b : enumerate_tasks(1)) {
      EXPECT_EQ(oracle_solves(a, b, 1), oracle::exists_map_by_enumeration(a, b))
          << to_task_text(a) << to_task_text(b);
    }
  }
}

TEST(Oracle, FoundMapsAreValid) {
  for (const auto& a : enumerate_tasks(1)) {
    for (const auto& b : enumerate_tasks(2)) {
      const auto m = oracle_find_map(a, b);
      if (m) EXPECT_TRUE(oracle::map_is_valid(as_map(*m), a, b));
    }
  }
}

TEST(Oracle, BudgetExceeded) {
  Limits tiny;
  tiny.max_search_nodes = 3;
  EXPECT_EQ(code_of([&] { oracle_solves(canonical(K::Connected), canonical(K::Neither), 3, tiny); }),
            Errc::search_budget_exceeded);
}

TEST(Oracle, AgreesWithDecision) {
  for (const auto& a : enumerate_tasks(1)) {
    for (const auto& b : enumerate_tasks(1)) {
      if (solves(a, b)) {
        EXPECT_TRUE(oracle_solves(a, b, witness(a, b)->k));
      } else {
        for (unsigned k = 1; k <= 3; ++k) EXPECT_FALSE(oracle_solves(a, b, k));
      }
    }
  }
}

TEST(Oracle, EnumerateCountsIdentity) {
  const auto c = canonical(K::Connected);
  std::vector<VertexMap> seen;
  const auto n = oracle_enumerate_maps(c, c, [&](const VertexMap& m) {
    seen.push_back(m);
    return true;
  });
  // Endpoints are pinned by carriers, so the identity is the only map.
  EXPECT_EQ(n, 1u);
  ASSERT_EQ(seen.size(), 1u);
  EXPECT_EQ(seen[0], identity(c));
}

TEST(Monotonicity, ImagesNeverRiseInClass) {
  auto leq = [](K x, K y) {
    const Order o = class_leq(x, y);
    return o == Order::LessOrEqual || o == Order::Equal;
  };
  for (unsigned l = 1; l <= 2; ++l) {
    const auto target = full(l);
    for (const auto& a : enumerate_tasks(l)) {
      const K source_kind = classify(a).kind;
      std::uint64_t maps = oracle_enumerate_maps(a, target, [&](const VertexMap& m) {
        const K image_kind = classify(image_task(m, a)).kind;
        EXPECT_TRUE(leq(image_kind, source_kind)) << to_task_text(a);
        return true;
      });
      EXPECT_GE(maps, 1u);
    }
  }
}

TEST(ImageTask, HitEdges) {
  const auto a = full(3);
  const auto w = witness(a, full(2));
  EXPECT_EQ(image_task(w->map, a), full(2));
  const VertexMap m{1, 1, {{1, 1}, {2, 2}}};
  EXPECT_EQ(image_task(m, canonical(K::Neither)), canonical(K::Neither));
}

TEST(WitnessText, Format) {
  const Witness w{2, {2, 1, {{0, 0}, {1, 1}}}};
  EXPECT_EQ(to_witness_text(w), "{\"k\": 2, \"from_level\": 2, \"to_level\": 1, \"assignment\": [[0,0],[1,1]]}\n");
}

TEST(WitnessText, RoundTrip) {
  for (const auto& a : enumerate_tasks(1)) {
    for (const auto& b : enumerate_tasks(2)) {
      const auto w = witness(a, b);
      if (w) EXPECT_EQ(parse_witness_text(to_witness_text(*w)), *w);
    }
  }
  const auto unsorted = parse_witness_text(R"({"k":1,"from_level":1,"to_level":1,"assignment":[[2,2],[1,1]]})");
  EXPECT_EQ(unsorted.map.assignment.front().first, 1u);
}

TEST(WitnessText, ParseErrors) {
  EXPECT_EQ(code_of([] { parse_witness_text("{"); }), Errc::parse_error);
  EXPECT_EQ(code_of([] { parse_witness_text(R"({"k":1,"from_level":1,"to_level":1})"); }), Errc::parse_error);
  EXPECT_EQ(code_of([] {
              parse_witness_text(R"({"k":1,"from_level":1,"to_level":1,"assignment":[[1,1],[1,2]]})");
            }),
            Errc::parse_error);
  EXPECT_EQ(code_of([] { parse_witness_text(R"({"k":0,"from_level":1,"to_level":1,"assignment":[]})"); }),
            Errc::invalid_count);
}

}  // namespace
}  // namespace affine2
