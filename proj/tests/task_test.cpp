#include <gtest/gtest.h>

#include <algorithm>

#include "affine2/interval.hpp"
#include "affine2/kernel.hpp"
#include "affine2/task.hpp"
#include "oracle/brute_force.hpp"

namespace affine2 {
namespace {

std::vector<Index> all_edges(unsigned level) {
  std::vector<Index> out(edge_count(level));
  for (Index i = 0; i < out.size(); ++i) out[i] = i;
  return out;
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

TEST(Validate, Examples) {
  const auto full = AffineTask::validate(1, {0, 1, 2});
  EXPECT_EQ(full.level(), 1u);
  EXPECT_EQ(full.path_edges(), 3u);
  EXPECT_EQ(full, canonical(CanonicalKind::Connected));
  EXPECT_EQ(code_of([] { AffineTask::validate(1, {}); }), Errc::empty_task);
  EXPECT_EQ(code_of([] { AffineTask::validate(2, {9}); }), Errc::index_out_of_range);
}

TEST(Validate, OtherErrors) {
  EXPECT_EQ(code_of([] { AffineTask::validate(0, {0}); }), Errc::invalid_level);
  EXPECT_EQ(code_of([] { AffineTask::validate(1, {1, 1}); }), Errc::duplicate_edge);
  Limits small;
  small.max_level = 2;
  EXPECT_EQ(code_of([&] { AffineTask::validate(3, {0}, small); }), Errc::level_overflow);
}

TEST(Validate, SortsEdgesAndListsVertices) {
  const auto a = AffineTask::validate(2, {7, 0, 3});
  EXPECT_EQ(a.edges(), (std::vector<Index>{0, 3, 7}));
  EXPECT_EQ(a.vertices(), (std::vector<Index>{0, 1, 3, 4, 7, 8}));
  EXPECT_TRUE(a.has_vertex(8));
  EXPECT_FALSE(a.has_vertex(9));
  EXPECT_TRUE(a.has_edge(3));
  EXPECT_FALSE(a.has_edge(4));
}

TEST(Canonical, Catalog) {
  EXPECT_EQ(canonical(CanonicalKind::Neither).edges(), (std::vector<Index>{1}));
  EXPECT_EQ(canonical(CanonicalKind::OnlyV0).edges(), (std::vector<Index>{0}));
  EXPECT_EQ(canonical(CanonicalKind::OnlyV1).edges(), (std::vector<Index>{2}));
  EXPECT_EQ(canonical(CanonicalKind::Both).edges(), (std::vector<Index>{0, 2}));
  EXPECT_EQ(canonical(CanonicalKind::Connected).edges(), (std::vector<Index>{0, 1, 2}));
  for (auto k : kAllKinds) EXPECT_EQ(canonical(k).level(), 1u);
}

TEST(ReplaceFacets, Examples) {
  const auto full = canonical(CanonicalKind::Connected);
  EXPECT_EQ(replace_facets(full, full).edges(), all_edges(2));

  const auto neither = canonical(CanonicalKind::Neither);
  const auto nn = replace_facets(neither, neither);
  EXPECT_EQ(nn.level(), 2u);
  EXPECT_EQ(nn.edges(), (std::vector<Index>{4}));
  // Both endpoints of edge 4 are interior vertices of the kernel path.
  const auto k2 = chr_iterate_dim1(2);
  const auto path = kernel_path(k2);
  ASSERT_TRUE(path.has_value());
  EXPECT_EQ((*path)[4].carrier, ProcessSet::of({0, 1}));
  EXPECT_EQ((*path)[5].carrier, ProcessSet::of({0, 1}));

  const auto v0 = canonical(CanonicalKind::OnlyV0);
  const auto vv = replace_facets(v0, v0);
  EXPECT_EQ(vv.edges(), (std::vector<Index>{0}));
  EXPECT_TRUE(vv.has_vertex(0));
  EXPECT_FALSE(vv.has_vertex(9));
}

TEST(ReplaceFacets, AgreesWithColorSearchOracle) {
  std::vector<AffineTask> level2;
  for (unsigned mask = 1; mask < 512; mask += 37) {
    std::vector<Index> e;
    for (Index i = 0; i < 9; ++i) {
      if ((mask >> i) & 1u) e.push_back(i);
    }
    level2.push_back(AffineTask::validate(2, e));
  }
  auto check = [](const AffineTask& host, const AffineTask& insert) {
    const auto expected = oracle::replace_by_color(host, insert);
    ASSERT_TRUE(expected.has_value());
    EXPECT_EQ(replace_facets(host, insert).edges(), *expected);
  };
  for (const auto& h : oracle::level1_tasks()) {
    for (const auto& i : oracle::level1_tasks()) check(h, i);
    for (const auto& i : level2) {
      check(h, i);
      check(i, h);
    }
  }
}

TEST(ReplaceFacets, EdgeCountMultiplies) {
  for (const auto& h : oracle::level1_tasks()) {
    for (const auto& i : enumerate_tasks(2)) {
      const auto r = replace_facets(h, i);
      EXPECT_EQ(r.level(), 3u);
      EXPECT_EQ(r.edges().size(), h.edges().size() * i.edges().size());
    }
  }
}

TEST(Iterate, Examples) {
  EXPECT_EQ(iterate(canonical(CanonicalKind::Connected), 2).edges(), all_edges(2));
  const auto n3 = iterate(canonical(CanonicalKind::Neither), 3);
  EXPECT_EQ(n3.level(), 3u);
  EXPECT_EQ(n3.edges(), (std::vector<Index>{13}));
  for (const auto& a : oracle::level1_tasks()) EXPECT_EQ(iterate(a, 1), a);
}

TEST(Iterate, Errors) {
  const auto a = canonical(CanonicalKind::Both);
  EXPECT_EQ(code_of([&] { iterate(a, 0); }), Errc::invalid_count);
  EXPECT_EQ(code_of([&] { iterate(a, 13); }), Errc::level_overflow);
  EXPECT_NO_THROW(iterate(a, 12));
}

TEST(Iterate, Associative) {
  for (const auto& a : oracle::level1_tasks()) {
    for (unsigned k1 = 1; k1 <= 3; ++k1) {
      for (unsigned k2 = 1; k1 + k2 <= 4; ++k2) {
        EXPECT_EQ(iterate(a, k1 + k2), replace_facets(iterate(a, k1), iterate(a, k2)));
      }
    }
  }
}

TEST(Iterate, EdgesAreColorConsistentWithKernel) {
  for (unsigned k = 1; k <= 3; ++k) {
    const auto kc = chr_iterate_dim1(k);
    const auto path = kernel_path(kc);
    ASSERT_TRUE(path.has_value());
    for (const auto& a : oracle::level1_tasks()) {
      const auto it = iterate(a, k);
      for (Index e : it.edges()) {
        EXPECT_EQ((*path)[e].color, static_cast<Color>(e % 2));
        EXPECT_EQ((*path)[e + 1].color, static_cast<Color>((e + 1) % 2));
      }
    }
  }
}

TEST(Iterate, FullTaskCoversEveryKernelFacet) {
  for (unsigned k = 1; k <= 4; ++k) {
    EXPECT_EQ(iterate(canonical(CanonicalKind::Connected), k).edges().size(), chr_iterate_dim1(k).facets.size());
    EXPECT_TRUE(interval_matches_kernel(k));
  }
}

TEST(Mirror, Examples) {
  EXPECT_EQ(mirror(canonical(CanonicalKind::OnlyV0)), canonical(CanonicalKind::OnlyV1));
  EXPECT_EQ(mirror(canonical(CanonicalKind::Neither)), canonical(CanonicalKind::Neither));
  for (const auto& a : oracle::level1_tasks()) EXPECT_EQ(mirror(mirror(a)), a);
  for (const auto& a : enumerate_tasks(2)) EXPECT_EQ(mirror(mirror(a)), a);
}

TEST(TaskText, CanonicalForm) {
  EXPECT_EQ(to_task_text(canonical(CanonicalKind::Both)), "{\"level\": 1, \"edges\": [0, 2]}\n");
  EXPECT_EQ(parse_task_text(R"({"edges": [2, 0], "level": 1})"), canonical(CanonicalKind::Both));
}

TEST(TaskText, ParseErrors) {
  EXPECT_EQ(code_of([] { parse_task_text("not json"); }), Errc::parse_error);
  EXPECT_EQ(code_of([] { parse_task_text(R"({"level": 1})"); }), Errc::parse_error);
  EXPECT_EQ(code_of([] { parse_task_text(R"({"level": 1, "edges": [-1]})"); }), Errc::parse_error);
  EXPECT_EQ(code_of([] { parse_task_text(R"({"level": 1, "edges": []})"); }), Errc::empty_task);
  EXPECT_EQ(code_of([] { parse_task_text(R"({"level": 1, "edges": [3]})"); }), Errc::index_out_of_range);
}

TEST(TaskText, RoundTrip) {
  for (const auto& a : enumerate_tasks(2)) EXPECT_EQ(parse_task_text(to_task_text(a)), a);
}

TEST(EnumerateTasks, Counts) {
  EXPECT_EQ(enumerate_tasks(1).size(), 7u);
  EXPECT_EQ(enumerate_tasks(2).size(), 511u);
}

TEST(ParseKind, NamesAndModels) {
  EXPECT_EQ(parse_kind("connected"), CanonicalKind::Connected);
  EXPECT_EQ(parse_kind("OnlyV1"), CanonicalKind::OnlyV1);
  EXPECT_EQ(parse_kind("1-resilient"), CanonicalKind::Neither);
  EXPECT_EQ(parse_kind("wait-free"), CanonicalKind::Connected);
  EXPECT_FALSE(parse_kind("sometimes").has_value());
  for (auto k : kAllKinds) {
    EXPECT_EQ(parse_kind(kind_name(k)), k);
    EXPECT_EQ(parse_kind(model_name(k)), k);
  }
}

}  // namespace
}  // namespace affine2
