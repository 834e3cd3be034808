#include "doctest.h"

#include "agree/combinatorics.hpp"
#include "agree/constructions.hpp"
#include "agree/error.hpp"
#include "agree/incidence.hpp"
#include "agree/io.hpp"
#include "agree/oracle.hpp"
#include "agree/solvers.hpp"
#include "support.hpp"

using namespace agree;
using namespace agree::constructions;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::ParseError;
}

const MarkedEdge& find_edge(const MarkedHypergraph& h, std::vector<Vertex> verts) {
  for (const auto& e : h.edges())
    if (e.verts == verts) return e;
  FAIL("edge not found");
  return h.edge(0);
}

bool all_subsets_pass(const MarkedHypergraph& h, int k) {
  for (const auto& u : all_subsets(h.n(), k))
    if (!oracle::decide(h, u).exists) return false;
  return true;
}

}  // namespace

TEST_CASE("family tokens round trip") {
  for (auto f : {Family::TwoExtremeTight, Family::MinMaxTight, Family::OneExtremeCycle,
                 Family::SparseMinMarkedCycle, Family::NaturalMarking})
    CHECK(family_from_token(to_token(f)) == f);
  CHECK_FALSE(family_from_token("tight").has_value());
}

TEST_CASE("two-extreme tight family") {
  const auto h = gen_two_extreme_tight(4);
  CHECK(h.n() == 6);
  CHECK(h.edge_count() == 15);
  CHECK(h.is_clique());
  CHECK(find_edge(h, {1, 2, 3, 4}).mark == Mark{1, 3});
  CHECK(find_edge(h, {2, 3, 5, 6}).mark == Mark{2, 6});
  CHECK_FALSE(oracle::decide(h).exists);
  CHECK(all_subsets_pass(h, 5));
  for (int r = 3; r <= 5; ++r) {
    const auto t = gen_two_extreme_tight(r);
    CHECK(t.n() == 2 * r - 2);
    CHECK_FALSE(oracle::decide(t).exists);
    CHECK(all_subsets_pass(t, 2 * r - 3));
  }
  CHECK(kind_of([] { gen_two_extreme_tight(2); }) == ErrorKind::BadArity);
}

TEST_CASE("min-max tight family") {
  const auto h = gen_min_max_tight(3);
  CHECK(h.n() == 4);
  CHECK(find_edge(h, {1, 2, 3}).mark == Mark{1, 2});
  CHECK(find_edge(h, {1, 2, 4}).mark == Mark{1, 4});
  CHECK_FALSE(solvers::solve_min_max(h).exists);
  CHECK(all_subsets_pass(h, 3));
  for (int r = 4; r <= 5; ++r) {
    const auto t = gen_min_max_tight(r);
    CHECK_FALSE(oracle::decide(t).exists);
    CHECK(all_subsets_pass(t, 2 * r - 3));
  }
  CHECK(kind_of([] { gen_min_max_tight(1); }) == ErrorKind::BadArity);
}

TEST_CASE("one-extreme cycle on five vertices") {
  const auto h = gen_one_extreme_cycle(3, 5);
  CHECK(h.edge_count() == 10);
  CHECK(find_edge(h, {1, 2, 3}).mark.first == 2);
  CHECK(find_edge(h, {2, 3, 4}).mark.first == 3);
  CHECK(find_edge(h, {3, 4, 5}).mark.first == 4);
  CHECK(find_edge(h, {1, 4, 5}).mark.first == 5);
  CHECK(find_edge(h, {1, 2, 5}).mark.first == 1);
  CHECK(find_edge(h, {1, 3, 5}).mark.first == 1);
  CHECK(find_edge(h, {2, 4, 5}).mark.first == 2);
  CHECK_FALSE(oracle::decide(h).exists);
  CHECK(all_subsets_pass(h, 4));
}

TEST_CASE("one-extreme cycle with padding vertices") {
  const auto h = gen_one_extreme_cycle(4, 6);
  // V0 = {1..5}, W = {6}.
  CHECK(find_edge(h, {1, 2, 3, 6}).mark.first == 2);
  CHECK(find_edge(h, {1, 4, 5, 6}).mark.first == 5);
  CHECK(find_edge(h, {1, 2, 4, 5}).mark.first == 1);
  CHECK(find_edge(h, {2, 3, 4, 5}).mark.first == 2);
  CHECK_FALSE(oracle::decide(h).exists);
  CHECK(all_subsets_pass(h, 5));
  CHECK(kind_of([] { gen_one_extreme_cycle(3, 6); }) == ErrorKind::BadParity);
  CHECK(kind_of([] { gen_one_extreme_cycle(3, 3); }) == ErrorKind::BadArity);
  CHECK(kind_of([] { gen_one_extreme_cycle(2, 4); }) == ErrorKind::BadArity);
}

TEST_CASE("sparse min-marked cycle") {
  const auto h = gen_sparse_min_marked_cycle(3, 3);
  CHECK(h.n() == 6);
  CHECK(h.edge_count() == 3);
  CHECK_FALSE(h.is_clique());
  CHECK(find_edge(h, {1, 2, 4}).mark.first == 1);
  CHECK(find_edge(h, {2, 3, 5}).mark.first == 2);
  CHECK(find_edge(h, {1, 3, 6}).mark.first == 3);
  CHECK(solvers::solve_min_marked(remove_vertex(h, 1).graph).exists);

  const auto big = gen_sparse_min_marked_cycle(4, 4);
  CHECK(big.n() == 12);
  CHECK(big.edge_count() == 4);
  CHECK_FALSE(oracle::decide(big).exists);
  CHECK(kind_of([] { gen_sparse_min_marked_cycle(3, 2); }) == ErrorKind::BadArity);
}

TEST_CASE("natural markings agree with the identity") {
  for (auto v : testing::kAllVariants) {
    for (int r = 3; r <= 5; ++r) {
      const auto h = gen_natural(r, r + 3, v);
      CHECK(h.edge_count() == binomial(r + 3, r));
      CHECK(check_order(h, LinearOrder(testing::iota_vertices(r + 3))).agrees);
    }
  }
  CHECK(oracle::count(gen_natural(4, 7, MarkVariant::TwoExtreme)).count == 2u);
  CHECK(incidence::find_forbidden(incidence::build_matrix(gen_natural(3, 6, MarkVariant::MinMarked)))
            .empty());
}

TEST_CASE("generate dispatches and is deterministic") {
  const FamilyParams params{.family = Family::OneExtremeCycle, .r = 3, .n = 7};
  CHECK(generate(params) == gen_one_extreme_cycle(3, 7));
  CHECK(io::serialize_instance(generate(params)) == io::serialize_instance(generate(params)));
  CHECK(generate({.family = Family::SparseMinMarkedCycle, .r = 4, .m = 5}) ==
        gen_sparse_min_marked_cycle(4, 5));
  CHECK(generate({.family = Family::NaturalMarking, .r = 3, .n = 5, .variant = MarkVariant::MinMax}) ==
        gen_natural(3, 5, MarkVariant::MinMax));
}
