#include <catch2/catch_amalgamated.hpp>

#include "mcx/surgery.hpp"

using namespace mcx;

TEST_CASE("leaf-anchored surgery on one-leaf stars") {
    auto r1 = hasse_surgery_s1n(1);
    INFO(r1.failure);
    REQUIRE(r1.ok);
    REQUIRE(r1.steps.size() == 1);
    CHECK(r1.steps[0].removed == "(c)a1");
    CHECK(r1.steps[0].witness.dominator == "(d1)c");
    CHECK(r1.poset_route_equal);
    CHECK(r1.pieces == std::vector<std::pair<std::size_t, std::size_t>>{{3, 2}, {4, 3}});
    CHECK(r1.join_ok);
    CHECK(r1.direct_ok);
    CHECK(r1.predicted.n == 1);

    auto r2 = hasse_surgery_s1n(2);
    INFO(r2.failure);
    REQUIRE(r2.ok);
    CHECK(r2.pieces ==
          std::vector<std::pair<std::size_t, std::size_t>>{{3, 2}, {4, 3}, {4, 3}});
    CHECK(r2.predicted.n == 2);
    CHECK(r2.predicted.count == 1);

    CHECK_THROWS_AS(hasse_surgery_s1n(0), precondition_error);
}

TEST_CASE("two-leaf wedge surgery across a short path") {
    auto rep = hasse_surgery_mixed(1, 1, 1, 1, 1);
    INFO(rep.failure);
    REQUIRE(rep.ok);
    CHECK(rep.predicted.n == 3);
    CHECK(rep.predicted.count == 1);
    CHECK(rep.poset_route_equal);
    // left star, right star, two arm pieces, and the isolated interior node
    CHECK(rep.pieces == std::vector<std::pair<std::size_t, std::size_t>>{
                            {1, 0}, {3, 2}, {3, 2}, {4, 3}, {4, 3}});
    CHECK(rep.join_ok);
    CHECK(rep.direct_ok);

    auto longer = hasse_surgery_mixed(2, 1, 1, 1, 1);
    INFO(longer.failure);
    REQUIRE(longer.ok);
    CHECK(longer.predicted.n == 4);
    CHECK(longer.pieces == std::vector<std::pair<std::size_t, std::size_t>>{
                               {3, 2}, {3, 2}, {3, 2}, {4, 3}, {4, 3}});
}

TEST_CASE("mixed surgery parameter gates") {
    CHECK_THROWS_AS(hasse_surgery_mixed(0, 1, 1, 1, 1), precondition_error);
    CHECK_THROWS_AS(hasse_surgery_mixed(2, 1, 1, 0, 0), precondition_error);
    CHECK_THROWS_AS(hasse_surgery_mixed(2, 1, 1, 2, 0), precondition_error);
    CHECK_THROWS_AS(hasse_surgery_mixed(-1, 1, 1, 1, 1), precondition_error);
}

TEST_CASE("a right-side leaf is normalized by swapping") {
    auto rep = hasse_surgery_mixed(1, 1, 1, 0, 1);
    INFO(rep.failure);
    REQUIRE(rep.ok);
    CHECK(rep.predicted.n == 3);
    CHECK(rep.predicted.count == 1);
}

TEST_CASE("single-leaf cascade across each residue") {
    auto r1 = hasse_surgery_mixed(1, 1, 1, 1, 0);
    INFO(r1.failure);
    REQUIRE(r1.ok);
    CHECK(r1.predicted.n == 3);
    CHECK(r1.predicted.count == 1);
    // the armless right piece keeps its arms attached: 4l+2 nodes, 4l+1 edges
    CHECK(r1.pieces ==
          std::vector<std::pair<std::size_t, std::size_t>>{{3, 2}, {4, 3}, {6, 5}});

    auto r0 = hasse_surgery_mixed(3, 1, 1, 1, 0);
    INFO(r0.failure);
    REQUIRE(r0.ok);
    CHECK(r0.predicted.n == 4);
    CHECK(r0.predicted.count == 1);

    auto r2 = hasse_surgery_mixed(2, 1, 2, 1, 0);
    INFO(r2.failure);
    REQUIRE(r2.ok);
    CHECK(r2.predicted.n == 5);
    CHECK(r2.predicted.count == 1);
}

TEST_CASE("coincident centers collapse like a single star") {
    auto rep = hasse_surgery_mixed(0, 1, 1, 1, 0);
    INFO(rep.failure);
    REQUIRE(rep.ok);
    CHECK(rep.predicted.n == 2);
    CHECK(rep.predicted.count == 1);
    CHECK(rep.pieces ==
          std::vector<std::pair<std::size_t, std::size_t>>{{3, 2}, {4, 3}, {4, 3}});
}

TEST_CASE("attaching a 3t-path suspends the Morse complex") {
    auto rep = check_suspension(path(1), "v0", 1);
    INFO(rep.failure);
    CHECK(rep.ok);
    CHECK(rep.shift == 2);
    CHECK(rep.base_profile.betti_at(0) == 1);
    CHECK(rep.suspended_profile.betti_at(2) == 1);

    // empty base: the single (-1)-degree class lands in degree shift-1
    auto from_point = check_suspension(path(0), "v0", 1);
    INFO(from_point.failure);
    CHECK(from_point.ok);
    CHECK(from_point.base_profile.empty_complex);
    CHECK(from_point.suspended_profile.betti_at(1) == 1);

    CHECK_THROWS_AS(check_suspension(path(1), "v0", 0), precondition_error);
}

TEST_CASE("a leaf pair dominates the pairs out of its anchor") {
    CHECK(check_domination_lemma(path(2), "v0", "v1", "v2"));
    CHECK(check_domination_lemma(extended_star(1, 2), "d1", "c", "a1"));
    CHECK(check_domination_lemma(extended_star(1, 2), "d1", "c", "a2"));

    // v1 is not a leaf
    CHECK_THROWS_AS(check_domination_lemma(path(2), "v1", "v0", "v2"), precondition_error);
    // third vertex must differ from the leaf
    CHECK_THROWS_AS(check_domination_lemma(path(2), "v0", "v1", "v0"), precondition_error);
    // third vertex must neighbor the anchor
    CHECK_THROWS_AS(check_domination_lemma(path(3), "v0", "v1", "v3"), precondition_error);
    auto solid = SimplicialComplex::from_facets({{"a", "b", "c"}});
    CHECK_THROWS_AS(check_domination_lemma(solid, "a", "b", "c"), precondition_error);
}
