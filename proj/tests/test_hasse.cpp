#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "mcx/families.hpp"
#include "mcx/hasse.hpp"

using namespace mcx;

namespace {

SimplicialComplex cycle3() {
    return SimplicialComplex::from_facets({{"a", "b"}, {"b", "c"}, {"a", "c"}}, {"a", "b", "c"});
}

} // namespace

TEST_CASE("poset of a single edge") {
    auto H = hasse(path(1));
    CHECK(H.node_count() == 3);
    CHECK(H.edge_count() == 2);
    CHECK(H.edge_names == std::vector<std::string>{"(v0)v1", "(v1)v0"});
    CHECK(H.node_names[2] == "v0 v1");
    CHECK(H.node_id("v0") == 0);
    CHECK(H.edge_id("(v1)v0") == 1);
    CHECK_THROWS_AS(H.node_id("zzz"), precondition_error);
    CHECK_THROWS_AS(H.edge_id("(v9)v0"), precondition_error);
    auto e = H.find_edge(H.node_id("v0"), H.node_id("v0 v1"));
    REQUIRE(e.has_value());
    CHECK(H.edge_names[static_cast<std::size_t>(*e)] == "(v0)v1");
    CHECK_FALSE(H.find_edge(H.node_id("v0"), H.node_id("v1")).has_value());
}

TEST_CASE("poset of a solid triangle names higher covers with a bar") {
    auto K = SimplicialComplex::from_facets({{"a", "b", "c"}}, {"a", "b", "c"});
    auto H = hasse(K);
    CHECK(H.node_count() == 7);
    CHECK(H.edge_count() == 9);
    CHECK(H.edge_by_name.count("(a b|a b c)") == 1);
    CHECK(H.edge_by_name.count("(a)b") == 1);
}

TEST_CASE("edge surgery keeps nodes and splits components") {
    auto H = hasse(path(1));
    auto H2 = remove_edges(H, {"(v0)v1"});
    CHECK(H2.node_count() == 3);
    CHECK(H2.edge_count() == 1);
    auto comps = components(H2);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].node_count() == 1);  // isolated v0 comes first
    CHECK(comps[0].node_names[0] == "v0");
    CHECK(comps[1].node_count() == 2);
    CHECK(comps[1].edge_count() == 1);
}

TEST_CASE("node surgery drops incident edges") {
    auto H = hasse(path(1));
    auto H2 = remove_nodes(H, {"v0 v1"});
    CHECK(H2.node_count() == 2);
    CHECK(H2.edge_count() == 0);
}

TEST_CASE("a doubly used node is rejected with a witness") {
    auto H = hasse(path(2));
    auto chk = is_acyclic_matching(H, std::vector<std::string>{"(v1)v0", "(v1)v2"});
    CHECK_FALSE(chk.is_matching);
    REQUIRE(chk.doubly_matched.has_value());
    CHECK(*chk.doubly_matched == "v1");
    CHECK_FALSE(chk.ok());
}

TEST_CASE("matching ids must belong to the diagram") {
    auto H = hasse(path(1));
    CHECK_THROWS_AS(is_acyclic_matching(H, std::vector<int>{99}), precondition_error);
}

TEST_CASE("the rotating matching on a 3-cycle closes a directed loop") {
    auto H = hasse(cycle3());
    std::vector<std::string> rot{"(a)b", "(b)c", "(c)a"};
    auto chk = is_acyclic_matching(H, rot);
    CHECK(chk.is_matching);
    CHECK_FALSE(chk.is_acyclic);
    CHECK(chk.cycle.size() >= 2);
    // every 2-element subset is fine
    for (std::size_t i = 0; i < rot.size(); ++i) {
        std::vector<std::string> sub;
        for (std::size_t j = 0; j < rot.size(); ++j)
            if (j != i) sub.push_back(rot[j]);
        CHECK(is_acyclic_matching(H, sub).ok());
    }
}

TEST_CASE("matching census on the 3-cycle") {
    auto H = hasse(cycle3());
    CHECK(H.edge_count() == 6);
    auto all = enumerate_acyclic_matchings(H);
    // 17 nonempty matchings exist; the two rotating triples are cyclic.
    CHECK(all.size() == 15);
    std::size_t singles = 0, pairs = 0, triples = 0;
    for (const auto& m : all) {
        if (m.size() == 1) ++singles;
        if (m.size() == 2) ++pairs;
        if (m.size() == 3) ++triples;
    }
    CHECK(singles == 6);
    CHECK(pairs == 9);
    CHECK(triples == 0);

    // incremental admittance agrees with the rescanning default
    EnumerateOptions inc;
    inc.incremental = true;
    auto all2 = enumerate_acyclic_matchings(H, inc);
    std::sort(all.begin(), all.end());
    std::sort(all2.begin(), all2.end());
    CHECK(all == all2);
}

TEST_CASE("matching complex of a 2-path") {
    auto M = f_of_poset(hasse(path(2)));
    CHECK(M.vertex_count() == 4);
    CHECK(M.count(1) == 3);
    CHECK(M.dim() == 1);
    CHECK(M.contains(M.simplex_of({"(v0)v1", "(v1)v2"})));
    CHECK(M.contains(M.simplex_of({"(v0)v1", "(v2)v1"})));
    CHECK(M.contains(M.simplex_of({"(v1)v0", "(v2)v1"})));
}

TEST_CASE("enumeration budget and size cap") {
    EnumerateOptions tiny;
    tiny.simplex_budget = 2;
    CHECK_THROWS_AS(enumerate_acyclic_matchings(hasse(path(3)), tiny), resource_error);
    CHECK_THROWS_AS(enumerate_acyclic_matchings(hasse(path(33))), resource_error);
}
