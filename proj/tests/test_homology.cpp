#include <catch2/catch_amalgamated.hpp>

#include "mcx/families.hpp"
#include "mcx/homology.hpp"

using namespace mcx;

namespace {

// Minimal 6-vertex triangulation of the real projective plane.
SimplicialComplex projective_plane() {
    return SimplicialComplex::from_facets({{"1", "2", "3"},
                                           {"1", "2", "4"},
                                           {"1", "3", "5"},
                                           {"1", "4", "6"},
                                           {"1", "5", "6"},
                                           {"2", "3", "6"},
                                           {"2", "4", "5"},
                                           {"2", "5", "6"},
                                           {"3", "4", "5"},
                                           {"3", "4", "6"}});
}

SimplicialComplex sphere2() {
    // boundary of the 3-simplex
    return SimplicialComplex::from_facets(
        {{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}});
}

} // namespace

TEST_CASE("degree-zero boundary is the augmentation row") {
    auto P = path(1);
    auto A = boundary_matrix(P, 0);
    CHECK(A.rows == 1);
    CHECK(A.cols == 2);
    CHECK(A.to_dense() == std::vector<std::vector<Int>>{{1, 1}});
}

TEST_CASE("edge boundary has alternating signs") {
    auto P = path(1);
    auto A = boundary_matrix(P, 1);
    // d{v0,v1} = {v1} - {v0}: dropping the k-th vertex carries sign (-1)^k
    auto d = A.to_dense();
    REQUIRE(A.rows == 2);
    REQUIRE(A.cols == 1);
    CHECK(d[0][0] == -1);
    CHECK(d[1][0] == 1);
    CHECK_THROWS_AS(boundary_matrix(P, 2), precondition_error);
}

TEST_CASE("a point has trivial reduced homology") {
    auto H = reduced_homology(path(0));
    CHECK(H.is_point());
    CHECK(H.euler == 1);
    CHECK(H.betti == std::vector<long long>{0});
}

TEST_CASE("the empty complex is flagged, never a point") {
    auto H = reduced_homology(SimplicialComplex{});
    CHECK(H.empty_complex);
    CHECK_FALSE(H.is_point());
    CHECK(H.euler == 0);
}

TEST_CASE("two points form a 0-sphere") {
    auto S0 = SimplicialComplex::from_facets({{"p"}, {"q"}});
    auto H = reduced_homology(S0);
    CHECK(H.betti == std::vector<long long>{1});
    CHECK(H.torsion_free());
    CHECK(H.euler == 2);
}

TEST_CASE("circle") {
    auto C3 = SimplicialComplex::from_facets({{"a", "b"}, {"b", "c"}, {"a", "c"}});
    auto H = reduced_homology(C3);
    CHECK(H.betti == std::vector<long long>{0, 1});
    CHECK(H.euler == 0);
    CHECK(matches_signature(H, SphereWedgeSignature::wedge(1, 1)));
}

TEST_CASE("2-sphere") {
    auto H = reduced_homology(sphere2());
    CHECK(H.betti == std::vector<long long>{0, 0, 1});
    CHECK(H.euler == 2);
    CHECK(matches_signature(H, SphereWedgeSignature::wedge(2, 1)));
    CHECK(betti_via_rational_rank(sphere2()) == H.betti);
}

TEST_CASE("projective plane carries 2-torsion") {
    auto K = projective_plane();
    CHECK(K.count(0) == 6);
    CHECK(K.count(1) == 15);
    CHECK(K.count(2) == 10);
    auto H = reduced_homology(K);
    CHECK(H.betti == std::vector<long long>{0, 0, 0});
    REQUIRE(H.torsion.size() == 3);
    CHECK(H.torsion[0].empty());
    CHECK(H.torsion[1] == std::vector<Int>{2});
    CHECK(H.torsion[2].empty());
    CHECK(H.euler == 1);
    CHECK_FALSE(H.is_point());  // torsion blocks it
    CHECK_FALSE(matches_signature(H, SphereWedgeSignature::Point()));
    CHECK(betti_via_rational_rank(K) == H.betti);
}

TEST_CASE("signature matching edge cases") {
    auto S0 = reduced_homology(SimplicialComplex::from_facets({{"p"}, {"q"}}));
    CHECK(matches_signature(S0, SphereWedgeSignature::wedge(0, 1)));
    CHECK_FALSE(matches_signature(S0, SphereWedgeSignature::wedge(0, 2)));
    CHECK_FALSE(matches_signature(S0, SphereWedgeSignature::wedge(1, 1)));
    CHECK_FALSE(matches_signature(S0, SphereWedgeSignature::Point()));

    auto pt = reduced_homology(path(0));
    CHECK(matches_signature(pt, SphereWedgeSignature::Point()));
    CHECK(matches_signature(pt, SphereWedgeSignature::wedge(3, 0)));  // count 0 is a point

    HomologyProfile empty;
    empty.empty_complex = true;
    CHECK_FALSE(matches_signature(empty, SphereWedgeSignature::Point()));
}

TEST_CASE("signature rendering") {
    CHECK(SphereWedgeSignature::Point().to_string() == "point");
    CHECK(SphereWedgeSignature::wedge(3, 1).to_string() == "S^3");
    CHECK(SphereWedgeSignature::wedge(2, 4).to_string() == "(S^2)^4");
    CHECK(SphereWedgeSignature::wedge(2, 0).to_string() == "point");
}

TEST_CASE("euler characteristic is the alternating face count") {
    CHECK(euler_characteristic(sphere2()) == 4 - 6 + 4);
    CHECK(euler_characteristic(path(5)) == 1);
    CHECK(euler_characteristic(SimplicialComplex{}) == 0);
}
