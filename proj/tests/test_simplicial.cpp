#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "syz/simplicial.hpp"

#include <set>

using namespace syz;

TEST_CASE("complex invariants") {
    CHECK_NOTHROW(OrientedComplex(3, {{1, 2}, {2, 3}}));
    CHECK_THROWS(OrientedComplex(3, {{1, 4}}));
    CHECK_THROWS(OrientedComplex(3, {{1, 1}}));
    CHECK_THROWS(OrientedComplex(3, {{1, 2}, {2, 1}}));
    OrientedComplex c(4, {{1, 2, 3}, {2, 3, 4}});
    CHECK(c.dimension() == 2);
    CHECK(c.f_vector() == std::vector<std::size_t>{4, 5, 2});
    CHECK(c.has_face({2, 3}));
    CHECK(!c.has_face({1, 4}));
}

TEST_CASE("pseudomanifold validation") {
    auto ok6 = validate_pseudomanifold(cycle_complex(6));
    CHECK(ok6.ok());
    auto okb = validate_pseudomanifold(simplex_boundary(3));
    CHECK(okb.ok());
    CHECK(validate_pseudomanifold(octahedron_complex()).ok());

    // a path has boundary ridges
    auto path = validate_pseudomanifold(OrientedComplex(3, {{1, 2}, {2, 3}}));
    CHECK(!path.ridge_condition);
    CHECK(path.failing_witness.has_value());

    // two disjoint triangles: dual graph disconnected
    auto two = validate_pseudomanifold(
        OrientedComplex(6, {{1, 2, 3}, {4, 5, 6}}));
    CHECK(!two.strongly_connected);

    // flipped orientation on one facet breaks cancellation
    auto bad = validate_pseudomanifold(OrientedComplex(4, {{1, 2, 3}, {1, 2, 4}, {2, 3, 4}, {1, 3, 4}}));
    // simplex_boundary(3) is the consistent orientation; compare
    auto good = validate_pseudomanifold(simplex_boundary(3));
    CHECK(good.orientations_cancel);
    CHECK(!bad.orientations_cancel);

    // non-pure
    CHECK(!validate_pseudomanifold(OrientedComplex(3, {{1, 2}, {3}})).is_pure);
}

TEST_CASE("boundary matrices") {
    Field f = Field::rationals();
    auto tri = cycle_complex(3);
    auto d1 = boundary_matrix(tri, 1, f);
    CHECK(d1.rows() == 3);
    CHECK(d1.cols() == 3);
    CHECK(rank(d1) == 2);

    auto edge = OrientedComplex(2, {{1, 2}});
    auto m = boundary_matrix(edge, 1, f);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 1);
    CHECK(m.at(0, 0) == Scalar::from_int(f, -1));
    CHECK(m.at(1, 0) == Scalar::from_int(f, 1));

    auto oct = octahedron_complex();
    auto d2 = boundary_matrix(oct, 2, f);
    CHECK(d2.rows() == 12);
    CHECK(d2.cols() == 8);
    CHECK(rank(d2) == 7);

    CHECK_THROWS(boundary_matrix(oct, 3, f));
    CHECK_THROWS(boundary_matrix(oct, -1, f));
}

TEST_CASE("boundary squared is zero") {
    Field f = Field::prime(32003);
    for (const auto& c : {octahedron_complex(), simplex_boundary(4),
                          bipyramid(cycle_complex(5))}) {
        for (int j = 1; j <= c.dimension(); ++j) {
            auto a = boundary_matrix(c, j - 1, f);
            auto b = boundary_matrix(c, j, f);
            CHECK(a.multiply(b).is_zero());
        }
    }
}

TEST_CASE("homology") {
    for (Field f : {Field::rationals(), Field::prime(32003)}) {
        auto h5 = homology_dims(cycle_complex(5), f);
        CHECK(h5.dims == std::vector<std::size_t>{0, 1});

        // cones are acyclic
        OrientedComplex cone(4, {{1, 2, 4}, {2, 3, 4}, {3, 1, 4}});
        auto hc = homology_dims(cone, f);
        CHECK(hc.dims == std::vector<std::size_t>{0, 0, 0});

        auto ho = homology_dims(octahedron_complex(), f);
        CHECK(ho.dims == std::vector<std::size_t>{0, 0, 1});

        // disjoint union of a point and a circle
        OrientedComplex du(4, {{1, 2}, {2, 3}, {3, 1}, {4}});
        auto hd = homology_dims(du, f);
        CHECK(hd.dims == std::vector<std::size_t>{1, 1});

        CHECK(homology_dims(OrientedComplex(3, {}), f).h_minus_one == 0);
        CHECK(homology_dims(OrientedComplex(3, {{}}), f).h_minus_one == 1);
    }
}

TEST_CASE("euler characteristic matches homology") {
    Field f = Field::prime(32003);
    for (const auto& c : {cycle_complex(6), octahedron_complex(),
                          simplex_boundary(3), bipyramid(cycle_complex(5))}) {
        long chi = 0;
        auto fv = c.f_vector();
        for (std::size_t j = 0; j < fv.size(); ++j)
            chi += (j % 2 == 0 ? 1 : -1) * (long)fv[j];
        auto h = homology_dims(c, f);
        long hsum = 1; // reduced -> add back h_0 convention via chi = 1 + sum (-1)^j h~_j
        for (std::size_t j = 0; j < h.dims.size(); ++j)
            hsum += (j % 2 == 0 ? 1 : -1) * (long)h.dims[j];
        CHECK(chi == hsum);
    }
}

// independent brute-force dual over all subsets, as a set of faces
static std::set<std::uint32_t> brute_dual_faces(const OrientedComplex& c) {
    int d = c.vertex_count();
    std::uint32_t full = (1u << d) - 1;
    std::set<std::uint32_t> faces;
    if (!c.is_void()) faces.insert(0);
    for (const auto& f : c.facets()) {
        std::uint32_t m = 0;
        for (int v : f) m |= 1u << (v - 1);
        for (std::uint32_t s = m;; s = (s - 1) & m) {
            faces.insert(s);
            if (s == 0) break;
        }
    }
    std::set<std::uint32_t> dual;
    for (std::uint32_t g = 0; g <= full; ++g)
        if (!faces.count(g)) dual.insert(full ^ g);
    return dual;
}

static std::set<std::uint32_t> face_masks(const OrientedComplex& c) {
    std::set<std::uint32_t> faces;
    if (!c.is_void()) faces.insert(0);
    for (const auto& f : c.facets()) {
        std::uint32_t m = 0;
        for (int v : f) m |= 1u << (v - 1);
        for (std::uint32_t s = m;; s = (s - 1) & m) {
            faces.insert(s);
            if (s == 0) break;
        }
    }
    return faces;
}

TEST_CASE("alexander dual") {
    // full simplex -> void
    OrientedComplex full(3, {{1, 2, 3}});
    CHECK(alexander_dual(full).is_void());
    // void -> full simplex
    CHECK(alexander_dual(OrientedComplex(3, {})).facets() ==
          std::vector<std::vector<int>>{{1, 2, 3}});
    // three isolated vertices are self-dual
    OrientedComplex pts(3, {{1}, {2}, {3}});
    CHECK(face_masks(alexander_dual(pts)) == face_masks(pts));
    // matches the brute-force definition and is an involution
    for (const auto& c : {cycle_complex(5), octahedron_complex(), pts,
                          OrientedComplex(4, {{1, 2}, {3, 4}}),
                          simplex_boundary(2)}) {
        auto dual = alexander_dual(c);
        CHECK(face_masks(dual) == brute_dual_faces(c));
        CHECK(face_masks(alexander_dual(dual)) == face_masks(c));
    }
}

TEST_CASE("catalog basics") {
    CHECK(catalog("cycle", {5}).facets().size() == 5);
    CHECK(catalog("octahedron", {}).facets().size() == 8);
    CHECK(catalog("simplex_boundary", {3}).facets().size() == 4);
    CHECK(catalog("bipyramid", {4}).facets().size() == 8);
    CHECK_THROWS(catalog("moebius", {}));
    // octahedron is the bipyramid over the 4-cycle
    CHECK(canonical_form(catalog("octahedron", {})) ==
          canonical_form(bipyramid(cycle_complex(4))));
}

TEST_CASE("orientable pseudomanifolds have top homology one") {
    Field f = Field::rationals();
    for (const auto& c : {cycle_complex(7), octahedron_complex(), simplex_boundary(4)}) {
        REQUIRE(validate_pseudomanifold(c).ok());
        auto h = homology_dims(c, f);
        CHECK(h.dims.back() == 1);
    }
}

TEST_CASE("seven vertex spheres") {
    auto list = sphere7_list();
    CHECK(list.size() == 5);
    std::set<std::string> keys;
    for (const auto& c : list) {
        CHECK(c.f_vector() == std::vector<std::size_t>{7, 15, 10});
        CHECK(validate_pseudomanifold(c).ok());
        auto h = homology_dims(c, Field::prime(32003));
        CHECK(h.dims == std::vector<std::size_t>{0, 0, 1});
        keys.insert(canonical_form(c));
    }
    CHECK(keys.size() == 5);
}
