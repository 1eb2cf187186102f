#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "syz/toricbetti.hpp"

using namespace syz;

static PointConfiguration twisted_cubic_config() {
    return PointConfiguration(2, {{1, 0}, {1, 1}, {1, 2}, {1, 3}});
}

TEST_CASE("point configuration basics") {
    auto a = twisted_cubic_config();
    CHECK(a.graded());
    CHECK(a.level_of({2, 3}) == 2);
    CHECK(a.level_of({0, 0}) == 0);
    CHECK_THROWS(PointConfiguration(2, {{1, 0}, {1, 0}}));
    // no grading vector exists
    PointConfiguration ungraded(1, {{1}, {2}});
    CHECK(!ungraded.graded());
    CHECK_THROWS(ungraded.level_of({1}));
}

TEST_CASE("integer kernel basis") {
    auto a = twisted_cubic_config();
    auto k = integer_kernel_basis(a);
    CHECK(k.size() == 2);
    for (const auto& v : k)
        for (std::size_t c = 0; c < 2; ++c) {
            long acc = 0;
            for (std::size_t i = 0; i < 4; ++i) acc += v[i] * a.columns()[i][c];
            CHECK(acc == 0);
        }
    PointConfiguration sq(3, {{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
    auto ks = integer_kernel_basis(sq);
    REQUIRE(ks.size() == 1);
    Multidegree v = ks[0];
    if (v[0] < 0)
        for (auto& x : v) x = -x;
    CHECK(v == Multidegree{1, -1, -1, 1});
}

TEST_CASE("toric ideal: twisted cubic") {
    for (Field f : {Field::rationals(), Field::prime(32003)}) {
        auto I = toric_ideal(twisted_cubic_config(), f);
        const auto& gb = I.reduced_gb();
        CHECK(gb.size() == 3);
        CHECK(I.contains(parse_poly(I.ring(), "x1*x3 - x2^2")));
        CHECK(I.contains(parse_poly(I.ring(), "x2*x4 - x3^2")));
        CHECK(I.contains(parse_poly(I.ring(), "x1*x4 - x2*x3")));
        CHECK(hilbert_degree(I) == 3);
        // already saturated
        Exponent all(4, 1);
        auto sat = saturate(I, MultiPoly::monomial(I.ring(), all, Scalar::one(f)));
        CHECK(ideal_equal(I, sat));
    }
}

TEST_CASE("toric ideal: unit square") {
    PointConfiguration sq(3, {{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}},
                          {"x00", "x10", "x01", "x11"});
    auto I = toric_ideal(sq, Field::rationals());
    REQUIRE(I.reduced_gb().size() == 1);
    CHECK(I.contains(parse_poly(I.ring(), "x00*x11 - x10*x01")));
}

TEST_CASE("toric ideal of cycle weights matches the cycle specialization") {
    Field f = Field::prime(32003);
    auto a5 = configuration_from_weights(weight_configuration(cycle_complex(5)));
    CHECK(ideal_equal(toric_ideal(a5, f), cycle_specialization(5, f)));
    // the even case needs the Pfaffian: the toric ideal is the prime J_6
    auto a6 = configuration_from_weights(weight_configuration(cycle_complex(6)));
    auto T6 = toric_ideal(a6, f);
    auto J6 = cycle_specialization(6, f);
    CHECK(ideal_equal(T6, J6));
    // while the quadrics alone are strictly smaller
    auto I6 = pseudomanifold_ideal(cycle_complex(6), f);
    CHECK(!ideal_equal(T6, I6));
}

TEST_CASE("semigroup levels") {
    auto a = twisted_cubic_config();
    SemigroupLevels lv(a, 3);
    CHECK(lv.level(0).size() == 1);
    CHECK(lv.level(1).size() == 4);
    for (const auto& c : a.columns()) CHECK(lv.level(1).count(c) == 1);
    CHECK(lv.level(2).count({2, 3}) == 1);
    CHECK(lv.contains({2, 3}));
    CHECK(!lv.contains({0, 1}));
    CHECK(!lv.contains({-1, 0}));
    CHECK_THROWS(lv.level(4));

    auto a5 = configuration_from_weights(weight_configuration(cycle_complex(5)));
    SemigroupLevels lv5(a5, 3);
    Multidegree e0(6, 0);
    e0[0] = 1;
    CHECK(lv5.level(3).count(e0) == 1);
}

TEST_CASE("fiber complexes") {
    auto a = twisted_cubic_config();
    SemigroupLevels lv(a, 4);
    // single column: one vertex
    auto d1 = fiber_complex(a, {1, 0}, lv);
    CHECK(d1.facets() == std::vector<std::vector<int>>{{1}});
    // not in the semigroup: void
    CHECK(fiber_complex(a, {0, 1}, lv).is_void());
    // zero: just the empty face
    auto d0 = fiber_complex(a, {0, 0}, lv);
    CHECK(!d0.is_void());
    CHECK(d0.dimension() == -1);
    // m = (2,3): two disjoint edges, one connected component too many
    auto d23 = fiber_complex(a, {2, 3}, lv);
    auto h = homology_dims(d23, Field::prime(32003));
    CHECK(h.dims[0] == 1);
}

TEST_CASE("fiber complex at e0 recovers the pseudomanifold homology") {
    Field f = Field::prime(32003);
    for (const auto& c : {cycle_complex(5), cycle_complex(6), simplex_boundary(3),
                          octahedron_complex()}) {
        auto a = configuration_from_weights(weight_configuration(c));
        long lvl = c.dimension() + 2;
        SemigroupLevels lv(a, lvl);
        Multidegree e0(a.ambient(), 0);
        e0[0] = 1;
        auto delta = fiber_complex(a, e0, lv);
        auto hd = homology_dims(delta, f);
        auto hc = homology_dims(c, f);
        // compare padded reduced homology
        std::size_t n = std::max(hd.dims.size(), hc.dims.size());
        hd.dims.resize(n, 0);
        hc.dims.resize(n, 0);
        CHECK(hd.dims == hc.dims);
        CHECK(hd.dims[(std::size_t)c.dimension()] == 1);
    }
}

TEST_CASE("hochster betti: twisted cubic") {
    for (Field f : {Field::rationals(), Field::prime(32003)}) {
        auto t = hochster_betti(twisted_cubic_config(), 3, f);
        CHECK(t.coarse_at(0, 0) == 1);
        CHECK(t.coarse_at(1, 2) == 3);
        CHECK(t.coarse_at(2, 3) == 2);
        CHECK(t.totals() == std::vector<std::size_t>{1, 3, 2});
        CHECK(t.diagram() == "total: 1 3 2\n0: 1 -- --\n1: -- 3 2\n");
    }
}

TEST_CASE("hochster betti: five cycle") {
    auto a5 = configuration_from_weights(weight_configuration(cycle_complex(5)));
    auto t = hochster_betti(a5, 7, Field::prime(32003));
    CHECK(t.totals() == std::vector<std::size_t>{1, 5, 12, 10, 2});
    CHECK(t.coarse_at(1, 2) == 5);
    CHECK(t.coarse_at(2, 3) == 1);
    CHECK(t.coarse_at(2, 4) == 11);
    CHECK(t.coarse_at(3, 5) == 10);
    CHECK(t.coarse_at(4, 6) == 1);
    CHECK(t.coarse_at(4, 7) == 1);
    // coarse view is consistent with the fine entries
    std::map<std::pair<long, long>, std::size_t> agg;
    for (const auto& [k, v] : t.fine) agg[{k.first, a5.level_of(k.second)}] += v;
    CHECK(agg == t.coarse);
}

TEST_CASE("hochster betti: six cycle") {
    auto a6 = configuration_from_weights(weight_configuration(cycle_complex(6)));
    auto t = hochster_betti(a6, 9, Field::prime(32003));
    CHECK(t.totals() == std::vector<std::size_t>{1, 7, 22, 22, 7, 1});
    CHECK(t.coarse_at(1, 2) == 6);
    CHECK(t.coarse_at(1, 3) == 1);
    CHECK(t.coarse_at(2, 3) == 1);
    CHECK(t.coarse_at(2, 4) == 21);
    CHECK(t.coarse_at(3, 5) == 21);
    CHECK(t.coarse_at(3, 6) == 1);
    CHECK(t.coarse_at(4, 6) == 1);
    CHECK(t.coarse_at(4, 7) == 6);
    CHECK(t.coarse_at(5, 9) == 1);
}

TEST_CASE("top homology class appears as a betti number") {
    Field f = Field::prime(32003);
    for (const auto& c : {cycle_complex(5), simplex_boundary(3), octahedron_complex()}) {
        auto a = configuration_from_weights(weight_configuration(c));
        long n = c.dimension();
        auto t = hochster_betti(a, n + 2, f);
        Multidegree e0(a.ambient(), 0);
        e0[0] = 1;
        auto it = t.fine.find({n + 1, e0});
        REQUIRE(it != t.fine.end());
        CHECK(it->second == 1);
    }
}

TEST_CASE("identify vertices") {
    PointConfiguration sq(3, {{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}});
    CHECK_THROWS(identify_vertices(sq, 1, 1));
    CHECK_THROWS(identify_vertices(sq, 0, 1));
    auto idd = identify_vertices(sq, 1, 2);
    CHECK(idd.ambient() == 2);
    // (1,0),(1,1),(1,1)->dup,(1,2): drops to 3 columns
    CHECK(idd.size() == 3);
}
