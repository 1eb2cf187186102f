#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "syz/kozrees.hpp"
#include "syz/simplicial.hpp"
#include "syz/strand.hpp"
#include "syz/toricbetti.hpp"

using namespace syz;

static RingPtr make_ring(const Field& f, const std::vector<std::string>& names) {
    std::vector<VarInfo> vars;
    for (const auto& n : names) vars.push_back({n, VarRole::Aux, {}});
    return std::make_shared<RingSpec>(f, vars);
}

static PointConfiguration twisted_cubic_config() {
    return PointConfiguration(2, {{1, 0}, {1, 1}, {1, 2}, {1, 3}});
}

// 7-vertex triangulation of S^2 whose toric quadric space has dimension 17
// (unique among the seven-vertex types; pinned facet list)
static OrientedComplex seventeen_quadric_sphere() {
    return OrientedComplex(7, {{1, 2, 3}, {2, 1, 4}, {1, 3, 4}, {3, 2, 5}, {2, 4, 5},
                               {4, 3, 6}, {3, 5, 6}, {5, 4, 7}, {4, 6, 7}, {6, 5, 7}});
}

static QuadraticSystem toric_system(const PointConfiguration& a, const Field& f) {
    RingPtr R = configuration_ring(a, f);
    return QuadraticSystem(R, toric_quadrics(R));
}

TEST_CASE("quadratic system row-reduces and validates input") {
    Field f = Field::prime(32003);
    auto R = make_ring(f, {"x", "y", "z"});
    auto q1 = parse_poly(R, "x*y - z^2");
    auto q2 = parse_poly(R, "x^2");
    auto sum = q1 + q2;
    QuadraticSystem q(R, {q1, q2, sum, MultiPoly(R)});
    CHECK(q.count() == 2); // dependent quadric and zero dropped
    CHECK_THROWS(QuadraticSystem(R, {parse_poly(R, "x^3")}));
    CHECK_THROWS(QuadraticSystem(R, {parse_poly(R, "x^2 + y")}));
    // degree-2 part of an ideal with a cubic generator keeps only quadrics
    auto J6 = cycle_specialization(6, f);
    auto qj = QuadraticSystem::from_ideal(J6);
    CHECK(qj.count() == 6);
}

TEST_CASE("strand betti numbers: twisted cubic") {
    for (Field f : {Field::rationals(), Field::prime(32003)}) {
        auto q = toric_system(twisted_cubic_config(), f);
        CHECK(q.count() == 3);
        auto b = koszul_strand_betti(q, 4);
        CHECK(b == std::vector<std::size_t>{3, 2, 0}); // early stop after first zero
        CHECK(two_lp(q, 4) == 2);
    }
}

TEST_CASE("strand betti numbers: five-cycle and six-cycle ideals") {
    Field f = Field::prime(32003);
    auto q5 = QuadraticSystem::from_ideal(pseudomanifold_ideal(cycle_complex(5), f));
    CHECK(koszul_strand_betti(q5, 4) == std::vector<std::size_t>{5, 1, 0});
    CHECK(two_lp(q5, 4) == 2);
    auto q6 = QuadraticSystem::from_ideal(cycle_specialization(6, f));
    CHECK(koszul_strand_betti(q6, 4) == std::vector<std::size_t>{6, 1, 0});
}

TEST_CASE("strand betti numbers: seven-vertex sphere") {
    Field f = Field::prime(32003);
    auto a = configuration_from_weights(weight_configuration(seventeen_quadric_sphere()));
    auto q = toric_system(a, f);
    CHECK(q.count() == 17);
    auto b = koszul_strand_betti(q, 5);
    CHECK(b == std::vector<std::size_t>{17, 19, 1, 0});
    CHECK(two_lp(q, 5) == 3);
}

TEST_CASE("strand engine agrees with the fiber-complex engine on row one") {
    Field f = Field::prime(32003);
    std::vector<PointConfiguration> configs = {
        twisted_cubic_config(),
        configuration_from_weights(weight_configuration(cycle_complex(5))),
        configuration_from_weights(weight_configuration(cycle_complex(6)))};
    for (const auto& a : configs) {
        auto q = toric_system(a, f);
        auto b = koszul_strand_betti(q, 4);
        auto t = hochster_betti(a, (long)b.size() + 1, f);
        for (std::size_t m = 0; m < b.size(); ++m)
            CHECK(b[m] == t.coarse_at((long)m + 1, (long)m + 2));
        CHECK(b[0] == q.count()); // b_{1,2} = r always
    }
}

TEST_CASE("linear first syzygies") {
    Field f = Field::prime(32003);
    // a regular sequence of quadrics has no linear syzygy
    auto R = make_ring(f, {"x", "y"});
    QuadraticSystem reg(R, {parse_poly(R, "x^2"), parse_poly(R, "y^2")});
    CHECK(linear_first_syzygies(reg).empty());

    auto tc = toric_system(twisted_cubic_config(), f);
    auto s_tc = linear_first_syzygies(tc);
    CHECK(s_tc.size() == 2);

    auto q5 = QuadraticSystem::from_ideal(pseudomanifold_ideal(cycle_complex(5), f));
    auto s5 = linear_first_syzygies(q5);
    CHECK(s5.size() == 1);

    // every returned syzygy satisfies sum_i l_i q_i = 0 exactly
    for (const auto& [q, syzs] :
         std::vector<std::pair<const QuadraticSystem*, const std::vector<LinearSyzygy>*>>{
             {&tc, &s_tc}, {&q5, &s5}}) {
        for (const auto& s : *syzs) {
            MultiPoly acc(q->ring());
            for (std::size_t i = 0; i < q->count(); ++i) {
                MultiPoly l(q->ring());
                for (std::size_t k = 0; k < q->dim_v(); ++k)
                    l = l + MultiPoly::variable(q->ring(), k).scaled(s.coefficients.at(i, k));
                acc = acc + l * q->quadrics()[i];
            }
            CHECK(acc.is_zero());
        }
    }
}

TEST_CASE("syzygy rank") {
    Field f = Field::prime(32003);
    auto tc = toric_system(twisted_cubic_config(), f);
    for (const auto& s : linear_first_syzygies(tc)) {
        CHECK(syzygy_rank(s) == 3);
        CHECK(syzygy_rank(s) <= std::min(tc.count(), tc.dim_v()));
        CHECK(syzygy_rank(s) >= 2);
    }
    auto q5 = QuadraticSystem::from_ideal(pseudomanifold_ideal(cycle_complex(5), f));
    auto s5 = linear_first_syzygies(q5);
    REQUIRE(s5.size() == 1);
    CHECK(syzygy_rank(s5[0]) == 5);
    auto q7 = QuadraticSystem::from_ideal(pseudomanifold_ideal(cycle_complex(7), f));
    auto s7 = linear_first_syzygies(q7);
    REQUIRE(s7.size() == 1);
    CHECK(syzygy_rank(s7[0]) == 7);
}

TEST_CASE("one linear syzygy of full rank for cycle ideals") {
    Field f = Field::prime(32003);
    for (int d : {5, 7}) {
        auto q = QuadraticSystem::from_ideal(pseudomanifold_ideal(cycle_complex(d), f));
        auto s = linear_first_syzygies(q);
        REQUIRE(s.size() == 1);
        CHECK(syzygy_rank(s[0]) == (std::size_t)d);
    }
    for (int d : {6, 8}) {
        auto q = QuadraticSystem::from_ideal(cycle_specialization(d, f));
        auto s = linear_first_syzygies(q);
        REQUIRE(s.size() == 1);
        CHECK(syzygy_rank(s[0]) == (std::size_t)d);
    }
}

// Independent oracle: the smallest variable subset S such that the lift
// equations (dz)_k = sum_i coeff(i,k) q_i admit a solution supported on
// pairs inside S. Minimizing over lifts equals minimizing over homology
// representatives because the ambient Koszul strand is exact there.
static std::size_t brute_force_support(const QuadraticSystem& q, const LinearSyzygy& s) {
    const RingPtr& R = q.ring();
    const Field& f = R->field();
    std::size_t d = R->nvars();
    auto mons = monomials_of_degree(d, 2);
    std::map<Exponent, std::size_t> midx;
    for (std::size_t c = 0; c < mons.size(); ++c) midx[mons[c]] = c;

    std::vector<std::vector<Scalar>> target(d, std::vector<Scalar>(mons.size(), Scalar::zero(f)));
    for (std::size_t i = 0; i < q.count(); ++i)
        for (std::size_t k = 0; k < d; ++k)
            for (const auto& t : q.quadrics()[i].terms()) {
                auto& cell = target[k][midx[t.exp]];
                cell = cell + s.coefficients.at(i, k) * t.coeff;
            }

    for (std::size_t size = 0; size <= d; ++size) {
        for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
            if ((std::size_t)__builtin_popcount(mask) != size) continue;
            std::vector<std::pair<int, int>> pairs;
            for (int a = 0; a < (int)d; ++a)
                for (int b = a + 1; b < (int)d; ++b)
                    if ((mask >> a & 1) && (mask >> b & 1)) pairs.push_back({a, b});
            std::size_t nunk = pairs.size() * d;
            ExactMatrix A(f, d * mons.size(), nunk);
            std::vector<Scalar> rhs;
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t c = 0; c < mons.size(); ++c) rhs.push_back(target[k][c]);
            for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
                auto [a, b] = pairs[pi];
                for (std::size_t v = 0; v < d; ++v) {
                    Exponent eav(d, 0), ebv(d, 0);
                    eav[a] += 1; eav[v] += 1;
                    ebv[b] += 1; ebv[v] += 1;
                    std::size_t u = pi * d + v;
                    std::size_t r1 = (std::size_t)b * mons.size() + midx[eav];
                    std::size_t r2 = (std::size_t)a * mons.size() + midx[ebv];
                    A.set(r1, u, A.at(r1, u) + Scalar::one(f));
                    A.set(r2, u, A.at(r2, u) - Scalar::one(f));
                }
            }
            std::vector<Scalar> w;
            if (solve(A, rhs, w)) return size;
        }
    }
    return d;
}

TEST_CASE("support dimension") {
    Field f = Field::prime(32003);
    auto tc = toric_system(twisted_cubic_config(), f);
    for (const auto& s : linear_first_syzygies(tc)) {
        CHECK(support_dimension(tc, s) == 3);
        CHECK(support_dimension(tc, s) == brute_force_support(tc, s));
    }
    auto q5 = QuadraticSystem::from_ideal(pseudomanifold_ideal(cycle_complex(5), f));
    auto s5 = linear_first_syzygies(q5);
    REQUIRE(s5.size() == 1);
    CHECK(support_dimension(q5, s5[0]) == 5);
    auto q6 = QuadraticSystem::from_ideal(cycle_specialization(6, f));
    auto s6 = linear_first_syzygies(q6);
    REQUIRE(s6.size() == 1);
    CHECK(support_dimension(q6, s6[0]) == 6);
}

TEST_CASE("quadric rank") {
    for (Field f : {Field::rationals(), Field::prime(32003)}) {
        auto R = make_ring(f, {"x", "y", "z", "w"});
        CHECK(quadric_rank(parse_poly(R, "x*y")) == 2);
        CHECK(quadric_rank(parse_poly(R, "y^2 - x*z")) == 3);
        CHECK(quadric_rank(parse_poly(R, "x*y - z*w")) == 4);
        CHECK(quadric_rank(parse_poly(R, "x^2")) == 1);
        CHECK(quadric_rank(MultiPoly(R)) == 0);
        CHECK_THROWS(quadric_rank(parse_poly(R, "x^3")));
        CHECK_THROWS(quadric_rank(parse_poly(R, "x^2 + y")));
    }
}

TEST_CASE("pseudomanifold quadrics have rank four") {
    Field f = Field::prime(32003);
    for (int d : {5, 6, 7}) {
        auto I = pseudomanifold_ideal(cycle_complex(d), f);
        for (const auto& g : I.generators()) CHECK(quadric_rank(g) == 4);
    }
}

TEST_CASE("size guard") {
    Field f = Field::prime(32003);
    auto q5 = QuadraticSystem::from_ideal(pseudomanifold_ideal(cycle_complex(5), f));
    CHECK_THROWS_AS((void)koszul_strand_betti(q5, 3, 50), std::length_error);
}
