#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "syz/ring.hpp"

using namespace syz;

static RingPtr make_ring(const Field& f, std::initializer_list<const char*> names) {
    std::vector<VarInfo> vars;
    for (auto n : names) vars.push_back({n, VarRole::Aux, {}});
    return std::make_shared<RingSpec>(f, std::move(vars));
}

TEST_CASE("parser roundtrip") {
    auto R = make_ring(Field::rationals(), {"x1", "x3", "y12", "y23"});
    auto p = parse_poly(R, "x1*y12 - x3*y23");
    CHECK(p.terms().size() == 2);
    CHECK(p.is_coarse_homogeneous());
    CHECK(p.coarse_degree() == 2);
    CHECK(parse_poly(R, p.str()) == p);

    auto q = parse_poly(R, "2*x1^2 + 3");
    CHECK(q.coarse_degree() == 2);
    CHECK(!q.is_coarse_homogeneous());
    CHECK(parse_poly(R, q.str()) == q);

    CHECK(parse_poly(R, "").is_zero());
    CHECK(parse_poly(R, "x1 - x1").is_zero());
    CHECK_THROWS(parse_poly(R, "z*w"));
    CHECK_THROWS(parse_poly(R, "x1 +"));
    CHECK_THROWS(parse_poly(R, "x1 x3"));
}

TEST_CASE("monomial orders") {
    // grevlex on k[x,y,z]: x^2 > xy > y^2 > xz > yz > z^2
    auto lt = [](const MonomialOrder& o, Exponent a, Exponent b) {
        return o.compare(a, b) < 0;
    };
    auto gv = MonomialOrder::grevlex();
    CHECK(lt(gv, {1, 1, 0}, {2, 0, 0}));
    CHECK(lt(gv, {0, 2, 0}, {1, 1, 0}));
    CHECK(lt(gv, {1, 0, 1}, {0, 2, 0}));
    CHECK(lt(gv, {0, 1, 1}, {1, 0, 1}));
    CHECK(lt(gv, {0, 0, 2}, {0, 1, 1}));
    CHECK(gv.compare({1, 2, 3}, {1, 2, 3}) == 0);

    auto lx = MonomialOrder::lex();
    CHECK(lt(lx, {0, 5, 5}, {1, 0, 0}));

    // grevlex with y (index 1) made smallest: x*z beats y^2
    auto gl = MonomialOrder::grevlex_var_last(3, 1);
    CHECK(lt(gl, {0, 2, 0}, {1, 0, 1}));

    // elimination of the first block {x}: any positive x power dominates
    auto el = MonomialOrder::elimination(1);
    CHECK(lt(el, {0, 9, 9}, {1, 0, 0}));
}

TEST_CASE("polynomial arithmetic and leads") {
    auto R = make_ring(Field::prime(32003), {"x", "y", "z"});
    auto f = parse_poly(R, "x + y");
    auto g = parse_poly(R, "x - y");
    CHECK((f * g) == parse_poly(R, "x^2 - y^2"));
    CHECK((f + g) == parse_poly(R, "2*x"));
    CHECK((f - f).is_zero());

    auto h = parse_poly(R, "y^2 + x*z");
    CHECK(h.lead(MonomialOrder::grevlex()).exp == Exponent{0, 2, 0});
    CHECK(h.lead(MonomialOrder::lex()).exp == Exponent{1, 0, 1});
    CHECK(h.monic(MonomialOrder::grevlex()) == h);
    CHECK(parse_poly(R, "3*x").monic(MonomialOrder::grevlex()) == parse_poly(R, "x"));
}

TEST_CASE("fine grading") {
    auto R0 = make_ring(Field::rationals(), {"x", "y", "z", "w"});
    auto R = std::make_shared<RingSpec>(*R0);
    // twisted cubic weights: columns of [[3,2,1,0],[0,1,2,3]]
    R->set_fine_grading({{3, 0}, {2, 1}, {1, 2}, {0, 3}});
    RingPtr Rc = R;
    auto p = parse_poly(Rc, "x*z - y^2");
    auto d = p.fine_multidegree();
    REQUIRE(d.has_value());
    CHECK(*d == Multidegree{4, 2});
    CHECK(!parse_poly(Rc, "x*z - y").fine_multidegree().has_value());
}

TEST_CASE("monomials_of_degree and coefficient matrix") {
    auto m2 = monomials_of_degree(3, 2);
    CHECK(m2.size() == 6);
    CHECK(m2.front() == Exponent{2, 0, 0});
    CHECK(m2.back() == Exponent{0, 0, 2});
    CHECK(monomials_of_degree(3, 0).size() == 1);
    CHECK(monomials_of_degree(0, 0).size() == 1);
    CHECK(monomials_of_degree(3, -1).empty());

    auto R = make_ring(Field::rationals(), {"x", "y", "z"});
    auto m = coefficient_matrix(R, {parse_poly(R, "x*z - y^2")}, 2);
    CHECK(m.rows() == 1);
    CHECK(m.cols() == 6);
    auto empty = coefficient_matrix(R, {}, 2);
    CHECK(empty.rows() == 0);
    CHECK(empty.cols() == 6);
    CHECK_THROWS(coefficient_matrix(R, {parse_poly(R, "x + y^2")}, 2));
}

TEST_CASE("duplicate variable names rejected") {
    CHECK_THROWS(make_ring(Field::rationals(), {"x", "x"}));
}
