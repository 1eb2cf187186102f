#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "syz/field.hpp"
#include "syz/matrix.hpp"

using namespace syz;

TEST_CASE("scalar arithmetic over Q") {
    Field q = Field::rationals();
    Scalar a = Scalar::from_mpq(q, mpq_class(1, 3));
    Scalar b = Scalar::from_mpq(q, mpq_class(2, 5));
    CHECK((a + b).rational() == mpq_class(11, 15));
    CHECK((a * b).rational() == mpq_class(2, 15));
    CHECK((a / b).rational() == mpq_class(5, 6));
    CHECK((-a + a).is_zero());
    CHECK(a.inv().rational() == 3);
}

TEST_CASE("scalar arithmetic over GF(p)") {
    Field f = Field::prime(32003);
    Scalar a = Scalar::from_int(f, -1);
    CHECK(a.residue() == 32002);
    Scalar b = Scalar::from_int(f, 7);
    CHECK((b * b.inv()).is_one());
    CHECK((a * a).is_one());
    Scalar big = Scalar::from_int(f, 32003);
    CHECK(big.is_zero());
    CHECK_THROWS(Scalar::zero(f).inv());
    CHECK_THROWS(Field::prime(4));
    CHECK_THROWS(Field::prime(2));
}

TEST_CASE("mixed field tags rejected") {
    Scalar a = Scalar::from_int(Field::rationals(), 1);
    Scalar b = Scalar::from_int(Field::prime(7), 1);
    CHECK_THROWS(a + b);
}

static ExactMatrix from_ints(const Field& f, std::size_t r, std::size_t c,
                             std::initializer_list<long> vals) {
    ExactMatrix m(f, r, c);
    std::size_t i = 0;
    for (long v : vals) {
        m.at(i / c, i % c) = Scalar::from_int(f, v);
        ++i;
    }
    return m;
}

TEST_CASE("row reduce, rank, kernel") {
    for (Field f : {Field::rationals(), Field::prime(32003)}) {
        ExactMatrix m = from_ints(f, 3, 4, {1, 2, 3, 4, 2, 4, 6, 8, 1, 1, 1, 1});
        auto rr = row_reduce(m);
        CHECK(rr.rank == 2);
        CHECK(rr.kernel_basis.size() == 2);
        // kernel vectors actually lie in the kernel
        for (const auto& v : rr.kernel_basis) {
            for (std::size_t r = 0; r < m.rows(); ++r) {
                Scalar acc = Scalar::zero(f);
                for (std::size_t c = 0; c < m.cols(); ++c) acc = acc + m.at(r, c) * v[c];
                CHECK(acc.is_zero());
            }
        }
        CHECK(rank(m) == 2);
        CHECK(rank(ExactMatrix::identity(f, 5)) == 5);
        CHECK(rank(ExactMatrix(f, 3, 3)) == 0);
    }
}

TEST_CASE("solve") {
    Field f = Field::rationals();
    ExactMatrix m = from_ints(f, 2, 2, {1, 1, 1, -1});
    std::vector<Scalar> b{Scalar::from_int(f, 3), Scalar::from_int(f, 1)};
    std::vector<Scalar> x;
    REQUIRE(solve(m, b, x));
    CHECK(x[0].rational() == 2);
    CHECK(x[1].rational() == 1);
    ExactMatrix sing = from_ints(f, 2, 2, {1, 1, 1, 1});
    std::vector<Scalar> b2{Scalar::from_int(f, 0), Scalar::from_int(f, 1)};
    CHECK(!solve(sing, b2, x));
}

TEST_CASE("sparse rank agrees with dense") {
    Field f = Field::prime(32003);
    // deterministic pseudo-random matrix with planted rank
    std::uint64_t state = 12345;
    auto rnd = [&]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return (std::uint32_t)(state >> 33);
    };
    std::size_t nr = 20, nc = 15;
    ExactMatrix dense(f, nr, nc);
    std::vector<SparseRowGF> sp(nr);
    std::vector<SparseRowQ> spq(nr);
    for (std::size_t r = 0; r < nr; ++r) {
        for (std::size_t c = 0; c < nc; ++c) {
            if (rnd() % 4 != 0) continue;
            long v = (long)(rnd() % 19) - 9;
            if (v == 0) continue;
            dense.at(r, c) = Scalar::from_int(f, v);
            long m = v % 32003; if (m < 0) m += 32003;
            sp[r].emplace_back((std::int32_t)c, (std::uint32_t)m);
            spq[r].emplace_back((std::int32_t)c, mpq_class(v));
        }
    }
    std::size_t want = rank(dense);
    CHECK(sparse_rank_gfp(sp, nc, 32003) == want);
    CHECK(sparse_rank_q(spq, nc) == want);
}

TEST_CASE("sparse rank edge cases") {
    CHECK(sparse_rank_gfp({}, 10, 32003) == 0);
    CHECK(sparse_rank_gfp({{}, {}}, 10, 32003) == 0);
    std::vector<SparseRowGF> rows = {{{0, 1}, {1, 1}}, {{0, 1}, {1, 1}}, {{1, 2}}};
    CHECK(sparse_rank_gfp(rows, 2, 32003) == 2);
}
