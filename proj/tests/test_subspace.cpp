#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "commext/subspace.hpp"
#include "oracle.hpp"

#include <array>

using namespace commext;

namespace {

Matrix e(std::size_t i, std::size_t n) {
    Matrix v(n, 1);
    v(i, 0) = 1;
    return v;
}

} // namespace

TEST_CASE("image examples") {
    CHECK(image(Matrix::zero(3, 2)).dim() == 0);
    CHECK(image(Matrix::identity(3)).dim() == 3);
    CHECK(image(Matrix::identity(3)).basis() == Matrix::identity(3));
    const Subspace s = image(Matrix{{1, 2}, {2, 4}});
    CHECK(s.dim() == 1);
    CHECK(s.basis() == Matrix{{1}, {2}});
    CHECK(image(Matrix{{3}, {6}}) == s);
}

TEST_CASE("sum examples") {
    const Subspace u = image(Matrix{{1, 0}, {1, 1}, {0, 2}});
    CHECK(sum(u, u) == u);
    CHECK(sum(u, Subspace(3)) == u);
    const Subspace s = sum(image(e(0, 3)), image(e(1, 3)));
    CHECK(s == image(hconcat(e(0, 3), e(1, 3))));
    CHECK(s.dim() == 2);
    CHECK_THROWS_AS(sum(u, Subspace(2)), DimensionError);
}

TEST_CASE("intersection examples") {
    const Subspace u = image(Matrix{{1, 0}, {1, 1}, {0, 2}});
    CHECK(intersection(u, u) == u);
    CHECK(intersection(image(e(0, 3)), image(e(1, 3))).dim() == 0);
    const Subspace a = image(hconcat(e(0, 3), e(1, 3)));
    const Subspace b = image(hconcat(e(1, 3), e(2, 3)));
    CHECK(intersection(a, b) == image(e(1, 3)));
    CHECK_THROWS_AS(intersection(u, Subspace(4)), DimensionError);
}

TEST_CASE("is_direct_sum examples") {
    const Subspace v = image(Matrix{{1}, {2}, {3}});
    std::array<Subspace, 2> zero_and_v{Subspace(3), v};
    CHECK(is_direct_sum(zero_and_v));
    std::array<Subspace, 2> repeated{image(e(0, 3)), image(e(0, 3))};
    CHECK_FALSE(is_direct_sum(repeated));
    std::array<Subspace, 3> axes{image(e(0, 3)), image(e(1, 3)), image(e(2, 3))};
    CHECK(is_direct_sum(axes));
    std::array<Subspace, 3> dependent{image(e(0, 3)), image(e(1, 3)), image(e(0, 3) + e(1, 3))};
    CHECK_FALSE(is_direct_sum(dependent));
}

TEST_CASE("coordinates_in examples") {
    const Matrix p{{1, 0}, {0, 1}, {0, 0}, {1, 1}};
    const Matrix q{{0}, {0}, {1}, {1}};

    auto zero = coordinates_in(Matrix::zero(4, 3), p, q);
    REQUIRE(solution(zero));
    CHECK(solution(zero)->x.is_zero());
    CHECK(solution(zero)->y.is_zero());

    auto self = coordinates_in(p, p, q);
    REQUIRE(solution(self));
    CHECK(solution(self)->x == Matrix::identity(2));
    CHECK(solution(self)->y.is_zero());

    auto outside = coordinates_in(e(2, 3), e(0, 3), e(1, 3));
    CHECK(error_of(outside) == SolveError::NoSolution);

    auto overlapping = coordinates_in(e(0, 3), e(0, 3), e(0, 3));
    CHECK(error_of(overlapping) == SolveError::PreconditionViolated);

    auto rank_deficient = coordinates_in(e(0, 3), hconcat(e(0, 3), e(0, 3)), e(1, 3));
    CHECK(error_of(rank_deficient) == SolveError::PreconditionViolated);
}

TEST_CASE("split_across_direct_sum examples") {
    const Subspace u = image(e(0, 2));
    const Subspace v = image(e(1, 2));

    auto s = split_across_direct_sum(Matrix{{1}, {-1}}, u, v);
    REQUIRE(solution(s));
    CHECK(solution(s)->first == Matrix{{1}, {0}});
    CHECK(solution(s)->second == Matrix{{0}, {1}});

    const Matrix inside{{3, -2}, {0, 0}};
    auto one_sided = split_across_direct_sum(inside, u, v);
    REQUIRE(solution(one_sided));
    CHECK(solution(one_sided)->first == inside);
    CHECK(solution(one_sided)->second.is_zero());

    auto zero = split_across_direct_sum(Matrix::zero(2, 2), u, v);
    REQUIRE(solution(zero));
    CHECK(solution(zero)->first.is_zero());
    CHECK(solution(zero)->second.is_zero());

    auto outside = split_across_direct_sum(e(2, 3), image(e(0, 3)), image(e(1, 3)));
    CHECK(error_of(outside) == SolveError::NoSolution);
}

TEST_CASE("subspace properties on random inputs") {
    Rng rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = rng.uniform(1, 5);
        const Matrix a = oracle::random_low_rank(rng, n, rng.uniform(0, 4), rng.uniform(0, 3), 3);
        const Matrix b = oracle::random_low_rank(rng, n, rng.uniform(0, 4), rng.uniform(0, 3), 3);
        const Subspace u = image(a);
        const Subspace v = image(b);
        CAPTURE(to_string(a));
        CAPTURE(to_string(b));

        // Canonicality under change of spanning set.
        const Matrix g = oracle::random_invertible(rng, a.cols(), 3);
        CHECK(image(a * g) == u);

        CHECK(sum(u, v).dim() + intersection(u, v).dim() == u.dim() + v.dim());
        CHECK(u.contains(intersection(u, v).basis()));
        CHECK(v.contains(intersection(u, v).basis()));

        const Subspace w = intersection(u, v);
        if (w.dim() == 0) {
            const Matrix s = u.basis() * oracle::random_matrix(rng, u.dim(), 2, 3) -
                             v.basis() * oracle::random_matrix(rng, v.dim(), 2, 3);
            auto split = split_across_direct_sum(s, u, v);
            REQUIRE(solution(split));
            CHECK(solution(split)->first - solution(split)->second == s);
            CHECK(u.contains(solution(split)->first));
            CHECK(v.contains(solution(split)->second));

            auto c = coordinates_in(s, u.basis(), v.basis());
            REQUIRE(solution(c));
            CHECK(u.basis() * solution(c)->x + v.basis() * solution(c)->y == s);
        }
    }
}
