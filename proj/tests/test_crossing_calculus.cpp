#include <doctest.h>

#include "oracles.hpp"
#include "tricircle/constructions.hpp"
#include "tricircle/crossing_calculus.hpp"

using namespace tricircle;

TEST_SUITE("crossing_calculus") {
    TEST_CASE("binom") {
        CHECK(binom(0, 2) == 0);
        CHECK(binom(5, 2) == 10);
        CHECK(binom(4, 4) == 1);
        CHECK(binom(10000, 4) == 416416712497500LL);
        CHECK_THROWS_AS(binom(200, 100), std::overflow_error);
        CHECK_THROWS_AS(binom(-1, 1), input_error);
    }

    TEST_CASE("cyclic distance") {
        CHECK(cyclic_distance(5, 2, 4) == 2);
        CHECK(cyclic_distance(5, 4, 2) == 3);
        CHECK(cyclic_distance(7, 3, 3) == 0);
        CHECK_THROWS_AS(cyclic_distance(5, 0, 2), input_error);
        CHECK_THROWS_AS(cyclic_distance(5, 2, 6), input_error);
    }

    TEST_CASE("pair crossings") {
        CHECK(pair_crossings(5, 1, 3) == 4);
        CHECK(pair_crossings(5, 1, 1) == 10);
        CHECK(pair_crossings(4, 1, 3) == 2);
        CHECK_THROWS_AS(pair_crossings(4, 1, 5), input_error);
        for (int n = 1; n <= 12; ++n)
            for (int u = 1; u <= n; ++u)
                for (int v = 1; v <= n; ++v) CHECK(pair_crossings(n, u, v) == oracle::f(n, u, v));
    }

    TEST_CASE("minimum of f") {
        auto m7 = pair_crossings_min(7);
        CHECK(m7.value == 9);
        CHECK(m7.optimal_offsets == std::vector<int>{3, 4});
        CHECK(m7.gap == 2);
        auto m6 = pair_crossings_min(6);
        CHECK(m6.value == 6);
        CHECK(m6.optimal_offsets == std::vector<int>{3});
        CHECK(m6.gap == 1);
        auto m2 = pair_crossings_min(2);
        CHECK(m2.value == 0);
        CHECK(m2.optimal_offsets == std::vector<int>{1});
        CHECK(m2.gap == 1);
        CHECK_THROWS_AS(pair_crossings_min(1), input_error);
    }

    TEST_CASE("mono count") {
        CHECK(mono_count(2, std::vector<int>{1, 1}) == 1);
        CHECK(mono_count(2, std::vector<int>{2, 1}) == 0);
        CHECK(mono_count(5, std::vector<int>{1, 1, 1}) == 30);
        CHECK_THROWS_AS(mono_count(2, std::vector<int>{1, 3}), input_error);
    }

    TEST_CASE("bi count") {
        CHECK(bi_count(4, std::vector<int>{1}, std::vector<int>{3}) == 2);
        CHECK(bi_count(5, std::vector<int>{5, 5}, std::vector<int>{2, 2, 2}) == 24);
        CHECK(bi_count(3, std::vector<int>{1}, std::vector<int>{1}) == 3);
        const LabelVector ya{Circle::M, Circle::P, {1}};
        const LabelVector yb{Circle::N, Circle::M, {1}};
        CHECK_THROWS_AS(bi_count(3, ya, yb), input_error);
        const LabelVector yc{Circle::N, Circle::P, {2, 3}};
        CHECK(bi_count(3, ya, yc) == oracle::f(3, 1, 2) + oracle::f(3, 1, 3));
    }

    TEST_CASE("total count of the linear labels") {
        CHECK(total_count(linear_labels({3, 3, 3})).total == 54);
        CHECK(total_count(linear_labels({2, 2, 2})).total == 3);
        const auto b = total_count(linear_labels({4, 5, 6}));
        CHECK(b.total == 576);
        // per cyclic triple (M,N,P), (N,P,M), (P,M,N)
        CHECK(b.mono[0] + b.bi[0] == 180);
        CHECK(b.mono[1] + b.bi[1] == 210);
        CHECK(b.mono[2] + b.bi[2] == 186);
    }

    TEST_CASE("spec and label validation") {
        CHECK_THROWS_AS(TripartiteSpec(0, 1, 1), input_error);
        CHECK_THROWS_AS(TripartiteSpec(1, 1, -2), input_error);
        DrawingLabels d = linear_labels({2, 3, 4});
        CHECK_NOTHROW(validate(d));
        d.y[DrawingLabels::y_slot(Circle::N, Circle::P)].values[0] = 5;
        CHECK_THROWS_AS(total_count(d), input_error);
        d = linear_labels({2, 3, 4});
        d.x[0].values.pop_back();
        CHECK_THROWS_AS(total_count(d), input_error);
        d = linear_labels({2, 3, 4});
        std::swap(d.x[0], d.x[1]);
        CHECK_THROWS_AS(validate(d), input_error);
    }

    TEST_CASE("circle helpers") {
        CHECK(next(Circle::P) == Circle::M);
        CHECK(prev(Circle::M) == Circle::P);
        CHECK(third(Circle::M, Circle::P) == Circle::N);
        CHECK(DrawingLabels::y_slot(Circle::P, Circle::N) == 5);
    }
}
