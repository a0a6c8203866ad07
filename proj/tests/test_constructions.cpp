#include <doctest.h>

#include "oracles.hpp"
#include "tricircle/closed_forms.hpp"
#include "tricircle/constructions.hpp"

using namespace tricircle;

TEST_SUITE("constructions") {
    TEST_CASE("linear labels are constant families") {
        const TripartiteSpec s(4, 5, 6);
        const DrawingLabels d = linear_labels(s);
        // target N (size 5): M precedes N, so y(M,N) = 5 and y(P,N) = 3
        CHECK(d.y_family(Circle::M, Circle::N).values == std::vector<int>(4, 5));
        CHECK(d.y_family(Circle::P, Circle::N).values == std::vector<int>(6, 3));
        // target P (size 6): N precedes P
        CHECK(d.y_family(Circle::N, Circle::P).values == std::vector<int>(5, 6));
        CHECK(d.y_family(Circle::M, Circle::P).values == std::vector<int>(4, 3));
        CHECK(d.x_family(Circle::P).values == std::vector<int>(6, 4));
        CHECK(cyclic_distance(5, 3, 5) == 5 / 2);
    }

    TEST_CASE("linear totals") {
        CHECK(total_count(linear_labels({2, 2, 2})).total == 3);
        CHECK(total_count(linear_labels({3, 3, 3})).total == 54);
        CHECK(total_count(linear_labels({4, 5, 6})).total == 576);
    }

    TEST_CASE("stripe model shape") {
        const StripeDrawing d = linear_stripe_model({2, 3, 4});
        CHECK_NOTHROW(validate(d));
        CHECK(d.stripes[0].kind == Stripe::Kind::circle);
        CHECK(d.stripes[1].kind == Stripe::Kind::bundle);
        CHECK(d.stripes[4].circle == Circle::P);
        // bundle MN carries all 6 MN edges on both sides
        CHECK(d.stripes[1].left.size() == 6);
        CHECK(d.stripes[1].right.size() == 6);
        // circle stripe of N: 6 arrivals + 2 top vertices on the left, 12 departures + 1 bottom vertex on the right
        CHECK(d.stripes[2].left.size() == 8);
        CHECK(d.stripes[2].right.size() == 13);
    }

    TEST_CASE("arrival labels") {
        // size 5: top vertices 1,2,3 (west to east), bottom 5,4 (west to east)
        CHECK(linear_arrival_label(5, 1) == 3);
        CHECK(linear_arrival_label(5, 3) == 1);
        CHECK(linear_arrival_label(5, 4) == 5);
        CHECK(linear_arrival_label(5, 5) == 4);
        for (int n = 1; n <= 9; ++n)
            for (int q = 1; q <= n; ++q) CHECK(linear_arrival_label(n, linear_arrival_label(n, q)) == q);
        CHECK_THROWS_AS(linear_arrival_label(3, 4), input_error);
    }

    TEST_CASE("stripe model counts") {
        CHECK(stripe_oracle(linear_stripe_model({1, 1, 1})) == 0);
        CHECK(stripe_oracle(linear_stripe_model({2, 2, 2})) == 3);
        CHECK(stripe_oracle(linear_stripe_model({4, 5, 6})) == 576);
    }

    TEST_CASE("K_{2,2,n} construction labels") {
        auto d = k22n_construction(3);
        CHECK(d.type == 1);
        CHECK(d.x == std::array<int, 4>{1, 3, 2, 1});
        CHECK(d.y == std::array<int, 4>{1, 3, 2, 1});
        d = k22n_construction(4);
        CHECK(d.x[1] == 4);
        CHECK(d.y[2] == 3);
        d = k22n_construction(5);
        CHECK(d.x[3] == 2);
        CHECK(d.y[3] == 2);
        CHECK_THROWS_AS(k22n_construction(2), input_error);
    }

    TEST_CASE("K_{2,2,n} red count") {
        CHECK(k22n_red_count(k22n_construction(5)) == 5);
        CHECK(k22n_red_count(k22n_construction(4)) == 1);
        K22nDrawing t2;
        t2.n = 6;
        t2.type = 2;
        CHECK(k22n_red_count(t2) == 13);
        t2.type = 3;
        CHECK(k22n_red_count(t2) == 13);
        K22nDrawing t4;
        t4.n = 6;
        t4.type = 4;
        t4.x = {2, 1, 1, 1};
        t4.y = {1, 5, 1, 1};
        CHECK(k22n_red_count(t4) == 2 * (1 + 4) + 6);
    }

    TEST_CASE("K_{2,2,n} green count") {
        CHECK(k22n_green_count(k22n_construction(3)) == 8);
        CHECK(k22n_green_count(k22n_construction(4)) == 16);
        K22nDrawing same;
        same.n = 3;
        CHECK(k22n_green_count(same) == 18);
    }

    TEST_CASE("K_{2,2,n} totals") {
        CHECK(k22n_total(k22n_construction(3)) == 9);
        CHECK(k22n_total(k22n_construction(4)) == 17);
        CHECK(k22n_total(k22n_construction(10)) == 137);
        CHECK(k22n_total(k22n_construction(5)) == 31);
    }

    TEST_CASE("K_{2,2,n} validation") {
        K22nDrawing d;
        d.n = 4;
        d.type = 5;
        CHECK_THROWS_AS(k22n_total(d), input_error);
        d.type = 1;
        d.x[2] = 0;
        CHECK_THROWS_AS(k22n_total(d), input_error);
        d.x[2] = 1;
        d.n = 2;
        CHECK_THROWS_AS(k22n_total(d), input_error);
    }
}
