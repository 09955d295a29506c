#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hadz/group.hpp"

using namespace hadz;

TEST_CASE("group params reject even or tiny t") {
    CHECK_THROWS_AS(GroupParams(4), std::invalid_argument);
    CHECK_THROWS_AS(GroupParams(2), std::invalid_argument);
    CHECK_THROWS_AS(GroupParams(1), std::invalid_argument);
    CHECK_NOTHROW(GroupParams(3));
    CHECK(GroupParams(7).order() == 28);
}

TEST_CASE("element of index: k = 4q + r with u1..u4 = 00,10,01,11") {
    GroupParams p(7);
    CHECK(element_of_index(1, p) == GroupElement{0, 0});
    CHECK(element_of_index(5, p) == GroupElement{1, 0});
    CHECK(element_of_index(28, p) == GroupElement{6, 3});
    CHECK_THROWS_AS(element_of_index(0, p), std::out_of_range);
    CHECK_THROWS_AS(element_of_index(29, p), std::out_of_range);
}

TEST_CASE("index of element and round trips") {
    GroupParams p5(5);
    CHECK(index_of_element(GroupElement{0, 0}, p5) == 1);
    CHECK(index_of_element(GroupElement{1, 1}, p5) == 6); // (1,(1,0))
    for (int k = 1; k <= p5.order(); ++k)
        CHECK(index_of_element(element_of_index(k, p5), p5) == k);
}

TEST_CASE("multiplication is componentwise") {
    GroupParams p(3);
    // (1,(1,0)) * (2,(1,1)) = (0,(0,1))
    GroupElement a{1, 1}, b{2, 3};
    CHECK(multiply(a, b, p) == GroupElement{0, 2});

    const GroupElement e{0, 0};
    for (int k = 1; k <= p.order(); ++k) {
        const GroupElement g = element_of_index(k, p);
        CHECK(multiply(g, e, p) == g);
        CHECK(multiply(g, g, p).u == 0); // Z_2^2 part squares away
        CHECK(multiply(g, inverse(g, p), p) == e);
    }
}

TEST_CASE("abelian and associative (exhaustive at t=3 and t=5)") {
    for (int t : {3, 5}) {
        GroupParams p(t);
        const int n = p.order();
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                CHECK(multiply_indices(a, b, p) == multiply_indices(b, a, p));
                for (int c = 1; c <= n; ++c) {
                    const int ab_c = multiply_indices(multiply_indices(a, b, p), c, p);
                    const int a_bc = multiply_indices(a, multiply_indices(b, c, p), p);
                    CHECK(ab_c == a_bc);
                }
            }
    }
}

TEST_CASE("residue convention: residue 0 is written 4") {
    CHECK(residue4(1) == 1);
    CHECK(residue4(4) == 4);
    CHECK(residue4(8) == 4);
    CHECK(residue4(27) == 3);
    CHECK(residue4(28) == 4);
}
