#include "doctest.h"

#include "qsp/asc.hpp"

using namespace qsp;
using namespace qsp::asc;

TEST_CASE("small Al-Salam-Carlitz polynomials") {
    Scalar one(1L);
    CHECK(U(0) == one);
    CHECK(U(1) == v(X) - one - v(A));
    // U_2 = (x-1)(x-q) - (1+q) a (x-1) + q a^2
    CHECK(U(2) == (v(X) - one) * (v(X) - v(Q)) - (one + v(Q)) * v(A) * (v(X) - one) + v(Q) * v(A).pow(2));
    CHECK(q_binomial(4, 2) == one + v(Q) + Scalar(2L) * v(Q).pow(2) + v(Q).pow(3) + v(Q).pow(4));
    CHECK(q_derivative(v(X).pow(3)) == (one + v(Q) + v(Q).pow(2)) * v(X).pow(2));
    CHECK(q_derivative(one).is_zero());
}

TEST_CASE("the p_n family") {
    Scalar one(1L);
    Exps qi(NVARS, 0);
    qi[Q] = -1;
    Scalar q_inv = Scalar::monomial(qi, CycNum(1L));
    CHECK(p(0) == one);
    CHECK(p(1) == v(X) + q_inv);
    // p_2 = (x + t q^-4 D_q + q^-2)(x + q^-1)
    CHECK(p(2) == (v(X) + q_inv * q_inv) * (v(X) + q_inv) + v(T) * q_inv.pow(4));
}

TEST_CASE("backward shift recursion") {
    for (int n = 1; n <= 8; ++n) CHECK(backward_shift_defect(n).is_zero());
}

TEST_CASE("closed form of p_n") {
    for (int n = 0; n <= 6; ++n) CHECK(closed_form_defect(n).is_zero());
}

TEST_CASE("value at zero for q a root of unity") {
    for (int M : {2, 3, 5}) {
        CHECK(root_of_unity_defect(M, make_root(2 * M, 1)).is_zero());
        if (M % 2) CHECK(root_of_unity_defect(M, make_root(M, 1)).is_zero());
    }
    CHECK_THROWS(root_of_unity_defect(4, make_root(4, 1)));
}
