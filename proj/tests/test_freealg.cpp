#include "doctest.h"
#include "contexts.hpp"

using namespace qsp;
using namespace testctx;

namespace {
FreeElement F(std::initializer_list<int> w) {
    Word x;
    for (int l : w) x.push_back(static_cast<std::uint8_t>(l - 1));
    return FreeElement::word(x, Side::F);
}
FreeElement E(std::initializer_list<int> w) {
    Word x;
    for (int l : w) x.push_back(static_cast<std::uint8_t>(l - 1));
    return FreeElement::word(x, Side::E);
}
}  // namespace

TEST_CASE("skew derivations on small words") {
    Context c = sl3(5, true);
    CHECK(partial_left(c, 0, F({1, 2})) == F({2}));
    CHECK(partial_left(c, 1, F({1, 2})) == F({1}) * Scalar(c.q_ij(0, 1)));
    CHECK(partial_left(c, 0, F({2})).is_zero());
    CHECK(partial_right(c, 1, F({1, 2})) == F({1}));
    CHECK(partial_right(c, 0, F({1, 2})) == F({2}) * Scalar(c.q_ij(1, 0)));
    CHECK(partial_right(c, 0, FreeElement::one(Side::F)).is_zero());
}

TEST_CASE("Leibniz rules") {
    std::mt19937 rng(1);
    Context c = ufo8();
    for (int t = 0; t < 30; ++t) {
        Word a = random_word(rng, 2, 1 + t % 3), b = random_word(rng, 2, 1 + t % 4);
        FreeElement fa = FreeElement::word(a, Side::F), fb = FreeElement::word(b, Side::F);
        Weight mu = word_weight(a, 2), nu = word_weight(b, 2);
        for (int i = 0; i < 2; ++i) {
            FreeElement lhs = partial_left(c, i, fa * fb);
            FreeElement rhs = partial_left(c, i, fa) * fb + fa * partial_left(c, i, fb) * Scalar(c.chi(mu, c.alpha(i)));
            CHECK(lhs == rhs);
            FreeElement lhr = partial_right(c, i, fa * fb);
            FreeElement rhr = partial_right(c, i, fa) * fb * Scalar(c.chi(nu, c.alpha(i))) + fa * partial_right(c, i, fb);
            CHECK(lhr == rhr);
        }
    }
}

TEST_CASE("left and right derivations commute") {
    std::mt19937 rng(2);
    Context c = sl3(7, true);
    for (int t = 0; t < 40; ++t) {
        FreeElement f = FreeElement::word(random_word(rng, 2, 1 + t % 5), Side::F);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                CHECK(partial_left(c, i, partial_right(c, j, f)) == partial_right(c, j, partial_left(c, i, f)));
    }
}

TEST_CASE("pairing values") {
    Context c = sl3(5, true);
    CHECK(pairing(c, F({1}), E({1})) == Scalar(1L));
    CHECK(pairing(c, F({1, 2}), E({1, 2})) == Scalar(1L));
    CHECK(pairing(c, F({2, 1}), E({1, 2})) == Scalar(c.q_ij(1, 0)));
    CHECK(pairing(c, FreeElement::one(Side::F), FreeElement::one(Side::E)) == Scalar(1L));
    CHECK(pairing(c, F({1}), E({2})).is_zero());
    CHECK(pairing(c, F({1, 1}), E({1, 2})).is_zero());
}

TEST_CASE("pairing agrees with the bijection formula and the right-derivation chain") {
    for (Context c : {sl3(5, true), ufo8(), super21(5)}) {
        PairingTable t(c);
        for (auto& mu : degrees_up_to(2, 5)) {
            auto ws = words_of_degree(mu);
            for (auto& w : ws)
                for (auto& v : ws) {
                    CycNum p = t.pair(w, v);
                    CHECK(p == brute_pairing(c, w, v));
                    // <f, e E_i> = <d^R_i f, e>
                    Word vhead(v.begin(), v.end() - 1);
                    CycNum viaR;
                    for (auto& [w2, k] : partial_right_word(c, v.back(), w)) viaR += k * t.pair(w2, vhead);
                    CHECK(p == viaR);
                }
        }
    }
}

TEST_CASE("substitution is multiplicative") {
    std::vector<FreeElement> imgs = {F({1, 2}), F({2})};
    FreeElement p = FreeElement::word(Word{0, 1}, Side::F) + FreeElement::word(Word{1}, Side::F) * Scalar(3L);
    auto mul = [](const FreeElement& a, const FreeElement& b) { return a * b; };
    auto scale = [](const FreeElement& a, const Scalar& s) { return a * s; };
    FreeElement r = substitute(p, imgs, FreeElement::one(Side::F), mul, scale, FreeElement(Side::F));
    CHECK(r == F({1, 2, 2}) + F({2}) * Scalar(3L));
    FreeElement bad = FreeElement::word(Word{2}, Side::F);
    CHECK_THROWS(substitute(bad, imgs, FreeElement::one(Side::F), mul, scale, FreeElement(Side::F)));
}
