// Shared test contexts and brute-force helpers.
#pragma once

#include "qsp/bicharacter.hpp"
#include "qsp/freealg.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace testctx {

using namespace qsp;

inline Context rank1(int N, int e, int D = 4) { return Context::from_exponents(N, {{e}}, {0}, D); }

// Type A2 data q11 = q22 = z^2, q12 = z^-1.
inline Context sl3(int N, bool flip, int D = 4) {
    return Context::from_exponents(N, {{2, -1}, {-1, 2}}, flip ? std::vector<int>{1, 0} : std::vector<int>{0, 1}, D);
}

// Two disconnected vertices.
inline Context a1a1(int N, bool flip, int D = 4) {
    return Context::from_exponents(N, {{2, 0}, {0, 2}}, flip ? std::vector<int>{1, 0} : std::vector<int>{0, 1}, D);
}

// N = 24 with zeta = z^2: q11 = q22 = -zeta^2, q12 = zeta^(1/2) = z.
inline Context ufo8(int D = 4) { return Context::from_exponents(24, {{16, 1}, {1, 16}}, {1, 0}, D); }

// One even and one odd isotropic vertex: q11 = z^2, q12 = z^-1, q22 = -1.
inline Context super21(int N, int D = 4) {
    Context c;
    c.n = 2;
    c.N = N;
    c.q = {{make_root(N, 2), make_root(N, -1)}, {make_root(N, -1), CycNum(-1L)}};
    c.tau = {0, 1};
    c.D = D;
    c.validate();
    return c;
}

// <F_w, E_v> as a sum over letter-matching bijections: the k-th letter of v
// is matched to position pi(k) of w, and each pair k < k' with
// pi(k') < pi(k) contributes q_{v_k', v_k}.
inline CycNum brute_pairing(const Context& ctx, const Word& w, const Word& v) {
    if (w.size() != v.size()) return CycNum();
    std::vector<int> pi(w.size());
    std::iota(pi.begin(), pi.end(), 0);
    CycNum total;
    do {
        bool ok = true;
        for (size_t k = 0; k < v.size() && ok; ++k) ok = w[pi[k]] == v[k];
        if (!ok) continue;
        CycNum f(1L);
        for (size_t k = 0; k < v.size(); ++k)
            for (size_t k2 = k + 1; k2 < v.size(); ++k2)
                if (pi[k2] < pi[k]) f *= ctx.q_ij(v[k2], v[k]);
        total += f;
    } while (std::next_permutation(pi.begin(), pi.end()));
    return total;
}

inline Word random_word(std::mt19937& rng, int n, int len) {
    std::uniform_int_distribution<int> d(0, n - 1);
    Word w;
    for (int i = 0; i < len; ++i) w.push_back(static_cast<std::uint8_t>(d(rng)));
    return w;
}

}  // namespace testctx

#include "qsp/double.hpp"

namespace testctx {

inline TriElement random_element(std::mt19937& rng, const TriAlgebra& alg, int terms, int maxlen, int maxk = 1) {
    std::uniform_int_distribution<int> len(0, maxlen), kd(-maxk, maxk), cd(-2, 2);
    const Context& c = alg.context();
    TriElement r;
    for (int t = 0; t < terms; ++t) {
        Weight lam(c.n);
        for (auto& x : lam) x = kd(rng);
        Mono m{random_word(rng, c.n, len(rng)), lam, random_word(rng, c.n, len(rng))};
        int k = cd(rng);
        if (k == 0) k = 1;
        r.add_term(m, Scalar(static_cast<long>(k)));
    }
    return alg.normalize(r);
}

inline std::vector<Scalar> symbolic_c(int n) {
    std::vector<Scalar> c;
    for (int i = 0; i < n; ++i) c.push_back(Scalar::var(i, n));
    return c;
}

inline std::vector<Scalar> numeric_c(std::vector<long> v) {
    std::vector<Scalar> c;
    for (long x : v) c.push_back(Scalar(x));
    return c;
}

}  // namespace testctx
