#include "qsp/asc.hpp"

#include <stdexcept>

namespace qsp::asc {

Scalar v(AscVar which) { return Scalar::var(which, NVARS); }

Scalar substitute(const Scalar& f, AscVar which, const Scalar& value) {
    Scalar r;
    Scalar inv;
    bool have_inv = false;
    for (auto& [e, c] : f.terms()) {
        Exps rest = e;
        rest.resize(NVARS, 0);
        int k = rest[which];
        rest[which] = 0;
        Scalar term = Scalar::monomial(rest, c);
        if (k >= 0) {
            term *= value.pow(static_cast<unsigned>(k));
        } else {
            if (!have_inv) {
                if (value.terms().size() != 1) throw std::domain_error("cannot invert a sum");
                auto& [ve, vc] = *value.terms().begin();
                Exps ne = ve;
                ne.resize(NVARS, 0);
                for (auto& x : ne) x = -x;
                inv = Scalar::monomial(ne, cyc_inverse(vc));
                have_inv = true;
            }
            term *= inv.pow(static_cast<unsigned>(-k));
        }
        r += term;
    }
    return r;
}

Scalar q_binomial(int n, int k) {
    if (k < 0 || k > n) return Scalar();
    if (k == 0 || k == n) return Scalar(1L);
    // [n, k] = [n-1, k-1] + q^k [n-1, k]
    return q_binomial(n - 1, k - 1) + v(Q).pow(k) * q_binomial(n - 1, k);
}

Scalar U(int n) {
    Scalar sum;
    for (int k = 0; k <= n; ++k) {
        Scalar term = q_binomial(n, k) * (-v(A)).pow(k) * v(Q).pow(k * (k - 1) / 2);
        for (int j = 0; j < n - k; ++j) term = term * (v(X) - v(Q).pow(j));
        sum += term;
    }
    return sum;
}

Scalar q_derivative(const Scalar& f) {
    Scalar r;
    for (auto& [e, c] : f.terms()) {
        Exps ex = e;
        ex.resize(NVARS, 0);
        int k = ex[X];
        if (k == 0) continue;
        if (k < 0) throw std::domain_error("q-derivative of a negative power");
        ex[X] = k - 1;
        Scalar qk;   // [k]_q = 1 + q + ... + q^{k-1}
        for (int j = 0; j < k; ++j) qk += v(Q).pow(j);
        r += Scalar::monomial(ex, c) * qk;
    }
    return r;
}

namespace {
Scalar q_power(int e) {
    Exps ex(NVARS, 0);
    ex[Q] = e;
    return Scalar::monomial(ex, CycNum(1L));
}
}  // namespace

Scalar p(int n) {
    Scalar cur(1L);
    for (int m = 1; m <= n; ++m) cur = v(X) * cur + v(T) * q_power(-2 * m) * q_derivative(cur) + q_power(-m) * cur;
    return cur;
}

Scalar backward_shift_defect(int n) {
    if (n <= 0) throw std::invalid_argument("backward shift needs n > 0");
    Scalar un = U(n), um = U(n - 1);
    Scalar shifted = substitute(um, X, q_power(-1) * v(X));
    return -(q_power(1 - n) * v(X) * un) - v(A) * um + (v(X) - Scalar(1L)) * (v(X) - v(A)) * shifted;
}

Scalar closed_form_defect(int n) {
    Scalar lhs = substitute(p(n), T, (v(Q) - Scalar(1L)) * v(T1) * (v(T1) + Scalar(1L)));
    Exps t1inv(NVARS, 0);
    t1inv[T1] = -1;
    Scalar inv_t1 = Scalar::monomial(t1inv, CycNum(1L));
    Scalar u = substitute(U(n), A, -inv_t1 - Scalar(1L));
    u = substitute(u, X, q_power(n) * inv_t1 * v(X));
    return lhs - v(T1).pow(n) * q_power(-n * n) * u;
}

Scalar root_of_unity_defect(int M, const CycNum& zeta) {
    CycNum z2 = zeta * zeta;
    CycNum pw(1L);
    for (int k = 1; k <= M; ++k) {
        pw *= z2;
        if (k < M && pw == CycNum(1L)) throw std::invalid_argument("zeta^2 is not of order M");
    }
    if (pw != CycNum(1L)) throw std::invalid_argument("zeta^2 is not of order M");
    Scalar u = substitute(substitute(U(M), X, Scalar()), Q, Scalar(z2));
    CycNum sign = (M % 2) ? CycNum(-1L) : CycNum(1L);
    return u - Scalar(sign * zeta.pow(M * (M - 1))) * (Scalar(1L) + v(A).pow(M));
}

}  // namespace qsp::asc
