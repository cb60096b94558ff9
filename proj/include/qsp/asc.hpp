// Al-Salam-Carlitz I polynomials and the companion family p_n(x; t, q).
//
// Everything is a Laurent polynomial (qsp::Scalar) in the five variables
// listed in AscVar; unused variables simply do not occur.
#pragma once

#include "qsp/scalars.hpp"

namespace qsp::asc {

enum AscVar : int { X = 0, Q = 1, A = 2, T = 3, T1 = 4, NVARS = 5 };

Scalar v(AscVar which);

/// Substitute value for one variable.  Negative powers need a single-term value.
Scalar substitute(const Scalar& f, AscVar which, const Scalar& value);

/// Gaussian binomial coefficient in Q.
Scalar q_binomial(int n, int k);

/// U_n^{(a)}(x; q) from the explicit sum.
Scalar U(int n);

/// The q-derivative in X: (f(qx) - f(x)) / ((q - 1) x), computed monomialwise.
Scalar q_derivative(const Scalar& f);

/// p_0 = 1, p_n = (x + t q^{-2n} D_q + q^{-n}) p_{n-1}.
Scalar p(int n);

/// -q^{1-n} x U_n - a U_{n-1} + (x-1)(x-a) U_{n-1}(x/q); zero when the recursion holds.
Scalar backward_shift_defect(int n);

/// p_n(t -> (q-1) t1 (t1+1)) - t1^n q^{-n^2} U_n^{(-1/t1 - 1)}(q^n x / t1; q).
Scalar closed_form_defect(int n);

/// U_M^{(a)}(0; zeta^2) - (-1)^M zeta^{M(M-1)} (1 + a^M); zeta^2 must have order M.
Scalar root_of_unity_defect(int M, const CycNum& zeta);

}  // namespace qsp::asc
