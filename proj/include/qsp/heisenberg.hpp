/**
 * @file heisenberg.hpp
 * @brief Heisenberg doubles, the projection kappa, and the parameter
 *        condition for the coideal subalgebras B_c.
 */
#pragma once

#include "qsp/double.hpp"

#include <map>

namespace qsp {

using HeisElement = TriElement;
using KCombination = std::map<Weight, Scalar>;

HeisElement heis_multiply(const TriAlgebra& alg, const HeisElement& a, const HeisElement& b);

/// Terms of x with empty E~- and F-part.
KCombination pi00_vee(const HeisElement& x);

/// True if K_lam lies in the monoid generated by K_i^-1 and K_i K_tau(i)^-1.
bool in_poly_cone(const Context& ctx, const Weight& lam);

/// s_mu with E_a = s_mu E~_a K_mu (mu = deg a); depends only on mu.
CycNum etilde_factor(const Context& ctx, const Word& a);

/**
 * kappa: U(chi)^poly -> Heis(chi).  Input in U order over the same
 * quotient; throws std::domain_error when x is not in U(chi)^poly.
 */
HeisElement kappa(const Context& ctx, const DoubleElement& x);

/// Generators B_i = F_i + c_i E_tau(i) K_i^-1 in U(chi).
DoubleElement b_generator(const TriAlgebra& U, const std::vector<Scalar>& c, int i);
/// B-bar_i = F_i + c_i E~_tau(i) K_tau(i) K_i^-1 in Heis(chi).
HeisElement bbar_generator(const TriAlgebra& H, const std::vector<Scalar>& c, int i);
/// B-vee_i = F_i + c_i E~_tau(i) K_tau(i) K_i^-1 in the negative Heisenberg double.
HeisElement bvee_generator(const TriAlgebra& V, const std::vector<Scalar>& c, int i);

/**
 * Pure-K part of p(B) evaluated in U(chi) (vee = false) or of p(B-vee) in
 * the negative Heisenberg double (vee = true).  The evaluation runs in the
 * free algebras and discards, as soon as they appear, terms that can no
 * longer contribute: terms with a nonempty E- or E~-part, and terms whose
 * F-part is longer than the number of remaining factors.
 */
KCombination pi00_of_polynomial(const Context& ctx, const std::vector<Scalar>& c, const FreeElement& p, bool vee);

/// True if lam lies in the monoid generated by alpha_i + alpha_tau(i).
bool in_sym_cone(const Context& ctx, const Weight& lam);

struct Constraint {
    int relation;
    Scalar value;   // coefficient of K_{-lambda}
};

/**
 * For each homogeneous relation p_j of degree lambda_j, the coefficient of
 * K_{-lambda_j} in pi00(p_j(B-vee)); relations with vanishing coefficient
 * are omitted.  Degrees outside the monoid generated by alpha_i +
 * alpha_tau(i) are skipped without evaluation.
 */
std::vector<Constraint> condition_c(const Context& ctx, const std::vector<Scalar>& c, const std::vector<FreeElement>& relations);

/// Same constraint computed on the U(chi) side: coefficient of K_{-lambda} in pi00 P_{-lambda}(p(B)).
Scalar constraint_u_side(const Context& ctx, const std::vector<Scalar>& c, const FreeElement& p);

/**
 * Left H_theta-linear independence of the elements B-bar_J for basis words
 * F_J with |J| <= d, tested after specializing H_theta at random rational
 * points (full rank after specialization implies full rank before).
 */
bool bbar_independence_check(const Context& ctx, std::shared_ptr<const Reducer> red, const std::vector<Scalar>& c, int d,
                     unsigned seed = 1);

}  // namespace qsp
