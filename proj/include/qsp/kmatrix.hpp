/**
 * @file kmatrix.hpp
 * @brief Quasi R- and K-matrices as truncated tensors, the automorphisms
 *        R0 and K0 of tensor powers of U(chi), and the identity suites for
 *        them.
 *
 * All tensors live in U(chi)^{(x) m} with every leg in U order (the
 * B_c leg is stored through its image in U(chi)).  Infinite sums are cut
 * off by an integer grading  sum_l m_l * (|E-part| - |F-part|)  of the legs,
 * chosen per identity so that every infinite factor has nonnegative grade.
 * Products are then exact in all grades up to the bound.
 */
#pragma once

#include "qsp/coideal.hpp"

#include <string>

namespace qsp {

/// Grade multipliers, one per leg.
using LegGrading = std::vector<int>;

int tensor_grade(const MonoTuple& t, const LegGrading& g);
/// Weight of a U-ordered monomial: deg of the E-part minus deg of the F-part.
Weight mono_weight(const Context& ctx, const Mono& m);

/// Product a*b in U(chi)^{(x) m}, dropping every term of grade above bound.
Tensor graded_mul(const TriAlgebra& U, const Tensor& a, const Tensor& b, const LegGrading& g, int bound);
Tensor graded_mul(const TriAlgebra& U, const std::vector<Tensor>& factors, const LegGrading& g, int bound);
Tensor truncate(const Tensor& t, const LegGrading& g, int bound);

/// Insert the legs of t at the given positions of an m-leg tensor; other legs are 1.
Tensor embed_legs(const Tensor& t, int m, const std::vector<int>& positions);
/// Apply Delta to one leg; the result has one more leg.
Tensor coproduct_leg(const DoubleHopf& H, const Tensor& t, int leg);
/// Swap two legs.
Tensor flip_legs(const Tensor& t, int i, int j);

/// R0 acting on legs (i, j):  chi(b, g) (K_{-g} .) (x) (K_{-b} .)  on weights (b, g).
Tensor apply_R0(const TriAlgebra& U, const Tensor& t, int i, int j);
/// K0^tau on legs (i, j):  chi(b, g - tau g) (K_{-g+tau g} .) (x) (K_{-b+tau b} .).
Tensor apply_K0tau(const TriAlgebra& U, const Tensor& t, int i, int j);
/// sigma-bar on one leg (numeric nonzero parameters).
Tensor apply_sigma_bar(const DoubleHopf& H, const std::vector<Scalar>& c, const Tensor& t, int leg);

/// One homogeneous component of the quasi K-matrix: sum coef[k][q] left[k] (x) E_{e_words[q]}.
struct QuasiKComponent {
    Weight degree;
    std::vector<Word> f_words, e_words;
    Matrix coef;                        // includes the sign (-1)^{|mu|}
    std::vector<DoubleElement> left;    // psi^{-1}(F_w) for w in f_words
};

struct TruncatedBitensor {
    int bound = 0;
    std::vector<QuasiKComponent> components;
    Tensor tensor() const;
};

/// Outcome of one identity on one input.
struct IdentityResult {
    std::string identity;
    std::string input;
    bool pass = true;
    int first_failing_degree = -1;
};
using Report = std::vector<IdentityResult>;
bool all_pass(const Report& r);

/**
 * Quasi R- and K-matrix data for (ctx, c) in the Nichols case.  The
 * identities are checked in all grades up to ctx.D; internally the Nichols
 * algebra is computed one degree further so that generator factors of
 * negative grade do not lose terms.
 */
class KMatrixSuite {
public:
    KMatrixSuite(const Context& ctx, std::vector<Scalar> c);

    int bound() const { return D_; }
    const Context& context() const { return ctx_; }
    const Coideal& coideal() const { return *B_; }
    const TriAlgebra& U() const { return B_->U(); }
    const DoubleHopf& hopf() const { return B_->hopf(); }
    const NicholsAlgebra& nichols() const { return *nich_; }
    bool sigma_bar_available() const;

    /// Theta = sum (-1)^{|mu|} F_mu (x) E_mu over |mu| <= h.
    Tensor theta(int h) const;
    /// R1 = Theta_21.
    Tensor theta21(int h) const;
    TruncatedBitensor quasi_k_components(int h) const;
    Tensor quasi_k(int h) const;

    /// K0 = K0^tau o (id (x) sigma-bar) on legs (i, j).
    Tensor apply_K0(const Tensor& t, int i, int j) const;

    /// Commutation of Theta with E_j and F_j.
    Report check_theta_relations() const;
    /// Intertwiner relations for B_i and K_lambda; K1 defaults to the computed quasi K-matrix.
    Report check_intertwiner(const Tensor* K1 = nullptr) const;
    Report check_coproduct_identities() const;
    /// Laws for R, Yang-Baxter, the K0^tau coproduct laws and, with sigma-bar, the laws for K and reflection.
    Report check_weak_quasitriangular() const;

    /// Generators of Z^n_theta: alpha_i - alpha_{tau i} for i < tau(i).
    std::vector<Weight> theta_lattice_generators() const;

private:
    IdentityResult compare(const std::string& id, const std::string& input, const Tensor& lhs, const Tensor& rhs,
                           const LegGrading& g) const;
    Tensor pure(std::initializer_list<TriElement> legs) const;
    Tensor sigma_bar_theta_K23(int h) const;
    Tensor sigma_bar_K_theta_K32(int h) const;
    std::vector<std::pair<std::string, Tensor>> u_generators(int legs, int at) const;

    Context ctx_;       // caller's bound
    int D_;
    std::vector<Scalar> c_;
    std::shared_ptr<NicholsAlgebra> nich_;
    std::unique_ptr<Coideal> B_;
    mutable std::map<int, Tensor> theta_, quasi_;
    mutable std::map<Mono, TriElement, MonoLess> sbar_;
    mutable std::mutex m_;
};

/// Convenience wrappers.
TruncatedBitensor quasi_k(const Context& ctx, const std::vector<Scalar>& c);
Report check_intertwiner(const Context& ctx, const std::vector<Scalar>& c);
Report check_coproduct_identities(const Context& ctx, const std::vector<Scalar>& c);
Report check_weak_quasitriangular(const Context& ctx, const std::vector<Scalar>& c);

}  // namespace qsp
