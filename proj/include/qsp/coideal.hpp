/**
 * @file coideal.hpp
 * @brief The coideal subalgebra B_c, the projection psi onto the partial
 *        bosonization H_theta x U-, the two star products on it, the twisted
 *        coaction and the relation procedure.
 *
 * Elements of H_theta x U- are stored as TriElements in U order with an
 * empty E-part: the monomial {{}, lam, b} stands for K_lam F_b.
 */
#pragma once

#include "qsp/heisenberg.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>

namespace qsp {

using StarElement = TriElement;

StarElement star_term(const Weight& lam, const Word& f, const Scalar& c = Scalar(1L));

class Coideal {
public:
    Coideal(const Context& ctx, std::shared_ptr<const Reducer> red, std::vector<Scalar> c);
    Coideal(const Coideal&) = delete;
    Coideal& operator=(const Coideal&) = delete;

    const Context& context() const { return ctx_; }
    const std::vector<Scalar>& parameters() const { return c_; }
    const TriAlgebra& U() const { return U_; }
    const TriAlgebra& rev() const { return R_; }
    const DoubleHopf& hopf() const { return hopf_; }
    const Reducer& reducer() const { return *red_; }

    DoubleElement B(int i) const;
    /// B_{j1} ... B_{jk}.
    DoubleElement B_word(const Word& w) const;
    /// r(B) for a polynomial with H_theta coefficients on the left, stored as a StarElement.
    DoubleElement substitute_B(const StarElement& r) const;

    /// Reduce the F-words to the quotient basis.
    StarElement normalize(const StarElement& u) const;

    /// psi: U(chi)^poly -> H_theta x U-; x in U order.  Throws std::domain_error outside U(chi)^poly.
    StarElement psi(const DoubleElement& x) const;
    /// The preimage in B_c.  Throws std::domain_error when the parameters violate condition (c).
    DoubleElement psi_inverse(const StarElement& u) const;

    /// Star product through the recursion for mu^L.
    StarElement star_mul(const StarElement& u, const StarElement& v) const;
    /// F_i * v through the generator formula.
    StarElement star_left_generator(int i, const StarElement& v) const;
    /// Star product through the twist by the quasi R-matrix; needs the Nichols quotient.
    StarElement star_mul_theta(const StarElement& u, const StarElement& v) const;

    /// Twisted coaction; leg 1 in H_theta x U-, leg 2 in U(chi) (U order).  Needs the Nichols quotient.
    Tensor delta_star(const StarElement& u) const;
    /// Leg products (star, U(chi)) for tensors produced by delta_star.
    std::vector<LegMul> delta_star_legs() const;

    /**
     * Parameter constraints from condition (c): the Nichols kernel in the
     * degrees up to D, or the relations of a presentation.  Empty for the
     * free algebra.
     */
    const std::vector<Constraint>& constraints() const;
    bool condition_holds() const;

private:
    const NicholsAlgebra& nichols() const;
    StarElement word_star(const Word& b, const Word& d) const;
    StarElement twist(const Word& b, const Word& d) const;
    const DoubleElement& antipode_inv_k(const Word& e, const Weight& rho) const;

    Context ctx_;
    std::shared_ptr<const Reducer> red_;
    std::vector<Scalar> c_;
    TriAlgebra U_, R_;
    DoubleHopf hopf_;

    mutable std::mutex m_;
    mutable std::map<Word, DoubleElement, WordLess> bword_;
    mutable std::map<std::pair<Word, Word>, StarElement> star_;
    mutable std::map<std::pair<Word, Word>, StarElement> twist_;
    mutable std::map<std::pair<Word, Weight>, DoubleElement> sinv_;
    mutable std::optional<std::vector<Constraint>> constraints_;
};

/// Relations r_m with H_theta coefficients, one per input relation.
struct GeneratedRelation {
    FreeElement p;
    StarElement r;
    bool verified;   // r(B) = 0 in U(chi) for the quotient of the coideal
};

/**
 * Rewrite a homogeneous p as a star-polynomial r in the generators of the
 * free partial bosonization, descending in degree, so that p(F) = r(F, *).
 */
StarElement relation_from(const Context& ctx, const std::vector<Scalar>& c, const FreeElement& p);
/// relation_from for each p, with r(B) reduced in the algebra of target.
std::vector<GeneratedRelation> generate_relations(const Coideal& target, const std::vector<FreeElement>& relations);

}  // namespace qsp
