/**
 * @file nichols.hpp
 * @brief Degreewise quotients of the free algebras: Nichols algebras as
 *        radicals of the pairing, and user presented pre-Nichols algebras
 *        handled by degree-truncated linear algebra.
 */
#pragma once

#include "qsp/freealg.hpp"
#include "qsp/linalg.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace qsp {

/**
 * A graded quotient of the free algebras on both sides.  Every homogeneous
 * word is either a basis word or rewrites to a combination of basis words
 * of the same degree.
 */
class Reducer {
public:
    virtual ~Reducer() = default;
    /// When w is not a basis word, store its expansion in out and return true.
    virtual bool reduce(const Word& w, Side s, WordTerms& out) const = 0;
    /// Basis words of degree mu in canonical order.
    virtual std::vector<Word> basis(const Weight& mu, Side s) const = 0;
    virtual bool is_free() const { return false; }

    /// Reduce a whole element.
    FreeElement normal_form(const FreeElement& f) const;
};

/// No relations at all.
class FreeReducer : public Reducer {
public:
    bool reduce(const Word&, Side, WordTerms&) const override { return false; }
    std::vector<Word> basis(const Weight& mu, Side) const override { return words_of_degree(mu); }
    bool is_free() const override { return true; }
};

struct NicholsDegreeData {
    Weight degree;
    std::vector<Word> all_words;
    std::map<Word, int> index;
    Matrix gram;                    // gram[w][v] = <F_w, E_v>
    std::vector<int> e_pivots;      // first independent columns
    std::vector<int> f_pivots;      // first independent rows
    /// expansions of every word in pivot words (indices into e_pivots / f_pivots)
    std::vector<std::vector<std::pair<int, CycNum>>> e_coords, f_coords;
    std::vector<FreeElement> kernel_e;  // right kernel: E-combinations pairing to zero
    std::vector<FreeElement> kernel_f;  // left kernel
    /// dual_change[q][k]: the E-element dual to F-pivot k is sum_q dual_change[q][k] E_{e_pivot q}
    Matrix dual_change;

    int rank() const { return static_cast<int>(e_pivots.size()); }
    std::vector<Word> e_basis() const;
    std::vector<Word> f_basis() const;
};

/// One homogeneous piece of the quasi R-matrix: sum coef[k][q] F_{f_words[k]} (x) E_{e_words[q]}.
struct ThetaComponent {
    Weight degree;
    std::vector<Word> f_words, e_words;
    Matrix coef;
};

/// The Nichols algebras of V^+ and V^- for a context, computed per degree.
class NicholsAlgebra : public Reducer {
public:
    explicit NicholsAlgebra(const Context& ctx) : ctx_(ctx), pairing_(ctx) {}

    const Context& context() const { return ctx_; }
    const NicholsDegreeData& degree_data(const Weight& mu) const;
    ThetaComponent theta_component(const Weight& mu) const;

    bool reduce(const Word& w, Side s, WordTerms& out) const override;
    std::vector<Word> basis(const Weight& mu, Side s) const override;
    CycNum pair(const Word& f, const Word& e) const { return pairing_.pair(f, e); }

private:
    Context ctx_;
    mutable PairingTable pairing_;
    mutable std::map<Weight, std::unique_ptr<NicholsDegreeData>> cache_;
    mutable std::mutex m_;
};

/// Degree data with the bound |mu| <= D enforced.
const NicholsDegreeData& degree_data(const NicholsAlgebra& alg, const Weight& mu);

/// Theta truncated at the context bound: components for all 0 <= |mu| <= D.
std::vector<ThetaComponent> theta_truncated(const NicholsAlgebra& alg);

/**
 * A minimal homogeneous generating set of the Nichols ideal in heights up
 * to D: kernel elements (on the F-side) that do not already lie in the
 * ideal generated by the earlier ones, visited in degree order.  Each
 * generator has coefficient 1 on its smallest word in canonical order.
 */
std::vector<FreeElement> ideal_generators(const NicholsAlgebra& alg, int D);

/**
 * Quotient by the two-sided ideal generated by homogeneous relations, the
 * same relations being imposed on the E- and the F-side.  Each degree is
 * handled by echelonizing the span of all u * p_j * v, with the largest
 * word (canonical order) leading.
 */
class PreNicholsPresentation : public Reducer {
public:
    PreNicholsPresentation(int n, std::vector<FreeElement> relations);

    const std::vector<FreeElement>& relations() const { return rels_; }
    const std::vector<Weight>& relation_degrees() const { return degs_; }
    int rank_n() const { return n_; }

    bool reduce(const Word& w, Side s, WordTerms& out) const override;
    std::vector<Word> basis(const Weight& mu, Side s) const override;

private:
    struct DegreeNF {
        std::map<Word, WordTerms> rewrite;   // leading word -> normal form
        std::vector<Word> basis;
    };
    const DegreeNF& degree(const Weight& mu) const;

    int n_;
    std::vector<FreeElement> rels_;
    std::vector<Weight> degs_;
    mutable std::map<Weight, std::unique_ptr<DegreeNF>> cache_;
    mutable std::mutex m_;
};

/// Normal form of f modulo the presentation; f must be homogeneous with height <= D.
FreeElement normal_form_prenichols(const PreNicholsPresentation& pres, const FreeElement& f, int D);

/**
 * Necessary condition for the relations to span a biideal: the ideal is
 * stable under every left skew derivation, checked in all degrees up to D.
 */
bool check_partial_stability(const Context& ctx, const PreNicholsPresentation& pres, int D);

}  // namespace qsp
