/**
 * @file double.hpp
 * @brief Algebras with a triangular decomposition X * H * Y over a pair of
 *        (quotients of) free algebras: the Drinfeld double U(chi) in both
 *        normal orders and the two Heisenberg doubles.  Also the Hopf
 *        structure of U(chi) and its automorphisms omega and sigma-bar.
 */
#pragma once

#include "qsp/nichols.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>

namespace qsp {

/// A monomial x * K_lam * y.
struct Mono {
    Word x;
    Weight lam;
    Word y;
};

struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const {
        WordLess wl;
        if (a.x != b.x) return wl(a.x, b.x);
        if (a.lam != b.lam) return a.lam < b.lam;
        if (a.y != b.y) return wl(a.y, b.y);
        return false;
    }
};

/// Linear combination of monomials x K y.
class TriElement {
public:
    using Terms = std::map<Mono, Scalar, MonoLess>;

    TriElement() = default;
    static TriElement mono(const Mono& m, const Scalar& c = Scalar(1L));

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    void add_term(const Mono& m, const Scalar& c);
    TriElement& operator+=(const TriElement& o);
    TriElement& operator-=(const TriElement& o);
    TriElement& operator*=(const Scalar& s);
    friend TriElement operator+(TriElement a, const TriElement& b) { return a += b; }
    friend TriElement operator-(TriElement a, const TriElement& b) { return a -= b; }
    friend TriElement operator*(TriElement a, const Scalar& s) { return a *= s; }
    friend TriElement operator*(const Scalar& s, TriElement a) { return a *= s; }
    TriElement operator-() const { return *this * Scalar(-1L); }
    bool operator==(const TriElement& o) const;
    bool operator!=(const TriElement& o) const { return !(*this == o); }

    /// Substitute numeric values for the parameters in every coefficient.
    TriElement substitute(const std::vector<Scalar>& values) const;
    /// Render using letters for the two sides, e.g. ("E","F").
    std::string str(const std::string& xname, const std::string& yname) const;

private:
    Terms t_;
};

enum class Variant {
    U,        ///< U(chi) in the order U+ H U-: x = E-word, y = F-word
    URev,     ///< U(chi) in the order U- H U+: x = F-word, y = E-word
    Heis,     ///< Heis(chi): x = E~-word, y = F-word, E~ F = q F E~ + q
    HeisVee   ///< negative Heisenberg double: E~ F = q F E~ - q K^-2
};

/**
 * Multiplication in one of the triangular algebras.  Words on each side
 * are kept as basis words of the given quotient; products are computed on
 * words and then reduced, which is legitimate because the quotients are by
 * biideals and hence stable under the straightening rules.
 */
class TriAlgebra {
public:
    TriAlgebra(const Context& ctx, Variant v, std::shared_ptr<const Reducer> red);

    const Context& context() const { return ctx_; }
    Variant variant() const { return v_; }
    const Reducer& reducer() const { return *red_; }
    std::shared_ptr<const Reducer> reducer_ptr() const { return red_; }
    Side x_side() const { return xs_; }
    Side y_side() const { return ys_; }

    TriElement one() const;
    TriElement scalar(const Scalar& s) const;
    TriElement K(const Weight& lam) const;
    /// Generator on the x-side (E, F or E~ depending on the variant).
    TriElement x(int i) const;
    TriElement y(int i) const;
    /// The element x_w (a word on the x-side) or y_w.
    TriElement x_word(const Word& w) const;
    TriElement y_word(const Word& w) const;

    TriElement mul(const TriElement& a, const TriElement& b) const;
    TriElement mul_mono(const Mono& a, const Mono& b) const;
    TriElement pow(const TriElement& a, unsigned e) const;
    /// Reduce all words into quotient-basis words.
    TriElement normalize(const TriElement& a) const;

    struct SwapTerm {
        Word u;
        Weight mu;
        Word t;
        CycNum coef;
    };
    /// y_Y * x_X rewritten as sum coef * x_u K_mu y_t.
    const std::vector<SwapTerm>& swap(const Word& Y, const Word& X) const;

private:
    std::vector<SwapTerm> swap_letter(std::uint8_t j, const Word& X) const;
    void reduce_into(const Word& w, Side s, const CycNum& c, std::vector<std::pair<Word, CycNum>>& out) const;

    Context ctx_;
    Variant v_;
    std::shared_ptr<const Reducer> red_;
    Side xs_, ys_;
    int sx_, sy_;   // K_lam w = chi(lam, deg w)^s w K_lam
    mutable std::map<std::pair<Word, Word>, std::vector<SwapTerm>> memo_;
    mutable std::mutex m_;
};

using DoubleElement = TriElement;

DoubleElement dd_multiply(const TriAlgebra& alg, const DoubleElement& a, const DoubleElement& b);

/// Projection onto U+ K_lam G- (G- generated by F_i K_i); input in U order.
DoubleElement project_P(const Context& ctx, const Weight& lam, const DoubleElement& x);
/// Projection onto U+_alpha H U-_{-beta}; input in U order.
DoubleElement project_pi(const Context& ctx, const Weight& alpha, const Weight& beta, const DoubleElement& x);

/// Change of normal order between U and URev (algebras must share the context and the reducer).
DoubleElement convert_order(const TriAlgebra& from, const TriAlgebra& to, const DoubleElement& x);

/// Tensor of several legs, each a monomial x K y.
using MonoTuple = std::vector<Mono>;
struct MonoTupleLess {
    bool operator()(const MonoTuple& a, const MonoTuple& b) const {
        MonoLess ml;
        for (size_t i = 0; i < a.size(); ++i) {
            if (ml(a[i], b[i])) return true;
            if (ml(b[i], a[i])) return false;
        }
        return false;
    }
};

class Tensor {
public:
    using Terms = std::map<MonoTuple, Scalar, MonoTupleLess>;
    Tensor() = default;
    explicit Tensor(int legs) : legs_(legs) {}
    static Tensor pure(const std::vector<TriElement>& factors);

    int legs() const { return legs_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    void add_term(const MonoTuple& m, const Scalar& c);
    Tensor& operator+=(const Tensor& o);
    Tensor& operator-=(const Tensor& o);
    Tensor& operator*=(const Scalar& s);
    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend Tensor operator*(Tensor a, const Scalar& s) { return a *= s; }
    bool operator==(const Tensor& o) const;
    bool operator!=(const Tensor& o) const { return !(*this == o); }
    /// Keep terms for which keep() holds.
    Tensor filter(const std::function<bool(const MonoTuple&)>& keep) const;
    std::string str() const;

private:
    int legs_ = 0;
    Terms t_;
};

/// Leg-wise multiplication rule for tensors.
using LegMul = std::function<TriElement(const Mono&, const Mono&)>;

/**
 * Product of tensors with per-leg multiplication.  When keep is given,
 * partial products violating it are discarded (used for truncation by a
 * grading that is additive and bounded below).
 */
Tensor tensor_mul(const Tensor& a, const Tensor& b, const std::vector<LegMul>& legs,
                  const std::function<bool(const MonoTuple&)>& keep = nullptr);

/// Apply linear maps leg-wise to a tensor.
using LegMap = std::function<TriElement(const Mono&)>;
Tensor tensor_apply(const Tensor& a, const std::vector<LegMap>& maps);

/// Coproduct, antipode and the algebra maps on U(chi) (U order).
class DoubleHopf {
public:
    explicit DoubleHopf(const TriAlgebra& U);
    const TriAlgebra& algebra() const { return U_; }

    /// Delta of an element, as a two-leg tensor.
    Tensor coproduct(const DoubleElement& x) const;
    Tensor coproduct_mono(const Mono& m) const;
    Scalar counit(const DoubleElement& x) const;
    DoubleElement antipode(const DoubleElement& x) const;
    DoubleElement antipode_inv(const DoubleElement& x) const;
    DoubleElement omega(const DoubleElement& x) const;
    /// sigma-bar as an algebra automorphism; c must be numeric and nonzero.
    DoubleElement sigma_bar(const std::vector<Scalar>& c, const DoubleElement& x) const;
    /// sigma-bar restricted to U- (F-words only), valid for symbolic c.
    DoubleElement sigma_bar_minus(const std::vector<Scalar>& c, const Word& f) const;
    /// The scalar a_mu with sigma-bar(F_w) = a_mu K_mu E_{tau(w)}.
    Scalar a_coefficient(const std::vector<Scalar>& c, const Word& f) const;

    std::vector<LegMul> leg_muls(int k) const;

private:
    TriElement eval_anti(const Mono& m, const std::function<TriElement(Side, int)>& gen,
                         const std::function<TriElement(const Weight&)>& kmap, bool anti) const;
    const TriAlgebra& U_;
    mutable std::map<std::pair<Word, int>, Tensor, std::less<>> dmemo_;
    mutable std::mutex m_;
};

}  // namespace qsp
