/**
 * @file freealg.hpp
 * @brief Free Z^n-graded algebras on E- and F-letters, skew derivations
 *        and the skew-Hopf pairing between the two sides.
 */
#pragma once

#include "qsp/bicharacter.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace qsp {

enum class Side : std::uint8_t { E, F };

using WordTerm = std::pair<Word, CycNum>;
using WordTerms = std::vector<WordTerm>;

/// Element of the free algebra on one side: finite map word -> Scalar.
class FreeElement {
public:
    using Terms = std::map<Word, Scalar, WordLess>;

    FreeElement() = default;
    explicit FreeElement(Side s) : side_(s) {}
    static FreeElement word(const Word& w, Side s, const Scalar& coef = Scalar(1L));
    static FreeElement letter(int i, Side s) { return word(Word{static_cast<std::uint8_t>(i)}, s); }
    static FreeElement one(Side s) { return word(Word{}, s); }

    Side side() const { return side_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add_term(const Word& w, const Scalar& c);
    FreeElement& operator+=(const FreeElement& o);
    FreeElement& operator-=(const FreeElement& o);
    FreeElement& operator*=(const Scalar& s);
    friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
    friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
    friend FreeElement operator*(FreeElement a, const Scalar& s) { return a *= s; }
    friend FreeElement operator*(const Scalar& s, FreeElement a) { return a *= s; }
    /// Concatenation product.
    friend FreeElement operator*(const FreeElement& a, const FreeElement& b);
    bool operator==(const FreeElement& o) const;
    bool operator!=(const FreeElement& o) const { return !(*this == o); }

    /// Component of the given degree.
    FreeElement homogeneous(const Weight& mu, int n) const;
    /// True when all terms share a single degree.
    bool is_homogeneous(int n) const;
    /// Maximal word length, -1 for zero.
    int max_length() const;

    std::string str() const;

private:
    Side side_ = Side::F;
    Terms t_;
};

/// Left skew derivation of a single word, as (word, coefficient) pairs.
WordTerms partial_left_word(const Context& ctx, int i, const Word& w);
/// Right skew derivation of a single word.
WordTerms partial_right_word(const Context& ctx, int i, const Word& w);

FreeElement partial_left(const Context& ctx, int i, const FreeElement& f);
FreeElement partial_right(const Context& ctx, int i, const FreeElement& f);

/**
 * Memoized word-level pairing <F_w, E_v> computed by iterated left skew
 * derivations: <f, E_i e> = <d^L_i f, e>.
 */
class PairingTable {
public:
    explicit PairingTable(const Context& ctx) : ctx_(ctx) {}
    CycNum pair(const Word& f, const Word& e);
    const Context& context() const { return ctx_; }

private:
    Context ctx_;
    std::map<std::pair<Word, Word>, CycNum> memo_;
    std::mutex m_;
};

Scalar pairing(const Context& ctx, const FreeElement& f, const FreeElement& e);

/// All words of degree mu in canonical order.
std::vector<Word> words_of_degree(const Weight& mu);

/// Braided commutator ab - chi(deg a, deg b) ba of homogeneous elements.
FreeElement braided_commutator(const Context& ctx, const FreeElement& a, const FreeElement& b);

/// All degrees mu in N^n with 1 <= |mu| <= d (or 0 <= |mu| when include_zero).
std::vector<Weight> degrees_up_to(int n, int d, bool include_zero = false);

/**
 * Evaluate a noncommutative polynomial on images in an arbitrary algebra.
 * mul multiplies two target elements, scale multiplies by a Scalar and
 * one is the unit.  Words are evaluated left to right.
 */
template <class T, class Mul, class ScaleFn>
T substitute(const FreeElement& p, const std::vector<T>& images, const T& one, Mul mul, ScaleFn scale, T zero) {
    T total = zero;
    for (auto& [w, c] : p.terms()) {
        T acc = one;
        for (auto l : w) {
            if (l >= images.size()) throw std::invalid_argument("substitute: letter outside the image list");
            acc = mul(acc, images[l]);
        }
        total = total + scale(acc, c);
    }
    return total;
}

}  // namespace qsp
