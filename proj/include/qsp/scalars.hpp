/**
 * @file scalars.hpp
 * @brief Exact arithmetic in the cyclotomic field Q(zeta_N) and in
 *        (Laurent) polynomial rings over it.
 *
 * A CycNum stores phi(N) rational coordinates in the power basis
 * 1, z, ..., z^{phi(N)-1} and is always reduced modulo the N-th
 * cyclotomic polynomial.  Elements whose field has degree one (N = 1, 2)
 * are plain rationals and mix freely with any other N.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsp {

/// Raised when two values from incompatible contexts are combined.
struct ContextError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Euler phi.
int euler_phi(int N);

/// Integer coefficients of the N-th cyclotomic polynomial, constant term first.
const std::vector<mpz_class>& cyclotomic_poly(int N);

class CycNum {
public:
    CycNum();                       // zero (rational)
    CycNum(long v);                 // NOLINT rational integer
    CycNum(const mpq_class& v);     // NOLINT rational
    CycNum(int N, std::vector<mpq_class> coeffs);   // reduces the input

    int order() const { return N_; }
    int field_degree() const { return static_cast<int>(c_.size()); }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);
    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
    bool operator==(const CycNum& o) const;
    bool operator!=(const CycNum& o) const { return !(*this == o); }
    /// Total order used only for canonical container ordering.
    bool operator<(const CycNum& o) const;

    /// Power with integer (possibly negative) exponent.
    CycNum pow(long e) const;

    std::string str() const;

private:
    int N_;
    std::vector<mpq_class> c_;
    void promote_to(int N);
    friend CycNum cyc_inverse(const CycNum&);
};

/// zeta_N^k reduced modulo Phi_N.
CycNum make_root(int N, long k);

/// Multiplicative inverse; throws std::domain_error on zero.
CycNum cyc_inverse(const CycNum& a);

/// Parse an integer/rational polynomial literal in the symbol z, e.g. "1+z", "-z^4", "3/2*z^-1".
CycNum parse_cyc(const std::string& text, int N);

/// Exponent vector of a monomial in the parameter variables.
using Exps = std::vector<int>;

/**
 * Polynomial in nvars variables with CycNum coefficients.  Negative
 * exponents are permitted so that Laurent expressions are representable.
 * A Scalar with nvars == 0 is a constant and is compatible with every nvars.
 */
class Scalar {
public:
    using Terms = std::map<Exps, CycNum>;

    Scalar() = default;
    Scalar(const CycNum& v);        // NOLINT constant
    Scalar(long v) : Scalar(CycNum(v)) {}   // NOLINT

    /// The variable x_i in a ring with nvars variables.
    static Scalar var(int i, int nvars);
    static Scalar monomial(const Exps& e, const CycNum& coef);

    int nvars() const { return nvars_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    /// Constant term value (zero if absent).
    CycNum constant() const;
    /// Total degree (maximum of exponent sums), -1 for zero.
    int degree() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator*=(const CycNum& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator*(Scalar a, const CycNum& b) { return a *= b; }
    friend Scalar operator*(const CycNum& b, Scalar a) { return a *= b; }
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar pow(unsigned e) const;

    /// Substitute values for every variable (all exponents must be handled by the values' invertibility).
    Scalar substitute(const std::vector<Scalar>& values) const;
    /// Substitute only variable i.
    Scalar substitute_var(int i, const Scalar& value) const;

    /// Render with variable names (default c1, c2, ...).
    std::string str(const std::vector<std::string>& names = {}) const;

private:
    int nvars_ = 0;
    Terms t_;
    void adopt(int nv);
};

/// Ring arithmetic entry point with operation tag.
enum class ArithOp { Add, Mul };
Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op);

}  // namespace qsp
