/**
 * @file bicharacter.hpp
 * @brief Symmetric bicharacters on Z^n, the diagram involution tau and
 *        the fixed lattice of theta = -tau.
 */
#pragma once

#include "qsp/scalars.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qsp {

/// Element of Z^n in the basis of simple roots.
using Weight = std::vector<int>;

Weight zero_weight(int n);
Weight unit_weight(int n, int i);
Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator-(const Weight& a);
Weight operator*(int k, const Weight& a);
int height(const Weight& a);
bool is_zero(const Weight& a);
/// a <= b componentwise
bool weight_leq(const Weight& a, const Weight& b);
bool is_nonnegative(const Weight& a);
std::string weight_str(const Weight& a);

/// A word in the letters 0..n-1 (letter i stands for E_{i+1} or F_{i+1}).
using Word = std::vector<std::uint8_t>;

/// Canonical order: shorter words first, then lexicographic.
struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

Weight word_weight(const Word& w, int n);
std::string word_str(const Word& w);

class Context {
public:
    int n = 0;
    int N = 1;
    std::vector<std::vector<CycNum>> q;
    std::vector<int> tau;   // 0-based permutation
    int D = 6;

    /// Throws ContextError when q is not symmetric, tau is not an involution,
    /// or q is not tau-invariant.  Must be called after every change.
    void validate();

    CycNum chi(const Weight& lam, const Weight& mu) const;
    /// chi(lam, mu)^e for e in {+1, -1}
    CycNum chi_pow(const Weight& lam, const Weight& mu, int e) const;
    const CycNum& q_ij(int i, int j) const { return q[i][j]; }
    const CycNum& q_inv(int i, int j) const { return qinv_[i][j]; }

    Weight tau_weight(const Weight& lam) const;
    Weight theta(const Weight& lam) const;
    bool in_lattice_theta(const Weight& lam) const;
    Weight alpha(int i) const { return unit_weight(n, i); }

    /// Construct from q given by exponents of zeta_N: q_ij = zeta^{e_ij}.
    static Context from_exponents(int N, const std::vector<std::vector<int>>& e,
                                  const std::vector<int>& tau, int D = 6);

private:
    bool root_form_ = false;          // every q_ij is +-zeta^k
    std::vector<std::vector<long>> qexp_;
    std::vector<std::vector<int>> qsign_;
    std::vector<std::vector<CycNum>> qinv_;
};

CycNum chi(const Context& ctx, const Weight& lam, const Weight& mu);
Weight theta(const Context& ctx, const Weight& lam);
bool in_lattice_theta(const Context& ctx, const Weight& lam);

}  // namespace qsp
