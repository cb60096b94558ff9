#include "qsp/bicharacter.hpp"

#include <numeric>
#include <sstream>

namespace qsp {

Weight zero_weight(int n) { return Weight(n, 0); }

Weight unit_weight(int n, int i) {
    Weight w(n, 0);
    w.at(i) = 1;
    return w;
}

Weight operator+(const Weight& a, const Weight& b) {
    Weight r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Weight operator-(const Weight& a, const Weight& b) {
    Weight r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Weight operator-(const Weight& a) {
    Weight r(a);
    for (auto& x : r) x = -x;
    return r;
}

Weight operator*(int k, const Weight& a) {
    Weight r(a);
    for (auto& x : r) x *= k;
    return r;
}

int height(const Weight& a) { return std::accumulate(a.begin(), a.end(), 0); }

bool is_zero(const Weight& a) {
    for (int x : a)
        if (x) return false;
    return true;
}

bool weight_leq(const Weight& a, const Weight& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool is_nonnegative(const Weight& a) {
    for (int x : a)
        if (x < 0) return false;
    return true;
}

std::string weight_str(const Weight& a) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    os << ")";
    return os.str();
}

Weight word_weight(const Word& w, int n) {
    Weight r(n, 0);
    for (auto l : w) ++r[l];
    return r;
}

std::string word_str(const Word& w) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << int(w[i]) + 1;
    os << "]";
    return os.str();
}

void Context::validate() {
    if (n < 1) throw ContextError("rank must be positive");
    if (N < 1) throw ContextError("cyclotomic order must be positive");
    if (static_cast<int>(q.size()) != n) throw ContextError("q must be n x n");
    for (auto& row : q)
        if (static_cast<int>(row.size()) != n) throw ContextError("q must be n x n");
    if (tau.empty()) {
        tau.resize(n);
        std::iota(tau.begin(), tau.end(), 0);
    }
    if (static_cast<int>(tau.size()) != n) throw ContextError("tau must have n entries");
    for (int i = 0; i < n; ++i) {
        if (tau[i] < 0 || tau[i] >= n) throw ContextError("tau entry out of range");
        if (tau[tau[i]] != i) throw ContextError("tau is not an involution");
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (q[i][j].is_zero()) throw ContextError("q entries must be nonzero");
            if (q[i][j] != q[j][i]) throw ContextError("q is not symmetric");
            if (q[tau[i]][tau[j]] != q[i][j]) throw ContextError("q is not tau-invariant");
            if (!q[i][j].is_rational() && q[i][j].order() != N)
                throw ContextError("q entry lives in a different cyclotomic field");
        }
    }
    if (D < 0) throw ContextError("degree bound must be nonnegative");
    qinv_.assign(n, std::vector<CycNum>(n));
    qexp_.assign(n, std::vector<long>(n, 0));
    qsign_.assign(n, std::vector<int>(n, 0));
    root_form_ = true;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            qinv_[i][j] = cyc_inverse(q[i][j]);
            bool found = false;
            for (long k = 0; k < N && !found; ++k) {
                CycNum r = make_root(N, k);
                if (r == q[i][j]) {
                    qexp_[i][j] = k;
                    found = true;
                } else if (-r == q[i][j]) {
                    qexp_[i][j] = k;
                    qsign_[i][j] = 1;
                    found = true;
                }
            }
            if (!found) root_form_ = false;
        }
    }
}

Context Context::from_exponents(int N, const std::vector<std::vector<int>>& e, const std::vector<int>& tau, int D) {
    Context c;
    c.n = static_cast<int>(e.size());
    c.N = N;
    c.q.assign(c.n, std::vector<CycNum>(c.n));
    for (int i = 0; i < c.n; ++i)
        for (int j = 0; j < c.n; ++j) c.q[i][j] = make_root(N, e[i][j]);
    c.tau = tau;
    c.D = D;
    c.validate();
    return c;
}

CycNum Context::chi(const Weight& lam, const Weight& mu) const {
    if (root_form_) {
        long e = 0;
        int s = 0;
        for (int i = 0; i < n; ++i) {
            if (!lam[i]) continue;
            for (int j = 0; j < n; ++j) {
                if (!mu[j]) continue;
                long m = static_cast<long>(lam[i]) * mu[j];
                e += qexp_[i][j] * m;
                if (qsign_[i][j]) s ^= static_cast<int>(m & 1);
            }
        }
        CycNum r = make_root(N, e);
        return s ? -r : r;
    }
    CycNum r(1L);
    for (int i = 0; i < n; ++i) {
        if (!lam[i]) continue;
        for (int j = 0; j < n; ++j) {
            if (!mu[j]) continue;
            r *= q[i][j].pow(static_cast<long>(lam[i]) * mu[j]);
        }
    }
    return r;
}

CycNum Context::chi_pow(const Weight& lam, const Weight& mu, int e) const {
    return e >= 0 ? chi(lam, mu) : chi(-lam, mu);
}

Weight Context::tau_weight(const Weight& lam) const {
    Weight r(n, 0);
    for (int i = 0; i < n; ++i) r[tau[i]] += lam[i];
    return r;
}

Weight Context::theta(const Weight& lam) const { return -tau_weight(lam); }

bool Context::in_lattice_theta(const Weight& lam) const { return theta(lam) == lam; }

CycNum chi(const Context& ctx, const Weight& lam, const Weight& mu) { return ctx.chi(lam, mu); }
Weight theta(const Context& ctx, const Weight& lam) { return ctx.theta(lam); }
bool in_lattice_theta(const Context& ctx, const Weight& lam) { return ctx.in_lattice_theta(lam); }

}  // namespace qsp
