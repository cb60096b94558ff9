#include "qsp/heisenberg.hpp"

#include <random>
#include <stdexcept>

namespace qsp {

HeisElement heis_multiply(const TriAlgebra& alg, const HeisElement& a, const HeisElement& b) { return alg.mul(a, b); }

KCombination pi00_vee(const HeisElement& x) {
    KCombination r;
    for (auto& [m, c] : x.terms())
        if (m.x.empty() && m.y.empty()) r[m.lam] += c;
    for (auto it = r.begin(); it != r.end();) {
        if (it->second.is_zero()) it = r.erase(it);
        else ++it;
    }
    return r;
}

bool in_poly_cone(const Context& ctx, const Weight& lam) {
    for (int i = 0; i < ctx.n; ++i) {
        int t = ctx.tau[i];
        if (t == i) {
            if (lam[i] > 0) return false;
        } else if (i < t && lam[i] + lam[t] > 0) {
            return false;
        }
    }
    return true;
}

CycNum etilde_factor(const Context& ctx, const Word& a) {
    CycNum s(1L);
    for (size_t r = 0; r < a.size(); ++r)
        for (size_t q = r + 1; q < a.size(); ++q) s *= ctx.q_ij(a[r], a[q]);
    return s;
}

HeisElement kappa(const Context& ctx, const DoubleElement& x) {
    HeisElement r;
    for (auto& [m, c] : x.terms()) {
        Weight lam = m.lam + word_weight(m.x, ctx.n);
        if (!in_poly_cone(ctx, lam)) throw std::domain_error("kappa: element is not in U(chi)^poly");
        if (!ctx.in_lattice_theta(lam)) continue;
        r.add_term(Mono{m.x, lam, m.y}, c * Scalar(etilde_factor(ctx, m.x)));
    }
    return r;
}

DoubleElement b_generator(const TriAlgebra& U, const std::vector<Scalar>& c, int i) {
    const Context& ctx = U.context();
    DoubleElement b = U.y(i);
    b.add_term(Mono{Word{static_cast<std::uint8_t>(ctx.tau[i])}, -ctx.alpha(i), {}}, c.at(i));
    return b;
}

HeisElement bbar_generator(const TriAlgebra& H, const std::vector<Scalar>& c, int i) {
    const Context& ctx = H.context();
    HeisElement b = H.y(i);
    int t = ctx.tau[i];
    b.add_term(Mono{Word{static_cast<std::uint8_t>(t)}, ctx.alpha(t) - ctx.alpha(i), {}}, c.at(i));
    return b;
}

HeisElement bvee_generator(const TriAlgebra& V, const std::vector<Scalar>& c, int i) { return bbar_generator(V, c, i); }

namespace {

using PState = std::map<std::pair<Weight, Word>, Scalar>;

void add_state(PState& s, std::pair<Weight, Word> key, const Scalar& v) {
    if (v.is_zero()) return;
    auto it = s.find(key);
    if (it == s.end()) {
        s.emplace(std::move(key), v);
    } else {
        it->second += v;
        if (it->second.is_zero()) s.erase(it);
    }
}

// Right multiplication of K_lam F_b by B_j, keeping only terms that can still
// reach the pure-K part with `after` factors left to multiply.
PState step(const Context& ctx, const std::vector<Scalar>& c, const PState& in, int j, bool vee, size_t after) {
    PState out;
    int k = ctx.tau[j];
    Weight ak = ctx.alpha(k);
    Weight nu = vee ? ak - ctx.alpha(j) : -ctx.alpha(j);
    std::vector<std::pair<CycNum, Weight>> extras;
    if (vee) extras = {{CycNum(1L), -2 * ak}};
    else extras = {{CycNum(-1L), ak}, {CycNum(1L), -ak}};
    for (auto& [key, coef] : in) {
        const Weight& lam = key.first;
        const Word& b = key.second;
        if (b.size() + 1 <= after) {
            Word nb = b;
            nb.push_back(static_cast<std::uint8_t>(j));
            add_state(out, {lam, nb}, coef);
        }
        if (c.at(j).is_zero()) continue;
        if (b.size() == 0 || b.size() - 1 > after) continue;
        // absorb the E-letter at each matching position p
        CycNum pass(1L);
        for (size_t pp = b.size(); pp-- > 0;) {
            if (b[pp] == k) {
                Word rest;
                rest.insert(rest.end(), b.begin(), b.begin() + pp);
                Weight before = word_weight(rest, ctx.n);
                rest.insert(rest.end(), b.begin() + pp + 1, b.end());
                Weight drest = word_weight(rest, ctx.n);
                for (auto& [kap, nup] : extras) {
                    CycNum f = pass * kap * ctx.chi(nup, before) * ctx.chi(nu, drest);
                    add_state(out, {lam + nup + nu, rest}, coef * c[j] * Scalar(f));
                }
            }
            if (vee) pass *= ctx.q_inv(k, b[pp]);
        }
    }
    return out;
}

}  // namespace

KCombination pi00_of_polynomial(const Context& ctx, const std::vector<Scalar>& c, const FreeElement& p, bool vee) {
    KCombination total;
    // words in lexicographic order share prefixes with their predecessor
    std::vector<std::pair<Word, Scalar>> words(p.terms().begin(), p.terms().end());
    std::sort(words.begin(), words.end(), [](auto& a, auto& b) { return a.first < b.first; });
    std::vector<PState> stack;
    Word prev;
    for (auto& [w, coef] : words) {
        size_t lcp = 0;
        while (lcp < prev.size() && lcp < w.size() && prev[lcp] == w[lcp]) ++lcp;
        // the pruning depends on the total length, so prefixes are shared only between equal lengths
        if (prev.size() != w.size()) lcp = 0;
        if (stack.empty()) {
            PState s0;
            s0.emplace(std::make_pair(zero_weight(ctx.n), Word{}), Scalar(1L));
            stack.push_back(s0);
        }
        stack.resize(lcp + 1);
        for (size_t k = lcp; k < w.size(); ++k) stack.push_back(step(ctx, c, stack[k], w[k], vee, w.size() - k - 1));
        for (auto& [key, v] : stack[w.size()])
            if (key.second.empty()) total[key.first] += v * coef;
        prev = w;
    }
    for (auto it = total.begin(); it != total.end();) {
        if (it->second.is_zero()) it = total.erase(it);
        else ++it;
    }
    return total;
}

bool in_sym_cone(const Context& ctx, const Weight& lam) {
    for (int i = 0; i < ctx.n; ++i) {
        if (lam[i] < 0) return false;
        int t = ctx.tau[i];
        if (t == i) {
            if (lam[i] % 2) return false;
        } else if (lam[i] != lam[t]) {
            return false;
        }
    }
    return true;
}

namespace {

Weight relation_degree(const Context& ctx, const FreeElement& p) {
    if (p.is_zero()) throw std::invalid_argument("zero relation");
    if (!p.is_homogeneous(ctx.n)) throw std::invalid_argument("relation is not homogeneous: " + p.str());
    return word_weight(p.terms().begin()->first, ctx.n);
}

}  // namespace

std::vector<Constraint> condition_c(const Context& ctx, const std::vector<Scalar>& c, const std::vector<FreeElement>& relations) {
    std::vector<Constraint> out;
    for (size_t j = 0; j < relations.size(); ++j) {
        Weight lam = relation_degree(ctx, relations[j]);
        if (!in_sym_cone(ctx, lam)) continue;
        KCombination k = pi00_of_polynomial(ctx, c, relations[j], true);
        auto it = k.find(-lam);
        if (it != k.end() && !it->second.is_zero()) out.push_back(Constraint{static_cast<int>(j), it->second});
    }
    return out;
}

Scalar constraint_u_side(const Context& ctx, const std::vector<Scalar>& c, const FreeElement& p) {
    Weight lam = relation_degree(ctx, p);
    KCombination k = pi00_of_polynomial(ctx, c, p, false);
    auto it = k.find(-lam);
    return it == k.end() ? Scalar() : it->second;
}

bool bbar_independence_check(const Context& ctx, std::shared_ptr<const Reducer> red, const std::vector<Scalar>& c, int d, unsigned seed) {
    for (auto& x : c)
        if (!x.is_constant()) throw std::invalid_argument("bbar_independence_check needs numeric parameters");
    TriAlgebra H(ctx, Variant::Heis, red);
    std::vector<HeisElement> gens;
    for (int i = 0; i < ctx.n; ++i) gens.push_back(bbar_generator(H, c, i));
    // B-bar_J for all basis words, built by extending words of smaller length
    std::vector<std::pair<Word, HeisElement>> elems{{Word{}, H.one()}};
    std::map<Word, HeisElement> by_word{{Word{}, H.one()}};
    for (auto& mu : degrees_up_to(ctx.n, d)) {
        for (const Word& w : red->basis(mu, Side::F)) {
            Word pre(w.begin(), w.end() - 1);
            auto it = by_word.find(pre);
            HeisElement e;
            if (it != by_word.end()) {
                e = H.mul(it->second, gens[w.back()]);
            } else {
                e = H.one();
                for (auto l : w) e = H.mul(e, gens[l]);
            }
            by_word[w] = e;
            elems.emplace_back(w, e);
        }
    }
    // generators of the fixed lattice: alpha_i - alpha_tau(i) for i < tau(i)
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(2, 97);
    for (int attempt = 0; attempt < 3; ++attempt) {
        std::vector<mpq_class> t(ctx.n, mpq_class(1));
        for (int i = 0; i < ctx.n; ++i)
            if (i < ctx.tau[i]) t[i] = mpq_class(dist(rng), dist(rng));
        auto special = [&](const Weight& lam) {
            mpq_class v = 1;
            for (int i = 0; i < ctx.n; ++i) {
                if (i >= ctx.tau[i] || lam[i] == 0) continue;
                mpq_class base = lam[i] > 0 ? t[i] : mpq_class(1) / t[i];
                for (int e = 0; e < std::abs(lam[i]); ++e) v *= base;
            }
            return CycNum(v);
        };
        std::map<std::pair<Word, Word>, int> col;
        std::vector<std::map<int, CycNum>> rows;
        for (auto& [w, e] : elems) {
            std::map<int, CycNum> row;
            for (auto& [m, k] : e.terms()) {
                if (!ctx.in_lattice_theta(m.lam)) throw std::logic_error("B-bar product left the fixed lattice");
                auto key = std::make_pair(m.x, m.y);
                auto ci = col.find(key);
                int idx = ci == col.end() ? col.emplace(key, static_cast<int>(col.size())).first->second : ci->second;
                // E~_a K_lam = chi(lam, deg a)^-1 K_lam E~_a
                CycNum v = k.constant() * special(m.lam) * cyc_inverse(ctx.chi(m.lam, word_weight(m.x, ctx.n)));
                row[idx] += v;
            }
            rows.push_back(row);
        }
        Matrix M = zero_matrix(rows.size(), col.size());
        for (size_t r = 0; r < rows.size(); ++r)
            for (auto& [j, v] : rows[r]) M[r][j] = v;
        if (rank(M) == static_cast<int>(rows.size())) return true;
    }
    return false;
}

}  // namespace qsp
