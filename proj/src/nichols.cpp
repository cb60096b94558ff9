#include "qsp/nichols.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsp {

FreeElement Reducer::normal_form(const FreeElement& f) const {
    FreeElement r(f.side());
    WordTerms buf;
    for (auto& [w, c] : f.terms()) {
        buf.clear();
        if (reduce(w, f.side(), buf)) {
            for (auto& [w2, k] : buf) r.add_term(w2, c * k);
        } else {
            r.add_term(w, c);
        }
    }
    return r;
}

std::vector<Word> NicholsDegreeData::e_basis() const {
    std::vector<Word> b;
    for (int p : e_pivots) b.push_back(all_words[p]);
    return b;
}

std::vector<Word> NicholsDegreeData::f_basis() const {
    std::vector<Word> b;
    for (int p : f_pivots) b.push_back(all_words[p]);
    return b;
}

const NicholsDegreeData& NicholsAlgebra::degree_data(const Weight& mu) const {
    {
        std::lock_guard<std::mutex> lk(m_);
        auto it = cache_.find(mu);
        if (it != cache_.end()) return *it->second;
    }
    auto d = std::make_unique<NicholsDegreeData>();
    d->degree = mu;
    d->all_words = words_of_degree(mu);
    size_t m = d->all_words.size();
    for (size_t i = 0; i < m; ++i) d->index.emplace(d->all_words[i], static_cast<int>(i));
    d->gram = zero_matrix(m, m);
    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b) d->gram[a][b] = pairing_.pair(d->all_words[a], d->all_words[b]);

    Matrix re = d->gram;
    d->e_pivots = rref(re);
    Matrix rf = transpose(d->gram);
    d->f_pivots = rref(rf);
    size_t r = d->e_pivots.size();
    if (d->f_pivots.size() != r) throw std::logic_error("row and column ranks differ");

    d->e_coords.resize(m);
    d->f_coords.resize(m);
    for (size_t j = 0; j < m; ++j) {
        for (size_t k = 0; k < r; ++k) {
            if (!re[k][j].is_zero()) d->e_coords[j].emplace_back(static_cast<int>(k), re[k][j]);
            if (!rf[k][j].is_zero()) d->f_coords[j].emplace_back(static_cast<int>(k), rf[k][j]);
        }
    }
    auto is_piv = [](const std::vector<int>& p, int j) { return std::find(p.begin(), p.end(), j) != p.end(); };
    for (size_t j = 0; j < m; ++j) {
        if (!is_piv(d->e_pivots, static_cast<int>(j))) {
            FreeElement k = FreeElement::word(d->all_words[j], Side::E);
            for (auto& [p, c] : d->e_coords[j]) k.add_term(d->all_words[d->e_pivots[p]], Scalar(-c));
            d->kernel_e.push_back(k);
        }
        if (!is_piv(d->f_pivots, static_cast<int>(j))) {
            FreeElement k = FreeElement::word(d->all_words[j], Side::F);
            for (auto& [p, c] : d->f_coords[j]) k.add_term(d->all_words[d->f_pivots[p]], Scalar(-c));
            d->kernel_f.push_back(k);
        }
    }
    Matrix sub = zero_matrix(r, r);
    for (size_t k = 0; k < r; ++k)
        for (size_t q = 0; q < r; ++q) sub[k][q] = d->gram[d->f_pivots[k]][d->e_pivots[q]];
    d->dual_change = inverse(sub);

    std::lock_guard<std::mutex> lk(m_);
    auto it = cache_.find(mu);
    if (it != cache_.end()) return *it->second;
    return *cache_.emplace(mu, std::move(d)).first->second;
}

ThetaComponent NicholsAlgebra::theta_component(const Weight& mu) const {
    const NicholsDegreeData& d = degree_data(mu);
    ThetaComponent t;
    t.degree = mu;
    t.f_words = d.f_basis();
    t.e_words = d.e_basis();
    size_t r = t.f_words.size();
    CycNum sign = (height(mu) % 2) ? CycNum(-1L) : CycNum(1L);
    t.coef = zero_matrix(r, r);
    for (size_t k = 0; k < r; ++k)
        for (size_t q = 0; q < r; ++q) t.coef[k][q] = sign * d.dual_change[q][k];
    return t;
}

bool NicholsAlgebra::reduce(const Word& w, Side s, WordTerms& out) const {
    if (w.size() <= 1) return false;
    const NicholsDegreeData& d = degree_data(word_weight(w, ctx_.n));
    int j = d.index.at(w);
    const auto& piv = s == Side::E ? d.e_pivots : d.f_pivots;
    const auto& coords = s == Side::E ? d.e_coords[j] : d.f_coords[j];
    if (std::binary_search(piv.begin(), piv.end(), j)) return false;
    out.clear();
    for (auto& [k, c] : coords) out.emplace_back(d.all_words[piv[k]], c);
    return true;
}

std::vector<Word> NicholsAlgebra::basis(const Weight& mu, Side s) const {
    const NicholsDegreeData& d = degree_data(mu);
    return s == Side::E ? d.e_basis() : d.f_basis();
}

const NicholsDegreeData& degree_data(const NicholsAlgebra& alg, const Weight& mu) {
    if (height(mu) > alg.context().D) throw std::out_of_range("degree exceeds the context bound " + weight_str(mu));
    if (!is_nonnegative(mu)) throw std::out_of_range("degree must be in N^n: " + weight_str(mu));
    return alg.degree_data(mu);
}

std::vector<ThetaComponent> theta_truncated(const NicholsAlgebra& alg) {
    std::vector<ThetaComponent> out;
    for (auto& mu : degrees_up_to(alg.context().n, alg.context().D, true)) out.push_back(alg.theta_component(mu));
    return out;
}

// ---------------------------------------------------------------- presentations

PreNicholsPresentation::PreNicholsPresentation(int n, std::vector<FreeElement> relations) : n_(n), rels_(std::move(relations)) {
    for (auto& r : rels_) {
        if (r.is_zero()) throw std::invalid_argument("zero relation");
        if (!r.is_homogeneous(n_)) throw std::invalid_argument("relation is not homogeneous: " + r.str());
        for (auto& [w, c] : r.terms()) {
            if (!c.is_constant()) throw std::invalid_argument("relation coefficients must be numeric");
            for (auto l : w)
                if (l >= n_) throw std::invalid_argument("relation letter out of range");
        }
        Weight d = word_weight(r.terms().begin()->first, n_);
        if (height(d) < 2) throw std::invalid_argument("relation degree must have height at least 2");
        degs_.push_back(d);
    }
}

const PreNicholsPresentation::DegreeNF& PreNicholsPresentation::degree(const Weight& mu) const {
    {
        std::lock_guard<std::mutex> lk(m_);
        auto it = cache_.find(mu);
        if (it != cache_.end()) return *it->second;
    }
    auto nf = std::make_unique<DegreeNF>();
    std::vector<Word> words = words_of_degree(mu);
    // column 0 is the largest word
    std::reverse(words.begin(), words.end());
    std::map<Word, int> col;
    for (size_t i = 0; i < words.size(); ++i) col.emplace(words[i], static_cast<int>(i));
    Matrix rows;
    for (size_t j = 0; j < rels_.size(); ++j) {
        if (!weight_leq(degs_[j], mu)) continue;
        Weight rest = mu - degs_[j];
        for (const Word& W : words_of_degree(rest)) {
            for (size_t k = 0; k <= W.size(); ++k) {
                std::vector<CycNum> row(words.size());
                for (auto& [w, c] : rels_[j].terms()) {
                    Word full(W.begin(), W.begin() + k);
                    full.insert(full.end(), w.begin(), w.end());
                    full.insert(full.end(), W.begin() + k, W.end());
                    row[col.at(full)] += c.constant();
                }
                rows.push_back(std::move(row));
            }
        }
    }
    std::vector<int> piv = rref(rows);
    std::vector<bool> is_lead(words.size(), false);
    for (size_t r = 0; r < piv.size(); ++r) {
        is_lead[piv[r]] = true;
        WordTerms t;
        for (size_t j = 0; j < words.size(); ++j)
            if (static_cast<int>(j) != piv[r] && !rows[r][j].is_zero()) t.emplace_back(words[j], -rows[r][j]);
        nf->rewrite.emplace(words[piv[r]], std::move(t));
    }
    for (size_t j = words.size(); j-- > 0;)
        if (!is_lead[j]) nf->basis.push_back(words[j]);

    std::lock_guard<std::mutex> lk(m_);
    auto it = cache_.find(mu);
    if (it != cache_.end()) return *it->second;
    return *cache_.emplace(mu, std::move(nf)).first->second;
}

bool PreNicholsPresentation::reduce(const Word& w, Side, WordTerms& out) const {
    if (w.size() < 2 || rels_.empty()) return false;
    const DegreeNF& d = degree(word_weight(w, n_));
    auto it = d.rewrite.find(w);
    if (it == d.rewrite.end()) return false;
    out = it->second;
    return true;
}

std::vector<Word> PreNicholsPresentation::basis(const Weight& mu, Side) const {
    if (rels_.empty()) return words_of_degree(mu);
    return degree(mu).basis;
}

FreeElement normal_form_prenichols(const PreNicholsPresentation& pres, const FreeElement& f, int D) {
    if (!f.is_homogeneous(pres.rank_n())) throw std::invalid_argument("normal_form_prenichols: input is not homogeneous");
    if (f.max_length() > D) throw std::out_of_range("normal_form_prenichols: input exceeds the degree bound");
    return pres.normal_form(f);
}

bool check_partial_stability(const Context& ctx, const PreNicholsPresentation& pres, int D) {
    for (size_t j = 0; j < pres.relations().size(); ++j) {
        const Weight& lam = pres.relation_degrees()[j];
        if (height(lam) > D) continue;
        for (const Weight& rest : degrees_up_to(ctx.n, D - height(lam), true)) {
            for (const Word& W : words_of_degree(rest)) {
                for (size_t k = 0; k <= W.size(); ++k) {
                    FreeElement u = FreeElement::word(Word(W.begin(), W.begin() + k), Side::F);
                    FreeElement v = FreeElement::word(Word(W.begin() + k, W.end()), Side::F);
                    FreeElement rel(Side::F);
                    for (auto& [w, c] : pres.relations()[j].terms()) rel.add_term(w, c);
                    FreeElement g = u * rel * v;
                    for (int i = 0; i < ctx.n; ++i) {
                        if (!pres.normal_form(partial_left(ctx, i, g)).is_zero()) return false;
                        if (!pres.normal_form(partial_right(ctx, i, g)).is_zero()) return false;
                    }
                }
            }
        }
    }
    return true;
}

std::vector<FreeElement> ideal_generators(const NicholsAlgebra& alg, int D) {
    const Context& ctx = alg.context();
    std::vector<FreeElement> gens;
    for (int h = 1; h <= D; ++h) {
        for (auto& mu : degrees_up_to(ctx.n, h)) {
            if (height(mu) != h) continue;
            for (auto& f : alg.degree_data(mu).kernel_f) {
                PreNicholsPresentation pres(ctx.n, gens);
                if (normal_form_prenichols(pres, f, h).is_zero()) continue;
                // monic in the smallest word
                CycNum lead = f.terms().begin()->second.constant();
                gens.push_back(f * Scalar(cyc_inverse(lead)));
            }
        }
    }
    return gens;
}

}  // namespace qsp
