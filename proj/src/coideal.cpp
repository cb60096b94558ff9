#include "qsp/coideal.hpp"

#include <stdexcept>

namespace qsp {

StarElement star_term(const Weight& lam, const Word& f, const Scalar& c) { return TriElement::mono(Mono{{}, lam, f}, c); }

Coideal::Coideal(const Context& ctx, std::shared_ptr<const Reducer> red, std::vector<Scalar> c)
    : ctx_(ctx), red_(std::move(red)), c_(std::move(c)), U_(ctx_, Variant::U, red_), R_(ctx_, Variant::URev, red_), hopf_(U_) {
    if (static_cast<int>(c_.size()) != ctx_.n) throw std::invalid_argument("need one parameter per vertex");
}

DoubleElement Coideal::B(int i) const { return b_generator(U_, c_, i); }

DoubleElement Coideal::B_word(const Word& w) const {
    {
        std::lock_guard<std::mutex> lk(m_);
        auto it = bword_.find(w);
        if (it != bword_.end()) return it->second;
    }
    DoubleElement r = w.empty() ? U_.one() : U_.mul(B_word(Word(w.begin(), w.end() - 1)), B(w.back()));
    std::lock_guard<std::mutex> lk(m_);
    return bword_.emplace(w, r).first->second;
}

DoubleElement Coideal::substitute_B(const StarElement& r) const {
    DoubleElement out;
    for (auto& [m, k] : r.terms()) {
        if (!m.x.empty()) throw std::invalid_argument("not an element of the partial bosonization");
        out += U_.mul(U_.K(m.lam), B_word(m.y)) * k;
    }
    return out;
}

StarElement Coideal::normalize(const StarElement& u) const { return U_.normalize(u); }

StarElement Coideal::psi(const DoubleElement& x) const {
    DoubleElement r = convert_order(U_, R_, x);
    StarElement out;
    for (auto& [m, k] : r.terms()) {
        // m = F_x K_lam E_y with E_y = s E~_y K_{deg y}
        if (!in_poly_cone(ctx_, m.lam + word_weight(m.y, ctx_.n))) throw std::domain_error("psi: element is not in U(chi)^poly");
        if (!m.y.empty() || !ctx_.in_lattice_theta(m.lam)) continue;
        out.add_term(Mono{{}, m.lam, m.x}, k * Scalar(ctx_.chi(m.lam, word_weight(m.x, ctx_.n))));
    }
    return out;
}

const std::vector<Constraint>& Coideal::constraints() const {
    {
        std::lock_guard<std::mutex> lk(m_);
        if (constraints_) return *constraints_;
    }
    std::vector<FreeElement> rels;
    if (auto nich = dynamic_cast<const NicholsAlgebra*>(red_.get())) {
        for (auto& mu : degrees_up_to(ctx_.n, ctx_.D))
            if (in_sym_cone(ctx_, mu))
                for (auto& f : degree_data(*nich, mu).kernel_f) rels.push_back(f);
    } else if (auto pres = dynamic_cast<const PreNicholsPresentation*>(red_.get())) {
        rels = pres->relations();
    }
    auto cons = condition_c(ctx_, c_, rels);
    std::lock_guard<std::mutex> lk(m_);
    if (!constraints_) constraints_ = cons;
    return *constraints_;
}

bool Coideal::condition_holds() const { return constraints().empty(); }

DoubleElement Coideal::psi_inverse(const StarElement& u0) const {
    if (!condition_holds()) throw std::domain_error("psi_inverse: the parameters violate condition (c)");
    StarElement u = normalize(u0);
    DoubleElement out;
    while (!u.is_zero()) {
        size_t top = 0;
        for (auto& [m, k] : u.terms()) top = std::max(top, m.y.size());
        DoubleElement lead;
        for (auto& [m, k] : u.terms())
            if (m.y.size() == top) {
                if (!ctx_.in_lattice_theta(m.lam)) throw std::invalid_argument("psi_inverse: K-exponent outside the fixed lattice");
                lead += U_.mul(U_.K(m.lam), B_word(m.y)) * k;
            }
        out += lead;
        StarElement next = u - psi(lead);
        for (auto& [m, k] : next.terms())
            if (m.y.size() >= top && top > 0) throw std::logic_error("psi_inverse: leading terms did not cancel");
        if (top == 0 && !next.is_zero()) throw std::logic_error("psi_inverse: degree-zero part did not cancel");
        u = next;
    }
    return out;
}

StarElement Coideal::star_left_generator(int i, const StarElement& v) const {
    int t = ctx_.tau[i];
    Weight ai = ctx_.alpha(i), nu = ctx_.alpha(t) - ai;
    Scalar base = c_[i] * Scalar(ctx_.q_ij(i, t));
    StarElement out;
    for (auto& [m, k] : v.terms()) {
        Scalar kk = k * Scalar(ctx_.chi(m.lam, ai));
        Word w{static_cast<std::uint8_t>(i)};
        w.insert(w.end(), m.y.begin(), m.y.end());
        out.add_term(Mono{{}, m.lam, w}, kk);
        if (c_[i].is_zero()) continue;
        for (auto& [dw, dk] : partial_left_word(ctx_, t, m.y)) out.add_term(Mono{{}, m.lam + nu, dw}, kk * base * Scalar(dk));
    }
    return normalize(out);
}

// F_b * F_d for arbitrary words, through F_b = F_i * F_b' - mu^L_{F_i}(F_b').
StarElement Coideal::word_star(const Word& b, const Word& d) const {
    auto key = std::make_pair(b, d);
    {
        std::lock_guard<std::mutex> lk(m_);
        auto it = star_.find(key);
        if (it != star_.end()) return it->second;
    }
    StarElement r;
    if (b.empty()) {
        r = normalize(star_term(zero_weight(ctx_.n), d));
    } else {
        int i = b[0];
        int t = ctx_.tau[i];
        Word rest(b.begin() + 1, b.end());
        r = star_left_generator(i, word_star(rest, d));
        if (!c_[i].is_zero()) {
            Weight nu = ctx_.alpha(t) - ctx_.alpha(i);
            Scalar base = c_[i] * Scalar(ctx_.q_ij(i, t));
            for (auto& [dw, dk] : partial_left_word(ctx_, t, rest)) {
                StarElement s = word_star(dw, d);
                for (auto& [m, k] : s.terms()) r.add_term(Mono{{}, m.lam + nu, m.y}, -(k * base * Scalar(dk)));
            }
        }
    }
    std::lock_guard<std::mutex> lk(m_);
    return star_.emplace(key, r).first->second;
}

StarElement Coideal::star_mul(const StarElement& u, const StarElement& v) const {
    StarElement out;
    for (auto& [a, ka] : u.terms())
        for (auto& [b, kb] : v.terms()) {
            if (!a.x.empty() || !b.x.empty()) throw std::invalid_argument("star_mul: not an element of the partial bosonization");
            Scalar k = ka * kb * Scalar(ctx_.chi(b.lam, word_weight(a.y, ctx_.n)));
            const StarElement& p = word_star(a.y, b.y);
            for (auto& [m, km] : p.terms()) out.add_term(Mono{{}, m.lam + a.lam + b.lam, m.y}, k * km);
        }
    return out;
}

const NicholsAlgebra& Coideal::nichols() const {
    auto nich = dynamic_cast<const NicholsAlgebra*>(red_.get());
    if (!nich) throw std::logic_error("this operation needs the Nichols quotient");
    return *nich;
}

namespace {

// Apply d^R_{a_1} o ... o d^R_{a_k} (the last letter acts first).
FreeElement apply_right_derivations(const Context& ctx, const Word& a, FreeElement f) {
    for (size_t r = a.size(); r-- > 0;) f = partial_right(ctx, a[r], f);
    return f;
}

// Apply d^L_{a_k} o ... o d^L_{a_1} (the first letter acts first).
FreeElement apply_left_derivations(const Context& ctx, const Word& a, FreeElement f) {
    for (auto l : a) f = partial_left(ctx, l, f);
    return f;
}

Word tau_word(const Context& ctx, const Word& w) {
    Word r;
    for (auto l : w) r.push_back(static_cast<std::uint8_t>(ctx.tau[l]));
    return r;
}

}  // namespace

const DoubleElement& Coideal::antipode_inv_k(const Word& e, const Weight& rho) const {
    auto key = std::make_pair(e, rho);
    {
        std::lock_guard<std::mutex> lk(m_);
        auto it = sinv_.find(key);
        if (it != sinv_.end()) return it->second;
    }
    DoubleElement r = U_.mul(hopf_.antipode_inv(U_.x_word(e)), U_.K(rho));
    std::lock_guard<std::mutex> lk(m_);
    return sinv_.emplace(key, r).first->second;
}

// f * g = sum_rho (-1)^|rho| (sigma-bar(F_rho) > f) K_rho [g < (S^-1(E_rho) K_rho)]
StarElement Coideal::twist(const Word& b, const Word& d) const {
    auto key = std::make_pair(b, d);
    {
        std::lock_guard<std::mutex> lk(m_);
        auto it = twist_.find(key);
        if (it != twist_.end()) return it->second;
    }
    const NicholsAlgebra& nich = nichols();
    int n = ctx_.n;
    Weight alpha = word_weight(b, n);
    FreeElement f = FreeElement::word(b, Side::F), g = FreeElement::word(d, Side::F);
    StarElement out;
    int top = static_cast<int>(std::min(b.size(), d.size()));
    for (auto& rho : degrees_up_to(n, top, true)) {
        Weight trho = ctx_.tau_weight(rho);
        if (!is_nonnegative(alpha - trho)) continue;
        ThetaComponent th = nich.theta_component(rho);
        Weight kdeg = rho - trho;
        for (size_t k = 0; k < th.f_words.size(); ++k) {
            const Word& w = th.f_words[k];
            FreeElement left = apply_right_derivations(ctx_, tau_word(ctx_, w), f);
            if (left.is_zero()) continue;
            // sigma-bar(F_w) = a_w K_rho E_{tau w}; K_rho acts on K_{-tau rho} by chi(tau rho, rho)
            Scalar lc = hopf_.a_coefficient(c_, w) * Scalar(ctx_.chi(trho, rho) * ctx_.chi(kdeg, alpha - trho));
            for (size_t q = 0; q < th.e_words.size(); ++q) {
                if (th.coef[k][q].is_zero()) continue;
                const DoubleElement& s = antipode_inv_k(th.e_words[q], rho);
                FreeElement right(Side::F);
                for (auto& [m, sk] : s.terms()) {
                    FreeElement part = apply_left_derivations(ctx_, m.x, g);
                    if (part.is_zero()) continue;
                    Weight gam = word_weight(d, n) - word_weight(m.x, n);
                    right += part * (sk * Scalar(ctx_.chi(gam, m.lam)));
                }
                if (right.is_zero()) continue;
                FreeElement prod = left * right;
                Scalar kq = lc * Scalar(th.coef[k][q]);
                for (auto& [pw, pk] : prod.terms()) out.add_term(Mono{{}, kdeg, pw}, kq * pk);
            }
        }
    }
    out = normalize(out);
    std::lock_guard<std::mutex> lk(m_);
    return twist_.emplace(key, out).first->second;
}

StarElement Coideal::star_mul_theta(const StarElement& u, const StarElement& v) const {
    StarElement out;
    for (auto& [a, ka] : u.terms())
        for (auto& [b, kb] : v.terms()) {
            if (!a.x.empty() || !b.x.empty()) throw std::invalid_argument("star_mul_theta: not an element of the partial bosonization");
            Scalar k = ka * kb * Scalar(ctx_.chi(word_weight(a.y, ctx_.n), b.lam));
            const StarElement p = twist(a.y, b.y);
            for (auto& [m, km] : p.terms()) out.add_term(Mono{{}, m.lam + a.lam + b.lam, m.y}, k * km);
        }
    return out;
}

// Delta_*(K_nu f) = sum (sigma-bar(F_lam) > f < E_mu) K_lam (x) K_nu F_mu K_{mu - alpha} E_lam
Tensor Coideal::delta_star(const StarElement& u) const {
    const NicholsAlgebra& nich = nichols();
    int n = ctx_.n;
    Tensor out(2);
    for (auto& [m, coef] : u.terms()) {
        if (!m.x.empty()) throw std::invalid_argument("delta_star: not an element of the partial bosonization");
        const Weight& nu = m.lam;
        Weight alpha = word_weight(m.y, n);
        int len = static_cast<int>(m.y.size());
        FreeElement f = FreeElement::word(m.y, Side::F);
        for (auto& mu : degrees_up_to(n, len, true)) {
            if (!is_nonnegative(alpha - mu)) continue;
            ThetaComponent tm = nich.theta_component(mu);
            CycNum smu = height(mu) % 2 ? CycNum(-1L) : CycNum(1L);
            for (size_t q = 0; q < tm.e_words.size(); ++q) {
                FreeElement g = apply_left_derivations(ctx_, tm.e_words[q], f);
                if (g.is_zero()) continue;
                Weight beta = alpha - mu;
                for (auto& lam : degrees_up_to(n, len - height(mu), true)) {
                    Weight tl = ctx_.tau_weight(lam);
                    if (!is_nonnegative(beta - tl)) continue;
                    ThetaComponent tl_c = nich.theta_component(lam);
                    CycNum sl = height(lam) % 2 ? CycNum(-1L) : CycNum(1L);
                    Weight kdeg = lam - tl;
                    for (size_t k = 0; k < tl_c.f_words.size(); ++k) {
                        const Word& w = tl_c.f_words[k];
                        FreeElement left = apply_right_derivations(ctx_, tau_word(ctx_, w), g);
                        if (left.is_zero()) continue;
                        Scalar lc = hopf_.a_coefficient(c_, w) * Scalar(ctx_.chi(tl, lam) * ctx_.chi(kdeg, beta - tl));
                        StarElement leg1;
                        for (auto& [pw, pk] : left.terms()) leg1.add_term(Mono{{}, nu + kdeg, pw}, pk);
                        leg1 = normalize(leg1);
                        for (size_t q2 = 0; q2 < tl_c.e_words.size(); ++q2) {
                            if (tl_c.coef[k][q2].is_zero()) continue;
                            for (size_t k2 = 0; k2 < tm.f_words.size(); ++k2) {
                                if (tm.coef[k2][q].is_zero()) continue;
                                DoubleElement leg2 = U_.mul(U_.mul(U_.mul(U_.K(nu), U_.y_word(tm.f_words[k2])), U_.K(mu - alpha)),
                                                            U_.x_word(tl_c.e_words[q2]));
                                Scalar kk = coef * lc * Scalar(sl * tl_c.coef[k][q2] * smu * tm.coef[k2][q]);
                                out += Tensor::pure({leg1, leg2}) * kk;
                            }
                        }
                    }
                }
            }
        }
    }
    return out;
}

std::vector<LegMul> Coideal::delta_star_legs() const {
    return {[this](const Mono& a, const Mono& b) { return star_mul(TriElement::mono(a), TriElement::mono(b)); },
            [this](const Mono& a, const Mono& b) { return U_.mul_mono(a, b); }};
}

StarElement relation_from(const Context& ctx, const std::vector<Scalar>& c, const FreeElement& p) {
    if (!p.is_homogeneous(ctx.n)) throw std::invalid_argument("relation is not homogeneous");
    Coideal free(ctx, std::make_shared<FreeReducer>(), c);
    Weight z = zero_weight(ctx.n);
    StarElement target;
    for (auto& [w, k] : p.terms()) target.add_term(Mono{{}, z, w}, k);
    StarElement r;
    while (!target.is_zero()) {
        size_t top = 0;
        for (auto& [m, k] : target.terms()) top = std::max(top, m.y.size());
        StarElement lead;
        for (auto& [m, k] : target.terms())
            if (m.y.size() == top) lead.add_term(m, k);
        r += lead;
        // K_lam x_J evaluated as K_lam F_j1 * ... * F_jl
        StarElement ev;
        for (auto& [m, k] : lead.terms()) {
            StarElement acc = star_term(m.lam, {}, k);
            for (auto l : m.y) acc = free.star_mul(acc, star_term(z, Word{l}));
            ev += acc;
        }
        target -= ev;
    }
    return r;
}

std::vector<GeneratedRelation> generate_relations(const Coideal& target, const std::vector<FreeElement>& relations) {
    std::vector<GeneratedRelation> out;
    for (auto& p : relations) {
        StarElement r = relation_from(target.context(), target.parameters(), p);
        bool ok = target.substitute_B(r).is_zero();
        out.push_back(GeneratedRelation{p, r, ok});
    }
    return out;
}

}  // namespace qsp
