#include "qsp/double.hpp"

#include <sstream>
#include <stdexcept>

namespace qsp {

// ---------------------------------------------------------------- TriElement

TriElement TriElement::mono(const Mono& m, const Scalar& c) {
    TriElement e;
    e.add_term(m, c);
    return e;
}

void TriElement::add_term(const Mono& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

TriElement& TriElement::operator+=(const TriElement& o) {
    for (auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

TriElement& TriElement::operator-=(const TriElement& o) {
    for (auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

TriElement& TriElement::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto it = t_.begin(); it != t_.end();) {
        it->second = it->second * s;
        if (it->second.is_zero()) it = t_.erase(it);
        else ++it;
    }
    return *this;
}

bool TriElement::operator==(const TriElement& o) const {
    if (t_.size() != o.t_.size()) return false;
    auto it = o.t_.begin();
    MonoLess ml;
    for (auto& [m, c] : t_) {
        if (ml(m, it->first) || ml(it->first, m)) return false;
        if (c != it->second) return false;
        ++it;
    }
    return true;
}

TriElement TriElement::substitute(const std::vector<Scalar>& values) const {
    TriElement r;
    for (auto& [m, c] : t_) r.add_term(m, c.substitute(values));
    return r;
}

std::string TriElement::str(const std::string& xname, const std::string& yname) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (auto l : m.x) os << "*" << xname << int(l) + 1;
        if (!qsp::is_zero(m.lam)) os << "*K" << weight_str(m.lam);
        for (auto l : m.y) os << "*" << yname << int(l) + 1;
    }
    return os.str();
}

// ---------------------------------------------------------------- TriAlgebra

TriAlgebra::TriAlgebra(const Context& ctx, Variant v, std::shared_ptr<const Reducer> red)
    : ctx_(ctx), v_(v), red_(std::move(red)) {
    if (!red_) red_ = std::make_shared<FreeReducer>();
    switch (v_) {
        case Variant::URev:
            xs_ = Side::F;
            ys_ = Side::E;
            sx_ = -1;
            sy_ = 1;
            break;
        default:
            xs_ = Side::E;
            ys_ = Side::F;
            sx_ = 1;
            sy_ = -1;
    }
}

TriElement TriAlgebra::one() const { return TriElement::mono(Mono{{}, zero_weight(ctx_.n), {}}); }

TriElement TriAlgebra::scalar(const Scalar& s) const { return TriElement::mono(Mono{{}, zero_weight(ctx_.n), {}}, s); }

TriElement TriAlgebra::K(const Weight& lam) const { return TriElement::mono(Mono{{}, lam, {}}); }

TriElement TriAlgebra::x(int i) const { return x_word(Word{static_cast<std::uint8_t>(i)}); }
TriElement TriAlgebra::y(int i) const { return y_word(Word{static_cast<std::uint8_t>(i)}); }

TriElement TriAlgebra::x_word(const Word& w) const {
    return normalize(TriElement::mono(Mono{w, zero_weight(ctx_.n), {}}));
}

TriElement TriAlgebra::y_word(const Word& w) const {
    return normalize(TriElement::mono(Mono{{}, zero_weight(ctx_.n), w}));
}

void TriAlgebra::reduce_into(const Word& w, Side s, const CycNum& c, std::vector<std::pair<Word, CycNum>>& out) const {
    WordTerms buf;
    if (red_->reduce(w, s, buf)) {
        for (auto& [w2, k] : buf) out.emplace_back(w2, c * k);
    } else {
        out.emplace_back(w, c);
    }
}

TriElement TriAlgebra::normalize(const TriElement& a) const {
    if (red_->is_free()) return a;
    TriElement r;
    WordTerms bx, by;
    for (auto& [m, c] : a.terms()) {
        bx.clear();
        by.clear();
        if (!red_->reduce(m.x, xs_, bx)) bx.emplace_back(m.x, CycNum(1L));
        if (!red_->reduce(m.y, ys_, by)) by.emplace_back(m.y, CycNum(1L));
        for (auto& [wx, kx] : bx)
            for (auto& [wy, ky] : by) r.add_term(Mono{wx, m.lam, wy}, c * (kx * ky));
    }
    return r;
}

std::vector<TriAlgebra::SwapTerm> TriAlgebra::swap_letter(std::uint8_t j, const Word& X) const {
    std::vector<SwapTerm> out;
    if (X.empty()) {
        out.push_back(SwapTerm{{}, zero_weight(ctx_.n), Word{j}, CycNum(1L)});
        return out;
    }
    std::uint8_t x1 = X[0];
    Word rest(X.begin() + 1, X.end());
    CycNum s = (v_ == Variant::Heis || v_ == Variant::HeisVee) ? ctx_.q_inv(x1, j) : CycNum(1L);
    for (auto& t : swap_letter(j, rest)) {
        Word u;
        u.reserve(t.u.size() + 1);
        u.push_back(x1);
        u.insert(u.end(), t.u.begin(), t.u.end());
        out.push_back(SwapTerm{std::move(u), t.mu, t.t, t.coef * s});
    }
    if (x1 == j) {
        Weight ai = ctx_.alpha(j);
        Weight drest = word_weight(rest, ctx_.n);
        std::vector<std::pair<CycNum, Weight>> extra;
        switch (v_) {
            case Variant::U:
                extra = {{CycNum(-1L), ai}, {CycNum(1L), -ai}};
                break;
            case Variant::URev:
                extra = {{CycNum(1L), ai}, {CycNum(-1L), -ai}};
                break;
            case Variant::Heis:
                extra = {{CycNum(-1L), zero_weight(ctx_.n)}};
                break;
            case Variant::HeisVee:
                extra = {{CycNum(1L), -2 * ai}};
                break;
        }
        for (auto& [k, nu] : extra) out.push_back(SwapTerm{rest, nu, {}, k * ctx_.chi_pow(nu, drest, sx_)});
    }
    return out;
}

const std::vector<TriAlgebra::SwapTerm>& TriAlgebra::swap(const Word& Y, const Word& X) const {
    auto key = std::make_pair(Y, X);
    {
        std::lock_guard<std::mutex> lk(m_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    std::map<Mono, CycNum, MonoLess> acc;
    auto add = [&](Word u, Weight mu, Word t, const CycNum& c) {
        if (c.is_zero()) return;
        Mono m{std::move(u), std::move(mu), std::move(t)};
        auto it = acc.find(m);
        if (it == acc.end()) acc.emplace(std::move(m), c);
        else it->second += c;
    };
    if (Y.empty()) {
        add(X, zero_weight(ctx_.n), {}, CycNum(1L));
    } else if (X.empty()) {
        add({}, zero_weight(ctx_.n), Y, CycNum(1L));
    } else {
        Word Yp(Y.begin(), Y.end() - 1);
        for (auto& st : swap_letter(Y.back(), X)) {
            if (Yp.empty()) {
                add(st.u, st.mu, st.t, st.coef);
                continue;
            }
            for (auto& s2 : swap(Yp, st.u)) {
                Word t = s2.t;
                t.insert(t.end(), st.t.begin(), st.t.end());
                CycNum c = st.coef * s2.coef;
                if (!is_zero(st.mu)) c *= ctx_.chi_pow(st.mu, word_weight(s2.t, ctx_.n), -sy_);
                add(s2.u, s2.mu + st.mu, std::move(t), c);
            }
        }
    }
    // reduce both sides into basis words
    std::map<Mono, CycNum, MonoLess> red;
    for (auto& [m, c] : acc) {
        if (c.is_zero()) continue;
        std::vector<std::pair<Word, CycNum>> bx, by;
        reduce_into(m.x, xs_, CycNum(1L), bx);
        reduce_into(m.y, ys_, CycNum(1L), by);
        for (auto& [wx, kx] : bx)
            for (auto& [wy, ky] : by) {
                Mono mm{wx, m.lam, wy};
                auto it = red.find(mm);
                CycNum v = c * kx * ky;
                if (it == red.end()) red.emplace(std::move(mm), v);
                else it->second += v;
            }
    }
    std::vector<SwapTerm> out;
    for (auto& [m, c] : red)
        if (!c.is_zero()) out.push_back(SwapTerm{m.x, m.lam, m.y, c});
    std::lock_guard<std::mutex> lk(m_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    return memo_.emplace(std::move(key), std::move(out)).first->second;
}

TriElement TriAlgebra::mul_mono(const Mono& a, const Mono& b) const {
    TriElement r;
    for (auto& st : swap(a.y, b.x)) {
        CycNum c = st.coef;
        if (!is_zero(a.lam) && !st.u.empty()) c *= ctx_.chi_pow(a.lam, word_weight(st.u, ctx_.n), sx_);
        if (!is_zero(b.lam) && !st.t.empty()) c *= ctx_.chi_pow(b.lam, word_weight(st.t, ctx_.n), -sy_);
        Word x = a.x;
        x.insert(x.end(), st.u.begin(), st.u.end());
        Word y = st.t;
        y.insert(y.end(), b.y.begin(), b.y.end());
        r.add_term(Mono{std::move(x), a.lam + st.mu + b.lam, std::move(y)}, Scalar(c));
    }
    return normalize(r);
}

TriElement TriAlgebra::mul(const TriElement& a, const TriElement& b) const {
    std::map<Mono, Scalar, MonoLess> acc;
    for (auto& [ma, ca] : a.terms()) {
        for (auto& [mb, cb] : b.terms()) {
            Scalar cab = ca * cb;
            for (auto& st : swap(ma.y, mb.x)) {
                CycNum c = st.coef;
                if (!is_zero(ma.lam) && !st.u.empty()) c *= ctx_.chi_pow(ma.lam, word_weight(st.u, ctx_.n), sx_);
                if (!is_zero(mb.lam) && !st.t.empty()) c *= ctx_.chi_pow(mb.lam, word_weight(st.t, ctx_.n), -sy_);
                Word x = ma.x;
                x.insert(x.end(), st.u.begin(), st.u.end());
                Word y = st.t;
                y.insert(y.end(), mb.y.begin(), mb.y.end());
                Mono m{std::move(x), ma.lam + st.mu + mb.lam, std::move(y)};
                Scalar v = cab * c;
                auto it = acc.find(m);
                if (it == acc.end()) acc.emplace(std::move(m), std::move(v));
                else it->second += v;
            }
        }
    }
    TriElement r;
    for (auto& [m, c] : acc) r.add_term(m, c);
    return normalize(r);
}

TriElement TriAlgebra::pow(const TriElement& a, unsigned e) const {
    TriElement r = one();
    for (unsigned i = 0; i < e; ++i) r = mul(r, a);
    return r;
}

DoubleElement dd_multiply(const TriAlgebra& alg, const DoubleElement& a, const DoubleElement& b) { return alg.mul(a, b); }

DoubleElement project_P(const Context& ctx, const Weight& lam, const DoubleElement& x) {
    DoubleElement r;
    for (auto& [m, c] : x.terms())
        if (m.lam - word_weight(m.y, ctx.n) == lam) r.add_term(m, c);
    return r;
}

DoubleElement project_pi(const Context& ctx, const Weight& alpha, const Weight& beta, const DoubleElement& x) {
    DoubleElement r;
    for (auto& [m, c] : x.terms())
        if (word_weight(m.x, ctx.n) == alpha && word_weight(m.y, ctx.n) == beta) r.add_term(m, c);
    return r;
}

DoubleElement convert_order(const TriAlgebra& from, const TriAlgebra& to, const DoubleElement& x) {
    DoubleElement r;
    auto word_in = [&](const Word& w, Side s) { return to.x_side() == s ? to.x_word(w) : to.y_word(w); };
    for (auto& [m, c] : x.terms()) {
        TriElement p = to.mul(to.mul(word_in(m.x, from.x_side()), to.K(m.lam)), word_in(m.y, from.y_side()));
        r += p * c;
    }
    return r;
}

// ---------------------------------------------------------------- Tensor

Tensor Tensor::pure(const std::vector<TriElement>& factors) {
    Tensor t(static_cast<int>(factors.size()));
    std::vector<std::pair<MonoTuple, Scalar>> cur{{MonoTuple{}, Scalar(1L)}};
    for (auto& f : factors) {
        std::vector<std::pair<MonoTuple, Scalar>> nxt;
        for (auto& [tup, c] : cur)
            for (auto& [m, k] : f.terms()) {
                MonoTuple tt = tup;
                tt.push_back(m);
                nxt.emplace_back(std::move(tt), c * k);
            }
        cur = std::move(nxt);
    }
    for (auto& [tup, c] : cur) t.add_term(tup, c);
    return t;
}

void Tensor::add_term(const MonoTuple& m, const Scalar& c) {
    if (c.is_zero()) return;
    if (legs_ == 0) legs_ = static_cast<int>(m.size());
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

Tensor& Tensor::operator+=(const Tensor& o) {
    for (auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
    for (auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

Tensor& Tensor::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto it = t_.begin(); it != t_.end();) {
        it->second = it->second * s;
        if (it->second.is_zero()) it = t_.erase(it);
        else ++it;
    }
    return *this;
}

bool Tensor::operator==(const Tensor& o) const {
    if (t_.size() != o.t_.size()) return false;
    auto it = o.t_.begin();
    MonoTupleLess ml;
    for (auto& [m, c] : t_) {
        if (ml(m, it->first) || ml(it->first, m)) return false;
        if (c != it->second) return false;
        ++it;
    }
    return true;
}

Tensor Tensor::filter(const std::function<bool(const MonoTuple&)>& keep) const {
    Tensor r(legs_);
    for (auto& [m, c] : t_)
        if (keep(m)) r.t_.emplace(m, c);
    return r;
}

std::string Tensor::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [tup, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (size_t l = 0; l < tup.size(); ++l) {
            os << (l ? " (x) " : " ");
            const Mono& m = tup[l];
            os << "[" << word_str(m.x) << "K" << weight_str(m.lam) << word_str(m.y) << "]";
        }
    }
    return os.str();
}

Tensor tensor_mul(const Tensor& a, const Tensor& b, const std::vector<LegMul>& legs,
                  const std::function<bool(const MonoTuple&)>& keep) {
    Tensor r(a.legs());
    size_t L = legs.size();
    for (auto& [ta, ca] : a.terms()) {
        for (auto& [tb, cb] : b.terms()) {
            std::vector<std::pair<MonoTuple, Scalar>> cur{{MonoTuple{}, ca * cb}};
            for (size_t l = 0; l < L; ++l) {
                TriElement p = legs[l](ta[l], tb[l]);
                std::vector<std::pair<MonoTuple, Scalar>> nxt;
                for (auto& [tup, c] : cur)
                    for (auto& [m, k] : p.terms()) {
                        MonoTuple tt = tup;
                        tt.push_back(m);
                        nxt.emplace_back(std::move(tt), c * k);
                    }
                cur = std::move(nxt);
                if (cur.empty()) break;
            }
            for (auto& [tup, c] : cur)
                if (!keep || keep(tup)) r.add_term(tup, c);
        }
    }
    return r;
}

Tensor tensor_apply(const Tensor& a, const std::vector<LegMap>& maps) {
    Tensor r(a.legs());
    for (auto& [ta, ca] : a.terms()) {
        std::vector<std::pair<MonoTuple, Scalar>> cur{{MonoTuple{}, ca}};
        for (size_t l = 0; l < maps.size(); ++l) {
            TriElement p = maps[l] ? maps[l](ta[l]) : TriElement::mono(ta[l]);
            std::vector<std::pair<MonoTuple, Scalar>> nxt;
            for (auto& [tup, c] : cur)
                for (auto& [m, k] : p.terms()) {
                    MonoTuple tt = tup;
                    tt.push_back(m);
                    nxt.emplace_back(std::move(tt), c * k);
                }
            cur = std::move(nxt);
        }
        for (auto& [tup, c] : cur) r.add_term(tup, c);
    }
    return r;
}

// ---------------------------------------------------------------- DoubleHopf

DoubleHopf::DoubleHopf(const TriAlgebra& U) : U_(U) {
    if (U.variant() != Variant::U) throw std::invalid_argument("DoubleHopf needs the U normal order");
}

std::vector<LegMul> DoubleHopf::leg_muls(int k) const {
    std::vector<LegMul> v;
    for (int i = 0; i < k; ++i) v.push_back([this](const Mono& a, const Mono& b) { return U_.mul_mono(a, b); });
    return v;
}

Tensor DoubleHopf::coproduct_mono(const Mono& m) const {
    const Context& ctx = U_.context();
    int n = ctx.n;
    auto word_coproduct = [&](const Word& w, Side s) -> Tensor {
        auto key = std::make_pair(w, s == Side::E ? 0 : 1);
        {
            std::lock_guard<std::mutex> lk(m_);
            auto it = dmemo_.find(key);
            if (it != dmemo_.end()) return it->second;
        }
        Tensor acc = Tensor::pure({U_.one(), U_.one()});
        auto lm = leg_muls(2);
        for (auto l : w) {
            Weight a = ctx.alpha(l);
            Tensor g(2);
            Mono gen = s == Side::E ? Mono{Word{l}, zero_weight(n), {}} : Mono{{}, zero_weight(n), Word{l}};
            if (s == Side::E) {
                g.add_term({gen, Mono{{}, zero_weight(n), {}}}, Scalar(1L));
                g.add_term({Mono{{}, a, {}}, gen}, Scalar(1L));
            } else {
                g.add_term({gen, Mono{{}, -a, {}}}, Scalar(1L));
                g.add_term({Mono{{}, zero_weight(n), {}}, gen}, Scalar(1L));
            }
            acc = tensor_mul(acc, g, lm);
        }
        std::lock_guard<std::mutex> lk(m_);
        dmemo_.emplace(key, acc);
        return acc;
    };
    Tensor k(2);
    k.add_term({Mono{{}, m.lam, {}}, Mono{{}, m.lam, {}}}, Scalar(1L));
    auto lm = leg_muls(2);
    return tensor_mul(tensor_mul(word_coproduct(m.x, Side::E), k, lm), word_coproduct(m.y, Side::F), lm);
}

Tensor DoubleHopf::coproduct(const DoubleElement& x) const {
    Tensor r(2);
    for (auto& [m, c] : x.terms()) r += coproduct_mono(m) * c;
    return r;
}

Scalar DoubleHopf::counit(const DoubleElement& x) const {
    Scalar s;
    for (auto& [m, c] : x.terms())
        if (m.x.empty() && m.y.empty()) s += c;
    return s;
}

TriElement DoubleHopf::eval_anti(const Mono& m, const std::function<TriElement(Side, int)>& gen,
                                 const std::function<TriElement(const Weight&)>& kmap, bool anti) const {
    std::vector<TriElement> factors;
    for (auto l : m.x) factors.push_back(gen(Side::E, l));
    factors.push_back(kmap(m.lam));
    for (auto l : m.y) factors.push_back(gen(Side::F, l));
    if (anti) std::reverse(factors.begin(), factors.end());
    TriElement r = U_.one();
    for (auto& f : factors) r = U_.mul(r, f);
    return r;
}

DoubleElement DoubleHopf::antipode(const DoubleElement& x) const {
    const Context& ctx = U_.context();
    auto gen = [&](Side s, int i) {
        Weight a = ctx.alpha(i);
        if (s == Side::E) return U_.mul(U_.K(-a), U_.x(i)) * Scalar(-1L);
        return U_.mul(U_.y(i), U_.K(a)) * Scalar(-1L);
    };
    auto km = [&](const Weight& l) { return U_.K(-l); };
    DoubleElement r;
    for (auto& [m, c] : x.terms()) r += eval_anti(m, gen, km, true) * c;
    return r;
}

DoubleElement DoubleHopf::antipode_inv(const DoubleElement& x) const {
    const Context& ctx = U_.context();
    auto gen = [&](Side s, int i) {
        Weight a = ctx.alpha(i);
        if (s == Side::E) return U_.mul(U_.x(i), U_.K(-a)) * Scalar(-1L);
        return U_.mul(U_.K(a), U_.y(i)) * Scalar(-1L);
    };
    auto km = [&](const Weight& l) { return U_.K(-l); };
    DoubleElement r;
    for (auto& [m, c] : x.terms()) r += eval_anti(m, gen, km, true) * c;
    return r;
}

DoubleElement DoubleHopf::omega(const DoubleElement& x) const {
    auto gen = [&](Side s, int i) { return s == Side::E ? U_.y(i) : U_.x(i); };
    auto km = [&](const Weight& l) { return U_.K(-l); };
    DoubleElement r;
    for (auto& [m, c] : x.terms()) r += eval_anti(m, gen, km, false) * c;
    return r;
}

DoubleElement DoubleHopf::sigma_bar(const std::vector<Scalar>& c, const DoubleElement& x) const {
    const Context& ctx = U_.context();
    std::vector<CycNum> cv(ctx.n), cinv(ctx.n);
    for (int i = 0; i < ctx.n; ++i) {
        if (static_cast<int>(c.size()) <= i || !c[i].is_constant() || c[i].is_zero())
            throw std::invalid_argument("sigma_bar needs numeric nonzero parameters");
        cv[i] = c[i].constant();
        cinv[i] = cyc_inverse(cv[i]);
    }
    auto gen = [&](Side s, int i) {
        int ti = ctx.tau[i];
        Weight a = ctx.alpha(i);
        if (s == Side::E) return U_.mul(U_.y(ti), U_.K(-a)) * Scalar(cinv[ti]);
        return U_.mul(U_.K(a), U_.x(ti)) * Scalar(cv[ti]);
    };
    auto km = [&](const Weight& l) { return U_.K(-ctx.tau_weight(l)); };
    DoubleElement r;
    for (auto& [m, k] : x.terms()) r += eval_anti(m, gen, km, false) * k;
    return r;
}

Scalar DoubleHopf::a_coefficient(const std::vector<Scalar>& c, const Word& f) const {
    const Context& ctx = U_.context();
    Scalar a(1L);
    CycNum s(1L);
    for (size_t r = 0; r < f.size(); ++r) {
        a *= c.at(ctx.tau[f[r]]);
        for (size_t q = 0; q < r; ++q) s *= ctx.q_inv(f[r], ctx.tau[f[q]]);
    }
    return a * s;
}

DoubleElement DoubleHopf::sigma_bar_minus(const std::vector<Scalar>& c, const Word& f) const {
    const Context& ctx = U_.context();
    Word tw;
    for (auto l : f) tw.push_back(static_cast<std::uint8_t>(ctx.tau[l]));
    TriElement e = TriElement::mono(Mono{tw, word_weight(f, ctx.n), {}}, a_coefficient(c, f));
    // K_mu E_tw: move K to the right of E
    TriElement r;
    for (auto& [m, k] : e.terms()) r.add_term(Mono{m.x, m.lam, {}}, k * Scalar(ctx.chi(m.lam, word_weight(m.x, ctx.n))));
    return U_.normalize(r);
}

}  // namespace qsp
