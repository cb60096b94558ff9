#include "qsp/kmatrix.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace qsp {

namespace {

Mono unit_mono(int n) { return Mono{{}, zero_weight(n), {}}; }

// Replace one leg of every term by the terms of f(leg).
template <class F>
Tensor map_leg(const Tensor& t, int leg, F&& f) {
    Tensor r(t.legs());
    for (auto& [tup, c] : t.terms()) {
        TriElement img = f(tup[leg]);
        for (auto& [m, k] : img.terms()) {
            MonoTuple nt = tup;
            nt[leg] = m;
            r.add_term(nt, c * k);
        }
    }
    return r;
}

std::string gen_name(const char* g, int i) { return fmt::format("{}{}", g, i + 1); }

}  // namespace

int tensor_grade(const MonoTuple& t, const LegGrading& g) {
    int s = 0;
    for (size_t l = 0; l < t.size(); ++l)
        if (g[l]) s += g[l] * (static_cast<int>(t[l].x.size()) - static_cast<int>(t[l].y.size()));
    return s;
}

Weight mono_weight(const Context& ctx, const Mono& m) { return word_weight(m.x, ctx.n) - word_weight(m.y, ctx.n); }

Tensor truncate(const Tensor& t, const LegGrading& g, int bound) {
    return t.filter([&](const MonoTuple& m) { return tensor_grade(m, g) <= bound; });
}

Tensor graded_mul(const TriAlgebra& U, const Tensor& a, const Tensor& b, const LegGrading& g, int bound) {
    if (a.legs() != b.legs()) throw std::invalid_argument("tensor leg count mismatch");
    // the grading is additive, so pairs can be discarded before multiplying
    std::vector<int> gb;
    gb.reserve(b.terms().size());
    for (auto& [tb, cb] : b.terms()) gb.push_back(tensor_grade(tb, g));
    Tensor r(a.legs());
    for (auto& [ta, ca] : a.terms()) {
        int ga = tensor_grade(ta, g);
        size_t k = 0;
        for (auto& [tb, cb] : b.terms()) {
            if (ga + gb[k++] > bound) continue;
            std::vector<std::pair<MonoTuple, Scalar>> cur{{MonoTuple{}, ca * cb}};
            for (int l = 0; l < a.legs() && !cur.empty(); ++l) {
                TriElement p = U.mul_mono(ta[l], tb[l]);
                std::vector<std::pair<MonoTuple, Scalar>> nxt;
                for (auto& [tup, c] : cur)
                    for (auto& [m, v] : p.terms()) {
                        MonoTuple tt = tup;
                        tt.push_back(m);
                        nxt.emplace_back(std::move(tt), c * v);
                    }
                cur = std::move(nxt);
            }
            for (auto& [tup, c] : cur) r.add_term(tup, c);
        }
    }
    return r;
}

Tensor graded_mul(const TriAlgebra& U, const std::vector<Tensor>& factors, const LegGrading& g, int bound) {
    if (factors.empty()) throw std::invalid_argument("empty product");
    Tensor acc = factors.front();
    for (size_t i = 1; i < factors.size(); ++i) acc = graded_mul(U, acc, factors[i], g, bound);
    return acc;
}

Tensor embed_legs(const Tensor& t, int m, const std::vector<int>& positions) {
    Tensor r(m);
    int n = t.terms().empty() ? 0 : static_cast<int>(t.terms().begin()->first[0].lam.size());
    for (auto& [tup, c] : t.terms()) {
        MonoTuple nt(m, unit_mono(n));
        for (size_t k = 0; k < positions.size(); ++k) nt[positions[k]] = tup[k];
        r.add_term(nt, c);
    }
    return r;
}

Tensor coproduct_leg(const DoubleHopf& H, const Tensor& t, int leg) {
    Tensor r(t.legs() + 1);
    for (auto& [tup, c] : t.terms()) {
        Tensor d = H.coproduct_mono(tup[leg]);
        for (auto& [dt, k] : d.terms()) {
            MonoTuple nt;
            for (int l = 0; l < t.legs(); ++l) {
                if (l == leg) {
                    nt.push_back(dt[0]);
                    nt.push_back(dt[1]);
                } else {
                    nt.push_back(tup[l]);
                }
            }
            r.add_term(nt, c * k);
        }
    }
    return r;
}

Tensor flip_legs(const Tensor& t, int i, int j) {
    Tensor r(t.legs());
    for (auto& [tup, c] : t.terms()) {
        MonoTuple nt = tup;
        std::swap(nt[i], nt[j]);
        r.add_term(nt, c);
    }
    return r;
}

namespace {

// chi(b, g') (K_{u} .) (x) (K_{v} .) on legs (i, j) with the data supplied per term.
template <class F>
Tensor apply_pair_map(const TriAlgebra& U, const Tensor& t, int i, int j, F&& data) {
    const Context& ctx = U.context();
    Tensor r(t.legs());
    for (auto& [tup, c] : t.terms()) {
        Weight b = mono_weight(ctx, tup[i]), g = mono_weight(ctx, tup[j]);
        auto [coef, ki, kj] = data(b, g);
        TriElement li = U.mul(U.K(ki), TriElement::mono(tup[i]));
        TriElement lj = U.mul(U.K(kj), TriElement::mono(tup[j]));
        for (auto& [mi, ci] : li.terms())
            for (auto& [mj, cj] : lj.terms()) {
                MonoTuple nt = tup;
                nt[i] = mi;
                nt[j] = mj;
                r.add_term(nt, c * ci * cj * Scalar(coef));
            }
    }
    return r;
}

}  // namespace

Tensor apply_R0(const TriAlgebra& U, const Tensor& t, int i, int j) {
    const Context& ctx = U.context();
    return apply_pair_map(U, t, i, j, [&](const Weight& b, const Weight& g) {
        return std::make_tuple(ctx.chi(b, g), -g, -b);
    });
}

Tensor apply_K0tau(const TriAlgebra& U, const Tensor& t, int i, int j) {
    const Context& ctx = U.context();
    return apply_pair_map(U, t, i, j, [&](const Weight& b, const Weight& g) {
        Weight gt = g - ctx.tau_weight(g), bt = b - ctx.tau_weight(b);
        return std::make_tuple(ctx.chi(b, gt), -gt, -bt);
    });
}

Tensor apply_sigma_bar(const DoubleHopf& H, const std::vector<Scalar>& c, const Tensor& t, int leg) {
    return map_leg(t, leg, [&](const Mono& m) { return H.sigma_bar(c, TriElement::mono(m)); });
}

Tensor TruncatedBitensor::tensor() const {
    Tensor r(2);
    for (auto& comp : components)
        for (size_t k = 0; k < comp.f_words.size(); ++k)
            for (size_t q = 0; q < comp.e_words.size(); ++q) {
                if (comp.coef[k][q].is_zero()) continue;
                Mono e{comp.e_words[q], zero_weight(static_cast<int>(comp.degree.size())), {}};
                for (auto& [m, v] : comp.left[k].terms()) r.add_term({m, e}, v * Scalar(comp.coef[k][q]));
            }
    return r;
}

bool all_pass(const Report& r) {
    return std::all_of(r.begin(), r.end(), [](const IdentityResult& x) { return x.pass; });
}

// ---------------------------------------------------------------- suite

KMatrixSuite::KMatrixSuite(const Context& ctx, std::vector<Scalar> c) : ctx_(ctx), D_(ctx.D), c_(std::move(c)) {
    if (static_cast<int>(c_.size()) != ctx.n) throw std::invalid_argument("need one parameter per vertex");
    Context wide = ctx;
    wide.D = ctx.D + 1;
    nich_ = std::make_shared<NicholsAlgebra>(wide);
    B_ = std::make_unique<Coideal>(wide, nich_, c_);
    if (!B_->condition_holds()) throw std::domain_error("the parameters violate condition (c)");
}

bool KMatrixSuite::sigma_bar_available() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_constant() && !s.is_zero(); });
}

Tensor KMatrixSuite::pure(std::initializer_list<TriElement> legs) const { return Tensor::pure(std::vector<TriElement>(legs)); }

std::vector<Weight> KMatrixSuite::theta_lattice_generators() const {
    std::vector<Weight> out;
    for (int i = 0; i < ctx_.n; ++i)
        if (i < ctx_.tau[i]) out.push_back(ctx_.alpha(i) - ctx_.alpha(ctx_.tau[i]));
    return out;
}

Tensor KMatrixSuite::theta(int h) const {
    {
        std::lock_guard<std::mutex> lk(m_);
        auto it = theta_.find(h);
        if (it != theta_.end()) return it->second;
    }
    Tensor r(2);
    Weight z = zero_weight(ctx_.n);
    for (auto& mu : degrees_up_to(ctx_.n, h, true)) {
        ThetaComponent tc = nich_->theta_component(mu);
        for (size_t k = 0; k < tc.f_words.size(); ++k)
            for (size_t q = 0; q < tc.e_words.size(); ++q)
                if (!tc.coef[k][q].is_zero())
                    r.add_term({Mono{{}, z, tc.f_words[k]}, Mono{tc.e_words[q], z, {}}}, Scalar(tc.coef[k][q]));
    }
    std::lock_guard<std::mutex> lk(m_);
    theta_.emplace(h, r);
    return r;
}

Tensor KMatrixSuite::theta21(int h) const { return flip_legs(theta(h), 0, 1); }

TruncatedBitensor KMatrixSuite::quasi_k_components(int h) const {
    TruncatedBitensor tb;
    tb.bound = h;
    for (auto& mu : degrees_up_to(ctx_.n, h, true)) {
        ThetaComponent tc = nich_->theta_component(mu);
        QuasiKComponent qc{mu, tc.f_words, tc.e_words, tc.coef, {}};
        for (auto& f : tc.f_words) qc.left.push_back(B_->psi_inverse(star_term(zero_weight(ctx_.n), f)));
        tb.components.push_back(std::move(qc));
    }
    return tb;
}

Tensor KMatrixSuite::quasi_k(int h) const {
    {
        std::lock_guard<std::mutex> lk(m_);
        auto it = quasi_.find(h);
        if (it != quasi_.end()) return it->second;
    }
    Tensor r = quasi_k_components(h).tensor();
    std::lock_guard<std::mutex> lk(m_);
    quasi_.emplace(h, r);
    return r;
}

Tensor KMatrixSuite::apply_K0(const Tensor& t, int i, int j) const {
    Tensor s = map_leg(t, j, [&](const Mono& m) {
        {
            std::lock_guard<std::mutex> lk(m_);
            auto it = sbar_.find(m);
            if (it != sbar_.end()) return it->second;
        }
        TriElement v = hopf().sigma_bar(c_, TriElement::mono(m));
        std::lock_guard<std::mutex> lk(m_);
        sbar_.emplace(m, v);
        return v;
    });
    return apply_K0tau(U(), s, i, j);
}

IdentityResult KMatrixSuite::compare(const std::string& id, const std::string& input, const Tensor& lhs,
                                     const Tensor& rhs, const LegGrading& g) const {
    IdentityResult res{id, input, true, -1};
    Tensor d = truncate(lhs - rhs, g, D_);
    if (d.is_zero()) return res;
    int first = INT_MAX;
    for (auto& [t, c] : d.terms()) first = std::min(first, tensor_grade(t, g));
    res.pass = false;
    res.first_failing_degree = first;
    return res;
}

// Leg-wise generators E_i, F_i, K_i placed in leg `at` of an m-leg tensor.
std::vector<std::pair<std::string, Tensor>> KMatrixSuite::u_generators(int legs, int at) const {
    std::vector<std::pair<std::string, Tensor>> out;
    const TriAlgebra& u = U();
    for (int i = 0; i < ctx_.n; ++i)
        for (auto [name, el] : {std::make_pair("E", u.x(i)), std::make_pair("F", u.y(i)), std::make_pair("K", u.K(ctx_.alpha(i)))}) {
            std::vector<TriElement> f(legs, u.one());
            f[at] = el;
            out.emplace_back(fmt::format("{}@{}", gen_name(name, i), at + 1), Tensor::pure(f));
        }
    return out;
}

Report KMatrixSuite::check_theta_relations() const {
    const TriAlgebra& u = U();
    Tensor th = theta(D_ + 1);
    LegGrading g{0, 1};
    Report rep;
    for (int j = 0; j < ctx_.n; ++j) {
        Weight a = ctx_.alpha(j);
        Tensor dE = pure({u.x(j), u.one()}) + pure({u.K(a), u.x(j)});
        Tensor rE = pure({u.x(j), u.one()}) + pure({u.K(-a), u.x(j)});
        rep.push_back(compare("theta-E", gen_name("j=", j), graded_mul(u, dE, th, g, D_), graded_mul(u, th, rE, g, D_), g));
        Tensor lF = pure({u.y(j), u.K(-a)}) + pure({u.one(), u.y(j)});
        Tensor rF = pure({u.y(j), u.K(a)}) + pure({u.one(), u.y(j)});
        rep.push_back(compare("theta-F", gen_name("j=", j), graded_mul(u, lF, th, g, D_), graded_mul(u, th, rF, g, D_), g));
    }
    return rep;
}

Report KMatrixSuite::check_intertwiner(const Tensor* K1) const {
    const TriAlgebra& u = U();
    Tensor K = K1 ? *K1 : quasi_k(D_ + 1);
    LegGrading g{0, 1};
    Report rep;
    for (int i = 0; i < ctx_.n; ++i) {
        int t = ctx_.tau[i];
        Weight ai = ctx_.alpha(i), at = ctx_.alpha(t);
        Tensor lhs = graded_mul(u, hopf().coproduct(B_->B(i)), K, g, D_);
        Tensor x = pure({B_->B(i), u.K(ai)}) + pure({u.one(), u.y(i)}) +
                   pure({u.K(ai - at), u.mul(u.x(t), u.K(ai))}) * (c_[t] * Scalar(ctx_.q_ij(i, t)));
        rep.push_back(compare("intertwiner-B", gen_name("B", i), lhs, graded_mul(u, K, x, g, D_), g));
    }
    for (auto& lam : theta_lattice_generators()) {
        Tensor dk = pure({u.K(lam), u.K(lam)});
        rep.push_back(compare("intertwiner-K", "K" + weight_str(lam), graded_mul(u, dk, K, g, D_), graded_mul(u, K, dk, g, D_), g));
    }
    return rep;
}

// sum (-1)^{|mu|} K_{mu - tau mu} (x) sigma-bar(F_mu) (x) E_mu
Tensor KMatrixSuite::sigma_bar_theta_K23(int h) const {
    Tensor r(3);
    const TriAlgebra& u = U();
    Tensor th = theta(h);
    for (auto& [tup, c] : th.terms()) {
        Weight mu = -mono_weight(ctx_, tup[0]);
        TriElement s = hopf().sigma_bar_minus(c_, tup[0].y);
        r += Tensor::pure({u.K(mu - ctx_.tau_weight(mu)), s, TriElement::mono(tup[1])}) * c;
    }
    return r;
}

// sum (-1)^{|mu|} K_{mu - tau mu} (x) E_mu K_{tau mu}^{-1} (x) K_mu^{-1} sigma-bar(F_mu)
Tensor KMatrixSuite::sigma_bar_K_theta_K32(int h) const {
    Tensor r(3);
    const TriAlgebra& u = U();
    Tensor th = theta(h);
    for (auto& [tup, c] : th.terms()) {
        Weight mu = -mono_weight(ctx_, tup[0]);
        Weight tmu = ctx_.tau_weight(mu);
        TriElement s = u.mul(u.K(-mu), hopf().sigma_bar_minus(c_, tup[0].y));
        r += Tensor::pure({u.K(mu - tmu), u.mul(TriElement::mono(tup[1]), u.K(-tmu)), s}) * c;
    }
    return r;
}

Report KMatrixSuite::check_coproduct_identities() const {
    const TriAlgebra& u = U();
    int h = D_;
    Tensor K = quasi_k(h);
    Report rep;
    {
        // (id (x) Delta)(K) = K_12 . Theta^sbar_K23 . K_1K3
        LegGrading g{0, 1, 1};
        Tensor lhs = truncate(coproduct_leg(hopf(), K, 1), g, D_);
        Tensor k1k3(3);
        for (auto& [tup, c] : K.terms()) {
            Weight mu = mono_weight(ctx_, tup[1]);
            k1k3 += Tensor::pure({TriElement::mono(tup[0]), u.K(mu), TriElement::mono(tup[1])}) * c;
        }
        Tensor rhs = graded_mul(u, {embed_legs(K, 3, {0, 1}), sigma_bar_theta_K23(h), k1k3}, g, D_);
        rep.push_back(compare("quasiK-id-delta", "", lhs, rhs, g));
    }
    {
        // (Delta (x) id)(K) = Theta_23 . K^-_1K3 . Theta^sbarK_K32
        LegGrading g{0, 0, 1};
        Tensor lhs = truncate(coproduct_leg(hopf(), K, 0), g, D_);
        Tensor k1k3(3);
        for (auto& [tup, c] : K.terms()) {
            Weight mu = mono_weight(ctx_, tup[1]);
            k1k3 += Tensor::pure({TriElement::mono(tup[0]), u.K(-mu), TriElement::mono(tup[1])}) * c;
        }
        Tensor rhs = graded_mul(u, {embed_legs(theta(h), 3, {1, 2}), k1k3, sigma_bar_K_theta_K32(h)}, g, D_);
        rep.push_back(compare("quasiK-delta-id", "", lhs, rhs, g));
    }
    return rep;
}

Report KMatrixSuite::check_weak_quasitriangular() const {
    const TriAlgebra& u = U();
    const DoubleHopf& H = hopf();
    Report rep;
    Tensor R1 = theta21(D_ + 1);
    Tensor R1D = theta21(D_);

    // R conjugates Delta into Delta^op, on the generators of U
    {
        LegGrading g{1, 0};
        for (int i = 0; i < ctx_.n; ++i)
            for (auto [name, el] : {std::make_pair("E", u.x(i)), std::make_pair("F", u.y(i)), std::make_pair("K", u.K(ctx_.alpha(i)))}) {
                Tensor d = H.coproduct(el);
                Tensor lhs = graded_mul(u, R1, apply_R0(u, d, 0, 1), g, D_);
                Tensor rhs = graded_mul(u, flip_legs(d, 0, 1), R1, g, D_);
                rep.push_back(compare("R-intertwines-coproduct", gen_name(name, i), lhs, rhs, g));
            }
    }
    // R0 and the coproduct in either leg, on generators of U (x) U
    for (int at = 0; at < 2; ++at)
        for (auto& [name, x] : u_generators(2, at)) {
            LegGrading g{0, 0, 0};
            Tensor l2 = coproduct_leg(H, apply_R0(u, x, 0, 1), 0);
            Tensor r2 = apply_R0(u, apply_R0(u, coproduct_leg(H, x, 0), 1, 2), 0, 2);
            rep.push_back(compare("R0-delta-first", name, l2, r2, g));
            Tensor l3 = coproduct_leg(H, apply_R0(u, x, 0, 1), 1);
            Tensor r3 = apply_R0(u, apply_R0(u, coproduct_leg(H, x, 1), 0, 1), 0, 2);
            rep.push_back(compare("R0-delta-second", name, l3, r3, g));
        }
    // coproducts of R in either leg
    {
        LegGrading g{0, 0, -1};
        Tensor lhs = truncate(coproduct_leg(H, R1D, 0), g, D_);
        Tensor rhs = graded_mul(u, embed_legs(R1D, 3, {0, 2}), apply_R0(u, embed_legs(R1D, 3, {1, 2}), 0, 2), g, D_);
        rep.push_back(compare("R-delta-first", "", lhs, rhs, g));
    }
    {
        LegGrading g{1, 0, 0};
        Tensor lhs = truncate(coproduct_leg(H, R1D, 1), g, D_);
        Tensor rhs = graded_mul(u, embed_legs(R1D, 3, {0, 2}), apply_R0(u, embed_legs(R1D, 3, {0, 1}), 0, 2), g, D_);
        rep.push_back(compare("R-delta-second", "", lhs, rhs, g));
    }
    // Yang-Baxter: element part and automorphism part
    {
        LegGrading g{2, 1, 0};
        Tensor r12 = embed_legs(R1D, 3, {0, 1}), r13 = embed_legs(R1D, 3, {0, 2}), r23 = embed_legs(R1D, 3, {1, 2});
        Tensor lhs = graded_mul(u, {r12, apply_R0(u, r13, 0, 1), apply_R0(u, apply_R0(u, r23, 0, 2), 0, 1)}, g, D_);
        Tensor rhs = graded_mul(u, {r23, apply_R0(u, r13, 1, 2), apply_R0(u, apply_R0(u, r12, 0, 2), 1, 2)}, g, D_);
        rep.push_back(compare("yang-baxter", "element", lhs, rhs, g));
        for (int at = 0; at < 3; ++at)
            for (auto& [name, x] : u_generators(3, at)) {
                Tensor a = apply_R0(u, apply_R0(u, apply_R0(u, x, 1, 2), 0, 2), 0, 1);
                Tensor b = apply_R0(u, apply_R0(u, apply_R0(u, x, 0, 1), 0, 2), 1, 2);
                rep.push_back(compare("yang-baxter", name, a, b, LegGrading{0, 0, 0}));
            }
    }
    // K0^tau and the coproduct
    for (int at = 0; at < 2; ++at)
        for (auto& [name, x] : u_generators(2, at)) {
            LegGrading g{0, 0, 0};
            Tensor l1 = coproduct_leg(H, apply_K0tau(u, x, 0, 1), 0);
            Tensor r1 = apply_K0tau(u, apply_K0tau(u, coproduct_leg(H, x, 0), 0, 2), 1, 2);
            rep.push_back(compare("K0tau-delta-first", name, l1, r1, g));
            Tensor l2 = coproduct_leg(H, apply_K0tau(u, x, 0, 1), 1);
            Tensor r2 = apply_K0tau(u, apply_K0tau(u, coproduct_leg(H, x, 1), 0, 2), 0, 1);
            rep.push_back(compare("K0tau-delta-second", name, l2, r2, g));
        }
    if (!sigma_bar_available()) return rep;

    // Generators of B (x) U: B_i and K_lambda in leg 1, E, F, K in leg 2.
    auto b_generators = [&](int legs) {
        std::vector<std::pair<std::string, Tensor>> out;
        for (int i = 0; i < ctx_.n; ++i) {
            std::vector<TriElement> f(legs, u.one());
            f[0] = B_->B(i);
            out.emplace_back(gen_name("B", i) + "@1", Tensor::pure(f));
        }
        for (auto& lam : theta_lattice_generators()) {
            std::vector<TriElement> f(legs, u.one());
            f[0] = u.K(lam);
            out.emplace_back("K" + weight_str(lam) + "@1", Tensor::pure(f));
        }
        for (int at = 1; at < legs; ++at)
            for (auto& p : u_generators(legs, at)) out.push_back(p);
        return out;
    };

    Tensor K1 = quasi_k(D_ + 1);
    Tensor K1D = quasi_k(D_);
    // K1 intertwines Delta and K0 o Delta on generators of B
    {
        LegGrading g{0, 1};
        std::vector<std::pair<std::string, DoubleElement>> gens;
        for (int i = 0; i < ctx_.n; ++i) gens.emplace_back(gen_name("B", i), B_->B(i));
        for (auto& lam : theta_lattice_generators()) gens.emplace_back("K" + weight_str(lam), u.K(lam));
        for (auto& [name, b] : gens) {
            Tensor d = H.coproduct(b);
            Tensor lhs = graded_mul(u, K1, apply_K0(d, 0, 1), g, D_);
            Tensor rhs = graded_mul(u, d, K1, g, D_);
            rep.push_back(compare("K-intertwines-coproduct", name, lhs, rhs, g));
        }
    }
    // K0 and the coproduct in the first leg, on generators of B (x) U
    for (auto& [name, x] : b_generators(2)) {
        Tensor lhs = coproduct_leg(H, apply_K0(x, 0, 1), 0);
        Tensor rhs = apply_R0(u, apply_K0(apply_R0(u, coproduct_leg(H, x, 0), 1, 2), 0, 2), 2, 1);
        rep.push_back(compare("K0-delta-first", name, lhs, rhs, LegGrading{0, 0, 0}));
    }
    // K0 and the coproduct in the second leg, with Ad(R1_23) multiplied out:  (id(x)Delta)(K0 x) . Z = Z . phi((id(x)Delta) x)
    {
        LegGrading g{0, 0, 1};
        Tensor Z = apply_K0(apply_R0(u, apply_K0(embed_legs(R1, 3, {1, 2}), 0, 2), 2, 1), 0, 1);
        for (auto& [name, x] : b_generators(2)) {
            Tensor lhs = graded_mul(u, coproduct_leg(H, apply_K0(x, 0, 1), 1), Z, g, D_);
            Tensor phi = apply_K0(apply_R0(u, apply_K0(apply_R0(u, coproduct_leg(H, x, 1), 1, 2), 0, 2), 2, 1), 0, 1);
            rep.push_back(compare("K0-delta-second", name, lhs, graded_mul(u, Z, phi, g, D_), g));
        }
    }
    // coproduct of K1 in the first leg
    {
        LegGrading g{0, 0, 1};
        Tensor lhs = truncate(coproduct_leg(H, K1D, 0), g, D_);
        Tensor rhs = graded_mul(u,
                                {embed_legs(R1D, 3, {2, 1}), apply_R0(u, embed_legs(K1D, 3, {0, 2}), 2, 1),
                                 apply_R0(u, apply_K0(embed_legs(R1D, 3, {1, 2}), 0, 2), 2, 1)},
                                g, D_);
        rep.push_back(compare("K-delta-first", "", lhs, rhs, g));
    }
    // coproduct of K1 in the second leg
    {
        LegGrading g{0, 1, 2};
        Tensor lhs = truncate(coproduct_leg(H, K1D, 1), g, D_);
        Tensor rhs = graded_mul(u,
                                {embed_legs(K1D, 3, {0, 1}), apply_K0(embed_legs(R1D, 3, {2, 1}), 0, 1),
                                 apply_K0(apply_R0(u, embed_legs(K1D, 3, {0, 2}), 2, 1), 0, 1)},
                                g, D_);
        rep.push_back(compare("K-delta-second", "", lhs, rhs, g));
    }
    // Reflection equation: element part and automorphism part
    {
        LegGrading g{0, 1, 2};
        Tensor k12 = embed_legs(K1D, 3, {0, 1}), k13 = embed_legs(K1D, 3, {0, 2});
        Tensor r32 = embed_legs(R1D, 3, {2, 1}), r23 = embed_legs(R1D, 3, {1, 2});
        Tensor lhs = graded_mul(u,
                                {k12, apply_K0(r32, 0, 1), apply_K0(apply_R0(u, k13, 2, 1), 0, 1),
                                 apply_K0(apply_R0(u, apply_K0(r23, 0, 2), 2, 1), 0, 1)},
                                g, D_);
        Tensor rhs = graded_mul(u,
                                {r32, apply_R0(u, k13, 2, 1), apply_R0(u, apply_K0(r23, 0, 2), 2, 1),
                                 apply_R0(u, apply_K0(apply_R0(u, k12, 1, 2), 0, 2), 2, 1)},
                                g, D_);
        rep.push_back(compare("reflection", "element", lhs, rhs, g));
        for (auto& [name, x] : b_generators(3)) {
            Tensor a = apply_K0(apply_R0(u, apply_K0(apply_R0(u, x, 1, 2), 0, 2), 2, 1), 0, 1);
            Tensor b = apply_R0(u, apply_K0(apply_R0(u, apply_K0(x, 0, 1), 1, 2), 0, 2), 2, 1);
            rep.push_back(compare("reflection", name, a, b, LegGrading{0, 0, 0}));
        }
    }
    return rep;
}

TruncatedBitensor quasi_k(const Context& ctx, const std::vector<Scalar>& c) {
    return KMatrixSuite(ctx, c).quasi_k_components(ctx.D);
}

Report check_intertwiner(const Context& ctx, const std::vector<Scalar>& c) { return KMatrixSuite(ctx, c).check_intertwiner(); }

Report check_coproduct_identities(const Context& ctx, const std::vector<Scalar>& c) {
    return KMatrixSuite(ctx, c).check_coproduct_identities();
}

Report check_weak_quasitriangular(const Context& ctx, const std::vector<Scalar>& c) {
    return KMatrixSuite(ctx, c).check_weak_quasitriangular();
}

}  // namespace qsp
