#include "qsp/freealg.hpp"

#include <algorithm>
#include <sstream>

namespace qsp {

FreeElement FreeElement::word(const Word& w, Side s, const Scalar& coef) {
    FreeElement f(s);
    f.add_term(w, coef);
    return f;
}

void FreeElement::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = t_.find(w);
    if (it == t_.end()) {
        t_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

FreeElement& FreeElement::operator+=(const FreeElement& o) {
    for (auto& [w, c] : o.t_) add_term(w, c);
    return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& o) {
    for (auto& [w, c] : o.t_) add_term(w, -c);
    return *this;
}

FreeElement& FreeElement::operator*=(const Scalar& s) {
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

FreeElement operator*(const FreeElement& a, const FreeElement& b) {
    FreeElement r(a.side_);
    for (auto& [wa, ca] : a.t_) {
        for (auto& [wb, cb] : b.t_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    }
    return r;
}

bool FreeElement::operator==(const FreeElement& o) const {
    if (t_.size() != o.t_.size()) return false;
    auto it = o.t_.begin();
    for (auto& [w, c] : t_) {
        if (w != it->first || c != it->second) return false;
        ++it;
    }
    return true;
}

FreeElement FreeElement::homogeneous(const Weight& mu, int n) const {
    FreeElement r(side_);
    for (auto& [w, c] : t_)
        if (word_weight(w, n) == mu) r.t_.emplace(w, c);
    return r;
}

bool FreeElement::is_homogeneous(int n) const {
    if (t_.empty()) return true;
    Weight d = word_weight(t_.begin()->first, n);
    for (auto& [w, c] : t_)
        if (word_weight(w, n) != d) return false;
    return true;
}

int FreeElement::max_length() const {
    int m = -1;
    for (auto& [w, c] : t_) m = std::max(m, static_cast<int>(w.size()));
    return m;
}

std::string FreeElement::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    const char* letter = side_ == Side::E ? "E" : "F";
    for (auto& [w, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (auto l : w) os << "*" << letter << int(l) + 1;
    }
    return os.str();
}

WordTerms partial_left_word(const Context& ctx, int i, const Word& w) {
    WordTerms out;
    Weight prefix = zero_weight(ctx.n);
    Weight ai = ctx.alpha(i);
    for (size_t p = 0; p < w.size(); ++p) {
        if (w[p] == i) {
            Word r;
            r.reserve(w.size() - 1);
            r.insert(r.end(), w.begin(), w.begin() + p);
            r.insert(r.end(), w.begin() + p + 1, w.end());
            out.emplace_back(std::move(r), ctx.chi(prefix, ai));
        }
        ++prefix[w[p]];
    }
    return out;
}

WordTerms partial_right_word(const Context& ctx, int i, const Word& w) {
    WordTerms out;
    Weight suffix = zero_weight(ctx.n);
    Weight ai = ctx.alpha(i);
    for (size_t pp = w.size(); pp-- > 0;) {
        if (w[pp] == i) {
            Word r;
            r.reserve(w.size() - 1);
            r.insert(r.end(), w.begin(), w.begin() + pp);
            r.insert(r.end(), w.begin() + pp + 1, w.end());
            out.emplace_back(std::move(r), ctx.chi(suffix, ai));
        }
        ++suffix[w[pp]];
    }
    return out;
}

namespace {

FreeElement apply_word_map(const FreeElement& f, const std::function<WordTerms(const Word&)>& fn) {
    FreeElement r(f.side());
    for (auto& [w, c] : f.terms())
        for (auto& [w2, k] : fn(w)) r.add_term(w2, c * k);
    return r;
}

}  // namespace

FreeElement partial_left(const Context& ctx, int i, const FreeElement& f) {
    return apply_word_map(f, [&](const Word& w) { return partial_left_word(ctx, i, w); });
}

FreeElement partial_right(const Context& ctx, int i, const FreeElement& f) {
    return apply_word_map(f, [&](const Word& w) { return partial_right_word(ctx, i, w); });
}

CycNum PairingTable::pair(const Word& f, const Word& e) {
    if (f.size() != e.size()) return CycNum();
    if (e.empty()) return CycNum(1L);
    if (word_weight(f, ctx_.n) != word_weight(e, ctx_.n)) return CycNum();
    if (e.size() == 1) return CycNum(1L);
    auto key = std::make_pair(f, e);
    {
        std::lock_guard<std::mutex> lk(m_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    Word rest(e.begin() + 1, e.end());
    CycNum total;
    for (auto& [w, k] : partial_left_word(ctx_, e[0], f)) {
        CycNum v = pair(w, rest);
        if (!v.is_zero()) total += k * v;
    }
    std::lock_guard<std::mutex> lk(m_);
    memo_.emplace(std::move(key), total);
    return total;
}

Scalar pairing(const Context& ctx, const FreeElement& f, const FreeElement& e) {
    PairingTable t(ctx);
    Scalar total;
    for (auto& [wf, cf] : f.terms())
        for (auto& [we, ce] : e.terms()) {
            CycNum v = t.pair(wf, we);
            if (!v.is_zero()) total += cf * ce * Scalar(v);
        }
    return total;
}

std::vector<Word> words_of_degree(const Weight& mu) {
    Word w;
    for (size_t i = 0; i < mu.size(); ++i)
        for (int k = 0; k < mu[i]; ++k) w.push_back(static_cast<std::uint8_t>(i));
    std::vector<Word> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::vector<Weight> degrees_up_to(int n, int d, bool include_zero) {
    std::vector<Weight> out;
    Weight cur(n, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n) {
            int h = d - left;
            if (h > 0 || include_zero) out.push_back(cur);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            cur[i] = k;
            rec(i + 1, left - k);
        }
        cur[i] = 0;
    };
    rec(0, d);
    std::stable_sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) {
        if (height(a) != height(b)) return height(a) < height(b);
        return a > b;
    });
    return out;
}

FreeElement braided_commutator(const Context& ctx, const FreeElement& a, const FreeElement& b) {
    if (a.is_zero() || b.is_zero()) return FreeElement(a.side());
    if (!a.is_homogeneous(ctx.n) || !b.is_homogeneous(ctx.n))
        throw std::invalid_argument("braided commutator of inhomogeneous elements");
    Weight da = word_weight(a.terms().begin()->first, ctx.n), db = word_weight(b.terms().begin()->first, ctx.n);
    return a * b - b * a * Scalar(ctx.chi(da, db));
}

}  // namespace qsp
