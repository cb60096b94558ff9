#include "qsp/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>
#include <sstream>

namespace qsp {

namespace {

std::mutex g_cyc_mutex;

struct FieldData {
    std::vector<mpz_class> phi;                    // monic, constant term first
    std::vector<std::vector<mpq_class>> high;      // z^k reduced, k = d .. 2d-2
    std::vector<CycNum> roots;                     // z^0 .. z^{N-1}
};

std::map<int, FieldData>& field_table() {
    static std::map<int, FieldData> t;
    return t;
}

std::vector<mpz_class> poly_divide_exact(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
    // both monic in the leading coefficient
    int dn = static_cast<int>(num.size()) - 1, dd = static_cast<int>(den.size()) - 1;
    std::vector<mpz_class> q(dn - dd + 1);
    for (int k = dn; k >= dd; --k) {
        mpz_class c = num[k];
        q[k - dd] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
    }
    return q;
}

std::vector<mpz_class> compute_phi(int N) {
    std::vector<mpz_class> p(N + 1);
    p[0] = -1;
    p[N] = 1;
    for (int d = 1; d < N; ++d)
        if (N % d == 0) p = poly_divide_exact(p, cyclotomic_poly(d));
    return p;
}

const FieldData& field(int N) {
    {
        std::lock_guard<std::mutex> lk(g_cyc_mutex);
        auto it = field_table().find(N);
        if (it != field_table().end() && !it->second.roots.empty()) return it->second;
    }
    FieldData fd;
    fd.phi = cyclotomic_poly(N);
    int d = static_cast<int>(fd.phi.size()) - 1;
    // z^d = -sum phi_j z^j, then shift up to z^{2d-2}
    std::vector<mpq_class> cur(d);
    for (int j = 0; j < d; ++j) cur[j] = -mpq_class(fd.phi[j]);
    fd.high.push_back(cur);
    for (int k = d + 1; k <= 2 * d - 2; ++k) {
        mpq_class top = cur[d - 1];
        for (int j = d - 1; j > 0; --j) cur[j] = cur[j - 1];
        cur[0] = 0;
        if (top != 0)
            for (int j = 0; j < d; ++j) cur[j] -= top * fd.phi[j];
        fd.high.push_back(cur);
    }
    std::lock_guard<std::mutex> lk(g_cyc_mutex);
    auto& slot = field_table()[N];
    if (slot.roots.empty()) {
        slot.phi = fd.phi;
        slot.high = fd.high;
        std::vector<mpq_class> one(d);
        one[0] = 1;
        slot.roots.reserve(N);
        CycNum r(N, one);
        slot.roots.push_back(r);
        if (d == 1) {
            // degree-one fields: N in {1,2}
            for (int k = 1; k < N; ++k) slot.roots.push_back(CycNum(mpq_class(-1)));
        } else {
            for (int k = 1; k < N; ++k) {
                // inline multiply by z using the reduction data already present
                const auto& prev = slot.roots.back().coeffs();
                std::vector<mpq_class> nxt(d);
                mpq_class top = prev[d - 1];
                for (int j = d - 1; j > 0; --j) nxt[j] = prev[j - 1];
                if (top != 0)
                    for (int j = 0; j < d; ++j) nxt[j] -= top * slot.phi[j];
                slot.roots.push_back(CycNum(N, nxt));
            }
        }
    }
    return slot;
}

}  // namespace

int euler_phi(int N) {
    int r = N;
    int m = N;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            r -= r / p;
        }
    }
    if (m > 1) r -= r / m;
    return r;
}

const std::vector<mpz_class>& cyclotomic_poly(int N) {
    if (N < 1) throw std::invalid_argument("cyclotomic order must be positive");
    static std::map<int, std::vector<mpz_class>> cache;
    static std::recursive_mutex m;
    std::lock_guard<std::recursive_mutex> lk(m);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    std::vector<mpz_class> p;
    if (N == 1) p = {mpz_class(-1), mpz_class(1)};
    else p = compute_phi(N);
    return cache.emplace(N, std::move(p)).first->second;
}

// ---------------------------------------------------------------- CycNum

CycNum::CycNum() : N_(1), c_(1) {}
CycNum::CycNum(long v) : N_(1), c_(1, mpq_class(v)) {}
CycNum::CycNum(const mpq_class& v) : N_(1), c_(1, v) {}

CycNum::CycNum(int N, std::vector<mpq_class> coeffs) : N_(N) {
    if (N < 1) throw std::invalid_argument("cyclotomic order must be positive");
    const auto& phi = cyclotomic_poly(N);
    int d = static_cast<int>(phi.size()) - 1;
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= d; --k) {
        mpq_class c = coeffs[k];
        if (c == 0) continue;
        for (int j = 0; j <= d; ++j) coeffs[k - d + j] -= c * phi[j];
    }
    coeffs.resize(d);
    c_ = std::move(coeffs);
    if (d == 1) N_ = 1;
}

bool CycNum::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const mpq_class& x) { return x == 0; });
}

bool CycNum::is_one() const {
    if (c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

void CycNum::promote_to(int N) {
    int d = euler_phi(N);
    c_.resize(d);
    N_ = N;
}

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
    if (o.c_.size() == 1) {
        c_[0] += o.c_[0];
        return *this;
    }
    if (c_.size() == 1) promote_to(o.N_);
    else if (N_ != o.N_) throw ContextError("cyclotomic orders differ: " + std::to_string(N_) + " vs " + std::to_string(o.N_));
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
    if (o.c_.size() == 1) {
        c_[0] -= o.c_[0];
        return *this;
    }
    if (c_.size() == 1) promote_to(o.N_);
    else if (N_ != o.N_) throw ContextError("cyclotomic orders differ: " + std::to_string(N_) + " vs " + std::to_string(o.N_));
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) {
    if (o.c_.size() == 1) {
        if (o.c_[0] == 0) {
            for (auto& x : c_) x = 0;
        } else if (o.c_[0] != 1) {
            for (auto& x : c_) x *= o.c_[0];
        }
        return *this;
    }
    if (c_.size() == 1) {
        mpq_class s = c_[0];
        *this = o;
        if (s != 1)
            for (auto& x : c_) x *= s;
        return *this;
    }
    if (N_ != o.N_) throw ContextError("cyclotomic orders differ: " + std::to_string(N_) + " vs " + std::to_string(o.N_));
    const FieldData& fd = field(N_);
    int d = static_cast<int>(c_.size());
    std::vector<mpq_class> prod(2 * d - 1);
    for (int i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (o.c_[j] == 0) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    for (int j = 0; j < d; ++j) c_[j] = prod[j];
    for (int k = d; k <= 2 * d - 2; ++k) {
        if (prod[k] == 0) continue;
        const auto& red = fd.high[k - d];
        for (int j = 0; j < d; ++j)
            if (red[j] != 0) c_[j] += prod[k] * red[j];
    }
    return *this;
}

bool CycNum::operator==(const CycNum& o) const {
    if (c_.size() == o.c_.size()) {
        if (c_.size() > 1 && N_ != o.N_) return false;
        return c_ == o.c_;
    }
    // one side rational
    const CycNum& big = c_.size() > 1 ? *this : o;
    const CycNum& small = c_.size() > 1 ? o : *this;
    if (big.c_[0] != small.c_[0]) return false;
    for (size_t i = 1; i < big.c_.size(); ++i)
        if (big.c_[i] != 0) return false;
    return true;
}

bool CycNum::operator<(const CycNum& o) const {
    size_t n = std::max(c_.size(), o.c_.size());
    for (size_t i = 0; i < n; ++i) {
        mpq_class a = i < c_.size() ? c_[i] : mpq_class(0);
        mpq_class b = i < o.c_.size() ? o.c_[i] : mpq_class(0);
        if (a != b) return a < b;
    }
    return false;
}

CycNum CycNum::pow(long e) const {
    if (e < 0) return cyc_inverse(*this).pow(-e);
    CycNum result(1L), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

std::string CycNum::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        const mpq_class& x = c_[i];
        if (x == 0) continue;
        mpq_class a = abs(x);
        if (first) {
            if (x < 0) os << "-";
        } else {
            os << (x < 0 ? "-" : "+");
        }
        first = false;
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

CycNum make_root(int N, long k) {
    if (N < 1) throw std::invalid_argument("cyclotomic order must be positive");
    long r = ((k % N) + N) % N;
    return field(N).roots[r];
}

CycNum cyc_inverse(const CycNum& a) {
    if (a.is_zero()) throw std::domain_error("division by zero in cyclotomic field");
    int d = a.field_degree();
    if (d == 1) return CycNum(mpq_class(1) / a.c_[0]);
    // Solve (multiplication-by-a matrix) * x = e_0 by Gaussian elimination.
    std::vector<std::vector<mpq_class>> M(d, std::vector<mpq_class>(d + 1));
    std::vector<mpq_class> basis(d);
    for (int j = 0; j < d; ++j) {
        std::fill(basis.begin(), basis.end(), mpq_class(0));
        basis[j] = 1;
        CycNum col = a * CycNum(a.N_, basis);
        for (int i = 0; i < d; ++i) M[i][j] = col.c_[i];
    }
    M[0][d] = 1;
    for (int col = 0; col < d; ++col) {
        int piv = col;
        while (M[piv][col] == 0) ++piv;
        std::swap(M[piv], M[col]);
        mpq_class inv = 1 / M[col][col];
        for (int j = col; j <= d; ++j) M[col][j] *= inv;
        for (int i = 0; i < d; ++i) {
            if (i == col || M[i][col] == 0) continue;
            mpq_class f = M[i][col];
            for (int j = col; j <= d; ++j) M[i][j] -= f * M[col][j];
        }
    }
    std::vector<mpq_class> x(d);
    for (int i = 0; i < d; ++i) x[i] = M[i][d];
    return CycNum(a.N_, x);
}

CycNum parse_cyc(const std::string& text, int N) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty cyclotomic literal");
    CycNum total;
    size_t pos = 0;
    auto read_int = [&](mpz_class& out) {
        size_t st = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (st == pos) return false;
        out = mpz_class(s.substr(st, pos - st));
        return true;
    };
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            throw std::invalid_argument("bad cyclotomic literal: " + text);
        }
        mpq_class coef = 1;
        mpz_class num;
        bool have_num = read_int(num);
        if (have_num) {
            coef = num;
            if (pos < s.size() && s[pos] == '/') {
                ++pos;
                mpz_class den;
                if (!read_int(den) || den == 0) throw std::invalid_argument("bad rational in: " + text);
                coef = mpq_class(num, den);
                coef.canonicalize();
            }
            if (pos < s.size() && s[pos] == '*') ++pos;
        }
        long e = 0;
        if (pos < s.size() && s[pos] == 'z') {
            ++pos;
            e = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                int esign = 1;
                if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
                    esign = s[pos] == '-' ? -1 : 1;
                    ++pos;
                }
                mpz_class ev;
                if (!read_int(ev)) throw std::invalid_argument("bad exponent in: " + text);
                e = esign * ev.get_si();
            }
        } else if (!have_num) {
            throw std::invalid_argument("bad cyclotomic literal: " + text);
        }
        CycNum term = e == 0 ? CycNum(1L) : make_root(N, e);
        term *= CycNum(coef * sign);
        total += term;
    }
    return total;
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(const CycNum& v) {
    if (!v.is_zero()) t_.emplace(Exps{}, v);
}

Scalar Scalar::var(int i, int nvars) {
    Scalar s;
    s.nvars_ = nvars;
    Exps e(nvars, 0);
    e.at(i) = 1;
    s.t_.emplace(e, CycNum(1L));
    return s;
}

Scalar Scalar::monomial(const Exps& e, const CycNum& coef) {
    Scalar s;
    s.nvars_ = static_cast<int>(e.size());
    if (!coef.is_zero()) s.t_.emplace(e, coef);
    return s;
}

void Scalar::adopt(int nv) {
    if (nv == nvars_ || nv == 0) return;
    if (nvars_ != 0) throw ContextError("parameter counts differ: " + std::to_string(nvars_) + " vs " + std::to_string(nv));
    Terms nt;
    for (auto& [e, v] : t_) {
        Exps ne(nv, 0);
        nt.emplace(std::move(ne), v);
    }
    t_ = std::move(nt);
    nvars_ = nv;
}

bool Scalar::is_constant() const {
    for (auto& [e, v] : t_)
        for (int x : e)
            if (x != 0) return false;
    return true;
}

CycNum Scalar::constant() const {
    Exps z(nvars_, 0);
    auto it = t_.find(z);
    return it == t_.end() ? CycNum() : it->second;
}

int Scalar::degree() const {
    int d = -1;
    for (auto& [e, v] : t_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& [e, v] : r.t_) v = -v;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    adopt(o.nvars_);
    for (auto& [e, v] : o.t_) {
        const Exps& key = (o.nvars_ == nvars_) ? e : Exps(nvars_, 0);
        auto it = t_.find(key);
        if (it == t_.end()) {
            t_.emplace(key, v);
        } else {
            it->second += v;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    adopt(o.nvars_);
    for (auto& [e, v] : o.t_) {
        const Exps& key = (o.nvars_ == nvars_) ? e : Exps(nvars_, 0);
        auto it = t_.find(key);
        if (it == t_.end()) {
            t_.emplace(key, -v);
        } else {
            it->second -= v;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.t_.empty() || b.t_.empty()) return Scalar();
    if (b.nvars_ == 0 || b.is_constant()) {
        if (b.t_.size() == 1) {
            Scalar r = a;
            r.adopt(b.nvars_);
            return r *= b.t_.begin()->second;
        }
    }
    if (a.nvars_ == 0 || a.is_constant()) {
        if (a.t_.size() == 1) {
            Scalar r = b;
            r.adopt(a.nvars_);
            return r *= a.t_.begin()->second;
        }
    }
    int nv = a.nvars_ ? a.nvars_ : b.nvars_;
    if (a.nvars_ && b.nvars_ && a.nvars_ != b.nvars_)
        throw ContextError("parameter counts differ: " + std::to_string(a.nvars_) + " vs " + std::to_string(b.nvars_));
    Scalar r;
    r.nvars_ = nv;
    for (auto& [ea, va] : a.t_) {
        for (auto& [eb, vb] : b.t_) {
            Exps e(nv, 0);
            for (int i = 0; i < nv; ++i) {
                if (static_cast<int>(ea.size()) > i) e[i] += ea[i];
                if (static_cast<int>(eb.size()) > i) e[i] += eb[i];
            }
            CycNum p = va * vb;
            auto it = r.t_.find(e);
            if (it == r.t_.end()) {
                r.t_.emplace(std::move(e), std::move(p));
            } else {
                it->second += p;
                if (it->second.is_zero()) r.t_.erase(it);
            }
        }
    }
    return r;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    *this = *this * o;
    return *this;
}

Scalar& Scalar::operator*=(const CycNum& o) {
    if (o.is_zero()) {
        t_.clear();
        return *this;
    }
    if (o.is_one()) return *this;
    for (auto& [e, v] : t_) v *= o;
    return *this;
}

bool Scalar::operator==(const Scalar& o) const {
    if (t_.size() != o.t_.size()) return false;
    auto it = o.t_.begin();
    for (auto& [e, v] : t_) {
        const Exps& oe = it->first;
        bool same_key = (e == oe);
        if (!same_key) {
            // constants may be stored with different nvars
            auto allzero = [](const Exps& x) { return std::all_of(x.begin(), x.end(), [](int y) { return y == 0; }); };
            if (!(allzero(e) && allzero(oe))) return false;
        }
        if (v != it->second) return false;
        ++it;
    }
    return true;
}

Scalar Scalar::pow(unsigned e) const {
    Scalar result(1L), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

Scalar Scalar::substitute(const std::vector<Scalar>& values) const {
    if (static_cast<int>(values.size()) < nvars_) throw std::invalid_argument("substitute: too few values");
    Scalar r;
    for (auto& [e, v] : t_) {
        Scalar term(v);
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] > 0) term *= values[i].pow(e[i]);
            else if (e[i] < 0) {
                if (!values[i].is_constant() || values[i].terms().size() != 1)
                    throw std::domain_error("substitute: cannot invert a non-constant value");
                term *= Scalar(cyc_inverse(values[i].constant()).pow(-e[i]));
            }
        }
        r += term;
    }
    return r;
}

Scalar Scalar::substitute_var(int i, const Scalar& value) const {
    std::vector<Scalar> vals;
    for (int k = 0; k < nvars_; ++k) vals.push_back(Scalar::var(k, nvars_));
    if (i < nvars_) vals[i] = value;
    return substitute(vals);
}

std::string Scalar::str(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest total degree first for readability
    std::vector<const Terms::value_type*> order;
    for (auto& kv : t_) order.push_back(&kv);
    std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
        int da = std::accumulate(a->first.begin(), a->first.end(), 0);
        int db = std::accumulate(b->first.begin(), b->first.end(), 0);
        if (da != db) return da > db;
        return a->first > b->first;
    });
    for (auto* kv : order) {
        const Exps& e = kv->first;
        std::string coef = kv->second.str();
        bool is_mono = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
        if (!first) os << " + ";
        first = false;
        if (!is_mono) {
            os << coef;
            continue;
        }
        if (coef != "1") os << "(" << coef << ")*";
        bool firstv = true;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!firstv) os << "*";
            firstv = false;
            os << (i < names.size() ? names[i] : "c" + std::to_string(i + 1));
            if (e[i] != 1) os << "^" << e[i];
        }
    }
    return os.str();
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op) {
    return op == ArithOp::Add ? a + b : a * b;
}

}  // namespace qsp
