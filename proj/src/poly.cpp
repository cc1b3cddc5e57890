#include "cdybe/poly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace cdybe {

Expo expo_add(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Expo expo_sub(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Poly Poly::constant(int nvars, const Rat& c) {
    Poly p(nvars);
    if (c != 0) p.terms_[Expo(nvars, 0)] = c;
    return p;
}

Poly Poly::monomial(Expo e, const Rat& c) {
    Poly p(static_cast<int>(e.size()));
    if (c != 0) p.terms_[std::move(e)] = c;
    return p;
}

Poly Poly::variable(int nvars, int k, int power) {
    Expo e(nvars, 0);
    e[k] = power;
    return monomial(std::move(e), Rat(1));
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Expo& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

void Poly::add_term(const Expo& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

const std::pair<const Expo, Rat>& Poly::leading() const {
    assert(!terms_.empty());
    return *terms_.rbegin();
}

int Poly::degree(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

int Poly::min_degree(int var) const {
    if (terms_.empty()) return 0;
    int d = terms_.begin()->first[var];
    for (const auto& [e, c] : terms_) d = std::min(d, e[var]);
    return d;
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(expo_add(e1, e2), c1 * c2);
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    Poly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

Poly Poly::shifted(const Expo& e) const {
    Poly r(nvars_);
    for (const auto& [e1, c] : terms_) r.terms_[expo_add(e1, e)] = c;
    return r;
}

Poly Poly::stretched(int m) const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) {
        Expo e2(e);
        for (int& x : e2) x *= m;
        r.terms_[std::move(e2)] = c;
    }
    return r;
}

std::optional<Poly> Poly::compressed(int m) const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) {
        Expo e2(e);
        for (int& x : e2) {
            if (x % m != 0) return std::nullopt;
            x /= m;
        }
        r.terms_[std::move(e2)] = c;
    }
    return r;
}

Rat Poly::eval(const std::vector<Rat>& point) const {
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (int k = 0; k < nvars_; ++k)
            if (e[k] != 0) t *= rat_pow(point[k], e[k]);
        acc += t;
    }
    return acc;
}

std::map<long, Rat> Poly::eval_weighted(const std::vector<long>& w) const {
    std::map<long, Rat> out;
    for (const auto& [e, c] : terms_) {
        long d = 0;
        for (int k = 0; k < nvars_; ++k) d += static_cast<long>(e[k]) * w[k];
        auto [it, fresh] = out.emplace(d, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}

Poly Poly::scaled_vars(const std::vector<Rat>& c, int eps, Expo* shift_out) const {
    Poly r(nvars_);
    for (const auto& [e, k] : terms_) {
        Rat coeff = k;
        Expo e2(e);
        for (int v = 0; v < nvars_; ++v) {
            coeff *= rat_pow(c[v], e[v]);
            e2[v] = eps * e[v];
        }
        r.add_term(e2, coeff);
    }
    // keep exponents non-negative after an inversion
    if (shift_out) shift_out->assign(nvars_, 0);
    if (eps < 0 && !r.terms_.empty()) {
        Expo mins(nvars_, 0);
        for (int v = 0; v < nvars_; ++v) mins[v] = r.min_degree(v);
        Expo neg(nvars_);
        for (int v = 0; v < nvars_; ++v) neg[v] = -mins[v];
        r = r.shifted(neg);
        if (shift_out) *shift_out = mins;
    }
    return r;
}

std::string Poly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest terms first reads better
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::vector<std::string> factors;
        for (int v = 0; v < nvars_; ++v) {
            if (e[v] == 0) continue;
            std::string f = names[v];
            if (e[v] != 1) f += "^" + std::to_string(e[v]);
            factors.push_back(std::move(f));
        }
        if (factors.empty()) {
            os << rat_to_string(a);
        } else {
            if (a != 1) os << rat_to_string(a) << "*";
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (i) os << "*";
                os << factors[i];
            }
        }
    }
    return os.str();
}

std::optional<Poly> poly_try_divide(const Poly& a, const Poly& b) {
    assert(!b.is_zero());
    Poly r = a, q(a.nvars());
    const auto& [eb, cb] = b.leading();
    while (!r.is_zero()) {
        const auto& [er, cr] = r.leading();
        Expo diff(er.size());
        for (std::size_t i = 0; i < er.size(); ++i) {
            diff[i] = er[i] - eb[i];
            if (diff[i] < 0) return std::nullopt;
        }
        Rat cq = cr / cb;
        Poly t = Poly::monomial(diff, cq);
        q += t;
        r -= t * b;
    }
    return q;
}

namespace {

// lc-normalization: lex-leading coefficient becomes 1
Poly monic(const Poly& p) {
    if (p.is_zero()) return p;
    return p * (Rat(1) / p.leading().second);
}

// Decompose p as a univariate polynomial in variable v with Poly coefficients.
std::map<int, Poly> by_var(const Poly& p, int v) {
    std::map<int, Poly> out;
    for (const auto& [e, c] : p.terms()) {
        Expo e2(e);
        int d = e2[v];
        e2[v] = 0;
        auto it = out.find(d);
        if (it == out.end()) it = out.emplace(d, Poly(p.nvars())).first;
        it->second.add_term(e2, c);
    }
    return out;
}

Poly from_var(const std::map<int, Poly>& coeffs, int nvars, int v) {
    Poly p(nvars);
    for (const auto& [d, c] : coeffs) {
        Expo sh(nvars, 0);
        sh[v] = d;
        p += c.shifted(sh);
    }
    return p;
}

Poly gcd_impl(const Poly& A, const Poly& B);

// content of p as a univariate polynomial in v
Poly content_in(const Poly& p, int v) {
    Poly g(p.nvars());
    for (const auto& [d, c] : by_var(p, v)) {
        g = gcd_impl(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

Poly prem(const Poly& P, const Poly& Q, int v, int nvars) {
    auto qc = by_var(Q, v);
    int dq = qc.rbegin()->first;
    Poly lcq = qc.rbegin()->second;
    Poly R = P;
    while (!R.is_zero()) {
        auto rc = by_var(R, v);
        int dr = rc.rbegin()->first;
        if (dr < dq) break;
        Poly lcr = rc.rbegin()->second;
        Expo sh(nvars, 0);
        sh[v] = dr - dq;
        R = R * lcq - Q.shifted(sh) * lcr;
    }
    return R;
}

Poly gcd_impl(const Poly& A, const Poly& B) {
    if (A.is_zero()) return monic(B);
    if (B.is_zero()) return monic(A);
    if (A.is_constant() || B.is_constant()) return Poly::constant(A.nvars(), Rat(1));
    int nvars = A.nvars();
    int v = -1;
    for (int k = 0; k < nvars; ++k) {
        if (A.degree(k) > 0 || B.degree(k) > 0) {
            v = k;
            break;
        }
    }
    if (v < 0) return Poly::constant(nvars, Rat(1));
    if (A.degree(v) == 0) {
        // v-free: gcd(A, content_v(B))
        return gcd_impl(A, content_in(B, v));
    }
    if (B.degree(v) == 0) return gcd_impl(content_in(A, v), B);

    Poly ca = content_in(A, v), cb = content_in(B, v);
    Poly g = gcd_impl(ca, cb);
    Poly P = *poly_try_divide(A, ca);
    Poly Q = *poly_try_divide(B, cb);
    if (P.degree(v) < Q.degree(v)) std::swap(P, Q);
    while (true) {
        Poly R = prem(P, Q, v, nvars);
        if (R.is_zero()) break;
        Poly cr = content_in(R, v);
        R = *poly_try_divide(R, cr);
        P = Q;
        Q = R;
        if (Q.degree(v) == 0) {
            Q = Poly::constant(nvars, Rat(1));
            break;
        }
    }
    Poly cq = content_in(Q, v);
    Poly pq = *poly_try_divide(Q, cq);
    return monic(g * pq);
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) { return gcd_impl(a, b); }

}  // namespace cdybe
