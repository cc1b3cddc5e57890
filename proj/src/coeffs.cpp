#include "cdybe/coeffs.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace cdybe {

ExpRational ExpRational::zero(int nvars) {
    ExpRational f;
    f.shift_.assign(nvars, 0);
    f.num_ = Poly::zero(nvars);
    return f;
}

ExpRational ExpRational::constant(int nvars, const Rat& c) {
    ExpRational f = zero(nvars);
    f.num_ = Poly::constant(nvars, c);
    return f;
}

ExpRational ExpRational::monomial(Expo e, const Rat& c) {
    int n = static_cast<int>(e.size());
    ExpRational f = zero(n);
    if (c == 0) return f;
    f.shift_ = std::move(e);
    f.num_ = Poly::constant(n, c);
    return f;
}

void ExpRational::push_den(const Poly& p, int mult) {
    assert(!p.is_zero() && mult > 0);
    Poly q = p;
    // factor the monomial part into shift (denominator side: negative)
    Expo mins(q.nvars()), neg(q.nvars());
    for (int v = 0; v < q.nvars(); ++v) {
        mins[v] = q.min_degree(v);
        neg[v] = -mins[v];
        shift_[v] -= mult * mins[v];
    }
    q = q.shifted(neg);
    Rat lc = q.leading().second;
    if (lc != 1) {
        q = q * (Rat(1) / lc);
        num_ = num_ * rat_pow(Rat(1) / lc, mult);
    }
    if (q.is_constant()) return;  // was a unit times a monomial
    den_[q] += mult;
}

ExpRational ExpRational::from_fraction(Poly num, Poly den) {
    if (den.is_zero()) throw pole_error("zero denominator");
    ExpRational f = zero(num.nvars());
    f.num_ = std::move(num);
    f.push_den(den, 1);
    f.normalize();
    return f;
}

void ExpRational::normalize() {
    if (num_.is_zero()) {
        *this = zero(nvars());
        return;
    }
    // cancel atoms dividing the numerator
    for (auto it = den_.begin(); it != den_.end();) {
        while (it->second > 0) {
            auto q = poly_try_divide(num_, it->first);
            if (!q) break;
            num_ = std::move(*q);
            --it->second;
        }
        it = it->second == 0 ? den_.erase(it) : std::next(it);
    }
    // monomial content of the numerator goes into the shift
    Expo mins(nvars()), neg(nvars());
    bool any = false;
    for (int v = 0; v < nvars(); ++v) {
        mins[v] = num_.min_degree(v);
        neg[v] = -mins[v];
        shift_[v] += mins[v];
        any = any || mins[v] != 0;
    }
    if (any) num_ = num_.shifted(neg);
}

Poly ExpRational::den_expanded() const {
    Poly d = Poly::constant(nvars(), Rat(1));
    for (const auto& [a, m] : den_)
        for (int i = 0; i < m; ++i) d = d * a;
    return d;
}

bool ExpRational::is_constant() const {
    if (is_zero()) return true;
    return num_.is_constant() && den_.empty() &&
           std::all_of(shift_.begin(), shift_.end(), [](int x) { return x == 0; });
}

Rat ExpRational::as_constant() const {
    if (is_zero()) return Rat(0);
    assert(is_constant());
    return num_.leading().second;
}

ExpRational ExpRational::operator-() const {
    ExpRational r = *this;
    r.num_ = -r.num_;
    return r;
}

ExpRational ExpRational::operator+(const ExpRational& o) const {
    assert(nvars() == o.nvars());
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    int n = nvars();
    ExpRational r = zero(n);
    // union denominator
    r.den_ = den_;
    for (const auto& [a, m] : o.den_) {
        auto it = r.den_.find(a);
        if (it == r.den_.end())
            r.den_[a] = m;
        else
            it->second = std::max(it->second, m);
    }
    Poly n1 = num_, n2 = o.num_;
    for (const auto& [a, m] : r.den_) {
        auto it1 = den_.find(a);
        int m1 = it1 == den_.end() ? 0 : it1->second;
        auto it2 = o.den_.find(a);
        int m2 = it2 == o.den_.end() ? 0 : it2->second;
        for (int i = m1; i < m; ++i) n1 = n1 * a;
        for (int i = m2; i < m; ++i) n2 = n2 * a;
    }
    // align monomial shifts
    Expo s(n), d1(n), d2(n);
    for (int v = 0; v < n; ++v) {
        s[v] = std::min(shift_[v], o.shift_[v]);
        d1[v] = shift_[v] - s[v];
        d2[v] = o.shift_[v] - s[v];
    }
    r.shift_ = std::move(s);
    r.num_ = n1.shifted(d1) + n2.shifted(d2);
    r.normalize();
    return r;
}

ExpRational ExpRational::operator-(const ExpRational& o) const { return *this + (-o); }

ExpRational& ExpRational::operator+=(const ExpRational& o) {
    *this = *this + o;
    return *this;
}

ExpRational ExpRational::operator*(const ExpRational& o) const {
    assert(nvars() == o.nvars());
    if (is_zero() || o.is_zero()) return zero(nvars());
    ExpRational r = zero(nvars());
    r.shift_ = expo_add(shift_, o.shift_);
    r.num_ = num_ * o.num_;
    r.den_ = den_;
    for (const auto& [a, m] : o.den_) r.den_[a] += m;
    r.normalize();
    return r;
}

ExpRational ExpRational::operator*(const Rat& c) const {
    if (c == 0) return zero(nvars());
    ExpRational r = *this;
    r.num_ = r.num_ * c;
    return r;
}

ExpRational ExpRational::inverse() const {
    if (is_zero()) throw pole_error("inverse of zero");
    ExpRational r = zero(nvars());
    for (int v = 0; v < nvars(); ++v) r.shift_[v] = -shift_[v];
    r.num_ = den_expanded();
    r.push_den(num_, 1);
    r.normalize();
    return r;
}

ExpRational ExpRational::operator/(const ExpRational& o) const { return *this * o.inverse(); }

ExpRational ExpRational::derived(const std::vector<Rat>& w) const {
    if (is_zero()) return *this;
    int n = nvars();
    auto dpoly = [&](const Poly& p) {
        Poly r(n);
        for (const auto& [e, c] : p.terms()) {
            Rat k(0);
            for (int v = 0; v < n; ++v)
                if (e[v] != 0) k += w[v] * e[v];
            r.add_term(e, c * k);
        }
        return r;
    };
    Rat ks(0);
    for (int v = 0; v < n; ++v)
        if (shift_[v] != 0) ks += w[v] * shift_[v];
    // f = z^s N / prod a_i^{e_i}
    // f' = z^s [ ((w.s) N + N') prod a_i - N sum_i e_i a_i' prod_{j!=i} a_j ]
    //          / prod a_i^{e_i + 1}
    Poly prod_all = Poly::constant(n, Rat(1));
    for (const auto& [a, m] : den_) prod_all = prod_all * a;
    Poly acc = (num_ * ks + dpoly(num_)) * prod_all;
    for (auto it = den_.begin(); it != den_.end(); ++it) {
        Poly rest = Poly::constant(n, Rat(1));
        for (auto jt = den_.begin(); jt != den_.end(); ++jt)
            if (jt != it) rest = rest * jt->first;
        acc -= num_ * dpoly(it->first) * rest * Rat(it->second);
    }
    ExpRational r = zero(n);
    r.shift_ = shift_;
    r.num_ = std::move(acc);
    for (const auto& [a, m] : den_) r.den_[a] = m + 1;
    r.normalize();
    return r;
}

ExpRational ExpRational::stretched(int m) const {
    ExpRational r = zero(nvars());
    r.shift_ = shift_;
    for (int& x : r.shift_) x *= m;
    r.num_ = num_.stretched(m);
    for (const auto& [a, k] : den_) r.den_[a.stretched(m)] += k;
    r.normalize();
    return r;
}

std::optional<ExpRational> ExpRational::compressed(int m) const {
    ExpRational r = zero(nvars());
    r.shift_ = shift_;
    for (int& x : r.shift_) {
        if (x % m != 0) return std::nullopt;
        x /= m;
    }
    auto n2 = num_.compressed(m);
    if (!n2) return std::nullopt;
    r.num_ = std::move(*n2);
    for (const auto& [a, k] : den_) {
        auto a2 = a.compressed(m);
        if (!a2) return std::nullopt;
        r.den_[std::move(*a2)] += k;
    }
    r.normalize();
    return r;
}

ExpRational ExpRational::scaled_vars(const std::vector<Rat>& c, int eps) const {
    if (is_zero()) return *this;
    assert(eps == 1 || eps == -1);
    for (const Rat& x : c)
        if (x == 0) throw config_error("variable scaling must be nonzero");
    int n = nvars();
    ExpRational r = zero(n);
    Rat unit(1);
    for (int v = 0; v < n; ++v) {
        unit *= rat_pow(c[v], shift_[v]);
        r.shift_[v] = eps * shift_[v];
    }
    Expo sn;
    r.num_ = num_.scaled_vars(c, eps, &sn) * unit;
    for (int v = 0; v < n; ++v) r.shift_[v] += sn[v];
    for (const auto& [a, m] : den_) {
        Expo sa;
        Poly a2 = a.scaled_vars(c, eps, &sa);
        for (int v = 0; v < n; ++v) r.shift_[v] -= m * sa[v];
        r.push_den(a2, m);
    }
    r.normalize();
    return r;
}

Rat ExpRational::eval(const std::vector<Rat>& point) const {
    if (is_zero()) return Rat(0);
    for (const Rat& p : point)
        if (p == 0) throw pole_error("evaluation point must have nonzero coordinates");
    Rat v = num_.eval(point);
    for (const auto& [a, m] : den_) {
        Rat av = a.eval(point);
        if (av == 0) throw pole_error("denominator vanishes at evaluation point");
        v /= rat_pow(av, m);
    }
    for (int k = 0; k < nvars(); ++k)
        if (shift_[k] != 0) v *= rat_pow(point[k], shift_[k]);
    return v;
}

Rat ExpRational::limit_zero(const std::vector<long>& w) const {
    if (is_zero()) return Rat(0);
    for (long x : w)
        if (x <= 0) throw usage_error("limit weights must be positive");
    long ord = 0;
    for (int v = 0; v < nvars(); ++v) ord += static_cast<long>(shift_[v]) * w[v];
    auto un = num_.eval_weighted(w);
    assert(!un.empty());
    ord += un.begin()->first;
    Rat lead = un.begin()->second;
    for (const auto& [a, m] : den_) {
        auto ua = a.eval_weighted(w);
        assert(!ua.empty());
        ord -= m * ua.begin()->first;
        lead /= rat_pow(ua.begin()->second, m);
    }
    if (ord < 0)
        throw pole_error("pole at z=0 in " + str(default_var_names(nvars())));
    if (ord > 0) return Rat(0);
    return lead;
}

std::string ExpRational::str(const std::vector<std::string>& names) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool mono = std::any_of(shift_.begin(), shift_.end(), [](int x) { return x != 0; });
    if (mono) {
        bool wrote = false;
        for (int v = 0; v < nvars(); ++v) {
            if (shift_[v] == 0) continue;
            if (wrote) os << "*";
            os << names[v];
            if (shift_[v] != 1) os << "^" << shift_[v];
            wrote = true;
        }
        os << "*";
    }
    bool paren_num = num_.term_count() > 1;
    if (paren_num) os << "(";
    os << num_.str(names);
    if (paren_num) os << ")";
    for (const auto& [a, m] : den_) os << "*(" << a.str(names) << ")^-" << m;
    return os.str();
}

nlohmann::ordered_json ExpRational::to_json() const {
    auto poly_json = [](const Poly& p) {
        nlohmann::ordered_json terms = nlohmann::ordered_json::array();
        for (const auto& [e, c] : p.terms()) {
            nlohmann::ordered_json t;
            t["e"] = e;
            t["c"] = rat_to_string(c);
            terms.push_back(std::move(t));
        }
        return terms;
    };
    nlohmann::ordered_json j;
    j["shift"] = shift_;
    j["num"] = poly_json(num_);
    nlohmann::ordered_json den = nlohmann::ordered_json::array();
    for (const auto& [a, m] : den_) {
        nlohmann::ordered_json f;
        f["atom"] = poly_json(a);
        f["mult"] = m;
        den.push_back(std::move(f));
    }
    j["den"] = std::move(den);
    return j;
}

std::vector<std::string> default_var_names(int nvars, const std::string& stem) {
    std::vector<std::string> names;
    names.reserve(nvars);
    for (int k = 0; k < nvars; ++k) names.push_back(stem + std::to_string(k + 1));
    return names;
}

}  // namespace cdybe
