#include "cdybe/uea.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>

namespace cdybe {

std::vector<std::pair<Word, Rat>> UEnv::normal_order(const Word& raw) const {
    if (static_cast<int>(raw.size()) > max_degree_)
        throw degree_error("word degree " + std::to_string(raw.size()) + " exceeds cap " +
                           std::to_string(max_degree_) + " (raise --max-degree)");
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = memo_.find(raw);
        if (it != memo_.end()) return it->second;
    }
    std::vector<std::pair<Word, Rat>> out;
    std::size_t inv = raw.size();
    for (std::size_t i = 0; i + 1 < raw.size(); ++i)
        if (raw[i] > raw[i + 1]) {
            inv = i;
            break;
        }
    if (inv == raw.size()) {
        out.emplace_back(raw, Rat(1));
    } else {
        std::map<Word, Rat> acc;
        Word swapped = raw;
        std::swap(swapped[inv], swapped[inv + 1]);
        for (const auto& [w, c] : normal_order(swapped)) acc[w] += c;
        // commutator remainder
        for (const auto& [l, c] : L_->bracket(raw[inv], raw[inv + 1])) {
            Word shorter;
            shorter.reserve(raw.size() - 1);
            shorter.insert(shorter.end(), raw.begin(), raw.begin() + inv);
            shorter.push_back(static_cast<std::uint16_t>(l));
            shorter.insert(shorter.end(), raw.begin() + inv + 2, raw.end());
            for (const auto& [w, c2] : normal_order(shorter)) acc[w] += c * c2;
        }
        for (auto& [w, c] : acc)
            if (c != 0) out.emplace_back(w, c);
    }
    std::lock_guard<std::mutex> lk(mu_);
    return memo_.emplace(raw, std::move(out)).first->second;
}

Vec UEnv::word_weight(const Word& w) const {
    Vec v(L_->n, Rat(0));
    for (auto l : w) {
        Root r = L_->weight_of_letter(l);
        for (int i = 0; i < L_->n; ++i) v[i] += r[i];
    }
    return v;
}

Tensor Tensor::unit(const UEnv& env, int slots) {
    Tensor t(slots, env.nvars());
    t.add_term(Key(slots), env.one());
    return t;
}

void Tensor::add_term(const Key& k, const ExpRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Tensor Tensor::operator+(const Tensor& o) const {
    Tensor r = *this;
    r += o;
    return r;
}

Tensor Tensor::operator-(const Tensor& o) const {
    Tensor r = *this;
    r -= o;
    return r;
}

Tensor Tensor::operator-() const {
    Tensor r(slots_, nvars_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

Tensor& Tensor::operator+=(const Tensor& o) {
    assert(slots_ == o.slots_);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
    assert(slots_ == o.slots_);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

Tensor Tensor::operator*(const Rat& c) const {
    Tensor r(slots_, nvars_);
    if (c == 0) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

Tensor Tensor::scaled(const ExpRational& c) const {
    Tensor r(slots_, nvars_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.add_term(k, v * c);
    return r;
}

bool Tensor::in_g_tensor() const { return max_word_length() <= 1; }

int Tensor::max_word_length() const {
    std::size_t mx = 0;
    for (const auto& [k, c] : terms_)
        for (const Word& w : k) mx = std::max(mx, w.size());
    return static_cast<int>(mx);
}

static std::string word_name(const LieAlgebra& L, const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ".";
        os << L.letter_name(w[i]);
    }
    return os.str();
}

std::string Tensor::witness(const LieAlgebra& L) const {
    if (terms_.empty()) return "";
    const auto& [k, c] = *terms_.begin();
    std::ostringstream os;
    for (std::size_t s = 0; s < k.size(); ++s) {
        if (s) os << " (x) ";
        os << word_name(L, k[s]);
    }
    os << "  coeff " << c.str(default_var_names(nvars_));
    return os.str();
}

std::string Tensor::str(const LieAlgebra& L) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "[" << c.str(default_var_names(nvars_)) << "] ";
        for (std::size_t s = 0; s < k.size(); ++s) {
            if (s) os << "(x)";
            os << word_name(L, k[s]);
        }
    }
    return os.str();
}

nlohmann::ordered_json Tensor::to_json(const LieAlgebra& L) const {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [k, c] : terms_) {
        nlohmann::ordered_json t;
        nlohmann::ordered_json legs = nlohmann::ordered_json::array();
        for (const Word& w : k) legs.push_back(word_name(L, w));
        t["legs"] = std::move(legs);
        t["coeff"] = c.str(default_var_names(nvars_));
        terms.push_back(std::move(t));
    }
    nlohmann::ordered_json j;
    j["slots"] = slots_;
    j["terms"] = std::move(terms);
    return j;
}

Tensor tensor_mul(const UEnv& env, const Tensor& a, const Tensor& b) {
    assert(a.slots() == b.slots());
    Tensor out(a.slots(), a.nvars());
    for (const auto& [k1, c1] : a.terms()) {
        for (const auto& [k2, c2] : b.terms()) {
            // slot-wise straightening, then the cartesian product of results
            std::vector<std::vector<std::pair<Word, Rat>>> per_slot(a.slots());
            for (int s = 0; s < a.slots(); ++s) {
                Word concat = k1[s];
                concat.insert(concat.end(), k2[s].begin(), k2[s].end());
                per_slot[s] = env.normal_order(concat);
            }
            ExpRational base = c1 * c2;
            Key key(a.slots());
            std::function<void(int, Rat)> rec = [&](int s, Rat coeff) {
                if (s == a.slots()) {
                    out.add_term(key, base * coeff);
                    return;
                }
                for (const auto& [w, c] : per_slot[s]) {
                    key[s] = w;
                    rec(s + 1, coeff * c);
                }
            };
            rec(0, Rat(1));
        }
    }
    return out;
}

Tensor tensor_commutator(const UEnv& env, const Tensor& a, const Tensor& b) {
    return tensor_mul(env, a, b) - tensor_mul(env, b, a);
}

Tensor tensor_place(const Tensor& t, int new_slots, const std::vector<int>& slot_map) {
    assert(static_cast<int>(slot_map.size()) == t.slots());
    std::vector<bool> used(new_slots, false);
    for (int s : slot_map) {
        if (s < 0 || s >= new_slots || used[s]) throw usage_error("invalid slot placement");
        used[s] = true;
    }
    Tensor out(new_slots, t.nvars());
    for (const auto& [k, c] : t.terms()) {
        Key key(new_slots);
        for (int s = 0; s < t.slots(); ++s) key[slot_map[s]] = k[s];
        out.add_term(key, c);
    }
    return out;
}

Tensor tensor_merge_slots(const UEnv& env, const Tensor& t,
                          const std::vector<std::vector<int>>& groups) {
    int out_slots = static_cast<int>(groups.size());
    Tensor out(out_slots, t.nvars());
    for (const auto& [k, c] : t.terms()) {
        std::vector<std::vector<std::pair<Word, Rat>>> per_group(out_slots);
        for (int g = 0; g < out_slots; ++g) {
            Word concat;
            for (int s : groups[g]) concat.insert(concat.end(), k[s].begin(), k[s].end());
            per_group[g] = env.normal_order(concat);
        }
        Key key(out_slots);
        std::function<void(int, Rat)> rec = [&](int g, Rat coeff) {
            if (g == out_slots) {
                out.add_term(key, c * coeff);
                return;
            }
            for (const auto& [w, cg] : per_group[g]) {
                key[g] = w;
                rec(g + 1, coeff * cg);
            }
        };
        rec(0, Rat(1));
    }
    return out;
}

Tensor mult_map(const UEnv& env, const Tensor& t) {
    if (t.slots() != 2) throw usage_error("mult_map needs exactly 2 slots");
    return tensor_merge_slots(env, t, {{0, 1}});
}

Tensor apply_aut(const UEnv& env, const Tensor& t, const Involution& th, int slot) {
    Tensor out(t.slots(), t.nvars());
    for (const auto& [k, c] : t.terms()) {
        Rat scale(1);
        Word mapped;
        mapped.reserve(k[slot].size());
        for (auto l : k[slot]) {
            auto [cf, l2] = th.apply_letter(l);
            scale *= cf;
            mapped.push_back(static_cast<std::uint16_t>(l2));
        }
        for (const auto& [w, c2] : env.normal_order(mapped)) {
            Key key = k;
            key[slot] = w;
            out.add_term(key, c * (scale * c2));
        }
    }
    return out;
}

Tensor apply_aut_all(const UEnv& env, const Tensor& t, const Involution& th) {
    Tensor out = t;
    for (int s = 0; s < t.slots(); ++s) out = apply_aut(env, out, th, s);
    return out;
}

Tensor eta_twist(const UEnv& env, const Tensor& t, int slot, int sign) {
    const SubspaceA& A = env.sub();
    if (A.dimension() != env.alg().n)
        throw unsupported_error("eta twist requires the full Cartan subspace a = h");
    Tensor out(t.slots(), t.nvars());
    for (const auto& [k, c] : t.terms()) {
        Vec w = env.word_weight(k[slot]);
        for (auto& x : w) x = -Rat(sign) * x;
        out.add_term(k, c * ExpRational::monomial(A.expo_of(w)));
    }
    return out;
}

Tensor insert_cartan(const UEnv& env, const Tensor& t, int slot, const Vec& coroot_coords) {
    Tensor out(t.slots(), t.nvars());
    const LieAlgebra& L = env.alg();
    for (const auto& [k, c] : t.terms()) {
        for (int i = 0; i < L.n; ++i) {
            if (coroot_coords[i] == 0) continue;
            Word raw;
            raw.reserve(k[slot].size() + 1);
            raw.push_back(static_cast<std::uint16_t>(L.letter_t(i)));
            raw.insert(raw.end(), k[slot].begin(), k[slot].end());
            for (const auto& [w, c2] : env.normal_order(raw)) {
                Key key = k;
                key[slot] = w;
                out.add_term(key, c * (coroot_coords[i] * c2));
            }
        }
    }
    return out;
}

Tensor derive_coeffs(const UEnv& env, const Tensor& t, const Vec& mu) {
    std::vector<Rat> w = env.sub().derive_weights(mu);
    Tensor out(t.slots(), t.nvars());
    for (const auto& [k, c] : t.terms()) out.add_term(k, c.derived(w));
    return out;
}

Tensor apply_E(const UEnv& env, const Tensor& t, int slot) {
    const SubspaceA& A = env.sub();
    Tensor out(t.slots(), t.nvars());
    for (int j = 0; j < A.dimension(); ++j)
        out += insert_cartan(env, derive_coeffs(env, t, A.dual[j]), slot, A.basis[j]);
    return out;
}

Tensor tensor_stretched(const Tensor& t, int m) {
    Tensor out(t.slots(), t.nvars());
    for (const auto& [k, c] : t.terms()) out.add_term(k, c.stretched(m));
    return out;
}

Tensor tensor_swap(const Tensor& t, int s1, int s2) {
    Tensor out(t.slots(), t.nvars());
    for (const auto& [k, c] : t.terms()) {
        Key key = k;
        std::swap(key[s1], key[s2]);
        out.add_term(key, c);
    }
    return out;
}

Tensor letter_tensor(const UEnv& env, int letter) {
    Tensor t(1, env.nvars());
    t.add_term(Key{Word{static_cast<std::uint16_t>(letter)}}, env.one());
    return t;
}

Tensor gvec_tensor(const UEnv& env, const std::vector<std::pair<int, Rat>>& g) {
    Tensor t(1, env.nvars());
    for (const auto& [l, c] : g)
        t.add_term(Key{Word{static_cast<std::uint16_t>(l)}}, env.one() * c);
    return t;
}

Tensor varpi_h(const UEnv& env) {
    const LieAlgebra& L = env.alg();
    Tensor t(2, env.nvars());
    for (int i = 0; i < L.n; ++i)
        for (int j = 0; j < L.n; ++j) {
            Rat c = L.rs.form_inv[i][j];
            if (c == 0) continue;
            t.add_term(Key{Word{static_cast<std::uint16_t>(L.letter_t(i))},
                           Word{static_cast<std::uint16_t>(L.letter_t(j))}},
                       env.one() * c);
        }
    return t;
}

Tensor varpi_of(const UEnv& env, const std::vector<Vec>& basis, const Mat& gram_inv) {
    const LieAlgebra& L = env.alg();
    int d = static_cast<int>(basis.size());
    Tensor t(2, env.nvars());
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            Rat g = gram_inv[a][b];
            if (g == 0) continue;
            for (int i = 0; i < L.n; ++i)
                for (int j = 0; j < L.n; ++j) {
                    Rat c = g * basis[a][i] * basis[b][j];
                    if (c == 0) continue;
                    t.add_term(Key{Word{static_cast<std::uint16_t>(L.letter_t(i))},
                                   Word{static_cast<std::uint16_t>(L.letter_t(j))}},
                               env.one() * c);
                }
        }
    return t;
}

Tensor varpi(const UEnv& env) {
    const LieAlgebra& L = env.alg();
    Tensor t = varpi_h(env);
    for (int k = 1; k <= L.m; ++k) {
        t.add_term(Key{Word{static_cast<std::uint16_t>(L.letter_f(k))},
                       Word{static_cast<std::uint16_t>(L.letter_e(k))}},
                   env.one());
        t.add_term(Key{Word{static_cast<std::uint16_t>(L.letter_e(k))},
                       Word{static_cast<std::uint16_t>(L.letter_f(k))}},
                   env.one());
    }
    return t;
}

Tensor omega(const UEnv& env) { return mult_map(env, varpi(env)); }

Tensor omega_pm(const UEnv& env, int sign) {
    const LieAlgebra& L = env.alg();
    Tensor t = varpi_h(env) * rat(1, 2);
    for (int k = 1; k <= L.m; ++k) {
        int fst = sign > 0 ? L.letter_e(k) : L.letter_f(k);
        int snd = sign > 0 ? L.letter_f(k) : L.letter_e(k);
        t.add_term(Key{Word{static_cast<std::uint16_t>(fst)}, Word{static_cast<std::uint16_t>(snd)}},
                   env.one());
    }
    return t;
}

}  // namespace cdybe
