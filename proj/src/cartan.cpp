#include "cdybe/cartan.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <sstream>

namespace cdybe {

SimpleType simple_type_from_letter(char c) {
    switch (c) {
        case 'A': return SimpleType::A;
        case 'B': return SimpleType::B;
        case 'C': return SimpleType::C;
        case 'D': return SimpleType::D;
        case 'E': return SimpleType::E;
        case 'F': return SimpleType::F;
        case 'G': return SimpleType::G;
        default: throw config_error(std::string("unknown simple type: ") + c);
    }
}

char simple_type_letter(SimpleType t) {
    switch (t) {
        case SimpleType::A: return 'A';
        case SimpleType::B: return 'B';
        case SimpleType::C: return 'C';
        case SimpleType::D: return 'D';
        case SimpleType::E: return 'E';
        case SimpleType::F: return 'F';
        case SimpleType::G: return 'G';
    }
    return '?';
}

namespace {

void validate_type(SimpleType t, int n) {
    bool ok = false;
    switch (t) {
        case SimpleType::A: ok = n >= 1; break;
        case SimpleType::B: ok = n >= 2; break;
        case SimpleType::C: ok = n >= 2; break;
        case SimpleType::D: ok = n >= 3; break;
        case SimpleType::E: ok = n >= 6 && n <= 8; break;
        case SimpleType::F: ok = n == 4; break;
        case SimpleType::G: ok = n == 2; break;
    }
    if (!ok || n > 8)
        throw config_error("invalid simple type/rank: " +
                           std::string(1, simple_type_letter(t)) + std::to_string(n));
}

// adjacency of the Dynkin diagram plus squared-length data
void diagram_data(SimpleType t, int n, std::vector<std::pair<int, int>>& edges,
                  std::vector<Rat>& dhalf) {
    edges.clear();
    dhalf.assign(n, Rat(1));
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) edges.emplace_back(i, i + 1);
    };
    switch (t) {
        case SimpleType::A: chain(n); break;
        case SimpleType::B:
            chain(n);
            dhalf[n - 1] = rat(1, 2);
            break;
        case SimpleType::C:
            chain(n);
            for (int i = 0; i + 1 < n; ++i) dhalf[i] = rat(1, 2);
            break;
        case SimpleType::D:
            chain(n - 1);
            edges.emplace_back(n - 3, n - 1);
            break;
        case SimpleType::E:
            // Bourbaki: chain 1-3-4-5-6(-7-8), node 2 attached to 4
            edges.emplace_back(0, 2);
            edges.emplace_back(2, 3);
            edges.emplace_back(1, 3);
            for (int i = 3; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            break;
        case SimpleType::F:
            chain(4);
            dhalf[2] = rat(1, 2);
            dhalf[3] = rat(1, 2);
            break;
        case SimpleType::G:
            chain(2);
            dhalf[0] = rat(1, 3);
            break;
    }
}

}  // namespace

int RootSystem::height(const Root& r) const {
    return std::accumulate(r.begin(), r.end(), 0);
}

int RootSystem::signed_index(const Root& r) const {
    auto it = pos_index.find(r);
    if (it != pos_index.end()) return it->second + 1;
    Root neg(r);
    for (int& x : neg) x = -x;
    it = pos_index.find(neg);
    if (it != pos_index.end()) return -(it->second + 1);
    return 0;
}

Root RootSystem::root_of(int k) const {
    assert(k != 0);
    Root r = positive[std::abs(k) - 1];
    if (k < 0)
        for (int& x : r) x = -x;
    return r;
}

Rat RootSystem::pair(const Vec& u, const Vec& v) const {
    Rat s(0);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            if (u[i] != 0 && v[j] != 0) s += u[i] * form[i][j] * v[j];
    return s;
}

Rat RootSystem::pair_roots(const Root& a, const Root& b) const {
    Rat s(0);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            if (a[i] != 0 && b[j] != 0) s += Rat(a[i]) * form[i][j] * Rat(b[j]);
    return s;
}

RootSystem build_root_system(SimpleType type, int rank) {
    validate_type(type, rank);
    RootSystem rs;
    rs.type = type;
    rs.rank = rank;
    std::vector<std::pair<int, int>> edges;
    diagram_data(type, rank, edges, rs.dhalf);

    // form: simple roots joined by an edge pair to -max of their half-lengths
    // ... concretely (alpha_i, alpha_j) = -max(d_i, d_j) for edges of any
    // multiplicity, which reproduces the standard Cartan matrices below.
    rs.form.assign(rank, Vec(rank, Rat(0)));
    for (int i = 0; i < rank; ++i) rs.form[i][i] = 2 * rs.dhalf[i];
    for (auto [i, j] : edges) {
        Rat v = -std::max(rs.dhalf[i], rs.dhalf[j]);
        rs.form[i][j] = v;
        rs.form[j][i] = v;
    }
    rs.cartan.assign(rank, Vec(rank, Rat(0)));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            Rat c = rs.form[i][j] / rs.dhalf[j];
            if (!is_integer(c)) throw config_error("non-integral Cartan entry");
            rs.cartan[i][j] = c;
        }
    auto inv = mat_inverse(rs.form);
    if (!inv) throw config_error("degenerate form");
    rs.form_inv = *inv;

    // closure under simple reflections
    std::set<Root> all;
    std::vector<Root> queue;
    for (int i = 0; i < rank; ++i) {
        Root r(rank, 0);
        r[i] = 1;
        all.insert(r);
        queue.push_back(r);
    }
    while (!queue.empty()) {
        Root r = queue.back();
        queue.pop_back();
        for (int j = 0; j < rank; ++j) {
            // <r, alpha_j^vee> = sum_i m_i C[i][j]
            Rat cr(0);
            for (int i = 0; i < rank; ++i)
                if (r[i] != 0) cr += Rat(r[i]) * rs.cartan[i][j];
            assert(is_integer(cr));
            long k = cr.get_num().get_si();
            Root s = r;
            s[j] -= static_cast<int>(k);
            if (all.insert(s).second) queue.push_back(s);
        }
    }
    for (const Root& r : all) {
        bool pos = std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; });
        bool neg = std::all_of(r.begin(), r.end(), [](int x) { return x <= 0; });
        if (pos && !neg) rs.positive.push_back(r);
        if (!pos && !neg) throw config_error("root closure produced a non-signed vector");
    }
    std::sort(rs.positive.begin(), rs.positive.end(), [&](const Root& a, const Root& b) {
        int ha = rs.height(a), hb = rs.height(b);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    for (std::size_t i = 0; i < rs.positive.size(); ++i) rs.pos_index[rs.positive[i]] = static_cast<int>(i);

    rs.rho.assign(rank, Rat(0));
    for (const Root& r : rs.positive)
        for (int i = 0; i < rank; ++i) rs.rho[i] += Rat(r[i], 2);
    return rs;
}

int LieAlgebra::signed_root_of_letter(int l) const {
    if (l < n) return 0;
    if (l < n + m) return -(m - (l - n));
    return l - n - m + 1;
}

Root LieAlgebra::weight_of_letter(int l) const {
    int k = signed_root_of_letter(l);
    if (k == 0) return Root(n, 0);
    return rs.root_of(k);
}

std::vector<std::pair<int, Rat>> LieAlgebra::t_of(const Vec& mu) const {
    std::vector<std::pair<int, Rat>> out;
    for (int i = 0; i < n; ++i)
        if (mu[i] != 0) out.emplace_back(letter_t(i), mu[i]);
    return out;
}

std::string LieAlgebra::letter_name(int l) const {
    int k = signed_root_of_letter(l);
    if (k == 0) return "t" + std::to_string(l + 1);
    std::ostringstream os;
    os << (k > 0 ? "e[" : "f[");
    Root r = rs.root_of(std::abs(k));
    for (int i = 0; i < n; ++i) {
        if (i) os << ",";
        os << r[i];
    }
    os << "]";
    return os.str();
}

namespace {

// Integral Chevalley structure constants via extraspecial pairs
// (signs fixed deterministically by the (height, lex) root order).
class ChevalleyTable {
  public:
    explicit ChevalleyTable(const RootSystem& rs) : rs_(rs), m_(rs.n_positive()) {
        // extraspecial pairs in increasing height order
        for (int g = 0; g < m_; ++g) {
            const Root& gamma = rs_.positive[g];
            if (rs_.height(gamma) == 1) continue;
            for (int a = 0; a < m_; ++a) {
                Root rest = expo_sub(gamma, rs_.positive[a]);
                int sb = rs_.signed_index(rest);
                if (sb > 0) {
                    int b = sb - 1;
                    npos_[{a + 1, b + 1}] = Rat(p_value(a + 1, b + 1) + 1);
                    extraspecial_[g] = {a + 1, b + 1};
                    break;
                }
            }
        }
        // remaining special pairs, increasing height of the sum
        for (int g = 0; g < m_; ++g) {
            auto xs = extraspecial_.find(g);
            if (xs == extraspecial_.end()) continue;
            const Root& gamma = rs_.positive[g];
            auto [a1, b1] = xs->second;
            for (int a = a1; a < m_; ++a) {
                Root rest = expo_sub(gamma, rs_.positive[a]);
                int sb = rs_.signed_index(rest);
                if (sb <= 0) continue;
                int b = sb - 1;
                if (a + 1 >= b + 1) continue;  // keep a < b
                if (a + 1 == a1 && b + 1 == b1) continue;
                // Carter's four-root identity relative to the extraspecial pair
                Rat t(0);
                int sa = a + 1, sbb = b + 1;
                Root d1 = expo_sub(rs_.positive[a1 - 1], rs_.positive[b]);  // alpha1 - beta
                if (rs_.signed_index(d1) != 0)
                    t += n_any(-sbb, a1) * n_any(-sa, b1) / rs_.pair_roots(d1, d1);
                Root d2 = expo_sub(rs_.positive[a1 - 1], rs_.positive[a]);  // alpha1 - alpha
                if (rs_.signed_index(d2) != 0)
                    t += n_any(a1, -sa) * n_any(-sbb, b1) / rs_.pair_roots(d2, d2);
                Rat val = t * rs_.pair_roots(gamma, gamma) / npos_.at({a1, b1});
                npos_[{sa, sbb}] = val;
            }
        }
    }

    // N_{mu,nu} for signed roots with mu+nu a root
    Rat n_any(int a, int b) {
        auto key = std::make_pair(a, b);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        Rat v = compute(a, b);
        memo_[key] = v;
        return v;
    }

    int p_value(int a, int b) const {
        // max k with beta - k alpha a root
        Root alpha = rs_.root_of(a), beta = rs_.root_of(b);
        int p = 0;
        Root cur = expo_sub(beta, alpha);
        while (rs_.signed_index(cur) != 0) {
            ++p;
            cur = expo_sub(cur, alpha);
        }
        return p;
    }

  private:
    Rat compute(int a, int b) {
        if (a > 0 && b > 0) {
            if (a < b) return npos_.at({a, b});
            return -npos_.at({b, a});
        }
        if (a < 0 && b < 0) return -n_any(-a, -b);
        // mixed signs: rotate within the zero-sum triple (a, b, g)
        Root sum = expo_add(rs_.root_of(a), rs_.root_of(b));
        int g = -rs_.signed_index(sum);
        assert(g != 0);
        Rat gg = rs_.pair_roots(rs_.root_of(g), rs_.root_of(g));
        if ((b > 0) == (g > 0)) {
            // N(a,b)/( -a-b,..) ... use N(a,b) = N(b,g) (g',g')/(a,a) with g' = g
            Rat aa = rs_.pair_roots(rs_.root_of(a), rs_.root_of(a));
            return n_any(b, g) * gg / aa;
        }
        assert((a > 0) == (g > 0));
        Rat bb = rs_.pair_roots(rs_.root_of(b), rs_.root_of(b));
        return n_any(g, a) * gg / bb;
    }

    const RootSystem& rs_;
    int m_;
    std::map<std::pair<int, int>, Rat> npos_;
    std::map<int, std::pair<int, int>> extraspecial_;
    std::map<std::pair<int, int>, Rat> memo_;
};

// Solve a_i in F_2 with sum_i m_i a_i = [beta short] for all positive
// roots; empty result when inconsistent.
std::optional<std::vector<int>> short_parity_vector(const RootSystem& rs) {
    Rat long2(2);
    int n = rs.rank, rows = rs.n_positive();
    std::vector<std::vector<int>> a(rows, std::vector<int>(n + 1, 0));
    for (int r = 0; r < rows; ++r) {
        for (int i = 0; i < n; ++i) a[r][i] = rs.positive[r][i] & 1;
        a[r][n] = rs.len2(rs.positive[r]) == long2 ? 0 : 1;
    }
    std::vector<int> pivot_row(n, -1);
    int rr = 0;
    for (int c = 0; c < n && rr < rows; ++c) {
        int p = -1;
        for (int i = rr; i < rows; ++i)
            if (a[i][c]) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(a[rr], a[p]);
        for (int i = 0; i < rows; ++i)
            if (i != rr && a[i][c])
                for (int j = c; j <= n; ++j) a[i][j] ^= a[rr][j];
        pivot_row[c] = rr;
        ++rr;
    }
    for (int i = rr; i < rows; ++i)
        if (a[i][n]) return std::nullopt;
    std::vector<int> sol(n, 0);
    for (int c = 0; c < n; ++c)
        if (pivot_row[c] >= 0) sol[c] = a[pivot_row[c]][n];
    return sol;
}

}  // namespace

LieAlgebra build_lie_algebra(SimpleType type, int rank, const std::map<int, Rat>* scaling) {
    LieAlgebra L;
    L.rs = build_root_system(type, rank);
    L.n = rank;
    L.m = L.rs.n_positive();
    L.dim = L.n + 2 * L.m;

    ChevalleyTable chev(L.rs);

    // root-vector scalars c with [e_b, e_{-b}] = t_b and rational Chevalley
    // involutions; see sigma_d below
    auto parity = short_parity_vector(L.rs);
    std::map<int, Rat> c;  // signed root -> scalar
    for (int k = 1; k <= L.m; ++k) {
        const Root& beta = L.rs.positive[k - 1];
        Rat len2 = L.rs.len2(beta);
        Rat cpos, cneg, d;
        if (parity) {
            long e = 0;
            for (int i = 0; i < rank; ++i) e += static_cast<long>(beta[i]) * (*parity)[i];
            // c^2 = 2^e * len2/2, integral power by the parity constraint
            Rat c2 = rat_pow(Rat(2), e) * len2 / 2;
            auto root = rat_sqrt(c2);
            if (!root) throw config_error("internal: parity scheme not a square");
            cpos = *root;
            cneg = cpos / rat_pow(Rat(2), e);
            d = Rat(1);
        } else {
            cpos = len2 / 2;
            cneg = Rat(1);
            d = len2 / 2;
        }
        if (scaling) {
            auto it = scaling->find(k);
            if (it != scaling->end()) {
                if (it->second == 0) throw config_error("root-vector scaling must be nonzero");
                cpos *= it->second;
                cneg /= it->second;
                d *= it->second * it->second;
            }
        }
        c[k] = cpos;
        c[-k] = cneg;
        L.sigma_d[k] = d;
    }

    // bracket table
    L.table.assign(L.dim, std::vector<std::vector<std::pair<int, Rat>>>(L.dim));
    auto set_bracket = [&](int a, int b, std::vector<std::pair<int, Rat>> v) {
        L.table[a][b] = v;
        for (auto& [l, coeff] : v) coeff = -coeff;
        L.table[b][a] = std::move(v);
    };
    for (int i = 0; i < L.n; ++i) {
        for (int k = 1; k <= L.m; ++k) {
            const Root& beta = L.rs.positive[k - 1];
            Vec alpha_i(L.n, Rat(0));
            alpha_i[i] = 1;
            Vec beta_v(L.n);
            for (int j = 0; j < L.n; ++j) beta_v[j] = beta[j];
            Rat pairing = L.rs.pair(alpha_i, beta_v);
            if (pairing != 0) {
                set_bracket(L.letter_t(i), L.letter_e(k), {{L.letter_e(k), pairing}});
                set_bracket(L.letter_t(i), L.letter_f(k), {{L.letter_f(k), -pairing}});
            }
        }
    }
    for (int k1 = -L.m; k1 <= L.m; ++k1) {
        if (k1 == 0) continue;
        for (int k2 = k1; k2 <= L.m; ++k2) {
            if (k2 == 0 || k2 == k1) continue;
            int l1 = L.letter_of_signed(k1), l2 = L.letter_of_signed(k2);
            if (k2 == -k1) {
                // [e_b, e_{-b}] = t_b
                int kp = std::abs(k1);
                const Root& beta = L.rs.positive[kp - 1];
                Rat scale = c[kp] * c[-kp] * 2 / L.rs.len2(beta);
                std::vector<std::pair<int, Rat>> v;
                for (int i = 0; i < L.n; ++i)
                    if (beta[i] != 0) v.emplace_back(L.letter_t(i), scale * beta[i]);
                if (k1 > 0)
                    set_bracket(l1, l2, std::move(v));
                else {
                    for (auto& [l, coeff] : v) coeff = -coeff;
                    set_bracket(l1, l2, std::move(v));
                }
                continue;
            }
            Root sum = expo_add(L.rs.root_of(k1), L.rs.root_of(k2));
            int ks = L.rs.signed_index(sum);
            if (ks == 0) continue;
            Rat coeff = c[k1] * c[k2] / c[ks] * chev.n_any(k1, k2);
            if (coeff != 0) set_bracket(l1, l2, {{L.letter_of_signed(ks), coeff}});
        }
    }
    return L;
}

LieAlgebra build_lie_algebra(const std::string& type_letter, int rank) {
    if (type_letter.size() != 1) throw config_error("type must be a single letter A..G");
    return build_lie_algebra(simple_type_from_letter(type_letter[0]), rank);
}

Involution involution_sigma(const LieAlgebra& L) {
    Involution th;
    th.kind = "sigma";
    th.minus_on_h = true;
    th.images.resize(L.dim);
    for (int i = 0; i < L.n; ++i) th.images[L.letter_t(i)] = {Rat(-1), L.letter_t(i)};
    for (int k = 1; k <= L.m; ++k) {
        Rat d = L.sigma_d.at(k);
        th.images[L.letter_e(k)] = {-d, L.letter_f(k)};
        th.images[L.letter_f(k)] = {Rat(-1) / d, L.letter_e(k)};
    }
    return th;
}

Involution involution_sigma_ybar(const LieAlgebra& L, const std::vector<Rat>& cvec) {
    if (static_cast<int>(cvec.size()) != L.n)
        throw config_error("sigma_ybar scalar vector must have length rank");
    for (const Rat& x : cvec)
        if (x == 0) throw config_error("sigma_ybar scalars must be nonzero");
    Involution th;
    th.kind = "sigma_ybar";
    th.minus_on_h = true;
    th.images.resize(L.dim);
    for (int i = 0; i < L.n; ++i) th.images[L.letter_t(i)] = {Rat(-1), L.letter_t(i)};
    for (int k = 1; k <= L.m; ++k) {
        const Root& beta = L.rs.positive[k - 1];
        Rat calpha(1);
        for (int i = 0; i < L.n; ++i)
            if (beta[i] != 0) calpha *= rat_pow(cvec[i], beta[i]);
        Rat d = L.sigma_d.at(k);
        th.images[L.letter_e(k)] = {-d * calpha, L.letter_f(k)};
        th.images[L.letter_f(k)] = {Rat(-1) / (d * calpha), L.letter_e(k)};
    }
    return th;
}

Involution involution_ad_signs(const LieAlgebra& L, const std::vector<int>& signs) {
    if (static_cast<int>(signs.size()) != L.n)
        throw config_error("ad_signs vector must have length rank");
    for (int s : signs)
        if (s != 1 && s != -1) throw config_error("ad_signs entries must be +-1");
    Involution th;
    th.kind = "ad_signs";
    th.minus_on_h = false;
    th.images.resize(L.dim);
    for (int i = 0; i < L.n; ++i) th.images[L.letter_t(i)] = {Rat(1), L.letter_t(i)};
    for (int k = 1; k <= L.m; ++k) {
        const Root& beta = L.rs.positive[k - 1];
        int s = 1;
        for (int i = 0; i < L.n; ++i)
            if (beta[i] % 2 != 0 && signs[i] < 0) s = -s;
        th.images[L.letter_e(k)] = {Rat(s), L.letter_e(k)};
        th.images[L.letter_f(k)] = {Rat(s), L.letter_f(k)};
    }
    return th;
}

bool involution_squares_to_identity(const LieAlgebra& L, const Involution& th) {
    for (int l = 0; l < L.dim; ++l) {
        auto [c1, l1] = th.apply_letter(l);
        auto [c2, l2] = th.apply_letter(l1);
        if (l2 != l || c1 * c2 != 1) return false;
    }
    return true;
}

bool involution_preserves_bracket(const LieAlgebra& L, const Involution& th) {
    for (int a = 0; a < L.dim; ++a)
        for (int b = 0; b < L.dim; ++b) {
            // theta([a,b]) vs [theta a, theta b]
            std::map<int, Rat> lhs, rhs;
            for (const auto& [l, c] : L.bracket(a, b)) {
                auto [tc, tl] = th.apply_letter(l);
                lhs[tl] += c * tc;
            }
            auto [ca, la] = th.apply_letter(a);
            auto [cb, lb] = th.apply_letter(b);
            for (const auto& [l, c] : L.bracket(la, lb)) rhs[l] += ca * cb * c;
            for (auto& [l, c] : rhs) lhs[l] -= c;
            for (const auto& [l, c] : lhs)
                if (c != 0) return false;
        }
    return true;
}

namespace {

void build_lattice(SubspaceA& A) {
    const LieAlgebra& L = *A.L;
    int d = A.dimension();
    if (d == 0) {
        A.nvars = 0;
        return;
    }
    std::vector<Vec> values;
    for (const Root& beta : L.rs.positive) {
        Vec bv(L.n);
        for (int i = 0; i < L.n; ++i) bv[i] = beta[i];
        values.push_back(A.restrict_functional(bv));
    }
    mpz_class lcm(1);
    for (const Vec& v : values)
        for (const Rat& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<std::vector<long>> rows;
    for (const Vec& v : values) {
        std::vector<long> row(d);
        for (int k = 0; k < d; ++k) {
            Rat scaled = v[k] * Rat(lcm);
            assert(is_integer(scaled));
            row[k] = scaled.get_num().get_si();
        }
        rows.push_back(std::move(row));
    }
    auto basis = lattice_basis(rows);
    if (static_cast<int>(basis.size()) != d)
        throw lattice_error("restricted roots do not span the subspace dual");
    A.nvars = d;
    // orient each basis vector positively against the dominant direction,
    // so chamber limits get positive variable orders where possible
    {
        Vec dir(L.n, Rat(0));
        for (const Root& beta : L.rs.positive)
            for (int i = 0; i < L.n; ++i) dir[i] += beta[i];
        Vec lam_dir(d);  // (lambda_j, dir)
        for (int j = 0; j < d; ++j) lam_dir[j] = L.rs.pair(A.dual[j], dir);
        for (auto& b : basis) {
            Rat s(0);
            for (int j = 0; j < d; ++j) s += Rat(b[j]) * lam_dir[j];
            if (s < 0)
                for (long& x : b) x = -x;
        }
    }
    Mat B(d, Vec(d));  // columns: a-value vectors of gamma_k
    for (int k = 0; k < d; ++k) {
        Vec gv(L.n, Rat(0));  // h*-coords: sum_j (b_k[j]/lcm) lambda_j
        for (int j = 0; j < d; ++j) {
            Rat coef = Rat(basis[k][j]) / Rat(lcm);
            for (int i = 0; i < L.n; ++i) gv[i] += coef * A.dual[j][i];
            B[j][k] = coef;
        }
        A.gamma.push_back(std::move(gv));
    }
    auto inv = mat_inverse(B);
    if (!inv) throw lattice_error("degenerate exponent lattice");
    A.coord_solver = *inv;
}

}  // namespace

Vec SubspaceA::restrict_functional(const Vec& mu) const {
    Vec w(dimension());
    for (int k = 0; k < dimension(); ++k) {
        // mu(x_k) with x_k in coroot coordinates: mu^T F x_k
        Rat s(0);
        for (int i = 0; i < L->n; ++i)
            for (int j = 0; j < L->n; ++j)
                if (mu[i] != 0 && basis[k][j] != 0) s += mu[i] * L->rs.form[i][j] * basis[k][j];
        w[k] = s;
    }
    return w;
}

Expo SubspaceA::expo_of(const Vec& mu) const {
    if (nvars == 0) return {};
    Vec w = restrict_functional(mu);
    Vec x = mat_apply(coord_solver, w);
    Expo e(nvars);
    for (int k = 0; k < nvars; ++k) {
        Rat v = x[k] * D;
        if (!is_integer(v))
            throw lattice_error("functional lies outside the 1/" + std::to_string(D) +
                                " exponent lattice; enlarge D");
        e[k] = static_cast<int>(v.get_num().get_si());
    }
    return e;
}

std::vector<Rat> SubspaceA::derive_weights(const Vec& mu) const {
    std::vector<Rat> w(nvars);
    for (int k = 0; k < nvars; ++k) w[k] = L->rs.pair(gamma[k], mu) / D;
    return w;
}

std::vector<long> SubspaceA::limit_weights() const {
    if (nvars == 0) return {};
    // choose h0 in a with (beta, h0) > 0 for every positive restricted root
    // by maximizing against the dominant direction sum of all positives
    Vec dir(L->n, Rat(0));
    for (const Root& beta : L->rs.positive)
        for (int i = 0; i < L->n; ++i) dir[i] += beta[i];
    // weight of variable k is (gamma_k, dir)/D scaled to integers
    std::vector<Rat> w(nvars);
    mpz_class lcm(1);
    for (int k = 0; k < nvars; ++k) {
        w[k] = L->rs.pair(gamma[k], dir);
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), w[k].get_den().get_mpz_t());
    }
    std::vector<long> out(nvars);
    for (int k = 0; k < nvars; ++k) {
        Rat scaled = w[k] * Rat(lcm);
        out[k] = scaled.get_num().get_si();
        if (out[k] <= 0)
            throw unsupported_error("chamber limit unavailable: lattice direction not dominant");
    }
    return out;
}

SubspaceA make_subspace(const LieAlgebra& L, const std::vector<Vec>& basis_vectors, int D) {
    SubspaceA A;
    A.L = &L;
    A.basis = basis_vectors;
    A.D = D;
    int d = A.dimension();
    int n = L.n;
    for (const Vec& v : A.basis)
        if (static_cast<int>(v.size()) != n) throw config_error("subspace vector has wrong length");
    // independence + gram
    A.gram.assign(d, Vec(d, Rat(0)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Rat s(0);
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q)
                    if (A.basis[i][p] != 0 && A.basis[j][q] != 0)
                        s += A.basis[i][p] * L.rs.form[p][q] * A.basis[j][q];
            A.gram[i][j] = s;
        }
    if (d > 0 && !mat_inverse(A.gram))
        throw config_error("subspace basis is degenerate for the invariant form");

    // orthocomplement t: solutions of basis_i^T F x = 0
    if (d > 0) {
        Mat cond(d, Vec(n, Rat(0)));
        for (int i = 0; i < d; ++i)
            for (int q = 0; q < n; ++q) {
                Rat s(0);
                for (int p = 0; p < n; ++p)
                    if (A.basis[i][p] != 0) s += A.basis[i][p] * L.rs.form[p][q];
                cond[i][q] = s;
            }
        A.t_basis = nullspace(cond);
    } else {
        A.t_basis = mat_identity(n);
    }
    int td = A.t_dimension();
    A.t_gram.assign(td, Vec(td, Rat(0)));
    for (int i = 0; i < td; ++i)
        for (int j = 0; j < td; ++j) {
            Rat s(0);
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q)
                    if (A.t_basis[i][p] != 0 && A.t_basis[j][q] != 0)
                        s += A.t_basis[i][p] * L.rs.form[p][q] * A.t_basis[j][q];
            A.t_gram[i][j] = s;
        }
    if (td > 0) {
        auto tinv = mat_inverse(A.t_gram);
        if (!tinv) throw config_error("degenerate orthocomplement Gram matrix");
        A.t_gram_inv = *tinv;
    }

    // dual functionals: lambda_j^T F [basis | t_basis] = [delta_j | 0]
    if (d > 0) {
        Mat cols;  // n x n matrix with columns F*basis_k then F*t_basis_k
        cols.assign(n, Vec(n, Rat(0)));
        for (int k = 0; k < d; ++k) {
            for (int i = 0; i < n; ++i) {
                Rat s(0);
                for (int p = 0; p < n; ++p) s += L.rs.form[i][p] * A.basis[k][p];
                cols[i][k] = s;
            }
        }
        for (int k = 0; k < td; ++k) {
            for (int i = 0; i < n; ++i) {
                Rat s(0);
                for (int p = 0; p < n; ++p) s += L.rs.form[i][p] * A.t_basis[k][p];
                cols[i][d + k] = s;
            }
        }
        auto inv = mat_inverse(mat_transpose(cols));
        if (!inv) throw config_error("subspace + orthocomplement do not span h");
        // lambda_j solves cols^T lambda = e_j, i.e. column j of the inverse
        for (int j = 0; j < d; ++j) {
            Vec lam(n);
            for (int i = 0; i < n; ++i) lam[i] = (*inv)[i][j];
            A.dual.push_back(std::move(lam));
        }
    }
    build_lattice(A);
    return A;
}

SubspaceA full_subspace(const LieAlgebra& L, int D) {
    std::vector<Vec> basis;
    for (int i = 0; i < L.n; ++i) {
        Vec v(L.n, Rat(0));
        v[i] = 1;
        basis.push_back(std::move(v));
    }
    return make_subspace(L, basis, D);
}

SubspaceA zero_subspace(const LieAlgebra& L) { return make_subspace(L, {}, 1); }

}  // namespace cdybe
