#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cdybe/linalg.hpp"
#include "cdybe/poly.hpp"

namespace cdybe {

enum class SimpleType { A, B, C, D, E, F, G };

SimpleType simple_type_from_letter(char c);
char simple_type_letter(SimpleType t);

// Roots are integer coordinate vectors in the simple-root basis.
using Root = Expo;

// Root system with the invariant form normalized so long roots have
// squared length 2.
struct RootSystem {
    SimpleType type;
    int rank = 0;
    Mat cartan;              // C[i][j] = <alpha_i, alpha_j^vee>, integer entries
    std::vector<Rat> dhalf;  // (alpha_i, alpha_i)/2
    Mat form;                // F[i][j] = (alpha_i, alpha_j)
    Mat form_inv;
    std::vector<Root> positive;  // sorted by (height, lex)
    std::map<Root, int> pos_index;
    Vec rho;  // h*-coordinates of the half sum of positive roots

    int n_positive() const { return static_cast<int>(positive.size()); }
    int height(const Root& r) const;
    // signed root lookup: +k / -k for the k-th positive root (1-based), 0 if not a root
    int signed_index(const Root& r) const;
    Root root_of(int signed_idx) const;

    // form on h^* for rational coordinate vectors in the simple-root basis
    Rat pair(const Vec& u, const Vec& v) const;
    Rat pair_roots(const Root& a, const Root& b) const;
    Rat len2(const Root& a) const { return pair_roots(a, a); }
};

RootSystem build_root_system(SimpleType type, int rank);

// Basis letters of g, in the PBW position order
// (t_1..t_n, e_{-beta_m}..e_{-beta_1}, e_{beta_1}..e_{beta_m}).
struct LieAlgebra {
    RootSystem rs;
    int n = 0, m = 0, dim = 0;

    // brackets [letter_i, letter_j] as sparse g-vectors
    std::vector<std::vector<std::vector<std::pair<int, Rat>>>> table;

    // Chevalley involution scalar: sigma(e_beta) = -sigma_d[k] e_{-beta}
    // for the signed root k; identically 1 except for types F and G where
    // the paper's normalization admits no rational involution with scalar 1.
    std::map<int, Rat> sigma_d;

    int letter_t(int i) const { return i; }
    int letter_e(int k) const { return n + m + (k - 1); }        // k in 1..m
    int letter_f(int k) const { return n + (m - k); }            // e_{-beta_k}
    int letter_of_signed(int k) const { return k > 0 ? letter_e(k) : letter_f(-k); }
    bool is_cartan(int l) const { return l < n; }
    int signed_root_of_letter(int l) const;  // 0 for Cartan letters
    Root weight_of_letter(int l) const;      // zero vector for Cartan letters

    const std::vector<std::pair<int, Rat>>& bracket(int a, int b) const { return table[a][b]; }

    // t_mu for a functional mu in h^* (simple-root coordinates)
    std::vector<std::pair<int, Rat>> t_of(const Vec& mu) const;

    // evaluation beta(x) for x given in coroot coordinates is not needed;
    // all pairings go through rs.pair.

    std::string letter_name(int l) const;
};

// Optional rescaling of the positive root vectors (e_b -> s_b e_b,
// e_{-b} -> e_{-b}/s_b) for normalization-independence tests.
LieAlgebra build_lie_algebra(SimpleType type, int rank,
                             const std::map<int, Rat>* scaling = nullptr);
LieAlgebra build_lie_algebra(const std::string& type_letter, int rank);

// Involutive automorphisms of (g, h) in the supported families, stored as
// a signed-monomial map: letter -> (coefficient, letter).
struct Involution {
    std::string kind;
    std::vector<std::pair<Rat, int>> images;  // indexed by letter
    bool minus_on_h = false;

    std::pair<Rat, int> apply_letter(int l) const { return images[l]; }
};

Involution involution_sigma(const LieAlgebra& L);
// sigma_ybar = sigma o Ad_y with Ad_y(e_alpha) = c^alpha e_alpha,
// c^alpha = prod c_i^{m_i}; c_i nonzero rationals.
Involution involution_sigma_ybar(const LieAlgebra& L, const std::vector<Rat>& c);
// Involutions acting as the identity on h: Ad_c with c_i in {+1,-1}.
Involution involution_ad_signs(const LieAlgebra& L, const std::vector<int>& signs);

bool involution_squares_to_identity(const LieAlgebra& L, const Involution& th);
bool involution_preserves_bracket(const LieAlgebra& L, const Involution& th);

// A subspace a of h of real type, with its dual functionals, the
// orthocomplement t, and the exponent lattice of the restricted roots.
struct SubspaceA {
    const LieAlgebra* L = nullptr;
    std::vector<Vec> basis;    // coroot coordinates of x_1..x_d
    std::vector<Vec> dual;     // h*-coordinates of the dual basis lambda_1..lambda_d
    std::vector<Vec> t_basis;  // coroot coordinates of a basis of t
    Mat gram;                  // (x_j, x_k)
    Mat t_gram;                // Gram matrix of the t basis
    Mat t_gram_inv;            // empty when t = 0

    // exponent lattice: variable k represents exp((gamma_k, lambda)/D)
    int nvars = 0;
    int D = 1;
    std::vector<Vec> gamma;  // h*-coordinates of the lattice basis
    Mat coord_solver;        // maps a-value vectors to gamma-coordinates

    int dimension() const { return static_cast<int>(basis.size()); }
    int t_dimension() const { return static_cast<int>(t_basis.size()); }

    // value vector (mu(x_1)..mu(x_d)) of a functional mu in h^*
    Vec restrict_functional(const Vec& mu) const;

    // exponent vector of exp((mu, lambda)) in the lattice; throws
    // lattice_error when mu is not on the (1/D)-lattice.
    Expo expo_of(const Vec& mu) const;

    // derivation weights of the variables along direction mu in a^* <= h^*
    std::vector<Rat> derive_weights(const Vec& mu) const;

    // positive weights for limit evaluation (all restricted positive roots
    // get positive order); empty when d = 0
    std::vector<long> limit_weights() const;
};

// basis vectors are given in coroot coordinates (t_{alpha_i} basis).
SubspaceA make_subspace(const LieAlgebra& L, const std::vector<Vec>& basis_vectors, int D = 1);
SubspaceA full_subspace(const LieAlgebra& L, int D = 1);   // a = h
SubspaceA zero_subspace(const LieAlgebra& L);              // a = 0

}  // namespace cdybe
