#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cdybe/cartan.hpp"

using namespace cdybe;

namespace {

// [a, b] for sparse g-vectors
std::map<int, Rat> bracket_vec(const LieAlgebra& L, const std::map<int, Rat>& a,
                               const std::map<int, Rat>& b) {
    std::map<int, Rat> out;
    for (const auto& [la, ca] : a)
        for (const auto& [lb, cb] : b)
            for (const auto& [l, c] : L.bracket(la, lb)) {
                out[l] += ca * cb * c;
            }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

bool jacobi_holds(const LieAlgebra& L) {
    for (int a = 0; a < L.dim; ++a)
        for (int b = a + 1; b < L.dim; ++b)
            for (int c = b + 1; c < L.dim; ++c) {
                std::map<int, Rat> acc;
                auto add = [&](const std::map<int, Rat>& v) {
                    for (const auto& [l, x] : v) acc[l] += x;
                };
                std::map<int, Rat> ma{{a, Rat(1)}}, mb{{b, Rat(1)}}, mc{{c, Rat(1)}};
                add(bracket_vec(L, bracket_vec(L, ma, mb), mc));
                add(bracket_vec(L, bracket_vec(L, mb, mc), ma));
                add(bracket_vec(L, bracket_vec(L, mc, ma), mb));
                for (const auto& [l, x] : acc)
                    if (x != 0) return false;
            }
    return true;
}

// K(x,y) realized through the normalized form: on basis letters,
// (t_i,t_j) = F_ij, (e_b, e_{-b}) from [e_b,e_{-b}] = t_b, rest 0.
Rat form_on_letters(const LieAlgebra& L, int a, int b) {
    int ka = L.signed_root_of_letter(a), kb = L.signed_root_of_letter(b);
    if (ka == 0 && kb == 0) return L.rs.form[a][b];
    // [e_b, e_{-b}] = t_b forces (e_b, e_{-b}) = 1 by invariance
    if (ka != 0 && kb == -ka) return Rat(1);
    return Rat(0);
}

bool form_invariant(const LieAlgebra& L) {
    for (int x = 0; x < L.dim; ++x)
        for (int y = 0; y < L.dim; ++y)
            for (int z = 0; z < L.dim; ++z) {
                Rat s(0);
                for (const auto& [l, c] : L.bracket(x, y)) s += c * form_on_letters(L, l, z);
                for (const auto& [l, c] : L.bracket(x, z)) s += c * form_on_letters(L, y, l);
                if (s != 0) return false;
            }
    return true;
}

}  // namespace

TEST_CASE("sl2 relations") {
    LieAlgebra L = build_lie_algebra(SimpleType::A, 1);
    CHECK(L.dim == 3);
    int t = L.letter_t(0), e = L.letter_e(1), f = L.letter_f(1);
    // [e,f] = t_alpha
    auto ef = L.bracket(e, f);
    REQUIRE(ef.size() == 1);
    CHECK(ef[0].first == t);
    CHECK(ef[0].second == 1);
    // [t_alpha, e] = 2e
    auto te = L.bracket(t, e);
    REQUIRE(te.size() == 1);
    CHECK(te[0].first == e);
    CHECK(te[0].second == 2);
}

TEST_CASE("A2 structure constants all +-1 and Jacobi") {
    LieAlgebra L = build_lie_algebra(SimpleType::A, 2);
    CHECK(L.rs.n_positive() == 3);
    for (int k1 = -L.m; k1 <= L.m; ++k1)
        for (int k2 = -L.m; k2 <= L.m; ++k2) {
            if (k1 == 0 || k2 == 0 || k1 == k2 || k1 == -k2) continue;
            Root sum = expo_add(L.rs.root_of(k1), L.rs.root_of(k2));
            if (L.rs.signed_index(sum) == 0) continue;
            auto br = L.bracket(L.letter_of_signed(k1), L.letter_of_signed(k2));
            REQUIRE(br.size() == 1);
            CHECK((br[0].second == 1 || br[0].second == -1));
        }
    CHECK(jacobi_holds(L));
}

TEST_CASE("G2 tables") {
    LieAlgebra L = build_lie_algebra(SimpleType::G, 2);
    CHECK(L.rs.n_positive() == 6);
    CHECK(L.dim == 14);
    CHECK(L.rs.cartan[0][0] == 2);
    CHECK(L.rs.cartan[0][1] == -1);
    CHECK(L.rs.cartan[1][0] == -3);
    CHECK(L.rs.cartan[1][1] == 2);
    CHECK(jacobi_holds(L));
}

TEST_CASE("known dimensions and counts") {
    struct Row {
        SimpleType t;
        int rank, npos;
    };
    for (const Row& r : {Row{SimpleType::A, 3, 6}, Row{SimpleType::B, 2, 4},
                         Row{SimpleType::C, 3, 9}, Row{SimpleType::D, 4, 12},
                         Row{SimpleType::F, 4, 24}}) {
        LieAlgebra L = build_lie_algebra(r.t, r.rank);
        CHECK(L.rs.n_positive() == r.npos);
        CHECK(L.dim == r.rank + 2 * r.npos);
    }
    CHECK_THROWS_AS(build_lie_algebra(SimpleType::E, 5), config_error);
    CHECK_THROWS_AS(build_lie_algebra(SimpleType::A, 9), config_error);
}

TEST_CASE("foundations: Jacobi + antisymmetry + form invariance") {
    for (auto [t, r] : {std::pair{SimpleType::A, 1}, {SimpleType::A, 2}, {SimpleType::A, 3},
                        {SimpleType::B, 2}, {SimpleType::G, 2}}) {
        LieAlgebra L = build_lie_algebra(t, r);
        CHECK(jacobi_holds(L));
        for (int a = 0; a < L.dim; ++a)
            for (int b = 0; b < L.dim; ++b) {
                auto ab = L.bracket(a, b);
                auto ba = L.bracket(b, a);
                REQUIRE(ab.size() == ba.size());
                std::map<int, Rat> acc;
                for (const auto& [l, c] : ab) acc[l] += c;
                for (const auto& [l, c] : ba) acc[l] += c;
                for (const auto& [l, c] : acc) CHECK(c == 0);
            }
        CHECK(form_invariant(L));
    }
}

TEST_CASE("chevalley involution") {
    for (auto [t, r] : {std::pair{SimpleType::A, 2}, {SimpleType::B, 2}, {SimpleType::D, 4},
                        {SimpleType::C, 3}, {SimpleType::G, 2}, {SimpleType::F, 4}}) {
        LieAlgebra L = build_lie_algebra(t, r);
        Involution s = involution_sigma(L);
        CHECK(involution_squares_to_identity(L, s));
        CHECK(involution_preserves_bracket(L, s));
    }
    // sigma(e) = -f exactly on types A, B, D
    for (auto [t, r] : {std::pair{SimpleType::A, 3}, {SimpleType::B, 3}, {SimpleType::D, 4}}) {
        LieAlgebra L = build_lie_algebra(t, r);
        Involution s = involution_sigma(L);
        for (int k = 1; k <= L.m; ++k) {
            CHECK(s.apply_letter(L.letter_e(k)) == std::pair{Rat(-1), L.letter_f(k)});
            CHECK(s.apply_letter(L.letter_f(k)) == std::pair{Rat(-1), L.letter_e(k)});
        }
    }
}

TEST_CASE("sigma_ybar family") {
    LieAlgebra L = build_lie_algebra(SimpleType::A, 2);
    // c = (1,...,1) gives sigma back
    Involution s = involution_sigma(L);
    Involution sy = involution_sigma_ybar(L, {Rat(1), Rat(1)});
    for (int l = 0; l < L.dim; ++l) CHECK(s.apply_letter(l) == sy.apply_letter(l));
    // squares to id for arbitrary rational scalars
    for (auto c : {std::vector<Rat>{rat(2), rat(3, 5)}, {rat(-1), rat(7, 2)}, {rat(1, 3), rat(1)}}) {
        Involution th = involution_sigma_ybar(L, c);
        CHECK(involution_squares_to_identity(L, th));
        CHECK(involution_preserves_bracket(L, th));
    }
    CHECK_THROWS_AS(involution_sigma_ybar(L, {Rat(0), Rat(1)}), config_error);
    // identity-on-h involutions
    Involution ad = involution_ad_signs(L, {1, -1});
    CHECK(involution_squares_to_identity(L, ad));
    CHECK(involution_preserves_bracket(L, ad));
}

TEST_CASE("subspaces and exponent lattices") {
    LieAlgebra L = build_lie_algebra(SimpleType::A, 2);
    SubspaceA h = full_subspace(L);
    CHECK(h.dimension() == 2);
    CHECK(h.t_dimension() == 0);
    CHECK(h.nvars == 2);
    // dual basis property
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
            Rat v(0);
            for (int p = 0; p < 2; ++p)
                for (int q = 0; q < 2; ++q) v += h.dual[j][p] * L.rs.form[p][q] * h.basis[k][q];
            CHECK(v == (j == k ? 1 : 0));
        }
    // every root is on the lattice; additivity of exponents
    Vec a1{Rat(1), Rat(0)}, a2{Rat(0), Rat(1)}, sum{Rat(1), Rat(1)};
    CHECK(expo_add(h.expo_of(a1), h.expo_of(a2)) == h.expo_of(sum));

    // a = span{t_{a1+a2}} in sl3
    SubspaceA mid = make_subspace(L, {Vec{Rat(1), Rat(1)}});
    CHECK(mid.dimension() == 1);
    CHECK(mid.t_dimension() == 1);
    // restrictions of a1 and a2 agree on this line: (a1, t_{a1+a2}) = 1
    CHECK(mid.restrict_functional(a1) == Vec{Rat(1)});
    CHECK(mid.restrict_functional(a2) == Vec{Rat(1)});

    SubspaceA z = zero_subspace(L);
    CHECK(z.dimension() == 0);
    CHECK(z.nvars == 0);
    CHECK(z.t_dimension() == 2);

    // rho on the D=2 lattice of A1
    LieAlgebra L1 = build_lie_algebra(SimpleType::A, 1);
    SubspaceA h1 = full_subspace(L1);
    CHECK_THROWS_AS(h1.expo_of(L1.rs.rho), lattice_error);
    SubspaceA h1f = full_subspace(L1, 2);
    CHECK(h1f.expo_of(L1.rs.rho) == Expo{1});
}

TEST_CASE("normalization independence of the bracket contract") {
    std::map<int, Rat> scale{{1, rat(3)}, {2, rat(1, 2)}, {3, rat(-2)}};
    LieAlgebra L = build_lie_algebra(SimpleType::A, 2, &scale);
    CHECK(jacobi_holds(L));
    for (int k = 1; k <= L.m; ++k) {
        auto ef = L.bracket(L.letter_e(k), L.letter_f(k));
        std::map<int, Rat> got(ef.begin(), ef.end());
        Root beta = L.rs.root_of(k);
        for (int i = 0; i < L.n; ++i) {
            Rat want(beta[i]);
            CHECK(got[L.letter_t(i)] == want);
        }
    }
    Involution s = involution_sigma(L);
    CHECK(involution_squares_to_identity(L, s));
    CHECK(involution_preserves_bracket(L, s));
}
