#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "cdybe/cartan.hpp"
#include "cdybe/coeffs.hpp"

namespace cdybe {

// PBW word: basis letters in non-decreasing position order.
using Word = std::vector<std::uint16_t>;
// One word per tensor slot.
using Key = std::vector<Word>;

// Shared computation environment: algebra + subspace lattice + the
// normal-ordering cache. The cache is mutex-protected; results do not
// depend on interleaving.
class UEnv {
  public:
    UEnv(const LieAlgebra& L, const SubspaceA& A, int max_degree = 6)
        : L_(&L), A_(&A), max_degree_(max_degree) {}

    const LieAlgebra& alg() const { return *L_; }
    const SubspaceA& sub() const { return *A_; }
    int nvars() const { return A_->nvars; }
    int max_degree() const { return max_degree_; }

    ExpRational one() const { return ExpRational::constant(nvars(), Rat(1)); }
    ExpRational zero() const { return ExpRational::zero(nvars()); }

    // Straightens an arbitrarily ordered letter sequence into the PBW basis.
    std::vector<std::pair<Word, Rat>> normal_order(const Word& raw) const;

    // weight of a word as an h^*-coordinate vector
    Vec word_weight(const Word& w) const;

  private:
    const LieAlgebra* L_;
    const SubspaceA* A_;
    int max_degree_;
    mutable std::map<Word, std::vector<std::pair<Word, Rat>>> memo_;
    mutable std::mutex mu_;
};

// Sparse element of U(g)^{tensor slots} with ExpRational coefficients.
// Zero coefficients are never stored; all stored words are normal-ordered.
class Tensor {
  public:
    Tensor() : slots_(0), nvars_(0) {}
    Tensor(int slots, int nvars) : slots_(slots), nvars_(nvars) {}

    static Tensor zero(const UEnv& env, int slots) { return Tensor(slots, env.nvars()); }
    static Tensor unit(const UEnv& env, int slots);

    int slots() const { return slots_; }
    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Key, ExpRational>& terms() const { return terms_; }

    void add_term(const Key& k, const ExpRational& c);

    Tensor operator+(const Tensor& o) const;
    Tensor operator-(const Tensor& o) const;
    Tensor operator-() const;
    Tensor& operator+=(const Tensor& o);
    Tensor& operator-=(const Tensor& o);
    Tensor operator*(const Rat& c) const;
    Tensor scaled(const ExpRational& c) const;

    bool operator==(const Tensor& o) const { return (*this - o).is_zero(); }

    // true when every word has length <= 1 (lives in (C + g)^{tensor N})
    bool in_g_tensor() const;
    int max_word_length() const;

    // first term in canonical order, as a readable witness
    std::string witness(const LieAlgebra& L) const;
    std::string str(const LieAlgebra& L) const;
    nlohmann::ordered_json to_json(const LieAlgebra& L) const;

  private:
    int slots_;
    int nvars_;
    std::map<Key, ExpRational> terms_;
};

// slot-wise product in U(g)^{tensor slots}
Tensor tensor_mul(const UEnv& env, const Tensor& a, const Tensor& b);
Tensor tensor_commutator(const UEnv& env, const Tensor& a, const Tensor& b);

// place a k-slot element into a larger tensor: slot i -> slot_map[i]
Tensor tensor_place(const Tensor& t, int new_slots, const std::vector<int>& slot_map);

// merge the listed slot groups by multiplication (each group in order);
// groups must partition 0..slots-1
Tensor tensor_merge_slots(const UEnv& env, const Tensor& t, const std::vector<std::vector<int>>& groups);

// multiplication map m: 2-slot -> 1-slot
Tensor mult_map(const UEnv& env, const Tensor& t);

// letter-wise action of an involution (or any signed-monomial map) on one slot
Tensor apply_aut(const UEnv& env, const Tensor& t, const Involution& th, int slot);
Tensor apply_aut_all(const UEnv& env, const Tensor& t, const Involution& th);

// eta twist: multiply each term by exp(-sign * weight(word at slot));
// requires a = h
Tensor eta_twist(const UEnv& env, const Tensor& t, int slot, int sign);

// E_i = sum_j (x_j)_i d_{lambda_j}: differentiates coefficients and
// left-multiplies the slot by x_j
Tensor apply_E(const UEnv& env, const Tensor& t, int slot);
// the j-th gradient component sum: (x_j)_i insertion only (no derivative)
Tensor insert_cartan(const UEnv& env, const Tensor& t, int slot, const Vec& coroot_coords);
// derivative of all coefficients along direction mu in h^*
Tensor derive_coeffs(const UEnv& env, const Tensor& t, const Vec& mu);

// coefficient-wise lattice refinement z -> z^m
Tensor tensor_stretched(const Tensor& t, int m);

// swap two slots
Tensor tensor_swap(const Tensor& t, int s1, int s2);

// mixed Casimir elements
Tensor varpi_h(const UEnv& env);                               // dual-pair realization
Tensor varpi(const UEnv& env);                                 // full mixed Casimir
Tensor varpi_of(const UEnv& env, const std::vector<Vec>& basis, const Mat& gram_inv);
Tensor omega(const UEnv& env);                                 // m(varpi)
Tensor omega_pm(const UEnv& env, int sign);                    // half-Casimirs

// single letters / g-elements as 1-slot tensors
Tensor letter_tensor(const UEnv& env, int letter);
Tensor gvec_tensor(const UEnv& env, const std::vector<std::pair<int, Rat>>& g);

}  // namespace cdybe
