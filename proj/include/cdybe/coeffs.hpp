#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cdybe/poly.hpp"

#include "../../vendor/json.hpp"

namespace cdybe {

// One element of the coefficient field: a rational function in the
// exponential variables z_1..z_d, stored as
//
//     z^shift * num / prod_i atom_i^{mult_i}
//
// where the atoms are monic (lex-leading coefficient 1), non-constant,
// per-variable minimum degree 0, and num is not divisible by any atom.
// In this field every denominator that actually occurs is a product of
// binomial atoms (1 - c z^e and friends), so reduction is exact trial
// division and never needs a general multivariate gcd. Equality is
// decided fraction-free: a == b iff the cross-multiplied numerator of
// a - b vanishes.
class ExpRational {
  public:
    ExpRational() : shift_(0), num_(0) {}

    static ExpRational zero(int nvars);
    static ExpRational constant(int nvars, const Rat& c);
    static ExpRational monomial(Expo e, const Rat& c = Rat(1));
    static ExpRational from_fraction(Poly num, Poly den);

    int nvars() const { return static_cast<int>(shift_.size()); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const;
    Rat as_constant() const;  // requires is_constant()

    const Expo& shift() const { return shift_; }
    const Poly& num() const { return num_; }
    const std::map<Poly, int>& den() const { return den_; }
    Poly den_expanded() const;

    ExpRational operator-() const;
    ExpRational operator+(const ExpRational& o) const;
    ExpRational operator-(const ExpRational& o) const;
    ExpRational operator*(const ExpRational& o) const;
    ExpRational operator/(const ExpRational& o) const;
    ExpRational& operator+=(const ExpRational& o);
    ExpRational operator*(const Rat& c) const;
    ExpRational inverse() const;

    bool operator==(const ExpRational& o) const { return (*this - o).is_zero(); }
    bool operator!=(const ExpRational& o) const { return !(*this == o); }

    // Derivation determined by z_k -> w_k z_k.
    ExpRational derived(const std::vector<Rat>& w) const;

    // z_k -> z_k^m (m >= 1); doubles as the embedding into a refined
    // exponent lattice.
    ExpRational stretched(int m) const;
    // Inverse of stretched when every exponent is divisible by m.
    std::optional<ExpRational> compressed(int m) const;

    // z_k -> c_k * z_k^{eps}, c_k nonzero rationals, eps in {+1,-1}.
    ExpRational scaled_vars(const std::vector<Rat>& c, int eps) const;

    // Exact evaluation at a rational point with nonzero coordinates.
    // Throws pole_error if the denominator vanishes there.
    Rat eval(const std::vector<Rat>& point) const;

    // Limit z_k -> 0 along z_k = t^{w_k} (w_k > 0), t -> 0+. Returns the
    // limit when finite; throws pole_error when the order is negative.
    Rat limit_zero(const std::vector<long>& w) const;

    std::string str(const std::vector<std::string>& names) const;
    nlohmann::ordered_json to_json() const;

  private:
    void push_den(const Poly& p, int mult);  // normalizes p into atom form
    void normalize();

    Expo shift_;
    Poly num_;
    std::map<Poly, int> den_;
};

inline ExpRational operator*(const Rat& c, const ExpRational& f) { return f * c; }

std::vector<std::string> default_var_names(int nvars, const std::string& stem = "z");

}  // namespace cdybe
