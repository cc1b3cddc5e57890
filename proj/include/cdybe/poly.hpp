#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cdybe/rat.hpp"

namespace cdybe {

// Exponent vector; one entry per variable. Non-negative inside Poly,
// signed when used as a monomial shift.
using Expo = std::vector<int>;

Expo expo_add(const Expo& a, const Expo& b);
Expo expo_sub(const Expo& a, const Expo& b);

// Sparse multivariate polynomial over Q with term order = lex on the
// exponent vector. Zero coefficients are never stored.
class Poly {
  public:
    Poly() : nvars_(0) {}
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly zero(int nvars) { return Poly(nvars); }
    static Poly constant(int nvars, const Rat& c);
    static Poly monomial(Expo e, const Rat& c);
    static Poly variable(int nvars, int k, int power = 1);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Expo, Rat>& terms() const { return terms_; }

    void add_term(const Expo& e, const Rat& c);

    // Lex-leading term.
    const std::pair<const Expo, Rat>& leading() const;

    int degree(int var) const;      // -1 for the zero polynomial
    int min_degree(int var) const;  // 0 for the zero polynomial

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator*(const Rat& c) const;

    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator<(const Poly& o) const { return terms_ < o.terms_; }

    // Multiply by the (possibly signed) monomial z^e.
    Poly shifted(const Expo& e) const;

    // z_k -> z_k^m for every k, m >= 1.
    Poly stretched(int m) const;
    // Inverse of stretched: fails unless every exponent is divisible by m.
    std::optional<Poly> compressed(int m) const;

    Rat eval(const std::vector<Rat>& point) const;

    // Substitute z_k -> t^{w_k} (w_k integers); returns the univariate
    // result as map degree -> coefficient.
    std::map<long, Rat> eval_weighted(const std::vector<long>& w) const;

    // Substitute z_k -> c_k * z_k^{eps} with c_k nonzero, eps = +-1.
    Poly scaled_vars(const std::vector<Rat>& c, int eps, Expo* shift_out) const;

    std::string str(const std::vector<std::string>& names) const;

  private:
    int nvars_;
    std::map<Expo, Rat> terms_;
};

// Exact division: a / b when the remainder is zero, else nullopt.
std::optional<Poly> poly_try_divide(const Poly& a, const Poly& b);

// GCD over Q[z_1..z_d], normalized with lex-leading coefficient 1.
Poly poly_gcd(const Poly& a, const Poly& b);

}  // namespace cdybe
