#include "cdybe/rat.hpp"

namespace cdybe {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

Rat rat_pow(const Rat& q, long e) {
    if (e == 0) return Rat(1);
    if (q == 0) {
        if (e < 0) throw std::domain_error("0 raised to a negative power");
        return Rat(0);
    }
    Rat base = e > 0 ? q : Rat(1) / q;
    unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    Rat acc(1);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

std::optional<Rat> rat_sqrt(const Rat& q) {
    if (q < 0) return std::nullopt;
    if (q == 0) return Rat(0);
    mpz_class num = q.get_num(), den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rat r(rn, rd);
    r.canonicalize();
    return r;
}

}  // namespace cdybe
