#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace cdybe {

// Exact rational scalar. All arithmetic in the library is over Q; no
// floating point anywhere on a verification path.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "-3", "5/7". Throws std::invalid_argument on malformed input or
// zero denominator.
Rat rat_from_string(const std::string& s);

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline int cmp_rat(const Rat& a, const Rat& b) { return cmp(a, b); }

// q^e for integer e (negative allowed when q != 0).
Rat rat_pow(const Rat& q, long e);

// Integer square root test: returns r with r*r == q when q is the square
// of a rational, otherwise nullopt.
std::optional<Rat> rat_sqrt(const Rat& q);

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct lattice_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct pole_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct constraint_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct degree_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct unsupported_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace cdybe
