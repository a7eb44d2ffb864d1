#pragma once

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>

namespace latproj {

using Int = mpz_class;
using Rat = mpq_class;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct dimension_error : error { using error::error; };
struct singular_error : error { using error::error; };
struct rank_error : error { using error::error; };
struct primitivity_error : error { using error::error; };
struct argument_error : error { using error::error; };
struct definiteness_error : error { using error::error; };
struct construction_error : error { using error::error; };
struct budget_error : error { using error::error; };
struct parse_error : error { using error::error; };

// mpq_class(num, den) does not canonicalize on its own.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw argument_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat parse_rat(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw parse_error("bad rational literal: " + s);
    if (q.get_den() == 0) throw parse_error("zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline double to_double(const Rat& q) { return q.get_d(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// floor(num/den) for exact integers
inline Int floor_div(const Int& num, const Int& den) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

inline Int rat_floor(const Rat& q) { return floor_div(q.get_num(), q.get_den()); }

// nearest integer, halves round up
inline Int round_nearest(const Rat& q) {
    return floor_div(2 * q.get_num() + q.get_den(), 2 * q.get_den());
}

// floor(sqrt(n)) for n >= 0
inline Int isqrt(const Int& n) {
    if (n < 0) throw argument_error("isqrt of negative value");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline double sqrt_rat(const Rat& q) { return std::sqrt(to_double(q)); }

}  // namespace latproj
