#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>

#include "devries/errors.hpp"

namespace devries {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long p, long q = 1) {
    Rat r(p, q);
    r.canonicalize();
    return r;
}

inline Rat make_rat(const Int& p, const Int& q) {
    Rat r(p, q);
    r.canonicalize();
    return r;
}

inline Int rat_num(const Rat& r) { return r.get_num(); }
inline Int rat_den(const Rat& r) { return r.get_den(); }

inline bool is_integral(const Rat& r) { return r.get_den() == 1; }

inline Rat midpoint(const Rat& a, const Rat& b) { return Rat(a + b) / 2; }

/// Decimal integer or "p/q". Accepts an optional leading sign on p.
Rat parse_rat(std::string_view text);

std::string rat_to_string(const Rat& r);

} // namespace devries
