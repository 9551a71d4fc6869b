#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "oinv/errors.hpp"
#include "oinv/z2.hpp"

namespace oinv {

// Exact integer type for all coefficients. Euler characteristics and
// generator coefficients are unbounded, so nothing in the group
// arithmetic may silently wrap.
using Int = mpz_class;

inline bool is_even(const Int& v) { return mpz_even_p(v.get_mpz_t()) != 0; }

inline Z2 parity(const Int& v) { return Z2(is_even(v) ? 0 : 1); }

// v/2 for even v; the even-count preconditions are checked by callers,
// this guards the remainder-free contract itself.
inline Int half_exact(const Int& v) {
    if (!is_even(v)) throw DomainError("half_exact: odd value " + v.get_str());
    Int out;
    mpz_divexact_ui(out.get_mpz_t(), v.get_mpz_t(), 2);
    return out;
}

inline std::string describe(const Int& v) { return v.get_str(); }

// Floor division for possibly negative numerators, positive divisor.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    return a >= 0 ? a / b : -((-a + b - 1) / b);
}

}  // namespace oinv
