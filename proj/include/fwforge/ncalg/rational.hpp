#pragma once

#include <gmpxx.h>

#include <string>

namespace fwforge {

using Rational = mpq_class;

inline Rational makeRational(long num, long den = 1)
{
    Rational r{mpz_class(num), mpz_class(den)};
    r.canonicalize();
    return r;
}

// "3", "-1/8"
std::string toString(const Rational& q);

// Exact binomial coefficient C(q, k) for rational q.
Rational binomial(const Rational& q, int k);

} // namespace fwforge
