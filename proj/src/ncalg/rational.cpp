#include "fwforge/ncalg/rational.hpp"

namespace fwforge {

std::string toString(const Rational& q)
{
    return q.get_str();
}

Rational binomial(const Rational& q, int k)
{
    Rational r = 1;
    for (int i = 0; i < k; ++i) {
        r *= q - i;
        r /= i + 1;
    }
    return r;
}

} // namespace fwforge
