#include "fwforge/concretizer/gaussian.hpp"

namespace fwforge::concretizer {

std::string GaussianRational::str() const
{
    if (im == 0)
        return toString(re);
    std::string imag = (im == 1 ? std::string() : im == -1 ? std::string("-") : toString(im)) + "i";
    if (re == 0)
        return imag;
    return "(" + toString(re) + (im > 0 ? "+" : "") + imag + ")";
}

} // namespace fwforge::concretizer
