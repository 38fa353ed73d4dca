#include "fwforge/fseries/binomial.hpp"

#include "fwforge/fseries/central_series.hpp"

namespace fwforge::fseries {

ncalg::AbstractExpr ncBinomialPower(const ncalg::AbstractExpr& x, const Rational& q, const ncalg::Budget& budget)
{
    using namespace ncalg;
    for (const auto& [m, c] : x.terms())
        if (m.word.empty())
            throw SeriesError("binomial argument has a constant term " + formatTerm(m, c));
    const Truncation trunc = budget.truncation();
    AbstractExpr x1 = truncate(x, trunc);
    AbstractExpr out = AbstractExpr::one();
    AbstractExpr power = AbstractExpr::one();
    for (int k = 1; k <= budget.maxWordLen; ++k) {
        power = mulExpr(power, x1, trunc);
        if (power.size() > budget.termCap)
            throw BudgetOverflow("ncBinomialPower/X^" + std::to_string(k), power.size());
        if (power.isZero())
            break;
        out += power.scaled(binomial(q, k));
    }
    return out;
}

} // namespace fwforge::fseries
