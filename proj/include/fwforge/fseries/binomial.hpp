#pragma once

#include "fwforge/ncalg/abstract_expr.hpp"
#include "fwforge/ncalg/expand.hpp"

namespace fwforge::fseries {

// (1 + X)^q as sum_k C(q, k) X^k, truncated by the budget. X must have no
// term with an empty word.
ncalg::AbstractExpr ncBinomialPower(const ncalg::AbstractExpr& x, const Rational& q, const ncalg::Budget& budget);

} // namespace fwforge::fseries
