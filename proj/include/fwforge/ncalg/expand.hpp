#pragma once

#include "fwforge/ncalg/abstract_expr.hpp"
#include "fwforge/ncalg/bracket_expr.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fwforge::ncalg {

struct Budget {
    int maxWordLen = 8;
    int maxECount = 3;
    std::size_t termCap = 500000;

    Truncation truncation() const { return {maxWordLen, maxECount}; }
    // Order in x = O^2/m^2 needed to saturate maxWordLen.
    int seriesOrder() const { return (maxWordLen + 1) / 2; }
};

class BudgetOverflow : public std::runtime_error {
public:
    BudgetOverflow(std::string path, std::size_t terms);
    const std::string& path() const { return path_; }
    std::size_t terms() const { return terms_; }

private:
    std::string path_;
    std::size_t terms_;
};

AbstractExpr expandBracket(const BracketExpr& t, const Budget& budget);

} // namespace fwforge::ncalg
