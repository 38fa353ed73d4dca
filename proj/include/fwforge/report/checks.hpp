#pragma once

#include "fwforge/ncalg/abstract_expr.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fwforge {

struct ClassResidual {
    ncalg::LetterClass cls;
    ncalg::AbstractExpr terms;
};

// Outcome of an exact cancellation check: the residual split by letter class.
struct IdentityCheck {
    std::string identity;
    bool passed = false;
    std::vector<ClassResidual> residualClasses;
    std::string note;

    // Lowest offending class by (total letters, e).
    std::optional<ncalg::LetterClass> lowestClass() const;
};

IdentityCheck checkZero(std::string identity, const ncalg::AbstractExpr& residual);
IdentityCheck checkCondition(std::string identity, bool ok, std::string note = {});

bool allPassed(const std::vector<IdentityCheck>& checks);

} // namespace fwforge
