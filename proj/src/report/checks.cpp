#include "fwforge/report/checks.hpp"

#include <algorithm>

namespace fwforge {

std::optional<ncalg::LetterClass> IdentityCheck::lowestClass() const
{
    std::optional<ncalg::LetterClass> best;
    for (const auto& r : residualClasses) {
        auto key = [](const ncalg::LetterClass& c) { return std::pair(c.e + c.o, c.e); };
        if (!best || key(r.cls) < key(*best))
            best = r.cls;
    }
    return best;
}

IdentityCheck checkZero(std::string identity, const ncalg::AbstractExpr& residual)
{
    IdentityCheck out;
    out.identity = std::move(identity);
    out.passed = residual.isZero();
    for (auto& [cls, part] : ncalg::classify(residual))
        out.residualClasses.push_back({cls, part});
    return out;
}

IdentityCheck checkCondition(std::string identity, bool ok, std::string note)
{
    IdentityCheck out;
    out.identity = std::move(identity);
    out.passed = ok;
    out.note = std::move(note);
    return out;
}

bool allPassed(const std::vector<IdentityCheck>& checks)
{
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

} // namespace fwforge
