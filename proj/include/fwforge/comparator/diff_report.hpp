#pragma once

#include "fwforge/comparator/basis.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace fwforge::comparator {

struct ClassDiff {
    LetterClass cls;
    bool identical = true;
    AbstractExpr difference;
    Projection projection;
};

struct DiffReport {
    int maxWordLen = 0;
    int maxECount = 0;
    std::vector<ClassDiff> classes;

    const ClassDiff* find(const LetterClass& c) const;
    // Every nonzero difference is spanned by the basis and has order >= 2.
    bool headlineHolds() const;
};

DiffReport diffReport(const AbstractExpr& hEriksen, const AbstractExpr& hStepwise, const BracketBasis& basis);

nlohmann::json toJson(const Projection& p, const BracketBasis& basis);
nlohmann::json toJson(const DiffReport& r, const BracketBasis& basis);
std::string bracketTable(const DiffReport& r, const BracketBasis& basis);

} // namespace fwforge::comparator
