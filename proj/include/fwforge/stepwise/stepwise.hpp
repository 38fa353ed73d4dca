#pragma once

#include "fwforge/comparator/basis.hpp"
#include "fwforge/eriksen/eriksen.hpp"
#include "fwforge/ncalg/bracket_expr.hpp"
#include "fwforge/ncalg/expand.hpp"

#include <string_view>
#include <vector>

namespace fwforge::stepwise {

using ncalg::AbstractExpr;
using ncalg::BracketExpr;
using ncalg::Budget;

struct StepwiseHamiltonian {
    BracketExpr structured;
};

// beta eps + E plus the four anticommutator corrections of the two-step
// result, with F = E.
StepwiseHamiltonian buildEq13();
AbstractExpr expandStatic(const StepwiseHamiltonian& h, const Budget& budget);

// beta eps + E - 1/8 {1/(eps(eps+m)), [O,[O,E]]}
BracketExpr practicalFormula();
AbstractExpr buildEq19(const Budget& budget);

// Keeps terms with mExp >= -kMax.
AbstractExpr inverseMassTruncate(const AbstractExpr& a, int kMax);

// Literal series displays: "eq17" (relativistic-correction series of the
// two-step result) and "eq18" (classical FW result, F = E).
BracketExpr encodeSeriesTarget(std::string_view name);

struct FirstStepOperators {
    BracketExpr evenPrime;
    BracketExpr oddPrime;
};

FirstStepOperators firstStepOperators();

struct SeriesMatch {
    eriksen::OracleReport classes;
    comparator::Projection delta24;  // (2,4) class of expansion minus display
    bool exactClassesMatch = false;
    bool delta24Order2 = false;
    bool passed() const { return exactClassesMatch && delta24Order2; }
};

// Expansion of the structured Hamiltonian against the literal series display:
// exact on (0, o<=8), (1, o<=6), (2,2); the (2,4) delta is projected.
SeriesMatch compareWithSeriesDisplay(const Budget& budget, const comparator::BracketBasis& basis);

struct SecondStepClass {
    ncalg::LetterClass cls;
    AbstractExpr difference;  // direct second step minus structured result
    comparator::Projection projection;
    bool explained = true;    // zero, or spanned by order >= 3 brackets
};

struct SecondStepResult {
    AbstractExpr hamiltonian;
    std::vector<SecondStepClass> classes;
    bool explained() const;
};

SecondStepResult deriveSecondStep(const Budget& budget, const comparator::BracketBasis& basis);

} // namespace fwforge::stepwise
