#pragma once

#include "fwforge/ncalg/abstract_expr.hpp"
#include "fwforge/ncalg/bracket_expr.hpp"
#include "fwforge/ncalg/expand.hpp"
#include "fwforge/report/checks.hpp"

#include <functional>
#include <string_view>
#include <vector>

namespace fwforge::eriksen {

using ncalg::AbstractExpr;
using ncalg::Budget;

struct EriksenOptions {
    Budget budget;
    bool withEven = true;
    bool withOdd = true;
};

struct EriksenPipelineState {
    Budget budget;
    AbstractExpr hamiltonian;
    AbstractExpr hamiltonianSquared;
    AbstractExpr xSeries;
    AbstractExpr invSqrt;
    AbstractExpr lambda;
    AbstractExpr transform;
    AbstractExpr transformAdjoint;
    AbstractExpr transformed;
};

EriksenPipelineState runEriksenPipeline(const EriksenOptions& options);
AbstractExpr eriksenHamiltonian(const Budget& budget);

// Transformation operator recomputed from (1+beta lambda) / sqrt((1+beta lambda)^dagger (1+beta lambda)).
AbstractExpr radicandTransform(const EriksenPipelineState& state);

// Exact checks of the defining identities of the transform, evaluated on the
// operators stored in the state (so a corrupted state is detected).
std::vector<IdentityCheck> verifyEriksenProperties(const EriksenPipelineState& state);

// Structured encodings of the exact series ("eq15") and its order-2 truncation
// ("eq16").
ncalg::BracketExpr encodeTarget(std::string_view name);

struct ClassComparison {
    ncalg::LetterClass cls;
    bool inScope = false;
    AbstractExpr engine;
    AbstractExpr target;
    AbstractExpr residual;  // engine - target
};

struct OracleReport {
    std::vector<ClassComparison> classes;
    bool passed() const;
};

// Class-by-class comparison; only in-scope classes decide pass/fail, the rest
// are reported.
OracleReport compareByClass(const AbstractExpr& engine, const AbstractExpr& target,
                            const std::function<bool(const ncalg::LetterClass&)>& inScope);

// 2e + o <= 8, e <= 3.
bool exactSeriesScope(const ncalg::LetterClass& c);

} // namespace fwforge::eriksen
