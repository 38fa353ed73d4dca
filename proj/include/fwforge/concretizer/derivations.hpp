#pragma once

#include "fwforge/concretizer/concrete_expr.hpp"
#include "fwforge/ncalg/bracket_expr.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace fwforge::concretizer {

// Substitutes E -> even, O -> odd, beta -> beta matrix, m^k -> m^k.
// Epsilon functions stay opaque and are rejected here.
ConcreteExpr evaluate(const ncalg::BracketExpr& t, const ConcreteAlgebra& alg, const ConcreteExpr& even,
                      const ConcreteExpr& odd);

// A correction  weight * [beta] * {epsfun(name), interior}.
struct CorrectionRow {
    Rational weight;
    bool beta = false;
    std::string epsilonFunction;
    ncalg::BracketExpr interior;
};

std::vector<CorrectionRow> correctionRows(const ncalg::BracketExpr& hamiltonian);

struct ConcreteComparison {
    std::string name;
    std::string epsilonFunction;  // registry symbol shared by both sides
    ConcreteExpr engine;
    ConcreteExpr target;
    ConcreteExpr difference;      // engine - target within the hbar cut
    ConcreteExpr remainder;       // engine - target above the cut
    bool passed = false;
};

struct ConcreteReport {
    std::string name;
    Mode mode = Mode::Electrostatic;
    std::optional<int> hbarMax;
    std::vector<ConcreteComparison> comparisons;
    bool passed() const;
    const ConcreteComparison* find(const std::string& name) const;
};

// Two-step corrections with E = e Phi, O = alpha.p against the closed
// electrostatic form, per epsilon-function row.
ConcreteReport deriveElectrostatic(int hbarMax = 2);

struct UniformFieldOptions {
    bool withMoment = true;    // mu' != 0
    bool withElectric = true;  // E != 0
    int gamma5Sign = 1;        // sign of gamma5 used in the target
};

// [O, E] for E = e Phi - mu' Pi.B, O = alpha.pi + i mu' gamma.E in constant
// fields.
ConcreteReport verifyUniformFieldCommutator(const UniformFieldOptions& opts = {});

ConcreteReport gammaIdentityReport();

nlohmann::json toJson(const ConcreteExpr& x, Mode mode);
nlohmann::json toJson(const ConcreteReport& r);
std::string toText(const ConcreteReport& r);

} // namespace fwforge::concretizer
