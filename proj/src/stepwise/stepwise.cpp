#include "fwforge/stepwise/stepwise.hpp"

#include "fwforge/ncalg/parser.hpp"

#include <stdexcept>

namespace fwforge::stepwise {

using namespace ncalg;

StepwiseHamiltonian buildEq13()
{
    return {parseExpr("beta*epsfun(eps) + E"
                      " - 1/8*acomm(epsfun(inv_eps_epsm), comm(O, comm(O, E)))"
                      " + 1/64*acomm(epsfun(k13), comm(pow(O,2), comm(pow(O,2), E)))"
                      " - 1/16*beta*acomm(epsfun(inv_eps3), pow(comm(O, E), 2))"
                      " + 1/64*beta*acomm(epsfun(inv_eps5), pow(comm(pow(O,2), E), 2))")};
}

AbstractExpr expandStatic(const StepwiseHamiltonian& h, const Budget& budget)
{
    return expandBracket(h.structured, budget);
}

BracketExpr practicalFormula()
{
    return parseExpr("beta*epsfun(eps) + E - 1/8*acomm(epsfun(inv_eps_epsm), comm(O, comm(O, E)))");
}

AbstractExpr buildEq19(const Budget& budget)
{
    return expandBracket(practicalFormula(), budget);
}

AbstractExpr inverseMassTruncate(const AbstractExpr& a, int kMax)
{
    return a.filtered([kMax](const Monomial& m) { return m.mExp >= -kMax; });
}

BracketExpr encodeSeriesTarget(std::string_view name)
{
    if (name == "eq17")
        return parseExpr("beta*(m^1 + 1/2*m^-1*pow(O,2) - 1/8*m^-3*pow(O,4) + 1/16*m^-5*pow(O,6)"
                         " - 5/128*m^-7*pow(O,8)) + E"
                         " - 1/128*m^-6*acomm(8*m^4 - 6*m^2*pow(O,2) + 5*pow(O,4), comm(O, comm(O, E)))"
                         " + 1/512*m^-6*acomm(10*m^2 - 19*pow(O,2), comm(pow(O,2), comm(pow(O,2), E)))"
                         " - 1/8*m^-3*beta*pow(comm(O, E), 2)"
                         " + 1/32*m^-5*beta*pow(comm(pow(O,2), E), 2)");
    if (name == "eq18")
        return parseExpr("beta*(m^1 + 1/2*m^-1*pow(O,2) - 1/8*m^-3*pow(O,4)) + E"
                         " - 1/8*m^-2*comm(O, comm(O, E))"
                         " - 1/8*m^-3*beta*pow(comm(O, E), 2)");
    throw std::invalid_argument("unknown target '" + std::string(name) + "'");
}

FirstStepOperators firstStepOperators()
{
    // a = (eps+m)/sqrt(2 eps (eps+m)), b = beta O / sqrt(2 eps (eps+m)).
    // The double-commutator weight 1/2 is what the even part of
    // U F U^dagger gives for U = a + b with a^2 - b^2 = 1.
    const std::string a = "epsfun(fact_plus)";
    const std::string b = "(beta*O*epsfun(inv_sqrt2))";
    BracketExpr even = parseExpr("E - 1/2*comm(" + a + ", comm(" + a + ", E)) + 1/2*comm(" + b + ", comm(" + b +
                                 ", E))");
    BracketExpr odd = parseExpr(b + "*E*" + a + " - " + a + "*E*" + b);
    return {even, odd};
}

SeriesMatch compareWithSeriesDisplay(const Budget& budget, const comparator::BracketBasis& basis)
{
    SeriesMatch out;
    AbstractExpr engine = expandStatic(buildEq13(), budget);
    AbstractExpr display = expandBracket(encodeSeriesTarget("eq17"), budget);
    out.classes = eriksen::compareByClass(engine, display, [](const LetterClass& c) {
        return (c.e == 0 && c.o <= 8) || (c.e == 1 && c.o <= 6) || (c.e == 2 && c.o == 2);
    });
    out.exactClassesMatch = out.classes.passed();
    for (const auto& c : out.classes.classes)
        if (c.cls == LetterClass{2, 4})
            out.delta24 = comparator::project(c.residual, basis);
    out.delta24Order2 = out.delta24.residual.isZero() &&
                        (!out.delta24.minHbarOrder || *out.delta24.minHbarOrder >= 2);
    return out;
}

bool SecondStepResult::explained() const
{
    for (const auto& c : classes)
        if (!c.explained)
            return false;
    return true;
}

SecondStepResult deriveSecondStep(const Budget& budget, const comparator::BracketBasis& basis)
{
    if (budget.maxECount < 2)
        throw std::invalid_argument("second step needs maxECount >= 2");
    FirstStepOperators ops = firstStepOperators();
    BracketExpr h = BracketExpr::sum({Beta * BracketExpr::epsilonFunction("eps"), ops.evenPrime,
                                      Q(1, 4) * Beta *
                                          acomm(BracketExpr::epsilonFunction("inv_eps"), ops.oddPrime * ops.oddPrime)});
    SecondStepResult out;
    out.hamiltonian = expandBracket(h, budget);
    AbstractExpr structured = expandStatic(buildEq13(), budget);
    for (auto& [cls, diff] : classify(out.hamiltonian - structured)) {
        SecondStepClass c;
        c.cls = cls;
        c.difference = diff;
        c.projection = comparator::project(diff, basis);
        c.explained = c.projection.residual.isZero() && c.projection.minHbarOrder && *c.projection.minHbarOrder >= 3;
        out.classes.push_back(std::move(c));
    }
    return out;
}

} // namespace fwforge::stepwise
