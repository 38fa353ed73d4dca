#include "fwforge/eriksen/eriksen.hpp"

#include "fwforge/fseries/binomial.hpp"
#include "fwforge/ncalg/parser.hpp"

#include <set>
#include <stdexcept>

namespace fwforge::eriksen {

using namespace ncalg;

namespace {

AbstractExpr halfSum(const AbstractExpr& one, const AbstractExpr& x)
{
    return (one + x).scaled(makeRational(1, 2));
}

} // namespace

EriksenPipelineState runEriksenPipeline(const EriksenOptions& options)
{
    const Budget& b = options.budget;
    if (b.maxWordLen < 1)
        throw std::invalid_argument("budget.maxWordLen must be at least 1");
    const Truncation t = b.truncation();
    const AbstractExpr one = AbstractExpr::one();
    const AbstractExpr beta = AbstractExpr::beta();

    EriksenPipelineState s;
    s.budget = b;
    s.hamiltonian = mulExpr(beta, AbstractExpr::mass(1));
    if (options.withEven)
        s.hamiltonian += AbstractExpr::letter(Letter::E);
    if (options.withOdd)
        s.hamiltonian += AbstractExpr::letter(Letter::O);
    s.hamiltonian = truncate(s.hamiltonian, t);

    s.hamiltonianSquared = mulExpr(s.hamiltonian, s.hamiltonian, t);
    s.xSeries = mulExpr(s.hamiltonianSquared, AbstractExpr::mass(-2)) - one;
    s.invSqrt = fseries::ncBinomialPower(s.xSeries, makeRational(-1, 2), b);
    s.lambda = mulExpr(mulExpr(s.hamiltonian, AbstractExpr::mass(-1)), s.invSqrt, t);

    AbstractExpr betaLambda = mulExpr(beta, s.lambda, t);
    AbstractExpr lambdaBeta = mulExpr(s.lambda, beta, t);
    AbstractExpr y = (betaLambda + lambdaBeta - one.scaled(2)).scaled(makeRational(1, 4));
    AbstractExpr yInvSqrt = fseries::ncBinomialPower(y, makeRational(-1, 2), b);
    s.transform = mulExpr(halfSum(one, betaLambda), yInvSqrt, t);
    s.transformAdjoint = adjointExpr(s.transform);
    s.transformed = mulExpr(mulExpr(s.transform, s.hamiltonian, t), s.transformAdjoint, t);

    return s;
}

AbstractExpr eriksenHamiltonian(const Budget& budget)
{
    return runEriksenPipeline(EriksenOptions{budget}).transformed;
}

AbstractExpr radicandTransform(const EriksenPipelineState& s)
{
    const Truncation t = s.budget.truncation();
    const AbstractExpr one = AbstractExpr::one();
    AbstractExpr a = one + mulExpr(AbstractExpr::beta(), s.lambda, t);
    AbstractExpr radicand = mulExpr(adjointExpr(a), a, t);
    // radicand = 4 (1 + Y'), so radicand^(-1/2) = (1/2)(1 + Y')^(-1/2).
    AbstractExpr y = radicand.scaled(makeRational(1, 4)) - one;
    AbstractExpr inv = fseries::ncBinomialPower(y, makeRational(-1, 2), s.budget).scaled(makeRational(1, 2));
    return mulExpr(a, inv, t);
}

std::vector<IdentityCheck> verifyEriksenProperties(const EriksenPipelineState& s)
{
    const Truncation t = s.budget.truncation();
    const AbstractExpr one = AbstractExpr::one();
    const AbstractExpr beta = AbstractExpr::beta();
    AbstractExpr betaLambda = mulExpr(beta, s.lambda, t);
    AbstractExpr lambdaBeta = mulExpr(s.lambda, beta, t);
    AbstractExpr a = one + betaLambda;
    AbstractExpr aDag = adjointExpr(a);
    AbstractExpr radicand = mulExpr(aDag, a, t);

    std::vector<IdentityCheck> out;
    out.push_back(checkZero("lambda^2 = 1", mulExpr(s.lambda, s.lambda, t) - one));
    out.push_back(checkZero("[beta lambda, lambda beta] = 0", bracket(BracketKind::Commutator, betaLambda, lambdaBeta, t)));
    out.push_back(checkZero("[beta, beta lambda + lambda beta] = 0",
                            bracket(BracketKind::Commutator, beta, betaLambda + lambdaBeta, t)));
    out.push_back(checkZero("U U^dagger = 1", mulExpr(s.transform, s.transformAdjoint, t) - one));
    out.push_back(checkZero("U^dagger U = 1", mulExpr(s.transformAdjoint, s.transform, t) - one));
    out.push_back(checkZero("beta U = U^dagger beta", mulExpr(beta, s.transform, t) - mulExpr(s.transformAdjoint, beta, t)));
    out.push_back(checkZero("[(1 + beta lambda)^dagger (1 + beta lambda), 1 + beta lambda] = 0",
                            bracket(BracketKind::Commutator, radicand, a, t)));
    out.push_back(checkZero("[(1 + beta lambda)^dagger, 1 + beta lambda] = 0", bracket(BracketKind::Commutator, aDag, a, t)));
    out.push_back(checkZero("radicand form of U equals U", radicandTransform(s) - s.transform));

    AbstractExpr oddPart = s.transformed.filtered([](const Monomial& m) { return m.word.parity() == 1; });
    out.push_back(checkZero("H_FW is even", oddPart));
    out.push_back(checkZero("H_FW is self-adjoint", adjointExpr(s.transformed) - s.transformed));
    AbstractExpr pureE = s.transformed.filtered([](const Monomial& m) {
        return m.word.oCount() == 0 && m.word.eCount() >= 2;
    });
    out.push_back(checkZero("H_FW has no pure-E products", pureE));

    struct Stage {
        const char* name;
        const AbstractExpr* expr;
        int degree;
    };
    const Stage stages[] = {{"H", &s.hamiltonian, 1},       {"H^2", &s.hamiltonianSquared, 2},
                            {"X", &s.xSeries, 0},           {"(1+X)^(-1/2)", &s.invSqrt, 0},
                            {"lambda", &s.lambda, 0},       {"U", &s.transform, 0},
                            {"U^dagger", &s.transformAdjoint, 0}, {"H_FW", &s.transformed, 1}};
    for (const auto& st : stages) {
        auto [ok, d] = homogeneityDegree(*st.expr);
        bool pass = ok && (st.expr->isZero() || d == st.degree);
        out.push_back(checkCondition(std::string("homogeneity of ") + st.name + " (wordLen + mExp = " +
                                         std::to_string(st.degree) + ")",
                                     pass, ok ? "degree " + std::to_string(d) : "inhomogeneous"));
    }
    return out;
}

namespace {

constexpr const char* kBetaEpsSeries =
    "beta*(m^1 + 1/2*m^-1*pow(O,2) - 1/8*m^-3*pow(O,4) + 1/16*m^-5*pow(O,6) - 5/128*m^-7*pow(O,8))";
constexpr const char* kFirstOrder =
    " + E"
    " - 1/128*m^-6*acomm(8*m^4 - 6*m^2*pow(O,2) + 5*pow(O,4), comm(O, comm(O, E)))"
    " + 1/512*m^-6*acomm(2*m^2 - pow(O,2), comm(pow(O,2), comm(pow(O,2), E)))"
    " + 1/16*m^-3*beta*acomm(O, comm(comm(O, E), E))";
constexpr const char* kThirdOrder =
    " - 1/32*m^-4*comm(O, comm(comm(comm(O, E), E), E))"
    " + 11/1024*m^-6*comm(pow(O,2), comm(pow(O,2), comm(O, comm(O, E))))";
constexpr const char* kA24Kept =
    "24*acomm(pow(O,2), pow(comm(O, E), 2))"
    " - 11*pow(comm(pow(O,2), E), 2)"
    " - 14*acomm(pow(O,2), comm(comm(pow(O,2), E), E))";
constexpr const char* kA24Dropped =
    " - 4*comm(O, comm(O, comm(comm(pow(O,2), E), E)))"
    " + 9/2*comm(comm(O, comm(O, comm(pow(O,2), E))), E)"
    " + 5/2*comm(pow(O,2), comm(O, comm(comm(O, E), E)))";

} // namespace

BracketExpr encodeTarget(std::string_view name)
{
    std::string text = kBetaEpsSeries;
    text += kFirstOrder;
    if (name == "eq15") {
        text += kThirdOrder;
        text += std::string(" + 1/256*m^-5*beta*(") + kA24Kept + kA24Dropped + ")";
    } else if (name == "eq16") {
        text += std::string(" + 1/256*m^-5*beta*(") + kA24Kept + ")";
    } else {
        throw std::invalid_argument("unknown target '" + std::string(name) + "'");
    }
    return parseExpr(text);
}

bool OracleReport::passed() const
{
    for (const auto& c : classes)
        if (c.inScope && !c.residual.isZero())
            return false;
    return true;
}

OracleReport compareByClass(const AbstractExpr& engine, const AbstractExpr& target,
                            const std::function<bool(const LetterClass&)>& inScope)
{
    auto ce = classify(engine);
    auto ct = classify(target);
    std::set<LetterClass> keys;
    for (const auto& [k, v] : ce)
        keys.insert(k);
    for (const auto& [k, v] : ct)
        keys.insert(k);
    OracleReport out;
    for (const auto& k : keys) {
        ClassComparison c;
        c.cls = k;
        c.inScope = inScope(k);
        if (auto it = ce.find(k); it != ce.end())
            c.engine = it->second;
        if (auto it = ct.find(k); it != ct.end())
            c.target = it->second;
        c.residual = c.engine - c.target;
        out.classes.push_back(std::move(c));
    }
    return out;
}

bool exactSeriesScope(const LetterClass& c)
{
    return 2 * c.e + c.o <= 8 && c.e <= 3;
}

} // namespace fwforge::eriksen
