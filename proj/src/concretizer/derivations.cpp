#include "fwforge/concretizer/derivations.hpp"

#include "fwforge/ncalg/parser.hpp"
#include "fwforge/stepwise/stepwise.hpp"

#include <sstream>
#include <stdexcept>

namespace fwforge::concretizer {

using ncalg::BracketExpr;
using Kind = ncalg::BracketExpr::Kind;

namespace {

using Vec = std::array<ConcreteExpr, 3>;

void flattenProduct(const BracketExpr& t, std::vector<BracketExpr>& out)
{
    if (t.kind() != Kind::Product) {
        out.push_back(t);
        return;
    }
    for (const auto& c : t.children())
        flattenProduct(c, out);
}

ConcreteComparison compare(std::string name, std::string epsfun, ConcreteExpr engine, ConcreteExpr target,
                           std::optional<int> cut, const ConcreteExpr& fullDifference = {})
{
    ConcreteComparison c;
    c.name = std::move(name);
    c.epsilonFunction = std::move(epsfun);
    c.difference = engine - target;
    if (cut)
        c.difference = c.difference.hbarSlice(*cut);
    if (cut)
        c.remainder = fullDifference.hbarSlice(*cut, true);
    c.engine = std::move(engine);
    c.target = std::move(target);
    c.passed = c.difference.isZero();
    return c;
}

struct Electrostatic {
    const ConcreteAlgebra& alg;
    ConcreteExpr even, odd;
    Vec p, field;

    explicit Electrostatic(const ConcreteAlgebra& a) : alg(a)
    {
        even = alg.multiply(alg.symbol(Symbol::e), alg.phi());
        for (int k = 0; k < 3; ++k) {
            p[k] = alg.momentum(k);
            field[k] = alg.electric(k);
        }
        odd = matrixDot(alg, alpha, p);
    }

    ConcreteExpr eh(int ePow, int hPow) const
    {
        return alg.multiply(alg.symbol(Symbol::e, ePow), alg.symbol(Symbol::hbar, hPow));
    }

    ConcreteExpr laplacian() const
    {
        ConcreteExpr out;
        for (int k = 0; k < 3; ++k) {
            std::array<int, 3> d{};
            d[k] = 2;
            out += alg.phi(d);
        }
        return out;
    }

    ConcreteExpr pDotE() const { return dot(alg, p, field) + dot(alg, field, p); }

    // Closed-form row bodies, keyed by the epsilon function they multiply.
    ConcreteExpr target(const std::string& epsfun) const
    {
        if (epsfun == "inv_eps_epsm") {
            ConcreteExpr body = sigmaCross(alg, p, field) - sigmaCross(alg, field, p) +
                                alg.multiply(alg.symbol(Symbol::hbar), laplacian());
            return makeRational(1, 8) * alg.multiply(eh(1, 1), body);
        }
        if (epsfun == "k13") {
            // (p.grad)(p.grad)Phi read with the derivatives on Phi and the
            // momenta to the right.
            ConcreteExpr body;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    std::array<int, 3> d{};
                    ++d[i];
                    ++d[j];
                    body += alg.multiply(alg.phi(d), alg.multiply(p[i], p[j]));
                }
            return makeRational(-1, 16) * alg.multiply(eh(1, 2), body);
        }
        if (epsfun == "inv_eps3")
            return makeRational(1, 16) *
                   alg.multiply(eh(2, 2), alg.multiply(alg.matrix(Element::Beta), dot(alg, field, field)));
        if (epsfun == "inv_eps5")
            return makeRational(-1, 64) *
                   alg.multiply(eh(2, 2), alg.multiply(alg.matrix(Element::Beta), alg.power(pDotE(), 2)));
        throw std::invalid_argument("no closed form for " + epsfun);
    }

    ConcreteExpr row(const CorrectionRow& r) const
    {
        ConcreteExpr body = evaluate(r.interior, alg, even, odd);
        if (r.beta)
            body = alg.multiply(alg.matrix(Element::Beta), body);
        return Rational(r.weight) * body;
    }
};

} // namespace

ConcreteExpr evaluate(const BracketExpr& t, const ConcreteAlgebra& alg, const ConcreteExpr& even,
                      const ConcreteExpr& odd)
{
    switch (t.kind()) {
    case Kind::Generator:
        return t.letter() == ncalg::Letter::E ? even : odd;
    case Kind::Beta:
        return alg.matrix(Element::Beta);
    case Kind::MassPower:
        return alg.symbol(Symbol::m, t.massPower());
    case Kind::Scalar:
        return alg.scalar(t.scalarValue());
    case Kind::Sum: {
        ConcreteExpr out;
        for (const auto& c : t.children())
            out += evaluate(c, alg, even, odd);
        return out;
    }
    case Kind::Product: {
        ConcreteExpr out = alg.one();
        for (const auto& c : t.children())
            out = alg.multiply(out, evaluate(c, alg, even, odd));
        return out;
    }
    case Kind::Commutator:
        return alg.commutator(evaluate(t.children()[0], alg, even, odd), evaluate(t.children()[1], alg, even, odd));
    case Kind::Anticommutator:
        return alg.anticommutator(evaluate(t.children()[0], alg, even, odd),
                                  evaluate(t.children()[1], alg, even, odd));
    case Kind::EpsilonFunction:
        break;
    }
    throw std::invalid_argument("epsilon function " + t.epsilonName() + " is opaque in the concrete algebra");
}

std::vector<CorrectionRow> correctionRows(const BracketExpr& hamiltonian)
{
    std::vector<CorrectionRow> rows;
    std::vector<BracketExpr> summands;
    if (hamiltonian.kind() == Kind::Sum)
        summands.assign(hamiltonian.children().begin(), hamiltonian.children().end());
    else
        summands.push_back(hamiltonian);
    for (const auto& s : summands) {
        std::vector<BracketExpr> factors;
        flattenProduct(s, factors);
        CorrectionRow row{Rational(1), false, {}, s};
        bool found = false;
        for (const auto& f : factors) {
            if (f.kind() == Kind::Scalar) {
                row.weight *= f.scalarValue();
            } else if (f.kind() == Kind::Beta) {
                row.beta = !row.beta;
            } else if (f.kind() == Kind::Anticommutator && f.children()[0].kind() == Kind::EpsilonFunction) {
                row.epsilonFunction = f.children()[0].epsilonName();
                row.interior = f.children()[1];
                found = true;
            } else {
                found = false;
                break;
            }
        }
        if (found)
            rows.push_back(row);
    }
    return rows;
}

bool ConcreteReport::passed() const
{
    for (const auto& c : comparisons)
        if (!c.passed)
            return false;
    return true;
}

const ConcreteComparison* ConcreteReport::find(const std::string& n) const
{
    for (const auto& c : comparisons)
        if (c.name == n)
            return &c;
    return nullptr;
}

ConcreteReport deriveElectrostatic(int hbarMax)
{
    ConcreteReport report;
    report.name = "electrostatic";
    report.mode = Mode::Electrostatic;
    report.hbarMax = hbarMax;

    ConcreteAlgebra cut(Mode::Electrostatic, hbarMax);
    ConcreteAlgebra full(Mode::Electrostatic);
    Electrostatic sc(cut), sf(full);
    auto rows = correctionRows(stepwise::buildEq13().structured);

    for (const auto& r : rows) {
        std::string name = (r.beta ? "beta*" : "") + ncalg::formatBracket(r.interior);
        ConcreteExpr fullDiff = sf.row(r) - sf.target(r.epsilonFunction);
        report.comparisons.push_back(
            compare(name, r.epsilonFunction, sc.row(r), sc.target(r.epsilonFunction), hbarMax, fullDiff));
    }

    report.comparisons.push_back(compare("O^2 = p^2", "", full.power(sf.odd, 2), dot(full, sf.p, sf.p), std::nullopt));
    report.comparisons.push_back(compare("[O^2,F] = i hbar e (p.E + E.p)", "", full.commutator(full.power(sf.odd, 2), sf.even),
                                         GaussianRational(0, 1) * full.multiply(sf.eh(1, 1), sf.pDotE()), std::nullopt));

    // At the first power of hbar only the spin-orbit group survives.
    ConcreteAlgebra first(Mode::Electrostatic, 1);
    Electrostatic s1(first);
    ConcreteExpr engine1, target1;
    for (const auto& r : rows)
        engine1 += s1.row(r);
    target1 = makeRational(1, 8) *
              first.multiply(s1.eh(1, 1), sigmaCross(first, s1.p, s1.field) - sigmaCross(first, s1.field, s1.p));
    report.comparisons.push_back(compare("hbar^1 cut: spin-orbit group only", "", engine1, target1, 1));

    ConcreteAlgebra flat(Mode::Electrostatic, hbarMax, true);
    Electrostatic s0(flat);
    ConcreteExpr engine0;
    for (const auto& r : rows)
        engine0 += s0.row(r);
    report.comparisons.push_back(compare("constant potential: corrections vanish", "", engine0, {}, hbarMax));
    return report;
}

ConcreteReport verifyUniformFieldCommutator(const UniformFieldOptions& opts)
{
    ConcreteReport report;
    report.name = "uniform-field commutator";
    report.mode = Mode::UniformField;
    ConcreteAlgebra alg(Mode::UniformField);

    Vec pi, field, magnetic;
    for (int k = 0; k < 3; ++k) {
        pi[k] = alg.momentum(k);
        field[k] = alg.electric(k);
        magnetic[k] = alg.symbol(fieldB(k));
    }
    ConcreteExpr mu = alg.symbol(Symbol::mu);
    ConcreteExpr even = alg.multiply(alg.symbol(Symbol::e), alg.phi()) - alg.multiply(mu, matrixDot(alg, concretizer::pi, magnetic));
    ConcreteExpr odd = matrixDot(alg, alpha, pi) + GaussianRational(0, 1) * alg.multiply(mu, matrixDot(alg, gammaVec, field));

    ConcreteExpr g5 = alg.matrix(Element::Gamma5).scaled(opts.gamma5Sign);
    ConcreteExpr beta = alg.matrix(Element::Beta);
    ConcreteExpr target =
        GaussianRational(0, 1) *
            alg.multiply(alg.multiply(alg.symbol(Symbol::e), alg.symbol(Symbol::hbar)), matrixDot(alg, alpha, field)) -
        GaussianRational(2) * alg.multiply(alg.multiply(beta, g5), alg.multiply(mu, dot(alg, pi, magnetic))) -
        GaussianRational(0, 2) * alg.multiply(g5, alg.multiply(alg.power(mu, 2), dot(alg, field, magnetic)));
    ConcreteExpr engine = alg.commutator(odd, even);

    auto restrict = [&](ConcreteExpr x) {
        if (!opts.withMoment)
            x = x.withoutSymbol(Symbol::mu);
        if (!opts.withElectric)
            for (int k = 0; k < 3; ++k)
                x = x.withoutSymbol(fieldE(k));
        return x;
    };
    std::string name = "[O,E]";
    if (!opts.withMoment)
        name += " (mu' = 0)";
    if (!opts.withElectric)
        name += " (E = 0)";
    if (opts.gamma5Sign < 0)
        name += " (gamma5 -> -gamma5)";
    report.comparisons.push_back(compare(name, "", restrict(engine), restrict(target), std::nullopt));
    return report;
}

ConcreteReport gammaIdentityReport()
{
    ConcreteReport report;
    report.name = "gamma identities";
    for (const auto& id : gammaIdentityChecks()) {
        ConcreteComparison c;
        c.name = id.name;
        c.passed = id.passed;
        report.comparisons.push_back(std::move(c));
    }
    return report;
}

nlohmann::json toJson(const ConcreteExpr& x, Mode mode)
{
    nlohmann::json terms = nlohmann::json::array();
    static const char axes[] = "xyz";
    for (const auto& [k, c] : x.terms()) {
        nlohmann::json scalars = nlohmann::json::object();
        for (int s = 0; s < kSymbolCount; ++s)
            if (k.powers[s] != 0)
                scalars[symbolName(static_cast<Symbol>(s))] = k.powers[s];
        nlohmann::json ops = nlohmann::json::array();
        for (const Factor& f : k.word) {
            if (f.momentum) {
                ops.push_back(std::string(mode == Mode::UniformField ? "pi_" : "p_") + axes[f.axis]);
            } else {
                std::string s = "Phi";
                if (f.d[0] + f.d[1] + f.d[2] > 0) {
                    s += "_";
                    for (int a = 0; a < 3; ++a)
                        s += std::string(static_cast<std::size_t>(f.d[a]), axes[a]);
                }
                ops.push_back(s);
            }
        }
        terms.push_back({{"coeff", c.str()},
                         {"matrix", label(k.matrix)},
                         {"scalars", scalars},
                         {"operators", ops},
                         {"hbar_order", k.hbarPower()},
                         {"text", formatTerm(k, c, mode)}});
    }
    return terms;
}

nlohmann::json toJson(const ConcreteReport& r)
{
    nlohmann::json items = nlohmann::json::array();
    for (const auto& c : r.comparisons) {
        nlohmann::json item{{"name", c.name}, {"passed", c.passed}};
        if (!c.epsilonFunction.empty())
            item["epsilon_function"] = c.epsilonFunction;
        item["engine"] = toJson(c.engine, r.mode);
        item["target"] = toJson(c.target, r.mode);
        item["difference"] = toJson(c.difference, r.mode);
        item["remainder"] = toJson(c.remainder, r.mode);
        items.push_back(std::move(item));
    }
    nlohmann::json out{{"name", r.name},
                       {"mode", r.mode == Mode::Electrostatic ? "electrostatic" : "uniform-field"},
                       {"checks", items},
                       {"passed", r.passed()}};
    out["hbar_max"] = r.hbarMax ? nlohmann::json(*r.hbarMax) : nlohmann::json(nullptr);
    return out;
}

std::string toText(const ConcreteReport& r)
{
    std::ostringstream os;
    os << r.name;
    if (r.hbarMax)
        os << " (hbar <= " << *r.hbarMax << ")";
    os << "\n";
    for (const auto& c : r.comparisons) {
        os << (c.passed ? "  ok    " : "  FAIL  ") << c.name;
        if (!c.epsilonFunction.empty())
            os << "  {" << c.epsilonFunction << ", .}";
        os << "\n";
        if (!c.engine.isZero() || !c.target.isZero())
            os << "        engine: " << formatExpr(c.engine, r.mode) << "\n";
        if (!c.difference.isZero())
            os << "        difference: " << formatExpr(c.difference, r.mode) << "\n";
        if (!c.remainder.isZero())
            os << "        above cut: " << formatExpr(c.remainder, r.mode) << "\n";
    }
    return os.str();
}

} // namespace fwforge::concretizer
