#include "fwforge/ncalg/abstract_expr.hpp"

#include <cstdlib>

namespace fwforge::ncalg {

namespace {

int betaSign(int rightBeta, const Word& leftWord)
{
    return (rightBeta && (leftWord.oCount() & 1)) ? -1 : 1;
}

template <class Keep>
AbstractExpr multiply(const AbstractExpr& a, const AbstractExpr& b, Keep keep)
{
    AbstractExpr out;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            if (!keep(ma.word, mb.word))
                continue;
            Monomial m{(ma.beta + mb.beta) & 1, ma.word * mb.word, ma.mExp + mb.mExp};
            Rational c = ca * cb;
            if (betaSign(mb.beta, ma.word) < 0)
                c = -c;
            out.addTerm(m, c);
        }
    }
    return out;
}

} // namespace

AbstractExpr AbstractExpr::term(const Rational& c, Monomial mono)
{
    AbstractExpr a;
    a.addTerm(mono, c);
    return a;
}

AbstractExpr AbstractExpr::scalar(const Rational& c)
{
    return term(c, Monomial{});
}

AbstractExpr AbstractExpr::letter(Letter l)
{
    return term(1, Monomial{0, Word(l), 0});
}

AbstractExpr AbstractExpr::beta()
{
    return term(1, Monomial{1, Word(), 0});
}

AbstractExpr AbstractExpr::mass(int k)
{
    return term(1, Monomial{0, Word(), k});
}

Rational AbstractExpr::coefficient(const Monomial& mono) const
{
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rational(0) : it->second;
}

void AbstractExpr::addTerm(const Monomial& mono, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

AbstractExpr& AbstractExpr::operator+=(const AbstractExpr& rhs)
{
    for (const auto& [m, c] : rhs.terms_)
        addTerm(m, c);
    return *this;
}

AbstractExpr& AbstractExpr::operator-=(const AbstractExpr& rhs)
{
    for (const auto& [m, c] : rhs.terms_)
        addTerm(m, -c);
    return *this;
}

AbstractExpr AbstractExpr::operator-() const
{
    return scaled(-1);
}

AbstractExpr AbstractExpr::scaled(const Rational& c) const
{
    AbstractExpr out;
    if (c == 0)
        return out;
    for (const auto& [m, v] : terms_)
        out.terms_.emplace_hint(out.terms_.end(), m, v * c);
    return out;
}

AbstractExpr AbstractExpr::filtered(const std::function<bool(const Monomial&)>& keep) const
{
    AbstractExpr out;
    for (const auto& [m, c] : terms_)
        if (keep(m))
            out.terms_.emplace_hint(out.terms_.end(), m, c);
    return out;
}

AbstractExpr mulExpr(const AbstractExpr& a, const AbstractExpr& b)
{
    return multiply(a, b, [](const Word&, const Word&) { return true; });
}

AbstractExpr mulExpr(const AbstractExpr& a, const AbstractExpr& b, const Truncation& trunc)
{
    return multiply(a, b, [&](const Word& x, const Word& y) {
        return x.size() + y.size() <= trunc.maxWordLen && x.eCount() + y.eCount() <= trunc.maxECount;
    });
}

AbstractExpr bracket(BracketKind kind, const AbstractExpr& a, const AbstractExpr& b)
{
    AbstractExpr ab = mulExpr(a, b);
    AbstractExpr ba = mulExpr(b, a);
    return kind == BracketKind::Commutator ? ab - ba : ab + ba;
}

AbstractExpr bracket(BracketKind kind, const AbstractExpr& a, const AbstractExpr& b, const Truncation& trunc)
{
    AbstractExpr ab = mulExpr(a, b, trunc);
    AbstractExpr ba = mulExpr(b, a, trunc);
    return kind == BracketKind::Commutator ? ab - ba : ab + ba;
}

AbstractExpr adjointExpr(const AbstractExpr& a)
{
    AbstractExpr out;
    for (const auto& [m, c] : a.terms()) {
        Word r = m.word.reversed();
        out.addTerm(Monomial{m.beta, r, m.mExp}, betaSign(m.beta, r) < 0 ? Rational(-c) : c);
    }
    return out;
}

AbstractExpr truncate(const AbstractExpr& a, const Truncation& trunc)
{
    return a.filtered([&](const Monomial& m) { return trunc.admits(m.word); });
}

std::map<LetterClass, AbstractExpr> classify(const AbstractExpr& a)
{
    std::map<LetterClass, AbstractExpr> out;
    for (const auto& [m, c] : a.terms())
        out[LetterClass{m.word.eCount(), m.word.oCount()}].addTerm(m, c);
    return out;
}

bool isEven(const AbstractExpr& a)
{
    for (const auto& [m, c] : a.terms())
        if (m.word.parity())
            return false;
    return true;
}

std::pair<bool, int> homogeneityDegree(const AbstractExpr& a)
{
    if (a.isZero())
        return {true, 0};
    int d = a.terms().begin()->first.word.size() + a.terms().begin()->first.mExp;
    for (const auto& [m, c] : a.terms())
        if (m.word.size() + m.mExp != d)
            return {false, 0};
    return {true, d};
}

std::string formatTerm(const Monomial& mono, const Rational& c)
{
    std::string out = toString(c) + " m^" + std::to_string(mono.mExp);
    if (mono.beta)
        out += " beta";
    if (!mono.word.empty())
        out += " " + mono.word.str();
    return out;
}

std::string formatExpr(const AbstractExpr& a)
{
    if (a.isZero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : a.terms()) {
        if (first) {
            out = formatTerm(m, c);
            first = false;
            continue;
        }
        out += sgn(c) < 0 ? " - " : " + ";
        out += formatTerm(m, abs(c));
    }
    return out;
}

} // namespace fwforge::ncalg
