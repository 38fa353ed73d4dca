#pragma once

#include "fwforge/ncalg/rational.hpp"
#include "fwforge/ncalg/word.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>

namespace fwforge::ncalg {

// beta^beta * m^mExp * word, with beta normalized to the left.
struct Monomial {
    int beta = 0;
    Word word;
    int mExp = 0;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct Truncation {
    int maxWordLen = Word::kMaxLength;
    int maxECount = Word::kMaxLength;

    bool admits(const Word& w) const { return w.size() <= maxWordLen && w.eCount() <= maxECount; }
};

// Letter counts (number of E, number of O).
struct LetterClass {
    int e = 0;
    int o = 0;

    friend auto operator<=>(const LetterClass&, const LetterClass&) = default;
    friend bool operator==(const LetterClass&, const LetterClass&) = default;
};

class AbstractExpr {
public:
    using TermMap = std::map<Monomial, Rational>;

    AbstractExpr() = default;

    static AbstractExpr term(const Rational& c, Monomial mono);
    static AbstractExpr scalar(const Rational& c);
    static AbstractExpr one() { return scalar(1); }
    static AbstractExpr letter(Letter l);
    static AbstractExpr beta();
    static AbstractExpr mass(int k);

    const TermMap& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coefficient(const Monomial& mono) const;

    void addTerm(const Monomial& mono, const Rational& c);

    AbstractExpr& operator+=(const AbstractExpr& rhs);
    AbstractExpr& operator-=(const AbstractExpr& rhs);
    AbstractExpr operator-() const;
    AbstractExpr scaled(const Rational& c) const;

    AbstractExpr filtered(const std::function<bool(const Monomial&)>& keep) const;

    friend AbstractExpr operator+(AbstractExpr a, const AbstractExpr& b) { return a += b; }
    friend AbstractExpr operator-(AbstractExpr a, const AbstractExpr& b) { return a -= b; }
    friend bool operator==(const AbstractExpr&, const AbstractExpr&) = default;

private:
    TermMap terms_;
};

enum class BracketKind { Commutator, Anticommutator };

AbstractExpr mulExpr(const AbstractExpr& a, const AbstractExpr& b);
AbstractExpr mulExpr(const AbstractExpr& a, const AbstractExpr& b, const Truncation& trunc);

AbstractExpr bracket(BracketKind kind, const AbstractExpr& a, const AbstractExpr& b);
AbstractExpr bracket(BracketKind kind, const AbstractExpr& a, const AbstractExpr& b, const Truncation& trunc);

inline AbstractExpr commutator(const AbstractExpr& a, const AbstractExpr& b)
{
    return bracket(BracketKind::Commutator, a, b);
}
inline AbstractExpr anticommutator(const AbstractExpr& a, const AbstractExpr& b)
{
    return bracket(BracketKind::Anticommutator, a, b);
}

AbstractExpr adjointExpr(const AbstractExpr& a);
AbstractExpr truncate(const AbstractExpr& a, const Truncation& trunc);

std::map<LetterClass, AbstractExpr> classify(const AbstractExpr& a);

// True when every term has an even number of O letters.
bool isEven(const AbstractExpr& a);

// Common value of wordLen + mExp over all terms, or nullopt-like false when
// the terms disagree. Returns {true, 0} for the zero expression.
std::pair<bool, int> homogeneityDegree(const AbstractExpr& a);

std::string formatTerm(const Monomial& mono, const Rational& c);
std::string formatExpr(const AbstractExpr& a);

} // namespace fwforge::ncalg
