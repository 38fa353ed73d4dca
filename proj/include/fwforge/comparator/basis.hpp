#pragma once

#include "fwforge/ncalg/abstract_expr.hpp"
#include "fwforge/ncalg/bracket_expr.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fwforge::comparator {

using ncalg::AbstractExpr;
using ncalg::LetterClass;

struct BasisElement {
    ncalg::BracketExpr bracket;
    std::string text;
    int hbarOrder = 0;
    LetterClass cls;
    AbstractExpr expansion;  // beta-free, m^0
    bool vocabulary = false;
};

// A bracket monomial found to be a combination of basis elements.
struct BasisDependency {
    std::string text;
    LetterClass cls;
    std::vector<std::pair<std::size_t, Rational>> combination;
};

// Bracket monomials spanning every (e, o) word space within the bounds.
// Within a class, elements are accepted greedily in the order
// (hbar order descending, named brackets first, node count, text), so the
// elements of order >= k span exactly the order->=k part of the candidates
// and the unique expansion coefficients of a word sum read off its order.
class BracketBasis {
public:
    static BracketBasis build(int maxWordLen, int maxECount);

    int maxWordLen() const { return maxWordLen_; }
    int maxECount() const { return maxECount_; }

    const std::vector<BasisElement>& elements() const { return elements_; }
    const std::vector<BasisDependency>& dependencies() const { return dependencies_; }

    // Element indices by (hbar order, class, text).
    std::vector<std::size_t> listing() const;
    std::optional<std::size_t> find(const std::string& text) const;
    bool covers(const LetterClass& c) const;

    struct ClassSpace;
    const ClassSpace* space(const LetterClass& c) const;

private:
    int maxWordLen_ = 0;
    int maxECount_ = 0;
    std::vector<BasisElement> elements_;
    std::vector<BasisDependency> dependencies_;
    std::map<LetterClass, std::shared_ptr<const ClassSpace>> spaces_;
};

// Bracket texts of the named elements in preference order.
const std::vector<std::string>& vocabulary();

struct BasisTerm {
    std::size_t element = 0;
    int beta = 0;
    int mExp = 0;
    Rational coeff;
};

struct Projection {
    std::vector<BasisTerm> terms;
    AbstractExpr residual;
    // Minimum hbar order over nonzero coefficients; empty when there are none.
    std::optional<int> minHbarOrder;
};

Projection project(const AbstractExpr& a, const BracketBasis& basis);
// Spanned part only; add the residual to recover the projected input.
AbstractExpr reconstruct(const Projection& p, const BracketBasis& basis);

std::string basisTermText(const BasisTerm& t, const BracketBasis& basis);

} // namespace fwforge::comparator
