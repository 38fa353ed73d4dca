#include "fwforge/ncalg/bracket_expr.hpp"

#include <stdexcept>

namespace fwforge::ncalg {

struct BracketExpr::Node {
    Kind kind;
    Letter letter = Letter::E;
    int mass = 0;
    Rational scalar;
    std::string name;
    std::vector<BracketExpr> children;
};

BracketExpr BracketExpr::generator(Letter l)
{
    return BracketExpr(std::make_shared<const Node>(Node{Kind::Generator, l, 0, {}, {}, {}}));
}

BracketExpr BracketExpr::beta()
{
    return BracketExpr(std::make_shared<const Node>(Node{Kind::Beta, Letter::E, 0, {}, {}, {}}));
}

BracketExpr BracketExpr::mass(int k)
{
    return BracketExpr(std::make_shared<const Node>(Node{Kind::MassPower, Letter::E, k, {}, {}, {}}));
}

BracketExpr BracketExpr::scalar(const Rational& c)
{
    return BracketExpr(std::make_shared<const Node>(Node{Kind::Scalar, Letter::E, 0, c, {}, {}}));
}

BracketExpr BracketExpr::sum(std::vector<BracketExpr> children)
{
    if (children.empty())
        return scalar(0);
    if (children.size() == 1)
        return children.front();
    return BracketExpr(std::make_shared<const Node>(Node{Kind::Sum, Letter::E, 0, {}, {}, std::move(children)}));
}

BracketExpr BracketExpr::product(std::vector<BracketExpr> children)
{
    if (children.empty())
        return scalar(1);
    if (children.size() == 1)
        return children.front();
    return BracketExpr(std::make_shared<const Node>(Node{Kind::Product, Letter::E, 0, {}, {}, std::move(children)}));
}

BracketExpr BracketExpr::commutator(BracketExpr a, BracketExpr b)
{
    return BracketExpr(std::make_shared<const Node>(
        Node{Kind::Commutator, Letter::E, 0, {}, {}, {std::move(a), std::move(b)}}));
}

BracketExpr BracketExpr::anticommutator(BracketExpr a, BracketExpr b)
{
    return BracketExpr(std::make_shared<const Node>(
        Node{Kind::Anticommutator, Letter::E, 0, {}, {}, {std::move(a), std::move(b)}}));
}

BracketExpr BracketExpr::epsilonFunction(std::string name)
{
    return BracketExpr(
        std::make_shared<const Node>(Node{Kind::EpsilonFunction, Letter::E, 0, {}, std::move(name), {}}));
}

BracketExpr::Kind BracketExpr::kind() const { return node_->kind; }
Letter BracketExpr::letter() const { return node_->letter; }
int BracketExpr::massPower() const { return node_->mass; }
const Rational& BracketExpr::scalarValue() const { return node_->scalar; }
const std::string& BracketExpr::epsilonName() const { return node_->name; }
std::span<const BracketExpr> BracketExpr::children() const { return node_->children; }

std::size_t BracketExpr::nodeCount() const
{
    std::size_t n = 1;
    for (const auto& c : node_->children)
        n += c.nodeCount();
    return n;
}

bool BracketExpr::structurallyEqual(const BracketExpr& other) const
{
    if (node_ == other.node_)
        return true;
    const Node& a = *node_;
    const Node& b = *other.node_;
    if (a.kind != b.kind || a.letter != b.letter || a.mass != b.mass || a.scalar != b.scalar || a.name != b.name ||
        a.children.size() != b.children.size())
        return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!a.children[i].structurallyEqual(b.children[i]))
            return false;
    return true;
}

BracketExpr operator+(const BracketExpr& a, const BracketExpr& b)
{
    return BracketExpr::sum({a, b});
}

BracketExpr operator-(const BracketExpr& a, const BracketExpr& b)
{
    return BracketExpr::sum({a, -b});
}

BracketExpr operator-(const BracketExpr& a)
{
    if (a.kind() == BracketExpr::Kind::Scalar)
        return BracketExpr::scalar(-a.scalarValue());
    if (a.kind() == BracketExpr::Kind::Product && a.children().front().kind() == BracketExpr::Kind::Scalar) {
        std::vector<BracketExpr> kids(a.children().begin(), a.children().end());
        kids.front() = BracketExpr::scalar(-kids.front().scalarValue());
        return BracketExpr::product(std::move(kids));
    }
    return BracketExpr::product({BracketExpr::scalar(-1), a});
}

BracketExpr operator*(const BracketExpr& a, const BracketExpr& b)
{
    return BracketExpr::product({a, b});
}

BracketExpr operator*(const Rational& c, const BracketExpr& a)
{
    return BracketExpr::product({BracketExpr::scalar(c), a});
}

BracketExpr comm(const BracketExpr& a, const BracketExpr& b)
{
    return BracketExpr::commutator(a, b);
}

BracketExpr acomm(const BracketExpr& a, const BracketExpr& b)
{
    return BracketExpr::anticommutator(a, b);
}

BracketExpr pow(const BracketExpr& a, int n)
{
    if (n < 0)
        throw std::invalid_argument("pow exponent must be non-negative");
    return BracketExpr::product(std::vector<BracketExpr>(static_cast<std::size_t>(n), a));
}

namespace {

Parity combine(Parity a, Parity b)
{
    if (a == Parity::Mixed || b == Parity::Mixed)
        return Parity::Mixed;
    return a == b ? Parity::Even : Parity::Odd;
}

} // namespace

Grade parityAndOrder(const BracketExpr& t)
{
    using K = BracketExpr::Kind;
    switch (t.kind()) {
    case K::Generator:
        return {t.letter() == Letter::O ? Parity::Odd : Parity::Even, 0};
    case K::Beta:
    case K::MassPower:
    case K::Scalar:
    case K::EpsilonFunction:
        return {Parity::Even, 0};
    case K::Sum: {
        Grade g = parityAndOrder(t.children().front());
        for (const auto& c : t.children().subspan(1)) {
            Grade h = parityAndOrder(c);
            if (g.parity == Parity::Mixed || h.parity != g.parity)
                return {Parity::Mixed, std::nullopt};
            g.hbarOrder = std::min(*g.hbarOrder, *h.hbarOrder);
        }
        return g;
    }
    case K::Product:
    case K::Anticommutator:
    case K::Commutator: {
        Grade g{Parity::Even, 0};
        bool allOdd = true;
        for (const auto& c : t.children()) {
            Grade h = parityAndOrder(c);
            allOdd = allOdd && h.parity == Parity::Odd;
            g.parity = combine(g.parity, h.parity);
            if (g.parity == Parity::Mixed)
                return {Parity::Mixed, std::nullopt};
            *g.hbarOrder += *h.hbarOrder;
        }
        if (t.kind() == K::Commutator && !allOdd)
            *g.hbarOrder += 1;
        return g;
    }
    }
    return {Parity::Mixed, std::nullopt};
}

const char* toString(Parity p)
{
    switch (p) {
    case Parity::Even:
        return "even";
    case Parity::Odd:
        return "odd";
    case Parity::Mixed:
        return "mixed";
    }
    return "mixed";
}

} // namespace fwforge::ncalg
