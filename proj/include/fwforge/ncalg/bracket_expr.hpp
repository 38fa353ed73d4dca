#pragma once

#include "fwforge/ncalg/abstract_expr.hpp"

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fwforge::ncalg {

class BracketExpr {
public:
    enum class Kind { Generator, Beta, MassPower, Scalar, Sum, Product, Commutator, Anticommutator, EpsilonFunction };

    static BracketExpr generator(Letter l);
    static BracketExpr beta();
    static BracketExpr mass(int k);
    static BracketExpr scalar(const Rational& c);
    static BracketExpr sum(std::vector<BracketExpr> children);
    static BracketExpr product(std::vector<BracketExpr> children);
    static BracketExpr commutator(BracketExpr a, BracketExpr b);
    static BracketExpr anticommutator(BracketExpr a, BracketExpr b);
    static BracketExpr epsilonFunction(std::string name);

    Kind kind() const;
    Letter letter() const;
    int massPower() const;
    const Rational& scalarValue() const;
    const std::string& epsilonName() const;
    std::span<const BracketExpr> children() const;

    std::size_t nodeCount() const;
    bool structurallyEqual(const BracketExpr& other) const;

private:
    struct Node;
    explicit BracketExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

BracketExpr operator+(const BracketExpr& a, const BracketExpr& b);
BracketExpr operator-(const BracketExpr& a, const BracketExpr& b);
BracketExpr operator-(const BracketExpr& a);
BracketExpr operator*(const BracketExpr& a, const BracketExpr& b);
BracketExpr operator*(const Rational& c, const BracketExpr& a);
BracketExpr comm(const BracketExpr& a, const BracketExpr& b);
BracketExpr acomm(const BracketExpr& a, const BracketExpr& b);
BracketExpr pow(const BracketExpr& a, int n);

inline const BracketExpr E = BracketExpr::generator(Letter::E);
inline const BracketExpr O = BracketExpr::generator(Letter::O);
inline const BracketExpr Beta = BracketExpr::beta();
inline BracketExpr M(int k) { return BracketExpr::mass(k); }
inline BracketExpr Q(long num, long den = 1) { return BracketExpr::scalar(makeRational(num, den)); }

enum class Parity { Even, Odd, Mixed };

struct Grade {
    Parity parity = Parity::Even;
    std::optional<int> hbarOrder;
};

Grade parityAndOrder(const BracketExpr& t);

const char* toString(Parity p);

} // namespace fwforge::ncalg
