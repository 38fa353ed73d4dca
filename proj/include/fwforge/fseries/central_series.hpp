#pragma once

#include "fwforge/ncalg/abstract_expr.hpp"
#include "fwforge/ncalg/rational.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fwforge::fseries {

class SeriesError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// m^mExp * sum_k c_k x^k with x = O^2/m^2, truncated after x^order.
class CentralSeries {
public:
    CentralSeries(int mExp, std::vector<Rational> coeffs);

    static CentralSeries constant(const Rational& c, int mExp, int order);
    // m (1 + x)^(1/2)
    static CentralSeries epsilon(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    int mExp() const { return mExp_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    const Rational& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }

    CentralSeries operator+(const CentralSeries& rhs) const;
    CentralSeries operator-(const CentralSeries& rhs) const;
    CentralSeries operator*(const CentralSeries& rhs) const;
    CentralSeries inverse() const;
    CentralSeries pow(const Rational& q) const;

    // sum_k c_k m^(mExp - 2k) O^(2k)
    ncalg::AbstractExpr toAbstract() const;

    friend bool operator==(const CentralSeries&, const CentralSeries&) = default;

private:
    int mExp_;
    std::vector<Rational> coeffs_;
};

// Rational expression in the commuting symbols eps and m.
class EpsilonFunctionSpec {
public:
    enum class Kind { Eps, Mass, Constant, Add, Mul, Pow };

    static EpsilonFunctionSpec eps();
    static EpsilonFunctionSpec mass();
    static EpsilonFunctionSpec constant(const Rational& c);
    EpsilonFunctionSpec pow(const Rational& q) const;

    friend EpsilonFunctionSpec operator+(const EpsilonFunctionSpec& a, const EpsilonFunctionSpec& b);
    friend EpsilonFunctionSpec operator*(const EpsilonFunctionSpec& a, const EpsilonFunctionSpec& b);
    friend EpsilonFunctionSpec operator/(const EpsilonFunctionSpec& a, const EpsilonFunctionSpec& b);

    Kind kind() const;
    const Rational& value() const;
    EpsilonFunctionSpec lhs() const;
    EpsilonFunctionSpec rhs() const;

    std::string str() const;

private:
    struct Node;
    explicit EpsilonFunctionSpec(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

CentralSeries centralExpand(const EpsilonFunctionSpec& spec, int order);

// Registered names: eps, inv_eps, inv_eps_epsm, k13, inv_eps3, inv_eps5,
// inv_sqrt2, fact_plus.
const EpsilonFunctionSpec& epsilonFunction(std::string_view name);
bool isEpsilonFunction(std::string_view name);
std::vector<std::string> epsilonFunctionNames();

} // namespace fwforge::fseries
