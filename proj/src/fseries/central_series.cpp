#include "fwforge/fseries/central_series.hpp"

#include <algorithm>
#include <map>

namespace fwforge::fseries {

namespace {

mpz_class exactRoot(const mpz_class& v, unsigned long r)
{
    if (v < 0) {
        if (r % 2 == 0)
            throw SeriesError("even root of a negative leading coefficient");
        return -exactRoot(-v, r);
    }
    mpz_class out;
    if (mpz_root(out.get_mpz_t(), v.get_mpz_t(), r) == 0)
        throw SeriesError("leading coefficient has no rational root of order " + std::to_string(r));
    return out;
}

Rational rationalPower(const Rational& base, const Rational& q)
{
    mpz_class num = q.get_num();
    unsigned long den = q.get_den().get_ui();
    bool invert = num < 0;
    unsigned long p = mpz_class(abs(num)).get_ui();
    mpz_class a, b;
    mpz_pow_ui(a.get_mpz_t(), base.get_num().get_mpz_t(), p);
    mpz_pow_ui(b.get_mpz_t(), base.get_den().get_mpz_t(), p);
    Rational out{exactRoot(a, den), exactRoot(b, den)};
    out.canonicalize();
    return invert ? Rational(1 / out) : out;
}

} // namespace

CentralSeries::CentralSeries(int mExp, std::vector<Rational> coeffs) : mExp_(mExp), coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        coeffs_.emplace_back(0);
}

CentralSeries CentralSeries::constant(const Rational& c, int mExp, int order)
{
    std::vector<Rational> v(static_cast<std::size_t>(order) + 1, Rational(0));
    v[0] = c;
    return CentralSeries(mExp, std::move(v));
}

CentralSeries CentralSeries::epsilon(int order)
{
    std::vector<Rational> v;
    for (int k = 0; k <= order; ++k)
        v.push_back(binomial(makeRational(1, 2), k));
    return CentralSeries(1, std::move(v));
}

CentralSeries CentralSeries::operator+(const CentralSeries& rhs) const
{
    if (mExp_ != rhs.mExp_) {
        bool lhsZero = std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
        bool rhsZero = std::all_of(rhs.coeffs_.begin(), rhs.coeffs_.end(), [](const Rational& c) { return c == 0; });
        if (lhsZero)
            return rhs;
        if (rhsZero)
            return *this;
        throw SeriesError("sum of series with different mass dimension");
    }
    int k = std::min(order(), rhs.order());
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i)
        v[i] = coeffs_[i] + rhs.coeffs_[i];
    return CentralSeries(mExp_, std::move(v));
}

CentralSeries CentralSeries::operator-(const CentralSeries& rhs) const
{
    std::vector<Rational> neg = rhs.coeffs_;
    for (auto& c : neg)
        c = -c;
    return *this + CentralSeries(rhs.mExp_, std::move(neg));
}

CentralSeries CentralSeries::operator*(const CentralSeries& rhs) const
{
    int k = std::min(order(), rhs.order());
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
    for (int i = 0; i <= k; ++i)
        for (int j = 0; i + j <= k; ++j)
            v[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return CentralSeries(mExp_ + rhs.mExp_, std::move(v));
}

CentralSeries CentralSeries::inverse() const
{
    return pow(-1);
}

CentralSeries CentralSeries::pow(const Rational& q) const
{
    if (coeffs_[0] == 0)
        throw SeriesError("singular series: leading coefficient vanishes at eps = m");
    Rational d = q * mExp_;
    if (d.get_den() != 1)
        throw SeriesError("non-integer mass exponent " + toString(d));
    int K = order();
    Rational c0 = coeffs_[0];
    std::vector<Rational> u(static_cast<std::size_t>(K) + 1, Rational(0));
    for (int i = 1; i <= K; ++i)
        u[i] = coeffs_[i] / c0;
    CentralSeries uSeries(0, u);
    std::vector<Rational> acc(static_cast<std::size_t>(K) + 1, Rational(0));
    CentralSeries power = constant(1, 0, K);
    for (int j = 0; j <= K; ++j) {
        Rational b = binomial(q, j);
        for (int i = 0; i <= K; ++i)
            acc[i] += b * power[i];
        power = power * uSeries;
    }
    Rational scale = rationalPower(c0, q);
    for (auto& c : acc)
        c *= scale;
    return CentralSeries(static_cast<int>(d.get_num().get_si()), std::move(acc));
}

ncalg::AbstractExpr CentralSeries::toAbstract() const
{
    using namespace ncalg;
    AbstractExpr out;
    Word o2 = Word(Letter::O) * Word(Letter::O);
    Word w;
    for (int k = 0; k <= order(); ++k) {
        out.addTerm(Monomial{0, w, mExp_ - 2 * k}, coeffs_[k]);
        if (k < order())
            w = w * o2;
    }
    return out;
}

struct EpsilonFunctionSpec::Node {
    Kind kind;
    Rational value;
    std::shared_ptr<const Node> a, b;
};

EpsilonFunctionSpec EpsilonFunctionSpec::eps()
{
    return EpsilonFunctionSpec(std::make_shared<const Node>(Node{Kind::Eps, 0, nullptr, nullptr}));
}

EpsilonFunctionSpec EpsilonFunctionSpec::mass()
{
    return EpsilonFunctionSpec(std::make_shared<const Node>(Node{Kind::Mass, 0, nullptr, nullptr}));
}

EpsilonFunctionSpec EpsilonFunctionSpec::constant(const Rational& c)
{
    return EpsilonFunctionSpec(std::make_shared<const Node>(Node{Kind::Constant, c, nullptr, nullptr}));
}

EpsilonFunctionSpec EpsilonFunctionSpec::pow(const Rational& q) const
{
    return EpsilonFunctionSpec(std::make_shared<const Node>(Node{Kind::Pow, q, node_, nullptr}));
}

EpsilonFunctionSpec operator+(const EpsilonFunctionSpec& a, const EpsilonFunctionSpec& b)
{
    using N = EpsilonFunctionSpec::Node;
    return EpsilonFunctionSpec(std::make_shared<const N>(N{EpsilonFunctionSpec::Kind::Add, 0, a.node_, b.node_}));
}

EpsilonFunctionSpec operator*(const EpsilonFunctionSpec& a, const EpsilonFunctionSpec& b)
{
    using N = EpsilonFunctionSpec::Node;
    return EpsilonFunctionSpec(std::make_shared<const N>(N{EpsilonFunctionSpec::Kind::Mul, 0, a.node_, b.node_}));
}

EpsilonFunctionSpec operator/(const EpsilonFunctionSpec& a, const EpsilonFunctionSpec& b)
{
    return a * b.pow(-1);
}

EpsilonFunctionSpec::Kind EpsilonFunctionSpec::kind() const { return node_->kind; }
const Rational& EpsilonFunctionSpec::value() const { return node_->value; }
EpsilonFunctionSpec EpsilonFunctionSpec::lhs() const { return EpsilonFunctionSpec(node_->a); }
EpsilonFunctionSpec EpsilonFunctionSpec::rhs() const { return EpsilonFunctionSpec(node_->b); }

std::string EpsilonFunctionSpec::str() const
{
    switch (kind()) {
    case Kind::Eps:
        return "eps";
    case Kind::Mass:
        return "m";
    case Kind::Constant:
        return toString(value());
    case Kind::Add:
        return "(" + lhs().str() + " + " + rhs().str() + ")";
    case Kind::Mul:
        return lhs().str() + "*" + rhs().str();
    case Kind::Pow:
        return "(" + lhs().str() + ")^(" + toString(value()) + ")";
    }
    return {};
}

CentralSeries centralExpand(const EpsilonFunctionSpec& spec, int order)
{
    using K = EpsilonFunctionSpec::Kind;
    switch (spec.kind()) {
    case K::Eps:
        return CentralSeries::epsilon(order);
    case K::Mass:
        return CentralSeries::constant(1, 1, order);
    case K::Constant:
        return CentralSeries::constant(spec.value(), 0, order);
    case K::Add:
        return centralExpand(spec.lhs(), order) + centralExpand(spec.rhs(), order);
    case K::Mul:
        return centralExpand(spec.lhs(), order) * centralExpand(spec.rhs(), order);
    case K::Pow:
        return centralExpand(spec.lhs(), order).pow(spec.value());
    }
    throw SeriesError("malformed epsilon function");
}

namespace {

const std::map<std::string, EpsilonFunctionSpec, std::less<>>& registry()
{
    static const auto table = [] {
        using S = EpsilonFunctionSpec;
        const S e = S::eps();
        const S m = S::mass();
        const S two = S::constant(2);
        const S twoEpsEpsM = two * e * (e + m);
        std::map<std::string, S, std::less<>> t;
        t.emplace("eps", e);
        t.emplace("inv_eps", e.pow(-1));
        t.emplace("inv_eps_epsm", (e * (e + m)).pow(-1));
        t.emplace("k13", (two * e * e + two * e * m + m * m) / (e.pow(4) * (e + m).pow(2)));
        t.emplace("inv_eps3", e.pow(-3));
        t.emplace("inv_eps5", e.pow(-5));
        t.emplace("inv_sqrt2", twoEpsEpsM.pow(makeRational(-1, 2)));
        t.emplace("fact_plus", (e + m) * twoEpsEpsM.pow(makeRational(-1, 2)));
        return t;
    }();
    return table;
}

} // namespace

const EpsilonFunctionSpec& epsilonFunction(std::string_view name)
{
    auto it = registry().find(name);
    if (it == registry().end())
        throw SeriesError("unknown epsilon function '" + std::string(name) + "'");
    return it->second;
}

bool isEpsilonFunction(std::string_view name)
{
    return registry().find(name) != registry().end();
}

std::vector<std::string> epsilonFunctionNames()
{
    std::vector<std::string> out;
    for (const auto& [k, v] : registry())
        out.push_back(k);
    return out;
}

} // namespace fwforge::fseries
