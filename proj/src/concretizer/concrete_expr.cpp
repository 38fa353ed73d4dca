#include "fwforge/concretizer/concrete_expr.hpp"

#include <stdexcept>
#include <utility>

namespace fwforge::concretizer {

namespace {

constexpr int kHbar = static_cast<int>(Symbol::hbar);
constexpr int kCharge = static_cast<int>(Symbol::e);

int derivativeOrder(const Factor& f)
{
    return f.d[0] + f.d[1] + f.d[2];
}

// eps_{abk} for a != b: returns (k, sign).
std::pair<int, int> levi(int a, int b)
{
    int k = 3 - a - b;
    return {k, b == (a + 1) % 3 ? 1 : -1};
}

} // namespace

const char* symbolName(Symbol s)
{
    static const char* names[kSymbolCount] = {"e", "hbar", "mu", "g", "m", "Ex", "Ey", "Ez", "Bx", "By", "Bz"};
    return names[static_cast<int>(s)];
}

Symbol fieldE(int axis)
{
    return static_cast<Symbol>(static_cast<int>(Symbol::Ex) + axis);
}

Symbol fieldB(int axis)
{
    return static_cast<Symbol>(static_cast<int>(Symbol::Bx) + axis);
}

void ConcreteExpr::addTerm(const TermKey& key, const GaussianRational& c)
{
    if (c.isZero())
        return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero())
            terms_.erase(it);
    }
}

ConcreteExpr& ConcreteExpr::operator+=(const ConcreteExpr& rhs)
{
    for (const auto& [k, c] : rhs.terms_)
        addTerm(k, c);
    return *this;
}

ConcreteExpr& ConcreteExpr::operator-=(const ConcreteExpr& rhs)
{
    for (const auto& [k, c] : rhs.terms_)
        addTerm(k, -c);
    return *this;
}

ConcreteExpr ConcreteExpr::scaled(const GaussianRational& c) const
{
    ConcreteExpr out;
    if (c.isZero())
        return out;
    for (const auto& [k, v] : terms_)
        out.terms_.emplace(k, v * c);
    return out;
}

ConcreteExpr ConcreteExpr::hbarSlice(int maxPower, bool above) const
{
    ConcreteExpr out;
    for (const auto& [k, c] : terms_)
        if ((k.hbarPower() > maxPower) == above)
            out.terms_.emplace(k, c);
    return out;
}

ConcreteExpr ConcreteExpr::withoutSymbol(Symbol s) const
{
    ConcreteExpr out;
    for (const auto& [k, c] : terms_)
        if (k.powers[static_cast<int>(s)] <= 0)
            out.terms_.emplace(k, c);
    return out;
}

ConcreteExpr operator+(ConcreteExpr a, const ConcreteExpr& b)
{
    return a += b;
}

ConcreteExpr operator-(ConcreteExpr a, const ConcreteExpr& b)
{
    return a -= b;
}

ConcreteExpr operator-(const ConcreteExpr& a)
{
    return a.scaled(-1);
}

ConcreteExpr operator*(const GaussianRational& c, const ConcreteExpr& a)
{
    return a.scaled(c);
}

std::string formatTerm(const TermKey& key, const GaussianRational& c, Mode mode)
{
    bool bare = key.matrix == Element::One && key.word.empty();
    for (int p : key.powers)
        bare = bare && p == 0;
    std::string out = c.str();
    if (!bare && c == GaussianRational(1))
        out = "";
    else if (!bare && c == GaussianRational(-1))
        out = "-";
    for (int s = 0; s < kSymbolCount; ++s) {
        int p = key.powers[s];
        if (p == 0)
            continue;
        if (!out.empty() && out != "-")
            out += " ";
        out += symbolName(static_cast<Symbol>(s));
        if (p != 1)
            out += "^" + std::to_string(p);
    }
    auto sep = [&out] {
        if (!out.empty() && out != "-")
            out += " ";
    };
    if (key.matrix != Element::One) {
        sep();
        out += label(key.matrix);
    }
    static const char axes[] = "xyz";
    for (const Factor& f : key.word) {
        sep();
        if (f.momentum) {
            out += mode == Mode::UniformField ? "pi_" : "p_";
            out += axes[f.axis];
            continue;
        }
        out += "Phi";
        if (derivativeOrder(f) > 0) {
            out += "_";
            for (int k = 0; k < 3; ++k)
                out += std::string(static_cast<std::size_t>(f.d[k]), axes[k]);
        }
    }
    return out;
}

std::string formatExpr(const ConcreteExpr& x, Mode mode)
{
    if (x.isZero())
        return "0";
    std::string out;
    for (const auto& [k, c] : x.terms()) {
        bool negative = (c.im == 0 && c.re < 0) || (c.re == 0 && c.im < 0);
        if (out.empty())
            out = formatTerm(k, c, mode);
        else if (negative)
            out += " - " + formatTerm(k, -c, mode);
        else
            out += " + " + formatTerm(k, c, mode);
    }
    return out;
}

ConcreteAlgebra::ConcreteAlgebra(Mode mode, std::optional<int> hbarMax, bool constantPotential)
    : mode_(mode), hbarMax_(hbarMax), constantPotential_(constantPotential)
{
}

bool ConcreteAlgebra::admits(const TermKey& key) const
{
    return !hbarMax_ || key.hbarPower() <= *hbarMax_;
}

ConcreteExpr ConcreteAlgebra::rawTerm(const GaussianRational& c, Element el, std::vector<Factor> word,
                                      std::array<int, kSymbolCount> powers)
{
    ConcreteExpr out;
    out.addTerm(TermKey{el, powers, std::move(word)}, c);
    return out;
}

ConcreteExpr ConcreteAlgebra::one() const
{
    return scalar(1);
}

ConcreteExpr ConcreteAlgebra::scalar(const GaussianRational& c) const
{
    return rawTerm(c, Element::One, {});
}

ConcreteExpr ConcreteAlgebra::symbol(Symbol s, int power) const
{
    std::array<int, kSymbolCount> p{};
    p[static_cast<int>(s)] = power;
    return normalOrder(rawTerm(1, Element::One, {}, p));
}

ConcreteExpr ConcreteAlgebra::matrix(Element el) const
{
    return rawTerm(1, el, {});
}

ConcreteExpr ConcreteAlgebra::phi(std::array<int, 3> d) const
{
    return normalOrder(rawTerm(1, Element::One, {Factor{false, 0, d}}));
}

ConcreteExpr ConcreteAlgebra::momentum(int axis) const
{
    return rawTerm(1, Element::One, {Factor{true, axis, {}}});
}

ConcreteExpr ConcreteAlgebra::electric(int axis) const
{
    if (mode_ == Mode::UniformField)
        return symbol(fieldE(axis));
    std::array<int, 3> d{};
    d[axis] = 1;
    return -phi(d);
}

void ConcreteAlgebra::accumulate(TermKey key, GaussianRational c, ConcreteExpr& out, bool* hbarSwap) const
{
    std::vector<std::pair<TermKey, GaussianRational>> work;
    work.emplace_back(std::move(key), std::move(c));
    while (!work.empty()) {
        auto [k, coeff] = std::move(work.back());
        work.pop_back();
        if (!admits(k) || coeff.isZero())
            continue;

        bool vanished = false;
        for (std::size_t i = 0; i < k.word.size() && !vanished;) {
            const Factor& f = k.word[i];
            int order = f.momentum ? 0 : derivativeOrder(f);
            if (order == 0) {
                ++i;
                continue;
            }
            if (constantPotential_ || (mode_ == Mode::UniformField && order > 1)) {
                vanished = true;
            } else if (mode_ == Mode::UniformField) {
                int axis = f.d[0] ? 0 : f.d[1] ? 1 : 2;
                ++k.powers[static_cast<int>(fieldE(axis))];
                coeff = -coeff;
                k.word.erase(k.word.begin() + static_cast<std::ptrdiff_t>(i));
            } else {
                ++i;
            }
        }
        if (vanished)
            continue;

        std::size_t pos = k.word.size();
        for (std::size_t i = 0; i + 1 < k.word.size(); ++i) {
            if (k.word[i + 1] < k.word[i]) {
                pos = i;
                break;
            }
        }
        if (pos == k.word.size()) {
            out.addTerm(k, coeff);
            continue;
        }

        Factor a = k.word[pos];
        Factor b = k.word[pos + 1];
        TermKey swapped = k;
        std::swap(swapped.word[pos], swapped.word[pos + 1]);
        work.emplace_back(std::move(swapped), coeff);

        if (a.momentum && !b.momentum) {
            // p_a f = f p_a - i hbar (d_a f)
            TermKey rest = k;
            Factor df = b;
            ++df.d[a.axis];
            rest.word[pos] = df;
            rest.word.erase(rest.word.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
            ++rest.powers[kHbar];
            if (hbarSwap)
                *hbarSwap = true;
            work.emplace_back(std::move(rest), coeff * GaussianRational(0, -1));
        } else if (a.momentum && b.momentum && mode_ == Mode::UniformField) {
            // pi_a pi_b = pi_b pi_a + i e hbar eps_abk B_k
            auto [axis, sign] = levi(a.axis, b.axis);
            TermKey rest = k;
            rest.word.erase(rest.word.begin() + static_cast<std::ptrdiff_t>(pos),
                            rest.word.begin() + static_cast<std::ptrdiff_t>(pos) + 2);
            ++rest.powers[kHbar];
            ++rest.powers[kCharge];
            ++rest.powers[static_cast<int>(fieldB(axis))];
            if (hbarSwap)
                *hbarSwap = true;
            work.emplace_back(std::move(rest), coeff * GaussianRational(0, sign));
        }
    }
}

ConcreteExpr ConcreteAlgebra::normalOrder(const ConcreteExpr& x) const
{
    ConcreteExpr out;
    for (const auto& [k, c] : x.terms())
        accumulate(k, c, out, nullptr);
    return out;
}

ConcreteExpr ConcreteAlgebra::normalOrder(const ConcreteExpr& x, bool& swappedWithHbar) const
{
    swappedWithHbar = false;
    ConcreteExpr out;
    for (const auto& [k, c] : x.terms())
        accumulate(k, c, out, &swappedWithHbar);
    return out;
}

ConcreteExpr ConcreteAlgebra::multiply(const ConcreteExpr& a, const ConcreteExpr& b) const
{
    ConcreteExpr out;
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            ElementProduct prod = concretizer::multiply(ka.matrix, kb.matrix);
            TermKey k;
            k.matrix = prod.element;
            for (int s = 0; s < kSymbolCount; ++s)
                k.powers[s] = ka.powers[s] + kb.powers[s];
            k.word = ka.word;
            k.word.insert(k.word.end(), kb.word.begin(), kb.word.end());
            accumulate(std::move(k), ca * cb * prod.phase, out, nullptr);
        }
    }
    return out;
}

ConcreteExpr ConcreteAlgebra::commutator(const ConcreteExpr& a, const ConcreteExpr& b) const
{
    return multiply(a, b) - multiply(b, a);
}

ConcreteExpr ConcreteAlgebra::anticommutator(const ConcreteExpr& a, const ConcreteExpr& b) const
{
    return multiply(a, b) + multiply(b, a);
}

ConcreteExpr ConcreteAlgebra::power(const ConcreteExpr& a, int n) const
{
    if (n < 0)
        throw std::invalid_argument("negative operator power");
    ConcreteExpr out = one();
    for (int i = 0; i < n; ++i)
        out = multiply(out, a);
    return out;
}

ConcreteExpr dot(const ConcreteAlgebra& alg, const std::array<ConcreteExpr, 3>& a, const std::array<ConcreteExpr, 3>& b)
{
    ConcreteExpr out;
    for (int k = 0; k < 3; ++k)
        out += alg.multiply(a[k], b[k]);
    return out;
}

ConcreteExpr sigmaCross(const ConcreteAlgebra& alg, const std::array<ConcreteExpr, 3>& a,
                        const std::array<ConcreteExpr, 3>& b)
{
    ConcreteExpr out;
    for (int k = 0; k < 3; ++k) {
        int i = (k + 1) % 3, j = (k + 2) % 3;
        ConcreteExpr cross = alg.multiply(a[i], b[j]) - alg.multiply(a[j], b[i]);
        out += alg.multiply(alg.matrix(sigma(k)), cross);
    }
    return out;
}

ConcreteExpr matrixDot(const ConcreteAlgebra& alg, Element (*vec)(int), const std::array<ConcreteExpr, 3>& v)
{
    ConcreteExpr out;
    for (int k = 0; k < 3; ++k)
        out += alg.multiply(alg.matrix(vec(k)), v[k]);
    return out;
}

} // namespace fwforge::concretizer
