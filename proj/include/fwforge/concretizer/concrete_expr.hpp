#pragma once

#include "fwforge/concretizer/dirac.hpp"
#include "fwforge/concretizer/gaussian.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fwforge::concretizer {

// Central scalars. Ex..Bz are the constant field components of uniform mode.
enum class Symbol : std::uint8_t { e, hbar, mu, g, m, Ex, Ey, Ez, Bx, By, Bz };
constexpr int kSymbolCount = 11;

const char* symbolName(Symbol s);
Symbol fieldE(int axis);
Symbol fieldB(int axis);

enum class Mode { Electrostatic, UniformField };

// Either the potential Phi with derivative multi-index d, or a momentum
// component p_axis (pi_axis in uniform mode).
struct Factor {
    bool momentum = false;
    int axis = 0;
    std::array<int, 3> d{};

    auto operator<=>(const Factor&) const = default;
};

struct TermKey {
    Element matrix = Element::One;
    std::array<int, kSymbolCount> powers{};
    std::vector<Factor> word;

    int hbarPower() const { return powers[static_cast<int>(Symbol::hbar)]; }
    auto operator<=>(const TermKey&) const = default;
};

class ConcreteExpr {
public:
    using Terms = std::map<TermKey, GaussianRational>;

    const Terms& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void addTerm(const TermKey& key, const GaussianRational& c);
    ConcreteExpr& operator+=(const ConcreteExpr& rhs);
    ConcreteExpr& operator-=(const ConcreteExpr& rhs);
    ConcreteExpr scaled(const GaussianRational& c) const;

    // Terms with hbar power <= maxPower (or > maxPower when above is set).
    ConcreteExpr hbarSlice(int maxPower, bool above = false) const;
    // Drops every term carrying a positive power of s.
    ConcreteExpr withoutSymbol(Symbol s) const;

    friend bool operator==(const ConcreteExpr&, const ConcreteExpr&) = default;

private:
    Terms terms_;
};

ConcreteExpr operator+(ConcreteExpr a, const ConcreteExpr& b);
ConcreteExpr operator-(ConcreteExpr a, const ConcreteExpr& b);
ConcreteExpr operator-(const ConcreteExpr& a);
ConcreteExpr operator*(const GaussianRational& c, const ConcreteExpr& a);

std::string formatTerm(const TermKey& key, const GaussianRational& c, Mode mode);
std::string formatExpr(const ConcreteExpr& x, Mode mode);

// Products are normal-ordered as they are formed: fields left of momenta,
// each group sorted. Swapping p_i past a field emits -i hbar (d_i field);
// in uniform mode pi_i pi_j = pi_j pi_i + i e hbar eps_ijk B_k, d_k Phi = -E_k
// and higher derivatives of Phi vanish. Every swap that is not a plain
// transposition raises the hbar power by one, so truncating at hbarMax after
// each product is exact.
class ConcreteAlgebra {
public:
    explicit ConcreteAlgebra(Mode mode, std::optional<int> hbarMax = std::nullopt, bool constantPotential = false);

    Mode mode() const { return mode_; }
    std::optional<int> hbarMax() const { return hbarMax_; }
    bool constantPotential() const { return constantPotential_; }

    ConcreteExpr one() const;
    ConcreteExpr scalar(const GaussianRational& c) const;
    ConcreteExpr symbol(Symbol s, int power = 1) const;
    ConcreteExpr matrix(Element el) const;
    ConcreteExpr phi(std::array<int, 3> d = {}) const;
    ConcreteExpr momentum(int axis) const;
    // Electric field component: -d_k Phi (electrostatic) or the symbol E_k.
    ConcreteExpr electric(int axis) const;

    ConcreteExpr multiply(const ConcreteExpr& a, const ConcreteExpr& b) const;
    ConcreteExpr commutator(const ConcreteExpr& a, const ConcreteExpr& b) const;
    ConcreteExpr anticommutator(const ConcreteExpr& a, const ConcreteExpr& b) const;
    ConcreteExpr power(const ConcreteExpr& a, int n) const;

    // Rewrites arbitrary (possibly unordered) terms into canonical form.
    ConcreteExpr normalOrder(const ConcreteExpr& x) const;
    // Same, also reporting whether any rewrite emitted an hbar.
    ConcreteExpr normalOrder(const ConcreteExpr& x, bool& swappedWithHbar) const;

    // Builds a term directly, without ordering; for tests of normalOrder.
    static ConcreteExpr rawTerm(const GaussianRational& c, Element el, std::vector<Factor> word,
                                std::array<int, kSymbolCount> powers = {});

private:
    void accumulate(TermKey key, GaussianRational c, ConcreteExpr& out, bool* hbarSwap) const;
    bool admits(const TermKey& key) const;

    Mode mode_;
    std::optional<int> hbarMax_;
    bool constantPotential_;
};

ConcreteExpr dot(const ConcreteAlgebra& alg, const std::array<ConcreteExpr, 3>& a, const std::array<ConcreteExpr, 3>& b);
// Sigma . (a x b) with a written left of b.
ConcreteExpr sigmaCross(const ConcreteAlgebra& alg, const std::array<ConcreteExpr, 3>& a,
                        const std::array<ConcreteExpr, 3>& b);
// sum_k M_k v_k for a vector of basis matrices (alpha, gamma, Pi, ...).
ConcreteExpr matrixDot(const ConcreteAlgebra& alg, Element (*vec)(int), const std::array<ConcreteExpr, 3>& v);

} // namespace fwforge::concretizer
