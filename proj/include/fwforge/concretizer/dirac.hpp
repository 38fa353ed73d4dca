#pragma once

#include "fwforge/concretizer/gaussian.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace fwforge::concretizer {

// Standard (Dirac) representation written as rho_a (x) sigma_b:
//   beta = rho3, alpha_k = rho1 sigma_k, Sigma_k = sigma_k,
//   gamma_k = beta alpha_k, Pi_k = beta Sigma_k,
//   gamma5 = i gamma_0 gamma_1 gamma_2 gamma_3 with lower indices = -rho1.
enum class Element : std::uint8_t {
    One,
    Beta,
    Gamma5,
    BetaGamma5,
    AlphaX,
    AlphaY,
    AlphaZ,
    SigmaX,
    SigmaY,
    SigmaZ,
    GammaX,
    GammaY,
    GammaZ,
    PiX,
    PiY,
    PiZ,
};

constexpr int kElementCount = 16;

using Matrix4 = std::array<GaussianRational, 16>;  // row-major

Element alpha(int k);
Element sigma(int k);
Element gammaVec(int k);
Element pi(int k);

const Matrix4& matrixOf(Element e);
const char* label(Element e);

Matrix4 matmul(const Matrix4& a, const Matrix4& b);
Matrix4 identity4();

// Coefficients c_k with M = sum_k c_k B_k.
std::array<GaussianRational, kElementCount> decompose(const Matrix4& m);
Matrix4 recompose(const std::array<GaussianRational, kElementCount>& c);

struct ElementProduct {
    GaussianRational phase;
    Element element;
};

// Table lookup of B_a B_b = phase * B_c.
ElementProduct multiply(Element a, Element b);

struct MatrixIdentity {
    std::string name;
    bool passed;
};

// Explicit-matrix checks of the relations the concrete derivations rely on.
std::vector<MatrixIdentity> gammaIdentityChecks();

} // namespace fwforge::concretizer
