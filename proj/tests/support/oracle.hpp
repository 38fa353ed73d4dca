#pragma once

#include "fwforge/ncalg/abstract_expr.hpp"
#include "fwforge/ncalg/bracket_expr.hpp"

#include <Eigen/Dense>

#include <complex>
#include <random>

namespace fwforge::testing {

using ncalg::AbstractExpr;
using ncalg::BracketExpr;
using ncalg::Letter;
using ncalg::Monomial;
using ncalg::Word;

inline Rational randomRational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
    long n = num(rng);
    while (n == 0)
        n = num(rng);
    return makeRational(n, den(rng));
}

inline Word randomWord(std::mt19937_64& rng, int maxLen)
{
    std::uniform_int_distribution<int> len(0, maxLen), bit(0, 1);
    Word w;
    for (int i = len(rng); i > 0; --i)
        w = w * Word(bit(rng) ? Letter::O : Letter::E);
    return w;
}

inline AbstractExpr randomExpr(std::mt19937_64& rng, int maxTerms = 4, int maxLen = 4)
{
    std::uniform_int_distribution<int> terms(1, maxTerms), bit(0, 1), mexp(-2, 2);
    AbstractExpr a;
    for (int i = terms(rng); i > 0; --i)
        a.addTerm({bit(rng), randomWord(rng, maxLen), mexp(rng)}, randomRational(rng));
    return a;
}

// Bracket monomial of definite parity with at most `depth` nested levels.
inline BracketExpr randomMonomial(std::mt19937_64& rng, int depth)
{
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 6);
    switch (pick(rng)) {
    case 0:
        return ncalg::E;
    case 1:
        return ncalg::O;
    case 2:
        return ncalg::comm(randomMonomial(rng, depth - 1), randomMonomial(rng, depth - 1));
    case 3:
        return ncalg::acomm(randomMonomial(rng, depth - 1), randomMonomial(rng, depth - 1));
    case 4:
        return randomMonomial(rng, depth - 1) * randomMonomial(rng, depth - 1);
    case 5:
        return ncalg::Beta * randomMonomial(rng, depth - 1);
    default:
        return ncalg::pow(randomMonomial(rng, depth - 1), 2);
    }
}

using CMatrix = Eigen::MatrixXcd;

// Random stand-ins for beta, an even E and an odd O of size 2k: beta is
// diag(1, -1), E is block diagonal and O block off-diagonal, both Hermitian.
struct MatrixModel {
    CMatrix beta, even, odd;
    double m = 1.0;
};

inline MatrixModel randomMatrixModel(std::mt19937_64& rng, int k)
{
    std::normal_distribution<double> gauss;
    auto randomBlock = [&] {
        CMatrix a(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                a(i, j) = {gauss(rng), gauss(rng)};
        return a;
    };
    const int n = 2 * k;
    MatrixModel out;
    out.beta = CMatrix::Identity(n, n);
    out.beta.bottomRightCorner(k, k) *= -1.0;
    out.even = CMatrix::Zero(n, n);
    CMatrix a = randomBlock(), b = randomBlock();
    out.even.topLeftCorner(k, k) = (a + a.adjoint()) / 2.0;
    out.even.bottomRightCorner(k, k) = (b + b.adjoint()) / 2.0;
    out.odd = CMatrix::Zero(n, n);
    CMatrix c = randomBlock();
    out.odd.topRightCorner(k, k) = c;
    out.odd.bottomLeftCorner(k, k) = c.adjoint();
    out.even /= out.even.norm() / std::sqrt(double(n));
    out.odd /= out.odd.norm() / std::sqrt(double(n));
    return out;
}

inline CMatrix evaluateExpr(const AbstractExpr& a, const MatrixModel& mm)
{
    const Eigen::Index n = mm.beta.rows();
    CMatrix out = CMatrix::Zero(n, n);
    for (const auto& [mono, c] : a.terms()) {
        CMatrix w = mono.beta ? mm.beta : CMatrix::Identity(n, n);
        for (int i = 0; i < mono.word.size(); ++i)
            w = w * (mono.word.at(i) == Letter::E ? mm.even : mm.odd);
        out += (c.get_d() * std::pow(mm.m, mono.mExp)) * w;
    }
    return out;
}

inline CMatrix hermitianPower(const CMatrix& a, double q)
{
    Eigen::SelfAdjointEigenSolver<CMatrix> es((a + a.adjoint()) / 2.0);
    Eigen::VectorXd w = es.eigenvalues().array().pow(q);
    return es.eigenvectors() * w.asDiagonal() * es.eigenvectors().adjoint();
}

// Exact Eriksen transform of beta m + E + O computed with dense linear algebra.
inline CMatrix numericEriksen(const MatrixModel& mm)
{
    const Eigen::Index n = mm.beta.rows();
    CMatrix h = mm.m * mm.beta + mm.even + mm.odd;
    CMatrix lambda = h * hermitianPower(h * h, -0.5);
    CMatrix bl = mm.beta * lambda;
    CMatrix denom = hermitianPower(2.0 * CMatrix::Identity(n, n) + bl + lambda * mm.beta, -0.5);
    CMatrix u = (CMatrix::Identity(n, n) + bl) * denom;
    return u * h * u.adjoint();
}

} // namespace fwforge::testing
