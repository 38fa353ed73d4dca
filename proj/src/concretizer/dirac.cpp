#include "fwforge/concretizer/dirac.hpp"

#include <stdexcept>

namespace fwforge::concretizer {

namespace {

using Matrix2 = std::array<GaussianRational, 4>;

Matrix2 pauli(int k)
{
    const GaussianRational i = GaussianRational::i();
    switch (k) {
    case 0:
        return {1, 0, 0, 1};
    case 1:
        return {0, 1, 1, 0};
    case 2:
        return {0, -i, i, 0};
    default:
        return {1, 0, 0, -1};
    }
}

Matrix4 kron(const Matrix2& a, const Matrix2& b)
{
    Matrix4 out;
    for (int r1 = 0; r1 < 2; ++r1)
        for (int c1 = 0; c1 < 2; ++c1)
            for (int r2 = 0; r2 < 2; ++r2)
                for (int c2 = 0; c2 < 2; ++c2)
                    out[(2 * r1 + r2) * 4 + 2 * c1 + c2] = a[2 * r1 + c1] * b[2 * r2 + c2];
    return out;
}

Matrix4 scale(const GaussianRational& c, const Matrix4& m)
{
    Matrix4 out;
    for (int i = 0; i < 16; ++i)
        out[i] = c * m[i];
    return out;
}

Matrix4 add(const Matrix4& a, const Matrix4& b)
{
    Matrix4 out;
    for (int i = 0; i < 16; ++i)
        out[i] = a[i] + b[i];
    return out;
}

Matrix4 dagger(const Matrix4& m)
{
    Matrix4 out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            out[c * 4 + r] = m[r * 4 + c].conj();
    return out;
}

const std::array<Matrix4, kElementCount>& basisMatrices()
{
    static const std::array<Matrix4, kElementCount> table = [] {
        std::array<Matrix4, kElementCount> t;
        const Matrix4 beta = kron(pauli(3), pauli(0));
        const Matrix4 g5 = scale(-1, kron(pauli(1), pauli(0)));
        t[0] = kron(pauli(0), pauli(0));
        t[1] = beta;
        t[2] = g5;
        t[3] = matmul(beta, g5);
        for (int k = 0; k < 3; ++k) {
            Matrix4 a = kron(pauli(1), pauli(k + 1));
            Matrix4 s = kron(pauli(0), pauli(k + 1));
            t[4 + k] = a;
            t[7 + k] = s;
            t[10 + k] = matmul(beta, a);
            t[13 + k] = matmul(beta, s);
        }
        return t;
    }();
    return table;
}

const std::array<std::array<ElementProduct, kElementCount>, kElementCount>& productTable()
{
    static const auto table = [] {
        std::array<std::array<ElementProduct, kElementCount>, kElementCount> t{};
        for (int a = 0; a < kElementCount; ++a) {
            for (int b = 0; b < kElementCount; ++b) {
                auto c = decompose(matmul(basisMatrices()[a], basisMatrices()[b]));
                int found = -1;
                for (int k = 0; k < kElementCount; ++k) {
                    if (c[k].isZero())
                        continue;
                    if (found >= 0)
                        throw std::logic_error("basis product is not a single element");
                    found = k;
                }
                t[a][b] = ElementProduct{c[found], static_cast<Element>(found)};
            }
        }
        return t;
    }();
    return table;
}

bool equal(const Matrix4& a, const Matrix4& b)
{
    return a == b;
}

} // namespace

Element alpha(int k) { return static_cast<Element>(4 + k); }
Element sigma(int k) { return static_cast<Element>(7 + k); }
Element gammaVec(int k) { return static_cast<Element>(10 + k); }
Element pi(int k) { return static_cast<Element>(13 + k); }

const Matrix4& matrixOf(Element e)
{
    return basisMatrices()[static_cast<int>(e)];
}

const char* label(Element e)
{
    static const char* names[kElementCount] = {"1",       "beta",    "gamma5",  "beta*gamma5", "alpha_x", "alpha_y",
                                               "alpha_z", "Sigma_x", "Sigma_y", "Sigma_z",     "gamma_x", "gamma_y",
                                               "gamma_z", "Pi_x",    "Pi_y",    "Pi_z"};
    return names[static_cast<int>(e)];
}

Matrix4 matmul(const Matrix4& a, const Matrix4& b)
{
    Matrix4 out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            GaussianRational s;
            for (int k = 0; k < 4; ++k)
                s += a[r * 4 + k] * b[k * 4 + c];
            out[r * 4 + c] = s;
        }
    return out;
}

Matrix4 identity4()
{
    return kron(pauli(0), pauli(0));
}

std::array<GaussianRational, kElementCount> decompose(const Matrix4& m)
{
    std::array<GaussianRational, kElementCount> c;
    for (int k = 0; k < kElementCount; ++k) {
        Matrix4 p = matmul(dagger(basisMatrices()[k]), m);
        GaussianRational tr;
        for (int i = 0; i < 4; ++i)
            tr += p[i * 4 + i];
        c[k] = tr * GaussianRational(makeRational(1, 4));
    }
    return c;
}

Matrix4 recompose(const std::array<GaussianRational, kElementCount>& c)
{
    Matrix4 out;
    for (int k = 0; k < kElementCount; ++k)
        out = add(out, scale(c[k], basisMatrices()[k]));
    return out;
}

ElementProduct multiply(Element a, Element b)
{
    return productTable()[static_cast<int>(a)][static_cast<int>(b)];
}

std::vector<MatrixIdentity> gammaIdentityChecks()
{
    const GaussianRational i = GaussianRational::i();
    const Matrix4 one = identity4();
    const Matrix4 zero{};
    const Matrix4& beta = matrixOf(Element::Beta);
    const Matrix4& g5 = matrixOf(Element::Gamma5);
    auto anti = [](const Matrix4& a, const Matrix4& b) { return add(matmul(a, b), matmul(b, a)); };
    auto comm = [](const Matrix4& a, const Matrix4& b) { return add(matmul(a, b), scale(-1, matmul(b, a))); };

    std::vector<MatrixIdentity> out;
    out.push_back({"beta^2 = 1", equal(matmul(beta, beta), one)});
    bool ok = true;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            ok = ok && equal(anti(matrixOf(alpha(a)), matrixOf(alpha(b))), a == b ? scale(2, one) : zero);
    out.push_back({"{alpha_i, alpha_j} = 2 delta_ij", ok});
    ok = true;
    for (int a = 0; a < 3; ++a) {
        int b = (a + 1) % 3, c = (a + 2) % 3;
        ok = ok && equal(matmul(matrixOf(alpha(a)), matrixOf(alpha(b))), scale(i, matrixOf(sigma(c))));
    }
    out.push_back({"alpha_i alpha_j = i eps_ijk Sigma_k for i != j", ok});
    ok = true;
    for (int a = 0; a < 3; ++a)
        ok = ok && equal(anti(beta, matrixOf(alpha(a))), zero);
    out.push_back({"{beta, alpha_k} = 0", ok});
    ok = true;
    for (int a = 0; a < 3; ++a)
        ok = ok && equal(matrixOf(gammaVec(a)), matmul(beta, matrixOf(alpha(a)))) &&
             equal(matrixOf(pi(a)), matmul(beta, matrixOf(sigma(a))));
    out.push_back({"gamma_k = beta alpha_k, Pi_k = beta Sigma_k", ok});
    Matrix4 lower = beta;
    for (int a = 0; a < 3; ++a)
        lower = matmul(lower, scale(-1, matrixOf(gammaVec(a))));
    out.push_back({"gamma5 = i gamma_0 gamma_1 gamma_2 gamma_3 (lower indices)", equal(g5, scale(i, lower))});
    out.push_back({"gamma5^2 = 1", equal(matmul(g5, g5), one)});
    out.push_back({"{gamma5, beta} = 0", equal(anti(g5, beta), zero)});
    ok = true;
    for (int a = 0; a < 3; ++a)
        ok = ok && equal(anti(g5, matrixOf(gammaVec(a))), zero) && equal(comm(g5, matrixOf(alpha(a))), zero) &&
             equal(matmul(g5, matrixOf(alpha(a))), scale(-1, matrixOf(sigma(a))));
    out.push_back({"{gamma5, gamma_k} = 0, [gamma5, alpha_k] = 0, gamma5 alpha_k = -Sigma_k", ok});
    ok = true;
    for (int k = 0; k < kElementCount; ++k) {
        std::array<GaussianRational, kElementCount> c{};
        c[k] = 1;
        ok = ok && equal(recompose(c), basisMatrices()[k]) && decompose(basisMatrices()[k]) == c;
    }
    out.push_back({"basis decompose/recompose round trip", ok});
    ok = true;
    for (int a = 0; a < kElementCount; ++a)
        for (int b = 0; b < kElementCount; ++b) {
            auto p = multiply(static_cast<Element>(a), static_cast<Element>(b));
            ok = ok && equal(scale(p.phase, matrixOf(p.element)), matmul(basisMatrices()[a], basisMatrices()[b]));
        }
    out.push_back({"multiplication table closes on the basis", ok});
    return out;
}

} // namespace fwforge::concretizer
