#include "fwforge/spectra/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fwforge::spectra {

OperandError::OperandError(const std::string& what, double minEigenvalue)
    : std::domain_error(what + ": non-positive operand, minimum eigenvalue " + std::to_string(minEigenvalue)),
      minEigenvalue_(minEigenvalue)
{
}

SpMat sparseIdentity(int n)
{
    SpMat out(n, n);
    out.setIdentity();
    return out;
}

SpMat toSparse(const DenseMat& m)
{
    return m.sparseView(0.0, 0.0);
}

SpMat kron(const SpMat& a, const SpMat& b)
{
    SpMat out(a.rows() * b.rows(), a.cols() * b.cols());
    std::vector<Eigen::Triplet<Complex>> triplets;
    triplets.reserve(static_cast<std::size_t>(a.nonZeros() * b.nonZeros()));
    for (int ka = 0; ka < a.outerSize(); ++ka)
        for (SpMat::InnerIterator ia(a, ka); ia; ++ia)
            for (int kb = 0; kb < b.outerSize(); ++kb)
                for (SpMat::InnerIterator ib(b, kb); ib; ++ib)
                    triplets.emplace_back(static_cast<int>(ia.row() * b.rows() + ib.row()),
                                          static_cast<int>(ia.col() * b.cols() + ib.col()), ia.value() * ib.value());
    out.setFromTriplets(triplets.begin(), triplets.end());
    return out;
}

SpMat rho(int k)
{
    const Complex i(0, 1);
    DenseMat m(2, 2);
    switch (k) {
    case 0:
        m << 1, 0, 0, 1;
        break;
    case 1:
        m << 0, 1, 1, 0;
        break;
    case 2:
        m << 0, -i, i, 0;
        break;
    default:
        m << 1, 0, 0, -1;
    }
    return toSparse(m);
}

SpMat spin(int twiceSpin, int axis)
{
    const Complex i(0, 1);
    if (twiceSpin == 1) {
        return 0.5 * rho(axis + 1);
    }
    if (twiceSpin != 2)
        throw std::invalid_argument("spin matrices for s = 1/2 and 1 only");
    DenseMat plus = DenseMat::Zero(3, 3);
    plus(0, 1) = plus(1, 2) = std::sqrt(2.0);
    DenseMat minus = plus.adjoint();
    DenseMat m;
    switch (axis) {
    case 0:
        m = (plus + minus) / 2.0;
        break;
    case 1:
        m = (plus - minus) / (2.0 * i);
        break;
    default:
        m = DenseMat::Zero(3, 3);
        m(0, 0) = 1;
        m(2, 2) = -1;
    }
    return toSparse(m);
}

LandauOperators::LandauOperators(int levels, double charge, double hbar, double field) : levels_(levels)
{
    const int n = levels + 2;
    SpMat a(n, n);
    std::vector<Eigen::Triplet<Complex>> t;
    for (int k = 1; k < n; ++k)
        t.emplace_back(k - 1, k, std::sqrt(static_cast<double>(k)));
    a.setFromTriplets(t.begin(), t.end());
    SpMat ad = a.adjoint();
    const double scale = std::sqrt(2.0 * std::abs(charge) * hbar * field);
    SpMat plus = charge >= 0 ? SpMat(scale * a) : SpMat(scale * ad);
    SpMat minus = plus.adjoint();
    px_ = 0.5 * (plus + minus);
    py_ = Complex(0, -0.5) * (plus - minus);
}

SpMat LandauOperators::linear(int axis) const
{
    const SpMat& p = axis == 0 ? px_ : py_;
    return p.topLeftCorner(levels_, levels_);
}

SpMat LandauOperators::quadratic(int axisA, int axisB) const
{
    const SpMat& a = axisA == 0 ? px_ : py_;
    const SpMat& b = axisB == 0 ? px_ : py_;
    SpMat prod = a * b;
    return prod.topLeftCorner(levels_, levels_);
}

SpMat LandauOperators::piSquared() const
{
    return quadratic(0, 0) + quadratic(1, 1);
}

std::vector<std::vector<int>> connectedBlocks(const SpMat& a)
{
    const int n = static_cast<int>(a.rows());
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (int k = 0; k < a.outerSize(); ++k)
        for (SpMat::InnerIterator it(a, k); it; ++it)
            if (it.value() != Complex(0))
                parent[find(static_cast<int>(it.row()))] = find(static_cast<int>(it.col()));
    std::vector<std::vector<int>> blocks;
    std::vector<int> slot(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        if (slot[r] < 0) {
            slot[r] = static_cast<int>(blocks.size());
            blocks.emplace_back();
        }
        blocks[slot[r]].push_back(i);
    }
    return blocks;
}

DenseMat denseBlock(const SpMat& a, const std::vector<int>& idx)
{
    const int n = static_cast<int>(idx.size());
    std::vector<int> local(static_cast<std::size_t>(a.rows()), -1);
    for (int i = 0; i < n; ++i)
        local[idx[i]] = i;
    DenseMat out = DenseMat::Zero(n, n);
    for (int c : idx)
        for (SpMat::InnerIterator it(a, c); it; ++it)
            if (local[it.row()] >= 0)
                out(local[it.row()], local[c]) = it.value();
    return out;
}

SpMat hermitianFunction(const SpMat& a, const std::function<double(double)>& f, bool requirePositive,
                        const std::string& what)
{
    return hermitianFunction(a, f, requirePositive ? Domain::Positive : Domain::Any, what);
}

SpMat hermitianFunction(const SpMat& a, const std::function<double(double)>& f, Domain domain, const std::string& what)
{
    SpMat sym = 0.5 * (a + SpMat(a.adjoint()));
    std::vector<Eigen::Triplet<Complex>> t;
    double minEig = std::numeric_limits<double>::infinity();
    for (const auto& idx : connectedBlocks(sym)) {
        Eigen::SelfAdjointEigenSolver<DenseMat> es(denseBlock(sym, idx));
        Eigen::VectorXd w = es.eigenvalues();
        if (domain == Domain::NonNegative) {
            // Round-off just below an exact zero eigenvalue.
            const double floor = -1e-12 * std::max(1.0, w.cwiseAbs().maxCoeff());
            for (int k = 0; k < w.size(); ++k)
                if (w(k) < 0 && w(k) >= floor)
                    w(k) = 0;
        }
        minEig = std::min(minEig, w.minCoeff());
        Eigen::VectorXd fw(w.size());
        for (int k = 0; k < w.size(); ++k)
            fw(k) = f(w(k));
        const DenseMat& v = es.eigenvectors();
        DenseMat block = v * fw.asDiagonal() * v.adjoint();
        for (int r = 0; r < block.rows(); ++r)
            for (int c = 0; c < block.cols(); ++c)
                if (block(r, c) != Complex(0))
                    t.emplace_back(idx[r], idx[c], block(r, c));
    }
    if ((domain == Domain::Positive && !(minEig > 0)) || (domain == Domain::NonNegative && minEig < 0))
        throw OperandError(what, minEig);
    SpMat out(a.rows(), a.cols());
    out.setFromTriplets(t.begin(), t.end());
    return out;
}

double maxAbs(const SpMat& a)
{
    double m = 0;
    for (int k = 0; k < a.outerSize(); ++k)
        for (SpMat::InnerIterator it(a, k); it; ++it)
            m = std::max(m, std::abs(it.value()));
    return m;
}

double hermiticityDefect(const SpMat& a)
{
    return maxAbs(a - SpMat(a.adjoint()));
}

} // namespace fwforge::spectra
