#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fwforge::spectra {

using Complex = std::complex<double>;
using SpMat = Eigen::SparseMatrix<Complex>;
using DenseMat = Eigen::MatrixXcd;

class OperandError : public std::domain_error {
public:
    OperandError(const std::string& what, double minEigenvalue);
    double minEigenvalue() const { return minEigenvalue_; }

private:
    double minEigenvalue_;
};

SpMat sparseIdentity(int n);
SpMat toSparse(const DenseMat& m);
SpMat kron(const SpMat& a, const SpMat& b);

// Rho (block) and spin matrices. Spin 1 uses the spherical basis with
// S_z = diag(1, 0, -1); spin 1/2 the Pauli matrices.
SpMat rho(int k);
SpMat spin(int twiceSpin, int axis);

// Transverse kinetic momenta on N Landau levels. With pi_+ = pi_x + i pi_y,
// [pi_x, pi_y] = i e hbar B fixes pi_+ = sqrt(2|e| hbar B) a for e >= 0 and
// its adjoint for e < 0. Quadratic forms are multiplied on N + 2 levels and
// then cut to N, so pi_x^2 + pi_y^2 = (2n + 1)|e| hbar B holds on every kept
// level.
class LandauOperators {
public:
    LandauOperators(int levels, double charge, double hbar, double field);

    int levels() const { return levels_; }
    SpMat linear(int axis) const;
    SpMat quadratic(int axisA, int axisB) const;
    SpMat piSquared() const;

private:
    int levels_;
    SpMat px_, py_;
};

// f(A) for Hermitian A via eigendecomposition of each connected block.
// Positive requires every eigenvalue > 0; NonNegative accepts exact zeros
// (round-off just below zero is clamped) and rejects anything negative.
enum class Domain { Any, NonNegative, Positive };
SpMat hermitianFunction(const SpMat& a, const std::function<double(double)>& f, Domain domain,
                        const std::string& what = "operand");
SpMat hermitianFunction(const SpMat& a, const std::function<double(double)>& f, bool requirePositive,
                        const std::string& what = "operand");

// Index sets of the connected components of the nonzero pattern of a + a^T.
std::vector<std::vector<int>> connectedBlocks(const SpMat& a);
DenseMat denseBlock(const SpMat& a, const std::vector<int>& idx);

double maxAbs(const SpMat& a);
double hermiticityDefect(const SpMat& a);

} // namespace fwforge::spectra
