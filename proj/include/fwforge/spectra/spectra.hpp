#pragma once

#include "fwforge/spectra/operators.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace fwforge::spectra {

enum class Particle { Spin0, Spin12, Spin1 };
enum class Representation { Original, FW, FWEqprf };

const char* toString(Particle p);
const char* toString(Representation r);
Particle parseParticle(const std::string& s);
Representation parseRepresentation(const std::string& s);

class ModelError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Field along z, P_z = 0.
struct SpectralModel {
    Particle particle = Particle::Spin0;
    Representation representation = Representation::FW;
    double m = 1.0;
    double hbar = 1.0;
    double charge = 1.0;
    double field = 0.1;
    double g = 2.0;
    int levels = 64;

    int internalDim() const;  // 1, 2 or 3
    int dim() const { return 2 * levels * internalDim(); }
    // Landau levels at the top of the basis that mark truncation artifacts.
    int edgeLevels() const { return particle == Particle::Spin1 ? 4 : 2; }
};

void validate(const SpectralModel& model);

// Basis index r * (N d) + n d + s for rho index r, level n, internal state s.
SpMat buildModelMatrix(const SpectralModel& model);

struct Eigenpair {
    Complex value;
    double edgeWeight = 0;   // weight on the top edgeLevels() levels
    double meanLevel = 0;    // <n>
    double meanSpin = 0;     // <S_z> (in units of hbar)
    bool interior = false;
};

struct Diagonalization {
    std::vector<Eigenpair> pairs;  // sorted by real part
    double hermiticityDefect = 0;
    bool hermitian = true;
    std::size_t blocks = 0;
    std::size_t largestBlock = 0;
};

constexpr double kInteriorThreshold = 1e-8;

// Diagonalizes each connected block: self-adjoint solver for Hermitian
// matrices, general complex solver otherwise.
Diagonalization diagonalize(const SpMat& h, const SpectralModel& model);

// Positive-branch closed forms.
double scalarLevel(const SpectralModel& m, int n);
double spinHalfLevel(const SpectralModel& m, int n, int lambda);
double spinOneLevel(const SpectralModel& m, int n, int lambda);  // linear AMM term included

struct MatchedEigenvalue {
    double value = 0;
    double imagAbs = 0;
    bool interior = false;
    int matchedN = -1;
    int matchedLambda = 0;
    int matchedSign = 0;
    double residual = 0;       // |value - closed form|
    double relResidual = 0;    // residual / max(|closed form|, m)
};

struct SpectralReport {
    SpectralModel model;
    std::vector<MatchedEigenvalue> eigenvalues;
    double maxImagAbs = 0;       // over interior eigenpairs
    double maxResidual = 0;      // over interior eigenpairs
    double maxRelResidual = 0;
    std::size_t interiorCount = 0;
    double hermiticityDefect = 0;
    // "lambda = +s", "lambda = -s", "mixed" or "n/a" (no pure spin states).
    std::string lambdaConvention = "n/a";
};

SpectralReport compareClosedForm(const SpectralModel& model);

// Interior eigenvalues of a and b paired by nearest value; the largest gap.
double crossRepresentationGap(const Diagonalization& a, const Diagonalization& b, std::size_t* paired = nullptr);

struct ScanReport {
    std::string name;
    SpectralModel model;          // model at the first scan point
    std::vector<double> x;
    std::vector<double> residuals;
    double fittedSlope = 0;
    bool enoughLevels = true;
    std::string advice;
};

double fitLogLogSlope(const std::vector<double>& x, const std::vector<double>& y);
std::vector<double> logSpace(double from, double to, int points);

// Spin-1 Sakata-Taketani spectrum against the linear-AMM closed form; x = g - 2.
ScanReport ammLinearityScan(const SpectralModel& base, const std::vector<double>& gMinus2, int lowestLevels = 6);

// Higher-order spin-1 FW spectrum against the Sakata-Taketani spectrum; x = |e|B.
ScanReport eqprfResidualScan(const SpectralModel& base, const std::vector<double>& fields, int lowestLevels = 6);

struct RelationCheck {
    std::string name;
    double residual = 0;     // max |lhs - rhs| on the interior block
    double lhsMagnitude = 0;
    bool passed = false;
};

struct RelationReport {
    SpectralModel model;
    std::vector<RelationCheck> checks;
    bool passed() const;
};

// Operator relations between the odd and even parts of the spin-1
// Sakata-Taketani Hamiltonian, evaluated on levels n < N - margin.
RelationReport eqrelCheck(const SpectralModel& model, int margin = 8, double tolerance = 1e-8);

// Odd and even parts of the spin-1 Sakata-Taketani Hamiltonian.
struct SakataTaketaniParts {
    SpMat mass;  // rho3 M
    SpMat even;
    SpMat odd;
};
SakataTaketaniParts sakataTaketaniParts(const SpectralModel& model);

nlohmann::json toJson(const SpectralModel& m);
nlohmann::json toJson(const SpectralReport& r);
nlohmann::json toJson(const ScanReport& r);
nlohmann::json toJson(const RelationReport& r);

} // namespace fwforge::spectra
