#include "fwforge/spectra/spectra.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>

namespace fwforge::spectra {

namespace {

int twiceSpin(Particle p)
{
    return p == Particle::Spin0 ? 0 : p == Particle::Spin12 ? 1 : 2;
}

// S_z in the internal basis (hbar units), as a sparse d x d matrix.
SpMat spinZ(const SpectralModel& m)
{
    if (m.particle == Particle::Spin0)
        return SpMat(1, 1);
    return spin(twiceSpin(m.particle), 2);
}

// Embeds an (N d) x (N d) operator as rho_k (x) op.
SpMat withRho(int k, const SpMat& op)
{
    return kron(rho(k), op);
}

SpMat landauTimes(const SpMat& landau, const SpMat& internal)
{
    return kron(landau, internal);
}

struct Spin1Blocks {
    SpMat pi2;    // pi^2 (x) 1
    SpMat sb;     // 1 (x) S_z B
    SpMat piS2;   // (pi.S)^2
    SpMat crossSq;  // [S.(pi x B)]^2
};

Spin1Blocks spin1Blocks(const SpectralModel& m)
{
    LandauOperators ops(m.levels, m.charge, m.hbar, m.field);
    SpMat s[2] = {spin(2, 0), spin(2, 1)};
    Spin1Blocks b;
    b.pi2 = landauTimes(ops.piSquared(), sparseIdentity(3));
    b.sb = m.field * landauTimes(sparseIdentity(m.levels), spin(2, 2));
    b.piS2 = SpMat(b.pi2.rows(), b.pi2.cols());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            b.piS2 += landauTimes(ops.quadratic(i, j), SpMat(s[i] * s[j]));
    // S.(pi x B) = B (S_x pi_y - S_y pi_x)
    const int yx[2] = {1, 0};
    const double sign[2] = {1.0, -1.0};
    b.crossSq = SpMat(b.pi2.rows(), b.pi2.cols());
    for (int a = 0; a < 2; ++a)
        for (int c = 0; c < 2; ++c)
            b.crossSq += (m.field * m.field * sign[a] * sign[c]) *
                         landauTimes(ops.quadratic(yx[a], yx[c]), SpMat(s[a] * s[c]));
    return b;
}

double ammStrength(const SpectralModel& m)
{
    return m.charge * m.hbar * (m.g - 2.0) / (2.0 * m.m);
}

void addInteriorInfo(const SpectralModel& model, const std::vector<int>& idx, const Eigen::VectorXcd& v,
                     Eigenpair& out)
{
    const int d = model.internalDim();
    const int n = model.levels;
    const int edge = model.edgeLevels();
    const SpMat sz = spinZ(model);
    double total = 0, top = 0, level = 0, spinSum = 0;
    for (int k = 0; k < v.size(); ++k) {
        double w = std::norm(v(k));
        int global = idx[k];
        int nl = (global % (n * d)) / d;
        int s = global % d;
        total += w;
        level += w * nl;
        if (nl >= n - edge)
            top += w;
        if (d > 1)
            spinSum += w * sz.coeff(s, s).real();
    }
    out.edgeWeight = top / total;
    out.meanLevel = level / total;
    out.meanSpin = spinSum / total;
    out.interior = out.edgeWeight < kInteriorThreshold;
}

} // namespace

const char* toString(Particle p)
{
    switch (p) {
    case Particle::Spin0:
        return "spin0";
    case Particle::Spin12:
        return "spin12";
    case Particle::Spin1:
        return "spin1";
    }
    return "?";
}

const char* toString(Representation r)
{
    switch (r) {
    case Representation::Original:
        return "original";
    case Representation::FW:
        return "fw";
    case Representation::FWEqprf:
        return "fw_eqprf";
    }
    return "?";
}

Particle parseParticle(const std::string& s)
{
    if (s == "spin0")
        return Particle::Spin0;
    if (s == "spin12")
        return Particle::Spin12;
    if (s == "spin1")
        return Particle::Spin1;
    throw ModelError("unknown particle '" + s + "'");
}

Representation parseRepresentation(const std::string& s)
{
    if (s == "original")
        return Representation::Original;
    if (s == "fw")
        return Representation::FW;
    if (s == "fw_eqprf")
        return Representation::FWEqprf;
    throw ModelError("unknown representation '" + s + "'");
}

int SpectralModel::internalDim() const
{
    return twiceSpin(particle) + 1;
}

void validate(const SpectralModel& model)
{
    if (!(model.field >= 0))
        throw ModelError("field must be >= 0");
    if (model.levels < 8)
        throw ModelError("need at least 8 Landau levels");
    if (!(model.m > 0) || !(model.hbar > 0))
        throw ModelError("m and hbar must be positive");
    if (model.representation == Representation::FWEqprf && model.particle != Particle::Spin1)
        throw ModelError("fw_eqprf exists for spin1 only");
    if (model.particle == Particle::Spin0 && model.representation == Representation::Original)
        throw ModelError("spin0 has no original-representation model");
}

SakataTaketaniParts sakataTaketaniParts(const SpectralModel& m)
{
    Spin1Blocks b = spin1Blocks(m);
    const double k = ammStrength(m);
    const SpMat id = sparseIdentity(3 * m.levels);
    SpMat mass = m.m * id + (0.5 / m.m) * b.pi2 - (m.charge * m.hbar / m.m) * b.sb;
    SpMat x = (0.5 / m.m) * b.pi2 - (1.0 / m.m) * b.piS2 + k * b.sb;
    SakataTaketaniParts parts;
    parts.mass = withRho(3, mass);
    parts.even = withRho(3, SpMat(-k * b.sb));
    parts.odd = Complex(0, 1) * withRho(2, x);
    return parts;
}

SpMat buildModelMatrix(const SpectralModel& m)
{
    validate(m);
    const int n = m.levels;
    LandauOperators ops(n, m.charge, m.hbar, m.field);
    const double eh = m.charge * m.hbar;

    if (m.particle == Particle::Spin0) {
        SpMat rad = m.m * m.m * sparseIdentity(n) + ops.piSquared();
        return withRho(3, hermitianFunction(rad, [](double x) { return std::sqrt(x); }, Domain::NonNegative, "m^2 + pi^2"));
    }

    if (m.particle == Particle::Spin12) {
        const double muPrime = (m.g - 2.0) * eh / (4.0 * m.m);
        SpMat sz = landauTimes(sparseIdentity(n), spin(1, 2) * 2.0);  // sigma_z
        if (m.representation == Representation::Original) {
            SpMat alphaPi = landauTimes(ops.linear(0), 2.0 * spin(1, 0)) + landauTimes(ops.linear(1), 2.0 * spin(1, 1));
            return withRho(3, SpMat(m.m * sparseIdentity(2 * n))) + withRho(1, alphaPi) -
                   (muPrime * m.field) * withRho(3, sz);
        }
        SpMat rad = m.m * m.m * sparseIdentity(2 * n) + landauTimes(ops.piSquared(), sparseIdentity(2)) -
                    (eh * m.field) * sz;
        SpMat root = hermitianFunction(rad, [](double x) { return std::sqrt(x); }, Domain::NonNegative, "m^2 + pi^2 - e hbar Sigma.B");
        return withRho(3, SpMat(root - (muPrime * m.field) * sz));
    }

    if (m.representation == Representation::Original) {
        SakataTaketaniParts p = sakataTaketaniParts(m);
        return p.mass + p.even + p.odd;
    }

    Spin1Blocks b = spin1Blocks(m);
    const double k = ammStrength(m);
    const SpMat id = sparseIdentity(3 * n);
    if (m.representation == Representation::FW) {
        SpMat rad = m.m * m.m * id + b.pi2 - (2.0 * eh) * b.sb;
        SpMat root = hermitianFunction(rad, [](double x) { return std::sqrt(x); }, Domain::NonNegative, "m^2 + pi^2 - 2 e hbar S.B");
        return withRho(3, SpMat(root - k * b.sb));
    }

    SpMat sb2 = b.sb * b.sb;
    SpMat eps2 = m.m * m.m * id + b.pi2 - (2.0 * eh) * b.sb - (eh * eh * m.g * (m.g - 2.0) / (4.0 * m.m * m.m)) * sb2;
    SpMat eps = hermitianFunction(eps2, [](double x) { return std::sqrt(x); }, Domain::NonNegative, "eps^2");
    const double mass = m.m;
    SpMat f = hermitianFunction(
        eps2, [mass](double x) { return 1.0 / (std::sqrt(x) * (std::sqrt(x) + mass)); }, true, "eps^2");
    const double b2 = m.field * m.field;
    SpMat y = b2 * b.piS2 - b.crossSq - (eh * (m.g - 1.0) * b2) * b.sb;
    const double c = eh * eh * (m.g - 1.0) * (m.g - 2.0) / (16.0 * m.m * m.m * m.m);
    SpMat upper = eps - k * b.sb + c * SpMat(f * y + y * f);
    return withRho(3, upper);
}

Diagonalization diagonalize(const SpMat& h, const SpectralModel& model)
{
    Diagonalization out;
    out.hermiticityDefect = hermiticityDefect(h);
    out.hermitian = out.hermiticityDefect <= 1e-12 * std::max(1.0, maxAbs(h));
    auto blocks = connectedBlocks(h);
    out.blocks = blocks.size();
    for (const auto& idx : blocks) {
        out.largestBlock = std::max(out.largestBlock, idx.size());
        DenseMat a = denseBlock(h, idx);
        if (out.hermitian) {
            Eigen::SelfAdjointEigenSolver<DenseMat> es(0.5 * (a + a.adjoint()));
            for (int k = 0; k < es.eigenvalues().size(); ++k) {
                Eigenpair p;
                p.value = es.eigenvalues()(k);
                addInteriorInfo(model, idx, es.eigenvectors().col(k), p);
                out.pairs.push_back(p);
            }
        } else {
            Eigen::ComplexEigenSolver<DenseMat> es(a);
            for (int k = 0; k < es.eigenvalues().size(); ++k) {
                Eigenpair p;
                p.value = es.eigenvalues()(k);
                addInteriorInfo(model, idx, es.eigenvectors().col(k), p);
                out.pairs.push_back(p);
            }
        }
    }
    std::sort(out.pairs.begin(), out.pairs.end(), [](const Eigenpair& a, const Eigenpair& b) {
        return a.value.real() < b.value.real();
    });
    return out;
}

double scalarLevel(const SpectralModel& m, int n)
{
    return std::sqrt(m.m * m.m + (2 * n + 1) * std::abs(m.charge) * m.hbar * m.field);
}

double spinHalfLevel(const SpectralModel& m, int n, int lambda)
{
    const double muPrime = (m.g - 2.0) * m.charge * m.hbar / (4.0 * m.m);
    return std::sqrt(m.m * m.m + (2 * n + 1) * std::abs(m.charge) * m.hbar * m.field -
                     lambda * m.charge * m.hbar * m.field) -
           lambda * muPrime * m.field;
}

double spinOneLevel(const SpectralModel& m, int n, int lambda)
{
    return std::sqrt(m.m * m.m + (2 * n + 1) * std::abs(m.charge) * m.hbar * m.field -
                     2.0 * lambda * m.charge * m.hbar * m.field) -
           lambda * ammStrength(m) * m.field;
}

SpectralReport compareClosedForm(const SpectralModel& model)
{
    SpectralReport r;
    r.model = model;
    SpMat h = buildModelMatrix(model);
    Diagonalization d = diagonalize(h, model);
    r.hermiticityDefect = d.hermiticityDefect;

    struct Candidate {
        double value;
        int n, lambda, sign;
    };
    std::vector<Candidate> candidates;
    std::vector<int> lambdas;
    if (model.particle == Particle::Spin0)
        lambdas = {0};
    else if (model.particle == Particle::Spin12)
        lambdas = {-1, 1};
    else
        lambdas = {-1, 0, 1};
    for (int n = 0; n < model.levels + 2; ++n) {
        for (int lambda : lambdas) {
            double v = model.particle == Particle::Spin0    ? scalarLevel(model, n)
                       : model.particle == Particle::Spin12 ? spinHalfLevel(model, n, lambda)
                                                            : spinOneLevel(model, n, lambda);
            if (!std::isfinite(v))
                continue;
            candidates.push_back({v, n, lambda, 1});
            candidates.push_back({-v, n, lambda, -1});
        }
    }

    auto level = [&model](int n, int lambda) {
        return model.particle == Particle::Spin0    ? scalarLevel(model, n)
               : model.particle == Particle::Spin12 ? spinHalfLevel(model, n, lambda)
                                                    : spinOneLevel(model, n, lambda);
    };
    const double spinUnit = model.particle == Particle::Spin12 ? 2.0 : 1.0;

    int plus = 0, minus = 0;
    for (const auto& p : d.pairs) {
        MatchedEigenvalue e;
        e.value = p.value.real();
        e.imagAbs = std::abs(p.value.imag());
        e.interior = p.interior;
        const long sharpN = std::lround(p.meanLevel);
        const long sharpS = std::lround(spinUnit * p.meanSpin);
        const bool sharp = std::abs(p.meanLevel - sharpN) < 1e-6 && std::abs(spinUnit * p.meanSpin - sharpS) < 1e-6;

        // Nearest label; among degenerate labels the state's own level and
        // spin projection win when they are sharp.
        const Candidate* chosen = nullptr;
        double best = std::numeric_limits<double>::infinity();
        for (const auto& c : candidates) {
            double gap = std::abs(c.value - e.value);
            bool own = sharp && c.n == sharpN && c.lambda == sharpS;
            if (!chosen || gap < best - 1e-12 || (gap <= best + 1e-12 && own)) {
                if (gap < best)
                    best = gap;
                chosen = &c;
            }
        }
        if (chosen) {
            e.matchedN = chosen->n;
            e.matchedLambda = chosen->lambda;
            e.matchedSign = chosen->sign;
            e.residual = std::abs(chosen->value - e.value);
            e.relResidual = e.residual / std::max(std::abs(chosen->value), model.m);
        }
        if (e.interior) {
            ++r.interiorCount;
            r.maxImagAbs = std::max(r.maxImagAbs, e.imagAbs);
            r.maxResidual = std::max(r.maxResidual, e.residual);
            r.maxRelResidual = std::max(r.maxRelResidual, e.relResidual);
            if (sharp && sharpS != 0 && model.particle != Particle::Spin0) {
                const int n = static_cast<int>(sharpN);
                const int s = static_cast<int>(sharpS);
                const double v = std::abs(e.value);
                const double tol = 1e-8 * std::max(1.0, v);
                if (std::abs(level(n, s) - v) < tol)
                    ++plus;
                else if (std::abs(level(n, -s) - v) < tol)
                    ++minus;
            }
        }
        r.eigenvalues.push_back(e);
    }
    if (plus > 0 && minus == 0)
        r.lambdaConvention = "lambda = +s";
    else if (minus > 0 && plus == 0)
        r.lambdaConvention = "lambda = -s";
    else if (plus > 0 && minus > 0)
        r.lambdaConvention = "mixed";
    return r;
}

double crossRepresentationGap(const Diagonalization& a, const Diagonalization& b, std::size_t* paired)
{
    std::vector<double> vb;
    for (const auto& p : b.pairs)
        if (p.interior)
            vb.push_back(p.value.real());
    std::sort(vb.begin(), vb.end());
    double gap = 0;
    std::size_t count = 0;
    for (const auto& p : a.pairs) {
        if (!p.interior || vb.empty())
            continue;
        auto it = std::lower_bound(vb.begin(), vb.end(), p.value.real());
        double d = std::numeric_limits<double>::infinity();
        if (it != vb.end())
            d = std::abs(*it - p.value.real());
        if (it != vb.begin())
            d = std::min(d, std::abs(*(it - 1) - p.value.real()));
        gap = std::max(gap, d);
        ++count;
    }
    if (paired)
        *paired = count;
    return gap;
}

double fitLogLogSlope(const std::vector<double>& x, const std::vector<double>& y)
{
    const std::size_t n = std::min(x.size(), y.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(x[i] > 0) || !(y[i] > 0))
            return std::numeric_limits<double>::quiet_NaN();
        double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    double denom = n * sxx - sx * sx;
    if (n < 2 || denom == 0)
        return std::numeric_limits<double>::quiet_NaN();
    return (n * sxy - sx * sy) / denom;
}

std::vector<double> logSpace(double from, double to, int points)
{
    std::vector<double> out;
    if (points == 1)
        return {from};
    for (int i = 0; i < points; ++i)
        out.push_back(from * std::pow(to / from, static_cast<double>(i) / (points - 1)));
    return out;
}

namespace {

std::vector<double> lowestPositiveInterior(const Diagonalization& d, int count)
{
    std::vector<double> out;
    for (const auto& p : d.pairs)
        if (p.interior && p.value.real() > 0)
            out.push_back(p.value.real());
    std::sort(out.begin(), out.end());
    if (static_cast<int>(out.size()) > count)
        out.resize(static_cast<std::size_t>(count));
    return out;
}

double nearestGap(double v, const std::vector<double>& pool)
{
    double best = std::numeric_limits<double>::infinity();
    for (double p : pool)
        best = std::min(best, std::abs(p - v));
    return best;
}

} // namespace

ScanReport ammLinearityScan(const SpectralModel& base, const std::vector<double>& gMinus2, int lowestLevels)
{
    ScanReport r;
    r.name = "amm-linearity";
    r.model = base;
    r.model.particle = Particle::Spin1;
    r.model.representation = Representation::Original;
    for (double dg : gMinus2) {
        SpectralModel m = r.model;
        m.g = 2.0 + dg;
        Diagonalization d = diagonalize(buildModelMatrix(m), m);
        std::vector<double> levels = lowestPositiveInterior(d, lowestLevels);
        if (static_cast<int>(levels.size()) < lowestLevels) {
            r.enoughLevels = false;
            r.advice = "too few interior levels; increase --levels";
        }
        std::vector<double> closed;
        for (int n = 0; n < m.levels + 2; ++n)
            for (int lambda = -1; lambda <= 1; ++lambda)
                closed.push_back(spinOneLevel(m, n, lambda));
        double worst = 0;
        for (double v : levels)
            worst = std::max(worst, nearestGap(v, closed));
        r.x.push_back(dg);
        r.residuals.push_back(worst);
    }
    r.fittedSlope = fitLogLogSlope(r.x, r.residuals);
    return r;
}

ScanReport eqprfResidualScan(const SpectralModel& base, const std::vector<double>& fields, int lowestLevels)
{
    ScanReport r;
    r.name = "eqprf-residual";
    r.model = base;
    r.model.particle = Particle::Spin1;
    for (double b : fields) {
        SpectralModel st = r.model;
        st.field = b / std::abs(st.charge);
        st.representation = Representation::Original;
        SpectralModel fw = st;
        fw.representation = Representation::FWEqprf;
        std::vector<double> exact = lowestPositiveInterior(diagonalize(buildModelMatrix(st), st), lowestLevels);
        std::vector<double> approx = lowestPositiveInterior(diagonalize(buildModelMatrix(fw), fw), lowestLevels + 3);
        if (static_cast<int>(exact.size()) < lowestLevels) {
            r.enoughLevels = false;
            r.advice = "too few interior levels; increase --levels";
        }
        double worst = 0;
        for (double v : exact)
            worst = std::max(worst, nearestGap(v, approx));
        r.x.push_back(b);
        r.residuals.push_back(worst);
    }
    r.fittedSlope = fitLogLogSlope(r.x, r.residuals);
    return r;
}

bool RelationReport::passed() const
{
    for (const auto& c : checks)
        if (!c.passed)
            return false;
    return true;
}

RelationReport eqrelCheck(const SpectralModel& model, int margin, double tolerance)
{
    SpectralModel m = model;
    m.particle = Particle::Spin1;
    m.representation = Representation::Original;
    validate(m);
    RelationReport r;
    r.model = m;
    SakataTaketaniParts p = sakataTaketaniParts(m);
    const SpMat& o = p.odd;
    const SpMat& e = p.even;

    // Projector onto levels n < N - margin.
    const int d = 3, n = m.levels;
    std::vector<Eigen::Triplet<Complex>> t;
    for (int rr = 0; rr < 2; ++rr)
        for (int level = 0; level < n - margin; ++level)
            for (int s = 0; s < d; ++s) {
                int i = rr * n * d + level * d + s;
                t.emplace_back(i, i, 1.0);
            }
    SpMat proj(m.dim(), m.dim());
    proj.setFromTriplets(t.begin(), t.end());
    auto block = [&proj](const SpMat& a) { return SpMat(proj * a * proj); };

    const double eh = m.charge * m.hbar;
    const double c = eh * eh * (m.g - 1.0) * (m.g - 2.0) / (2.0 * m.m * m.m);
    SpMat sb = m.field * kron(sparseIdentity(2), kron(sparseIdentity(n), spin(2, 2)));
    SpMat sb2 = sb * sb;
    const double b2 = m.field * m.field;

    SpMat o2 = o * o;
    SpMat comm = o * e - e * o;
    SpMat inner = comm * e - e * comm;

    auto add = [&](std::string name, const SpMat& lhs, const SpMat& rhs) {
        RelationCheck ch;
        ch.name = std::move(name);
        ch.lhsMagnitude = maxAbs(block(lhs));
        ch.residual = maxAbs(block(SpMat(lhs - rhs)));
        ch.passed = ch.residual < tolerance;
        r.checks.push_back(ch);
    };
    add("[O^2, E] = 0", SpMat(o2 * e - e * o2), SpMat(o.rows(), o.cols()));
    add("[O, E] = rho1 c (S.B)^2", comm, c * kron(rho(1), SpMat(sb2.topLeftCorner(3 * n, 3 * n))));
    add("{O, [[O, E], E]} = -2 c^2 B^2 (S.B)^2", SpMat(o * inner + inner * o), (-2.0 * c * c * b2) * sb2);
    add("([O, E])^2 = c^2 B^2 (S.B)^2", SpMat(comm * comm), (c * c * b2) * sb2);
    return r;
}

nlohmann::json toJson(const SpectralModel& m)
{
    return {{"particle", toString(m.particle)},
            {"representation", toString(m.representation)},
            {"m", m.m},
            {"hbar", m.hbar},
            {"e", m.charge},
            {"B", m.field},
            {"g", m.g},
            {"N", m.levels}};
}

nlohmann::json toJson(const SpectralReport& r)
{
    nlohmann::json eig = nlohmann::json::array();
    for (const auto& e : r.eigenvalues) {
        nlohmann::json item{{"value", e.value},      {"imag_abs", e.imagAbs}, {"interior", e.interior},
                            {"matched_n", e.matchedN}, {"matched_lambda", e.matchedLambda},
                            {"matched_sign", e.matchedSign}, {"residual", e.residual}};
        eig.push_back(std::move(item));
    }
    return {{"model", toJson(r.model)},
            {"N", r.model.levels},
            {"eigenvalues", eig},
            {"interior_count", r.interiorCount},
            {"max_imag_abs", r.maxImagAbs},
            {"max_residual", r.maxResidual},
            {"max_rel_residual", r.maxRelResidual},
            {"hermiticity_defect", r.hermiticityDefect},
            {"lambda_convention", r.lambdaConvention}};
}

nlohmann::json toJson(const ScanReport& r)
{
    nlohmann::json scan{{"x_values", r.x}, {"residuals", r.residuals}};
    scan["fitted_slope"] = std::isfinite(r.fittedSlope) ? nlohmann::json(r.fittedSlope) : nlohmann::json(nullptr);
    nlohmann::json out{{"name", r.name}, {"model", toJson(r.model)}, {"N", r.model.levels}, {"scan", scan}};
    if (!r.enoughLevels)
        out["advice"] = r.advice;
    return out;
}

nlohmann::json toJson(const RelationReport& r)
{
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks)
        checks.push_back(
            {{"name", c.name}, {"residual", c.residual}, {"lhs_magnitude", c.lhsMagnitude}, {"passed", c.passed}});
    return {{"model", toJson(r.model)}, {"N", r.model.levels}, {"checks", checks}, {"passed", r.passed()}};
}

} // namespace fwforge::spectra
