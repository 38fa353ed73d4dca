#pragma once

#include "fwforge/ncalg/expand.hpp"
#include "fwforge/spectra/spectra.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace fwforge::cli {

struct Report {
    nlohmann::json json;
    std::string text;
    bool passed = true;
};

Report eriksenReport(const ncalg::Budget& budget);
Report stepwiseReport(const ncalg::Budget& budget);
Report secondStepReport(const ncalg::Budget& budget);
Report compareReport(const ncalg::Budget& budget);
Report expandReport(const std::string& input, const ncalg::Budget& budget);

Report concretizeReport(const std::string& target, int hbarMax);

struct ScanRange {
    double from = 1e-3;
    double to = 1e-1;
    int points = 5;
};

Report spectraRunReport(const spectra::SpectralModel& model);
Report ammScanReport(const spectra::SpectralModel& model, const ScanRange& range);
Report eqprfScanReport(const spectra::SpectralModel& model, const ScanRange& range);
Report eqrelReport(const spectra::SpectralModel& model);

} // namespace fwforge::cli
