#include "reports.hpp"

#include "fwforge/ncalg/parser.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using fwforge::cli::Report;
using nlohmann::json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Config {
    int maxLen = 8;
    int maxE = 3;
    std::string out;
    std::string format = "text";
    double m = 1.0;
    double hbar = 1.0;
    double e = 1.0;
    double B = 0.1;
    double g = 2.0;
    int levels = 64;
    double scanFrom = 1e-3;
    double scanTo = 1e-1;
    int scanPoints = 5;
    std::string particle = "spin12";
    std::string repr = "original";
    int hbarMax = 2;
};

json manifest(const Config& c, const std::vector<std::string>& command)
{
    return {{"tool", "fwforge"},
            {"command", command},
            {"config",
             {{"max_len", c.maxLen},
              {"max_e", c.maxE},
              {"out", c.out},
              {"format", c.format},
              {"m", c.m},
              {"hbar", c.hbar},
              {"e", c.e},
              {"B", c.B},
              {"g", c.g},
              {"levels", c.levels},
              {"scan_from", c.scanFrom},
              {"scan_to", c.scanTo},
              {"scan_points", c.scanPoints},
              {"particle", c.particle},
              {"repr", c.repr},
              {"hbar_max", c.hbarMax}}}};
}

bool writeFile(const std::string& path, const std::string& content)
{
    std::ofstream f(path);
    if (!f)
        return false;
    f << content;
    return static_cast<bool>(f);
}

int emit(Report r, const Config& c, const std::vector<std::string>& command)
{
    json man = manifest(c, command);
    r.json["manifest"] = man;
    const std::string jsonText = r.json.dump(2) + "\n";
    const bool wantJson = c.format != "text";
    const bool wantText = c.format != "json";
    if (c.out.empty()) {
        if (wantText)
            std::cout << r.text;
        if (wantJson)
            std::cout << jsonText;
    } else {
        bool ok = true;
        if (wantJson)
            ok = ok && writeFile(c.out, jsonText);
        if (wantText)
            ok = ok && writeFile(wantJson ? c.out + ".txt" : c.out, r.text);
        ok = ok && writeFile(c.out + ".manifest.json", man.dump(2) + "\n");
        if (!ok) {
            std::cerr << "fwforge: cannot write " << c.out << "\n";
            return kExitFailure;
        }
        std::cout << r.text;
    }
    return r.passed ? 0 : kExitFailure;
}

fwforge::spectra::SpectralModel model(const Config& c)
{
    fwforge::spectra::SpectralModel m;
    m.particle = fwforge::spectra::parseParticle(c.particle);
    m.representation = fwforge::spectra::parseRepresentation(c.repr);
    m.m = c.m;
    m.hbar = c.hbar;
    m.charge = c.e;
    m.field = c.B;
    m.g = c.g;
    m.levels = c.levels;
    return m;
}

} // namespace

int main(int argc, char** argv)
{
    Config c;
    CLI::App app{"Foldy-Wouthuysen derivation and verification engine", "fwforge"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "key = value file; flags given on the command line win");

    app.add_option("--max-len", c.maxLen, "maximum word length")->capture_default_str()->check(CLI::Range(1, 32));
    app.add_option("--max-e", c.maxE, "maximum number of E letters per word")->capture_default_str()->check(CLI::Range(0, 32));
    app.add_option("--out", c.out, "report path (adds <out>.manifest.json)");
    app.add_option("--format", c.format, "report format")->capture_default_str()->check(CLI::IsMember({"json", "text", "both"}));
    app.add_option("--m", c.m, "mass")->capture_default_str();
    app.add_option("--hbar", c.hbar, "hbar")->capture_default_str();
    app.add_option("--e", c.e, "signed charge")->capture_default_str();
    app.add_option("--B", c.B, "magnetic field along z")->capture_default_str();
    app.add_option("--g", c.g, "g-factor")->capture_default_str();
    app.add_option("--levels", c.levels, "number of Landau levels N")->capture_default_str();
    app.add_option("--scan-from", c.scanFrom, "first scan value")->capture_default_str();
    app.add_option("--scan-to", c.scanTo, "last scan value")->capture_default_str();
    app.add_option("--scan-points", c.scanPoints, "log-spaced scan points")->capture_default_str()->check(CLI::Range(2, 1000));
    app.add_option("--particle", c.particle, "spin0, spin12 or spin1")->capture_default_str()->check(CLI::IsMember({"spin0", "spin12", "spin1"}));
    app.add_option("--repr", c.repr, "original, fw or fw_eqprf")->capture_default_str()->check(CLI::IsMember({"original", "fw", "fw_eqprf"}));
    app.add_option("--hbar-max", c.hbarMax, "hbar power kept by concretize electrostatic")->capture_default_str()->check(CLI::Range(0, 8));

    std::string which;
    std::string expression;

    auto* derive = app.add_subcommand("derive", "derive a transformed Hamiltonian and check it");
    derive->add_option("target", which)->required()->check(CLI::IsMember({"eriksen", "stepwise", "second-step"}));
    auto* compare = app.add_subcommand("compare", "class-by-class difference of the two methods");
    auto* concretize = app.add_subcommand("concretize", "instantiate with Dirac matrices and fields");
    concretize->add_option("target", which)->required()->check(CLI::IsMember({"electrostatic", "uniform-field"}));
    auto* spectra = app.add_subcommand("spectra", "Landau-level spectra");
    spectra->add_option("action", which)->required()->check(CLI::IsMember({"run", "amm-scan", "eqprf-scan", "eqrel"}));
    auto* expand = app.add_subcommand("expand", "expand a bracket expression into words");
    expand->add_option("expression", expression)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    fwforge::ncalg::Budget budget;
    budget.maxWordLen = c.maxLen;
    budget.maxECount = c.maxE;
    fwforge::cli::ScanRange range{c.scanFrom, c.scanTo, c.scanPoints};
    try {
        if (*derive) {
            std::vector<std::string> cmd{"derive", which};
            if (which == "eriksen")
                return emit(fwforge::cli::eriksenReport(budget), c, cmd);
            if (which == "stepwise")
                return emit(fwforge::cli::stepwiseReport(budget), c, cmd);
            return emit(fwforge::cli::secondStepReport(budget), c, cmd);
        }
        if (*compare)
            return emit(fwforge::cli::compareReport(budget), c, {"compare"});
        if (*concretize)
            return emit(fwforge::cli::concretizeReport(which, c.hbarMax), c, {"concretize", which});
        if (*spectra) {
            std::vector<std::string> cmd{"spectra", which};
            auto m = model(c);
            if (which == "run")
                return emit(fwforge::cli::spectraRunReport(m), c, cmd);
            if (which == "amm-scan")
                return emit(fwforge::cli::ammScanReport(m, range), c, cmd);
            if (which == "eqprf-scan")
                return emit(fwforge::cli::eqprfScanReport(m, range), c, cmd);
            return emit(fwforge::cli::eqrelReport(m), c, cmd);
        }
        if (*expand)
            return emit(fwforge::cli::expandReport(expression, budget), c, {"expand", expression});
    } catch (const fwforge::ncalg::ParseError& e) {
        std::cerr << "fwforge: " << e.what() << "\n";
        return kExitUsage;
    } catch (const fwforge::spectra::ModelError& e) {
        std::cerr << "fwforge: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "fwforge: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
