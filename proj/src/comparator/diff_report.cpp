#include "fwforge/comparator/diff_report.hpp"

#include <set>
#include <sstream>

namespace fwforge::comparator {

using namespace ncalg;

const ClassDiff* DiffReport::find(const LetterClass& c) const
{
    for (const auto& d : classes)
        if (d.cls == c)
            return &d;
    return nullptr;
}

bool DiffReport::headlineHolds() const
{
    for (const auto& d : classes) {
        if (d.identical)
            continue;
        if (!d.projection.residual.isZero() || !d.projection.minHbarOrder || *d.projection.minHbarOrder < 2)
            return false;
    }
    return true;
}

DiffReport diffReport(const AbstractExpr& hEriksen, const AbstractExpr& hStepwise, const BracketBasis& basis)
{
    DiffReport out;
    out.maxWordLen = basis.maxWordLen();
    out.maxECount = basis.maxECount();
    std::set<LetterClass> keys;
    for (const auto& [k, v] : classify(hEriksen))
        keys.insert(k);
    for (const auto& [k, v] : classify(hStepwise))
        keys.insert(k);
    auto diffs = classify(hEriksen - hStepwise);
    for (const auto& k : keys) {
        ClassDiff d;
        d.cls = k;
        if (auto it = diffs.find(k); it != diffs.end()) {
            d.identical = false;
            d.difference = it->second;
            d.projection = project(d.difference, basis);
        }
        out.classes.push_back(std::move(d));
    }
    return out;
}

nlohmann::json toJson(const Projection& p, const BracketBasis& basis)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : p.terms) {
        std::string text = (t.beta ? "beta*" : "") + basis.elements()[t.element].text;
        terms.push_back({{"bracket_text", text},
                         {"coeff", toString(t.coeff)},
                         {"m_exp", t.mExp},
                         {"hbar_order", basis.elements()[t.element].hbarOrder}});
    }
    return terms;
}

nlohmann::json toJson(const DiffReport& r, const BracketBasis& basis)
{
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& d : r.classes) {
        nlohmann::json residual = nlohmann::json::array();
        for (const auto& [m, c] : d.projection.residual.terms())
            residual.push_back(formatTerm(m, c));
        nlohmann::json order = nullptr;
        if (!d.identical && d.projection.minHbarOrder && d.projection.residual.isZero())
            order = *d.projection.minHbarOrder;
        classes.push_back({{"e", d.cls.e},
                           {"o", d.cls.o},
                           {"status", d.identical ? "identical" : "differs"},
                           {"hbar_order_min", order},
                           {"difference", formatExpr(d.difference)},
                           {"basis_terms", toJson(d.projection, basis)},
                           {"residual", residual}});
    }
    return {{"budget", {{"max_word_len", r.maxWordLen}, {"max_e_count", r.maxECount}}},
            {"classes", classes},
            {"headline_holds", r.headlineHolds()}};
}

std::string bracketTable(const DiffReport& r, const BracketBasis& basis)
{
    std::ostringstream os;
    os << "Eriksen minus step-by-step, budget (" << r.maxWordLen << ", " << r.maxECount << ")\n";
    for (const auto& d : r.classes) {
        os << "class (" << d.cls.e << "," << d.cls.o << ")  ";
        if (d.identical) {
            os << "identical\n";
            continue;
        }
        os << "differs";
        if (d.projection.minHbarOrder && d.projection.residual.isZero())
            os << ", lowest hbar order " << *d.projection.minHbarOrder;
        os << "\n";
        for (const auto& t : d.projection.terms)
            os << "    " << toString(t.coeff) << " * " << basisTermText(t, basis) << "   [order "
               << basis.elements()[t.element].hbarOrder << "]\n";
        if (!d.projection.residual.isZero())
            os << "    residual outside basis: " << formatExpr(d.projection.residual) << "\n";
    }
    os << (r.headlineHolds() ? "every difference is of order >= 2\n" : "a difference below order 2 was found\n");
    return os.str();
}

} // namespace fwforge::comparator
