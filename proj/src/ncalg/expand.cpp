#include "fwforge/ncalg/expand.hpp"

#include "fwforge/fseries/central_series.hpp"

namespace fwforge::ncalg {

BudgetOverflow::BudgetOverflow(std::string path, std::size_t terms)
    : std::runtime_error("term cap exceeded at " + path + " (" + std::to_string(terms) + " terms)"),
      path_(std::move(path)),
      terms_(terms)
{
}

namespace {

const char* label(BracketExpr::Kind k)
{
    using K = BracketExpr::Kind;
    switch (k) {
    case K::Sum:
        return "sum";
    case K::Product:
        return "product";
    case K::Commutator:
        return "comm";
    case K::Anticommutator:
        return "acomm";
    default:
        return "leaf";
    }
}

class Expander {
public:
    explicit Expander(const Budget& b) : budget_(b), trunc_(b.truncation()) {}

    AbstractExpr run(const BracketExpr& t, const std::string& path)
    {
        AbstractExpr out = expand(t, path);
        if (out.size() > budget_.termCap)
            throw BudgetOverflow(path, out.size());
        return out;
    }

private:
    AbstractExpr expand(const BracketExpr& t, const std::string& path)
    {
        using K = BracketExpr::Kind;
        switch (t.kind()) {
        case K::Generator:
            return truncate(AbstractExpr::letter(t.letter()), trunc_);
        case K::Beta:
            return AbstractExpr::beta();
        case K::MassPower:
            return AbstractExpr::mass(t.massPower());
        case K::Scalar:
            return AbstractExpr::scalar(t.scalarValue());
        case K::EpsilonFunction: {
            const auto& spec = fseries::epsilonFunction(t.epsilonName());
            return truncate(fseries::centralExpand(spec, budget_.seriesOrder()).toAbstract(), trunc_);
        }
        case K::Sum: {
            AbstractExpr acc;
            for (std::size_t i = 0; i < t.children().size(); ++i)
                acc += child(t, i, path);
            return acc;
        }
        case K::Product: {
            AbstractExpr acc = child(t, 0, path);
            for (std::size_t i = 1; i < t.children().size() && !acc.isZero(); ++i) {
                acc = mulExpr(acc, child(t, i, path), trunc_);
                if (acc.size() > budget_.termCap)
                    throw BudgetOverflow(path + "/" + label(t.kind()), acc.size());
            }
            return acc;
        }
        case K::Commutator:
        case K::Anticommutator: {
            AbstractExpr a = child(t, 0, path);
            AbstractExpr b = child(t, 1, path);
            auto kind = t.kind() == K::Commutator ? BracketKind::Commutator : BracketKind::Anticommutator;
            return bracket(kind, a, b, trunc_);
        }
        }
        return {};
    }

    AbstractExpr child(const BracketExpr& t, std::size_t i, const std::string& path)
    {
        return run(t.children()[i], path + "/" + label(t.kind()) + "[" + std::to_string(i) + "]");
    }

    Budget budget_;
    Truncation trunc_;
};

} // namespace

AbstractExpr expandBracket(const BracketExpr& t, const Budget& budget)
{
    return Expander(budget).run(t, "root");
}

} // namespace fwforge::ncalg
