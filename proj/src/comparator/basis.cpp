#include "fwforge/comparator/basis.hpp"

#include "fwforge/ncalg/expand.hpp"
#include "fwforge/ncalg/parser.hpp"

#include <algorithm>
#include <tuple>

namespace fwforge::comparator {

using namespace ncalg;

const std::vector<std::string>& vocabulary()
{
    static const std::vector<std::string> v = [] {
        std::vector<std::string> texts = {
            "comm(O, comm(O, E))",
            "comm(pow(O, 2), E)",
            "acomm(pow(O, 2), comm(O, comm(O, E)))",
            "acomm(pow(O, 4), comm(O, comm(O, E)))",
            "comm(pow(O, 2), comm(pow(O, 2), E))",
            "acomm(pow(O, 2), comm(pow(O, 2), comm(pow(O, 2), E)))",
            "comm(pow(O, 2), comm(O, E))",
            "comm(comm(O, E), E)",
            "pow(comm(O, E), 2)",
            "comm(comm(pow(O, 2), E), E)",
            "acomm(O, comm(comm(O, E), E))",
            "pow(comm(pow(O, 2), E), 2)",
            "acomm(pow(O, 2), pow(comm(O, E), 2))",
            "acomm(pow(O, 2), comm(comm(pow(O, 2), E), E))",
            "comm(O, comm(O, comm(comm(pow(O, 2), E), E)))",
            "comm(comm(O, comm(O, comm(pow(O, 2), E))), E)",
            "comm(pow(O, 2), comm(O, comm(comm(O, E), E)))",
            "comm(O, comm(comm(comm(O, E), E), E))",
            "comm(pow(O, 2), comm(pow(O, 2), comm(O, comm(O, E))))",
        };
        for (auto& t : texts)
            t = formatBracket(parseExpr(t));
        return texts;
    }();
    return v;
}

struct BracketBasis::ClassSpace {
    LetterClass cls;
    std::vector<Word> words;
    std::map<Word, std::size_t> index;
    std::vector<std::size_t> gen;  // element indices in insertion order

    struct Row {
        std::size_t pivot;
        std::vector<Rational> vec;
        std::vector<Rational> combo;  // over gen positions
    };
    std::vector<Row> rows;

    std::vector<Rational> toVector(const AbstractExpr& a) const
    {
        std::vector<Rational> v(words.size(), Rational(0));
        for (const auto& [m, c] : a.terms())
            v[index.at(m.word)] += c;
        return v;
    }

    // Reduces v in place; returns the combination of gen elements removed.
    std::vector<Rational> reduce(std::vector<Rational>& v) const
    {
        std::vector<Rational> combo(gen.size() + 1, Rational(0));
        for (const auto& r : rows) {
            if (v[r.pivot] == 0)
                continue;
            Rational f = v[r.pivot] / r.vec[r.pivot];
            for (std::size_t i = 0; i < v.size(); ++i)
                if (r.vec[i] != 0)
                    v[i] -= f * r.vec[i];
            for (std::size_t i = 0; i < r.combo.size(); ++i)
                if (r.combo[i] != 0)
                    combo[i] += f * r.combo[i];
        }
        return combo;
    }
};

namespace {

std::vector<Word> wordsOfClass(const LetterClass& c)
{
    std::vector<Word> out;
    int n = c.e + c.o;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (std::popcount(mask) != c.o)
            continue;
        Word w;
        for (int i = n - 1; i >= 0; --i)
            w = w * Word(((mask >> i) & 1u) ? Letter::O : Letter::E);
        out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct Candidate {
    BracketExpr bracket;
    std::string text;
    int order;
    int vocabRank;  // position in vocabulary, or large
    std::size_t nodes;
    AbstractExpr expansion;
};

bool preferred(const Candidate& a, const Candidate& b)
{
    if (a.order != b.order)
        return a.order > b.order;
    return std::tie(a.vocabRank, a.nodes, a.text) < std::tie(b.vocabRank, b.nodes, b.text);
}

} // namespace

BracketBasis BracketBasis::build(int maxWordLen, int maxECount)
{
    BracketBasis basis;
    basis.maxWordLen_ = maxWordLen;
    basis.maxECount_ = maxECount;
    const auto& vocab = vocabulary();
    const Budget unbounded{Word::kMaxLength, Word::kMaxLength, 1u << 30};

    std::map<LetterClass, std::vector<Candidate>> vocabByClass;
    for (std::size_t i = 0; i < vocab.size(); ++i) {
        BracketExpr t = parseExpr(vocab[i]);
        AbstractExpr x = expandBracket(t, unbounded);
        auto cls = classify(x);
        if (cls.size() != 1)
            continue;
        LetterClass c = cls.begin()->first;
        if (c.e > maxECount || c.e + c.o > maxWordLen)
            continue;
        vocabByClass[c].push_back(
            Candidate{t, vocab[i], *parityAndOrder(t).hbarOrder, static_cast<int>(i), t.nodeCount(), x});
    }

    std::vector<LetterClass> classes;
    for (int n = 1; n <= maxWordLen; ++n)
        for (int e = 0; e <= std::min(n, maxECount); ++e)
            classes.push_back({e, n - e});

    for (const auto& c : classes) {
        auto space = std::make_shared<ClassSpace>();
        space->cls = c;
        space->words = wordsOfClass(c);
        for (std::size_t i = 0; i < space->words.size(); ++i)
            space->index[space->words[i]] = i;

        std::vector<Candidate> cands;
        if (auto it = vocabByClass.find(c); it != vocabByClass.end())
            cands = it->second;
        if (c.e + c.o == 1) {
            BracketExpr g = c.e ? E : O;
            cands.push_back(Candidate{g, formatBracket(g), 0, 1 << 20, 1, expandBracket(g, unbounded)});
        }
        for (int e1 = 0; e1 <= c.e; ++e1) {
            for (int o1 = 0; o1 <= c.o; ++o1) {
                LetterClass c1{e1, o1};
                LetterClass c2{c.e - e1, c.o - o1};
                if (c1.e + c1.o == 0 || c2.e + c2.o == 0)
                    continue;
                auto s1 = basis.spaces_.at(c1);
                auto s2 = basis.spaces_.at(c2);
                for (std::size_t i1 : s1->gen) {
                    for (std::size_t i2 : s2->gen) {
                        const BasisElement& g1 = basis.elements_[i1];
                        const BasisElement& g2 = basis.elements_[i2];
                        bool bothOdd = (c1.o & 1) && (c2.o & 1);
                        AbstractExpr ab = mulExpr(g1.expansion, g2.expansion);
                        AbstractExpr ba = mulExpr(g2.expansion, g1.expansion);
                        struct Op {
                            BracketExpr t;
                            AbstractExpr x;
                            int order;
                        };
                        Op ops[] = {
                            {g1.bracket * g2.bracket, ab, g1.hbarOrder + g2.hbarOrder},
                            {comm(g1.bracket, g2.bracket), ab - ba, g1.hbarOrder + g2.hbarOrder + (bothOdd ? 0 : 1)},
                            {acomm(g1.bracket, g2.bracket), ab + ba, g1.hbarOrder + g2.hbarOrder},
                        };
                        for (auto& op : ops) {
                            if (op.x.isZero())
                                continue;
                            cands.push_back(Candidate{op.t, formatBracket(op.t), op.order, 1 << 20, op.t.nodeCount(),
                                                      std::move(op.x)});
                        }
                    }
                }
            }
        }
        std::stable_sort(cands.begin(), cands.end(), preferred);

        for (auto& cand : cands) {
            if (space->rows.size() == space->words.size() && cand.vocabRank >= (1 << 20))
                continue;
            std::vector<Rational> v = space->toVector(cand.expansion);
            std::vector<Rational> combo = space->reduce(v);
            auto pivot = std::find_if(v.begin(), v.end(), [](const Rational& q) { return q != 0; });
            if (pivot == v.end()) {
                if (cand.vocabRank < (1 << 20)) {
                    BasisDependency dep{cand.text, c, {}};
                    for (std::size_t i = 0; i < space->gen.size(); ++i)
                        if (combo[i] != 0)
                            dep.combination.emplace_back(space->gen[i], combo[i]);
                    basis.dependencies_.push_back(std::move(dep));
                }
                continue;
            }
            std::size_t pos = space->gen.size();
            std::vector<Rational> rowCombo(pos + 1, Rational(0));
            for (std::size_t i = 0; i < pos; ++i)
                rowCombo[i] = -combo[i];
            rowCombo[pos] = 1;
            for (auto& r : space->rows)
                r.combo.resize(pos + 1, Rational(0));
            space->rows.push_back(
                ClassSpace::Row{static_cast<std::size_t>(pivot - v.begin()), std::move(v), std::move(rowCombo)});
            space->gen.push_back(basis.elements_.size());
            basis.elements_.push_back(BasisElement{cand.bracket, cand.text, cand.order, c, std::move(cand.expansion),
                                                   cand.vocabRank < (1 << 20)});
        }
        basis.spaces_[c] = space;
    }
    return basis;
}

std::vector<std::size_t> BracketBasis::listing() const
{
    std::vector<std::size_t> idx(elements_.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        const auto& x = elements_[a];
        const auto& y = elements_[b];
        return std::tie(x.hbarOrder, x.cls, x.text) < std::tie(y.hbarOrder, y.cls, y.text);
    });
    return idx;
}

std::optional<std::size_t> BracketBasis::find(const std::string& text) const
{
    std::string canonical = formatBracket(parseExpr(text));
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (elements_[i].text == canonical)
            return i;
    return std::nullopt;
}

bool BracketBasis::covers(const LetterClass& c) const
{
    return spaces_.count(c) != 0;
}

const BracketBasis::ClassSpace* BracketBasis::space(const LetterClass& c) const
{
    auto it = spaces_.find(c);
    return it == spaces_.end() ? nullptr : it->second.get();
}

Projection project(const AbstractExpr& a, const BracketBasis& basis)
{
    Projection out;
    std::map<std::tuple<LetterClass, int, int>, AbstractExpr> blocks;
    for (const auto& [m, c] : a.terms())
        blocks[{LetterClass{m.word.eCount(), m.word.oCount()}, m.beta, m.mExp}].addTerm(Monomial{0, m.word, 0}, c);

    for (const auto& [key, block] : blocks) {
        const auto& [cls, beta, mExp] = key;
        const auto* space = basis.space(cls);
        if (!space) {
            for (const auto& [m, c] : block.terms())
                out.residual.addTerm(Monomial{beta, m.word, mExp}, c);
            continue;
        }
        std::vector<Rational> v = space->toVector(block);
        std::vector<Rational> combo = space->reduce(v);
        for (std::size_t i = 0; i < space->gen.size(); ++i) {
            if (combo[i] == 0)
                continue;
            std::size_t el = space->gen[i];
            out.terms.push_back(BasisTerm{el, beta, mExp, combo[i]});
            int ord = basis.elements()[el].hbarOrder;
            out.minHbarOrder = out.minHbarOrder ? std::min(*out.minHbarOrder, ord) : ord;
        }
        for (std::size_t i = 0; i < v.size(); ++i)
            out.residual.addTerm(Monomial{beta, space->words[i], mExp}, v[i]);
    }
    return out;
}

AbstractExpr reconstruct(const Projection& p, const BracketBasis& basis)
{
    AbstractExpr out;
    for (const auto& t : p.terms) {
        AbstractExpr prefactor = AbstractExpr::term(t.coeff, Monomial{t.beta, Word(), t.mExp});
        out += mulExpr(prefactor, basis.elements()[t.element].expansion);
    }
    return out;
}

std::string basisTermText(const BasisTerm& t, const BracketBasis& basis)
{
    std::string out = "m^" + std::to_string(t.mExp) + "*";
    if (t.beta)
        out += "beta*";
    return out + basis.elements()[t.element].text;
}

} // namespace fwforge::comparator
