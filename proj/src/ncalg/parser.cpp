#include "fwforge/ncalg/parser.hpp"

#include "fwforge/fseries/central_series.hpp"

#include <cctype>

namespace fwforge::ncalg {

ParseError::ParseError(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset)
{
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    BracketExpr parseAll()
    {
        BracketExpr e = expr();
        skip();
        if (pos_ != s_.size())
            throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return e;
    }

private:
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    char peek()
    {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    void expect(char c)
    {
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    bool startsFactor()
    {
        char c = peek();
        return c == '(' || std::isalpha(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c));
    }

    BracketExpr expr()
    {
        std::vector<BracketExpr> terms;
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = s_[pos_] == '-';
            ++pos_;
        }
        BracketExpr first = term();
        terms.push_back(negate ? -first : first);
        while (peek() == '+' || peek() == '-') {
            bool minus = s_[pos_] == '-';
            ++pos_;
            BracketExpr t = term();
            terms.push_back(minus ? -t : t);
        }
        return BracketExpr::sum(std::move(terms));
    }

    BracketExpr term()
    {
        bool juxtapose = std::isdigit(static_cast<unsigned char>(peek()));
        std::vector<BracketExpr> factors{factor()};
        for (;;) {
            if (peek() == '*') {
                ++pos_;
                factors.push_back(factor());
            } else if (juxtapose && startsFactor()) {
                factors.push_back(factor());
            } else {
                break;
            }
        }
        return BracketExpr::product(std::move(factors));
    }

    std::string digits()
    {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            throw ParseError("expected digits", start);
        return std::string(s_.substr(start, pos_ - start));
    }

    long integer()
    {
        skip();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
        }
        std::size_t at = pos_;
        std::string d = digits();
        if (d.size() > 9)
            throw ParseError("integer out of range", at);
        long v = std::stol(d);
        return neg ? -v : v;
    }

    std::string identifier()
    {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    BracketExpr binary(bool commutator)
    {
        expect('(');
        BracketExpr a = expr();
        expect(',');
        BracketExpr b = expr();
        expect(')');
        return commutator ? comm(a, b) : acomm(a, b);
    }

    BracketExpr factor()
    {
        char c = peek();
        std::size_t at = pos_;
        if (c == '(') {
            ++pos_;
            BracketExpr e = expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            std::string den = "1";
            if (peek() == '/') {
                ++pos_;
                skip();
                den = digits();
            }
            Rational q{mpz_class(num), mpz_class(den)};
            if (q.get_den() == 0)
                throw ParseError("zero denominator", at);
            q.canonicalize();
            return BracketExpr::scalar(q);
        }
        std::string id = identifier();
        if (id.empty())
            throw ParseError(c ? std::string("unexpected '") + c + "'" : std::string("unexpected end of input"), at);
        if (id == "E")
            return E;
        if (id == "O")
            return O;
        if (id == "beta")
            return Beta;
        if (id == "m") {
            if (peek() != '^')
                return M(1);
            ++pos_;
            return M(static_cast<int>(integer()));
        }
        if (id == "comm")
            return binary(true);
        if (id == "acomm")
            return binary(false);
        if (id == "pow") {
            expect('(');
            BracketExpr base = expr();
            expect(',');
            std::size_t nAt = (skip(), pos_);
            long n = integer();
            if (n < 0)
                throw ParseError("pow exponent must be non-negative", nAt);
            expect(')');
            return pow(base, static_cast<int>(n));
        }
        if (id == "epsfun") {
            expect('(');
            std::size_t nameAt = (skip(), pos_);
            std::string name = identifier();
            if (!fseries::isEpsilonFunction(name))
                throw ParseError("unknown epsilon function '" + name + "'", nameAt);
            expect(')');
            return BracketExpr::epsilonFunction(name);
        }
        throw ParseError("unknown symbol '" + id + "'", at);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

std::string format(const BracketExpr& t);

void flattenProduct(const BracketExpr& t, std::vector<BracketExpr>& out)
{
    for (const auto& c : t.children()) {
        if (c.kind() == BracketExpr::Kind::Product)
            flattenProduct(c, out);
        else
            out.push_back(c);
    }
}

std::string factorText(const BracketExpr& t)
{
    using K = BracketExpr::Kind;
    std::string s = format(t);
    if (t.kind() == K::Sum || s.front() == '-')
        return "(" + s + ")";
    return s;
}

std::string format(const BracketExpr& t)
{
    using K = BracketExpr::Kind;
    switch (t.kind()) {
    case K::Generator:
        return t.letter() == Letter::O ? "O" : "E";
    case K::Beta:
        return "beta";
    case K::MassPower:
        return "m^" + std::to_string(t.massPower());
    case K::Scalar:
        return fwforge::toString(t.scalarValue());
    case K::EpsilonFunction:
        return "epsfun(" + t.epsilonName() + ")";
    case K::Commutator:
        return "comm(" + format(t.children()[0]) + ", " + format(t.children()[1]) + ")";
    case K::Anticommutator:
        return "acomm(" + format(t.children()[0]) + ", " + format(t.children()[1]) + ")";
    case K::Sum: {
        std::string out;
        bool first = true;
        for (const auto& c : t.children()) {
            std::string s = format(c);
            if (first) {
                out = s;
                first = false;
            } else if (s.front() == '-') {
                out += " - " + s.substr(1);
            } else {
                out += " + " + s;
            }
        }
        return out;
    }
    case K::Product: {
        std::vector<BracketExpr> kids;
        flattenProduct(t, kids);
        std::string out;
        for (std::size_t i = 0; i < kids.size();) {
            std::size_t j = i + 1;
            while (j < kids.size() && kids[j].structurallyEqual(kids[i]))
                ++j;
            std::string piece;
            if (j - i > 1)
                piece = "pow(" + format(kids[i]) + ", " + std::to_string(j - i) + ")";
            else if (i == 0 && kids[i].kind() == K::Scalar)
                piece = format(kids[i]);
            else
                piece = factorText(kids[i]);
            out += (i ? "*" : "") + piece;
            i = j;
        }
        return out;
    }
    }
    return {};
}

} // namespace

BracketExpr parseExpr(std::string_view text)
{
    return Parser(text).parseAll();
}

std::string formatBracket(const BracketExpr& t)
{
    return format(t);
}

} // namespace fwforge::ncalg
