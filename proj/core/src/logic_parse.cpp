#include <algorithm>
#include <cctype>

#include "critex/error.hpp"
#include "critex/logic.hpp"

namespace critex::logic {

TermPtr var(std::string name)
{
    auto t = std::make_shared<Term>();
    t->kind = Term::Kind::variable;
    t->name = std::move(name);
    return t;
}

TermPtr constant(const BigInt& value)
{
    auto t = std::make_shared<Term>();
    t->kind = Term::Kind::constant;
    t->value = value;
    return t;
}

TermPtr operator+(TermPtr a, TermPtr b)
{
    auto t = std::make_shared<Term>();
    t->kind = Term::Kind::sum;
    t->lhs = std::move(a);
    t->rhs = std::move(b);
    return t;
}

FormulaPtr compare(TermPtr a, CompareOp op, TermPtr b)
{
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::compare;
    f->op = op;
    f->left = std::move(a);
    f->right = std::move(b);
    return f;
}

FormulaPtr seq_equal(TermPtr a, TermPtr b)
{
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::seq_compare;
    f->left = std::move(a);
    f->right = std::move(b);
    return f;
}

FormulaPtr seq_is(TermPtr a, const BigInt& c)
{
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::seq_const;
    f->left = std::move(a);
    f->constant = c;
    return f;
}

namespace {

FormulaPtr unary(Formula::Kind kind, FormulaPtr a)
{
    auto f = std::make_shared<Formula>();
    f->kind = kind;
    f->lhs = std::move(a);
    return f;
}

FormulaPtr binary(Formula::Kind kind, FormulaPtr a, FormulaPtr b)
{
    auto f = std::make_shared<Formula>();
    f->kind = kind;
    f->lhs = std::move(a);
    f->rhs = std::move(b);
    return f;
}

FormulaPtr quantifier(Formula::Kind kind, std::string v, FormulaPtr body)
{
    auto f = std::make_shared<Formula>();
    f->kind = kind;
    f->var = std::move(v);
    f->lhs = std::move(body);
    return f;
}

}  // namespace

FormulaPtr negate(FormulaPtr f) { return unary(Formula::Kind::negation, std::move(f)); }
FormulaPtr conj(FormulaPtr a, FormulaPtr b) { return binary(Formula::Kind::conjunction, std::move(a), std::move(b)); }
FormulaPtr disj(FormulaPtr a, FormulaPtr b) { return binary(Formula::Kind::disjunction, std::move(a), std::move(b)); }
FormulaPtr implies(FormulaPtr a, FormulaPtr b) { return binary(Formula::Kind::implication, std::move(a), std::move(b)); }
FormulaPtr exists(std::string v, FormulaPtr body) { return quantifier(Formula::Kind::exists, std::move(v), std::move(body)); }
FormulaPtr forall(std::string v, FormulaPtr body) { return quantifier(Formula::Kind::forall, std::move(v), std::move(body)); }

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok {
    ident, number, kw_exists, kw_forall, kw_seq,
    dot, lparen, rparen, lbracket, rbracket, plus,
    eq, ne, lt, le, gt, ge, amp, bar, arrow, tilde, end,
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(std::string_view src)
{
    std::vector<Token> out;
    std::size_t i = 0;
    auto error = [&](const std::string& msg) {
        throw Error(Errc::syntax, "syntax error at " + std::to_string(i) + ": " + msg);
    };
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const auto start = i;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
                ++i;
            std::string word(src.substr(start, i - start));
            Tok kind = Tok::ident;
            if (word == "E")
                kind = Tok::kw_exists;
            else if (word == "A")
                kind = Tok::kw_forall;
            else if (word == "seq")
                kind = Tok::kw_seq;
            out.push_back({kind, std::move(word), start});
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i])))
                ++i;
            out.push_back({Tok::number, std::string(src.substr(start, i - start)), start});
            continue;
        }
        auto two = [&](char next) { return i + 1 < src.size() && src[i + 1] == next; };
        Tok kind;
        std::size_t len = 1;
        switch (c) {
        case '.': kind = Tok::dot; break;
        case '(': kind = Tok::lparen; break;
        case ')': kind = Tok::rparen; break;
        case '[': kind = Tok::lbracket; break;
        case ']': kind = Tok::rbracket; break;
        case '+': kind = Tok::plus; break;
        case '=': kind = Tok::eq; break;
        case '&': kind = Tok::amp; break;
        case '|': kind = Tok::bar; break;
        case '~': kind = Tok::tilde; break;
        case '!':
            if (!two('='))
                error("expected '!='");
            kind = Tok::ne;
            len = 2;
            break;
        case '<':
            kind = two('=') ? Tok::le : Tok::lt;
            len = two('=') ? 2 : 1;
            break;
        case '>':
            kind = two('=') ? Tok::ge : Tok::gt;
            len = two('=') ? 2 : 1;
            break;
        case '-':
            if (!two('>'))
                error("expected '->'");
            kind = Tok::arrow;
            len = 2;
            break;
        default: error(std::string("unexpected character '") + c + "'");
        }
        out.push_back({kind, std::string(src.substr(start, len)), start});
        i += len;
    }
    out.push_back({Tok::end, "", src.size()});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

    FormulaPtr parse_all()
    {
        auto f = implication();
        if (peek().kind != Tok::end)
            fail("unexpected '" + peek().text + "'");
        return f;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    Token take() { return tokens_[pos_++]; }
    bool accept(Tok k)
    {
        if (peek().kind != k)
            return false;
        ++pos_;
        return true;
    }
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw Error(Errc::syntax, "syntax error at " + std::to_string(peek().pos) + ": " + msg);
    }
    void expect(Tok k, const char* what)
    {
        if (!accept(k))
            fail(std::string("expected ") + what);
    }

    FormulaPtr with_span(FormulaPtr f, std::size_t begin)
    {
        auto copy = std::make_shared<Formula>(*f);
        copy->span = {begin, tokens_[pos_ ? pos_ - 1 : 0].pos + tokens_[pos_ ? pos_ - 1 : 0].text.size()};
        return copy;
    }

    FormulaPtr implication()
    {
        const auto begin = peek().pos;
        auto lhs = disjunction();
        if (accept(Tok::arrow))
            return with_span(implies(lhs, implication()), begin);
        return lhs;
    }

    FormulaPtr disjunction()
    {
        const auto begin = peek().pos;
        auto lhs = conjunction();
        while (accept(Tok::bar))
            lhs = with_span(disj(lhs, conjunction()), begin);
        return lhs;
    }

    FormulaPtr conjunction()
    {
        const auto begin = peek().pos;
        auto lhs = unary_formula();
        while (accept(Tok::amp))
            lhs = with_span(conj(lhs, unary_formula()), begin);
        return lhs;
    }

    FormulaPtr unary_formula()
    {
        const auto begin = peek().pos;
        if (accept(Tok::tilde))
            return with_span(negate(unary_formula()), begin);
        if (peek().kind == Tok::kw_exists || peek().kind == Tok::kw_forall) {
            const bool is_exists = take().kind == Tok::kw_exists;
            if (peek().kind != Tok::ident)
                fail("expected variable after quantifier");
            const auto name = take().text;
            TermPtr bound;
            if (accept(Tok::lt))
                bound = term();
            expect(Tok::dot, "'.'");
            auto body = implication();
            if (bound) {
                auto guard = compare(var(name), CompareOp::lt, bound);
                body = is_exists ? conj(guard, body) : implies(guard, body);
            }
            return with_span(is_exists ? exists(name, body) : forall(name, body), begin);
        }
        if (accept(Tok::lparen)) {
            auto f = implication();
            expect(Tok::rparen, "')'");
            return f;
        }
        return atom();
    }

    TermPtr seq_index()
    {
        expect(Tok::kw_seq, "'seq'");
        expect(Tok::lbracket, "'['");
        auto t = term();
        expect(Tok::rbracket, "']'");
        return t;
    }

    FormulaPtr atom()
    {
        const auto begin = peek().pos;
        if (peek().kind == Tok::kw_seq) {
            auto lhs = seq_index();
            CompareOp op;
            if (accept(Tok::eq))
                op = CompareOp::eq;
            else if (accept(Tok::ne))
                op = CompareOp::ne;
            else
                fail("expected '=' or '!=' after seq[...]");
            FormulaPtr f;
            if (peek().kind == Tok::kw_seq) {
                f = seq_equal(lhs, seq_index());
            } else if (peek().kind == Tok::number) {
                f = seq_is(lhs, BigInt(take().text));
            } else {
                fail("expected seq[...] or a constant");
            }
            auto copy = std::make_shared<Formula>(*f);
            copy->op = op;
            return with_span(copy, begin);
        }
        if (peek().kind == Tok::end)
            fail("unexpected end of formula");
        auto lhs = term();
        CompareOp op;
        switch (peek().kind) {
        case Tok::eq: op = CompareOp::eq; break;
        case Tok::ne: op = CompareOp::ne; break;
        case Tok::lt: op = CompareOp::lt; break;
        case Tok::le: op = CompareOp::le; break;
        case Tok::gt: op = CompareOp::gt; break;
        case Tok::ge: op = CompareOp::ge; break;
        default: fail("expected a comparison operator");
        }
        take();
        return with_span(compare(lhs, op, term()), begin);
    }

    TermPtr term()
    {
        auto lhs = primary_term();
        while (accept(Tok::plus))
            lhs = lhs + primary_term();
        return lhs;
    }

    TermPtr primary_term()
    {
        const auto& tok = peek();
        if (tok.kind == Tok::ident) {
            auto t = std::make_shared<Term>(*var(tok.text));
            t->span = {tok.pos, tok.pos + tok.text.size()};
            take();
            return t;
        }
        if (tok.kind == Tok::number) {
            auto t = std::make_shared<Term>(*constant(BigInt(tok.text)));
            t->span = {tok.pos, tok.pos + tok.text.size()};
            take();
            return t;
        }
        fail("expected a variable or a constant");
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

const char* op_text(CompareOp op)
{
    switch (op) {
    case CompareOp::eq: return "=";
    case CompareOp::ne: return "!=";
    case CompareOp::lt: return "<";
    case CompareOp::le: return "<=";
    case CompareOp::gt: return ">";
    case CompareOp::ge: return ">=";
    }
    return "?";
}

void collect_free(const Formula& f, std::vector<std::string>& bound, std::vector<std::string>& out);

void collect_term(const Term& t, const std::vector<std::string>& bound, std::vector<std::string>& out)
{
    switch (t.kind) {
    case Term::Kind::variable:
        if (std::find(bound.begin(), bound.end(), t.name) == bound.end() &&
            std::find(out.begin(), out.end(), t.name) == out.end())
            out.push_back(t.name);
        break;
    case Term::Kind::constant: break;
    case Term::Kind::sum:
        collect_term(*t.lhs, bound, out);
        collect_term(*t.rhs, bound, out);
        break;
    }
}

void collect_free(const Formula& f, std::vector<std::string>& bound, std::vector<std::string>& out)
{
    switch (f.kind) {
    case Formula::Kind::exists:
    case Formula::Kind::forall:
        bound.push_back(f.var);
        collect_free(*f.lhs, bound, out);
        bound.pop_back();
        break;
    case Formula::Kind::negation: collect_free(*f.lhs, bound, out); break;
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction:
    case Formula::Kind::implication:
        collect_free(*f.lhs, bound, out);
        collect_free(*f.rhs, bound, out);
        break;
    case Formula::Kind::compare:
    case Formula::Kind::seq_compare:
        collect_term(*f.left, bound, out);
        collect_term(*f.right, bound, out);
        break;
    case Formula::Kind::seq_const: collect_term(*f.left, bound, out); break;
    }
}

}  // namespace

FormulaPtr parse(std::string_view text)
{
    return Parser(text).parse_all();
}

std::string to_string(const Term& t)
{
    switch (t.kind) {
    case Term::Kind::variable: return t.name;
    case Term::Kind::constant: return t.value.get_str();
    case Term::Kind::sum: return to_string(*t.lhs) + "+" + to_string(*t.rhs);
    }
    return "?";
}

std::string to_string(const Formula& f)
{
    switch (f.kind) {
    case Formula::Kind::exists: return "(E " + f.var + " . " + to_string(*f.lhs) + ")";
    case Formula::Kind::forall: return "(A " + f.var + " . " + to_string(*f.lhs) + ")";
    case Formula::Kind::negation: return "~" + to_string(*f.lhs);
    case Formula::Kind::conjunction: return "(" + to_string(*f.lhs) + " & " + to_string(*f.rhs) + ")";
    case Formula::Kind::disjunction: return "(" + to_string(*f.lhs) + " | " + to_string(*f.rhs) + ")";
    case Formula::Kind::implication: return "(" + to_string(*f.lhs) + " -> " + to_string(*f.rhs) + ")";
    case Formula::Kind::compare:
        return to_string(*f.left) + " " + op_text(f.op) + " " + to_string(*f.right);
    case Formula::Kind::seq_compare:
        return "seq[" + to_string(*f.left) + "] " + op_text(f.op) + " seq[" + to_string(*f.right) + "]";
    case Formula::Kind::seq_const:
        return "seq[" + to_string(*f.left) + "] " + op_text(f.op) + " " + f.constant.get_str();
    }
    return "?";
}

std::vector<std::string> free_variables(const Formula& f)
{
    std::vector<std::string> bound, out;
    collect_free(f, bound, out);
    return out;
}

}  // namespace critex::logic
