#include "netglue/formula.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <utility>

namespace netglue {

bool is_quantifier(FormulaKind k) {
    return k == FormulaKind::ExistsVertex || k == FormulaKind::ForallVertex ||
           k == FormulaKind::ExistsSet || k == FormulaKind::ForallSet;
}

namespace {

enum class Tok {
    Ident, Exists, Forall, ExistsS, ForallS, In,
    Arrow, Implies, Eq, Neq, Amp, Pipe, Bang, LParen, RParen, Dot, End,
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                ++i;
            std::string word = text.substr(start, i - start);
            Tok kind = Tok::Ident;
            if (word == "exists") kind = Tok::Exists;
            else if (word == "forall") kind = Tok::Forall;
            else if (word == "existsS") kind = Tok::ExistsS;
            else if (word == "forallS") kind = Tok::ForallS;
            else if (word == "in") kind = Tok::In;
            out.push_back({kind, std::move(word), start});
            continue;
        }
        auto two = (i + 1 < n) ? text.substr(i, 2) : std::string();
        if (two == "->") { out.push_back({Tok::Arrow, two, start}); i += 2; continue; }
        if (two == "=>") { out.push_back({Tok::Implies, two, start}); i += 2; continue; }
        if (two == "!=") { out.push_back({Tok::Neq, two, start}); i += 2; continue; }
        switch (c) {
            case '=': out.push_back({Tok::Eq, "=", start}); break;
            case '&': out.push_back({Tok::Amp, "&", start}); break;
            case '|': out.push_back({Tok::Pipe, "|", start}); break;
            case '!': out.push_back({Tok::Bang, "!", start}); break;
            case '(': out.push_back({Tok::LParen, "(", start}); break;
            case ')': out.push_back({Tok::RParen, ")", start}); break;
            case '.': out.push_back({Tok::Dot, ".", start}); break;
            default:
                throw SyntaxError("unexpected character '" + std::string(1, c) +
                                  "' at position " + std::to_string(start));
        }
        ++i;
    }
    out.push_back({Tok::End, "", n});
    return out;
}

struct Binding {
    bool is_set;
    int slot;
};

class Parser {
public:
    explicit Parser(const std::string& text) : tokens_(tokenize(text)) {}

    Formula parse() {
        Formula f = implies();
        expect(Tok::End, "end of input");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& message) {
        throw SyntaxError(message + " at position " + std::to_string(peek().pos));
    }

    const Token& peek() const { return tokens_[cursor_]; }
    Token take() { return tokens_[cursor_++]; }
    bool accept(Tok kind) {
        if (peek().kind != kind) return false;
        ++cursor_;
        return true;
    }
    void expect(Tok kind, const char* what) {
        if (!accept(kind)) fail(std::string("expected ") + what);
    }

    Formula implies() {
        Formula left = disjunction();
        if (accept(Tok::Implies)) {
            Formula right = implies();
            Formula f;
            f.kind = FormulaKind::Implies;
            f.children = {std::move(left), std::move(right)};
            return f;
        }
        return left;
    }

    Formula disjunction() {
        Formula left = conjunction();
        while (accept(Tok::Pipe)) {
            Formula right = conjunction();
            Formula f;
            f.kind = FormulaKind::Or;
            f.children = {std::move(left), std::move(right)};
            left = std::move(f);
        }
        return left;
    }

    Formula conjunction() {
        Formula left = unary();
        while (accept(Tok::Amp)) {
            Formula right = unary();
            Formula f;
            f.kind = FormulaKind::And;
            f.children = {std::move(left), std::move(right)};
            left = std::move(f);
        }
        return left;
    }

    Formula unary() {
        if (accept(Tok::Bang)) {
            Formula f;
            f.kind = FormulaKind::Not;
            f.children = {unary()};
            return f;
        }
        if (accept(Tok::LParen)) {
            Formula f = implies();
            expect(Tok::RParen, "')'");
            return f;
        }
        switch (peek().kind) {
            case Tok::Exists: return quantifier(FormulaKind::ExistsVertex);
            case Tok::Forall: return quantifier(FormulaKind::ForallVertex);
            case Tok::ExistsS: return quantifier(FormulaKind::ExistsSet);
            case Tok::ForallS: return quantifier(FormulaKind::ForallSet);
            case Tok::Ident: return atom();
            default: fail("expected a formula");
        }
    }

    Formula quantifier(FormulaKind kind) {
        take();  // the quantifier keyword
        if (peek().kind != Tok::Ident) fail("expected a variable name");
        Token name = take();
        if (scope_.count(name.text))
            fail("variable '" + name.text + "' is already bound on this path");
        expect(Tok::Dot, "'.'");
        const bool is_set = kind == FormulaKind::ExistsSet || kind == FormulaKind::ForallSet;
        int slot = is_set ? set_depth_++ : point_depth_++;
        scope_.emplace(name.text, Binding{is_set, slot});
        Formula body = implies();
        scope_.erase(name.text);
        if (is_set) --set_depth_; else --point_depth_;
        Formula f;
        f.kind = kind;
        f.var = name.text;
        f.slot = slot;
        f.children = {std::move(body)};
        return f;
    }

    Binding lookup(const Token& name, bool want_set) {
        auto it = scope_.find(name.text);
        if (it == scope_.end())
            throw SyntaxError("unbound variable '" + name.text + "' at position " +
                              std::to_string(name.pos));
        if (it->second.is_set != want_set)
            throw SyntaxError(std::string("variable '") + name.text + "' is a " +
                              (it->second.is_set ? "set" : "point") +
                              " variable, used as the other kind at position " +
                              std::to_string(name.pos));
        return it->second;
    }

    Formula atom() {
        Token left = take();
        Formula f;
        switch (peek().kind) {
            case Tok::Arrow: {
                take();
                Token right = expect_ident();
                f.kind = FormulaKind::EdgeAtom;
                f.var = left.text;
                f.var2 = right.text;
                f.slot = lookup(left, false).slot;
                f.slot2 = lookup(right, false).slot;
                return f;
            }
            case Tok::Eq:
            case Tok::Neq: {
                const bool negated = take().kind == Tok::Neq;
                Token right = expect_ident();
                f.kind = FormulaKind::EqAtom;
                f.var = left.text;
                f.var2 = right.text;
                f.slot = lookup(left, false).slot;
                f.slot2 = lookup(right, false).slot;
                if (!negated) return f;
                Formula neg;
                neg.kind = FormulaKind::Not;
                neg.children = {std::move(f)};
                return neg;
            }
            case Tok::In: {
                take();
                Token right = expect_ident();
                f.kind = FormulaKind::MemberAtom;
                f.var = left.text;
                f.var2 = right.text;
                f.slot = lookup(left, false).slot;
                f.slot2 = lookup(right, true).slot;
                return f;
            }
            default:
                fail("expected '->', '=', '!=' or 'in'");
        }
    }

    Token expect_ident() {
        if (peek().kind != Tok::Ident) fail("expected a variable name");
        return take();
    }

    std::vector<Token> tokens_;
    std::size_t cursor_ = 0;
    std::map<std::string, Binding> scope_;
    int point_depth_ = 0;
    int set_depth_ = 0;
};

int precedence(FormulaKind k) {
    switch (k) {
        case FormulaKind::Implies: return 1;
        case FormulaKind::Or: return 2;
        case FormulaKind::And: return 3;
        case FormulaKind::Not: return 4;
        default: return 5;  // atoms
    }
}

void print_rec(const Formula& f, int parent_prec, std::string& out) {
    if (is_quantifier(f.kind)) {
        // A quantifier extends maximally right; parenthesize unless at the top.
        const bool parens = parent_prec > 0;
        if (parens) out += "(";
        switch (f.kind) {
            case FormulaKind::ExistsVertex: out += "exists "; break;
            case FormulaKind::ForallVertex: out += "forall "; break;
            case FormulaKind::ExistsSet: out += "existsS "; break;
            case FormulaKind::ForallSet: out += "forallS "; break;
            default: break;
        }
        out += f.var + ". ";
        print_rec(f.children[0], 0, out);
        if (parens) out += ")";
        return;
    }
    switch (f.kind) {
        case FormulaKind::EdgeAtom: out += f.var + " -> " + f.var2; return;
        case FormulaKind::EqAtom: out += f.var + " = " + f.var2; return;
        case FormulaKind::MemberAtom: out += f.var + " in " + f.var2; return;
        case FormulaKind::Not: {
            out += "!";
            const Formula& child = f.children[0];
            const bool parens = precedence(child.kind) < precedence(FormulaKind::Not) ||
                                is_quantifier(child.kind) || child.kind == FormulaKind::EqAtom ||
                                child.kind == FormulaKind::EdgeAtom ||
                                child.kind == FormulaKind::MemberAtom;
            if (parens) out += "(";
            print_rec(child, parens ? 0 : precedence(FormulaKind::Not), out);
            if (parens) out += ")";
            return;
        }
        case FormulaKind::And:
        case FormulaKind::Or:
        case FormulaKind::Implies: {
            const int prec = precedence(f.kind);
            const bool parens = prec < parent_prec;
            if (parens) out += "(";
            // Left operand of a right-associative => must bind tighter.
            const int left_need = f.kind == FormulaKind::Implies ? prec + 1 : prec;
            print_rec(f.children[0], left_need, out);
            out += f.kind == FormulaKind::And ? " & " : f.kind == FormulaKind::Or ? " | " : " => ";
            print_rec(f.children[1], f.kind == FormulaKind::Implies ? prec : prec + 1, out);
            if (parens) out += ")";
            return;
        }
        default: return;
    }
}

void check_resolved(const Formula& f) {
    switch (f.kind) {
        case FormulaKind::EdgeAtom:
        case FormulaKind::EqAtom:
        case FormulaKind::MemberAtom:
            if (f.slot < 0 || f.slot2 < 0)
                throw FreeVariable("unresolved variable occurrence: " + f.var + "/" + f.var2);
            return;
        default:
            for (const auto& child : f.children) check_resolved(child);
    }
}

}  // namespace

Formula parse_formula(const std::string& text) { return Parser(text).parse(); }

std::string print_formula(const Formula& f) {
    std::string out;
    print_rec(f, 0, out);
    return out;
}

std::size_t rank(const Formula& f) {
    check_resolved(f);
    struct Walk {
        static std::size_t depth(const Formula& node) {
            std::size_t best = 0;
            for (const auto& child : node.children) best = std::max(best, depth(child));
            return best + (is_quantifier(node.kind) ? 1 : 0);
        }
    };
    return Walk::depth(f);
}

const Formula& chi() {
    static const Formula formula = parse_formula(
        "forall x. exists y. (x -> y) & (forall z. z != y => !(x -> z))");
    return formula;
}

namespace {

void slot_counts(const Formula& f, std::size_t& points, std::size_t& sets,
                 std::size_t cur_points, std::size_t cur_sets, bool& any_set) {
    if (is_quantifier(f.kind)) {
        const bool is_set = f.kind == FormulaKind::ExistsSet || f.kind == FormulaKind::ForallSet;
        if (is_set) {
            any_set = true;
            ++cur_sets;
        } else {
            ++cur_points;
        }
        points = std::max(points, cur_points);
        sets = std::max(sets, cur_sets);
    }
    for (const auto& child : f.children)
        slot_counts(child, points, sets, cur_points, cur_sets, any_set);
}

}  // namespace

std::size_t point_slot_count(const Formula& f) {
    std::size_t points = 0, sets = 0;
    bool any = false;
    slot_counts(f, points, sets, 0, 0, any);
    return points;
}

std::size_t set_slot_count(const Formula& f) {
    std::size_t points = 0, sets = 0;
    bool any = false;
    slot_counts(f, points, sets, 0, 0, any);
    return sets;
}

bool has_set_quantifier(const Formula& f) {
    std::size_t points = 0, sets = 0;
    bool any = false;
    slot_counts(f, points, sets, 0, 0, any);
    return any;
}

}  // namespace netglue
