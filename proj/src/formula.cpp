#include "casebcl/formula.hpp"

#include <cctype>
#include <optional>
#include <utility>

#include "casebcl/errors.hpp"

namespace casebcl {

Formula Formula::atom(Atom p) {
    if (p >= kMaxAtoms) throw UsageError("atom index out of range");
    return Formula(std::make_shared<const Node>(Node{Kind::Atom, p, Outcome::Undecided, {}, {}}));
}

Formula Formula::outcome(Outcome x) {
    return Formula(std::make_shared<const Node>(Node{Kind::Outcome, 0, x, {}, {}}));
}

Formula Formula::negation(Formula f) {
    return Formula(std::make_shared<const Node>(Node{Kind::Not, 0, Outcome::Undecided, {}, {std::move(f)}}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
    return Formula(
        std::make_shared<const Node>(Node{Kind::And, 0, Outcome::Undecided, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::box(AtomSet w, Formula f) {
    return Formula(std::make_shared<const Node>(Node{Kind::Box, 0, Outcome::Undecided, w, {std::move(f)}}));
}

std::size_t Formula::size() const {
    std::size_t n = 1;
    for (const auto& c : node_->children) n += c.size();
    return n;
}

AtomSet Formula::atoms_used() const {
    AtomSet out;
    switch (kind()) {
        case Kind::Atom: return AtomSet::single(atom_index());
        case Kind::Outcome: return out;
        case Kind::Box: out = box_atoms(); break;
        default: break;
    }
    for (const auto& c : node_->children) out |= c.atoms_used();
    return out;
}

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case Formula::Kind::Atom: return a.atom_index() == b.atom_index();
        case Formula::Kind::Outcome: return a.outcome_value() == b.outcome_value();
        case Formula::Kind::Not: return a.operand() == b.operand();
        case Formula::Kind::And: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
        case Formula::Kind::Box: return a.box_atoms() == b.box_atoms() && a.operand() == b.operand();
    }
    return false;
}

Formula lor(Formula a, Formula b) { return lnot(land(lnot(std::move(a)), lnot(std::move(b)))); }

Formula implies(Formula a, Formula b) { return lnot(land(std::move(a), lnot(std::move(b)))); }

Formula iff(Formula a, Formula b) { return land(implies(a, b), implies(b, a)); }

Formula diamond(AtomSet w, Formula f) { return lnot(box(w, lnot(std::move(f)))); }

Formula top() { return implies(outcome(Outcome::Plaintiff), outcome(Outcome::Plaintiff)); }

Formula bottom() { return land(outcome(Outcome::Plaintiff), lnot(outcome(Outcome::Plaintiff))); }

Formula big_and(std::span<const Formula> fs) {
    if (fs.empty()) return top();
    Formula acc = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) acc = land(acc, fs[i]);
    return acc;
}

Formula big_or(std::span<const Formula> fs) {
    if (fs.empty()) return bottom();
    Formula acc = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) acc = lor(acc, fs[i]);
    return acc;
}

Formula term_to_formula(const Term& t) {
    std::vector<Formula> lits;
    for (Atom p : t.positive().members()) lits.push_back(atom(p));
    for (Atom p : t.negative().members()) lits.push_back(lnot(atom(p)));
    return big_and(lits);
}

Formula describe_state(AtomSet s, const Signature& sig) {
    return term_to_formula(Term::of_state(s, sig.all()));
}

// ---------------------------------------------------------------------------
// Printing

namespace {

const Formula* diamond_body(const Formula& f) {
    if (f.kind() != Formula::Kind::Not) return nullptr;
    const Formula& b = f.operand();
    if (b.kind() != Formula::Kind::Box || b.operand().kind() != Formula::Kind::Not) return nullptr;
    return &b.operand().operand();
}

bool is_or(const Formula& f) {
    if (f.kind() != Formula::Kind::Not) return false;
    const Formula& c = f.operand();
    return c.kind() == Formula::Kind::And && c.lhs().kind() == Formula::Kind::Not &&
           c.rhs().kind() == Formula::Kind::Not;
}

bool is_implies(const Formula& f) {
    if (f.kind() != Formula::Kind::Not) return false;
    const Formula& c = f.operand();
    return c.kind() == Formula::Kind::And && c.rhs().kind() == Formula::Kind::Not;
}

class Printer {
public:
    explicit Printer(const Signature& sig) : sig_(sig) {}

    void print(const Formula& f) {
        if (f == top()) {
            out += "true";
            return;
        }
        if (f == bottom()) {
            out += "false";
            return;
        }
        switch (f.kind()) {
            case Formula::Kind::Atom: out += sig_.name(f.atom_index()); return;
            case Formula::Kind::Outcome:
                out += "t(";
                out += to_string(f.outcome_value());
                out += ')';
                return;
            case Formula::Kind::Box:
                modal('[', ']', f.box_atoms());
                print(f.operand());
                return;
            case Formula::Kind::And: return chain(f, " & ", [](const Formula& g) -> std::pair<const Formula*, const Formula*> {
                if (g.kind() != Formula::Kind::And) return {nullptr, nullptr};
                return {&g.lhs(), &g.rhs()};
            });
            case Formula::Kind::Not: break;
        }
        if (const Formula* body = diamond_body(f)) {
            modal('<', '>', f.operand().box_atoms());
            print(*body);
        } else if (is_or(f)) {
            chain(f, " | ", [](const Formula& g) -> std::pair<const Formula*, const Formula*> {
                if (!is_or(g)) return {nullptr, nullptr};
                return {&g.operand().lhs().operand(), &g.operand().rhs().operand()};
            });
        } else if (is_implies(f)) {
            out += '(';
            print(f.operand().lhs());
            out += " -> ";
            print(f.operand().rhs().operand());
            out += ')';
        } else {
            out += '~';
            print(f.operand());
        }
    }

    std::string out;

private:
    void modal(char open, char close, AtomSet w) {
        out += open;
        bool first = true;
        for (Atom p : w.members()) {
            if (!first) out += ", ";
            out += sig_.name(p);
            first = false;
        }
        out += close;
        out += ' ';
    }

    // Flattens the left spine of a binary chain recognised by split.
    template <typename Split>
    void chain(const Formula& f, std::string_view sep, Split split) {
        std::vector<const Formula*> items;
        const Formula* cur = &f;
        while (true) {
            auto [l, r] = split(*cur);
            if (!l) break;
            items.push_back(r);
            cur = l;
        }
        items.push_back(cur);
        out += '(';
        for (auto it = items.rbegin(); it != items.rend(); ++it) {
            if (it != items.rbegin()) out += sep;
            print(**it);
        }
        out += ')';
    }

    const Signature& sig_;
};

}  // namespace

std::string print_formula(const Formula& f, const Signature& sig) {
    Printer p(sig);
    p.print(f);
    return std::move(p.out);
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { Ident, Outcome, Not, And, Or, Imp, Iff, LBrack, RBrack, LAngle, RAngle, Comma, LParen, RParen, End };

struct Token {
    Tok kind;
    std::size_t pos;
    std::string text;
    Outcome value = Outcome::Undecided;
};

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool ident_char(unsigned char c) { return std::isalnum(c) || c == '_' || c >= 0x80; }

constexpr std::pair<std::string_view, Tok> kUnicodeConnectives[] = {
    {"¬", Tok::Not}, {"∧", Tok::And}, {"∨", Tok::Or}, {"→", Tok::Imp}, {"↔", Tok::Iff}, {"⟨", Tok::LAngle}, {"⟩", Tok::RAngle},
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ >= text_.size()) return {Tok::End, start, ""};
        const char c = text_[pos_];
        auto single = [&](Tok k) {
            ++pos_;
            return Token{k, start, std::string(1, c)};
        };
        switch (c) {
            case '~': return single(Tok::Not);
            case '&': return single(Tok::And);
            case '|': return single(Tok::Or);
            case '[': return single(Tok::LBrack);
            case ']': return single(Tok::RBrack);
            case '>': return single(Tok::RAngle);
            case ',': return single(Tok::Comma);
            case '(': return single(Tok::LParen);
            case ')': return single(Tok::RParen);
            case '-':
                if (text_.substr(pos_, 2) == "->") {
                    pos_ += 2;
                    return {Tok::Imp, start, "->"};
                }
                throw ParseError("unexpected character '-'", start);
            case '<':
                if (text_.substr(pos_, 3) == "<->") {
                    pos_ += 3;
                    return {Tok::Iff, start, "<->"};
                }
                return single(Tok::LAngle);
            default: break;
        }
        for (const auto& [symbol, kind] : kUnicodeConnectives) {
            if (text_.substr(pos_, symbol.size()) == symbol) {
                pos_ += symbol.size();
                return {kind, start, std::string(symbol)};
            }
        }
        if (!ident_start(static_cast<unsigned char>(c))) {
            throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
        while (pos_ < text_.size() && ident_char(static_cast<unsigned char>(text_[pos_])) && !at_connective()) ++pos_;
        std::string word(text_.substr(start, pos_ - start));
        if (word == "t") {
            const std::size_t after = pos_;
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '(') return outcome_atom(start);
            pos_ = after;
        }
        return {Tok::Ident, start, std::move(word)};
    }

private:
    bool at_connective() const {
        for (const auto& entry : kUnicodeConnectives) {
            if (text_.substr(pos_, entry.first.size()) == entry.first) return true;
        }
        return false;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    // Positioned just before the '(' of t(x).
    Token outcome_atom(std::size_t start) {
        ++pos_;
        skip_ws();
        const std::size_t value_pos = pos_;
        std::optional<Outcome> x;
        if (pos_ < text_.size()) x = outcome_from_string(text_.substr(pos_, 1));
        if (!x) throw ParseError("malformed outcome value, expected t(1), t(0) or t(?)", value_pos);
        ++pos_;
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != ')') {
            throw ParseError("malformed outcome value, expected ')'", pos_);
        }
        ++pos_;
        return {Tok::Outcome, start, std::string(text_.substr(start, pos_ - start)), *x};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    Parser(std::string_view text, const Signature& sig) : lex_(text), sig_(sig) { advance(); }

    Formula parse() {
        Formula f = parse_iff();
        if (cur_.kind != Tok::End) fail("unexpected '" + cur_.text + "' after formula");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, cur_.pos); }

    void advance() { cur_ = lex_.next(); }

    void expect(Tok k, std::string_view what) {
        if (cur_.kind != k) {
            fail("expected " + std::string(what) + (cur_.kind == Tok::End ? " at end of input" : ", found '" + cur_.text + "'"));
        }
        advance();
    }

    Formula parse_iff() {
        Formula f = parse_imp();
        while (cur_.kind == Tok::Iff) {
            advance();
            f = iff(f, parse_imp());
        }
        return f;
    }

    Formula parse_imp() {
        Formula f = parse_or();
        if (cur_.kind == Tok::Imp) {
            advance();
            return implies(f, parse_imp());
        }
        return f;
    }

    Formula parse_or() {
        Formula f = parse_and();
        while (cur_.kind == Tok::Or) {
            advance();
            f = lor(f, parse_and());
        }
        return f;
    }

    Formula parse_and() {
        Formula f = parse_unary();
        while (cur_.kind == Tok::And) {
            advance();
            f = land(f, parse_unary());
        }
        return f;
    }

    Formula parse_unary() {
        switch (cur_.kind) {
            case Tok::Not: advance(); return lnot(parse_unary());
            case Tok::LBrack: {
                advance();
                AtomSet w = parse_atoms(Tok::RBrack, "']'");
                return box(w, parse_unary());
            }
            case Tok::LAngle: {
                advance();
                AtomSet w = parse_atoms(Tok::RAngle, "'>'");
                return diamond(w, parse_unary());
            }
            default: return parse_prim();
        }
    }

    AtomSet parse_atoms(Tok close, std::string_view close_name) {
        AtomSet w;
        if (cur_.kind == close) {
            advance();
            return w;
        }
        if (cur_.kind == Tok::Ident && cur_.text == "∅" && !sig_.find(cur_.text)) {
            advance();
            expect(close, close_name);
            return w;
        }
        while (true) {
            if (cur_.kind != Tok::Ident) fail("expected factor name in modality");
            w = w.with(lookup(cur_));
            advance();
            if (cur_.kind == Tok::Comma) {
                advance();
                continue;
            }
            expect(close, close_name);
            return w;
        }
    }

    Atom lookup(const Token& t) {
        if (auto a = sig_.find(t.text)) return *a;
        throw ParseError("unknown atom '" + t.text + "'", t.pos);
    }

    Formula parse_prim() {
        switch (cur_.kind) {
            case Tok::Ident: {
                Token t = cur_;
                advance();
                if (!sig_.find(t.text)) {
                    if (t.text == "true") return top();
                    if (t.text == "false") return bottom();
                }
                return atom(lookup(t));
            }
            case Tok::Outcome: {
                Outcome x = cur_.value;
                advance();
                return outcome(x);
            }
            case Tok::LParen: {
                advance();
                Formula f = parse_iff();
                expect(Tok::RParen, "')'");
                return f;
            }
            case Tok::End: fail("unexpected end of input");
            default: fail("unexpected '" + cur_.text + "'");
        }
    }

    Lexer lex_;
    const Signature& sig_;
    Token cur_{Tok::End, 0, ""};
};

}  // namespace

Formula parse_formula(std::string_view text, const Signature& sig) { return Parser(text, sig).parse(); }

}  // namespace casebcl
