#include "siglat/dsl/parser.hpp"

#include <cctype>
#include <optional>

namespace siglat::dsl {

ParseError::ParseError(SourcePos pos, std::string expected, std::string found)
    : std::runtime_error("parse error at line " + std::to_string(pos.line) + ", column " +
                         std::to_string(pos.col) + ": expected " + expected + ", found " +
                         found),
      pos_(pos),
      expected_(std::move(expected)) {}

namespace {

enum class Tok {
    Ident, Int,
    KwSpace, KwVar, KwLet, KwConstrain, KwCheck, KwDiscrete, KwTrivial,
    Star, Caret, Pipe, EqEq, LessEq, Assign, Colon, Comma,
    LParen, RParen, LBrace, RBrace,
    End,
};

std::string token_class(Tok t) {
    switch (t) {
        case Tok::Ident: return "identifier";
        case Tok::Int: return "integer";
        case Tok::KwSpace: return "'space'";
        case Tok::KwVar: return "'var'";
        case Tok::KwLet: return "'let'";
        case Tok::KwConstrain: return "'constrain'";
        case Tok::KwCheck: return "'check'";
        case Tok::KwDiscrete: return "'discrete'";
        case Tok::KwTrivial: return "'trivial'";
        case Tok::Star: return "'*'";
        case Tok::Caret: return "'^'";
        case Tok::Pipe: return "'|'";
        case Tok::EqEq: return "'=='";
        case Tok::LessEq: return "'<='";
        case Tok::Assign: return "'='";
        case Tok::Colon: return "':'";
        case Tok::Comma: return "','";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::LBrace: return "'{'";
        case Tok::RBrace: return "'}'";
        case Tok::End: return "end of input";
    }
    return "?";
}

struct Token {
    Tok kind;
    std::string text;
    SourcePos pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_blank();
        SourcePos pos{line_, col_};
        if (at_end()) return {Tok::End, "", pos};
        char c = peek();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string word;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
                word += advance();
            return {keyword_of(word), word, pos};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
                num += advance();
            return {Tok::Int, num, pos};
        }
        advance();
        switch (c) {
            case '*': return {Tok::Star, "*", pos};
            case '^': return {Tok::Caret, "^", pos};
            case '|': return {Tok::Pipe, "|", pos};
            case ':': return {Tok::Colon, ":", pos};
            case ',': return {Tok::Comma, ",", pos};
            case '(': return {Tok::LParen, "(", pos};
            case ')': return {Tok::RParen, ")", pos};
            case '{': return {Tok::LBrace, "{", pos};
            case '}': return {Tok::RBrace, "}", pos};
            case '=':
                if (!at_end() && peek() == '=') { advance(); return {Tok::EqEq, "==", pos}; }
                return {Tok::Assign, "=", pos};
            case '<':
                if (!at_end() && peek() == '=') { advance(); return {Tok::LessEq, "<=", pos}; }
                throw ParseError(pos, "'<='", "'<'");
            default:
                throw ParseError(pos, "a token", "'" + std::string(1, c) + "'");
        }
    }

private:
    bool at_end() const { return i_ >= text_.size(); }
    char peek() const { return text_[i_]; }

    char advance() {
        char c = text_[i_++];
        if (c == '\n') { ++line_; col_ = 1; }
        else ++col_;
        return c;
    }

    void skip_blank() {
        while (!at_end()) {
            char c = peek();
            if (c == '#') {
                while (!at_end() && peek() != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    static Tok keyword_of(const std::string& word) {
        if (word == "space") return Tok::KwSpace;
        if (word == "var") return Tok::KwVar;
        if (word == "let") return Tok::KwLet;
        if (word == "constrain") return Tok::KwConstrain;
        if (word == "check") return Tok::KwCheck;
        if (word == "discrete") return Tok::KwDiscrete;
        if (word == "trivial") return Tok::KwTrivial;
        return Tok::Ident;
    }

    std::string_view text_;
    std::size_t i_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) { bump(); }

    Script script() {
        Script out;
        while (cur_.kind != Tok::End) {
            switch (cur_.kind) {
                case Tok::KwSpace: out.spaces.push_back(space_decl()); break;
                case Tok::KwVar: out.vars.push_back(var_decl()); break;
                case Tok::KwLet: out.lets.push_back(let_decl()); break;
                case Tok::KwConstrain: out.constraints.push_back(constrain_decl()); break;
                case Tok::KwCheck: out.checks.push_back(check_decl()); break;
                default:
                    throw ParseError(cur_.pos, "a statement ('space', 'var', 'let', 'constrain' or 'check')",
                                     found());
            }
        }
        return out;
    }

    std::vector<std::vector<int>> bare_partition() {
        auto blocks = partition_literal();
        expect(Tok::End);
        return blocks;
    }

private:
    void bump() { cur_ = lexer_.next(); }

    std::string found() const {
        return cur_.kind == Tok::End ? "end of input" : "'" + cur_.text + "'";
    }

    Token expect(Tok kind) {
        if (cur_.kind != kind) throw ParseError(cur_.pos, token_class(kind), found());
        Token t = cur_;
        bump();
        return t;
    }

    int integer() {
        Token t = expect(Tok::Int);
        try {
            return std::stoi(t.text);
        } catch (const std::out_of_range&) {
            throw ParseError(t.pos, "an integer in range", "'" + t.text + "'");
        }
    }

    SpaceDecl space_decl() {
        SourcePos pos = cur_.pos;
        expect(Tok::KwSpace);
        std::string name = expect(Tok::Ident).text;
        expect(Tok::Assign);
        int size = integer();
        return {std::move(name), size, pos};
    }

    VarDecl var_decl() {
        SourcePos pos = cur_.pos;
        expect(Tok::KwVar);
        std::string name = expect(Tok::Ident).text;
        expect(Tok::Colon);
        std::string space = expect(Tok::Ident).text;
        return {std::move(name), std::move(space), pos};
    }

    LetDecl let_decl() {
        SourcePos pos = cur_.pos;
        expect(Tok::KwLet);
        std::string name = expect(Tok::Ident).text;
        expect(Tok::Assign);
        auto blocks = partition_literal();
        expect(Tok::Colon);
        std::string space = expect(Tok::Ident).text;
        return {std::move(name), std::move(blocks), std::move(space), pos};
    }

    ConstrainDecl constrain_decl() {
        SourcePos pos = cur_.pos;
        expect(Tok::KwConstrain);
        std::string finer = expect(Tok::Ident).text;
        expect(Tok::LessEq);
        std::string coarser = expect(Tok::Ident).text;
        return {std::move(finer), std::move(coarser), pos};
    }

    CheckDecl check_decl() {
        SourcePos pos = cur_.pos;
        expect(Tok::KwCheck);
        ExprPtr lhs = expr();
        Relation rel;
        if (cur_.kind == Tok::EqEq) { rel = Relation::Equal; bump(); }
        else if (cur_.kind == Tok::LessEq) { rel = Relation::Sub; bump(); }
        else throw ParseError(cur_.pos, "'==' or '<='", found());
        ExprPtr rhs = expr();
        return {std::move(lhs), rel, std::move(rhs), pos};
    }

    std::vector<std::vector<int>> partition_literal() {
        expect(Tok::LBrace);
        std::vector<std::vector<int>> blocks;
        blocks.push_back(block_literal());
        while (cur_.kind == Tok::Comma) {
            bump();
            blocks.push_back(block_literal());
        }
        expect(Tok::RBrace);
        return blocks;
    }

    std::vector<int> block_literal() {
        expect(Tok::LBrace);
        std::vector<int> points;
        points.push_back(integer());
        while (cur_.kind == Tok::Comma) {
            bump();
            points.push_back(integer());
        }
        expect(Tok::RBrace);
        return points;
    }

    ExprPtr expr() { return join_expr(); }

    ExprPtr join_expr() {
        ExprPtr lhs = meet_expr();
        while (cur_.kind == Tok::Pipe) {
            SourcePos pos = cur_.pos;
            bump();
            lhs = binary(BinOp::Join, std::move(lhs), meet_expr(), pos);
        }
        return lhs;
    }

    ExprPtr meet_expr() {
        ExprPtr lhs = prod_expr();
        while (cur_.kind == Tok::Caret) {
            SourcePos pos = cur_.pos;
            bump();
            lhs = binary(BinOp::Meet, std::move(lhs), prod_expr(), pos);
        }
        return lhs;
    }

    ExprPtr prod_expr() {
        ExprPtr lhs = atom_expr();
        while (cur_.kind == Tok::Star) {
            SourcePos pos = cur_.pos;
            bump();
            lhs = binary(BinOp::Product, std::move(lhs), atom_expr(), pos);
        }
        return lhs;
    }

    ExprPtr atom_expr() {
        SourcePos pos = cur_.pos;
        switch (cur_.kind) {
            case Tok::Ident: {
                std::string name = cur_.text;
                bump();
                return make(VarRef{std::move(name)}, pos);
            }
            case Tok::KwDiscrete:
            case Tok::KwTrivial: {
                ConstKind kind = cur_.kind == Tok::KwDiscrete ? ConstKind::Discrete
                                                              : ConstKind::Trivial;
                bump();
                expect(Tok::LParen);
                std::string space = expect(Tok::Ident).text;
                expect(Tok::RParen);
                return make(ConstAlg{kind, std::move(space)}, pos);
            }
            case Tok::LParen: {
                bump();
                ExprPtr inner = expr();
                expect(Tok::RParen);
                return inner;
            }
            default:
                throw ParseError(cur_.pos, "an expression", found());
        }
    }

    static ExprPtr make(std::variant<VarRef, ConstAlg, Binary> node, SourcePos pos) {
        auto e = std::make_unique<Expr>();
        e->node = std::move(node);
        e->pos = pos;
        return e;
    }

    static ExprPtr binary(BinOp op, ExprPtr lhs, ExprPtr rhs, SourcePos pos) {
        return make(Binary{op, std::move(lhs), std::move(rhs)}, pos);
    }

    Lexer lexer_;
    Token cur_{Tok::End, "", {}};
};

} // namespace

Script parse(std::string_view text) {
    return Parser(text).script();
}

std::vector<std::vector<int>> parse_partition_literal(std::string_view text) {
    return Parser(text).bare_partition();
}

} // namespace siglat::dsl
