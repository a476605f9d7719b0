#include "hypgroup/group_spec.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace hypgroup {

namespace {

struct Token {
    enum Kind { Ident, Int, LParen, RParen, Comma, End } kind;
    std::size_t pos;
    std::string text;
    std::int64_t value = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::size_t start = pos_;
        if (pos_ >= text_.size()) return {Token::End, start, "end of input"};
        char c = text_[pos_];
        if (c == '(') { ++pos_; return {Token::LParen, start, "("}; }
        if (c == ')') { ++pos_; return {Token::RParen, start, ")"}; }
        if (c == ',') { ++pos_; return {Token::Comma, start, ","}; }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return {Token::Ident, start, text_.substr(start, pos_ - start)};
        }
        if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t p = pos_ + 1;
            while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
            std::string digits = text_.substr(pos_, p - pos_);
            if (digits == "-" || digits == "+")
                throw SyntaxError(start, "integer", "'" + digits + "'");
            if (digits.size() > 18)
                throw SyntaxError(start, "integer of at most 18 digits", "'" + digits + "'");
            pos_ = p;
            return {Token::Int, start, digits, std::stoll(digits)};
        }
        throw SyntaxError(start, "token", std::string("'") + c + "'");
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lexer_(text) { advance(); }

    GroupSpecPtr parse() {
        GroupSpecPtr spec = parse_spec(0);
        expect(Token::End, "end of input");
        return spec;
    }

private:
    void advance() { current_ = lexer_.next(); }

    Token expect(Token::Kind kind, const std::string& what) {
        if (current_.kind != kind)
            throw SyntaxError(current_.pos, what, describe(current_));
        Token t = current_;
        if (kind != Token::End) advance();
        return t;
    }

    static std::string describe(const Token& t) {
        if (t.kind == Token::End) return "end of input";
        return "'" + t.text + "'";
    }

    std::int64_t parse_int() { return expect(Token::Int, "integer").value; }

    GroupSpecPtr parse_spec(int depth) {
        if (depth > 64) throw LimitExceeded("group description nested deeper than 64");
        Token head = expect(Token::Ident, "model name (free, zpow, z, cyclic, prod, fprod)");
        auto node = std::make_shared<GroupSpecNode>();
        expect(Token::LParen, "'('");
        if (head.text == "free" || head.text == "zpow") {
            node->kind = head.text == "free" ? ModelKind::Free : ModelKind::ZPow;
            node->arg = parse_int();
            if (node->arg < 1) throw SemanticError(head.text + " rank must be >= 1");
        } else if (head.text == "cyclic") {
            node->kind = ModelKind::CyclicFull;
            node->arg = parse_int();
            if (node->arg < 2) throw SemanticError("cyclic modulus must be >= 2");
        } else if (head.text == "z") {
            node->kind = ModelKind::ZGens;
            node->gens.push_back(parse_int());
            while (current_.kind == Token::Comma) {
                advance();
                node->gens.push_back(parse_int());
            }
            for (std::int64_t g : node->gens)
                if (g == 0) throw SemanticError("z generators must be nonzero");
            std::int64_t g = 0;
            for (std::int64_t v : node->gens) g = std::gcd(g, v < 0 ? -v : v);
            if (g != 1)
                throw SemanticError("z generators have gcd " + std::to_string(g) +
                                    "; they do not generate the full group");
        } else if (head.text == "prod" || head.text == "fprod") {
            node->kind = head.text == "prod" ? ModelKind::Prod : ModelKind::FProd;
            node->left = parse_spec(depth + 1);
            expect(Token::Comma, "','");
            node->right = parse_spec(depth + 1);
        } else {
            throw SyntaxError(head.pos, "model name (free, zpow, z, cyclic, prod, fprod)",
                              "'" + head.text + "'");
        }
        expect(Token::RParen, "')'");
        return node;
    }

    Lexer lexer_;
    Token current_;
};

} // namespace

GroupSpecPtr parse_group_spec(const std::string& text) {
    return Parser(text).parse();
}

std::string spec_to_string(const GroupSpecNode& spec) {
    switch (spec.kind) {
    case ModelKind::Free: return "free(" + std::to_string(spec.arg) + ")";
    case ModelKind::ZPow: return "zpow(" + std::to_string(spec.arg) + ")";
    case ModelKind::CyclicFull: return "cyclic(" + std::to_string(spec.arg) + ")";
    case ModelKind::ZGens: {
        std::string s = "z(";
        for (std::size_t i = 0; i < spec.gens.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(spec.gens[i]);
        }
        return s + ")";
    }
    case ModelKind::Prod:
        return "prod(" + spec_to_string(*spec.left) + "," + spec_to_string(*spec.right) + ")";
    case ModelKind::FProd:
        return "fprod(" + spec_to_string(*spec.left) + "," + spec_to_string(*spec.right) + ")";
    }
    throw Error("unreachable model kind");
}

int spec_depth(const GroupSpecNode& spec) {
    if (spec.kind == ModelKind::Prod || spec.kind == ModelKind::FProd)
        return 1 + std::max(spec_depth(*spec.left), spec_depth(*spec.right));
    return 1;
}

} // namespace hypgroup
