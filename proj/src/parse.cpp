#include "a1deg/parse.hpp"

#include "a1deg/errors.hpp"

#include <cctype>

namespace a1deg {

namespace {

constexpr long kMaxExponent = 1024;

struct Token {
    enum class Kind { integer, rational, variable, plus, minus, star, caret,
                      slash, lparen, rparen, end };
    Kind kind;
    std::size_t pos;
    BigInt num;
    BigInt den;
};

std::vector<Token> lex(const std::string& text)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = i;
            BigInt v = 0;
            while (i < text.size() &&
                   std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                ++i;
            }
            out.push_back({Token::Kind::integer, start, v, 1});
            continue;
        }
        Token::Kind kind;
        switch (c) {
        case 'x': kind = Token::Kind::variable; break;
        case '+': kind = Token::Kind::plus; break;
        case '-': kind = Token::Kind::minus; break;
        case '*': kind = Token::Kind::star; break;
        case '^': kind = Token::Kind::caret; break;
        case '/': kind = Token::Kind::slash; break;
        case '(': kind = Token::Kind::lparen; break;
        case ')': kind = Token::Kind::rparen; break;
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({kind, i, 0, 1});
        ++i;
    }
    out.push_back({Token::Kind::end, text.size(), 0, 1});
    return out;
}

// Fold integer '/' integer into one rational literal, except when the
// first integer is an exponent (previous token '^').
std::vector<Token> fuse_rational_literals(const std::vector<Token>& in)
{
    std::vector<Token> out;
    out.reserve(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
        const bool literal_head =
            in[i].kind == Token::Kind::integer &&
            (out.empty() || out.back().kind != Token::Kind::caret) &&
            i + 2 < in.size() && in[i + 1].kind == Token::Kind::slash &&
            in[i + 2].kind == Token::Kind::integer;
        if (literal_head) {
            if (in[i + 2].num == 0)
                throw ParseError("rational literal with zero denominator",
                                 in[i + 2].pos);
            out.push_back({Token::Kind::rational, in[i].pos, in[i].num,
                           in[i + 2].num});
            i += 2;
            continue;
        }
        out.push_back(in[i]);
    }
    return out;
}

class ExprParser {
  public:
    ExprParser(const Field& k, std::vector<Token> tokens)
        : field_(k), tokens_(std::move(tokens)) {}

    Polynomial parse_all()
    {
        Polynomial p = parse_expr();
        if (peek().kind != Token::Kind::end)
            throw ParseError("unexpected token", peek().pos);
        return p;
    }

  private:
    const Token& peek() const { return tokens_[idx_]; }
    const Token& take() { return tokens_[idx_++]; }
    bool accept(Token::Kind k)
    {
        if (peek().kind != k)
            return false;
        ++idx_;
        return true;
    }

    Polynomial parse_expr()
    {
        Polynomial acc = parse_term();
        while (true) {
            if (accept(Token::Kind::plus))
                acc = acc + parse_term();
            else if (accept(Token::Kind::minus))
                acc = acc - parse_term();
            else
                return acc;
        }
    }

    Polynomial parse_term()
    {
        Polynomial acc = parse_factor();
        while (accept(Token::Kind::star))
            acc = acc * parse_factor();
        return acc;
    }

    Polynomial parse_factor()
    {
        if (accept(Token::Kind::minus))
            return Polynomial::zero(field_) - parse_factor();
        if (accept(Token::Kind::plus))
            return parse_factor();
        return parse_power();
    }

    Polynomial parse_power()
    {
        Polynomial base = parse_primary();
        if (!accept(Token::Kind::caret))
            return base;
        const Token& e = peek();
        if (e.kind != Token::Kind::integer)
            throw ParseError("exponent must be a nonnegative integer", e.pos);
        if (e.num > kMaxExponent)
            throw ParseError("exponent too large", e.pos);
        take();
        const long n = static_cast<long>(e.num);
        Polynomial acc = Polynomial::constant(FieldElement::from_integer(field_, 1));
        for (long t = 0; t < n; ++t)
            acc = acc * base;
        return acc;
    }

    Polynomial parse_primary()
    {
        const Token& t = peek();
        switch (t.kind) {
        case Token::Kind::integer:
            take();
            return Polynomial::constant(FieldElement::from_integer(field_, t.num));
        case Token::Kind::rational:
            take();
            try {
                return Polynomial::constant(
                    FieldElement::from_rational(field_, BigRat(t.num, t.den)));
            } catch (const DomainError&) {
                // e.g. 1/7 over F_7: the literal has no value in the field.
                throw ParseError("literal denominator vanishes in the field",
                                 t.pos);
            }
        case Token::Kind::variable:
            take();
            return Polynomial::x(field_);
        case Token::Kind::lparen: {
            take();
            Polynomial inner = parse_expr();
            if (!accept(Token::Kind::rparen))
                throw ParseError("missing ')'", peek().pos);
            return inner;
        }
        case Token::Kind::slash:
            throw ParseError("'/' is only allowed once, at the top level", t.pos);
        default:
            throw ParseError("expected a number, 'x', or '('", t.pos);
        }
    }

    Field field_;
    std::vector<Token> tokens_;
    std::size_t idx_ = 0;
};

Polynomial parse_side(const Field& k, std::vector<Token> tokens,
                      std::size_t start_pos)
{
    if (tokens.size() <= 1)
        throw ParseError("empty expression", start_pos);
    return ExprParser(k, std::move(tokens)).parse_all();
}

} // namespace

ParsedFunction parse_rational_function(const std::string& text, const Field& k)
{
    const std::vector<Token> tokens = fuse_rational_literals(lex(text));

    // Locate the top-level separator, if any.
    std::size_t sep = tokens.size();
    int depth = 0;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        switch (tokens[i].kind) {
        case Token::Kind::lparen: ++depth; break;
        case Token::Kind::rparen: --depth; break;
        case Token::Kind::slash:
            if (depth == 0) {
                if (sep != tokens.size())
                    throw ParseError("a second '/' at the top level",
                                     tokens[i].pos);
                sep = i;
            }
            break;
        default: break;
        }
    }

    const Token end_token{Token::Kind::end, text.size(), 0, 1};
    std::vector<Token> left, right;
    if (sep == tokens.size()) {
        left = tokens;
    } else {
        left.assign(tokens.begin(), tokens.begin() + static_cast<long>(sep));
        left.push_back(end_token);
        right.assign(tokens.begin() + static_cast<long>(sep) + 1, tokens.end());
    }

    Polynomial f = parse_side(k, std::move(left), 0);
    Polynomial g = (sep == tokens.size())
                       ? Polynomial::constant(FieldElement::from_integer(k, 1))
                       : parse_side(k, std::move(right), tokens[sep].pos + 1);
    return ParsedFunction{std::move(f), std::move(g)};
}

FieldElement parse_field_element(const std::string& text, const Field& k)
{
    ParsedFunction p = parse_rational_function(text, k);
    if (p.numerator.degree() > 0 || p.denominator.degree() > 0)
        throw ParseError("expected a constant, found 'x'", 0);
    const FieldElement den = p.denominator.coeff(0);
    if (den.is_zero())
        throw ParseError("constant with zero denominator", 0);
    return p.numerator.coeff(0) / den;
}

std::vector<RootDatum> parse_roots_list(const std::string& text, const Field& k)
{
    std::vector<RootDatum> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos)
            comma = text.size();
        const std::string item = text.substr(start, comma - start);
        const std::size_t colon = item.find(':');
        const std::string root_text =
            colon == std::string::npos ? item : item.substr(0, colon);
        if (root_text.find_first_not_of(" \t") == std::string::npos)
            throw ParseError("empty root entry", start);
        int mult = 1;
        if (colon != std::string::npos) {
            const std::string mult_text = item.substr(colon + 1);
            std::size_t used = 0;
            try {
                mult = std::stoi(mult_text, &used);
            } catch (const std::exception&) {
                throw ParseError("multiplicity must be a positive integer",
                                 start + colon + 1);
            }
            if (used != mult_text.size() || mult < 1 || mult > 100)
                throw ParseError("multiplicity must be a positive integer",
                                 start + colon + 1);
        }
        out.push_back(RootDatum{parse_field_element(root_text, k), mult});
        if (comma == text.size())
            break;
        start = comma + 1;
    }
    if (out.empty())
        throw ParseError("empty roots list", 0);
    return out;
}

} // namespace a1deg
