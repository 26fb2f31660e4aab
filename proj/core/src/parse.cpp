#include "arcsmith/parse.hpp"

#include <cctype>

#include "arcsmith/errors.hpp"

namespace arcsmith {

namespace {

constexpr std::uint32_t kMaxExponent = 1'000'000;

struct Token {
    enum class Kind { number, ident, plus, minus, star, slash, caret, lparen,
                      rparen, end };
    Kind kind;
    std::string text;
    std::size_t column; // 1-based
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        const std::size_t col = pos_ + 1;
        if (pos_ >= src_.size()) return {Token::Kind::end, "", col};
        const char c = src_[pos_];
        switch (c) {
        case '+': ++pos_; return {Token::Kind::plus, "+", col};
        case '-': ++pos_; return {Token::Kind::minus, "-", col};
        case '*': ++pos_; return {Token::Kind::star, "*", col};
        case '/': ++pos_; return {Token::Kind::slash, "/", col};
        case '^': ++pos_; return {Token::Kind::caret, "^", col};
        case '(': ++pos_; return {Token::Kind::lparen, "(", col};
        case ')': ++pos_; return {Token::Kind::rparen, ")", col};
        default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            return {Token::Kind::number, std::string(src_.substr(start, pos_ - start)),
                    col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                    src_[pos_] == '_'))
                ++pos_;
            return {Token::Kind::ident, std::string(src_.substr(start, pos_ - start)),
                    col};
        }
        throw ParseError("syntax error at column " + std::to_string(col) +
                             ": unexpected character '" + std::string(1, c) + "'",
                         col);
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    Parser(std::string_view src, const CoefficientRing& ring,
           std::span<const std::string> vars)
        : lexer_(src), ring_(ring), vars_(vars), tok_(lexer_.next()) {}

    RationalFunction parse() {
        RationalFunction v = expr();
        expect(Token::Kind::end, "end of input");
        return v;
    }

private:
    void advance() { tok_ = lexer_.next(); }

    void expect(Token::Kind kind, const char* what) {
        if (tok_.kind != kind)
            throw ParseError("syntax error at column " + std::to_string(tok_.column) +
                                 ": expected " + what,
                             tok_.column);
        // callers advance themselves where needed
    }

    RationalFunction constant(Scalar c) const {
        return {SparsePoly::constant(ring_, vars_.size(), std::move(c)),
                SparsePoly::constant(ring_, vars_.size(), ring_.one())};
    }

    RationalFunction add(const RationalFunction& a, const RationalFunction& b) const {
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }

    RationalFunction mul(const RationalFunction& a, const RationalFunction& b) const {
        return {a.num * b.num, a.den * b.den};
    }

    RationalFunction div(const RationalFunction& a, const RationalFunction& b,
                         std::size_t col) const {
        if (b.num.is_zero())
            throw ParseError("division by zero at column " + std::to_string(col), col);
        return {a.num * b.den, a.den * b.num};
    }

    RationalFunction expr() {
        RationalFunction v = term();
        while (tok_.kind == Token::Kind::plus || tok_.kind == Token::Kind::minus) {
            bool minus = tok_.kind == Token::Kind::minus;
            advance();
            RationalFunction rhs = term();
            if (minus) rhs.num = rhs.num.negated();
            v = add(v, rhs);
        }
        return v;
    }

    RationalFunction term() {
        RationalFunction v = unary();
        while (tok_.kind == Token::Kind::star || tok_.kind == Token::Kind::slash) {
            bool slash = tok_.kind == Token::Kind::slash;
            std::size_t col = tok_.column;
            advance();
            RationalFunction rhs = unary();
            v = slash ? div(v, rhs, col) : mul(v, rhs);
        }
        return v;
    }

    RationalFunction unary() {
        bool negate = false;
        while (tok_.kind == Token::Kind::plus || tok_.kind == Token::Kind::minus) {
            if (tok_.kind == Token::Kind::minus) negate = !negate;
            advance();
        }
        RationalFunction v = power();
        if (negate) v.num = v.num.negated();
        return v;
    }

    RationalFunction power() {
        RationalFunction v = atom();
        if (tok_.kind == Token::Kind::caret) {
            advance();
            if (tok_.kind != Token::Kind::number)
                throw ParseError("syntax error at column " +
                                     std::to_string(tok_.column) +
                                     ": exponent must be a nonnegative integer",
                                 tok_.column);
            unsigned long long e = 0;
            for (char c : tok_.text) {
                e = e * 10 + static_cast<unsigned long long>(c - '0');
                if (e > kMaxExponent)
                    throw ParseError("exponent too large at column " +
                                         std::to_string(tok_.column),
                                     tok_.column);
            }
            advance();
            v.num = v.num.pow(static_cast<std::uint32_t>(e));
            v.den = v.den.pow(static_cast<std::uint32_t>(e));
        }
        return v;
    }

    RationalFunction atom() {
        switch (tok_.kind) {
        case Token::Kind::number: {
            Scalar c = ring_.from_string(tok_.text);
            advance();
            return constant(std::move(c));
        }
        case Token::Kind::ident: {
            for (std::size_t k = 0; k < vars_.size(); ++k) {
                if (vars_[k] == tok_.text) {
                    advance();
                    return {SparsePoly::variable(ring_, vars_.size(), k),
                            SparsePoly::constant(ring_, vars_.size(), ring_.one())};
                }
            }
            throw ParseError("unknown variable '" + tok_.text + "' at column " +
                                 std::to_string(tok_.column),
                             tok_.column);
        }
        case Token::Kind::lparen: {
            advance();
            RationalFunction v = expr();
            expect(Token::Kind::rparen, "')'");
            advance();
            return v;
        }
        default:
            throw ParseError("syntax error at column " + std::to_string(tok_.column),
                             tok_.column);
        }
    }

    Lexer lexer_;
    const CoefficientRing& ring_;
    std::span<const std::string> vars_;
    Token tok_;
};

} // namespace

RationalFunction parse_rational(std::string_view src, const CoefficientRing& ring,
                                std::span<const std::string> vars) {
    return Parser(src, ring, vars).parse();
}

SparsePoly parse_polynomial(std::string_view src, const CoefficientRing& ring,
                            std::span<const std::string> vars) {
    RationalFunction v = parse_rational(src, ring, vars);
    if (!v.den.is_constant())
        throw StructuralError("expression '" + std::string(src) +
                              "' is not a polynomial: nonconstant denominator " +
                              v.den.str(vars));
    Scalar d = v.den.constant_term();
    if (ring.is_one(d)) return v.num;
    // divide through; exactness depends on the ring
    std::vector<SparsePoly::Term> terms;
    for (const auto& t : v.num.terms()) {
        Scalar c;
        try {
            c = ring.div(t.coeff, d);
        } catch (const PreconditionError&) {
            throw StructuralError("expression '" + std::string(src) +
                                  "' is not a polynomial over " + ring.description() +
                                  ": coefficient " + ring.str(t.coeff) + "/" +
                                  ring.str(d) + " does not exist there");
        }
        terms.push_back({t.exps, std::move(c)});
    }
    return SparsePoly::from_terms(ring, vars.size(), std::move(terms));
}

TruncatedSeries parse_series(std::string_view src, const CoefficientRing& field,
                             std::string_view var, std::size_t precision) {
    const std::vector<std::string> vars{std::string(var)};
    SparsePoly p = parse_polynomial(src, field, vars);
    if (p.total_degree() > precision)
        throw StructuralError("series literal '" + std::string(src) +
                              "' has degree " + std::to_string(p.total_degree()) +
                              " > precision " + std::to_string(precision));
    std::vector<Scalar> coeffs(precision + 1, field.zero());
    for (const auto& t : p.terms()) coeffs[t.exps[0]] = t.coeff;
    return TruncatedSeries::from_coeffs(field, precision, std::move(coeffs));
}

std::vector<TruncatedSeries> parse_series_list(std::string_view src,
                                               const CoefficientRing& field,
                                               std::string_view var,
                                               std::size_t precision) {
    std::vector<TruncatedSeries> out;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= src.size(); ++i) {
        if (i < src.size() && src[i] == '(') ++depth;
        if (i < src.size() && src[i] == ')') --depth;
        if (i == src.size() || (src[i] == ',' && depth == 0)) {
            out.push_back(parse_series(src.substr(start, i - start), field, var,
                                       precision));
            start = i + 1;
        }
    }
    return out;
}

} // namespace arcsmith
