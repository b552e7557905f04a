#ifndef LPA_PARSER_HPP
#define LPA_PARSER_HPP

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "lpa/element.hpp"
#include "lpa/errors.hpp"
#include "lpa/field.hpp"
#include "lpa/graph.hpp"

namespace lpa {

// Expression grammar:
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor+                      juxtaposition is product
//   factor := scalar | atom '*'*           postfix '*' is the star involution
//   scalar := INT ['/' INT]
//   atom   := IDENT | '(' expr ')'
//
// Identifiers are vertex or edge ids. A term with no identifier is a scalar
// multiple of the identity (the sum of all vertices).

namespace detail {

struct Token {
    enum Kind { ident, number, plus, minus, star, slash, lparen, rparen, end } kind;
    std::string text;
    std::size_t pos;
};

inline bool ident_char(unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '\'' || c >= 0x80;
}

inline std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (std::isspace(c)) { ++i; continue; }
        std::size_t start = i;
        if (std::isdigit(c)) {
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            out.push_back({Token::number, std::string(text.substr(start, i - start)), start});
        } else if (ident_char(c) && !std::isdigit(c)) {
            while (i < text.size() && ident_char(static_cast<unsigned char>(text[i]))) ++i;
            out.push_back({Token::ident, std::string(text.substr(start, i - start)), start});
        } else {
            Token::Kind k;
            switch (c) {
            case '+': k = Token::plus; break;
            case '-': k = Token::minus; break;
            case '*': k = Token::star; break;
            case '/': k = Token::slash; break;
            case '(': k = Token::lparen; break;
            case ')': k = Token::rparen; break;
            default:
                throw parse_error("unexpected character '" + std::string(1, text[i]) +
                                  "' at position " + std::to_string(i));
            }
            out.push_back({k, std::string(1, text[i]), start});
            ++i;
        }
    }
    out.push_back({Token::end, "", text.size()});
    return out;
}

template <class F>
class ExprParser {
    using K = typename F::Scalar;

public:
    ExprParser(const F& f, const Graph& g, std::string_view text)
        : f_(f), g_(g), tokens_(tokenize(text)) {}

    Element<K> parse() {
        RawElement<K> raw = expr();
        expect(Token::end, "end of input");
        return normal_form(g_, raw);
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    Token next() { return tokens_[pos_++]; }
    void expect(typename Token::Kind k, const std::string& what) {
        if (peek().kind != k)
            throw parse_error("expected " + what + " at position " + std::to_string(peek().pos));
        ++pos_;
    }

    RawElement<K> expr() {
        RawElement<K> acc;
        bool negate = false;
        if (peek().kind == Token::minus) { next(); negate = true; }
        append(acc, term(), negate);
        while (peek().kind == Token::plus || peek().kind == Token::minus) {
            bool minus = next().kind == Token::minus;
            append(acc, term(), minus);
        }
        return acc;
    }

    RawElement<K> term() {
        K coeff = f_.one();
        RawElement<K> prod;
        bool have_words = false;
        bool have_anything = false;
        while (true) {
            auto k = peek().kind;
            if (k == Token::number) {
                coeff = coeff * scalar();
                have_anything = true;
            } else if (k == Token::ident || k == Token::lparen) {
                RawElement<K> a = starred_atom();
                if (!have_words) {
                    prod = std::move(a);
                } else {
                    RawElement<K> next_prod;
                    for (const auto& t1 : prod) {
                        for (const auto& t2 : a) {
                            RawWord w = t1.word;
                            w.insert(w.end(), t2.word.begin(), t2.word.end());
                            next_prod.push_back({t1.coeff * t2.coeff, std::move(w)});
                        }
                    }
                    prod = std::move(next_prod);
                }
                have_words = have_anything = true;
            } else {
                break;
            }
        }
        if (!have_anything)
            throw parse_error("expected a term at position " + std::to_string(peek().pos));
        if (!have_words) {
            // scalar-only term: multiple of the identity, i.e. the vertex sum
            for (VertexId v = 0; v < g_.vertex_count(); ++v)
                prod.push_back({coeff, {raw_vertex(v)}});
            return prod;
        }
        for (auto& t : prod) t.coeff = t.coeff * coeff;
        return prod;
    }

    RawElement<K> starred_atom() {
        RawElement<K> a = atom();
        while (peek().kind == Token::star) {
            next();
            for (auto& t : a) t.word = star_word(std::move(t.word));
        }
        return a;
    }

    RawElement<K> atom() {
        if (peek().kind == Token::lparen) {
            next();
            RawElement<K> inner = expr();
            expect(Token::rparen, "')'");
            return inner;
        }
        Token t = next();
        if (t.kind != Token::ident)
            throw parse_error("expected an identifier at position " + std::to_string(t.pos));
        if (auto v = g_.find_vertex(t.text))
            return {{f_.one(), {raw_vertex(*v)}}};
        if (auto e = g_.find_edge(t.text))
            return {{f_.one(), {raw_edge(*e)}}};
        throw parse_error("undeclared identifier '" + t.text + "' at position " +
                          std::to_string(t.pos));
    }

    K scalar() {
        Token t = next();
        K num = digits_to_scalar(t.text);
        if (peek().kind == Token::slash) {
            next();
            if (peek().kind != Token::number)
                throw parse_error("expected a denominator at position " +
                                  std::to_string(peek().pos));
            K den = digits_to_scalar(next().text);
            if (den.is_zero()) throw parse_error("zero denominator in scalar");
            return num / den;
        }
        return num;
    }

    K digits_to_scalar(const std::string& digits) const {
        K ten = f_.from_long(10);
        K acc = f_.zero();
        for (char c : digits) acc = acc * ten + f_.from_long(c - '0');
        return acc;
    }

    void append(RawElement<K>& acc, RawElement<K> t, bool negate) {
        for (auto& term : t) {
            if (negate) term.coeff = -term.coeff;
            acc.push_back(std::move(term));
        }
    }

    const F& f_;
    const Graph& g_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parse an expression over the graph's vertices, edges and ghost edges into
/// its canonical normal form.
template <class F, class K = typename F::Scalar>
Element<K> parse_expr(const F& f, const Graph& g, std::string_view text) {
    return detail::ExprParser<F>(f, g, text).parse();
}

} // namespace lpa

#endif
