#include "apn/expr.hpp"

#include <cctype>
#include <memory>

namespace apn {
namespace {

// Parsed term tree, evaluated pointwise.
struct Node {
    enum Kind { Sum, Mono, Trace, Const } kind;
    std::vector<Node> parts;   // Sum / Trace argument (single entry)
    Elem coef = 1;             // Mono / Trace scaling
    std::uint64_t exponent = 1;
    unsigned trace_t = 1;
    Elem value = 0;            // Const
};

struct Parser {
    std::string_view s;
    std::size_t pos = 0;
    const Field& F;

    explicit Parser(std::string_view text, const Field& field) : s(text), F(field) {}

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("expression: " + what + " at position " +
                                    std::to_string(pos));
    }

    std::uint64_t integer() {
        skip();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected an integer");
        std::uint64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > (std::uint64_t(1) << 62)) fail("integer too large");
            ++pos;
        }
        return v;
    }

    Node parse_expr() {
        Node sum{Node::Sum, {}, 1, 1, 1, 0};
        sum.parts.push_back(parse_term());
        while (eat('+')) sum.parts.push_back(parse_term());
        return sum;
    }

    Node parse_term() {
        skip();
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            std::uint64_t c = integer();
            if (c >= F.q()) fail("coefficient is not an element code");
            if (eat('*')) {
                Node n = parse_factor();
                n.coef = F.mul(n.coef, static_cast<Elem>(c));
                return n;
            }
            Node n{Node::Const, {}, 1, 1, 1, static_cast<Elem>(c)};
            return n;
        }
        return parse_factor();
    }

    Node parse_factor() {
        skip();
        if (pos >= s.size()) fail("expected a factor");
        if (s[pos] == 'x' || s[pos] == 'X') {
            ++pos;
            Node n{Node::Mono, {}, 1, 1, 1, 0};
            if (eat('^')) n.exponent = integer();
            return n;
        }
        if (s.compare(pos, 2, "Tr") == 0 || s.compare(pos, 2, "tr") == 0) {
            pos += 2;
            Node n{Node::Trace, {}, 1, 1, 1, 0};
            if (eat('_')) {
                std::uint64_t t = integer();
                if (t == 0 || F.n() % t != 0) fail("trace degree does not divide n");
                n.trace_t = static_cast<unsigned>(t);
            }
            if (!eat('(')) fail("expected '(' after Tr");
            n.parts.push_back(parse_expr());
            if (!eat(')')) fail("expected ')'");
            if (eat('^')) n.exponent = integer();
            return n;
        }
        if (s[pos] == '(') {
            ++pos;
            Node inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            Node n{Node::Trace, {}, 1, 1, 1, 0};  // reuse: trace_t = n is identity
            n.trace_t = F.n();
            n.parts.push_back(std::move(inner));
            if (eat('^')) n.exponent = integer();
            return n;
        }
        fail("unrecognized token");
    }
};

Elem eval(const Node& n, const Field& F, Elem x) {
    switch (n.kind) {
        case Node::Sum: {
            Elem acc = 0;
            for (const auto& part : n.parts) acc = F.add(acc, eval(part, F, x));
            return acc;
        }
        case Node::Const:
            return n.value;
        case Node::Mono:
            return F.mul(n.coef, F.pow(x, n.exponent));
        case Node::Trace: {
            Elem inner = eval(n.parts[0], F, x);
            Elem t = F.trace_relative(inner, n.trace_t);
            return F.mul(n.coef, F.pow(t, n.exponent));
        }
    }
    return 0;
}

}  // namespace

MapTable from_expression(const FieldRef& field, std::string_view expr) {
    Parser parser(expr, *field);
    Node root = parser.parse_expr();
    parser.skip();
    if (parser.pos != expr.size())
        parser.fail("unexpected trailing input");
    return tabulate(field, [&](Elem x) { return eval(root, *field, x); });
}

}  // namespace apn
