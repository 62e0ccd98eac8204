#include "dmf/expr.hpp"

#include <cctype>
#include <memory>

#include "dmf/error.hpp"
#include "dmf/operators.hpp"

namespace dmf {
namespace {

struct Node {
    enum class Kind { name, iota, scalar, add, sub, mul, pow, pair } kind;
    std::string name;           // name / iota / pair
    std::string scalar_text;    // scalar
    int pair_sign = 0;          // pair
    long exponent = 1;          // pow
    std::unique_ptr<Node> lhs, rhs;
};

using NodePtr = std::unique_ptr<Node>;

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    NodePtr parse() {
        NodePtr e = expr();
        skip();
        if (pos_ != s_.size()) throw ParseError("trailing characters in expression: '" +
                                                std::string(s_.substr(pos_)) + "'");
        return e;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    NodePtr expr() {
        NodePtr acc = term();
        while (true) {
            if (eat('+')) {
                auto n = std::make_unique<Node>();
                n->kind = Node::Kind::add;
                n->lhs = std::move(acc);
                n->rhs = term();
                acc = std::move(n);
            } else if (eat('-')) {
                auto n = std::make_unique<Node>();
                n->kind = Node::Kind::sub;
                n->lhs = std::move(acc);
                n->rhs = term();
                acc = std::move(n);
            } else {
                return acc;
            }
        }
    }

    NodePtr term() {
        NodePtr acc = factor();
        while (eat('*')) {
            auto n = std::make_unique<Node>();
            n->kind = Node::Kind::mul;
            n->lhs = std::move(acc);
            n->rhs = factor();
            acc = std::move(n);
        }
        return acc;
    }

    NodePtr factor() {
        NodePtr base = primary();
        if (eat('^')) {
            skip();
            long e = 0;
            bool any = false;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                e = e * 10 + (s_[pos_++] - '0');
                any = true;
                if (e > 1000) throw ParseError("exponent too large");
            }
            if (!any) throw ParseError("expected an exponent after '^'");
            auto n = std::make_unique<Node>();
            n->kind = Node::Kind::pow;
            n->exponent = e;
            n->lhs = std::move(base);
            return n;
        }
        return base;
    }

    std::string ident() {
        skip();
        std::string id;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
            id += s_[pos_++];
        }
        if (id.empty()) throw ParseError("expected a name in expression");
        return id;
    }

    NodePtr primary() {
        skip();
        if (eat('{')) {
            std::string text;
            while (pos_ < s_.size() && s_[pos_] != '}') text += s_[pos_++];
            if (!eat('}')) throw ParseError("unterminated scalar literal");
            auto n = std::make_unique<Node>();
            n->kind = Node::Kind::scalar;
            n->scalar_text = text;
            return n;
        }
        if (eat('(')) {
            NodePtr e = expr();
            if (!eat(')')) throw ParseError("missing ')'");
            return e;
        }
        std::string id = ident();
        if (id == "iota") {
            if (!eat('(')) throw ParseError("iota needs a parenthesized generator name");
            std::string inner = ident();
            if (!eat(')')) throw ParseError("missing ')' after iota");
            auto n = std::make_unique<Node>();
            n->kind = Node::Kind::iota;
            n->name = inner;
            return n;
        }
        if (id == "pair") {
            const char sign = peek();
            if (sign != '+' && sign != '-')
                throw ParseError("pair needs a sign: pair+(...) or pair-(...)");
            ++pos_;
            if (!eat('(')) throw ParseError("pair needs a parenthesized expression");
            NodePtr inner = expr();
            if (!eat(')')) throw ParseError("missing ')' after pair");
            auto n = std::make_unique<Node>();
            n->kind = Node::Kind::pair;
            n->pair_sign = sign == '+' ? 1 : -1;
            n->lhs = std::move(inner);
            return n;
        }
        auto n = std::make_unique<Node>();
        n->kind = Node::Kind::name;
        n->name = id;
        return n;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

OldPoly name_to_oldpoly(const std::string& name, const PrimePi& pi, bool iota) {
    if (name == "h") return OldPoly::level1_form(pi, BaseForm::h, 0, iota);
    if (name == "delta") return OldPoly::level1_form(pi, BaseForm::delta, 0, iota);
    if (name == "gd") return OldPoly::level1_form(pi, BaseForm::gd, pi.degree(), iota);
    if (name.size() == 2 && name[0] == 'g' && std::isdigit(static_cast<unsigned char>(name[1])) &&
        name[1] != '0')
        return OldPoly::level1_form(pi, BaseForm::gd, name[1] - '0', iota);
    if (name == "e_star") {
        if (iota) throw ParseError("iota(e_star) is not part of the algebra");
        return OldPoly::estar_form(pi);
    }
    if (name == "e")
        throw ParseError("'e' is not modular: it cannot enter the symbolic oldform algebra");
    throw ParseError("unknown generator '" + name + "'");
}

OldPoly eval_old(const Node& n, const PrimePi& pi) {
    switch (n.kind) {
        case Node::Kind::name:
            return name_to_oldpoly(n.name, pi, false);
        case Node::Kind::iota:
            return name_to_oldpoly(n.name, pi, true);
        case Node::Kind::scalar:
            return OldPoly::scalar(pi, RatK::parse(pi.field(), n.scalar_text));
        case Node::Kind::add:
            return eval_old(*n.lhs, pi) + eval_old(*n.rhs, pi);
        case Node::Kind::sub:
            return eval_old(*n.lhs, pi) - eval_old(*n.rhs, pi);
        case Node::Kind::mul:
            return eval_old(*n.lhs, pi) * eval_old(*n.rhs, pi);
        case Node::Kind::pow:
            return eval_old(*n.lhs, pi).pow(n.exponent);
        case Node::Kind::pair:
            return oldform_pair(eval_old(*n.lhs, pi), n.pair_sign);
    }
    throw ParseError("bad expression node");
}

USeries name_to_series(const std::string& name, const PrimePi& pi, int N, bool iota) {
    const FqPtr& F = pi.field();
    if (name == "e") {
        if (!iota) return e_series(F, N);
        const long qd = pi.qd();
        const int inner = static_cast<int>((N + qd - 1) / qd);
        USeries comp = v_operator(e_series(F, inner), pi);
        return comp.prec() > N ? comp.truncated(N) : comp;
    }
    return flatten(name_to_oldpoly(name, pi, iota), N);
}

USeries eval_ser(const Node& n, const PrimePi& pi, int N) {
    switch (n.kind) {
        case Node::Kind::name:
            return name_to_series(n.name, pi, N, false);
        case Node::Kind::iota:
            return name_to_series(n.name, pi, N, true);
        case Node::Kind::scalar:
            return USeries::constant(pi.field(), RatK::parse(pi.field(), n.scalar_text), N);
        case Node::Kind::add:
            return eval_ser(*n.lhs, pi, N) + eval_ser(*n.rhs, pi, N);
        case Node::Kind::sub:
            return eval_ser(*n.lhs, pi, N) - eval_ser(*n.rhs, pi, N);
        case Node::Kind::mul: {
            USeries p = series_mul(eval_ser(*n.lhs, pi, N), eval_ser(*n.rhs, pi, N));
            return p.prec() > N ? p.truncated(N) : p;
        }
        case Node::Kind::pow: {
            USeries p = eval_ser(*n.lhs, pi, N).pow(n.exponent);
            return p.prec() > N ? p.truncated(N) : p;
        }
        case Node::Kind::pair:
            return flatten(oldform_pair(eval_old(*n.lhs, pi), n.pair_sign), N);
    }
    throw ParseError("bad expression node");
}

}  // namespace

OldPoly parse_oldform_expr(std::string_view text, const PrimePi& pi) {
    Parser p(text);
    const NodePtr ast = p.parse();
    return eval_old(*ast, pi);
}

USeries eval_series_expr(std::string_view text, const PrimePi& pi, int N) {
    Parser p(text);
    const NodePtr ast = p.parse();
    return eval_ser(*ast, pi, N);
}

}  // namespace dmf
