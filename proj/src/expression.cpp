#include "tsfrac/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <vector>

#include "tsfrac/errors.hpp"

namespace tsfrac {

struct Expression::Node {
    enum class Kind { Const, Var, Neg, Add, Sub, Mul, Div, Pow };
    Kind kind;
    double value = 0.0;   // Const
    long exponent = 0;    // Pow
    std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make_const(double v) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Const;
    n->value = v;
    return n;
}

NodePtr make_var() {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Var;
    return n;
}

NodePtr make_unary(Node::Kind k, NodePtr child) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->lhs = std::move(child);
    return n;
}

NodePtr make_binary(Node::Kind k, NodePtr l, NodePtr r) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    return n;
}

NodePtr make_pow(NodePtr base, long e) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Pow;
    n->lhs = std::move(base);
    n->exponent = e;
    return n;
}

// --- parser -----------------------------------------------------------

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    NodePtr run() {
        skip_ws();
        if (pos_ >= src_.size()) fail({"expression"});
        NodePtr e = expr();
        skip_ws();
        if (pos_ < src_.size()) fail({"'+'", "'-'", "'*'", "'/'", "end of input"});
        return e;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(std::vector<std::string> expected) {
        throw ParseError(pos_, std::move(expected));
    }

    void skip_ws() {
        while (pos_ < src_.size() &&
               (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' ||
                src_[pos_] == '\r'))
            ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    bool accept(char c) {
        if (peek_is(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr expr() {
        NodePtr e = term();
        while (true) {
            if (accept('+'))
                e = make_binary(Node::Kind::Add, e, term());
            else if (accept('-'))
                e = make_binary(Node::Kind::Sub, e, term());
            else
                return e;
        }
    }

    NodePtr term() {
        NodePtr e = factor();
        while (true) {
            if (accept('*'))
                e = make_binary(Node::Kind::Mul, e, factor());
            else if (accept('/'))
                e = make_binary(Node::Kind::Div, e, factor());
            else
                return e;
        }
    }

    NodePtr factor() {
        if (accept('-')) return make_unary(Node::Kind::Neg, factor());
        NodePtr b = base();
        if (accept('^')) return make_pow(std::move(b), integer());
        return b;
    }

    NodePtr base() {
        skip_ws();
        if (pos_ >= src_.size()) fail({"number", "'t'", "'('"});
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr e = expr();
            skip_ws();
            if (pos_ >= src_.size() || src_[pos_] != ')')
                fail({"')'", "'+'", "'-'", "'*'", "'/'"});
            ++pos_;
            return e;
        }
        if (c == 't') {
            ++pos_;
            return make_var();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        fail({"number", "'t'", "'('"});
    }

    NodePtr number() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                fail({"digit"});
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
        }
        double v = 0.0;
        auto res = std::from_chars(src_.data() + start, src_.data() + pos_, v);
        if (res.ec != std::errc()) {
            pos_ = start;
            fail({"number"});
        }
        return make_const(v);
    }

    long integer() {
        skip_ws();
        bool negative = false;
        if (pos_ < src_.size() && src_[pos_] == '-') {
            negative = true;
            ++pos_;
            skip_ws();
        }
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        if (pos_ == start) fail({"integer exponent"});
        long v = 0;
        auto res = std::from_chars(src_.data() + start, src_.data() + pos_, v);
        if (res.ec != std::errc()) {
            pos_ = start;
            fail({"integer exponent"});
        }
        return negative ? -v : v;
    }
};

// --- evaluation -------------------------------------------------------

double int_pow(double x, long e, double t) {
    if (e < 0) {
        const double denom = int_pow(x, -e, t);
        if (denom == 0.0) throw EvalError(t);
        return 1.0 / denom;
    }
    double result = 1.0;
    double base = x;
    unsigned long n = static_cast<unsigned long>(e);
    while (n != 0) {
        if (n & 1UL) result *= base;
        base *= base;
        n >>= 1UL;
    }
    return result;
}

double eval_node(const Node& n, double t) {
    switch (n.kind) {
        case Node::Kind::Const: return n.value;
        case Node::Kind::Var: return t;
        case Node::Kind::Neg: return -eval_node(*n.lhs, t);
        case Node::Kind::Add: return eval_node(*n.lhs, t) + eval_node(*n.rhs, t);
        case Node::Kind::Sub: return eval_node(*n.lhs, t) - eval_node(*n.rhs, t);
        case Node::Kind::Mul: return eval_node(*n.lhs, t) * eval_node(*n.rhs, t);
        case Node::Kind::Div: {
            const double denom = eval_node(*n.rhs, t);
            if (denom == 0.0) throw EvalError(t);
            return eval_node(*n.lhs, t) / denom;
        }
        case Node::Kind::Pow: return int_pow(eval_node(*n.lhs, t), n.exponent, t);
    }
    throw Error("corrupt expression node");
}

// --- printing ---------------------------------------------------------

// Precedence levels: 0 additive, 1 multiplicative, 2 unary minus, 3 power, 4 atom.
int precedence(const Node& n) {
    switch (n.kind) {
        case Node::Kind::Add:
        case Node::Kind::Sub: return 0;
        case Node::Kind::Mul:
        case Node::Kind::Div: return 1;
        case Node::Kind::Neg: return 2;
        case Node::Kind::Pow: return 3;
        default: return 4;
    }
}

std::string format_double(double v) {
    // fixed notation: the grammar has no scientific form
    char buf[384];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed);
    return std::string(buf, res.ptr);
}

void print_node(const Node& n, int parent_level, std::string& out) {
    const int level = precedence(n);
    const bool parens = level < parent_level;
    if (parens) out += '(';
    switch (n.kind) {
        case Node::Kind::Const: out += format_double(n.value); break;
        case Node::Kind::Var: out += 't'; break;
        case Node::Kind::Neg:
            out += '-';
            print_node(*n.lhs, 2, out);
            break;
        case Node::Kind::Add:
        case Node::Kind::Sub:
            print_node(*n.lhs, 0, out);
            out += n.kind == Node::Kind::Add ? " + " : " - ";
            print_node(*n.rhs, 1, out);
            break;
        case Node::Kind::Mul:
        case Node::Kind::Div:
            print_node(*n.lhs, 1, out);
            out += n.kind == Node::Kind::Mul ? "*" : "/";
            print_node(*n.rhs, 2, out);
            break;
        case Node::Kind::Pow:
            print_node(*n.lhs, 4, out);
            out += '^';
            out += std::to_string(n.exponent);
            break;
    }
    if (parens) out += ')';
}

bool nodes_identical(const Node* a, const Node* b) {
    if (a == b) return true;
    if (a == nullptr || b == nullptr) return false;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Node::Kind::Const: {
            // bit comparison so -0.0 and 0.0 stay distinct
            return a->value == b->value && std::signbit(a->value) == std::signbit(b->value);
        }
        case Node::Kind::Var: return true;
        case Node::Kind::Pow:
            return a->exponent == b->exponent && nodes_identical(a->lhs.get(), b->lhs.get());
        case Node::Kind::Neg: return nodes_identical(a->lhs.get(), b->lhs.get());
        default:
            return nodes_identical(a->lhs.get(), b->lhs.get()) &&
                   nodes_identical(a->rhs.get(), b->rhs.get());
    }
}

}  // namespace

Expression Expression::parse(std::string_view src) {
    if (src.empty()) throw ParseError(0, {"expression"});
    return Expression(Parser(src).run());
}

double Expression::eval(double t) const {
    const double v = eval_node(*root_, t);
    if (!std::isfinite(v)) throw EvalError(t);
    return v;
}

std::string Expression::pretty() const {
    std::string out;
    print_node(*root_, 0, out);
    return out;
}

bool Expression::identical(const Expression& other) const {
    return nodes_identical(root_.get(), other.root_.get());
}

GridFunction sample(const Expression& e, const TimeScale& ts) {
    std::vector<double> values;
    values.reserve(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) values.push_back(e.eval(ts[i]));
    return GridFunction(ts, std::move(values));
}

namespace {

// base form: t, t^n (n>0), (t -/+ c), (t -/+ c)^n
std::optional<PowerForm> match_base_power(const Node& n) {
    auto match_shift = [](const Node& m) -> std::optional<double> {
        if (m.kind == Node::Kind::Var) return 0.0;
        if ((m.kind == Node::Kind::Sub || m.kind == Node::Kind::Add) &&
            m.lhs->kind == Node::Kind::Var && m.rhs->kind == Node::Kind::Const)
            return m.kind == Node::Kind::Sub ? m.rhs->value : -m.rhs->value;
        return std::nullopt;
    };
    if (auto k = match_shift(n)) return PowerForm{*k, 1, false};
    if (n.kind == Node::Kind::Pow) {
        if (auto k = match_shift(*n.lhs)) {
            if (n.exponent > 0) return PowerForm{*k, n.exponent, false};
            if (n.exponent < 0) return PowerForm{*k, -n.exponent, true};
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<PowerForm> match_power_form(const Expression& e) {
    const Node& root = *e.root();
    if (root.kind == Node::Kind::Div && root.lhs->kind == Node::Kind::Const &&
        root.lhs->value == 1.0) {
        if (auto inner = match_base_power(*root.rhs); inner && !inner->reciprocal)
            return PowerForm{inner->k, inner->n, true};
        return std::nullopt;
    }
    return match_base_power(root);
}

GridFunction sample_masked(const Expression& e, const TimeScale& ts) {
    std::vector<double> values(ts.size(), 0.0);
    std::vector<unsigned char> valid(ts.size(), 1);
    for (std::size_t i = 0; i < ts.size(); ++i) {
        try {
            values[i] = e.eval(ts[i]);
        } catch (const EvalError&) {
            valid[i] = 0;
        }
    }
    return GridFunction::masked(ts, std::move(values), std::move(valid));
}

}  // namespace tsfrac
