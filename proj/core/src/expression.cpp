// expression.cpp — Recursive-descent parser and evaluator for schedule formulas

#include "qme/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <utility>
#include <vector>

#include "qme/errors.hpp"

namespace qme {

namespace {

enum class Op { Add, Sub, Mul, Div, Neg };

using UnaryFn = double (*)(double);

UnaryFn lookup_function(const std::string& name)
{
    if (name == "sin") return static_cast<UnaryFn>(std::sin);
    if (name == "cos") return static_cast<UnaryFn>(std::cos);
    if (name == "tan") return static_cast<UnaryFn>(std::tan);
    if (name == "tanh") return static_cast<UnaryFn>(std::tanh);
    if (name == "cosh") return static_cast<UnaryFn>(std::cosh);
    if (name == "sinh") return static_cast<UnaryFn>(std::sinh);
    if (name == "exp") return static_cast<UnaryFn>(std::exp);
    if (name == "log") return static_cast<UnaryFn>(std::log);
    if (name == "abs") return static_cast<UnaryFn>(std::fabs);
    if (name == "sqrt") return static_cast<UnaryFn>(std::sqrt);
    return nullptr;
}

} // namespace

struct Expression::Node {
    enum class Kind { Number, Time, Unary, Binary, Call } kind;
    double number = 0.0;
    Op op = Op::Add;
    UnaryFn fn = nullptr;
    std::shared_ptr<const Node> lhs, rhs;

    double eval(double t) const
    {
        switch (kind) {
        case Kind::Number: return number;
        case Kind::Time: return t;
        case Kind::Unary: return -lhs->eval(t);
        case Kind::Call: return fn(lhs->eval(t));
        case Kind::Binary: {
            const double a = lhs->eval(t);
            const double b = rhs->eval(t);
            switch (op) {
            case Op::Add: return a + b;
            case Op::Sub: return a - b;
            case Op::Mul: return a * b;
            case Op::Div: return a / b;
            default: break;
            }
        }
        }
        return 0.0;
    }
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    NodePtr run()
    {
        NodePtr e = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& why) const
    {
        throw ScheduleError("expression parse error at position " +
                            std::to_string(pos_) + ": " + why + " in \"" + text_ + "\"");
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    static NodePtr make(Expression::Node n)
    {
        return std::make_shared<const Expression::Node>(std::move(n));
    }

    NodePtr expr()
    {
        NodePtr left = term();
        for (;;) {
            if (consume('+')) left = binary(Op::Add, left, term());
            else if (consume('-')) left = binary(Op::Sub, left, term());
            else return left;
        }
    }

    NodePtr term()
    {
        NodePtr left = unary();
        for (;;) {
            if (consume('*')) left = binary(Op::Mul, left, unary());
            else if (consume('/')) left = binary(Op::Div, left, unary());
            else return left;
        }
    }

    NodePtr unary()
    {
        if (consume('-')) {
            Expression::Node n;
            n.kind = Expression::Node::Kind::Unary;
            n.lhs = unary();
            return make(std::move(n));
        }
        return primary();
    }

    NodePtr binary(Op op, NodePtr lhs, NodePtr rhs)
    {
        Expression::Node n;
        n.kind = Expression::Node::Kind::Binary;
        n.op = op;
        n.lhs = std::move(lhs);
        n.rhs = std::move(rhs);
        return make(std::move(n));
    }

    NodePtr primary()
    {
        skip_ws();
        if (pos_ >= text_.size()) fail("expected operand");
        const char c = text_[pos_];

        if (c == '(') {
            ++pos_;
            NodePtr inner = expr();
            if (!consume(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const char* begin = text_.c_str() + pos_;
            char* end = nullptr;
            const double value = std::strtod(begin, &end);
            if (end == begin) fail("malformed number");
            pos_ += static_cast<std::size_t>(end - begin);
            Expression::Node n;
            n.kind = Expression::Node::Kind::Number;
            n.number = value;
            return make(std::move(n));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            const std::string word = text_.substr(start, pos_ - start);
            if (word == "t") {
                Expression::Node n;
                n.kind = Expression::Node::Kind::Time;
                return make(std::move(n));
            }
            if (UnaryFn fn = lookup_function(word)) {
                if (!consume('(')) fail("expected '(' after function name");
                NodePtr arg = expr();
                if (!consume(')')) fail("expected ')'");
                Expression::Node n;
                n.kind = Expression::Node::Kind::Call;
                n.fn = fn;
                n.lhs = std::move(arg);
                return make(std::move(n));
            }
            pos_ = start;
            fail("unknown identifier \"" + word + "\"");
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

} // namespace

Expression::Expression(std::shared_ptr<const Node> root, std::string text)
    : root_(std::move(root)), text_(std::move(text)) {}

Expression Expression::parse(const std::string& text)
{
    Parser parser(text);
    return Expression(parser.run(), text);
}

double Expression::eval(double t) const { return root_->eval(t); }

} // namespace qme
