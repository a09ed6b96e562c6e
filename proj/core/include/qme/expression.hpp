// expression.hpp — Tiny arithmetic expressions in the time variable t

#pragma once

#include <memory>
#include <string>

namespace qme {

// Parsed once at load time, evaluated per step. Grammar: numeric literals,
// the variable t, + - * /, unary minus, parentheses, and the functions
// sin cos tan tanh cosh sinh exp log abs sqrt.
class Expression {
public:
    static Expression parse(const std::string& text);

    double eval(double t) const;
    const std::string& text() const { return text_; }

    struct Node;

private:
    Expression(std::shared_ptr<const Node> root, std::string text);

    std::shared_ptr<const Node> root_;
    std::string text_;
};

} // namespace qme
