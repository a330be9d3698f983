#pragma once

#include <string>
#include <vector>

namespace jdc {

// Nested-pair expression: expr := label | '[' expr ',' expr ']' | '(' expr ',' expr ')'
// Labels match [A-Za-z0-9_]+ ([A-Za-z0-9_@:.-]+ with extended_labels, used by
// the attached-tree grammar). Whitespace insensitive; parse errors carry the
// byte offset and line/column.
struct BracketExpr {
    std::string label; // nonempty => leaf
    std::vector<BracketExpr> children;

    bool is_leaf() const { return children.empty(); }
};

BracketExpr parse_bracket(const std::string& text, bool extended_labels = false);

std::string print_bracket(const BracketExpr& e, char open = '(', char close = ')');

} // namespace jdc
