#include "jdc/parser.hpp"

#include "jdc/errors.hpp"

namespace jdc {

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;
    bool extended;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r'))
            ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        size_t line = 1, col = 1;
        for (size_t i = 0; i < pos && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw parse_error(msg, pos, line, col);
    }

    bool label_char(char c) const {
        bool base = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
        if (base) return true;
        return extended && (c == '@' || c == ':' || c == '.' || c == '-');
    }

    BracketExpr expr() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        char c = text[pos];
        if (c == '[' || c == '(') {
            char close = (c == '[') ? ']' : ')';
            ++pos;
            BracketExpr left = expr();
            skip_ws();
            if (pos >= text.size() || text[pos] != ',') fail("expected ','");
            ++pos;
            BracketExpr right = expr();
            skip_ws();
            if (pos >= text.size() || text[pos] != close) fail(std::string("expected '") + close + "'");
            ++pos;
            BracketExpr out;
            out.children.push_back(std::move(left));
            out.children.push_back(std::move(right));
            return out;
        }
        if (!label_char(c)) fail("expected label or bracket");
        BracketExpr out;
        while (pos < text.size() && label_char(text[pos])) out.label.push_back(text[pos++]);
        return out;
    }
};

} // namespace

BracketExpr parse_bracket(const std::string& text, bool extended_labels) {
    Cursor cur{text, 0, extended_labels};
    BracketExpr e = cur.expr();
    cur.skip_ws();
    if (cur.pos != text.size()) cur.fail("trailing input");
    return e;
}

std::string print_bracket(const BracketExpr& e, char open, char close) {
    if (e.is_leaf()) return e.label;
    return open + print_bracket(e.children[0], open, close) + "," + print_bracket(e.children[1], open, close) +
           close;
}

} // namespace jdc
