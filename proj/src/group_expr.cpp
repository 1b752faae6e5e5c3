#include "smithles/group_expr.hpp"

#include <cctype>

#include "smithles/errors.hpp"

namespace smithles::fgab {

namespace {

class Scanner {
public:
    explicit Scanner(const std::string& text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() {
        skip_space();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    char take() {
        skip_space();
        return text_[pos_++];
    }
    [[noreturn]] void fail(const std::string& msg) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg, line, col);
    }
    Int take_posint() {
        skip_space();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected a positive integer");
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        return Int(digits);
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

FgAbGroup parse_group(const std::string& text) {
    Scanner s(text);
    if (s.done()) s.fail("empty group expression");
    if (s.peek() == '0') {
        s.take();
        if (!s.done()) s.fail("unexpected input after '0'");
        return FgAbGroup::trivial();
    }
    unsigned long rank = 0;
    std::vector<Int> moduli;
    while (true) {
        if (s.peek() != 'Z') s.fail("expected 'Z'");
        s.take();
        if (s.peek() == '/') {
            s.take();
            Int n = s.take_posint();
            if (n == 0) s.fail("Z/0 is not a torsion term (write Z)");
            if (n == 1) s.fail("Z/1 is trivial (write 0)");
            moduli.push_back(n);
        } else {
            ++rank;
        }
        if (s.done()) break;
        if (s.peek() != '+') s.fail("expected '+'");
        s.take();
    }
    return FgAbGroup(rank, std::move(moduli));
}

std::string print_group(const FgAbGroup& g) { return g.to_string(); }

}  // namespace smithles::fgab
