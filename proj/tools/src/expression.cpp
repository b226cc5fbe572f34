#include "workbench/cli/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <stdexcept>

namespace workbench::cli {

namespace {

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    enum class Kind { constant, variable, add, sub, mul, div, neg, pow, call } kind;
    cplx value{0.0};
    int exponent = 0;
    std::string fn;
    NodePtr a, b;
};

cplx evaluate(const Node& n, cplx z) {
    switch (n.kind) {
        case Node::Kind::constant: return n.value;
        case Node::Kind::variable: return z;
        case Node::Kind::add: return evaluate(*n.a, z) + evaluate(*n.b, z);
        case Node::Kind::sub: return evaluate(*n.a, z) - evaluate(*n.b, z);
        case Node::Kind::mul: return evaluate(*n.a, z) * evaluate(*n.b, z);
        case Node::Kind::div: return evaluate(*n.a, z) / evaluate(*n.b, z);
        case Node::Kind::neg: return -evaluate(*n.a, z);
        case Node::Kind::pow: {
            // Repeated multiplication keeps z^k exact where std::pow would go through exp/log.
            const cplx base = evaluate(*n.a, z);
            cplx acc{1.0};
            for (int k = 0; k < std::abs(n.exponent); ++k) acc *= base;
            return n.exponent < 0 ? 1.0 / acc : acc;
        }
        case Node::Kind::call: {
            const cplx v = evaluate(*n.a, z);
            if (n.fn == "conj") return std::conj(v);
            if (n.fn == "re") return v.real();
            if (n.fn == "im") return v.imag();
            if (n.fn == "abs") return std::abs(v);
            return std::exp(v);
        }
    }
    return {};
}

class Parser {
 public:
    explicit Parser(const std::string& text) : s_(text) {}

    NodePtr parse() {
        NodePtr n = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return n;
    }

 private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("expression '" + s_ + "': " + what + " at position " + std::to_string(pos_));
    }

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

    static NodePtr make(Node::Kind k, NodePtr a = nullptr, NodePtr b = nullptr) {
        auto n = std::make_shared<Node>();
        n->kind = k;
        n->a = std::move(a);
        n->b = std::move(b);
        return n;
    }

    NodePtr expr() {
        NodePtr lhs = term();
        for (;;) {
            if (eat('+')) lhs = make(Node::Kind::add, lhs, term());
            else if (eat('-')) lhs = make(Node::Kind::sub, lhs, term());
            else return lhs;
        }
    }

    bool starts_primary() {
        skip();
        if (pos_ >= s_.size()) return false;
        const char c = s_[pos_];
        return std::isalpha(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '.' ||
               c == '(';
    }

    NodePtr term() {
        NodePtr lhs = unary();
        for (;;) {
            if (eat('*')) lhs = make(Node::Kind::mul, lhs, unary());
            else if (eat('/')) lhs = make(Node::Kind::div, lhs, unary());
            else if (starts_primary()) lhs = make(Node::Kind::mul, lhs, power());
            else return lhs;
        }
    }

    NodePtr unary() {
        if (eat('-')) return make(Node::Kind::neg, unary());
        if (eat('+')) return unary();
        return power();
    }

    NodePtr power() {
        NodePtr base = primary();
        if (!eat('^')) return base;
        skip();
        const std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        const std::string digits = s_.substr(start, pos_ - start);
        if (digits.empty() || digits == "-" || digits == "+") fail("integer exponent expected");
        if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E')) fail("integer exponent expected");
        const long e = std::strtol(digits.c_str(), nullptr, 10);
        if (std::abs(e) > 256) fail("exponent out of range");
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::pow;
        n->a = base;
        n->exponent = static_cast<int>(e);
        return n;
    }

    NodePtr number() {
        // Scanned by hand so that "2exp(z)" reads as 2 * exp(z), not a malformed exponent.
        const std::size_t start = pos_;
        auto digits = [&] {
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        };
        digits();
        if (pos_ < s_.size() && s_[pos_] == '.') {
            ++pos_;
            digits();
        }
        if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
            std::size_t k = pos_ + 1;
            if (k < s_.size() && (s_[k] == '+' || s_[k] == '-')) ++k;
            if (k < s_.size() && std::isdigit(static_cast<unsigned char>(s_[k]))) {
                pos_ = k;
                digits();
            }
        }
        const std::string lit = s_.substr(start, pos_ - start);
        if (lit == ".") fail("number expected");
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::constant;
        n->value = std::strtod(lit.c_str(), nullptr);
        return n;
    }

    NodePtr primary() {
        skip();
        if (pos_ >= s_.size()) fail("operand expected");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (c == '(') {
            ++pos_;
            NodePtr n = expr();
            if (!eat(')')) fail("')' expected");
            return n;
        }
        if (c == '|') {
            ++pos_;
            NodePtr n = expr();
            if (!eat('|')) fail("closing '|' expected");
            auto call = std::make_shared<Node>();
            call->kind = Node::Kind::call;
            call->fn = "abs";
            call->a = n;
            return call;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            const std::string id = s_.substr(start, pos_ - start);
            if (id == "z" || id == "xi") return make(Node::Kind::variable);
            if (id == "i") {
                auto n = std::make_shared<Node>();
                n->kind = Node::Kind::constant;
                n->value = cplx{0.0, 1.0};
                return n;
            }
            if (id == "conj" || id == "re" || id == "im" || id == "abs" || id == "exp") {
                if (!eat('(')) fail("'(' expected after " + id);
                NodePtr arg = expr();
                if (!eat(')')) fail("')' expected");
                auto n = std::make_shared<Node>();
                n->kind = Node::Kind::call;
                n->fn = id;
                n->a = arg;
                return n;
            }
            pos_ = start;
            fail("unknown identifier '" + id + "'");
        }
        fail("unexpected character");
    }

    std::string s_;
    std::size_t pos_ = 0;
};

double parse_real(const std::string& text) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0') throw std::invalid_argument("malformed number '" + text + "'");
    return v;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto comma = text.find(',', start);
        out.push_back(trim(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

ComplexFn parse_expression(const std::string& text) {
    NodePtr root = Parser(text).parse();
    return [root](cplx z) { return evaluate(*root, z); };
}

cplx parse_complex(const std::string& raw) {
    const std::string text = trim(raw);
    if (text.empty()) throw std::invalid_argument("empty complex number");
    if (text.back() != 'i') return {parse_real(text), 0.0};
    const std::string body = text.substr(0, text.size() - 1);
    // Split at the last sign that is not a leading sign or part of an exponent.
    std::size_t split_at = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split_at = k;
            break;
        }
    }
    auto imag_part = [](const std::string& s) {
        if (s.empty() || s == "+") return 1.0;
        if (s == "-") return -1.0;
        return parse_real(s);
    };
    if (split_at == std::string::npos) return {0.0, imag_part(body)};
    return {parse_real(body.substr(0, split_at)), imag_part(body.substr(split_at))};
}

std::vector<cplx> parse_complex_list(const std::string& text) {
    std::vector<cplx> out;
    for (const auto& cell : split(text)) out.push_back(parse_complex(cell));
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    for (const auto& cell : split(text)) {
        char* end = nullptr;
        const long v = std::strtol(cell.c_str(), &end, 10);
        if (cell.empty() || *end != '\0') throw std::invalid_argument("malformed integer '" + cell + "'");
        out.push_back(static_cast<int>(v));
    }
    return out;
}

std::vector<double> parse_real_list(const std::string& text) {
    std::vector<double> out;
    for (const auto& cell : split(text)) out.push_back(parse_real(cell));
    return out;
}

}  // namespace workbench::cli
