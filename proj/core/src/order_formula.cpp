#include "sylbase/order_formula.hpp"

#include <algorithm>
#include <cctype>

namespace sylbase::orders {

Integer FactoredOrder::eval(const Integer& q) const {
    if (q < 2) throw std::domain_error("FactoredOrder::eval: q must be >= 2");
    Integer num = multiplier * arith::ipow(q, q_exponent);
    for (const auto& [deg, sign] : factors) num *= arith::ipow(q, deg) - sign;
    Integer den = divisor;
    for (const auto& [deg, sign] : denom_factors) den *= arith::ipow(q, deg) - sign;
    return arith::exact_div(num, den, "order formula divisor");
}

void FactoredOrder::canonicalize() {
    auto key = [](const std::pair<int, int>& f) { return std::make_pair(f.first, -f.second); };
    std::sort(factors.begin(), factors.end(),
              [&](const auto& a, const auto& b) { return key(a) < key(b); });
    std::sort(denom_factors.begin(), denom_factors.end(),
              [&](const auto& a, const auto& b) { return key(a) < key(b); });
}

namespace {

class Cursor {
public:
    explicit Cursor(const std::string& s) : s_(s) {}

    bool done() const { return pos_ >= s_.size(); }
    char peek() const { return done() ? '\0' : s_[pos_]; }
    std::size_t pos() const { return pos_; }

    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!eat(c)) fail(std::string("expected '") + c + "' " + what);
    }

    Integer integer(const char* what) {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(std::string("expected integer ") + what);
        Integer v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (s_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("order formula: " + msg + " at offset " + std::to_string(pos_), pos_);
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

// '(' was already consumed
std::pair<int, int> parse_factor_body(Cursor& c) {
    c.expect('q', "in factor");
    int deg = 1;
    if (c.eat('^')) {
        Integer d = c.integer("exponent in factor");
        if (d < 1 || d > 1000) c.fail("factor exponent out of range");
        deg = static_cast<int>(d);
    }
    int sign;
    if (c.eat('-')) sign = 1;
    else if (c.eat('+')) sign = -1;
    else c.fail("expected '-' or '+' in factor");
    if (c.integer("constant in factor") != 1) c.fail("factor constant must be 1");
    c.expect(')', "closing factor");
    return {deg, sign};
}

}  // namespace

FactoredOrder parse_order_formula(const std::string& text) {
    Cursor c(text);
    FactoredOrder f;

    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        f.multiplier = c.integer("multiplier");
        if (f.multiplier < 1) c.fail("multiplier must be positive");
        c.expect('*', "after multiplier");
    }
    if (c.eat('q')) {
        if (c.eat('^')) {
            Integer e = c.integer("q exponent");
            if (e < 0 || e > 100000) c.fail("q exponent out of range");
            f.q_exponent = static_cast<unsigned>(e);
        } else {
            f.q_exponent = 1;
        }
    }
    while (c.eat('(')) f.factors.push_back(parse_factor_body(c));
    if (c.eat('/')) {
        bool any = false;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            f.divisor = c.integer("divisor");
            if (f.divisor == 0) c.fail("zero divisor");
            any = true;
        }
        while (c.eat('(')) {
            f.denom_factors.push_back(parse_factor_body(c));
            any = true;
        }
        if (!any) c.fail("expected divisor");
    }
    if (!c.done()) c.fail("trailing input");
    if (f.q_exponent == 0 && f.factors.empty() && f.multiplier == 1 && f.divisor == 1 &&
        f.denom_factors.empty())
        c.fail("empty formula");

    f.canonicalize();
    return f;
}

namespace {

void format_factors(std::string& out, const std::vector<std::pair<int, int>>& fs) {
    for (const auto& [deg, sign] : fs) {
        out += "(q";
        if (deg != 1) out += "^" + std::to_string(deg);
        out += (sign == 1) ? "-1)" : "+1)";
    }
}

}  // namespace

std::string format_order_formula(const FactoredOrder& f) {
    std::string out;
    if (f.multiplier != 1) out += f.multiplier.str() + "*";
    if (f.q_exponent == 1) out += "q";
    else if (f.q_exponent > 1) out += "q^" + std::to_string(f.q_exponent);
    format_factors(out, f.factors);
    if (f.divisor != 1 || !f.denom_factors.empty()) {
        out += "/";
        if (f.divisor != 1) out += f.divisor.str();
        format_factors(out, f.denom_factors);
    }
    return out;
}

}  // namespace sylbase::orders
