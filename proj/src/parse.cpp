#include "dioph/parse.hpp"

#include <cctype>
#include <map>
#include <vector>

namespace dioph {

namespace {

constexpr unsigned long kMaxVarIndex = 4096;
constexpr unsigned long kMaxExponent = 1000000;

struct RawTerm {
    mpz_class coeff;
    std::map<unsigned long, unsigned long> exps;  // var index (1-based) -> exponent
};

class Parser {
  public:
    explicit Parser(const std::string& text) : s_(text) {}

    Polynomial run() {
        std::vector<RawTerm> left = poly();
        bool equation = false;
        skip_ws();
        if (!done() && s_[pos_] == '=') {
            ++pos_;
            equation = true;
        }
        std::vector<RawTerm> right;
        if (equation) right = poly();
        skip_ws();
        if (!done()) throw ParseError("unexpected input after equation", pos_);

        unsigned long max_var = 0;
        for (const auto& t : left)
            for (const auto& [v, e] : t.exps) max_var = std::max(max_var, v);
        for (const auto& t : right)
            for (const auto& [v, e] : t.exps) max_var = std::max(max_var, v);

        Polynomial p(max_var);
        auto add = [&](const RawTerm& t, int sign) {
            Exponents e(max_var, 0);
            for (const auto& [v, exp] : t.exps) e[v - 1] = static_cast<unsigned>(exp);
            p.add_term(std::move(e), sign > 0 ? t.coeff : mpz_class(-t.coeff));
        };
        for (const auto& t : left) add(t, +1);
        for (const auto& t : right) add(t, -1);
        return p;
    }

  private:
    const std::string& s_;
    std::size_t pos_ = 0;

    bool done() const { return pos_ >= s_.size(); }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return done() ? '\0' : s_[pos_]; }

    std::vector<RawTerm> poly() {
        std::vector<RawTerm> terms;
        int sign = +1;
        skip_ws();
        if (peek() == '+' || peek() == '-') {
            if (peek() == '-') sign = -1;
            ++pos_;
        }
        terms.push_back(term(sign));
        while (true) {
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                sign = (peek() == '-') ? -1 : +1;
                ++pos_;
                terms.push_back(term(sign));
                continue;
            }
            break;
        }
        return terms;
    }

    RawTerm term(int sign) {
        skip_ws();
        RawTerm t;
        t.coeff = sign;
        bool have_factor = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            t.coeff *= integer();
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                factor(t);
                have_factor = true;
            } else if (peek() == 'x') {
                factor(t);
                have_factor = true;
            } else {
                return t;  // bare integer term
            }
        } else {
            factor(t);
            have_factor = true;
        }
        while (have_factor) {
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
            factor(t);
        }
        return t;
    }

    void factor(RawTerm& t) {
        skip_ws();
        if (peek() != 'x') throw ParseError("expected a variable", pos_);
        ++pos_;
        if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected a variable index after 'x'", pos_);
        unsigned long index = bounded_number("variable index", kMaxVarIndex);
        if (index == 0) throw ParseError("variable indices start at 1", pos_ - 1);
        unsigned long exp = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("expected an exponent after '^'", pos_);
            exp = bounded_number("exponent", kMaxExponent);
            if (exp == 0) throw ParseError("exponents must be positive", pos_ - 1);
        }
        t.exps[index] += exp;
    }

    mpz_class integer() {
        std::size_t start = pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return mpz_class(s_.substr(start, pos_ - start));
    }

    unsigned long bounded_number(const char* what, unsigned long limit) {
        std::size_t start = pos_;
        mpz_class v = integer();
        if (v > limit)
            throw ParseError(std::string(what) + " too large", start);
        return v.get_ui();
    }
};

void render_monomial(std::string& out, const Exponents& e, const mpz_class& abs_coeff) {
    std::vector<std::string> parts;
    bool any_var = false;
    for (unsigned exp : e)
        if (exp > 0) any_var = true;
    if (!any_var || abs_coeff != 1) parts.push_back(abs_coeff.get_str());
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        std::string f = "x" + std::to_string(i + 1);
        if (e[i] > 1) f += "^" + std::to_string(e[i]);
        parts.push_back(std::move(f));
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += "*";
        out += parts[i];
    }
}

}  // namespace

Polynomial parse_equation(const std::string& text) { return Parser(text).run(); }

std::string render(const Polynomial& p) {
    if (p.is_zero()) return "0 = 0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        render_monomial(out, e, a);
        first = false;
    }
    out += " = 0";
    return out;
}

}  // namespace dioph
