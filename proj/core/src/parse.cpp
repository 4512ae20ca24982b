#include "ellpic/parse.hpp"

#include <algorithm>
#include <cctype>

namespace ellpic {

namespace {

std::string strip(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return done() ? '\0' : s[pos]; }
    bool eat(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }
    void expect(char c, const char* what) {
        if (!eat(c)) throw parse_error(std::string("expected '") + c + "' in " + what, pos);
    }
    long integer(const char* what) {
        size_t start = pos;
        bool neg = eat('-');
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw parse_error(std::string("expected integer in ") + what, pos);
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (s[pos] - '0');
            if (v > (1L << 40)) throw parse_error("integer literal too large", start);
            ++pos;
        }
        return neg ? -v : v;
    }
    Int big_integer(const char* what) {
        bool neg = eat('-');
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw parse_error(std::string("expected integer in ") + what, pos);
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(s[pos++]);
        Int v(digits);
        return neg ? Int(-v) : v;
    }
};

// polynomial expression in up to two symbols: `var` and the extension
// generator 'g'; sums of products of integers, g^i and var^j
class PolyParser {
public:
    PolyParser(const std::string& s, const FqField* F, char var) : cur_{s, 0}, F_(F), var_(var) {}

    FqPoly parse() {
        FqPoly v = expr();
        if (!cur_.done()) throw parse_error("trailing input after polynomial", cur_.pos);
        return v;
    }

private:
    Cursor cur_;
    const FqField* F_;
    char var_;

    FqPoly one() const { return FqPoly::constant(Fq(F_, F_->from_int(1))); }

    FqPoly expr() {
        FqPoly acc;
        bool neg = cur_.eat('-');
        acc = neg ? -term() : term();
        while (!cur_.done()) {
            if (cur_.eat('+'))
                acc = acc + term();
            else if (cur_.eat('-'))
                acc = acc - term();
            else
                break;
        }
        return acc;
    }

    FqPoly term() {
        FqPoly acc = factor();
        for (;;) {
            cur_.eat('*');
            char c = cur_.peek();
            if (c == '(' || c == 'g' || c == var_ || std::isdigit(static_cast<unsigned char>(c))) {
                acc = acc * factor();
            } else {
                break;
            }
        }
        return acc;
    }

    FqPoly factor() {
        if (cur_.eat('(')) {
            FqPoly inner = expr();
            cur_.expect(')', "parenthesized expression");
            return power_suffix(inner);
        }
        char c = cur_.peek();
        if (c == 'g') {
            ++cur_.pos;
            if (F_->k() == 1)
                throw parse_error("generator g only exists in extension fields", cur_.pos - 1);
            long e = 1;
            if (cur_.eat('^')) e = cur_.integer("exponent");
            long p = F_->p();
            long gx = p;  // index of the generator: digits (0, 1)
            return FqPoly::constant(Fq(F_, F_->pow(gx, e)));
        }
        if (c == var_) {
            ++cur_.pos;
            long e = 1;
            if (cur_.eat('^')) e = cur_.integer("exponent");
            if (e < 0) throw parse_error("negative exponent", cur_.pos);
            return FqPoly::monomial(Fq(F_, F_->from_int(1)), static_cast<int>(e));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long v = cur_.integer("coefficient");
            FqPoly base = FqPoly::constant(Fq(F_, F_->from_int(v)));
            return power_suffix(base);
        }
        throw parse_error("expected coefficient, variable or parenthesis", cur_.pos);
    }

    FqPoly power_suffix(FqPoly base) {
        if (cur_.eat('^')) {
            long e = cur_.integer("exponent");
            if (e < 0) throw parse_error("negative exponent", cur_.pos);
            return base.pow(e);
        }
        return base;
    }
};

}  // namespace

GroupSpec parse_group_spec(const std::string& raw) {
    std::string s = strip(raw);
    if (s.empty()) throw parse_error("empty group spec", 0);
    if (s == "0" || s == "1") return GroupSpec{};
    GroupSpec out;
    Cursor cur{s, 0};
    for (;;) {
        if (!cur.eat('Z')) throw parse_error("expected 'Z'", cur.pos);
        if (cur.eat('^')) {
            long r = cur.integer("rank");
            if (r < 0) throw parse_error("negative rank", cur.pos);
            out.free_rank += r;
        } else if (cur.eat('/')) {
            size_t at = cur.pos;
            Int d = cur.big_integer("torsion order");
            if (d < 2) throw parse_error("torsion order must be >= 2", at);
            out.torsion.push_back(d);
        } else {
            out.free_rank += 1;
        }
        if (cur.done()) break;
        if (!cur.eat('+')) throw parse_error("expected '+' between summands", cur.pos);
    }
    return out;
}

Fq parse_element(const std::string& raw, const FqField* F) {
    FqPoly p = parse_poly(raw, F, 'x');
    if (p.degree() > 0) throw parse_error("expected a field element, got a polynomial", 0);
    return p.is_zero() ? Fq(F, 0) : p[0];
}

FqPoly parse_poly(const std::string& raw, const FqField* F, char var) {
    std::string s = strip(raw);
    if (s.empty()) throw parse_error("empty polynomial", 0);
    return PolyParser(s, F, var).parse();
}

FqCurve parse_curve(const std::string& raw, const FqField* F) {
    std::string s = strip(raw);
    if (s.rfind("y^2=", 0) == 0) {
        FqPoly rhs = parse_poly(s.substr(4), F, 'x');
        if (rhs.degree() != 3 || !rhs.is_monic())
            throw parse_error("short form needs a monic cubic right-hand side", 4);
        if (!rhs.coeffs()[2].is_zero())
            throw parse_error("short form y^2=x^3+Ax+B has no x^2 term", 4);
        Fq zero(F, 0);
        return FqCurve(zero, zero, zero, rhs.coeffs()[1], rhs.coeffs()[0]);
    }
    Fq a1(F, 0), a2(F, 0), a3(F, 0), a4(F, 0), a6(F, 0);
    size_t offset = 0;
    size_t start = 0;
    bool saw_any = false;
    while (start <= s.size()) {
        size_t comma = s.find(',', start);
        std::string item = s.substr(start, comma == std::string::npos ? std::string::npos
                                                                      : comma - start);
        if (!item.empty()) {
            size_t eq = item.find('=');
            if (eq == std::string::npos || eq < 2 || item[0] != 'a')
                throw parse_error("expected aK=value", offset + start);
            std::string key = item.substr(0, eq);
            Fq value = parse_element(item.substr(eq + 1), F);
            if (key == "a1")
                a1 = value;
            else if (key == "a2")
                a2 = value;
            else if (key == "a3")
                a3 = value;
            else if (key == "a4")
                a4 = value;
            else if (key == "a6")
                a6 = value;
            else
                throw parse_error("unknown coefficient " + key, offset + start);
            saw_any = true;
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (!saw_any) throw parse_error("empty curve description", 0);
    return FqCurve(a1, a2, a3, a4, a6);
}

ClosedPoint parse_closed_point(const std::string& raw, const FqCurve& E) {
    std::string s = strip(raw);
    const FqField* F = E.a1().field();
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        std::string inner = s.substr(1, s.size() - 2);
        size_t comma = inner.find(',');
        if (comma == std::string::npos) throw parse_error("expected (x,y)", 1);
        Fq x = parse_element(inner.substr(0, comma), F);
        Fq y = parse_element(inner.substr(comma + 1), F);
        return ClosedPoint::from_point(E, F, FqPoint::affine(x, y));
    }
    if (s.size() >= 2 && s.front() == '[' && s.back() == ']') {
        std::string inner = s.substr(1, s.size() - 2);
        size_t semi = inner.find(';');
        if (semi == std::string::npos)
            throw parse_error("expected [minpoly; y=expr] or [minpoly; inert]", 1);
        FqPoly m = parse_poly(inner.substr(0, semi), F, 'x');
        if (!m.is_monic() || !fq_poly_irreducible(m))
            throw parse_error("minimal polynomial must be monic irreducible", 1);
        int e = m.degree();
        std::string rest = inner.substr(semi + 1);
        const FqField* Fe = FqField::get(F->p(), F->k() * e);
        Fq xi = fq_poly_roots(m, Fe).front();
        if (rest == "inert") {
            const FqField* F2e = FqField::get(F->p(), F->k() * 2 * e);
            Fq xi2 = FqEmbedding::get(Fe, F2e)->map(xi);
            auto ys = y_solutions(curve_over(E, F2e), xi2);
            if (ys.size() != 2)
                throw parse_error("fiber is not inert over this minimal polynomial", 1);
            // reject when the fiber actually splits at level e
            if (!y_solutions(curve_over(E, Fe), xi).empty())
                throw parse_error("fiber is not inert over this minimal polynomial", 1);
            return ClosedPoint::from_point(E, F2e, FqPoint::affine(xi2, ys[0]));
        }
        if (rest.rfind("y=", 0) != 0) throw parse_error("expected y=expr or inert", semi + 1);
        FqPoly t = parse_poly(rest.substr(2), F, 'x');
        Fq y = fq_poly_map(t, FqEmbedding::get(F, Fe)).eval(xi);
        return ClosedPoint::from_point(E, Fe, FqPoint::affine(xi, y));
    }
    throw parse_error("expected (x,y) or [minpoly; ...]", 0);
}

std::vector<ClosedPoint> parse_point_set(const std::string& raw, const FqCurve& E) {
    std::string s = strip(raw);
    std::vector<ClosedPoint> out;
    size_t start = 0;
    int depth = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i < s.size() && (s[i] == '[' || s[i] == '(')) ++depth;
        if (i < s.size() && (s[i] == ']' || s[i] == ')')) --depth;
        if (i == s.size() || (s[i] == ';' && depth == 0)) {
            std::string item = s.substr(start, i - start);
            if (!item.empty()) out.push_back(parse_closed_point(item, E));
            start = i + 1;
        }
    }
    return out;
}

const FqField* field_for_order(long q) {
    if (q < 2) throw parse_error("field order must be >= 2", 0);
    long p = 2;
    while (q % p) {
        ++p;
        if (p * p > q) {
            p = q;
            break;
        }
    }
    int k = 0;
    long t = q;
    while (t > 1) {
        if (t % p) throw parse_error("field order must be a prime power", 0);
        t /= p;
        ++k;
    }
    return FqField::get(p, k);
}

}  // namespace ellpic
