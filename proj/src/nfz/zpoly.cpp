#include "hrc/zpoly.hpp"

#include <cctype>
#include <stdexcept>

namespace hrc {

static const mpq_class kZero = 0;

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::constant(const mpq_class& a) {
    QPoly p;
    if (a != 0) p.c_ = {a};
    return p;
}

QPoly QPoly::x() {
    QPoly p;
    p.c_ = {mpq_class(0), mpq_class(1)};
    return p;
}

QPoly QPoly::from_int_coeffs(const std::vector<mpz_class>& c) {
    std::vector<mpq_class> q(c.size());
    for (size_t i = 0; i < c.size(); i++) q[i] = mpq_class(c[i]);
    return QPoly(std::move(q));
}

const mpq_class& QPoly::operator[](size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

bool QPoly::is_integral() const {
    for (const auto& a : c_)
        if (a.get_den() != 1) return false;
    return true;
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); i++) r[i] = (*this)[i] + o[i];
    return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const {
    std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); i++) r[i] = (*this)[i] - o[i];
    return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<mpq_class> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); i++)
        for (size_t j = 0; j < o.c_.size(); j++) r[i + j] += c_[i] * o.c_[j];
    return QPoly(std::move(r));
}

QPoly QPoly::operator-() const {
    std::vector<mpq_class> r(c_);
    for (auto& a : r) a = -a;
    return QPoly(std::move(r));
}

QPoly QPoly::operator*(const mpq_class& s) const {
    if (s == 0) return QPoly();
    std::vector<mpq_class> r(c_);
    for (auto& a : r) a *= s;
    return QPoly(std::move(r));
}

QPoly QPoly::derivative() const {
    if (c_.size() <= 1) return QPoly();
    std::vector<mpq_class> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); i++) r[i - 1] = c_[i] * mpq_class((long)i);
    return QPoly(std::move(r));
}

mpq_class QPoly::eval(const mpq_class& x) const {
    mpq_class r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

QPoly QPoly::divrem(const QPoly& divisor, QPoly& rem) const {
    if (divisor.is_zero()) throw std::invalid_argument("QPoly: division by zero");
    std::vector<mpq_class> r(c_), q;
    int dd = divisor.degree();
    if (degree() >= dd) q.assign(degree() - dd + 1, mpq_class(0));
    const mpq_class& l = divisor.lc();
    for (int i = degree(); i >= dd; i--) {
        if (r[i] == 0) continue;
        mpq_class f = r[i] / l;
        q[i - dd] = f;
        for (int j = 0; j <= dd; j++) r[i - dd + j] -= f * divisor[j];
    }
    rem = QPoly(std::move(r));
    return QPoly(std::move(q));
}

QPoly QPoly::mod(const QPoly& divisor) const {
    QPoly rem;
    divrem(divisor, rem);
    return rem;
}

QPoly QPoly::shift(const mpq_class& a) const {
    // Horner: f(x+a)
    QPoly res;
    QPoly xa = QPoly::x() + QPoly::constant(a);
    for (size_t i = c_.size(); i-- > 0;) res = res * xa + QPoly::constant(c_[i]);
    return res;
}

QPoly QPoly::negate_var() const {
    std::vector<mpq_class> r(c_);
    for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return QPoly(std::move(r));
}

QPoly QPoly::monic() const {
    if (is_zero() || lc() == 1) return *this;
    return *this * (mpq_class(1) / lc());
}

mpz_class QPoly::denominator_lcm() const {
    mpz_class l = 1;
    for (const auto& a : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den_mpz_t());
    return l;
}

std::vector<mpz_class> QPoly::int_coeffs() const {
    std::vector<mpz_class> r(c_.size());
    for (size_t i = 0; i < c_.size(); i++) {
        if (c_[i].get_den() != 1) throw std::invalid_argument("QPoly: not integral");
        r[i] = c_[i].get_num();
    }
    return r;
}

std::string QPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = c_.size(); i-- > 0;) {
        const mpq_class& a = c_[i];
        if (a == 0) continue;
        mpq_class ab = abs(a);
        if (!s.empty()) s += (a > 0) ? " + " : " - ";
        else if (a < 0) s += "-";
        bool unit = (ab == 1);
        if (i == 0 || !unit) s += ab.get_str();
        if (i > 0) {
            if (!unit) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

QPoly gcd_q(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

bool is_squarefree(const QPoly& f) {
    return gcd_q(f, f.derivative()).degree() <= 0;
}

mpq_class resultant(const QPoly& f, const QPoly& g) {
    // classical Euclidean recursion with leading-coefficient bookkeeping
    if (f.is_zero() || g.is_zero()) return 0;
    if (f.degree() == 0) {
        mpq_class r;
        mpz_pow_ui(r.get_num_mpz_t(), f.lc().get_num_mpz_t(), g.degree());
        mpz_pow_ui(r.get_den_mpz_t(), f.lc().get_den_mpz_t(), g.degree());
        r.canonicalize();
        return r;
    }
    if (g.degree() == 0) {
        mpq_class r;
        mpz_pow_ui(r.get_num_mpz_t(), g.lc().get_num_mpz_t(), f.degree());
        mpz_pow_ui(r.get_den_mpz_t(), g.lc().get_den_mpz_t(), f.degree());
        r.canonicalize();
        return r;
    }
    QPoly r = f.mod(g);
    if (r.is_zero()) return 0;
    mpq_class lg = g.lc(), pw = 1;
    for (int i = 0; i < f.degree() - r.degree(); i++) pw *= lg;
    mpq_class sign = ((long)f.degree() * g.degree()) % 2 == 0 ? 1 : -1;
    return sign * pw * resultant(g, r);
}

mpz_class poly_disc(const QPoly& f) {
    if (!f.is_monic() || !f.is_integral() || f.degree() < 1)
        throw std::invalid_argument("poly_disc: need monic integral poly of degree >= 1");
    int n = f.degree();
    if (n == 1) return 1;
    mpq_class r = resultant(f, f.derivative());
    mpq_class sign = ((long)n * (n - 1) / 2) % 2 == 0 ? 1 : -1;
    r *= sign;
    if (r.get_den() != 1) throw std::logic_error("poly_disc: non-integral resultant");
    return r.get_num();
}

// ---------------------------------------------------------------- parsing

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;
    explicit Parser(const std::string& str) : s(str) {}
    void skip() { while (i < s.size() && std::isspace((unsigned char)s[i])) i++; }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) { i++; return true; }
        return false;
    }
    // term := [coef] ['*'] [var ['^' exp]]
    QPoly term() {
        skip();
        mpq_class coef = 1;
        bool have_coef = false;
        if (i < s.size() && (std::isdigit((unsigned char)s[i]))) {
            size_t j = i;
            while (j < s.size() && (std::isdigit((unsigned char)s[j]) || s[j] == '/')) j++;
            coef = mpq_class(s.substr(i, j - i));
            coef.canonicalize();
            i = j;
            have_coef = true;
        }
        skip();
        if (i < s.size() && s[i] == '*') i++;
        skip();
        int exp = 0;
        if (i < s.size() && (std::isalpha((unsigned char)s[i]))) {
            i++;
            exp = 1;
            skip();
            if (i < s.size() && s[i] == '^') {
                i++;
                skip();
                size_t j = i;
                while (j < s.size() && std::isdigit((unsigned char)s[j])) j++;
                if (j == i) throw std::invalid_argument("poly parse: bad exponent");
                exp = std::stoi(s.substr(i, j - i));
                i = j;
            }
        } else if (!have_coef) {
            throw std::invalid_argument("poly parse: expected term");
        }
        std::vector<mpq_class> c(exp + 1);
        c[exp] = coef;
        return QPoly(std::move(c));
    }
    QPoly parse() {
        QPoly p;
        skip();
        bool neg = eat('-');
        if (!neg) eat('+');
        QPoly t = term();
        p = neg ? -t : t;
        while (true) {
            skip();
            if (i >= s.size()) break;
            if (eat('+')) p = p + term();
            else if (eat('-')) p = p - term();
            else throw std::invalid_argument("poly parse: unexpected character");
        }
        return p;
    }
};

} // namespace

QPoly parse_poly(const std::string& s) { return Parser(s).parse(); }

} // namespace hrc
