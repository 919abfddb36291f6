#include "laurent.hpp"

#include <numeric>
#include <sstream>

namespace cwb {

int Monomial::degree() const {
    return std::accumulate(exps.begin(), exps.end(), 0);
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r(*this);
    for (size_t i = 0; i < exps.size(); ++i) r.exps[i] += o.exps[i];
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r(*this);
    for (size_t i = 0; i < exps.size(); ++i) r.exps[i] -= o.exps[i];
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (size_t i = 0; i < exps.size(); ++i)
        if (exps[i] > o.exps[i]) return false;
    return true;
}

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.exps > b.exps;
}

LaurentPoly LaurentPoly::constant(int n, Int c) {
    LaurentPoly p(n);
    p.add_term(Monomial(n), c);
    return p;
}

LaurentPoly LaurentPoly::variable(int n, int i) {
    Monomial m(n);
    m.exps.at(i) = 1;
    return monomial(m, 1);
}

LaurentPoly LaurentPoly::monomial(const Monomial& m, Int c) {
    LaurentPoly p(m.size());
    p.add_term(m, c);
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->second == 1 &&
           terms_.begin()->first.degree() == 0 &&
           terms_.begin()->first == Monomial(n_);
}

const std::pair<const Monomial, Int>& LaurentPoly::leading() const {
    if (terms_.empty()) throw InvariantViolation("leading term of zero polynomial");
    return *terms_.begin();
}

void LaurentPoly::add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    if (m.size() != n_) throw InvariantViolation("monomial arity mismatch");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(n_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (n_ != o.n_) throw InvariantViolation("Laurent arity mismatch in add");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (n_ != o.n_) throw InvariantViolation("Laurent arity mismatch in sub");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

bool LaurentPoly::is_polynomial() const {
    for (const auto& [m, c] : terms_)
        for (int e : m.exps)
            if (e < 0) return false;
    return true;
}

std::vector<int> LaurentPoly::min_exponents() const {
    if (terms_.empty()) throw InvariantViolation("min_exponents of zero polynomial");
    std::vector<int> mins = terms_.begin()->first.exps;
    for (const auto& [m, c] : terms_)
        for (int i = 0; i < n_; ++i)
            mins[i] = std::min(mins[i], m.exps[i]);
    return mins;
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) {
    LaurentPoly r(p);
    r += q;
    return r;
}

LaurentPoly sub(const LaurentPoly& p, const LaurentPoly& q) {
    LaurentPoly r(p);
    r -= q;
    return r;
}

LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.nvars() != q.nvars()) throw InvariantViolation("Laurent arity mismatch in mul");
    LaurentPoly r(p.nvars());
    for (const auto& [mp, cp] : p.terms())
        for (const auto& [mq, cq] : q.terms()) r.add_term(mp * mq, cp * cq);
    return r;
}

LaurentPoly mul(const LaurentPoly& p, const Int& c) {
    LaurentPoly r(p.nvars());
    for (const auto& [m, cp] : p.terms()) r.add_term(m, cp * c);
    return r;
}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
    if (q.is_zero()) throw NonExactDivision("division by zero polynomial");
    const int n = p.nvars();
    if (n != q.nvars()) throw InvariantViolation("Laurent arity mismatch in exact_div");
    if (p.is_zero()) return LaurentPoly::zero(n);

    // Shift both operands into the plain polynomial ring.
    const Monomial mp(p.min_exponents()), mq(q.min_exponents());
    LaurentPoly rem(n), qhat(n);
    for (const auto& [m, c] : p.terms()) rem.add_term(m / mp, c);
    for (const auto& [m, c] : q.terms()) qhat.add_term(m / mq, c);

    const auto& [lead_m, lead_c] = qhat.leading();
    LaurentPoly quot(n);
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading();
        if (!lead_m.divides(rm) || rc % lead_c != 0)
            throw NonExactDivision("non-exact Laurent division: remainder " + poly_string(rem));
        Int coef = rc / lead_c;
        Monomial shift = rm / lead_m;
        quot.add_term(shift, coef);
        for (const auto& [m, c] : qhat.terms()) rem.add_term(m * shift, -c * coef);
    }

    // Restore the cleared monomial factor mp/mq.
    LaurentPoly result(n);
    const Monomial back = mp / mq;
    for (const auto& [m, c] : quot.terms()) result.add_term(m * back, c);
    return result;
}

DenomVector denominator_vector(const LaurentPoly& p) {
    if (p.is_zero()) throw InvariantViolation("denominator vector of zero polynomial");
    std::vector<int> mins = p.min_exponents();
    for (int& v : mins) v = -v;
    return mins;
}

LaurentPoly reduced_numerator(const LaurentPoly& p) {
    DenomVector d = denominator_vector(p);
    Monomial m(p.nvars());
    m.exps = d;
    return mul(p, LaurentPoly::monomial(m, 1));
}

bool positivity_check(const LaurentPoly& f) {
    if (!f.is_polynomial())
        throw InvariantViolation("positivity check requires a polynomial (no negative exponents)");
    const int n = f.nvars();
    // f(e_i) over exact integers: terms with a positive exponent of y_i
    // vanish, every other term contributes its coefficient.
    for (int i = 0; i < n; ++i) {
        Int value = 0;
        for (const auto& [m, c] : f.terms())
            if (m.exps[i] == 0) value += c;
        if (value <= 0) return false;
    }
    return true;
}

namespace {

void append_monomial(std::ostringstream& out, const Monomial& m, bool* printed_factor) {
    for (int i = 0; i < m.size(); ++i) {
        if (m.exps[i] == 0) continue;
        if (*printed_factor) out << "*";
        out << "y" << (i + 1);
        if (m.exps[i] != 1) out << "^" << m.exps[i];
        *printed_factor = true;
    }
}

std::string monomial_string(const Monomial& m) {
    std::ostringstream out;
    bool printed = false;
    append_monomial(out, m, &printed);
    if (!printed) return "1";
    return out.str();
}

}  // namespace

std::string poly_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Int a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool is_constant = (m == Monomial(p.nvars()));
        if (a != 1 || is_constant) {
            out << a;
            if (!is_constant) out << "*";
        }
        bool printed = false;
        if (!is_constant) append_monomial(out, m, &printed);
        first = false;
    }
    return out.str();
}

std::string fraction_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    DenomVector d = denominator_vector(p);
    Monomial denom(p.nvars());
    int denom_factors = 0;
    for (int i = 0; i < p.nvars(); ++i) {
        if (d[i] > 0) {
            denom.exps[i] = d[i];
            ++denom_factors;
        }
    }
    LaurentPoly numer = mul(p, LaurentPoly::monomial(denom, 1));
    std::string ns = poly_string(numer);
    if (denom_factors == 0) return ns;
    if (numer.term_count() > 1) ns = "(" + ns + ")";
    std::string ds = monomial_string(denom);
    if (denom_factors > 1) ds = "(" + ds + ")";
    return ns + " / " + ds;
}

std::string raw_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::vector<int> mins = p.min_exponents();
    Monomial prefix(p.nvars());
    prefix.exps = mins;
    bool trivial = prefix.degree() == 0 && prefix == Monomial(p.nvars());
    LaurentPoly shifted(p.nvars());
    for (const auto& [m, c] : p.terms()) shifted.add_term(m / prefix, c);
    if (trivial) return poly_string(shifted);
    std::ostringstream out;
    bool printed = false;
    append_monomial(out, prefix, &printed);
    out << "*(" << poly_string(shifted) << ")";
    return out.str();
}

}  // namespace cwb
