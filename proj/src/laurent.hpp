#ifndef CWB_LAURENT_HPP
#define CWB_LAURENT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"

namespace cwb {

using Int = boost::multiprecision::cpp_int;

// Exponent vector of a Laurent monomial; entries may be negative.
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(int n) : exps(n, 0) {}
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

    int size() const { return static_cast<int>(exps.size()); }
    int degree() const;

    Monomial operator*(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const;
    bool divides(const Monomial& o) const;  // componentwise exps <= o.exps

    bool operator==(const Monomial& o) const { return exps == o.exps; }
};

// Graded-lexicographic order, descending (leading term first when used as
// a map comparator).
struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

using DenomVector = std::vector<int>;

// Multivariate Laurent polynomial with arbitrary-precision integer
// coefficients, kept in canonical form: no zero coefficients, terms ordered
// graded-lexicographically descending.
class LaurentPoly {
  public:
    using TermMap = std::map<Monomial, Int, GradedLexGreater>;

    LaurentPoly() : n_(0) {}
    explicit LaurentPoly(int n) : n_(n) {}

    static LaurentPoly zero(int n) { return LaurentPoly(n); }
    static LaurentPoly constant(int n, Int c);
    static LaurentPoly variable(int n, int i);  // y_{i+1}, 0-indexed i
    static LaurentPoly monomial(const Monomial& m, Int c);

    int nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Leading term in graded-lex order.
    const std::pair<const Monomial, Int>& leading() const;

    void add_term(const Monomial& m, const Int& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);

    bool operator==(const LaurentPoly& o) const {
        return n_ == o.n_ && terms_ == o.terms_;
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // True iff every stored exponent is >= 0.
    bool is_polynomial() const;

    // Componentwise minimum exponent per variable over all terms.
    // Requires a nonzero polynomial.
    std::vector<int> min_exponents() const;

  private:
    int n_;
    TermMap terms_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly sub(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const Int& c);

inline LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) { return add(p, q); }
inline LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) { return sub(p, q); }
inline LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) { return mul(p, q); }

// Exact division in the integer Laurent ring.  Clears monomial factors from
// both operands, then long-divides by the graded-lex leading term of q.
// Throws NonExactDivision if a remainder survives.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);

// d_i = -(minimum exponent of variable i over all terms); entries may be
// negative.  Throws on the zero polynomial.
DenomVector denominator_vector(const LaurentPoly& p);

// Numerator of the reduced form p = f / prod y_i^{d_i}: f = p * prod y^{d}.
LaurentPoly reduced_numerator(const LaurentPoly& p);

// f(e_i) > 0 for all i, where e_i is all-ones with a 0 in slot i.
// Requires a genuine polynomial (no negative exponents).
bool positivity_check(const LaurentPoly& f);

// Canonical strings.  poly_string: "y1^2 + 2*y1*y3 + y3^2 + y2".
// fraction_string: "(y1 + y2 + y3) / (y1*y2)" with the positive part of the
// denominator vector cleared into the denominator.  raw_string: monomial
// prefix times parenthesized polynomial, e.g. "y1^-1*y2^-1*(y1 + y2 + y3)".
std::string poly_string(const LaurentPoly& p);
std::string fraction_string(const LaurentPoly& p);
std::string raw_string(const LaurentPoly& p);

}  // namespace cwb

#endif
