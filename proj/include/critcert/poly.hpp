#ifndef CRITCERT_POLY_HPP
#define CRITCERT_POLY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "critcert/monomial.hpp"
#include "critcert/rational.hpp"

namespace critcert {

struct MatrixQ;

// Sparse multivariate polynomial over Q with an explicit variable list.
// Canonical form: no stored zero coefficients. Two polynomials taking part
// in one operation must share an identical variable list.
class Poly {
public:
    using TermMap = std::map<Monomial, Rational>;

    Poly() = default;
    explicit Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Poly zero(std::vector<std::string> vars) { return Poly(std::move(vars)); }
    static Poly constant(std::vector<std::string> vars, const Rational& c);
    static Poly variable(std::vector<std::string> vars, std::size_t index);
    // X_1^2 + ... + X_n^2.
    static Poly norm_squared(std::vector<std::string> vars);

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    uint64_t total_degree() const;  // 0 for the zero polynomial
    uint32_t degree_in(std::size_t var) const;
    bool depends_on(std::size_t var) const { return degree_in(var) > 0; }

    void add_term(const Monomial& m, const Rational& c);

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend Poly operator*(const Rational& c, const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(uint32_t e) const;

    // Exact formal partial derivative with respect to vars()[var].
    Poly derivative(std::size_t var) const;

    Rational evaluate(const std::vector<Rational>& point) const;

    // f(A x): substitutes X_i <- sum_j A(i,j) X_j. Throws on singular A.
    Poly substitute_linear(const MatrixQ& A) const;

    // Substitutes vars()[var] <- replacement (same ring).
    Poly substitute(std::size_t var, const Poly& replacement) const;

    // g(X) = f(X + c) - f(c); g(0) = 0.
    Poly translate_to_origin(const std::vector<Rational>& c) const;

    // Leading data under an order; polynomial must be nonzero.
    const Monomial& leading_monomial(const OrderSpec& order) const;
    const Rational& leading_coefficient(const OrderSpec& order) const;

    // Scales so the grevlex leading coefficient becomes 1. Zero stays zero.
    Poly monic_grevlex() const;

    // Divides out the rational content and makes the grevlex leading
    // coefficient positive; result has coprime integer coefficients.
    Poly primitive_integer() const;

    // Image in a ring with extra variables appended at the end.
    Poly extended(const std::vector<std::string>& extra_vars) const;
    // Image in a ring with extra variables prepended.
    Poly prepended(const std::vector<std::string>& extra_vars) const;
    // Drops variables the polynomial does not depend on; keep[i] are indices
    // into vars(), in order. Throws if a dropped variable occurs.
    Poly restricted(const std::vector<std::size_t>& keep,
                    std::vector<std::string> new_vars) const;

    std::string str() const;  // canonical printer, grevlex-descending

private:
    void check_same_ring(const Poly& other) const;

    std::vector<std::string> vars_;
    TermMap terms_;
};

// Pairwise gcd, primitive and grevlex-monic. gcd(f, 0) = monic f; gcd(0,0)=0.
Poly gcd_poly(const Poly& f, const Poly& g);

// f = constant * prod factors[i].first ^ factors[i].second with the factors
// squarefree, pairwise coprime, grevlex-monic, multiplicities strictly
// increasing. Throws on zero input.
struct SquarefreeDecomposition {
    Rational constant;
    std::vector<std::pair<Poly, uint32_t>> factors;
};
SquarefreeDecomposition squarefree_decomposition(const Poly& f);

// Squarefree part of f (product of distinct factors), grevlex-monic.
Poly squarefree_part(const Poly& f);

}  // namespace critcert

#endif
