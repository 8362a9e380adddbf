#ifndef CRITCERT_GROEBNER_HPP
#define CRITCERT_GROEBNER_HPP

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "critcert/poly.hpp"
#include "critcert/univariate.hpp"

namespace critcert {

struct GroebnerBasis {
    OrderSpec order;
    std::vector<Poly> elements;  // reduced, monic, sorted by leading monomial
};

// Thrown when a computation detects non-generic coordinates and the caller
// should retry after re-randomizing the coordinate change.
struct RetryableFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Ideal {
public:
    Ideal() = default;
    Ideal(std::vector<std::string> vars, std::vector<Poly> gens);
    static Ideal unit(std::vector<std::string> vars);
    static Ideal zero(std::vector<std::string> vars);

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::vector<Poly>& generators() const { return gens_; }
    bool is_unit() const;  // via grevlex basis
    bool is_zero_ideal() const { return gens_.empty(); }

    const GroebnerBasis& groebner(const OrderSpec& order) const;

    // Ideal generated by a known Groebner basis; primes the cache so the
    // basis is not recomputed.
    static Ideal with_basis(std::vector<std::string> vars, GroebnerBasis gb);

private:
    std::vector<std::string> vars_;
    std::vector<Poly> gens_;
    mutable std::shared_ptr<std::map<OrderSpec, GroebnerBasis>> cache_ =
        std::make_shared<std::map<OrderSpec, GroebnerBasis>>();
};

// Fully reduced remainder of f modulo G; f - result lies in <G>.
Poly normal_form(const Poly& f, const GroebnerBasis& G);

// Reduced Groebner basis of <gens> under the order.
GroebnerBasis buchberger(const std::vector<Poly>& gens, const OrderSpec& order);

// Hilbert dimension via independent variable sets of the leading-term
// ideal; -1 for the unit ideal, n for the zero ideal.
int hilbert_dimension(const Ideal& I);
// One maximal independent variable set witnessing the dimension.
std::vector<std::size_t> max_independent_set(const Ideal& I);

// I intersected with the subring in the kept variables (indices into
// vars(), ascending). The result lives in the smaller ring.
Ideal elimination_ideal(const Ideal& I, const std::vector<std::size_t>& keep);

// I : g^inf.
Ideal saturate_by_poly(const Ideal& I, const Poly& g);
// I : J^inf = intersection of I : g^inf over the generators of J.
Ideal saturate_by_ideal(const Ideal& I, const Ideal& J);

Ideal ideal_intersection(const Ideal& I, const Ideal& J);

// Finiteness criterion on grevlex leading terms; true for the unit ideal.
bool is_zero_dimensional(const Ideal& I);

// Radical of a zero-dimensional ideal (Seidenberg: adjoin the squarefree
// part of the univariate eliminant in each variable).
Ideal radical_zero_dim(const Ideal& I);

// Radical of an equidimensional one-dimensional ideal.
Ideal radical_dim1_equidim(const Ideal& I);

// Splits a one-dimensional ideal into its radical zero-dimensional part I0
// (possibly <1>) and radical equidimensional one-dimensional part I1.
// Throws RetryableFailure when the chosen coordinates are non-generic.
struct EquidimSplit {
    Ideal dim0;
    Ideal dim1;
};
EquidimSplit equidim_split_dim1(const Ideal& I);

bool ideal_membership(const Poly& f, const Ideal& I);

// Minimal polynomial of multiplication by g on the quotient algebra of a
// zero-dimensional ideal; equals the generator of (I + <g - T>) ∩ Q[T].
// The constant 1 for the unit ideal.
UPoly minimal_polynomial(const Ideal& I, const Poly& g);

// Groebner basis conversion for zero-dimensional ideals via linear algebra
// on the quotient (much faster than Buchberger for elimination orders).
GroebnerBasis fglm(const Ideal& I, const OrderSpec& target);

// Univariate eliminant of I in the given variable: the generator of
// I ∩ Q[vars()[var]]. Zero polynomial when the elimination ideal is zero;
// the constant 1 for the unit ideal.
Poly univariate_eliminant(const Ideal& I, std::size_t var);

}  // namespace critcert

#endif
