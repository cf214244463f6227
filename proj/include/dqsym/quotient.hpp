#pragma once

#include <map>
#include <string>
#include <vector>

#include "dqsym/dqsym.hpp"
#include "dqsym/poly.hpp"
#include "dqsym/series.hpp"

namespace dqsym {

// Bigraded dimension table in the cartesian display convention: rows from the
// top carry decreasing t-degree, columns left to right carry increasing
// q-degree, zero entries after the last nonzero of a row are omitted.
struct HilbertMatrix {
    unsigned n = 0;
    std::map<Bidegree, unsigned long> entries;  // computed bidegrees only

    bool computed(Bidegree d) const { return entries.count(d) != 0; }
    unsigned long value_or_zero(Bidegree d) const;

    std::vector<std::vector<unsigned long>> display_rows() const;
    std::string str() const;
};

// Dimensionwise equality, absent entries reading as zero.
bool same_dimensions(const HilbertMatrix& u, const HilbertMatrix& v);

// Spanning set of the bidegree-d component of the ideal generated by gens:
// all m * g with m a monomial of the complementary bidegree.  Generators must
// be bihomogeneous and constant-term free.
std::vector<Polynomial> ideal_component(const std::vector<Polynomial>& gens, unsigned n,
                                        Bidegree d);

// Rank of the coefficient matrix in monomial_basis(n, d) coordinates, exact.
std::size_t exact_rank(const std::vector<Polynomial>& vectors, unsigned n, Bidegree d);

// dim of the bidegree-d component of Q[x,y] / J_n, J_n the ideal generated by
// the bimonomial invariants without constant term.
unsigned long dq_dimension(unsigned n, Bidegree d);

// Hilbert matrix of DQ_n on the band d1+d2 <= n-1, plus the band d1+d2 = n
// whose computed vanishing is part of the triangularity claim.
HilbertMatrix hilbert_dq(unsigned n, bool include_vanishing_band = true);

// The conjectured matrix: Catalan(n-1) on the antidiagonal d1+d2 = n-1 and,
// below it, entry(d) = sum of the n-1 matrix over bidegrees <= d componentwise.
HilbertMatrix predicted_dq(unsigned n);

// Basis of the orthogonal complement of the ideal component under the
// differential scalar product; integer-normalized, deterministic.
std::vector<Polynomial> harmonics_basis(unsigned n, Bidegree d);

// The conjectured monomial basis of DQ_n, bidegree by bidegree: built from the
// n-1 basis by multiplying in the last variable pair, then pushed along the
// antidiagonal with the x->y exponent shift.
std::map<Bidegree, std::vector<Monomial>> conjectured_basis(unsigned n);

// True iff at every bidegree the candidate monomials are independent modulo
// the ideal and their number matches the computed quotient dimension.
bool basis_check(unsigned n);

// Hilbert series of Q_n = Q[x] / <QSym_n^+>:  sum_k (n-k)/(n+k) C(n+k,k) q^k.
UnivariateSeries hilbert_q(unsigned n);

// Polarized power sums sum_i x_i^a y_i^b for 1 <= a+b <= maxdeg; these
// generate the diagonal invariants (Weyl's degree bound being maxdeg = n).
std::vector<Polynomial> dsym_generators(unsigned n, unsigned maxdeg);
unsigned long dqsym_dimension(unsigned n, Bidegree d);  // #bicompositions, length <= n

// Bigraded dimensions of R_n = DQSym_n / <DSym_n^+> for bidegrees d <= maxbd
// componentwise with d1+d2 <= total_cap.  gen_maxdeg = 0 means the Weyl bound n.
HilbertMatrix hilbert_r_diag(unsigned n, Bidegree maxbd, unsigned total_cap = ~0u,
                             unsigned gen_maxdeg = 0);

// Psi_n(q) = Psi_{n-1} + q^n (n!_q - Psi_{n-1}), Psi_0 = 1.
UnivariateSeries psi(unsigned n);

// (1+q)...(1+...+q^{n-1}) ((1-q)^{n+1} - q^{n+1}) / (1-2q), truncated.
UnivariateSeries hilbert_r_closed_form(unsigned n, unsigned truncation);

// Would-be Hilbert series of R_n if DQSym_n were a free DSym_n module:
// [sum_{k=0}^n ((1-t)^{-1}(1-q)^{-1} - 1)^k] / h_n[1/((1-t)(1-q))].
// Carries negative coefficients, which is the non-freeness witness.
BivariateSeries plethystic_guess(unsigned n, Bidegree trunc);

// Dimension series of QSym_n / <Sym_n^+> by exact elimination, through the
// degree of Psi_n.
UnivariateSeries hilbert_r_univariate(unsigned n);

}  // namespace dqsym
