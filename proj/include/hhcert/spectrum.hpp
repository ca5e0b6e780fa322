#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "hhcert/cyclotomic.hpp"
#include "hhcert/qpoly.hpp"

namespace hhcert {

struct NonIntegralMultiplicity : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NegativeMultiplicity : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotSemisimple : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotConstant : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonIntegral : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Trace vector of a single element: values[k] = chi(g^k) for g of order n.
// ell, when set, is the representation characteristic; inversion requires
// ell coprime to n (the semisimple case), everything else is routed to the
// Jordan-form machinery.
struct CyclicTrace {
    long n = 1;
    std::vector<CycNum> values;
    std::optional<long> ell;
};

// Eigenvalue multiplicities of g: mults[j] is the multiplicity of zeta_n^j.
struct MultVector {
    long n = 1;
    std::vector<Int> mults;

    Int total() const;
};

// True iff values[k] and values[n-k] are complex conjugates; traces of
// genuine representations satisfy this, inputs are checked rather than
// trusted.
bool is_conjugate_symmetric(const CyclicTrace& t);

// Fourier inversion over <g>: mults[j] = (1/n) sum_k values[k] zeta^{-jk},
// each verified to be a nonnegative rational integer summing to values[0].
MultVector eigen_multiplicities(const CyclicTrace& t);

// chi(g^k) = sum_j mults[j] zeta^{jk}; right inverse of the above.
CyclicTrace trace_of(const MultVector& m);

// Number of distinct eigenvalues, i.e. the minimum polynomial degree of a
// semisimple element.
long minpoly_degree_semisimple(const MultVector& m);

std::vector<long> missing_eigenvalues(const MultVector& m);

// Decomposition of a trace that is constant off the identity:
// chi = k * rho_reg + a * 1, with k integral; "proper" certifies that
// chi - rho_reg is itself a character (a >= 0, or -a (n-1) < chi(1)).
struct Tr1Decomposition {
    Int k;
    bool proper;
};
Tr1Decomposition tr1_decompose(const CyclicTrace& t, const Int& a);

// Trace of k * rho_reg + a * 1 on a cyclic group of order n.
CyclicTrace tr1_reconstruct(long n, const Int& k, const Int& a);

// Numeric torus certificate: phi takes constant value a on T \ {1}; true
// certifies that phi|_T contains every character of T, hence deg phi(t) = |t|.
bool torus_certificate(const Int& deg_lower, const Int& a, const Int& torus_order);

// Symbolic variant over a whole q-family.
PositivityCert torus_certificate(const QPoly& deg_lower, const Int& a, const QPoly& torus_order,
                                 const QFamily& fam);

}  // namespace hhcert
