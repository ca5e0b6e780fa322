#pragma once

#include <cstdint>
#include <string>

#include "hhcert/gf.hpp"
#include "hhcert/jordan2.hpp"
#include "hhcert/spectrum.hpp"

namespace hhcert {

struct ClosureCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotUnipotent : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// BFS closure of a generating set under multiplication.
struct Closure {
    std::vector<Mat> elements;  // identity first
    std::size_t order() const { return elements.size(); }
};
Closure closure(const std::vector<Mat>& gens, std::size_t cap = std::size_t(1) << 20);

// Group order only; uses the bit-packed path over F_2 when the whole matrix
// fits in a word.
std::size_t closure_order(const std::vector<Mat>& gens, std::size_t cap = std::size_t(1) << 20);

std::size_t element_order(const Mat& m, std::size_t cap = std::size_t(1) << 20);

// Monic polynomial over FF, constant term first.
using FFPoly = std::vector<FF::elt>;
FFPoly ffpoly_mul(const FF& F, const FFPoly& a, const FFPoly& b);
FFPoly ffpoly_mod(const FF& F, FFPoly a, const FFPoly& b);
FFPoly ffpoly_gcd(const FF& F, FFPoly a, FFPoly b);
FFPoly ffpoly_lcm(const FF& F, const FFPoly& a, const FFPoly& b);
std::string ffpoly_to_string(const FF& F, const FFPoly& p);

// Least-degree monic annihilating polynomial, by accumulating the Krylov
// relation of every standard basis vector.
FFPoly minpoly(const Mat& M);

// Evaluate p at M (Horner); used to confirm annihilation.
Mat ffpoly_eval(const FFPoly& p, const Mat& M);

// Jordan type of a unipotent matrix, recovered from the rank sequence of
// powers of M - I.
JordanType jordan_type_unipotent(const Mat& M);

// --- permutation actions -------------------------------------------------

struct Perm {
    std::vector<long> img;

    long degree() const { return static_cast<long>(img.size()); }
    long order() const;
    Perm power(long k) const;
    long fixed_points() const;
    bool is_identity() const;
    Perm operator*(const Perm& o) const;  // apply o after this
    bool operator==(const Perm& o) const { return img == o.img; }
};

// Trace vector of the permutation module: values[k] = #fix(g^k), optionally
// with the trivial constituent removed.
CyclicTrace perm_trace(const Perm& g, bool minus_trivial = false);
CyclicTrace perm_trace_from_fixes(const std::vector<long>& fixes, bool minus_trivial = false);

// Permutation matrix over F: e_i -> e_{g(i)} acting on row vectors.
Mat perm_matrix(const FF& F, const Perm& g);

// --- module spinning -------------------------------------------------------

// Smallest subspace containing the seeds and closed under every generator
// (acting on row vectors from the right).
RowSpace spin(const std::vector<Mat>& gens, const std::vector<std::vector<FF::elt>>& seeds);

// Action of M on an invariant row space, in the basis of the RowSpace.
Mat restrict_action(const Mat& M, const RowSpace& sub);

// Action of M on the quotient by an invariant row space, coordinates taken at
// the non-pivot columns.
Mat quotient_action(const Mat& M, const RowSpace& sub);

struct ChopOptions {
    int trials = 40;                // random seed vectors tried per factor
    std::uint64_t seed = 0x5eed1e5; // RNG seed, fixed for reproducibility
};

struct ChopFactor {
    long dim = 0;
    bool budget_limited = false;  // no invariant subspace found within budget
    std::vector<Mat> action;
};

// Repeatedly splits the module along invariant subspaces found by spinning
// random vectors. Factors are composition factors up to the trial budget;
// irreducibility is only ever reported as "no subspace found within budget".
std::vector<ChopFactor> chop(const std::vector<Mat>& gens, const ChopOptions& opts = {});

// --- bilinear forms --------------------------------------------------------

// Basis of the space of bilinear forms B with g^T B g = B for all generators.
std::vector<Mat> invariant_bilinear_forms(const std::vector<Mat>& gens);

bool is_alternating(const Mat& B);
bool preserves_form(const std::vector<Mat>& gens, const Mat& B);

// --- small bundled/standard groups ----------------------------------------

// Elementary transvections E_ij(1), which generate SL_n over a prime field.
std::vector<Mat> sl_elementary_generators(const FF& F, long n);

// Symplectic transvections t_v(x) = x + <x,v> v over F_2 for every nonzero v,
// with the form pairing coordinates (2i, 2i+1); generates Sp_n(2).
std::vector<Mat> sp_transvection_generators(long n);

// Action of matrix generators on the nonzero vectors of the natural module,
// points ordered by packed value.
std::vector<Perm> nonzero_vector_action(const std::vector<Mat>& gens);

// Action on 1-dimensional subspaces (projective points).
std::vector<Perm> projective_point_action(const std::vector<Mat>& gens);

}  // namespace hhcert
