#pragma once

#include "brauer/certificate.hpp"
#include "brauer/murphy.hpp"
#include "brauer/tensor.hpp"

#include <vector>

namespace brauer {

using RatMatrix = ExactMatrix<RatFunc>;

// Gelfand-Zeitlin idempotents of one cell module over Q(δ), as operators on
// Murphy coordinates (row vectors, right action).
struct SeminormalModule {
    int vertex = -1;
    std::vector<RatMatrix> jm;  // L_1 .. L_r
    std::vector<RatMatrix> F;   // one per path
    RatMatrix f;                // row t is f_t = m_t F_t
    ExactMatrix<PolyZ> gram;
    std::vector<RatFunc> gamma;  // <f_t, f_t>
};

SeminormalModule gz_idempotents(const MurphyBasis& b, int vi);

// the contents κ_t(1..r) of a path
std::vector<PolyZ> path_contents(const Path& t);

RatMatrix rat_inverse(const RatMatrix& m);  // throws if singular

// idempotents, JM diagonalization, triangularity and Gram diagonal over Q(δ)
Certificate seminormal_checks(const MurphyBasis& b);

// the specialization δ -> δ_0 on permissible paths: evaluability, nonzero
// norms, matrix units on the quotient and the quotient Gram rank. Orthogonal
// even N with residue collisions is reported in the notes and skipped.
Certificate specialize_quotient(const MurphyBasis& b, Flavor f, int N);

}  // namespace brauer
