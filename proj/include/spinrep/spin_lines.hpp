#pragma once

#include <vector>

#include "spinrep/rep.hpp"

namespace spinrep {

// A chain of interlocking labels with fixed l - ldot = +spin (or -spin when
// dual), both weights stepping by 1/2 starting from (spin, 0).
struct SpinLine {
    HalfInt spin;
    bool dual = false;
    std::vector<RepLabel> entries;
};

SpinLine line(HalfInt spin, int n, bool dual = false);
std::vector<long long> degree_sequence(const SpinLine& line);

// Tensor-algebra data attached to a label: k = 2l factors and r = 2ldot
// conjugate factors, a complex algebra of dimension 2(k+r) and a spinspace of
// dimension 2^(k+r).
struct TensorStructure {
    long long k = 0;
    long long r = 0;
    long long complex_dim = 0;
    long long spinspace_log2 = 0;
};

TensorStructure tensor_structure(const RepLabel& rep);

// All labels (l +- 1/2, ldot +- 1/2) with non-negative components, enumerated
// as (--), (+-), (-+), (++).
std::vector<RepLabel> interlocking_neighbors(const RepLabel& rep);

// The 2s+1 labels on the anti-diagonal from (s + shift/2, shift/2) down to
// (shift/2, s + shift/2), stepping (-1/2, +1/2).
std::vector<RepLabel> spin_multiplet(HalfInt s, int shift = 0);

}  // namespace spinrep
