#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <array>
#include <complex>
#include <vector>

#include "spinrep/half_int.hpp"

namespace spinrep {

using SpMat = Eigen::SparseMatrix<double>;
using SpMatC = Eigen::SparseMatrix<std::complex<double>>;

// Label (l, ldot) of a finite-dimensional irreducible representation of the
// Lorentz group; both weights are non-negative half-integers.
struct RepLabel {
    HalfInt l;
    HalfInt ldot;

    RepLabel() = default;
    RepLabel(HalfInt l_, HalfInt ldot_) : l(l_), ldot(ldot_) {
        if (l.twice < 0 || ldot.twice < 0)
            throw std::invalid_argument("RepLabel: weights must be non-negative");
    }
    static RepLabel from_twice(long long tl, long long tldot) {
        return RepLabel(HalfInt(tl), HalfInt(tldot));
    }

    friend bool operator==(const RepLabel& a, const RepLabel& b) {
        return a.l == b.l && a.ldot == b.ldot;
    }
    friend bool operator!=(const RepLabel& a, const RepLabel& b) { return !(a == b); }

    std::string str() const { return "(" + l.str() + "," + ldot.str() + ")"; }
};

struct GelfandNaimarkPair {
    HalfInt l0;
    HalfInt l1;
};

long long degree(const RepLabel& rep);                       // (2l+1)(2ldot+1)
HalfInt spin(const RepLabel& rep);                           // |l - ldot|
std::vector<HalfInt> spin_values(const RepLabel& rep);       // -s, -s+1, ..., s
std::vector<HalfInt> clebsch_gordan_spins(const RepLabel&);  // (k+r)/2 down to |k-r|/2

GelfandNaimarkPair to_gelfand_naimark(const RepLabel& rep);
RepLabel from_gelfand_naimark(const GelfandNaimarkPair& pair);

// Raising/lowering/weight matrices of a single su(2) factor of weight l,
// on the basis |l,m> ordered m = l, l-1, ..., -l.  `scale` multiplies all
// three operators (default 1 keeps the standard matrix elements).
struct LadderOps {
    HalfInt l;
    double scale = 1.0;
    int dim = 1;
    Eigen::MatrixXd plus;             // raising
    Eigen::MatrixXd minus;            // lowering
    std::vector<HalfInt> weights;     // diagonal of the weight operator, exact
    Eigen::MatrixXd third() const;    // scale * diag(weights)
    Eigen::MatrixXd j1() const;       // (plus + minus)/2
    Eigen::MatrixXd j2() const;       // (plus - minus)/(2i), real antisym part dropped
    Eigen::MatrixXcd j2c() const;     // (plus - minus)/(2i) as a complex matrix
};

LadderOps ladder_matrices(HalfInt l, double scale = 1.0);

// Squared matrix element of the raising (dir=+1) / lowering (dir=-1) operator
// acting on |l,m>; exact integer.
long long ladder_entry_sq(HalfInt l, HalfInt m, int dir);

// The six operators of a product representation: the X set acts on the first
// factor, the Y set on the second.  Matrices are materialized sparsely, in
// the basis |l,m;ldot,mdot> ordered lexicographically with m major and both
// weights descending.
struct ProductOperators {
    RepLabel rep;
    LadderOps x_factor;
    LadderOps y_factor;

    long long dim() const { return degree(rep); }
    SpMat xp() const;
    SpMat xm() const;
    SpMat x3() const;
    SpMat yp() const;
    SpMat ym() const;
    SpMat y3() const;
    std::vector<HalfInt> x3_diagonal() const;  // exact weights
    std::vector<HalfInt> y3_diagonal() const;
};

ProductOperators product_operators(const RepLabel& rep, double scale = 1.0);

// Boost/rotation generators A_i, B_i recovered from the X/Y operators.
struct Sl2cGenerators {
    std::array<SpMatC, 3> a;
    std::array<SpMatC, 3> b;
};

Sl2cGenerators sl2c_generators(const RepLabel& rep);

}  // namespace spinrep
