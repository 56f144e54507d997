#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "spinrep/rational.hpp"

namespace spinrep {
namespace su3 {

struct YoungPQ {
    int p = 0;
    int q = 0;

    YoungPQ() = default;
    YoungPQ(int p_, int q_) : p(p_), q(q_) {
        if (p < 0 || q < 0) throw std::invalid_argument("YoungPQ: negative label");
    }
};

long long degree(const YoungPQ& pq);  // (p+1)(q+1)(p+q+2)/2
std::vector<std::vector<long long>> degrees_table(int max);

// Supermultiplets carry integer charge/hypercharge spectra only for
// p - q = 0 (mod 3).
bool admissible(const YoungPQ& pq);

// Distinct admissible degrees up to the bound, sorted ascending.
std::vector<long long> admissible_degrees(long long max_degree);

using Mat3r = std::array<std::array<Rational, 3>, 3>;

Mat3r mat3_zero();
Mat3r mat3_identity();
Mat3r mat3_add(const Mat3r& a, const Mat3r& b);
Mat3r mat3_sub(const Mat3r& a, const Mat3r& b);
Mat3r mat3_mul(const Mat3r& a, const Mat3r& b);
Mat3r mat3_scale(const Rational& s, const Mat3r& a);
bool mat3_eq(const Mat3r& a, const Mat3r& b);
Rational mat3_trace(const Mat3r& a);

// The nine operators A^i_k of the external basis; okubo(i, k) with
// i, k in 1..3 and the diagonal ones traceless-summing to zero.
struct OkuboBasis3 {
    Mat3r a[3][3];
    const Mat3r& at(int upper, int lower) const { return a[upper - 1][lower - 1]; }
};

const OkuboBasis3& okubo_basis3();

// The su(2) operators a^i_j = A^i_j - (1/2) delta^i_j (A^1_1 + A^2_2)
// embedded as 3x3 matrices, indices in 1..2.
struct Su2Embedding {
    Mat3r a11, a12, a21, a22;
    const Mat3r& at(int upper, int lower) const;
};

Su2Embedding su2_embedding();

struct SpinFixations {
    Mat3r i3;  // A^1_1 + (1/2) A^3_3
    Mat3r u3;  // A^3_3 + (1/2) A^1_1
    Mat3r v3;  // A^1_1 + (1/2) A^2_2
};

SpinFixations spin_fixations();

// Basis of the eight-dimensional regular representation used for the adjoint
// images: the six off-diagonal A^i_k followed by A^1_1 and A^3_3.
using Mat8r = std::array<std::array<Rational, 8>, 8>;

Mat8r adjoint_image(const Mat3r& x);
std::array<Rational, 8> mat3_to_adjoint_coords(const Mat3r& x);

// alpha * A^1_1 + beta * A^3_3 + gamma * 1, in the defining (3) or the
// regular (8) representation.
Eigen::MatrixXd charge_operator(double alpha, double beta, double gamma, int dimension);

// Hypercharge operator -A^3_3 whose adjoint eigenvalues are {1,1,0,...,-1,-1}.
Mat3r hypercharge_operator();

Eigen::Matrix3d unitary_field(double C, double Cprime);
// Exact variant for rational couplings.
Mat3r unitary_field_exact(const Rational& C, const Rational& Cprime);

// Multiplet sizes of the 8 -> 3+2+2+1 reduction.
std::array<int, 4> reduction_811();

}  // namespace su3
}  // namespace spinrep
