#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "spinrep/rational.hpp"
#include "spinrep/rep.hpp"

namespace spinrep {

using Matrix4ll = Eigen::Matrix<long long, 4, 4>;
using Matrix6ll = Eigen::Matrix<long long, 6, 6>;

// Space-time metric, stored with the timelike axis last: diag(-1,-1,-1,1).
Matrix4ll minkowski_metric();

// Collective bivector labels in emission order; label 0 is the timelike axis.
struct BivectorOrder {
    std::array<std::pair<int, int>, 6> label_pairs;  // e.g. (1,0) means axes x1,x0
    std::array<std::string, 6> names;
};

const BivectorOrder& bivector_order();

// Induced metric on the six-dimensional bivector space,
// g_(ab)(cd) = g_ac g_bd - g_ad g_bc over the collective order.
Matrix6ll bivector_metric(const Matrix4ll& g);

struct GammaSet {
    std::array<Eigen::MatrixXcd, 4> gamma;  // Gamma_0 .. Gamma_3
    long long dim() const { return gamma[0].rows(); }
};

// 4x4 matrices of the first-order spin-1/2 system in the standard
// representation (diagonal Gamma_0).
GammaSet dirac_gamma_set();

// Gamma(p) = Gamma_0 p0 - Gamma_1 p1 - Gamma_2 p2 - Gamma_3 p3.
Eigen::MatrixXcd gamma_of_p(const GammaSet& g, const std::array<double, 4>& p);

struct PairingReport {
    bool paired = false;
    std::vector<std::complex<double>> eigenvalues;
    std::string message;
};

// True when the multiset of nonzero eigenvalues is symmetric under negation.
PairingReport pm_pairing_check(const Eigen::MatrixXcd& g0, double tol = 1e-9);

struct MassSpectrum {
    std::vector<double> masses;  // mu0 * lambda for real lambda > 0, descending
    std::vector<std::complex<double>> complex_eigenvalues;
};

MassSpectrum mass_spectrum_from_gamma0(const Eigen::MatrixXcd& g0, double mu0,
                                       double tol = 1e-9);

struct DetFactorizationReport {
    struct Group {
        double s2 = 0.0;
        std::vector<std::complex<double>> determinants;
        double max_rel_deviation = 0.0;
    };
    std::vector<Group> groups;
    std::vector<double> roots_s2;  // values of s^2 where the determinant vanishes
    bool constant_on_hyperboloids = false;
};

// Evaluates det(Gamma(p) + m E) on each sample, groups samples by
// s^2 = p0^2 - p1^2 - p2^2 - p3^2 and checks within-group constancy;
// determinant roots in s^2 are located by a scan plus bisection.
DetFactorizationReport det_factorization_check(const GammaSet& g, double m,
                                               const std::vector<std::array<double, 4>>& samples,
                                               double tol = 1e-7);

struct DiracLMatrices {
    std::array<Eigen::Matrix2cd, 3> l;
    std::array<Eigen::Matrix2cd, 3> l_conj;
};

// L_i = (c/2) sigma_i and the conjugated triple.
DiracLMatrices dirac_l_matrices(double c);

// Weight operator of a product representation organized block-diagonally by
// the second-factor weight, each block = mdot * diag(l, l-1, ..., -l).
// Entries are exact rationals (quarter-integers).
struct Lambda3 {
    RepLabel rep;
    std::vector<HalfInt> block_mdot;            // descending ldot ... -ldot
    std::vector<std::vector<Rational>> blocks;  // one diagonal per mdot

    long long dimension() const;
    Rational trace() const;
    std::vector<Rational> eigenvalues() const;  // all diagonal entries flattened
};

Lambda3 lambda3_generalized(HalfInt l, HalfInt ldot);

// Difference-form coefficient matrices L_j (x) 1 - 1 (x) conj(L_j) for
// j = 1..3; the second factor enters in the conjugate representation.
std::array<SpMatC, 3> bivector_system_matrices(const RepLabel& rep, long long cap = 5200);

}  // namespace spinrep
