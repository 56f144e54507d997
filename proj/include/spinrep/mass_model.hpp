#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "spinrep/rational.hpp"
#include "spinrep/rep.hpp"

namespace spinrep {

struct QuantumNumbers {
    int baryon = 0;      // B
    HalfInt spin;        // s
    int parity2 = +1;    // sign of P^2
    int charge = 0;      // Q
    int hypercharge = 0; // Y
    HalfInt isospin;     // I >= 0
    HalfInt uspin;       // U >= 0
};

struct GmoParams {
    double m0 = 0.0;  // MeV, or MeV^2 in quadratic mode
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double alpha_prime = 0.0;
    double beta_prime = 0.0;
    double gamma_prime = 0.0;
    bool quadratic = false;
};

enum class OrbitType { PositiveMass, NegativeMass, Imaginary, PositiveNull, NegativeNull, Zero };

std::string to_string(OrbitType t);

// --- spin-mass relation -------------------------------------------------

double mgy_mass(const RepLabel& rep, double mu0);  // mu0 (l+1/2)(ldot+1/2)
Rational effective_ratio(const RepLabel& rep);     // degree/2

// The `count` labels on the primal spin line closest to the target by
// |effective_ratio - target|, ties broken toward smaller degree.
std::vector<RepLabel> search_rep(double target_ratio, HalfInt spin, int count);

OrbitType orbit_type(const std::array<double, 4>& p, double m, double tol = 1e-9);

// --- Gell-Mann--Okubo machinery ------------------------------------------

// Coefficient row [1, Y, I(I+1)-Y^2/4, 1, -Q, U(U+1)-Q^2/4] of the splitting
// formula; the last coefficient may be overridden by catalog data.
std::array<Rational, 6> gmo_coefficients(const QuantumNumbers& qn,
                                         const std::optional<Rational>& gamma_prime_coeff = {});

double gmo_predict(const GmoParams& params, const QuantumNumbers& qn,
                   const std::optional<Rational>& gamma_prime_coeff = {});
double gmo_hypercharge_only(const GmoParams& params, const QuantumNumbers& qn);

double m0_average(const std::vector<double>& masses, bool quadratic,
                  const std::vector<long long>& weights = {});

struct Observation {
    std::string name;
    QuantumNumbers qn;
    double mass = 0.0;
    std::optional<Rational> gamma_prime_coeff;  // published-row override
};

struct FitOptions {
    bool quadratic = false;
    bool hypercharge_only = false;  // drop the charge-splitting columns
    bool beta_zero = false;         // meson constraint
};

struct FitResult {
    bool rank_deficient = false;
    std::string null_space;        // description when rank-deficient
    GmoParams params;              // alpha holds the combined offset alpha+alpha'
    std::vector<double> residuals; // observed minus predicted, per observation
    double rms = 0.0;
    // proportionality ratios beta'/beta and gamma'/gamma, reported not imposed
    double theta_beta = 0.0;
    double theta_gamma = 0.0;
    std::vector<std::string> column_names;
    int rank = 0;
};

FitResult gmo_fit(const std::vector<Observation>& observations, const FitOptions& options,
                  double m0);

struct ClosureReport {
    std::string relation;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_diff = 0.0;
    double rel_diff = 0.0;      // |lhs-rhs| / mean(|lhs|,|rhs|)
    double rel_to_lhs = 0.0;    // |lhs-rhs| / |lhs|
};

// Baryon octet: m_Xi + m_N vs (3 m_Lambda + m_Sigma)/2 on masses
// {N, Lambda, Sigma, Xi}; meson octets: 4 m_K^2 vs 3 m_singlet^2 + m_triplet^2
// on masses {K, singlet, triplet}.
ClosureReport closure_baryon(double m_n, double m_lambda, double m_sigma, double m_xi);
ClosureReport closure_meson(double m_k, double m_singlet, double m_triplet);

enum class SplittingRegime { Linear, Quadratic };

SplittingRegime splitting_regime(double delta_m2, double m0_sq, double threshold = 0.15);

}  // namespace spinrep
