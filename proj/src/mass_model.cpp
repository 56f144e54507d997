#include "spinrep/mass_model.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace spinrep {

std::string to_string(OrbitType t) {
    switch (t) {
        case OrbitType::PositiveMass: return "O+_m";
        case OrbitType::NegativeMass: return "O-_m";
        case OrbitType::Imaginary: return "O_im";
        case OrbitType::PositiveNull: return "O+_0";
        case OrbitType::NegativeNull: return "O-_0";
        case OrbitType::Zero: return "O0_0";
    }
    return "?";
}

double mgy_mass(const RepLabel& rep, double mu0) {
    if (mu0 <= 0.0) throw std::invalid_argument("mgy_mass: mu0 must be positive");
    return mu0 * (rep.l.value() + 0.5) * (rep.ldot.value() + 0.5);
}

Rational effective_ratio(const RepLabel& rep) { return Rational(degree(rep), 2); }

std::vector<RepLabel> search_rep(double target_ratio, HalfInt spin, int count) {
    if (target_ratio <= 0.0) throw std::invalid_argument("search_rep: target must be positive");
    if (count < 1) throw std::invalid_argument("search_rep: count must be at least 1");
    if (spin.twice < 0) throw std::invalid_argument("search_rep: spin must be non-negative");

    // Entry i of the primal line has effective ratio (i+2s+1)(i+1)/2, which is
    // increasing in i; everything past twice the target scores worse than the
    // line start, so a finite window suffices for any count.
    std::vector<std::pair<RepLabel, double>> scored;
    long long extra = count + 4;
    for (long long i = 0;; ++i) {
        RepLabel rep = RepLabel::from_twice(spin.twice + i, i);
        double eff = effective_ratio(rep).value();
        scored.emplace_back(rep, std::abs(eff - target_ratio));
        if (eff > 2.0 * target_ratio && --extra <= 0) break;
    }
    std::stable_sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return degree(a.first) < degree(b.first);
    });
    std::vector<RepLabel> out;
    for (int i = 0; i < count && i < static_cast<int>(scored.size()); ++i)
        out.push_back(scored[static_cast<size_t>(i)].first);
    return out;
}

OrbitType orbit_type(const std::array<double, 4>& p, double m, double tol) {
    for (double x : p)
        if (!std::isfinite(x)) throw std::invalid_argument("orbit_type: non-finite momentum");
    if (!std::isfinite(m)) throw std::invalid_argument("orbit_type: non-finite mass");

    double s2 = p[0] * p[0] - p[1] * p[1] - p[2] * p[2] - p[3] * p[3];
    double scale = std::max({1.0, m * m, std::abs(s2)});
    double eps = tol * scale;

    bool all_zero = true;
    for (double x : p) all_zero = all_zero && std::abs(x) <= tol;

    if (m > 0.0) {
        if (std::abs(s2 - m * m) <= eps) return p[0] > 0 ? OrbitType::PositiveMass : OrbitType::NegativeMass;
        if (std::abs(s2 + m * m) <= eps) return OrbitType::Imaginary;
        throw std::invalid_argument("orbit_type: momentum is on neither +-m^2 hyperboloid");
    }
    if (all_zero) return OrbitType::Zero;
    if (std::abs(s2) <= eps) return p[0] > 0 ? OrbitType::PositiveNull : OrbitType::NegativeNull;
    if (s2 < 0) return OrbitType::Imaginary;
    throw std::invalid_argument("orbit_type: massless momentum off the light cone");
}

std::array<Rational, 6> gmo_coefficients(const QuantumNumbers& qn,
                                         const std::optional<Rational>& gamma_prime_coeff) {
    Rational y(qn.hypercharge);
    Rational i = qn.isospin.rat();
    Rational u = qn.uspin.rat();
    Rational q(qn.charge);
    std::array<Rational, 6> row;
    row[0] = Rational(1);
    row[1] = y;
    row[2] = i * (i + Rational(1)) - y * y * Rational(1, 4);
    row[3] = Rational(1);
    row[4] = -q;
    row[5] = gamma_prime_coeff ? *gamma_prime_coeff
                               : u * (u + Rational(1)) - q * q * Rational(1, 4);
    return row;
}

double gmo_predict(const GmoParams& params, const QuantumNumbers& qn,
                   const std::optional<Rational>& gamma_prime_coeff) {
    auto row = gmo_coefficients(qn, gamma_prime_coeff);
    double value = params.m0 + params.alpha * row[0].value() + params.beta * row[1].value() +
                   params.gamma * row[2].value() + params.alpha_prime * row[3].value() +
                   params.beta_prime * row[4].value() + params.gamma_prime * row[5].value();
    if (!params.quadratic) return value;
    if (value < 0.0) throw std::domain_error("gmo_predict: negative squared mass");
    return std::sqrt(value);
}

double gmo_hypercharge_only(const GmoParams& params, const QuantumNumbers& qn) {
    GmoParams reduced = params;
    reduced.alpha_prime = reduced.beta_prime = reduced.gamma_prime = 0.0;
    return gmo_predict(reduced, qn);
}

double m0_average(const std::vector<double>& masses, bool quadratic,
                  const std::vector<long long>& weights) {
    if (masses.empty()) throw std::invalid_argument("m0_average: no masses");
    std::vector<long long> w = weights;
    if (w.empty()) w.assign(masses.size(), 1);
    if (w.size() != masses.size()) throw std::invalid_argument("m0_average: weight count mismatch");
    long long total = 0;
    double acc = 0.0;
    for (size_t i = 0; i < masses.size(); ++i) {
        total += w[i];
        acc += static_cast<double>(w[i]) * (quadratic ? masses[i] * masses[i] : masses[i]);
    }
    if (total <= 0) throw std::invalid_argument("m0_average: weights must sum positive");
    return acc / static_cast<double>(total);
}

FitResult gmo_fit(const std::vector<Observation>& observations, const FitOptions& options,
                  double m0) {
    FitResult result;
    // Columns of the design matrix; the two constant columns are merged into
    // one combined offset since they are indistinguishable.
    std::vector<std::string> names = {"alpha+alpha'"};
    if (!options.beta_zero) names.push_back("beta");
    names.push_back("gamma");
    if (!options.hypercharge_only) {
        names.push_back("beta'");
        names.push_back("gamma'");
    }
    result.column_names = names;

    int cols = static_cast<int>(names.size());
    int rows = static_cast<int>(observations.size());
    if (rows < cols)
        throw std::invalid_argument("gmo_fit: fewer observations than free parameters");

    Eigen::MatrixXd design(rows, cols);
    Eigen::VectorXd target(rows);
    for (int r = 0; r < rows; ++r) {
        const Observation& obs = observations[static_cast<size_t>(r)];
        auto coeffs = gmo_coefficients(obs.qn, obs.gamma_prime_coeff);
        int c = 0;
        design(r, c++) = 1.0;
        if (!options.beta_zero) design(r, c++) = coeffs[1].value();
        design(r, c++) = coeffs[2].value();
        if (!options.hypercharge_only) {
            design(r, c++) = coeffs[4].value();
            design(r, c++) = coeffs[5].value();
        }
        target(r) = (options.quadratic ? obs.mass * obs.mass : obs.mass) - m0;
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    qr.setThreshold(1e-10);
    result.rank = static_cast<int>(qr.rank());
    if (result.rank < cols) {
        result.rank_deficient = true;
        Eigen::FullPivLU<Eigen::MatrixXd> lu(design);
        lu.setThreshold(1e-10);
        Eigen::MatrixXd kernel = lu.kernel();
        std::string desc = "rank " + std::to_string(result.rank) + " of " + std::to_string(cols) +
                           "; null-space combinations:";
        for (int k = 0; k < kernel.cols(); ++k) {
            desc += " [";
            for (int c = 0; c < cols; ++c) {
                if (c) desc += ", ";
                desc += names[static_cast<size_t>(c)] + "=" + std::to_string(kernel(c, k));
            }
            desc += "]";
        }
        result.null_space = desc;
        return result;
    }

    Eigen::VectorXd sol = qr.solve(target);
    int c = 0;
    result.params.quadratic = options.quadratic;
    result.params.m0 = m0;
    result.params.alpha = sol(c++);  // combined offset alpha + alpha'
    result.params.alpha_prime = 0.0;
    result.params.beta = options.beta_zero ? 0.0 : sol(c++);
    result.params.gamma = sol(c++);
    if (!options.hypercharge_only) {
        result.params.beta_prime = sol(c++);
        result.params.gamma_prime = sol(c++);
    }

    result.theta_beta = result.params.beta != 0.0 ? result.params.beta_prime / result.params.beta : 0.0;
    result.theta_gamma = result.params.gamma != 0.0 ? result.params.gamma_prime / result.params.gamma : 0.0;

    Eigen::VectorXd fitted = design * sol;
    double ss = 0.0;
    for (int r = 0; r < rows; ++r) {
        double res = target(r) - fitted(r);
        result.residuals.push_back(res);
        ss += res * res;
    }
    result.rms = std::sqrt(ss / rows);
    return result;
}

namespace {

ClosureReport make_report(std::string relation, double lhs, double rhs) {
    ClosureReport rep;
    rep.relation = std::move(relation);
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.abs_diff = std::abs(lhs - rhs);
    double mean = 0.5 * (std::abs(lhs) + std::abs(rhs));
    rep.rel_diff = mean > 0 ? rep.abs_diff / mean : 0.0;
    rep.rel_to_lhs = std::abs(lhs) > 0 ? rep.abs_diff / std::abs(lhs) : 0.0;
    return rep;
}

}  // namespace

ClosureReport closure_baryon(double m_n, double m_lambda, double m_sigma, double m_xi) {
    return make_report("m_Xi + m_N = (3 m_Lambda + m_Sigma)/2", m_xi + m_n,
                       0.5 * (3.0 * m_lambda + m_sigma));
}

ClosureReport closure_meson(double m_k, double m_singlet, double m_triplet) {
    return make_report("4 m_K^2 = 3 m_singlet^2 + m_triplet^2", 4.0 * m_k * m_k,
                       3.0 * m_singlet * m_singlet + m_triplet * m_triplet);
}

SplittingRegime splitting_regime(double delta_m2, double m0_sq, double threshold) {
    if (m0_sq <= 0.0) throw std::invalid_argument("splitting_regime: m0_sq must be positive");
    return delta_m2 / m0_sq < threshold ? SplittingRegime::Linear : SplittingRegime::Quadratic;
}

}  // namespace spinrep
