#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinrep/clifford.hpp"
#include "spinrep/mass_model.hpp"
#include "spinrep/rep.hpp"

namespace spinrep {

enum class RepKind { Complex, Real, ComplexConjugate };
enum class SpinspaceRing { R, C, H };

std::string to_string(RepKind k);
std::string to_string(SpinspaceRing r);

// One state vector of the built-in database: representation label, symmetry
// space, algebra, spinspace, parity, quantum numbers, experimental mass.
struct ParticleState {
    std::string name;
    RepLabel rep;
    RepKind rep_kind = RepKind::Complex;
    long long sym_k = 0;
    long long sym_r = 0;
    std::optional<long long> complex_dim;  // set for complex / conjugate states
    CliffordSignature signature;           // real subalgebra
    long long spinspace_log2 = 0;
    SpinspaceRing ring = SpinspaceRing::C;
    int parity2 = +1;
    QuantumNumbers qn;
    std::optional<Rational> gamma_prime_coeff;  // published-row override
    std::optional<std::string> quark;
    double mass_mev = 0.0;
    std::vector<std::string> notes;  // data-level anomaly annotations
    std::optional<CliffordSignature> corrected_signature;
};

struct ChargeMultiplet {
    std::string label;  // Phi3, Phi2, Phi2*, Phi0
    std::string name;   // Sigma, N, Xi, Lambda, ...
    double multiplet_mass = 0.0;
    std::vector<int> members;  // indices into Octet::states
};

struct Octet {
    std::string name;  // F12, B0, B1
    int baryon = 0;
    HalfInt spin;
    int parity2 = +1;
    std::vector<ParticleState> states;
    std::vector<ChargeMultiplet> multiplets;
};

const std::vector<Octet>& builtin_octets();
const Octet& octet_by_name(const std::string& name);  // F12 | B0 | B1
const ParticleState* find_state(const std::string& name);

// Mechanical consistency checks of one state's dimensional data; each entry
// is one violated invariant with the expected value spelled out.
std::vector<std::string> validate(const ParticleState& state);

struct AnomalyFinding {
    std::string entity;
    std::string kind;  // "signature", "label-note", "u-coefficient"
    std::string detail;
};

// Violations plus stored data-level notes over all built-in states.
std::vector<AnomalyFinding> validate_catalog();

std::optional<std::string> quark_composition(const std::string& name);
const std::vector<ChargeMultiplet>& reduction(const Octet& octet);

// Observations for the mass fit, optionally with per-name mass overrides.
std::vector<Observation> octet_observations(
    const Octet& octet, const std::vector<std::pair<std::string, double>>& overrides = {});

// Mean multiplet mass (of squared masses in quadratic mode); multiplet masses
// come from the stored table values, or from member means under overrides.
double octet_m0(const Octet& octet, bool quadratic,
                const std::vector<std::pair<std::string, double>>& overrides = {});

// Closure relation on the octet's multiplet-level masses.
ClosureReport octet_closure(const Octet& octet,
                            const std::vector<std::pair<std::string, double>>& overrides = {});

}  // namespace spinrep
