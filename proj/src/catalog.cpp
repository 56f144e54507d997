#include "spinrep/catalog.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace spinrep {

std::string to_string(RepKind k) {
    switch (k) {
        case RepKind::Complex: return "complex";
        case RepKind::Real: return "real";
        case RepKind::ComplexConjugate: return "complex-conjugate";
    }
    return "?";
}

std::string to_string(SpinspaceRing r) {
    switch (r) {
        case SpinspaceRing::R: return "R";
        case SpinspaceRing::C: return "C";
        case SpinspaceRing::H: return "H";
    }
    return "?";
}

namespace {

struct StateSpec {
    const char* name;
    long long tl, tldot;  // doubled rep label
    RepKind kind;
    long long k, r;  // symmetry space
    int sp, sq;      // real subalgebra signature
    long long log2;
    SpinspaceRing ring;
    int charge;
    int hypercharge;
    long long i2, u2;  // doubled isospin / u-spin
    const char* quark;
    double mass;
};

ParticleState make_state(const StateSpec& s, int baryon, HalfInt spin, int parity2) {
    ParticleState st;
    st.name = s.name;
    st.rep = RepLabel::from_twice(s.tl, s.tldot);
    st.rep_kind = s.kind;
    st.sym_k = s.k;
    st.sym_r = s.r;
    if (s.kind != RepKind::Real) st.complex_dim = 2 * (s.k + s.r);
    st.signature = CliffordSignature(s.sp, s.sq);
    st.spinspace_log2 = s.log2;
    st.ring = s.ring;
    st.parity2 = parity2;
    st.qn.baryon = baryon;
    st.qn.spin = spin;
    st.qn.parity2 = parity2;
    st.qn.charge = s.charge;
    st.qn.hypercharge = s.hypercharge;
    st.qn.isospin = HalfInt(s.i2);
    st.qn.uspin = HalfInt(s.u2);
    st.quark = s.quark;
    st.mass_mev = s.mass;
    return st;
}

std::vector<Octet> build_catalog() {
    std::vector<Octet> octets;

    {  // baryon octet, spin 1/2, positive parity
        Octet f;
        f.name = "F12";
        f.baryon = 1;
        f.spin = HalfInt(1);
        f.parity2 = +1;
        const StateSpec specs[] = {
            {"Sigma+", 67, 66, RepKind::Complex, 67, 66, 135, 131, 133, SpinspaceRing::C, +1, 0, 2, 1, "uus", 1189.4},
            {"Sigma0", 67, 66, RepKind::Real, 67, 66, 135, 131, 133, SpinspaceRing::H, 0, 0, 2, 2, "uds", 1192.4},
            {"Sigma-", 67, 66, RepKind::ComplexConjugate, 67, 66, 135, 131, 133, SpinspaceRing::C, -1, 0, 2, 1, "dds", 1197.1},
            {"p", 59, 58, RepKind::Complex, 59, 58, 119, 115, 117, SpinspaceRing::C, +1, 1, 1, 1, "uud", 938.3},
            {"n", 59, 58, RepKind::Real, 59, 58, 119, 115, 117, SpinspaceRing::H, 0, 1, 1, 2, "ddu", 939.5},
            {"Xi-", 71, 70, RepKind::Complex, 71, 70, 143, 139, 141, SpinspaceRing::C, -1, -1, 1, 1, "ssd", 1320.8},
            {"Xi0", 71, 70, RepKind::Real, 71, 70, 143, 139, 141, SpinspaceRing::H, 0, -1, 1, 2, "ssu", 1314.3},
            {"Lambda", 65, 64, RepKind::Real, 65, 64, 131, 127, 129, SpinspaceRing::H, 0, 0, 0, 0, "uds", 1115.4},
        };
        for (const auto& s : specs) f.states.push_back(make_state(s, 1, f.spin, +1));
        // The published charge-splitting row for the proton carries the
        // coefficient 2 on the gamma' term, which no half-integer U attains;
        // the coefficient is stored verbatim as an override.
        f.states[3].gamma_prime_coeff = Rational(2);
        f.states[3].notes.push_back(
            "charge-splitting row coefficient 2 on the gamma' term implies U(U+1) = 9/4, "
            "not attainable by a half-integer U; published coefficient stored as an override");
        f.states[5].notes.push_back(
            "running text names the doublet representation (75/2,35); the state table's "
            "(71/2,35) alone matches the published degree 5112 and is stored");
        f.multiplets = {{"Phi3", "Sigma", 1192.0, {0, 1, 2}},
                        {"Phi2", "N", 939.0, {3, 4}},
                        {"Phi2*", "Xi", 1318.0, {5, 6}},
                        {"Phi0", "Lambda", 1115.0, {7}}};
        octets.push_back(std::move(f));
    }

    {  // pseudoscalar meson octet, spin 0, negative parity
        Octet b;
        b.name = "B0";
        b.baryon = 0;
        b.spin = HalfInt(0);
        b.parity2 = -1;
        const StateSpec specs[] = {
            {"pi+", 22, 22, RepKind::Complex, 22, 22, 45, 43, 44, SpinspaceRing::C, +1, 0, 2, 2, "d̄u", 139.6},
            {"pi0", 22, 22, RepKind::Real, 22, 22, 45, 43, 44, SpinspaceRing::R, 0, 0, 2, 2, "d̄d ūu", 135.0},
            {"pi-", 22, 22, RepKind::ComplexConjugate, 22, 22, 45, 43, 44, SpinspaceRing::C, -1, 0, 2, 2, "ūd", 139.6},
            {"K-", 43, 43, RepKind::Complex, 43, 43, 89, 83, 86, SpinspaceRing::C, -1, -1, 1, 1, "ūs", 493.8},
            {"Kbar0", 43, 43, RepKind::Real, 43, 43, 89, 83, 86, SpinspaceRing::H, 0, -1, 1, 1, "d̄s", 498.0},
            {"K0", 43, 43, RepKind::Real, 43, 43, 89, 83, 86, SpinspaceRing::H, 0, 1, 1, 1, "s̄d", 498.0},
            {"K+", 43, 43, RepKind::ComplexConjugate, 43, 43, 89, 83, 86, SpinspaceRing::C, +1, 1, 1, 1, "s̄u", 493.8},
            {"eta", 45, 45, RepKind::Real, 45, 45, 46, 44, 90, SpinspaceRing::R, 0, 0, 0, 0, "s̄s", 548.7},
        };
        for (const auto& s : specs) b.states.push_back(make_state(s, 0, b.spin, -1));
        b.states[7].corrected_signature = CliffordSignature(91, 89);
        b.multiplets = {{"Phi3", "pi", 138.0, {0, 1, 2}},
                        {"Phi2", "K1", 496.0, {3, 4}},
                        {"Phi2*", "K2", 496.0, {5, 6}},
                        {"Phi0", "eta", 549.0, {7}}};
        octets.push_back(std::move(b));
    }

    {  // vector meson octet, spin 1, negative parity
        Octet b;
        b.name = "B1";
        b.baryon = 0;
        b.spin = HalfInt(2);
        b.parity2 = -1;
        const StateSpec specs[] = {
            {"rho-", 55, 53, RepKind::Complex, 55, 53, 109, 107, 108, SpinspaceRing::C, -1, 0, 2, 2, "ūd", 766.5},
            {"rho0", 55, 53, RepKind::Real, 55, 53, 109, 107, 108, SpinspaceRing::R, 0, 0, 2, 2, "d̄d ūu", 769.0},
            {"rho+", 53, 55, RepKind::ComplexConjugate, 55, 53, 109, 107, 108, SpinspaceRing::C, +1, 0, 2, 2, "d̄u", 766.5},
            {"K*-", 59, 57, RepKind::Complex, 59, 57, 119, 113, 116, SpinspaceRing::C, -1, -1, 1, 1, "ūs", 891.66},
            {"K*bar0", 57, 59, RepKind::Real, 57, 59, 119, 113, 116, SpinspaceRing::H, 0, -1, 1, 1, "d̄s", 895.81},
            {"K*0", 59, 57, RepKind::Real, 59, 57, 119, 113, 116, SpinspaceRing::H, 0, 1, 1, 1, "s̄d", 895.81},
            {"K*+", 57, 59, RepKind::ComplexConjugate, 57, 59, 119, 113, 116, SpinspaceRing::C, +1, 1, 1, 1, "s̄u", 891.66},
            {"phi", 56, 54, RepKind::Real, 56, 54, 110, 108, 109, SpinspaceRing::R, 0, 0, 0, 0, "s̄s", 782.0},
        };
        for (const auto& s : specs) b.states.push_back(make_state(s, 0, b.spin, -1));
        b.states[7].corrected_signature = CliffordSignature(111, 109);
        b.multiplets = {{"Phi3", "rho", 770.0, {0, 1, 2}},
                        {"Phi2", "K*1", 892.0, {3, 4}},
                        {"Phi2*", "K*2", 892.0, {5, 6}},
                        {"Phi0", "phi", 782.0, {7}}};
        octets.push_back(std::move(b));
    }

    return octets;
}

}  // namespace

const std::vector<Octet>& builtin_octets() {
    static const std::vector<Octet> catalog = build_catalog();
    return catalog;
}

const Octet& octet_by_name(const std::string& name) {
    for (const auto& o : builtin_octets())
        if (o.name == name) return o;
    throw std::invalid_argument("octet_by_name: unknown octet " + name);
}

const ParticleState* find_state(const std::string& name) {
    for (const auto& o : builtin_octets())
        for (const auto& s : o.states)
            if (s.name == name) return &s;
    return nullptr;
}

std::vector<std::string> validate(const ParticleState& state) {
    std::vector<std::string> violations;

    long long deg = degree(state.rep);
    long long sym_deg = (state.sym_k + 1) * (state.sym_r + 1);
    if (deg != sym_deg)
        violations.push_back("representation degree " + std::to_string(deg) +
                             " != symmetry-space dimension " + std::to_string(sym_deg));

    long long expected_total = 2 * (state.sym_k + state.sym_r);
    long long expected_log2 = state.sym_k + state.sym_r;
    bool dims_ok = state.signature.n() == expected_total &&
                   state.spinspace_log2 == expected_log2 &&
                   2 * state.spinspace_log2 == state.signature.n();
    if (state.rep_kind != RepKind::Real && state.complex_dim && *state.complex_dim != expected_total)
        dims_ok = false;
    if (!dims_ok) {
        int d = state.signature.p - state.signature.q;
        int cp = static_cast<int>((expected_total + d) / 2);
        int cq = static_cast<int>(expected_total) - cp;
        violations.push_back("algebra/spinspace dimensions inconsistent: p+q = " +
                             std::to_string(state.signature.n()) + ", spinspace log2 = " +
                             std::to_string(state.spinspace_log2) + "; expected p+q = " +
                             std::to_string(expected_total) + " with the published p-q (e.g. Cl(" +
                             std::to_string(cp) + "," + std::to_string(cq) + ")) and log2 = " +
                             std::to_string(expected_log2));
    }

    DivisionRingKind ring = classify(state.signature);
    SpinspaceRing expected_ring =
        state.rep_kind == RepKind::Real
            ? (ring == DivisionRingKind::H ? SpinspaceRing::H : SpinspaceRing::R)
            : SpinspaceRing::C;
    if (ring != DivisionRingKind::H && ring != DivisionRingKind::R && state.rep_kind == RepKind::Real)
        violations.push_back("real state over a ring that is neither R nor H");
    else if (state.ring != expected_ring)
        violations.push_back("spinspace ring " + to_string(state.ring) + " != expected " +
                             to_string(expected_ring));

    int d8 = state.signature.d_mod8();
    if (d8 == 2 || d8 == 4 || d8 == 6) {
        int expect = parity_square(state.signature);
        if (expect != state.parity2)
            violations.push_back("parity square " + std::to_string(state.parity2) +
                                 " != type value " + std::to_string(expect));
    }

    bool charged_kind = state.rep_kind != RepKind::Real;
    if (charged_kind && state.qn.charge == 0)
        violations.push_back("complex state with zero charge");
    if (!charged_kind && state.qn.charge != 0)
        violations.push_back("real state with nonzero charge");

    return violations;
}

std::vector<AnomalyFinding> validate_catalog() {
    std::vector<AnomalyFinding> findings;
    for (const auto& octet : builtin_octets())
        for (const auto& state : octet.states) {
            for (const auto& v : validate(state)) findings.push_back({state.name, "signature", v});
            for (const auto& n : state.notes) {
                std::string kind =
                    n.find("gamma'") != std::string::npos ? "u-coefficient" : "label-note";
                findings.push_back({state.name, kind, n});
            }
        }
    return findings;
}

std::optional<std::string> quark_composition(const std::string& name) {
    const ParticleState* s = find_state(name);
    if (s == nullptr || !s->quark) return std::nullopt;
    return s->quark;
}

const std::vector<ChargeMultiplet>& reduction(const Octet& octet) { return octet.multiplets; }

namespace {

double override_or(const std::vector<std::pair<std::string, double>>& overrides,
                   const std::string& name, double fallback) {
    for (const auto& [n, m] : overrides)
        if (n == name) return m;
    return fallback;
}

std::vector<double> multiplet_masses(const Octet& octet,
                                     const std::vector<std::pair<std::string, double>>& overrides) {
    std::vector<double> out;
    for (const auto& mult : octet.multiplets) {
        if (overrides.empty()) {
            out.push_back(mult.multiplet_mass);
        } else {
            double acc = 0.0;
            for (int idx : mult.members) {
                const auto& st = octet.states[static_cast<size_t>(idx)];
                acc += override_or(overrides, st.name, st.mass_mev);
            }
            out.push_back(acc / static_cast<double>(mult.members.size()));
        }
    }
    return out;
}

}  // namespace

std::vector<Observation> octet_observations(
    const Octet& octet, const std::vector<std::pair<std::string, double>>& overrides) {
    std::vector<Observation> obs;
    for (const auto& st : octet.states) {
        Observation o;
        o.name = st.name;
        o.qn = st.qn;
        o.mass = override_or(overrides, st.name, st.mass_mev);
        o.gamma_prime_coeff = st.gamma_prime_coeff;
        obs.push_back(std::move(o));
    }
    return obs;
}

double octet_m0(const Octet& octet, bool quadratic,
                const std::vector<std::pair<std::string, double>>& overrides) {
    return m0_average(multiplet_masses(octet, overrides), quadratic);
}

ClosureReport octet_closure(const Octet& octet,
                            const std::vector<std::pair<std::string, double>>& overrides) {
    std::vector<double> m = multiplet_masses(octet, overrides);
    // multiplets are stored as [triplet, doublet, doublet*, singlet]
    if (octet.name == "F12") return closure_baryon(m[1], m[3], m[0], m[2]);
    return closure_meson(m[1], m[3], m[0]);
}

}  // namespace spinrep
