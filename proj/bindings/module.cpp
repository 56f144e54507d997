#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spinrep/catalog.hpp"
#include "spinrep/clifford.hpp"
#include "spinrep/mass_model.hpp"
#include "spinrep/rep.hpp"
#include "spinrep/rwe.hpp"
#include "spinrep/spin_lines.hpp"
#include "spinrep/su3.hpp"

namespace py = pybind11;
using namespace spinrep;

namespace {

// Half-integers cross the boundary doubled (2l, 2s, ...) so the Python side
// stays exact; rationals cross as (numerator, denominator) pairs.

using LabelTuple = std::pair<long long, long long>;
using RatTuple = std::pair<long long, long long>;

LabelTuple to_tuple(const RepLabel& rep) { return {rep.l.twice, rep.ldot.twice}; }
RatTuple to_tuple(const Rational& r) { return {r.num, r.den}; }

py::dict state_dict(const ParticleState& s) {
    py::dict d;
    d["name"] = s.name;
    d["twice_l"] = s.rep.l.twice;
    d["twice_ldot"] = s.rep.ldot.twice;
    d["degree"] = degree(s.rep);
    d["kind"] = to_string(s.rep_kind);
    d["sym"] = std::make_pair(s.sym_k, s.sym_r);
    if (s.complex_dim) d["complex_dim"] = *s.complex_dim;
    d["signature"] = std::make_pair(s.signature.p, s.signature.q);
    d["spinspace_log2"] = s.spinspace_log2;
    d["ring"] = to_string(s.ring);
    d["parity2"] = s.parity2;
    d["Q"] = s.qn.charge;
    d["Y"] = s.qn.hypercharge;
    d["twice_I"] = s.qn.isospin.twice;
    d["twice_U"] = s.qn.uspin.twice;
    if (s.quark) d["quarks"] = *s.quark;
    d["mass_mev"] = s.mass_mev;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Representation labels, interlocking chains, algebra classification and "
              "octet mass splitting";

    // representation labels
    m.def("degree", [](long long tl, long long tldot) {
        return degree(RepLabel::from_twice(tl, tldot));
    }, py::arg("twice_l"), py::arg("twice_ldot"));
    m.def("twice_spin", [](long long tl, long long tldot) {
        return spin(RepLabel::from_twice(tl, tldot)).twice;
    });
    m.def("spin_values", [](long long tl, long long tldot) {
        std::vector<long long> out;
        for (auto v : spin_values(RepLabel::from_twice(tl, tldot))) out.push_back(v.twice);
        return out;
    }, "Doubled spin projections from -2s to 2s");
    m.def("clebsch_gordan_spins", [](long long tl, long long tldot) {
        std::vector<long long> out;
        for (auto v : clebsch_gordan_spins(RepLabel::from_twice(tl, tldot))) out.push_back(v.twice);
        return out;
    });
    m.def("to_gelfand_naimark", [](long long tl, long long tldot) {
        auto gn = to_gelfand_naimark(RepLabel::from_twice(tl, tldot));
        return std::make_pair(gn.l0.twice, gn.l1.twice);
    });
    m.def("from_gelfand_naimark", [](long long tl0, long long tl1) {
        return to_tuple(from_gelfand_naimark({HalfInt(tl0), HalfInt(tl1)}));
    });

    // chains and multiplets
    m.def("line", [](long long twice_spin, int count, bool dual) {
        std::vector<LabelTuple> out;
        for (const auto& rep : line(HalfInt(twice_spin), count, dual).entries)
            out.push_back(to_tuple(rep));
        return out;
    }, py::arg("twice_spin"), py::arg("count"), py::arg("dual") = false);
    m.def("degree_sequence", [](long long twice_spin, int count, bool dual) {
        return degree_sequence(line(HalfInt(twice_spin), count, dual));
    }, py::arg("twice_spin"), py::arg("count"), py::arg("dual") = false);
    m.def("tensor_structure", [](long long tl, long long tldot) {
        TensorStructure t = tensor_structure(RepLabel::from_twice(tl, tldot));
        py::dict d;
        d["k"] = t.k;
        d["r"] = t.r;
        d["complex_dim"] = t.complex_dim;
        d["spinspace_log2"] = t.spinspace_log2;
        return d;
    });
    m.def("interlocking_neighbors", [](long long tl, long long tldot) {
        std::vector<LabelTuple> out;
        for (const auto& rep : interlocking_neighbors(RepLabel::from_twice(tl, tldot)))
            out.push_back(to_tuple(rep));
        return out;
    });
    m.def("spin_multiplet", [](long long twice_spin, int shift) {
        std::vector<LabelTuple> out;
        for (const auto& rep : spin_multiplet(HalfInt(twice_spin), shift))
            out.push_back(to_tuple(rep));
        return out;
    }, py::arg("twice_spin"), py::arg("shift") = 0);

    // algebra classification
    m.def("classify", [](int p, int q) { return to_string(classify(CliffordSignature(p, q))); });
    m.def("parity_square", [](int p, int q) { return parity_square(CliffordSignature(p, q)); });
    m.def("charge_class", [](bool field_is_complex, int p, int q) {
        return to_string(charge_class(field_is_complex, classify(CliffordSignature(p, q))));
    }, py::arg("field_is_complex"), py::arg("p"), py::arg("q"));
    m.def("generator_census", [](int p, int q, int cap) {
        GammaBasis basis = gamma_basis(CliffordSignature(p, q), cap);
        return count_generator_kinds(basis);
    }, py::arg("p"), py::arg("q"), py::arg("cap") = 12);
    m.def("conjugation_signs", [](int p, int q, int cap) {
        PiResult pi = pi_matrix(gamma_basis(CliffordSignature(p, q), cap));
        py::dict d;
        d["a"] = pi.a;
        d["b"] = pi.b;
        d["rule"] = std::string(1, pi.rule);
        d["sign_rule"] = pi.sign_rule;
        d["sign_product"] = pi.sign_product;
        return d;
    }, py::arg("p"), py::arg("q"), py::arg("cap") = 12);
    m.def("double_conjugation_sign", [](int p, int q) {
        return double_conjugation_sign(CliffordSignature(p, q));
    });
    m.def("cpt_table", []() {
        CptTable t = cpt_table();
        std::vector<std::vector<std::pair<std::string, std::string>>> out;
        for (int r = 0; r < 8; ++r) {
            std::vector<std::pair<std::string, std::string>> row;
            for (int c = 0; c < 8; ++c) {
                const auto& cell = t.cells[static_cast<size_t>(r)][static_cast<size_t>(c)];
                row.emplace_back(cell.phase.str(), cell.word);
            }
            out.push_back(row);
        }
        return out;
    });
    m.def("cpt_table_is_elementary_abelian",
          []() { return cpt_table_is_elementary_abelian(cpt_table()); });

    // first-order system tools
    m.def("bivector_metric", []() {
        Matrix6ll g6 = bivector_metric(minkowski_metric());
        std::vector<std::vector<long long>> out(6, std::vector<long long>(6));
        for (int r = 0; r < 6; ++r)
            for (int c = 0; c < 6; ++c) out[static_cast<size_t>(r)][static_cast<size_t>(c)] = g6(r, c);
        return out;
    });
    m.def("lambda3_blocks", [](long long tl, long long tldot) {
        Lambda3 lam = lambda3_generalized(HalfInt(tl), HalfInt(tldot));
        std::vector<std::vector<RatTuple>> out;
        for (const auto& blk : lam.blocks) {
            std::vector<RatTuple> row;
            for (const auto& v : blk) row.push_back(to_tuple(v));
            out.push_back(row);
        }
        return out;
    });
    m.def("dirac_l", [](double c) {
        DiracLMatrices lm = dirac_l_matrices(c);
        std::vector<std::vector<std::vector<std::complex<double>>>> out;
        for (const auto& mat : lm.l) {
            std::vector<std::vector<std::complex<double>>> rows;
            for (int r = 0; r < 2; ++r) rows.push_back({mat(r, 0), mat(r, 1)});
            out.push_back(rows);
        }
        return out;
    }, py::arg("c") = 2.0);

    // unitary symmetry
    m.def("su3_degree", [](int p, int q) { return su3::degree(su3::YoungPQ(p, q)); });
    m.def("su3_degrees_table", [](int max) { return su3::degrees_table(max); }, py::arg("max") = 6);
    m.def("su3_admissible", [](int p, int q) { return su3::admissible(su3::YoungPQ(p, q)); });
    m.def("su3_admissible_degrees",
          [](long long max_degree) { return su3::admissible_degrees(max_degree); },
          py::arg("max_degree") = 160);

    // mass model
    m.def("mgy_mass", [](long long tl, long long tldot, double mu0) {
        return mgy_mass(RepLabel::from_twice(tl, tldot), mu0);
    }, py::arg("twice_l"), py::arg("twice_ldot"), py::arg("mu0") = 0.511);
    m.def("effective_ratio", [](long long tl, long long tldot) {
        return to_tuple(effective_ratio(RepLabel::from_twice(tl, tldot)));
    });
    m.def("search_rep", [](double ratio, long long twice_spin, int count) {
        std::vector<LabelTuple> out;
        for (const auto& rep : search_rep(ratio, HalfInt(twice_spin), count))
            out.push_back(to_tuple(rep));
        return out;
    }, py::arg("ratio"), py::arg("twice_spin"), py::arg("count") = 1);
    m.def("orbit_type", [](std::array<double, 4> p, double mass) {
        return to_string(orbit_type(p, mass));
    });

    // catalog and fits
    m.def("octet_names", []() {
        std::vector<std::string> names;
        for (const auto& o : builtin_octets()) names.push_back(o.name);
        return names;
    });
    m.def("octet_states", [](const std::string& name) {
        py::list out;
        for (const auto& s : octet_by_name(name).states) out.append(state_dict(s));
        return out;
    });
    m.def("quark_composition", [](const std::string& name) -> py::object {
        auto q = quark_composition(name);
        if (!q) return py::none();
        return py::str(*q);
    });
    m.def("validate_catalog", []() {
        py::list out;
        for (const auto& f : validate_catalog()) {
            py::dict d;
            d["entity"] = f.entity;
            d["kind"] = f.kind;
            d["detail"] = f.detail;
            out.append(d);
        }
        return out;
    });
    m.def("octet_closure", [](const std::string& name) {
        ClosureReport rep = octet_closure(octet_by_name(name));
        py::dict d;
        d["relation"] = rep.relation;
        d["lhs"] = rep.lhs;
        d["rhs"] = rep.rhs;
        d["abs_diff"] = rep.abs_diff;
        d["rel_diff"] = rep.rel_diff;
        return d;
    });
    m.def("fit_octet", [](const std::string& name, bool quadratic, bool hypercharge_only) {
        const Octet& octet = octet_by_name(name);
        FitOptions opts;
        opts.quadratic = quadratic;
        opts.hypercharge_only = hypercharge_only;
        opts.beta_zero = octet.baryon == 0;
        double m0 = octet_m0(octet, quadratic);
        std::vector<Observation> obs = octet_observations(octet);
        FitResult fit = gmo_fit(obs, opts, m0);
        py::dict d;
        d["rank_deficient"] = fit.rank_deficient;
        if (fit.rank_deficient) {
            d["null_space"] = fit.null_space;
            return d;
        }
        py::dict params;
        params["m0"] = fit.params.m0;
        params["alpha_plus_alpha_prime"] = fit.params.alpha;
        params["beta"] = fit.params.beta;
        params["gamma"] = fit.params.gamma;
        params["beta_prime"] = fit.params.beta_prime;
        params["gamma_prime"] = fit.params.gamma_prime;
        d["params"] = params;
        d["residuals"] = fit.residuals;
        d["rms"] = fit.rms;
        return d;
    }, py::arg("name"), py::arg("quadratic") = false, py::arg("hypercharge_only") = false);

    m.attr("__version__") = "0.1.0";
}
