#include <CLI11.hpp>
#include <complex>
#include <functional>
#include <cstdio>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "spinrep/catalog.hpp"
#include "spinrep/clifford.hpp"
#include "spinrep/io.hpp"
#include "spinrep/mass_model.hpp"
#include "spinrep/rep.hpp"
#include "spinrep/rwe.hpp"
#include "spinrep/spin_lines.hpp"
#include "spinrep/su3.hpp"

using json = nlohmann::ordered_json;
using namespace spinrep;

namespace {

enum class Format { Text, Csv, Json };

struct GlobalOptions {
    Format format = Format::Text;
    double mu0 = 0.511;
    int matrix_cap = 12;
    std::string masses_path;
};

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::complex<double> parse_eta(const std::string& s) {
    if (s == "i") return {0, 1};
    if (s == "-i") return {0, -1};
    return {std::stod(s), 0};
}

// ---- emission helpers ---------------------------------------------------

void emit_rows(const GlobalOptions& g, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows, const std::string& json_key) {
    if (g.format == Format::Json) {
        json out = json::array();
        for (const auto& row : rows) {
            json obj;
            for (size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
            out.push_back(obj);
        }
        json root;
        root[json_key] = out;
        std::cout << root.dump(2) << "\n";
        return;
    }
    if (g.format == Format::Csv) {
        for (size_t i = 0; i < header.size(); ++i)
            std::cout << header[i] << (i + 1 < header.size() ? "," : "\n");
        for (const auto& row : rows)
            for (size_t i = 0; i < row.size(); ++i)
                std::cout << row[i] << (i + 1 < row.size() ? "," : "\n");
        return;
    }
    std::vector<size_t> width(header.size());
    for (size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
    for (const auto& row : rows)
        for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    auto print_row = [&](const std::vector<std::string>& row) {
        for (size_t i = 0; i < row.size(); ++i) {
            std::cout << row[i];
            if (i + 1 < row.size()) std::cout << std::string(width[i] - row[i].size() + 2, ' ');
        }
        std::cout << "\n";
    };
    print_row(header);
    for (const auto& row : rows) print_row(row);
}

// ---- subcommand implementations -----------------------------------------

int run_rep_info(const GlobalOptions& g, long long tl, long long tldot) {
    RepLabel rep = RepLabel::from_twice(tl, tldot);
    TensorStructure t = tensor_structure(rep);
    GelfandNaimarkPair gn = to_gelfand_naimark(rep);
    if (g.format == Format::Json) {
        json out;
        out["label"] = rep.str();
        out["twice_l"] = tl;
        out["twice_ldot"] = tldot;
        out["degree"] = degree(rep);
        out["spin"] = spin(rep).str();
        out["gelfand_naimark"] = {{"l0", gn.l0.str()}, {"l1", gn.l1.str()}};
        out["tensor"] = {{"k", t.k},
                         {"r", t.r},
                         {"complex_dim", t.complex_dim},
                         {"spinspace_log2", t.spinspace_log2}};
        out["mgy_mass"] = mgy_mass(rep, g.mu0);
        out["effective_ratio"] = effective_ratio(rep).value();
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::vector<std::vector<std::string>> rows = {
        {"label", rep.str()},
        {"degree", std::to_string(degree(rep))},
        {"spin", spin(rep).str()},
        {"gn_l0", gn.l0.str()},
        {"gn_l1", gn.l1.str()},
        {"tensor_k", std::to_string(t.k)},
        {"tensor_r", std::to_string(t.r)},
        {"complex_dim", std::to_string(t.complex_dim)},
        {"spinspace_log2", std::to_string(t.spinspace_log2)},
        {"mgy_mass", fmt_double(mgy_mass(rep, g.mu0))},
        {"effective_ratio", effective_ratio(rep).str()},
    };
    emit_rows(g, {"field", "value"}, rows, "rep");
    return 0;
}

int run_line(const GlobalOptions& g, long long ts, int count, bool dual) {
    SpinLine l = line(HalfInt(ts), count, dual);
    std::vector<std::vector<std::string>> rows;
    for (size_t i = 0; i < l.entries.size(); ++i) {
        const RepLabel& rep = l.entries[i];
        TensorStructure t = tensor_structure(rep);
        rows.push_back({std::to_string(i), rep.str(), std::to_string(degree(rep)),
                        std::to_string(t.complex_dim), std::to_string(t.spinspace_log2)});
    }
    emit_rows(g, {"index", "label", "degree", "complex_dim", "spinspace_log2"}, rows, "line");
    return 0;
}

int run_multiplet(const GlobalOptions& g, long long ts, int shift) {
    auto members = spin_multiplet(HalfInt(ts), shift);
    std::vector<std::vector<std::string>> rows;
    for (size_t i = 0; i < members.size(); ++i) {
        long long diff = members[i].l.twice - members[i].ldot.twice;
        rows.push_back({std::to_string(i), members[i].str(), std::to_string(degree(members[i])),
                        HalfInt(diff).str()});
    }
    emit_rows(g, {"index", "label", "degree", "weight_diff"}, rows, "multiplet");
    return 0;
}

int run_search_mass(const GlobalOptions& g, double ratio, long long ts, int top) {
    auto found = search_rep(ratio, HalfInt(ts), top);
    std::vector<std::vector<std::string>> rows;
    for (size_t i = 0; i < found.size(); ++i) {
        const RepLabel& rep = found[i];
        rows.push_back({std::to_string(i + 1), rep.str(), std::to_string(degree(rep)),
                        effective_ratio(rep).str(), fmt_double(mgy_mass(rep, g.mu0)),
                        fmt_double(effective_ratio(rep).value() * g.mu0)});
    }
    emit_rows(g, {"rank", "label", "degree", "effective_ratio", "mgy_mass", "effective_mass"},
              rows, "candidates");
    return 0;
}

int run_clifford_classify(const GlobalOptions& g, int p, int q) {
    CliffordSignature sig(p, q);
    DivisionRingKind ring = classify(sig);
    std::string parity;
    try {
        parity = std::to_string(parity_square(sig));
    } catch (const std::exception&) {
        parity = "unassigned";
    }
    std::string real_class;
    try {
        real_class = to_string(charge_class(false, ring));
    } catch (const std::exception&) {
        real_class = "unassigned";
    }
    std::string sign;
    try {
        sign = std::to_string(double_conjugation_sign(sig, g.matrix_cap));
    } catch (const std::exception&) {
        sign = "unassigned";
    }
    std::vector<std::vector<std::string>> rows = {
        {"signature", sig.str()},
        {"n", std::to_string(sig.n())},
        {"d_mod8", std::to_string(sig.d_mod8())},
        {"ring", to_string(ring)},
        {"real_field_class", real_class},
        {"complex_field_class", to_string(charge_class(true, ring))},
        {"parity_square", parity},
        {"double_conjugation_sign", sign},
    };
    emit_rows(g, {"field", "value"}, rows, "classification");
    return 0;
}

int run_clifford_pi(const GlobalOptions& g, int p, int q) {
    CliffordSignature sig(p, q);
    GammaBasis basis = gamma_basis(sig, g.matrix_cap);
    PiResult pi = pi_matrix(basis);
    if (g.format == Format::Json) {
        json out;
        out["signature"] = sig.str();
        out["a"] = pi.a;
        out["b"] = pi.b;
        out["rule"] = std::string(1, pi.rule);
        out["sign_rule"] = pi.sign_rule;
        out["sign_product"] = pi.sign_product;
        json mat = json::array();
        for (int r = 0; r < pi.pi.dim(); ++r) {
            json row = json::array();
            for (int c = 0; c < pi.pi.dim(); ++c) row.push_back(pi.pi.at(r, c).str());
            mat.push_back(row);
        }
        out["pi"] = mat;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::vector<std::vector<std::string>> rows = {
        {"signature", sig.str()},
        {"a_imaginary", std::to_string(pi.a)},
        {"b_real", std::to_string(pi.b)},
        {"rule", std::string(1, pi.rule)},
        {"sign_rule", std::to_string(pi.sign_rule)},
        {"sign_product", std::to_string(pi.sign_product)},
    };
    emit_rows(g, {"field", "value"}, rows, "pi");
    if (g.format == Format::Text) {
        std::cout << "pi =\n";
        for (int r = 0; r < pi.pi.dim(); ++r) {
            for (int c = 0; c < pi.pi.dim(); ++c) std::cout << pi.pi.at(r, c).str() << "\t";
            std::cout << "\n";
        }
    }
    return 0;
}

int run_cpt_table(const GlobalOptions& g, const std::string& eta_p, const std::string& eta_t,
                  const std::string& eta_c) {
    CptTable table = cpt_table();
    bool numeric = !eta_p.empty() || !eta_t.empty() || !eta_c.empty();
    std::complex<double> vp = eta_p.empty() ? 1.0 : parse_eta(eta_p);
    std::complex<double> vt = eta_t.empty() ? 1.0 : parse_eta(eta_t);
    std::complex<double> vc = eta_c.empty() ? 1.0 : parse_eta(eta_c);
    auto value = [&](const PhaseMonomial& m) {
        return std::pow(vp, m.p) * std::pow(vt, m.t) * std::pow(vc, m.c);
    };

    if (g.format == Format::Json) {
        json out;
        out["elements"] = json::array();
        for (const auto& e : table.elements)
            out["elements"].push_back({{"name", e.name}, {"letter", e.letter}});
        json cells = json::array();
        for (int r = 0; r < 8; ++r) {
            json row = json::array();
            for (int c = 0; c < 8; ++c) {
                const auto& cell = table.cells[static_cast<size_t>(r)][static_cast<size_t>(c)];
                json jc;
                jc["phase"] = cell.phase.str();
                jc["word"] = cell.word;
                if (numeric) {
                    auto v = value(cell.phase);
                    jc["phase_value"] = {v.real(), v.imag()};
                }
                row.push_back(jc);
            }
            cells.push_back(row);
        }
        out["cells"] = cells;
        out["elementary_abelian_at_unit_phases"] = cpt_table_is_elementary_abelian(table);
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::vector<std::string> header = {"*"};
    for (const auto& e : table.elements) header.push_back(e.name);
    std::vector<std::vector<std::string>> rows;
    for (int r = 0; r < 8; ++r) {
        std::vector<std::string> row = {table.elements[static_cast<size_t>(r)].name};
        for (int c = 0; c < 8; ++c) {
            const auto& cell = table.cells[static_cast<size_t>(r)][static_cast<size_t>(c)];
            std::string s =
                cell.phase.str() == "1" ? cell.word : cell.phase.str() + " " + cell.word;
            if (numeric) {
                auto v = value(cell.phase);
                double re = v.real() == 0.0 ? 0.0 : v.real();
                double im = v.imag() == 0.0 ? 0.0 : v.imag();
                s += " (" + fmt_double(re) + (im >= 0 ? "+" : "") + fmt_double(im) + "i)";
            }
            row.push_back(s);
        }
        rows.push_back(row);
    }
    emit_rows(g, header, rows, "cpt_table");
    return 0;
}

int run_bivector_metric(const GlobalOptions& g, const std::string& diag) {
    Matrix4ll metric = minkowski_metric();
    if (!diag.empty()) {
        std::stringstream ss(diag);
        std::string cell;
        int i = 0;
        metric = Matrix4ll::Zero();
        while (std::getline(ss, cell, ',') && i < 4) {
            metric(i, i) = std::stoll(cell);
            ++i;
        }
        if (i != 4) throw CLI::ValidationError("--diag needs four comma-separated integers");
    }
    Matrix6ll g6 = bivector_metric(metric);
    const auto& order = bivector_order();
    std::vector<std::string> header = {"pair"};
    for (const auto& n : order.names) header.push_back(n);
    std::vector<std::vector<std::string>> rows;
    for (int r = 0; r < 6; ++r) {
        std::vector<std::string> row = {order.names[static_cast<size_t>(r)]};
        for (int c = 0; c < 6; ++c) row.push_back(std::to_string(g6(r, c)));
        rows.push_back(row);
    }
    emit_rows(g, header, rows, "bivector_metric");
    return 0;
}

int run_lambda3(const GlobalOptions& g, long long tl, long long tldot, const std::string& blocks) {
    Lambda3 lam = lambda3_generalized(HalfInt(tl), HalfInt(tldot));
    std::vector<int> wanted;
    if (!blocks.empty()) {
        std::stringstream ss(blocks);
        std::string cell;
        while (std::getline(ss, cell, ',')) wanted.push_back(std::stoi(cell));
    }
    if (g.format == Format::Json) {
        json out;
        out["label"] = lam.rep.str();
        out["dimension"] = lam.dimension();
        out["trace"] = lam.trace().str();
        json jb = json::array();
        for (size_t k = 0; k < lam.blocks.size(); ++k) {
            bool selected = wanted.empty() || std::find(wanted.begin(), wanted.end(),
                                                        static_cast<int>(k + 1)) != wanted.end();
            if (!selected) continue;
            json b;
            b["index"] = k + 1;
            b["mdot"] = lam.block_mdot[k].str();
            b["size"] = lam.blocks[k].size();
            if (!wanted.empty()) {
                json entries = json::array();
                for (const auto& v : lam.blocks[k]) entries.push_back(v.str());
                b["entries"] = entries;
            } else {
                b["first"] = lam.blocks[k].front().str();
                b["last"] = lam.blocks[k].back().str();
            }
            jb.push_back(b);
        }
        out["blocks"] = jb;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::vector<std::vector<std::string>> rows;
    if (wanted.empty()) {
        for (size_t k = 0; k < lam.blocks.size(); ++k) {
            const auto& blk = lam.blocks[k];
            Rational step = blk.size() > 1 ? blk[1] - blk[0] : Rational(0);
            rows.push_back({std::to_string(k + 1), lam.block_mdot[k].str(),
                            std::to_string(blk.size()), blk.front().str(), step.str(),
                            blk.back().str()});
        }
        emit_rows(g, {"block", "mdot", "size", "first", "step", "last"}, rows, "lambda3");
    } else {
        for (int idx : wanted) {
            if (idx < 1 || idx > static_cast<int>(lam.blocks.size()))
                throw CLI::ValidationError("block index out of range");
            const auto& blk = lam.blocks[static_cast<size_t>(idx - 1)];
            for (size_t i = 0; i < blk.size(); ++i)
                rows.push_back({std::to_string(idx), std::to_string(i), blk[i].str()});
        }
        emit_rows(g, {"block", "position", "value"}, rows, "lambda3_entries");
    }
    if (g.format == Format::Text)
        std::cout << "dimension " << lam.dimension() << ", trace " << lam.trace().str() << "\n";
    return 0;
}

int run_dirac_l(const GlobalOptions& g, double c) {
    DiracLMatrices lm = dirac_l_matrices(c);
    auto cell = [](std::complex<double> v) {
        double re = v.real() == 0.0 ? 0.0 : v.real();
        double im = v.imag() == 0.0 ? 0.0 : v.imag();
        return fmt_double(re) + (im >= 0 ? "+" : "") + fmt_double(im) + "i";
    };
    std::vector<std::vector<std::string>> rows;
    for (int k = 0; k < 3; ++k)
        for (int r = 0; r < 2; ++r)
            for (int col = 0; col < 2; ++col)
                rows.push_back({"L" + std::to_string(k + 1), std::to_string(r),
                                std::to_string(col), cell(lm.l[static_cast<size_t>(k)](r, col)),
                                cell(lm.l_conj[static_cast<size_t>(k)](r, col))});
    emit_rows(g, {"matrix", "row", "col", "value", "conjugate"}, rows, "dirac_l");
    return 0;
}

int run_su3_degrees(const GlobalOptions& g, int max) {
    auto table = su3::degrees_table(max);
    std::vector<std::string> header = {"p\\q"};
    for (int q = 0; q <= max; ++q) header.push_back(std::to_string(q));
    std::vector<std::vector<std::string>> rows;
    for (int p = 0; p <= max; ++p) {
        std::vector<std::string> row = {std::to_string(p)};
        for (int q = 0; q <= max; ++q)
            row.push_back(std::to_string(table[static_cast<size_t>(p)][static_cast<size_t>(q)]));
        rows.push_back(row);
    }
    emit_rows(g, header, rows, "degrees");
    return 0;
}

int run_su3_admissible(const GlobalOptions& g, long long max_degree) {
    auto degrees = su3::admissible_degrees(max_degree);
    std::vector<std::vector<std::string>> rows;
    for (long long d : degrees) rows.push_back({std::to_string(d)});
    emit_rows(g, {"degree"}, rows, "admissible_degrees");
    return 0;
}

int run_su3_okubo_check(const GlobalOptions& g) {
    const auto& A = su3::okubo_basis3();
    auto delta = [](int x, int y) { return x == y ? Rational(1) : Rational(0); };
    bool commutators_ok = true;
    for (int i = 1; i <= 3; ++i)
        for (int k = 1; k <= 3; ++k)
            for (int l = 1; l <= 3; ++l)
                for (int m = 1; m <= 3; ++m) {
                    su3::Mat3r lhs = su3::mat3_sub(su3::mat3_mul(A.at(i, k), A.at(l, m)),
                                                   su3::mat3_mul(A.at(l, m), A.at(i, k)));
                    su3::Mat3r rhs = su3::mat3_sub(su3::mat3_scale(delta(i, m), A.at(l, k)),
                                                   su3::mat3_scale(delta(l, k), A.at(i, m)));
                    if (!su3::mat3_eq(lhs, rhs)) commutators_ok = false;
                }

    su3::Mat3r trace_sum = su3::mat3_add(su3::mat3_add(A.at(1, 1), A.at(2, 2)), A.at(3, 3));
    bool traceless_ok = su3::mat3_eq(trace_sum, su3::mat3_zero());

    su3::Su2Embedding e = su3::su2_embedding();
    bool embedding_ok = su3::mat3_eq(su3::mat3_add(e.a11, e.a22), su3::mat3_zero());
    su3::Mat3r want_a11 = su3::mat3_zero();
    want_a11[0][0] = Rational(1, 2);
    want_a11[1][1] = Rational(-1, 2);
    embedding_ok = embedding_ok && su3::mat3_eq(e.a11, want_a11);

    bool adjoint_ok = true;
    std::vector<su3::Mat3r> gens;
    for (int i = 1; i <= 3; ++i)
        for (int k = 1; k <= 3; ++k)
            if (!(i == 2 && k == 2)) gens.push_back(A.at(i, k));
    for (const auto& x : gens)
        for (const auto& y : gens) {
            su3::Mat3r c = su3::mat3_sub(su3::mat3_mul(x, y), su3::mat3_mul(y, x));
            su3::Mat8r lhs = su3::adjoint_image(c);
            su3::Mat8r ax = su3::adjoint_image(x);
            su3::Mat8r ay = su3::adjoint_image(y);
            for (int r = 0; r < 8 && adjoint_ok; ++r)
                for (int col = 0; col < 8; ++col) {
                    Rational s(0);
                    for (int k2 = 0; k2 < 8; ++k2)
                        s += ax[static_cast<size_t>(r)][static_cast<size_t>(k2)] *
                                 ay[static_cast<size_t>(k2)][static_cast<size_t>(col)] -
                             ay[static_cast<size_t>(r)][static_cast<size_t>(k2)] *
                                 ax[static_cast<size_t>(k2)][static_cast<size_t>(col)];
                    if (s != lhs[static_cast<size_t>(r)][static_cast<size_t>(col)]) {
                        adjoint_ok = false;
                        break;
                    }
                }
        }

    std::vector<std::vector<std::string>> rows = {
        {"commutators_81", commutators_ok ? "ok" : "FAIL"},
        {"diagonal_trace_sum", traceless_ok ? "ok" : "FAIL"},
        {"su2_embedding", embedding_ok ? "ok" : "FAIL"},
        {"adjoint_preserves_commutators", adjoint_ok ? "ok" : "FAIL"},
    };
    emit_rows(g, {"check", "result"}, rows, "okubo_check");
    return (commutators_ok && traceless_ok && embedding_ok && adjoint_ok) ? 0 : 3;
}

std::string algebra_str(const ParticleState& s) {
    if (s.rep_kind == RepKind::Real) return s.signature.str();
    std::string pre = s.rep_kind == RepKind::ComplexConjugate ? "C*" : "C";
    return pre + std::to_string(*s.complex_dim) + "~" + s.signature.str();
}

int run_octet(const GlobalOptions& g, const std::string& name, bool do_validate, bool quarks) {
    const Octet& octet = octet_by_name(name);
    std::vector<std::string> header = {"name", "label", "kind", "sym",     "algebra",
                                       "log2", "ring",  "parity2", "Q",   "Y",
                                       "I",    "U",     "mass_mev"};
    if (quarks) header.push_back("quarks");
    std::vector<std::vector<std::string>> rows;
    for (const auto& s : octet.states) {
        std::vector<std::string> row = {
            s.name,
            s.rep.str(),
            to_string(s.rep_kind),
            "(" + std::to_string(s.sym_k) + "," + std::to_string(s.sym_r) + ")",
            algebra_str(s),
            std::to_string(s.spinspace_log2),
            to_string(s.ring),
            std::to_string(s.parity2),
            std::to_string(s.qn.charge),
            std::to_string(s.qn.hypercharge),
            s.qn.isospin.str(),
            s.qn.uspin.str(),
            fmt_double(s.mass_mev),
        };
        if (quarks) row.push_back(s.quark.value_or(""));
        rows.push_back(row);
    }
    emit_rows(g, header, rows, "octet");

    if (!do_validate) return 0;
    std::vector<AnomalyFinding> findings;
    for (const auto& f : validate_catalog()) {
        bool in_octet = false;
        for (const auto& s : octet.states) in_octet = in_octet || s.name == f.entity;
        if (in_octet) findings.push_back(f);
    }
    if (g.format == Format::Json) {
        json out = json::array();
        for (const auto& f : findings)
            out.push_back({{"entity", f.entity}, {"kind", f.kind}, {"detail", f.detail}});
        std::cout << json{{"findings", out}}.dump(2) << "\n";
    } else {
        for (const auto& f : findings)
            std::cout << "finding: " << f.entity << " [" << f.kind << "] " << f.detail << "\n";
        if (findings.empty()) std::cout << "findings: none\n";
    }
    return findings.empty() ? 0 : 3;
}

json params_json(const FitResult& fit) {
    json p;
    p["m0"] = fit.params.m0;
    p["alpha_plus_alpha_prime"] = fit.params.alpha;
    p["beta"] = fit.params.beta;
    p["gamma"] = fit.params.gamma;
    p["beta_prime"] = fit.params.beta_prime;
    p["gamma_prime"] = fit.params.gamma_prime;
    p["quadratic"] = fit.params.quadratic;
    p["theta_beta"] = fit.theta_beta;
    p["theta_gamma"] = fit.theta_gamma;
    return p;
}

int run_gmo_fit(const GlobalOptions& g, const std::string& octet_name, bool quadratic,
                bool hypercharge_only) {
    const Octet& octet = octet_by_name(octet_name);
    std::vector<std::pair<std::string, double>> overrides;
    if (!g.masses_path.empty()) overrides = mass_overrides_from_csv(g.masses_path);

    FitOptions opts;
    opts.quadratic = quadratic;
    opts.hypercharge_only = hypercharge_only;
    opts.beta_zero = octet.baryon == 0;  // meson doublet pairs share masses
    double m0 = octet_m0(octet, quadratic, overrides);
    std::vector<Observation> obs = octet_observations(octet, overrides);
    FitResult fit = gmo_fit(obs, opts, m0);

    if (fit.rank_deficient) {
        if (g.format == Format::Json)
            std::cout << json{{"error", "rank-deficient"}, {"null_space", fit.null_space}}.dump(2)
                      << "\n";
        else
            std::cout << "rank-deficient fit: " << fit.null_space << "\n";
        return 4;
    }

    ClosureReport closure = octet_closure(octet, overrides);
    if (g.format == Format::Json) {
        json out;
        out["octet"] = octet.name;
        out["params"] = params_json(fit);
        json res = json::array();
        for (size_t i = 0; i < obs.size(); ++i)
            res.push_back({{"name", obs[i].name}, {"residual", fit.residuals[i]}});
        out["residuals"] = res;
        out["rms"] = fit.rms;
        out["relations"] = {{"relation", closure.relation},
                            {"lhs", closure.lhs},
                            {"rhs", closure.rhs},
                            {"abs_diff", closure.abs_diff},
                            {"rel_diff", closure.rel_diff}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::vector<std::vector<std::string>> rows = {
        {std::string("m0") + (quadratic ? "^2" : ""), fmt_double(fit.params.m0)},
        {"alpha+alpha'", fmt_double(fit.params.alpha)},
        {"beta", fmt_double(fit.params.beta)},
        {"gamma", fmt_double(fit.params.gamma)},
        {"beta'", fmt_double(fit.params.beta_prime)},
        {"gamma'", fmt_double(fit.params.gamma_prime)},
        {"theta_beta", fmt_double(fit.theta_beta)},
        {"theta_gamma", fmt_double(fit.theta_gamma)},
        {"rms", fmt_double(fit.rms)},
    };
    emit_rows(g, {"param", "value"}, rows, "params");
    std::vector<std::vector<std::string>> res_rows;
    for (size_t i = 0; i < obs.size(); ++i)
        res_rows.push_back({obs[i].name, fmt_double(fit.residuals[i])});
    emit_rows(g, {"state", "residual"}, res_rows, "residuals");
    if (g.format == Format::Text)
        std::cout << "relation: " << closure.relation << "  lhs " << fmt_double(closure.lhs)
                  << "  rhs " << fmt_double(closure.rhs) << "  rel "
                  << fmt_double(closure.rel_diff) << "\n";
    return 0;
}

int run_gmo_relations(const GlobalOptions& g, const std::string& octet_name) {
    const Octet& octet = octet_by_name(octet_name);
    std::vector<std::pair<std::string, double>> overrides;
    if (!g.masses_path.empty()) overrides = mass_overrides_from_csv(g.masses_path);
    ClosureReport rep = octet_closure(octet, overrides);
    std::vector<std::vector<std::string>> rows = {
        {"octet", octet.name},
        {"relation", rep.relation},
        {"lhs", fmt_double(rep.lhs)},
        {"rhs", fmt_double(rep.rhs)},
        {"abs_diff", fmt_double(rep.abs_diff)},
        {"rel_diff", fmt_double(rep.rel_diff)},
    };
    emit_rows(g, {"field", "value"}, rows, "relations");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Representation labels, interlocking chains, discrete-symmetry groups and "
                 "octet mass splitting"};
    app.require_subcommand(1);

    GlobalOptions g;
    std::string format_name = "text";
    std::string config_path;
    app.add_option("--format", format_name, "Output format: text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    auto* mu0_opt = app.add_option("--mu0", g.mu0, "Minimal rest mass in MeV (default 0.511)");
    app.add_option("--config", config_path, "key=value configuration file");

    auto* rep_cmd = app.add_subcommand("rep", "Representation label queries");
    auto* rep_info = rep_cmd->add_subcommand("info", "Degree, spin, tensor structure, label pair");
    long long arg_tl = 0, arg_tldot = 0;
    rep_info->add_option("twice_l", arg_tl, "Doubled first weight (2l)")->required();
    rep_info->add_option("twice_ldot", arg_tldot, "Doubled second weight (2ldot)")->required();

    auto* line_cmd = app.add_subcommand("line", "Entries of a spin line");
    long long line_ts = 0;
    int line_count = 5;
    bool line_dual = false;
    line_cmd->add_option("twice_spin", line_ts, "Doubled spin (2s)")->required();
    line_cmd->add_option("--count", line_count, "Number of entries");
    line_cmd->add_flag("--dual", line_dual, "Use the dual line");

    auto* mult_cmd = app.add_subcommand("multiplet", "Members of a spin multiplet");
    long long mult_ts = 0;
    int mult_shift = 0;
    mult_cmd->add_option("twice_spin", mult_ts, "Doubled spin (2s)")->required();
    mult_cmd->add_option("--shift", mult_shift, "Multiplet shift");

    auto* search_cmd = app.add_subcommand("search-mass", "Labels nearest a mass ratio");
    double search_ratio = 0.0;
    long long search_ts = 0;
    int search_top = 1;
    search_cmd->add_option("--ratio", search_ratio, "Target mass ratio")->required();
    search_cmd->add_option("--spin", search_ts, "Doubled spin (2s)")->required();
    search_cmd->add_option("--top", search_top, "Number of candidates");

    auto* cl_cmd = app.add_subcommand("clifford", "Real algebra classification");
    auto* cl_classify = cl_cmd->add_subcommand("classify", "Ring, charge class, parity");
    int cl_p = 0, cl_q = 0;
    cl_classify->add_option("p", cl_p, "Positive squares")->required();
    cl_classify->add_option("q", cl_q, "Negative squares")->required();
    auto* cl_pi = cl_cmd->add_subcommand("pi", "Conjugation matrix and census signs");
    int pi_p = 0, pi_q = 0;
    cl_pi->add_option("p", pi_p, "Positive squares")->required();
    cl_pi->add_option("q", pi_q, "Negative squares")->required();

    auto* cpt_cmd = app.add_subcommand("cpt", "Discrete-symmetry group");
    auto* cpt_tab = cpt_cmd->add_subcommand("table", "8x8 multiplication table");
    std::string eta_p, eta_t, eta_c;
    cpt_tab->add_option("--eta-p", eta_p, "Numeric parity phase (1, -1, i, -i or real)");
    cpt_tab->add_option("--eta-t", eta_t, "Numeric time phase");
    cpt_tab->add_option("--eta-c", eta_c, "Numeric conjugation phase");

    auto* rwe_cmd = app.add_subcommand("rwe", "First-order system tools");
    auto* rwe_metric = rwe_cmd->add_subcommand("bivector-metric", "Induced 6x6 metric");
    std::string metric_diag;
    rwe_metric->add_option("--diag", metric_diag, "Four comma-separated diagonal entries");
    auto* rwe_lambda = rwe_cmd->add_subcommand("lambda3", "Block-diagonal weight operator");
    long long lam_tl = 0, lam_tldot = 0;
    std::string lam_blocks;
    rwe_lambda->add_option("twice_l", lam_tl, "Doubled first weight")->required();
    rwe_lambda->add_option("twice_ldot", lam_tldot, "Doubled second weight")->required();
    rwe_lambda->add_option("--blocks", lam_blocks, "Comma-separated 1-based block indices");
    auto* rwe_dirac = rwe_cmd->add_subcommand("dirac-l", "2x2 first-order system blocks");
    double dirac_c = 2.0;
    rwe_dirac->add_option("--c", dirac_c, "Normalization constant");

    auto* su3_cmd = app.add_subcommand("su3", "Unitary symmetry tables");
    auto* su3_deg = su3_cmd->add_subcommand("degrees", "Degree table");
    int su3_max = 6;
    su3_deg->add_option("--max", su3_max, "Largest label");
    auto* su3_adm = su3_cmd->add_subcommand("admissible", "Admissible degrees");
    long long su3_max_degree = 160;
    su3_adm->add_option("--max-degree", su3_max_degree, "Degree bound");
    auto* su3_ok = su3_cmd->add_subcommand("okubo-check", "Exact operator-basis checks");

    auto* octet_cmd = app.add_subcommand("octet", "Built-in state-vector database");
    std::string octet_name;
    bool octet_validate = false, octet_quarks = false;
    octet_cmd->add_option("name", octet_name, "F12, B0 or B1")
        ->required()
        ->check(CLI::IsMember({"F12", "B0", "B1"}));
    octet_cmd->add_flag("--validate", octet_validate, "Run the consistency validator");
    octet_cmd->add_flag("--quarks", octet_quarks, "Include quark composition");

    auto* gmo_cmd = app.add_subcommand("gmo", "Mass splitting fits and relations");
    auto* gmo_fit_cmd = gmo_cmd->add_subcommand("fit", "Least-squares splitting fit");
    std::string fit_octet, fit_masses;
    bool fit_quadratic = false, fit_hyper = false;
    gmo_fit_cmd->add_option("--octet", fit_octet, "F12, B0 or B1")
        ->required()
        ->check(CLI::IsMember({"F12", "B0", "B1"}));
    gmo_fit_cmd->add_option("--masses", fit_masses, "CSV mass table overriding the catalog");
    gmo_fit_cmd->add_flag("--quadratic", fit_quadratic, "Fit squared masses");
    gmo_fit_cmd->add_flag("--hypercharge-only", fit_hyper, "Drop the charge-splitting columns");
    auto* gmo_rel_cmd = gmo_cmd->add_subcommand("relations", "Closure relations");
    std::string rel_octet, rel_masses;
    gmo_rel_cmd->add_option("--octet", rel_octet, "F12, B0 or B1")
        ->required()
        ->check(CLI::IsMember({"F12", "B0", "B1"}));
    gmo_rel_cmd->add_option("--masses", rel_masses, "CSV mass table overriding the catalog");

    // let global flags like --format appear after the subcommand
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
        for (CLI::App* sub : cmd->get_subcommands({})) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (!config_path.empty()) {
            auto cfg = parse_config(config_path);
            if (cfg.count("mu0_mev") && mu0_opt->count() == 0) g.mu0 = std::stod(cfg["mu0_mev"]);
            if (cfg.count("matrix_cap")) g.matrix_cap = std::stoi(cfg["matrix_cap"]);
            if (cfg.count("masses_path")) g.masses_path = cfg["masses_path"];
        }
        if (format_name == "csv") g.format = Format::Csv;
        if (format_name == "json") g.format = Format::Json;

        if (rep_info->parsed()) return run_rep_info(g, arg_tl, arg_tldot);
        if (line_cmd->parsed()) return run_line(g, line_ts, line_count, line_dual);
        if (mult_cmd->parsed()) return run_multiplet(g, mult_ts, mult_shift);
        if (search_cmd->parsed()) return run_search_mass(g, search_ratio, search_ts, search_top);
        if (cl_classify->parsed()) return run_clifford_classify(g, cl_p, cl_q);
        if (cl_pi->parsed()) return run_clifford_pi(g, pi_p, pi_q);
        if (cpt_tab->parsed()) return run_cpt_table(g, eta_p, eta_t, eta_c);
        if (rwe_metric->parsed()) return run_bivector_metric(g, metric_diag);
        if (rwe_lambda->parsed()) return run_lambda3(g, lam_tl, lam_tldot, lam_blocks);
        if (rwe_dirac->parsed()) return run_dirac_l(g, dirac_c);
        if (su3_deg->parsed()) return run_su3_degrees(g, su3_max);
        if (su3_adm->parsed()) return run_su3_admissible(g, su3_max_degree);
        if (su3_ok->parsed()) return run_su3_okubo_check(g);
        if (octet_cmd->parsed()) return run_octet(g, octet_name, octet_validate, octet_quarks);
        if (gmo_fit_cmd->parsed()) {
            if (!fit_masses.empty()) g.masses_path = fit_masses;
            return run_gmo_fit(g, fit_octet, fit_quadratic, fit_hyper);
        }
        if (gmo_rel_cmd->parsed()) {
            if (!rel_masses.empty()) g.masses_path = rel_masses;
            return run_gmo_relations(g, rel_octet);
        }
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
