// Verification CLI: Gram tables, operator identity suites, Fock orthogonal
// representatives, determinants, Legendre tables and cocycle admissibility.
//
// Exit codes: 0 all checks pass, 1 check failure, 2 usage/parse error.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "hha/intertwiner.hpp"
#include "hha/legendre.hpp"
#include "hha/linalg.hpp"
#include "hha/report.hpp"
#include "hha/sugawara.hpp"
#include "hha/verma.hpp"

namespace {

using namespace hha;

struct CommonOpts {
    std::string omega1 = "1";
    std::string phi_c = "1";
    std::string phi_b0 = "1";
    std::string format = "text";
    std::string out_path;
    int level_max = 8;
    int r_max = 3;
};

void add_rational_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--omega1", o.omega1, "cocycle normalizer omega1 as p/q");
    cmd->add_option("--phi-c", o.phi_c, "central charge phi(c) as p/q");
    cmd->add_option("--phi-b0", o.phi_b0, "zero-mode weight phi(b0) as p/q");
}

void add_output_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--out", o.out_path, "write output to PATH instead of stdout");
}

void emit(const std::string& s, const CommonOpts& o) {
    if (o.out_path.empty()) {
        std::cout << s;
        return;
    }
    std::ofstream f(o.out_path);
    if (!f) throw std::runtime_error("cannot open output file " + o.out_path);
    f << s;
}

nlohmann::json matrix_json(const std::vector<std::vector<Rat>>& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : m) {
        nlohmann::json jr = nlohmann::json::array();
        for (const auto& e : r) jr.push_back(rat_str(e));
        rows.push_back(std::move(jr));
    }
    return rows;
}

std::string matrix_csv(const std::vector<std::vector<Rat>>& m) {
    std::string s;
    for (const auto& r : m) {
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (j) s += ',';
            s += rat_str(r[j]);
        }
        s += '\n';
    }
    return s;
}

std::string matrix_text(const std::vector<std::vector<Rat>>& m) {
    std::size_t width = 1;
    for (const auto& r : m)
        for (const auto& e : r) width = std::max(width, rat_str(e).size());
    std::string s;
    for (const auto& r : m) {
        for (std::size_t j = 0; j < r.size(); ++j) {
            std::string cell = rat_str(r[j]);
            s += std::string(width - cell.size(), ' ') + cell;
            s += j + 1 == r.size() ? "" : "  ";
        }
        s += '\n';
    }
    return s;
}

std::string render(const RunReport& rep, const CommonOpts& o, const std::string& csv) {
    if (o.format == "json") return rep.to_json().dump(2) + "\n";
    if (o.format == "csv") return csv;
    return rep.to_text();
}

int finish(const RunReport& rep, const CommonOpts& o, const std::string& csv = "") {
    emit(render(rep, o, csv.empty() ? rep.to_text() : csv), o);
    return rep.all_pass() ? 0 : 1;
}

struct Model {
    CocycleTable table;
    WeightFunctional phi;
};

Model make_model(const CommonOpts& o, int max_mode) {
    return {CocycleTable::hyperelliptic(rat_parse(o.omega1), std::max(max_mode, 1)),
            WeightFunctional({rat_parse(o.phi_b0)}, rat_parse(o.phi_c))};
}

// Deterministic random vector supported on levels <= max_level.
ModuleVector random_vector(std::mt19937& rng, int max_level) {
    std::uniform_int_distribution<int> level_dist(0, max_level);
    std::uniform_int_distribution<int> coef_dist(-9, 9);
    std::uniform_int_distribution<int> den_dist(1, 7);
    ModuleVector v;
    const int terms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) {
        auto basis = partitions_of(level_dist(rng), 1);
        const auto& p = basis[rng() % basis.size()];
        Rat c(coef_dist(rng), den_dist(rng));
        c.canonicalize();
        v.add_term(p, c);
    }
    return v;
}

int cmd_gram_table(const CommonOpts& o) {
    const Model m = make_model(o, o.level_max);
    RunReport rep;
    rep.command = "gram-table";
    rep.parameters = {{"level_max", std::to_string(o.level_max)},
                      {"omega1", o.omega1},
                      {"phi_c", o.phi_c},
                      {"phi_b0", o.phi_b0}};
    std::string csv;
    auto& pbw = rep.outputs["pbw_gram"] = nlohmann::json::array();
    std::string text;
    for (int n = 0; n <= o.level_max; ++n) {
        const GramMatrix g = gram_matrix(n, m.table, m.phi);
        pbw.push_back(nlohmann::json::parse(g.to_json()));
        text += "G_" + std::to_string(n) + ":\n" + matrix_text(g.entries) + "\n";
        csv += "pbw_gram," + std::to_string(n) + "\n" + matrix_csv(g.entries);
    }
    const auto pt = ptilde_gram(o.level_max, m.table, m.phi);
    rep.outputs["ptilde_gram"] = matrix_json(pt);
    text += "P~ Gram (diag h_n):\n" + matrix_text(pt);
    csv += "ptilde_gram\n" + matrix_csv(pt);
    rep.add_check("gram tables computed", true);
    if (o.format == "text") {
        emit(rep.to_text() + text, o);
        return 0;
    }
    return finish(rep, o, csv);
}

int cmd_det_gram(const CommonOpts& o) {
    const Model m = make_model(o, o.level_max);
    RunReport rep;
    rep.command = "det-gram";
    rep.parameters = {{"level_max", std::to_string(o.level_max)},
                      {"omega1", o.omega1},
                      {"phi_c", o.phi_c}};
    auto& dets = rep.outputs["gram_det"] = nlohmann::json::array();
    std::string csv = "level,det\n";
    for (int n = 0; n <= o.level_max; ++n) {
        const Rat d = gram_det(n, m.table, m.phi);
        dets.push_back({{"level", n}, {"det", rat_str(d)}});
        csv += std::to_string(n) + "," + rat_str(d) + "\n";
    }
    rep.add_check("determinants computed", true);
    return finish(rep, o, csv);
}

int cmd_legendre_table(const CommonOpts& o) {
    RunReport rep;
    rep.command = "legendre-table";
    rep.parameters = {{"level_max", std::to_string(o.level_max)}};
    auto& rows = rep.outputs["legendre"] = nlohmann::json::array();
    std::string csv = "n,coefficients,h_n\n";
    std::string text;
    for (int n = 0; n <= o.level_max; ++n) {
        const UniPoly p = legendre(n);
        nlohmann::json coeffs = nlohmann::json::array();
        std::string cs;
        for (int k = 0; k <= n; ++k) {
            coeffs.push_back(rat_str(p.coeff(k)));
            cs += (k ? " " : "") + rat_str(p.coeff(k));
        }
        const Rat hn = Rat(2) / Rat(2 * n + 1);
        rows.push_back({{"n", n}, {"coefficients", coeffs}, {"h_n", rat_str(hn)}});
        csv += std::to_string(n) + "," + cs + "," + rat_str(hn) + "\n";
        text += "P_" + std::to_string(n) + "(x) = " + p.str() + "   h_" +
                std::to_string(n) + " = " + rat_str(hn) + "\n";
    }
    rep.add_check("legendre table computed", true);
    if (o.format == "text") {
        emit(rep.to_text() + text, o);
        return 0;
    }
    return finish(rep, o, csv);
}

int cmd_fock_expand(const CommonOpts& o, int level) {
    const Model m = make_model(o, std::max(level, 1));
    RunReport rep;
    rep.command = "fock-expand";
    rep.parameters = {{"level", std::to_string(level)},
                      {"omega1", o.omega1},
                      {"phi_c", o.phi_c}};
    const auto r = orthogonal_representative(level, m.table, m.phi);
    const Rat norm = shapovalov(r.q_vector, r.q_vector, m.table, m.phi);
    nlohmann::json basis = nlohmann::json::array();
    nlohmann::json qs = nlohmann::json::array();
    std::string csv = "partition,q\n";
    for (const auto& p : partitions_of(level, 1)) {
        basis.push_back(p.str());
        qs.push_back(rat_str(r.q_vector.coeff(p)));
        csv += p.str() + "," + rat_str(r.q_vector.coeff(p)) + "\n";
    }
    rep.outputs["level"] = level;
    rep.outputs["basis"] = basis;
    rep.outputs["q_coefficients"] = qs;
    rep.outputs["h_n"] = rat_str(r.norm_sq_scale);
    rep.outputs["norm_check"] = rat_str(norm);
    rep.add_check("S(Q_n, Q_n) computed", true, "S = " + rat_str(norm));
    return finish(rep, o, csv);
}

void suite_L0(RunReport& rep, const Model& m, int level_max) {
    for (int n = 0; n <= level_max; ++n)
        for (const auto& p : partitions_of(n, 1)) {
            const ModuleVector v = ModuleVector::basis(p);
            const bool ok = apply_L0(v, m.table, m.phi) == Rat(n) * v;
            if (!ok) rep.add_check("L0 eigenvalue", false, p.str());
        }
    rep.add_check("L0 level operator on PBW basis, levels <= " + std::to_string(level_max),
                  rep.all_pass());
}

void suite_omega(RunReport& rep, const Model& m, int level_max) {
    for (int n = 0; n <= level_max; ++n)
        for (const auto& p : partitions_of(n, 1)) {
            const ModuleVector v = ModuleVector::basis(p);
            const bool ok = apply_Omega(v, m.table, m.phi) == omega_eigenvalue(n, 1) * v;
            if (!ok) rep.add_check("Omega eigenvalue", false, p.str());
        }
    rep.add_check("Omega spectrum -n(n+1), levels <= " + std::to_string(level_max),
                  rep.all_pass());
}

void suite_intertwine(RunReport& rep, const Model& m, int level_max) {
    for (int n = 0; n <= level_max; ++n)
        for (const auto& p : partitions_of(n, 1))
            if (!intertwining_check(ModuleVector::basis(p), 1, m.table, m.phi))
                rep.add_check("intertwining", false, p.str());
    std::mt19937 rng(20240817);
    for (int t = 0; t < 100; ++t) {
        const ModuleVector v = random_vector(rng, std::min(level_max, 6));
        if (!intertwining_check(v, 1, m.table, m.phi))
            rep.add_check("intertwining (random)", false, "trial " + std::to_string(t));
    }
    rep.add_check("Phi(Omega v) = L Phi(v), levels <= " + std::to_string(level_max) +
                      " + 100 random vectors",
                  rep.all_pass());
}

void suite_tower(RunReport& rep, const Model& m, int level_max, int r_max) {
    for (int r = 1; r <= r_max; ++r)
        for (int n = 0; n <= level_max; ++n)
            for (const auto& p : partitions_of(n, 1)) {
                const ModuleVector v = ModuleVector::basis(p);
                const ModuleVector pw = apply_Omega_power(v, r, m.table, m.phi);
                if (pw != omega_eigenvalue(n, r) * v)
                    rep.add_check("tower eigenvalue", false,
                                  p.str() + " r=" + std::to_string(r));
                if (!intertwining_check(v, r, m.table, m.phi))
                    rep.add_check("tower intertwining", false,
                                  p.str() + " r=" + std::to_string(r));
            }
    rep.add_check("Casimir tower, r <= " + std::to_string(r_max) + ", levels <= " +
                      std::to_string(level_max),
                  rep.all_pass());
}

void suite_genfun(RunReport& rep, int order, int r_max) {
    for (int r = 1; r <= r_max; ++r)
        if (!genfun_identity_check(order, r))
            rep.add_check("genfun identity", false, "r=" + std::to_string(r));
    rep.add_check("L^r G = (-1)^r E^r G at order " + std::to_string(order) + ", r <= " +
                      std::to_string(r_max),
                  rep.all_pass());
}

void suite_legendre(RunReport& rep, int n_max) {
    for (int n = 0; n <= n_max; ++n) {
        const UniPoly p = legendre(n);
        if (legendre_operator(p) != Rat(-n) * Rat(n + 1) * p)
            rep.add_check("legendre eigenvalue", false, "n=" + std::to_string(n));
        if (p.eval(1) != 1)
            rep.add_check("legendre normalization", false, "n=" + std::to_string(n));
    }
    const int im = std::min(n_max, 12);
    for (int a = 0; a <= im; ++a)
        for (int b = 0; b <= im; ++b) {
            const Rat want = a == b ? Rat(2) / Rat(2 * b + 1) : Rat(0);
            if (poly_inner(legendre(a), legendre(b)) != want)
                rep.add_check("legendre norm", false,
                              std::to_string(a) + "," + std::to_string(b));
        }
    rep.add_check("Legendre eigenvalues/norms, n <= " + std::to_string(n_max),
                  rep.all_pass());
}

void suite_canonical(RunReport& rep, const CommonOpts& o, int level_max) {
    const CocycleTable table =
        CocycleTable::hyperelliptic(rat_parse(o.omega1), std::max(level_max, 1));
    const std::vector<Rat> b0s = {Rat(1, 2), Rat(3, 2)};
    const std::vector<Rat> cs = {Rat(1), Rat(2)};
    const WeightFunctional base({b0s[0]}, cs[0]);
    for (const auto& b0 : b0s)
        for (const auto& c : cs) {
            const WeightFunctional other({b0}, c);
            if (!canonicality_compare(base, other, level_max, table))
                rep.add_check("canonicality", false,
                              "phi(b0)=" + rat_str(b0) + " phi(c)=" + rat_str(c));
        }
    rep.add_check("canonicality across phi(b0) in {1/2,3/2}, phi(c) in {1,2}",
                  rep.all_pass());
}

int cmd_verify(const CommonOpts& o, const std::string& suite, bool level_set) {
    RunReport rep;
    rep.command = "verify " + suite;
    rep.parameters = {{"level_max", std::to_string(o.level_max)},
                      {"r_max", std::to_string(o.r_max)},
                      {"omega1", o.omega1},
                      {"phi_c", o.phi_c},
                      {"phi_b0", o.phi_b0}};
    const Model m = make_model(o, o.level_max);
    if (suite == "L0")
        suite_L0(rep, m, o.level_max);
    else if (suite == "omega")
        suite_omega(rep, m, o.level_max);
    else if (suite == "intertwine")
        suite_intertwine(rep, m, o.level_max);
    else if (suite == "tower")
        suite_tower(rep, m, o.level_max, o.r_max);
    else if (suite == "genfun")
        suite_genfun(rep, level_set ? o.level_max : 10, o.r_max);
    else if (suite == "legendre")
        suite_legendre(rep, level_set ? o.level_max : 20);
    else if (suite == "canonical")
        suite_canonical(rep, o, o.level_max);
    else
        throw CLI::ValidationError("unknown suite " + suite);
    return finish(rep, o);
}

int cmd_admissible(const CommonOpts& o, const std::string& cocycle_path,
                   const std::vector<std::string>& b0_list) {
    RunReport rep;
    rep.command = "admissible-check";
    rep.parameters = {{"level_max", std::to_string(o.level_max)}, {"phi_c", o.phi_c}};
    CocycleTable table = [&] {
        if (cocycle_path.empty())
            return CocycleTable::hyperelliptic(rat_parse(o.omega1),
                                               std::max(o.level_max, 1));
        std::ifstream f(cocycle_path);
        if (!f) throw std::runtime_error("cannot open cocycle file " + cocycle_path);
        std::ostringstream ss;
        ss << f.rdbuf();
        return CocycleTable::load(ss.str());
    }();
    std::vector<Rat> b0s;
    if (b0_list.empty())
        b0s.assign(static_cast<std::size_t>(table.sector_count()), rat_parse(o.phi_b0));
    else
        for (const auto& s : b0_list) b0s.push_back(rat_parse(s));
    if (static_cast<int>(b0s.size()) != table.sector_count())
        throw std::runtime_error("need one phi(b0) value per sector");
    const WeightFunctional phi(b0s, rat_parse(o.phi_c));
    const auto res = is_p_admissible_up_to(o.level_max, table, phi);
    if (res.admissible) {
        rep.add_check("non-degenerate up to level " + std::to_string(o.level_max), true);
    } else {
        std::string witness = "degenerate at level " + std::to_string(res.degenerate_level) +
                              "; kernel = [";
        for (std::size_t i = 0; i < res.kernel_witness.size(); ++i)
            witness += (i ? "," : "") + rat_str(res.kernel_witness[i]);
        witness += "]";
        rep.add_check("p-admissibility", false, witness);
        rep.outputs["degenerate_level"] = res.degenerate_level;
    }
    return finish(rep, o);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic verification tool for the hyperelliptic Heisenberg "
                 "module and its Legendre intertwining"};
    app.require_subcommand(1);
    CommonOpts o;

    auto* gram = app.add_subcommand("gram-table", "PBW and P~ Gram matrices up to a level");
    gram->add_option("--level-max", o.level_max);
    add_rational_flags(gram, o);
    add_output_flags(gram, o);

    std::string suite;
    auto* verify = app.add_subcommand("verify", "run an identity suite");
    verify->add_option("suite", suite, "L0|omega|intertwine|tower|genfun|legendre|canonical")
        ->required();
    auto* lm = verify->add_option("--level-max", o.level_max);
    verify->add_option("--r-max", o.r_max);
    add_rational_flags(verify, o);
    add_output_flags(verify, o);

    int fock_level = 2;
    auto* fock = app.add_subcommand("fock-expand", "orthogonal representative at a level");
    fock->add_option("level", fock_level)->required();
    add_rational_flags(fock, o);
    add_output_flags(fock, o);

    auto* det = app.add_subcommand("det-gram", "Gram determinants up to a level");
    det->add_option("--level-max", o.level_max);
    add_rational_flags(det, o);
    add_output_flags(det, o);

    auto* leg = app.add_subcommand("legendre-table", "Legendre coefficients and norms");
    leg->add_option("--level-max", o.level_max);
    add_output_flags(leg, o);

    std::string cocycle_path;
    std::vector<std::string> b0_list;
    auto* adm = app.add_subcommand("admissible-check", "finite-level non-degeneracy");
    adm->add_option("--cocycle", cocycle_path, "cocycle table file (JSON)");
    adm->add_option("--level-max", o.level_max);
    adm->add_option("--phi-b0-list", b0_list, "one phi(b0) per sector");
    add_rational_flags(adm, o);
    add_output_flags(adm, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (gram->parsed()) return cmd_gram_table(o);
        if (verify->parsed()) return cmd_verify(o, suite, lm->count() > 0);
        if (fock->parsed()) return cmd_fock_expand(o, fock_level);
        if (det->parsed()) return cmd_det_gram(o);
        if (leg->parsed()) return cmd_legendre_table(o);
        if (adm->parsed()) return cmd_admissible(o, cocycle_path, b0_list);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
