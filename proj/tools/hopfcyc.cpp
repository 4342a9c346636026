#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "hopfcyc/algebra_io.hpp"
#include "hopfcyc/builtins.hpp"
#include "hopfcyc/checks.hpp"
#include "hopfcyc/cohomology.hpp"

using namespace hc;
using Json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string builtin, path, pair = "eps-1", twist = "auto", complex = "cm", format = "table", op, alpha, beta;
    int cutoff = -1, degree = 0;
};

Hopf load_input(const Options& o) {
    if (o.builtin.empty() == o.path.empty()) throw UsageError("give exactly one of --builtin NAME or a file path");
    try {
        return o.builtin.empty() ? load_algebra_file(o.path) : builtin(o.builtin);
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::string input_name(const Options& o) { return o.builtin.empty() ? o.path : o.builtin; }

int cutoff_for(const Options& o, const Hopf& H) { return o.cutoff >= 0 ? o.cutoff : (H.dim() >= 6 ? 3 : 4); }

ModularPair load_pair(const Hopf& H, const std::string& spec) {
    try {
        return parse_pair(H, spec);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

// Requires a valid Hopf algebra; prints the failures otherwise.
bool require_valid(const Hopf& H) {
    auto rep = validate_hopf(H);
    if (rep.ok()) return true;
    for (auto& c : rep.checks)
        if (!c.pass && !c.informational) std::cout << "FAIL " << c.name << ": " << c.witness << "\n";
    return false;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string r = "\"";
    for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
    return r + "\"";
}

// ---- validate ----

int cmd_validate(const Options& o) {
    Hopf H = load_input(o);
    auto rep = validate_hopf(H);
    if (o.format == "json") {
        Json j;
        j["algebra"] = input_name(o);
        j["dim"] = H.dim();
        j["ok"] = rep.ok();
        j["checks"] = Json::array();
        for (auto& c : rep.checks)
            j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"informational", c.informational},
                                   {"witness", c.witness}});
        std::cout << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        std::cout << "check,pass,informational,witness\n";
        for (auto& c : rep.checks)
            std::cout << csv_field(c.name) << "," << c.pass << "," << c.informational << "," << csv_field(c.witness)
                      << "\n";
    } else {
        std::cout << "algebra " << input_name(o) << " (dim " << H.dim() << ")\n";
        for (auto& c : rep.checks) {
            std::cout << (c.pass ? "  pass  " : c.informational ? "  note  " : "  FAIL  ") << c.name;
            if (!c.witness.empty()) std::cout << ": " << c.witness;
            std::cout << "\n";
        }
        std::cout << (rep.ok() ? "valid Hopf algebra\n" : "not a Hopf algebra\n");
    }
    return rep.ok() ? 0 : 1;
}

// ---- identities ----

struct Section {
    std::string name;
    IdentityReport report;
    std::string skipped;  // reason, empty when run
};

int cmd_identities(const Options& o) {
    Hopf H = load_input(o);
    if (!require_valid(H)) return 1;
    int N = cutoff_for(o, H);
    ModularPair mp = load_pair(H, o.pair);
    PairReport pr = check_modular_pair(H, mp.delta, mp.sigma);
    std::optional<Character> delta;
    if (pr.delta_is_character) delta.emplace(H, mp.delta);

    std::optional<Character> xi;
    std::string twist_desc;
    if (o.twist == "eps") {
        xi = Character::counit(H);
        twist_desc = "eps";
    } else if (o.twist == "auto") {
        if (delta) xi = inverse(H, *delta);
        twist_desc = "delta o S";
    } else {
        std::vector<Scalar> v;
        try {
            v = parse_coefficients(o.twist, H.dim());
            xi.emplace(H, v);
        } catch (const InvalidCharacter& e) {
            throw UsageError(std::string("twist is not a character: ") + e.what());
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        twist_desc = o.twist;
    }

    std::vector<Section> sections;
    {
        Calculus C(H);
        Section s{"calculus", {}, ""};
        s.report.append(verify_calculus(C, N));
        s.report.append(verify_coactions(C, N));
        sections.push_back(std::move(s));
        Section id{"operator identities", {}, ""};
        for (int n = 1; n <= N; ++n) id.report.append(verify_identities(C, n));
        sections.push_back(std::move(id));
        Section harm{"harmonic subcomplex", {}, ""};
        for (int n = 1; n + 1 <= N; ++n) harm.report.append(verify_harmonic(C, n));
        sections.push_back(std::move(harm));
        Section ant{"antipode on forms", {}, ""};
        for (int n = 0; n <= N; ++n) ant.report.append(verify_antipode(C, n));
        sections.push_back(std::move(ant));
    }
    if (xi && !xi->is_counit(H)) {
        Calculus X(H, *xi);
        Section s{"twisted calculus", {}, ""};
        s.report.append(verify_calculus(X, N));
        s.report.append(verify_coactions(X, N));
        for (int n = 1; n <= N; ++n) s.report.append(verify_identities(X, n));
        sections.push_back(std::move(s));
    } else if (!xi) {
        sections.push_back({"twisted calculus", {}, "delta is not a character"});
    }
    std::string why = pr.ok() ? "" : "modular pair check failed: " + pr.witness;
    if (pr.ok()) {
        Section fr{"stability", verify_frames(H, *delta, mp.sigma, N), ""};
        sections.push_back(std::move(fr));
        Section co{"coordinate formulas", verify_coordinates(H, *delta, mp.sigma, N), ""};
        sections.push_back(std::move(co));
        auto M = connes_moscovici_module(H, *delta, mp.sigma, N);
        Section cy{"cocyclic module", verify_cyclic_identities(M), ""};
        try {
            auto mx = mixed_of_cocyclic(M);
            IdentityRow r;
            r.name = "mixed complex (b, B)";
            r.pass = true;
            r.note = mx.B_choice;
            cy.report.rows.push_back(r);
        } catch (const NoValidMixedStructure& e) {
            IdentityRow r;
            r.name = "mixed complex (b, B)";
            r.witness = e.what();
            cy.report.rows.push_back(r);
        }
        sections.push_back(std::move(cy));
    } else {
        for (auto n : {"stability", "coordinate formulas", "cocyclic module"}) sections.push_back({n, {}, why});
    }

    bool ok = true;
    int pass = 0, fail = 0, measured = 0, skipped = 0;
    for (auto& s : sections) {
        if (!s.skipped.empty()) {
            ++skipped;
            continue;
        }
        for (auto& r : s.report.rows) {
            if (r.supplementary) ++measured;
            else if (r.pass) ++pass;
            else {
                ++fail;
                ok = false;
            }
        }
    }

    auto status = [](const IdentityRow& r) {
        return r.supplementary ? (r.pass ? "measured-pass" : "measured-fail") : (r.pass ? "pass" : "FAIL");
    };
    if (o.format == "json") {
        Json j;
        j["algebra"] = input_name(o);
        j["pair"] = o.pair;
        j["twist"] = twist_desc;
        j["cutoff"] = N;
        j["pair_check"] = {{"ok", pr.ok()},
                           {"delta_is_character", pr.delta_is_character},
                           {"sigma_grouplike", pr.sigma_grouplike},
                           {"delta_of_sigma_is_one", pr.delta_of_sigma_is_one},
                           {"involution", pr.involution},
                           {"witness", pr.witness}};
        j["sections"] = Json::array();
        for (auto& s : sections) {
            Json js;
            js["name"] = s.name;
            if (!s.skipped.empty()) {
                js["skipped"] = s.skipped;
            } else {
                js["rows"] = Json::array();
                for (auto& r : s.report.rows)
                    js["rows"].push_back({{"name", r.name}, {"degree", r.degree}, {"status", status(r)},
                                          {"note", r.note}, {"witness", r.witness}});
            }
            j["sections"].push_back(js);
        }
        j["summary"] = {{"pass", pass}, {"fail", fail}, {"measured", measured}, {"skipped_sections", skipped}};
        j["ok"] = ok;
        std::cout << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        std::cout << "section,identity,degree,status,note,witness\n";
        for (auto& s : sections) {
            if (!s.skipped.empty()) {
                std::cout << csv_field(s.name) << ",,,skipped," << csv_field(s.skipped) << ",\n";
                continue;
            }
            for (auto& r : s.report.rows)
                std::cout << csv_field(s.name) << "," << csv_field(r.name) << "," << r.degree << "," << status(r)
                          << "," << csv_field(r.note) << "," << csv_field(r.witness) << "\n";
        }
    } else {
        std::cout << "algebra " << input_name(o) << "  pair " << o.pair << "  twist " << twist_desc << "  N = " << N
                  << "\n";
        std::cout << "pair check: " << (pr.ok() ? "modular pair in involution" : why) << "\n";
        for (auto& s : sections) {
            std::cout << "\n[" << s.name << "]";
            if (!s.skipped.empty()) {
                std::cout << " skipped (" << s.skipped << ")\n";
                continue;
            }
            std::cout << "\n";
            for (auto& r : s.report.rows) {
                std::cout << "  " << std::left << std::setw(14) << status(r) << "n=" << r.degree << "  " << r.name;
                if (!r.note.empty()) std::cout << "  [" << r.note << "]";
                if (!r.pass && !r.witness.empty()) std::cout << "  (" << r.witness << ")";
                std::cout << "\n";
            }
        }
        std::cout << "\nsummary: " << pass << " pass, " << fail << " fail, " << measured << " measured, " << skipped
                  << " sections skipped\n";
    }
    return ok ? 0 : 1;
}

// ---- cohomology ----

Json table_json(const CohomologyTable& t) {
    Json j;
    j["complex"] = t.name;
    j["B_choice"] = t.B_choice;
    j["total_differential"] = t.sign > 0 ? "b + B" : "b - B";
    j["degrees"] = Json::array();
    for (std::size_t n = 0; n < t.hc.size(); ++n)
        j["degrees"].push_back({{"n", n}, {"HH", t.hh[n]}, {"HC", t.hc[n]}, {"reliable", static_cast<bool>(t.reliable[n])}});
    j["S_maps"] = Json::array();
    for (auto& s : t.s_maps) j["S_maps"].push_back({{"from", s.from}, {"to", s.from + 2}, {"rank", s.rank}, {"iso", s.iso}});
    for (int p = 0; p < 2; ++p)
        j["periodic"][p == 0 ? "even" : "odd"] = {{"dim", t.parity[p].dim},
                                                   {"S_stabilized", t.parity[p].stabilized},
                                                   {"cutoff_dependent", true}};
    return j;
}

void table_text(const CohomologyTable& t) {
    std::cout << "\ncomplex " << t.name << "  (B = " << t.B_choice << ", total differential "
              << (t.sign > 0 ? "b + B" : "b - B") << ")\n";
    std::cout << "  n   HH   HC   reliable\n";
    for (std::size_t n = 0; n < t.hc.size(); ++n)
        std::cout << "  " << std::left << std::setw(4) << n << std::setw(5) << t.hh[n] << std::setw(5) << t.hc[n]
                  << (t.reliable[n] ? "yes" : "no") << "\n";
    for (auto& s : t.s_maps)
        std::cout << "  S: HC^" << s.from << " -> HC^" << s.from + 2 << "  rank " << s.rank << (s.iso ? "  iso" : "")
                  << "\n";
    for (int p = 0; p < 2; ++p)
        std::cout << "  " << (p == 0 ? "even" : "odd ") << ": dim " << t.parity[p].dim << ", S-stabilized "
                  << (t.parity[p].stabilized ? "yes" : "no") << " (cutoff-dependent)\n";
}

struct Comparison {
    std::string map, level;
    int degree;
    InducedMap induced;
};

int cmd_cohomology(const Options& o) {
    static const std::vector<std::string> kinds{"cm", "normalized", "coinvariant", "f-twisted", "all"};
    if (std::find(kinds.begin(), kinds.end(), o.complex) == kinds.end())
        throw UsageError("unknown complex '" + o.complex + "'");
    Hopf H = load_input(o);
    if (!require_valid(H)) return 1;
    int N = cutoff_for(o, H);
    if (N < 1) throw UsageError("cutoff must be at least 1");
    std::vector<CohomologyTable> tables;
    std::vector<Comparison> comps;
    auto has = [&](const std::string& k) { return o.complex == k || o.complex == "all"; };

    if (o.complex != "f-twisted") {
        ModularPair mp = load_pair(H, o.pair);
        PairReport pr = check_modular_pair(H, mp.delta, mp.sigma);
        if (!pr.ok()) {
            std::cout << "invalid modular pair: " << pr.witness << "\n";
            return 1;
        }
        Character delta(H, mp.delta);
        auto M = connes_moscovici_module(H, delta, mp.sigma, N);
        auto full = mixed_of_cocyclic(M);
        if (has("cm")) tables.push_back(periodicity_and_hp(full, N));
        if (has("normalized") || has("coinvariant")) {
            auto nm = normalized_cm_module(H, M, full);
            if (has("normalized")) tables.push_back(periodicity_and_hp(nm.mixed, N));
            if (has("coinvariant")) {
                auto cc = coinvariant_mixed_complex(H, delta, mp.sigma, N, &nm.mixed);
                tables.push_back(periodicity_and_hp(cc.module_facing, N));
                if (o.complex == "all") {
                    for (int n = 0; n <= 2 && n + 1 <= N; ++n) {
                        comps.push_back({"U: normalized -> cm", "HH", n, induced_hochschild(nm.U, nm.mixed, full, n)});
                        comps.push_back(
                            {"f: normalized -> coinvariant", "HH", n, induced_hochschild(cc.report.map, nm.mixed, cc.module_facing, n)});
                    }
                    for (int n = 0; n <= 2 && n + 1 <= N; ++n) {
                        comps.push_back({"U: normalized -> cm", "HC", n, induced_cyclic(nm.U, nm.mixed, full, n)});
                        comps.push_back(
                            {"f: normalized -> coinvariant", "HC", n, induced_cyclic(cc.report.map, nm.mixed, cc.module_facing, n)});
                    }
                }
            }
        }
    }
    if (has("f-twisted")) {
        SparseMatrix f = SparseMatrix::identity(H.dim());
        if (!o.alpha.empty() || !o.beta.empty()) {
            try {
                Character a(H, o.alpha.empty() ? H.counit() : parse_coefficients(o.alpha, H.dim()));
                Character b(H, o.beta.empty() ? H.counit() : parse_coefficients(o.beta, H.dim()));
                f = two_sided_twist(H, a, b);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        }
        auto M = f_twisted_module(H.algebra(), f, N);
        try {
            tables.push_back(periodicity_and_hp(mixed_of_cyclic(M), N));
        } catch (const NoValidMixedStructure& e) {
            std::cout << "f-twisted module has no mixed structure: " << e.what() << "\n";
            return 1;
        }
    }

    if (o.format == "json") {
        Json j;
        j["algebra"] = input_name(o);
        j["pair"] = o.pair;
        j["cutoff"] = N;
        j["tables"] = Json::array();
        for (auto& t : tables) j["tables"].push_back(table_json(t));
        if (!comps.empty()) {
            j["comparison"] = Json::array();
            for (auto& c : comps)
                j["comparison"].push_back({{"map", c.map},
                                           {"level", c.level},
                                           {"degree", c.degree},
                                           {"source_dim", c.induced.source_dim},
                                           {"target_dim", c.induced.target_dim},
                                           {"iso", c.induced.iso}});
        }
        std::cout << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        std::cout << "complex,n,HH,HC,reliable\n";
        for (auto& t : tables)
            for (std::size_t n = 0; n < t.hc.size(); ++n)
                std::cout << t.name << "," << n << "," << t.hh[n] << "," << t.hc[n] << "," << (t.reliable[n] ? 1 : 0)
                          << "\n";
        if (!comps.empty()) {
            std::cout << "map,level,degree,source_dim,target_dim,iso\n";
            for (auto& c : comps)
                std::cout << csv_field(c.map) << "," << c.level << "," << c.degree << "," << c.induced.source_dim << ","
                          << c.induced.target_dim << "," << (c.induced.iso ? 1 : 0) << "\n";
        }
    } else {
        std::cout << "algebra " << input_name(o) << "  pair " << o.pair << "  N = " << N << "\n";
        for (auto& t : tables) table_text(t);
        if (!comps.empty()) {
            std::cout << "\ninduced maps\n";
            for (auto& c : comps)
                std::cout << "  " << std::left << std::setw(30) << c.map << c.level << "^" << c.degree << "  "
                          << c.induced.source_dim << " -> " << c.induced.target_dim << "  "
                          << (c.induced.iso ? "iso" : "not iso") << "\n";
        }
    }
    bool ok = true;
    for (auto& c : comps) ok = ok && c.induced.iso;
    return ok ? 0 : 1;
}

// ---- operators ----

int cmd_operators(const Options& o) {
    Hopf H = load_input(o);
    if (!require_valid(H)) return 1;
    auto kind = parse_op(o.op);
    if (!kind) throw UsageError("unknown operator '" + o.op + "'");
    if (o.degree < 0) throw UsageError("degree must be non-negative");
    std::optional<Character> xi;
    if (o.twist == "auto") {
        ModularPair mp = load_pair(H, o.pair);
        try {
            xi = inverse(H, Character(H, mp.delta));
        } catch (const InvalidCharacter& e) {
            throw UsageError(std::string("delta is not a character: ") + e.what());
        }
    } else if (o.twist != "eps") {
        try {
            xi.emplace(H, parse_coefficients(o.twist, H.dim()));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    std::optional<Calculus> C;
    if (xi && !xi->is_counit(H)) C.emplace(H, *xi);
    else C.emplace(H);
    int n = o.degree, m = n + degree_shift(*kind);
    if (m < 0) throw UsageError(op_name(*kind) + " lowers degree; degree 0 has no target");
    const SparseMatrix& A = C->op(*kind, n);
    std::vector<std::string> src, tgt;
    for (long i = 0; i < C->dim(n); ++i) src.push_back(C->basis_label(n, i));
    for (long i = 0; i < C->dim(m); ++i) tgt.push_back(C->basis_label(m, i));
    bool dense = static_cast<long>(A.rows()) * A.cols() <= 1024;
    if (o.format == "json") {
        Json j;
        j["algebra"] = input_name(o);
        j["op"] = op_name(*kind);
        j["twisted"] = C->twisted();
        j["source_degree"] = n;
        j["target_degree"] = m;
        j["rows"] = A.rows();
        j["cols"] = A.cols();
        j["source_basis"] = src;
        j["target_basis"] = tgt;
        j["triples"] = Json::array();
        for (auto& [i, k, v] : A.triples()) j["triples"].push_back({i, k, to_string(v)});
        if (dense) {
            j["dense"] = Json::array();
            for (auto& row : A.to_dense()) {
                Json r = Json::array();
                for (auto& x : row) r.push_back(to_string(x));
                j["dense"].push_back(r);
            }
        }
        std::cout << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        std::cout << "row,col,value\n";
        for (auto& [i, k, v] : A.triples()) std::cout << i << "," << k << "," << to_string(v) << "\n";
    } else {
        std::cout << op_name(*kind) << (C->twisted() ? " (twisted)" : "") << " : Omega_" << n << " -> Omega_" << m
                  << "  " << A.rows() << "x" << A.cols() << "\n";
        std::cout << "source basis:";
        for (auto& s : src) std::cout << " [" << s << "]";
        std::cout << "\ntarget basis:";
        for (auto& s : tgt) std::cout << " [" << s << "]";
        std::cout << "\n";
        if (dense) {
            std::cout << "[";
            auto rows = A.to_dense();
            for (std::size_t i = 0; i < rows.size(); ++i) {
                std::cout << (i ? "," : "") << "[";
                for (std::size_t k = 0; k < rows[i].size(); ++k) std::cout << (k ? "," : "") << to_string(rows[i][k]);
                std::cout << "]";
            }
            std::cout << "]\n";
        }
        std::cout << "triples (row col value):\n";
        for (auto& [i, k, v] : A.triples()) std::cout << "  " << i << " " << k << " " << to_string(v) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hopf-cyclic calculus toolkit"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* sub, bool pair, bool cutoff) {
        sub->add_option("input", o.path, "algebra JSON file");
        sub->add_option("--builtin", o.builtin, "builtin algebra name");
        sub->add_option("--format", o.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
        if (pair) sub->add_option("--pair", o.pair, "eps-1, eps-g, chi-1 or 'd_0,..;s_0,..'");
        if (cutoff) sub->add_option("-N,--max-degree", o.cutoff, "grade cutoff");
    };
    auto* v = app.add_subcommand("validate", "check the Hopf algebra axioms");
    common(v, false, false);
    auto* id = app.add_subcommand("identities", "verify operator identities, stability and coordinate formulas");
    common(id, true, true);
    id->add_option("--twist", o.twist, "auto (delta o S), eps, or a character as coefficients");
    auto* co = app.add_subcommand("cohomology", "Hochschild, cyclic and S-stabilized cohomology tables");
    common(co, true, true);
    co->add_option("--complex", o.complex, "cm, normalized, coinvariant, f-twisted or all");
    co->add_option("--alpha", o.alpha, "left character of the f-twisted automorphism");
    co->add_option("--beta", o.beta, "right character of the f-twisted automorphism");
    auto* op = app.add_subcommand("operators", "print an operator matrix");
    common(op, true, false);
    op->add_option("--op", o.op, "d, b, b', kappa, kappa', B, B', lower, xi, xi-inv")->required();
    op->add_option("--degree", o.degree, "source grade");
    op->add_option("--twist", o.twist, "auto (delta o S), eps, or a character as coefficients");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        if (*v) return cmd_validate(o);
        if (*id) return cmd_identities(o);
        if (*co) return cmd_cohomology(o);
        return cmd_operators(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CutoffExceeded& e) {
        std::cerr << "cutoff exceeded: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 1;
    }
}
