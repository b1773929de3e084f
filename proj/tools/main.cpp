// Command-line surface for constructing and verifying the unit-group
// generators of Z C_{p^n}.  Exit codes: 0 success, 1 certificate failure,
// 2 usage or out-of-scope error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "zcpn/kernel_lift.hpp"
#include "zcpn/serialize.hpp"

using namespace zcpn;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCertFailure = 1;
constexpr int kExitUsage = 2;

std::optional<std::string> default_cases_dir() {
    if (const char* env = std::getenv("ZCPN_CASES_DIR")) return std::string(env);
    return std::nullopt;
}

void print_assembly_text(const AssemblyResult& r, std::ostream& out) {
    const auto& ctx = r.ctx;
    out << "case C_" << ctx.m << "  (p = " << ctx.p << ", n = " << ctx.n << ")\n";
    if (ctx.trivial || (ctx.p == 3 && ctx.n == 1)) {
        out << "  torsion: +-C_" << ctx.m << "\n";
        out << "  free part: trivial (rank 0)\n";
        return;
    }
    out << "  t = " << ctx.t << ", kappa = " << ctx.kappa << ", r = " << ctx.r
        << ", k = " << ctx.k.get_str() << "\n";
    out << "  torsion: +-C_" << ctx.m << " = <-1> x <g>\n";
    out << "  Hoechsmann part (" << r.hoechsmann.size() << (r.hoechsmann.size() == 1 ? " unit):\n" : " units):\n");
    for (std::size_t i = 0; i < r.hoechsmann.size(); ++i) {
        out << "    theta_" << (i + 1) << " = " << r.hoechsmann[i].to_string() << "\n";
        out << "      = g^" << r.sym_shift[i] << " * (" << r.hoechsmann_sym[i].to_string()
            << ")\n";
    }
    out << "  kernel part (" << r.kernel.size() << (r.kernel.size() == 1 ? " unit):\n" : " units):\n");
    for (std::size_t i = 0; i < r.kernel.size(); ++i)
        out << "    w_" << (i + 1) << " = " << r.kernel[i].to_string() << "\n";
    if (!r.kernel.empty())
        out << "  kernel words are plain p-th powers: "
            << (r.kernel_construction.plain_powers ? "yes" : "no") << "\n";
    out << "  total rank: " << r.total_rank << " (Higman formula agrees)\n";
    out << "  h-image log-rank: " << to_string(r.h_rank_cert.verdict) << " at "
        << r.h_rank_cert.precision_used << "/" << r.h_rank_cert.precision_verify << " bits\n";
    out << "  hypothesis: " << to_string(r.hypothesis_cert.verdict);
    if (r.hypothesis_cert.witness.contains("method"))
        out << " [" << r.hypothesis_cert.witness["method"].get<std::string>() << "]";
    out << "\n";
    out << "  assumption: " << r.assumptions.front() << "\n";
}

int cmd_generate(long p, long n, const std::string& format, std::optional<long> t_override,
                 long precision, std::optional<std::string> cases_dir) {
    if (!is_prime(p)) {
        std::cerr << "error: p = " << p << " is not prime\n";
        return kExitUsage;
    }
    if (!in_scope(p, n)) {
        std::cerr << "error: case (" << p << ", " << n << ") is out of scope: phi(p^n) = "
                  << euler_phi_prime_power(p, n) << " exceeds 66\n";
        return kExitUsage;
    }
    CaseStore store = cases_dir ? CaseStore(*cases_dir) : CaseStore();
    store.t_override = t_override;
    store.log_precision = precision;
    try {
        const AssemblyResult& res = store.assembly(p, n);
        if (format == "json")
            std::cout << to_json(res).dump(2) << "\n";
        else
            print_assembly_text(res, std::cout);
        if (cases_dir) store.persist(p, n);
        return kExitOk;
    } catch (const structural_error& e) {
        std::cerr << "structural error: " << e.what() << "\n";
        return kExitCertFailure;
    }
}

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

int report(const std::vector<Check>& checks) {
    bool all = true;
    for (const auto& c : checks) {
        std::cout << (c.pass ? "  [pass] " : "  [FAIL] ") << c.name;
        if (!c.detail.empty()) std::cout << ": " << c.detail;
        std::cout << "\n";
        all = all && c.pass;
    }
    std::cout << (all ? "all checks passed" : "CHECKS FAILED") << "\n";
    return all ? kExitOk : kExitCertFailure;
}

int cmd_reproduce(const std::string& case_id) {
    CaseStore store;
    std::vector<Check> checks;
    auto expect = [&](const std::string& name, const std::string& got,
                      const std::string& want) {
        checks.push_back({name, got == want, got == want ? "" : "got '" + got + "', want '" + want + "'"});
    };

    if (case_id == "zc9") {
        const AssemblyResult& r = store.assembly(3, 2);
        expect("theta_1", r.hoechsmann[0].to_string(),
               "g^2 - g^3 + g^4 - g^5 + g^6 - g^7 + g^8");
        expect("theta_2", r.hoechsmann[1].to_string(), "g^4 - g^5 + g^6 - g^7 + g^8");
        expect("theta_1 shift", std::to_string(r.sym_shift[0]), "5");
        expect("theta_2 shift", std::to_string(r.sym_shift[1]), "6");
        expect("theta_1'", r.hoechsmann_sym[0].to_string(),
               "-1 + g - g^2 + g^3 + g^6 - g^7 + g^8");
        expect("theta_2'", r.hoechsmann_sym[1].to_string(), "1 - g + g^2 + g^7 - g^8");
        checks.push_back({"theta_1' symmetric", r.hoechsmann_sym[0].is_symmetric(), ""});
        checks.push_back({"theta_2' symmetric", r.hoechsmann_sym[1].is_symmetric(), ""});
        return report(checks);
    }
    if (case_id == "zc27") {
        const LevelTable& t9 = store.table(3, 2);
        GroupRingElem u1 = t9.gens[0], u2 = t9.gens[1];
        expect("f1(u1) in x-basis", to_x_basis(f1(u1, 3)).to_string(),
               "1 + 2x^4 + 2x^5 + x^6 + x^7 + x^8");
        expect("f1(u2) in x-basis", to_x_basis(f1(u2, 3)).to_string(),
               "1 + x^4 + x^5 + 2x^7 + 2x^8");
        expect("f1(u1)*f1(u2)", (to_x_basis(f1(u1, 3)) * to_x_basis(f1(u2, 3))).to_string(),
               "1 + x^6 + 2x^8");
        expect("u1^3", u1.pow(3).to_string("h"),
               "-35 + 33h - 27h^2 + 18h^3 - 6h^4 - 6h^5 + 18h^6 - 27h^7 + 33h^8");
        expect("u2^3", u2.pow(3).to_string("h"),
               "19 - 18h + 15h^2 - 9h^3 + 3h^4 + 3h^5 - 9h^6 + 15h^7 - 18h^8");
        const AssemblyResult& r27 = store.assembly(3, 3);
        auto a_string = [](const GroupRingElem& w) {
            auto ke = ker_pi1_parametrize(w);
            if (!ke) return std::string("not in kernel");
            std::string s = "(";
            for (std::size_t i = 0; i < ke->a.size(); ++i)
                s += (i ? "," : "") + ke->a[i].get_str();
            return s + ")";
        };
        expect("w1 a-sequence", a_string(r27.kernel[0]), "(-12,11,-9,6,-2,-2,6,-9,11)");
        expect("w2 a-sequence", a_string(r27.kernel[1]), "(6,-6,5,-3,1,1,-3,5,-6)");
        return report(checks);
    }
    if (case_id == "hyp27") {
        Certificate cert = hypothesis_check(store, 3, 3);
        checks.push_back({"hypothesis verdict holds", cert.verdict == Verdict::Holds,
                          to_string(cert.verdict)});
        expect("lambda", cert.witness.value("lambda", std::string("?")), "1");
        expect("obstruction element e", cert.witness.value("e", std::string("?")), "1 + x^8");
        expect("image size", cert.witness.value("image_size", std::string("?")), "9");
        return report(checks);
    }
    std::cerr << "error: unknown case id '" << case_id << "' (choose zc9, zc27, hyp27)\n";
    return kExitUsage;
}

int verify_level_table(const nlohmann::json& j) {
    std::vector<Check> checks;
    LevelTable t = level_table_from_json(j);
    long hig = higman_rank(t.ctx.m, t.ctx.n + 1, t.ctx.p == 2 ? 1 : 0);
    checks.push_back({"generator count matches Higman rank",
                      static_cast<long>(t.gens.size()) == hig,
                      std::to_string(t.gens.size()) + " vs " + std::to_string(hig)});
    for (std::size_t i = 0; i < t.gens.size(); ++i) {
        const auto& g = t.gens[i];
        std::string tag = "gen " + std::to_string(i);
        checks.push_back({tag + " normalized", g.is_normalized(), ""});
        checks.push_back({tag + " exact unit", g.inverse().has_value(), ""});
        if (t.ctx.p != 2)
            checks.push_back({tag + " symmetric", g.is_symmetric(), ""});
        else
            checks.push_back({tag + " U2", g.is_u2(), ""});
    }
    return report(checks);
}

int verify_assembly(const nlohmann::json& j) {
    std::vector<Check> checks;
    long p = j.at("p").get<long>(), n = j.at("n").get<long>();
    std::vector<GroupRingElem> hoech, kernels;
    for (const auto& x : j.at("hoechsmann")) hoech.push_back(group_ring_from_json(x));
    for (const auto& x : j.at("kernel")) kernels.push_back(group_ring_from_json(x));
    PrimePowerCtx ctx = make_ctx(p, n, j.at("t").get<long>());
    for (std::size_t i = 0; i < hoech.size(); ++i) {
        std::string tag = "theta_" + std::to_string(i + 1);
        checks.push_back({tag + " matches construction",
                          hoech[i] == hoechsmann_unit(ctx, static_cast<long>(i + 1)), ""});
        checks.push_back({tag + " exact unit", hoech[i].inverse().has_value(), ""});
    }
    for (std::size_t i = 0; i < kernels.size(); ++i) {
        std::string tag = "w_" + std::to_string(i + 1);
        checks.push_back({tag + " in ker(pi1)", pi1(kernels[i]).is_one(), ""});
        checks.push_back({tag + " exact unit", kernels[i].inverse().has_value(), ""});
    }
    long rank = j.at("total_rank").get<long>();
    long hig = higman_rank(ctx.m, n + 1, p == 2 ? 1 : 0);
    checks.push_back({"total rank matches Higman formula", rank == hig,
                      std::to_string(rank) + " vs " + std::to_string(hig)});
    Certificate hyp = certificate_from_json(j.at("hypothesis_certificate"));
    if (n >= 2 && !ctx.trivial) {
        CaseStore store;
        store.t_override = j.at("t").get<long>();
        Certificate fresh = hypothesis_check(store, p, n);
        checks.push_back({"hypothesis certificate reproduces",
                          hyp.verdict == fresh.verdict && hyp.witness == fresh.witness, ""});
    } else {
        checks.push_back({"hypothesis verdict", hyp.verdict == Verdict::Holds, ""});
    }
    return report(checks);
}

int cmd_verify(const std::string& file) {
    std::ifstream in(file);
    if (!in) {
        std::cerr << "error: cannot open " << file << "\n";
        return kExitUsage;
    }
    nlohmann::json j;
    try {
        in >> j;
        if (j.contains("assembly")) {
            std::cout << "verifying assembly and table from " << file << "\n";
            int a = verify_assembly(j.at("assembly"));
            int b = verify_level_table(j.at("table"));
            return (a == kExitOk && b == kExitOk) ? kExitOk : kExitCertFailure;
        }
        if (j.contains("gens")) return verify_level_table(j);
        if (j.contains("hoechsmann")) return verify_assembly(j);
        std::cerr << "error: unrecognized file schema\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cout << "  [FAIL] " << e.what() << "\n";
        return kExitCertFailure;
    }
}

int cmd_sweep(const std::string& format, std::optional<std::string> cases_dir, long precision) {
    CaseStore store = cases_dir ? CaseStore(*cases_dir) : CaseStore();
    store.log_precision = precision;
    bool all = true;
    nlohmann::json rows = nlohmann::json::array();
    std::cout << "case      t   kappa  kernel  rank  higman  hypothesis  units\n";
    for (auto [p, n] : sweep_cases()) {
        std::ostringstream line;
        bool ok = true;
        std::string hyp = "-";
        long rank = -1, hig = higman_rank(ipow(p, n), n + 1, p == 2 ? 1 : 0);
        long kappa = -1, kcount = -1, t = -1;
        try {
            const AssemblyResult& r = store.assembly(p, n);
            rank = r.total_rank;
            kappa = r.ctx.kappa;
            t = r.ctx.t;
            kcount = static_cast<long>(r.kernel.size());
            hyp = to_string(r.hypothesis_cert.verdict);
            ok = (r.hypothesis_cert.verdict == Verdict::Holds) && (rank == hig);
            if (cases_dir) store.persist(p, n);
        } catch (const std::exception& e) {
            ok = false;
            hyp = std::string("error: ") + e.what();
        }
        all = all && ok;
        char buf[160];
        std::snprintf(buf, sizeof buf, "C_%-6ld  %-3ld %-6ld %-7ld %-5ld %-7ld %-11s %s",
                      ipow(p, n), t, kappa, kcount, rank, hig, hyp.c_str(),
                      ok ? "ok" : "FAIL");
        std::cout << buf << "\n";
        rows.push_back({{"p", p}, {"n", n}, {"rank", rank}, {"higman", hig},
                        {"hypothesis", hyp}, {"ok", ok}});
    }
    if (format == "json") std::cout << rows.dump(2) << "\n";
    std::cout << (all ? "sweep: all cases pass" : "sweep: FAILURES present") << "\n";
    return all ? kExitOk : kExitCertFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"unit-group generators of integral group rings of cyclic p-groups"};
    app.require_subcommand(1);

    long p = 0, n = 0;
    long precision = 128;
    std::string format = "text";
    std::optional<long> t_override;
    std::optional<std::string> cases_dir = default_cases_dir();
    std::string case_id, file;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format (text|json)")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--precision", precision, "log-embedding precision in bits");
        sub->add_option("--cases-dir", cases_dir, "directory for persisted case files");
    };

    CLI::App* gen = app.add_subcommand("generate", "construct the generator table of one case");
    gen->add_option("--p", p, "prime")->required();
    gen->add_option("--n", n, "level")->required();
    gen->add_option("--t", t_override, "override the unit-group generator t");
    add_common(gen);

    CLI::App* rep = app.add_subcommand("reproduce", "recompute an embedded worked example");
    rep->add_option("case", case_id, "zc9 | zc27 | hyp27")->required();

    CLI::App* ver = app.add_subcommand("verify", "re-check every certificate in a case file");
    ver->add_option("file", file, "case JSON file")->required();

    CLI::App* sw = app.add_subcommand("sweep", "run every in-scope case");
    add_common(sw);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_generate(p, n, format, t_override, precision, cases_dir);
        if (rep->parsed()) return cmd_reproduce(case_id);
        if (ver->parsed()) return cmd_verify(file);
        if (sw->parsed()) return cmd_sweep(format, cases_dir, precision);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCertFailure;
    }
    return kExitUsage;
}
