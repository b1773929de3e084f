#include "zcpn/serialize.hpp"

namespace zcpn {

nlohmann::json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

Int int_from_json(const nlohmann::json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
    throw std::invalid_argument("expected an integer or decimal string");
}

namespace {

nlohmann::json coeffs_to_json(const std::vector<Int>& c) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : c) a.push_back(int_to_json(x));
    return a;
}

std::vector<Int> coeffs_from_json(const nlohmann::json& a) {
    std::vector<Int> c;
    for (const auto& x : a) c.push_back(int_from_json(x));
    return c;
}

}  // namespace

nlohmann::json to_json(const GroupRingElem& a) {
    return {{"m", a.order()}, {"char", a.characteristic()}, {"coeffs", coeffs_to_json(a.coeffs())}};
}

GroupRingElem group_ring_from_json(const nlohmann::json& j) {
    return GroupRingElem::from_coeffs(j.at("m").get<long>(), j.at("char").get<long>(),
                                      coeffs_from_json(j.at("coeffs")));
}

nlohmann::json to_json(const XAdicElem& a) {
    nlohmann::json t = nlohmann::json::array();
    for (long v : a.terms()) t.push_back(v);
    return {{"m", a.order()}, {"p", a.prime()}, {"terms", t}};
}

XAdicElem xadic_from_json(const nlohmann::json& j) {
    std::vector<long> t;
    for (const auto& v : j.at("terms")) t.push_back(v.get<long>());
    return XAdicElem::from_terms(j.at("m").get<long>(), j.at("p").get<long>(), std::move(t));
}

nlohmann::json to_json(const CycInt& a) {
    return {{"p", a.p()}, {"n", a.n()}, {"coeffs", coeffs_to_json(a.coeffs())}};
}

CycInt cyc_from_json(const nlohmann::json& j) {
    return CycInt::from_coeffs(j.at("p").get<long>(), j.at("n").get<long>(),
                               coeffs_from_json(j.at("coeffs")));
}

nlohmann::json to_json(const Certificate& c) {
    nlohmann::json j = {{"kind", to_string(c.kind)},
                        {"inputs", c.inputs},
                        {"verdict", to_string(c.verdict)},
                        {"witness", c.witness}};
    if (c.precision_used != 0) {
        j["precision_used"] = c.precision_used;
        j["precision_verify"] = c.precision_verify;
    }
    return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
    Certificate c;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "exact-finite") c.kind = CertKind::ExactFinite;
    else if (kind == "leading-term") c.kind = CertKind::LeadingTerm;
    else if (kind == "log-rank") c.kind = CertKind::LogRank;
    else if (kind == "index-count") c.kind = CertKind::IndexCount;
    else if (kind == "hypothesis") c.kind = CertKind::Hypothesis;
    else throw std::invalid_argument("unknown certificate kind: " + kind);

    std::string v = j.at("verdict").get<std::string>();
    if (v == "independent") c.verdict = Verdict::Independent;
    else if (v == "dependent") c.verdict = Verdict::Dependent;
    else if (v == "indeterminate") c.verdict = Verdict::Indeterminate;
    else if (v == "holds") c.verdict = Verdict::Holds;
    else if (v == "fails") c.verdict = Verdict::Fails;
    else if (v == "agree") c.verdict = Verdict::Agree;
    else if (v == "mismatch") c.verdict = Verdict::Mismatch;
    else throw std::invalid_argument("unknown verdict: " + v);

    c.inputs = j.at("inputs").get<std::vector<std::string>>();
    c.witness = j.at("witness");
    if (j.contains("precision_used")) {
        c.precision_used = j.at("precision_used").get<long>();
        c.precision_verify = j.at("precision_verify").get<long>();
    }
    return c;
}

nlohmann::json to_json(const UnitSystem& s) {
    nlohmann::json members = nlohmann::json::array();
    for (const auto& u : s.cyc_members) members.push_back(to_json(u));
    for (const auto& u : s.ring_members) members.push_back(to_json(u));
    nlohmann::json certs = nlohmann::json::array();
    for (const auto& c : s.certificates) certs.push_back(to_json(c));
    return {{"p", s.ctx.p}, {"n", s.ctx.n},   {"t", s.ctx.t},
            {"name", to_string(s.name)},      {"members", members},
            {"certs", certs}};
}

nlohmann::json to_json(const LevelTable& t) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : t.gens) gens.push_back(to_json(g));
    return {{"format", 1},
            {"p", t.ctx.p},
            {"n", t.ctx.n},
            {"t", t.ctx.t},
            {"source", t.source},
            {"gens", gens}};
}

LevelTable level_table_from_json(const nlohmann::json& j) {
    if (j.at("format").get<long>() != 1) throw std::invalid_argument("unsupported format");
    LevelTable t;
    t.ctx = make_ctx(j.at("p").get<long>(), j.at("n").get<long>(), j.at("t").get<long>());
    t.source = j.at("source").get<std::string>();
    for (const auto& g : j.at("gens")) t.gens.push_back(group_ring_from_json(g));
    return t;
}

nlohmann::json to_json(const AssemblyResult& r) {
    auto arr = [](const std::vector<GroupRingElem>& v) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& x : v) a.push_back(to_json(x));
        return a;
    };
    nlohmann::json expo = nlohmann::json::array();
    for (const auto& row : r.kernel_construction.exponents) {
        nlohmann::json jr = nlohmann::json::array();
        for (const auto& x : row) jr.push_back(int_to_json(x));
        expo.push_back(jr);
    }
    return {{"format", 1},
            {"p", r.ctx.p},
            {"n", r.ctx.n},
            {"t", r.ctx.t},
            {"kappa", r.ctx.kappa},
            {"torsion", {{"order", r.ctx.m}, {"sign", true}}},
            {"hoechsmann", arr(r.hoechsmann)},
            {"hoechsmann_symmetric", arr(r.hoechsmann_sym)},
            {"symmetric_shift", r.sym_shift},
            {"kernel", arr(r.kernel)},
            {"kernel_words", arr(r.kernel_construction.words)},
            {"kernel_exponents", expo},
            {"kernel_plain_powers", r.kernel_construction.plain_powers},
            {"index_certificate", to_json(r.kernel_construction.index_cert)},
            {"h_rank_certificate", to_json(r.h_rank_cert)},
            {"hypothesis_certificate", to_json(r.hypothesis_cert)},
            {"total_rank", r.total_rank},
            {"assumptions", r.assumptions}};
}

}  // namespace zcpn
