#include "shintani/report.hpp"

#include <chrono>
#include <sstream>

namespace shintani {

namespace {

long long now_us() {
    using namespace std::chrono;
    return duration_cast<microseconds>(steady_clock::now().time_since_epoch()).count();
}

}  // namespace

nlohmann::json int_json(const Int& n) {
    if (n >= (std::numeric_limits<long long>::min)() && n <= (std::numeric_limits<long long>::max)())
        return n.convert_to<long long>();
    return n.str();
}

RunReport run_classnum(const FieldContext& F, long long p, const std::string& method,
                       std::optional<std::pair<long long, long long>> rho_override,
                       bool crosscheck) {
    ResidueField rf(F, p);
    Generator rho = rho_override ? rf.generator_from_lift(rho_override->first, rho_override->second)
                                 : rf.find_generator();

    RunReport rep;
    rep.d = F.d;
    rep.p = p;
    rep.rho_a = rho.a;
    rep.rho_b = rho.b;
    RecurrenceParams params = cd_constants(F, rho);
    rep.C = params.C;
    rep.D = params.D;
    rep.ell = period_length_of_inv_p(F, p);
    rep.cycle_count = to_ll(F.t() * (Int(p) * p - 1) / rep.ell);

    bool all = method == "all";
    auto run = [&](const std::string& name, auto&& fn) {
        long long start = now_us();
        Int h = fn();
        rep.methods.push_back(name);
        rep.h.emplace_back(name, h);
        rep.timing_us.emplace_back(name, now_us() - start);
    };
    if (all || method == "direct") run("direct", [&] { return class_number_direct(F, p); });
    if (all || method == "thm1") run("thm1", [&] { return class_number_thm1(F, p, rho).h; });
    if (all || method == "thm2") {
        run("thm2", [&] {
            Thm2Result r = class_number_thm2(F, p);
            if (r.ell != rep.ell || r.cycle_count != rep.cycle_count)
                throw Error(Errc::InternalInconsistency, "cycle structure mismatch");
            return r.h;
        });
    }
    if (rep.h.empty()) throw Error(Errc::InvalidArgument, "unknown method: " + method);

    if (crosscheck) {
        for (const auto& [name, h] : rep.h) {
            if (h != rep.h.front().second)
                throw Error(Errc::InternalInconsistency,
                            "methods disagree: " + rep.h.front().first + "=" +
                                rep.h.front().second.str() + " vs " + name + "=" + h.str());
        }
    }
    return rep;
}

std::vector<long long> eligible_primes(const FieldContext& F, long long pmax) {
    std::vector<long long> out;
    for (long long p = 7; p <= pmax; ++p)
        if (eligibility(F, p).eligible) out.push_back(p);
    return out;
}

Table1Row table1_row(const FieldContext& F, long long p) {
    ResidueField rf(F, p);
    Generator rho = rf.find_generator();
    Thm1Result r = class_number_thm1(F, p, rho);
    return Table1Row{p, rho.a, rho.b, r.C, r.D, r.terms.front(), r.terms.back(), r.h};
}

Table2Row table2_row(const FieldContext& F, long long p) {
    Thm2Result r = class_number_thm2(F, p);
    EpsExpansion e = eps_expand(F, qr_from(make_rat(1, p)));
    if (static_cast<long long>(e.period.size()) != r.ell)
        throw Error(Errc::InternalInconsistency, "expansion period disagrees with cycle length");
    return Table2Row{p, render_expansion(F, e), r.ell, r.h};
}

nlohmann::json report_json(const RunReport& r) {
    nlohmann::json j;
    j["d"] = r.d;
    j["p"] = r.p;
    j["methods"] = r.methods;
    nlohmann::json h = nlohmann::json::object();
    for (const auto& [name, value] : r.h) h[name] = int_json(value);
    j["h"] = h;
    nlohmann::json timing = nlohmann::json::object();
    for (const auto& [name, us] : r.timing_us) timing[name] = us;
    j["timing_us"] = timing;
    j["ell"] = r.ell;
    j["cycle_count"] = r.cycle_count;
    j["rho"] = {{"a", r.rho_a}, {"b", r.rho_b}};
    j["C"] = int_json(r.C);
    j["D"] = int_json(r.D);
    return j;
}

std::string report_tsv(const RunReport& r) {
    std::ostringstream os;
    os << "d\tp\tmethod\th\ttiming_us\tell\tcycle_count\trho_a\trho_b\tC\tD\n";
    for (size_t i = 0; i < r.h.size(); ++i) {
        os << r.d << '\t' << r.p << '\t' << r.h[i].first << '\t' << r.h[i].second << '\t'
           << r.timing_us[i].second << '\t' << r.ell << '\t' << r.cycle_count << '\t' << r.rho_a
           << '\t' << r.rho_b << '\t' << r.C << '\t' << r.D << '\n';
    }
    return os.str();
}

nlohmann::json eligibility_json(long long d, long long p, const EligibilityReport& rep) {
    nlohmann::json j;
    j["d"] = d;
    j["p"] = p;
    j["eligible"] = rep.eligible;
    std::vector<std::string> names;
    for (ReasonCode c : rep.failures) names.emplace_back(reason_code_name(c));
    j["failures"] = names;
    return j;
}

nlohmann::json table1_json(const std::vector<Table1Row>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Table1Row& r : rows) {
        arr.push_back({{"p", r.p},
                       {"rho", {{"a", r.rho_a}, {"b", r.rho_b}}},
                       {"C", int_json(r.C)},
                       {"D", int_json(r.D)},
                       {"first_summand", int_json(r.first_summand)},
                       {"last_summand", int_json(r.last_summand)},
                       {"h", int_json(r.h)}});
    }
    return arr;
}

nlohmann::json table2_json(const std::vector<Table2Row>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Table2Row& r : rows) {
        arr.push_back({{"p", r.p}, {"expansion", r.expansion}, {"ell", r.ell}, {"h", int_json(r.h)}});
    }
    return arr;
}

std::string table1_tsv(const std::vector<Table1Row>& rows) {
    std::ostringstream os;
    os << "p\trho_a\trho_b\tC\tD\tfirst_summand\tlast_summand\th\n";
    for (const Table1Row& r : rows) {
        os << r.p << '\t' << r.rho_a << '\t' << r.rho_b << '\t' << r.C << '\t' << r.D << '\t'
           << r.first_summand << '\t' << r.last_summand << '\t' << r.h << '\n';
    }
    return os.str();
}

std::string table2_tsv(const std::vector<Table2Row>& rows) {
    std::ostringstream os;
    os << "p\texpansion\tell\th\n";
    for (const Table2Row& r : rows)
        os << r.p << '\t' << r.expansion << '\t' << r.ell << '\t' << r.h << '\n';
    return os.str();
}

}  // namespace shintani
