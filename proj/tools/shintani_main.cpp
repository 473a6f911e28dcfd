// Command-line surface: class numbers of K = F(sqrt(-p)) over real quadratic
// F = Q(sqrt(d)) with h_F = 1, by three independent exact methods, plus dumps
// of the underlying Shintani data and base-eps expansions.
//
// Exit codes: 0 ok, 2 ineligible or bad input, 3 internal cross-check
// failure, 4 parse error.

#include "shintani/report.hpp"

#include "CLI11.hpp"

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <thread>

using namespace shintani;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitInternal = 3;
constexpr int kExitParse = 4;

struct CliError {
    int exit_code;
    std::string message;
};

FieldContext make_field_checked(long long d) {
    try {
        return make_field(d);
    } catch (const Error& e) {
        throw CliError{kExitBadInput, e.what()};
    }
}

void require_eligible(const FieldContext& F, long long p) {
    EligibilityReport rep = eligibility(F, p);
    if (!rep.eligible) {
        std::cout << eligibility_json(F.d, p, rep).dump(2) << "\n";
        throw CliError{kExitBadInput, "pair (d, p) is not eligible"};
    }
}

std::pair<long long, long long> parse_rho(const std::string& s) {
    auto comma = s.find(',');
    try {
        if (comma == std::string::npos) throw Error(Errc::InvalidArgument, "expected a,b");
        Rat a = parse_rat(s.substr(0, comma));
        Rat b = parse_rat(s.substr(comma + 1));
        if (denominator(a) != 1 || denominator(b) != 1)
            throw Error(Errc::InvalidArgument, "expected integers a,b");
        return {to_ll(numerator(a)), to_ll(numerator(b))};
    } catch (const Error&) {
        throw CliError{kExitParse, "malformed --rho (expected a,b): '" + s + "'"};
    }
}

int resolve_jobs(int jobs_flag) {
    if (jobs_flag > 0) return jobs_flag;
    if (const char* env = std::getenv("SHINTANI_JOBS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

void cmd_classnum(long long d, long long p, const std::string& method, const std::string& rho_str,
                  const std::string& format, bool no_crosscheck) {
    FieldContext F = make_field_checked(d);
    require_eligible(F, p);
    std::optional<std::pair<long long, long long>> rho;
    if (!rho_str.empty()) rho = parse_rho(rho_str);
    RunReport rep;
    try {
        rep = run_classnum(F, p, method, rho, !no_crosscheck);
    } catch (const Error& e) {
        if (e.code() == Errc::InternalInconsistency || e.code() == Errc::NonIntegralResult)
            throw CliError{kExitInternal, e.what()};
        throw CliError{kExitBadInput, e.what()};
    }
    if (format == "tsv")
        std::cout << report_tsv(rep);
    else
        std::cout << report_json(rep).dump(2) << "\n";
}

// Independent (d, p) jobs over a fixed-size pool; rows are buffered per
// index and emitted in prime order regardless of completion order.
template <typename Row>
std::vector<Row> sweep(const std::vector<long long>& primes, int jobs,
                       Row (*make_row)(const FieldContext&, long long), const FieldContext& F) {
    std::vector<Row> rows(primes.size());
    std::vector<std::exception_ptr> errors(primes.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next.fetch_add(1)) < primes.size();) {
            try {
                rows[i] = make_row(F, primes[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    size_t n = std::min<size_t>(std::max(jobs, 1), std::max<size_t>(primes.size(), 1));
    std::vector<std::thread> pool;
    for (size_t i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);
    return rows;
}

void cmd_table(long long d, long long pmax, const std::string& which, const std::string& format,
               int jobs) {
    FieldContext F = make_field_checked(d);
    std::vector<long long> primes = eligible_primes(F, pmax);
    try {
        if (which == "table1") {
            auto rows = sweep<Table1Row>(primes, resolve_jobs(jobs), table1_row, F);
            std::cout << (format == "tsv" ? table1_tsv(rows) : table1_json(rows).dump(2) + "\n");
        } else {
            auto rows = sweep<Table2Row>(primes, resolve_jobs(jobs), table2_row, F);
            std::cout << (format == "tsv" ? table2_tsv(rows) : table2_json(rows).dump(2) + "\n");
        }
    } catch (const Error& e) {
        if (e.code() == Errc::InternalInconsistency || e.code() == Errc::NonIntegralResult)
            throw CliError{kExitInternal, e.what()};
        throw CliError{kExitBadInput, e.what()};
    }
}

void cmd_inspect(long long d, long long p, const std::string& what, const std::string& format,
                 long long max_digits) {
    FieldContext F = make_field_checked(d);
    nlohmann::json j;
    std::ostringstream tsv;

    if (what.rfind("eps-expand:", 0) == 0) {
        QuadRat alpha;
        try {
            alpha = qr_from(parse_rat(what.substr(std::string("eps-expand:").size())));
        } catch (const Error& e) {
            throw CliError{kExitParse, e.what()};
        }
        EpsExpansion e;
        try {
            e = eps_expand(F, alpha, max_digits);
        } catch (const Error& err) {
            throw CliError{kExitBadInput, err.what()};
        }
        std::string rendered = render_expansion(F, e);
        j = {{"alpha", rat_str(alpha.u)},
             {"rendered", rendered},
             {"integer_digits", e.integer_digits},
             {"preperiod", e.preperiod},
             {"period", e.period},
             {"period_length", e.period.size()}};
        tsv << rendered << "\n";
    } else if (what == "kernel") {
        j = nlohmann::json::array();
        for (const KernelElem& k : kernel_elements(F)) {
            j.push_back(point_str(k.point));
            tsv << point_str(k.point) << "\n";
        }
    } else if (what == "shintani-set") {
        require_eligible(F, p);
        j = nlohmann::json::array();
        for (const ShintaniPoint& r : enumerate_R(F, p)) {
            j.push_back(point_str(r));
            tsv << point_str(r) << "\n";
        }
    } else if (what == "cycles") {
        require_eligible(F, p);
        ResidueField rf(F, p);
        CycleDecomposition dec = cycle_decompose(F, p);
        j = nlohmann::json::array();
        for (const ShintaniCycle& c : dec.nontrivial) {
            nlohmann::json points = nlohmann::json::array();
            for (const ShintaniPoint& pt : c.points) points.push_back(point_str(pt));
            j.push_back({{"rep", point_str(c.rep)},
                         {"length", c.length()},
                         {"chi", hecke_chi(rf, c.rep)},
                         {"points", points}});
            tsv << point_str(c.rep) << '\t' << c.length() << '\t' << hecke_chi(rf, c.rep) << "\n";
        }
    } else {
        throw CliError{kExitParse, "unknown --what: '" + what + "'"};
    }

    if (format == "tsv")
        std::cout << tsv.str();
    else
        std::cout << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"class numbers of F(sqrt(-p)) for real quadratic F with h_F = 1"};
    app.require_subcommand(1);

    long long d = 0, p = 0, pmax = 0, max_digits = 0;
    std::string method = "all", rho_str, format = "json", which, what;
    bool no_crosscheck = false;
    int jobs = 0;

    CLI::App* classnum = app.add_subcommand("classnum", "compute h by one or all methods");
    classnum->add_option("--d", d)->required();
    classnum->add_option("--p", p)->required();
    classnum->add_option("--method", method)->check(CLI::IsMember({"thm1", "thm2", "direct", "all"}));
    classnum->add_option("--rho", rho_str, "pin the generator lift a,b");
    classnum->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));
    classnum->add_flag("--no-crosscheck", no_crosscheck);

    CLI::App* table = app.add_subcommand("table", "rows for all eligible p <= pmax");
    table->add_option("--d", d)->required();
    table->add_option("--pmax", pmax)->required();
    table->add_option("--which", which)->required()->check(CLI::IsMember({"table1", "table2"}));
    table->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));
    table->add_option("--jobs", jobs, "worker pool size (SHINTANI_JOBS also honored)");

    CLI::App* inspect = app.add_subcommand("inspect", "dump Shintani data");
    inspect->add_option("--d", d)->required();
    inspect->add_option("--p", p)->required();
    inspect->add_option("--what", what, "shintani-set|cycles|kernel|eps-expand:num/den")->required();
    inspect->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));
    inspect->add_option("--max-digits", max_digits);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (classnum->parsed()) cmd_classnum(d, p, method, rho_str, format, no_crosscheck);
        if (table->parsed()) cmd_table(d, pmax, which, format, jobs);
        if (inspect->parsed()) cmd_inspect(d, p, what, format, max_digits);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.exit_code;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == Errc::InternalInconsistency || e.code() == Errc::NonIntegralResult
                   ? kExitInternal
                   : kExitBadInput;
    }
    return kExitOk;
}
