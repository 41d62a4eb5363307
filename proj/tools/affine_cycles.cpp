#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "affine/cycle_index.hpp"
#include "affine/io_json.hpp"
#include "affine/oracle.hpp"
#include "affine/sampler.hpp"
#include "affine/verify.hpp"

namespace {

using namespace affine;

int thread_cap_from_env(int requested) {
    const char* env = std::getenv("AFFINE_CYCLES_THREADS");
    if (env == nullptr) return requested;
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end == env || cap < 1) return requested;
    return static_cast<int>(std::min<long>(requested, cap));
}

GroupKind parse_group(const std::string& g) {
    if (g == "GL") return GroupKind::GL;
    if (g == "A") return GroupKind::Affine;
    return GroupKind::Parabolic;
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::string dec(const Rational& r) {
    std::ostringstream os;
    os << std::setprecision(12) << to_double(r);
    return os.str();
}

Json rat_json(const Rational& r) {
    return Json{{"rational", to_string(r)}, {"decimal", to_double(r)}};
}

/// Output sink: stdout by default, a file when --out is given.
class Sink {
  public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::invalid_argument("cannot open output file: " + path);
        }
    }
    std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

struct SeriesArgs {
    std::string group = "A";
    long q = 2;
    int order = 10;
    bool limits = false;
    std::string format = "tsv";
    std::string out;
};

int run_series(const SeriesArgs& a) {
    GroupKind kind = parse_group(a.group);
    QContext ctx((Rational(a.q)));
    Series s = separable_series(kind, ctx, a.order);
    Series c = cyclic_series(kind, ctx, a.order);
    Series ss = semisimple_series(kind, ctx, a.order);
    bool affine_like = kind != GroupKind::GL;

    Rational s_inf, c_inf, ss_inf;
    if (a.limits) {
        s_inf = limit_separable(kind, ctx);
        c_inf = limit_cyclic(kind, ctx);
        ss_inf = limit_semisimple(kind, ctx, make_rational(1, int_pow(Integer(10), 12)));
    }

    Sink sink(a.out);
    std::ostream& os = sink.out();
    if (a.format == "json") {
        Json rows = Json::array();
        for (int n = 0; n <= a.order; ++n) {
            Json row{{"n", n},
                     {"s", rat_json(s.coeff(n))},
                     {"c", rat_json(c.coeff(n))},
                     {"ss", rat_json(ss.coeff(n))}};
            if (affine_like) {
                row["bound_separable"] = rat_json(bound_separable(n, ctx));
                row["bound_cyclic"] = rat_json(bound_cyclic(n, ctx));
            }
            rows.push_back(row);
        }
        Json doc{{"group", a.group}, {"q", a.q}, {"rows", rows}};
        if (a.limits) {
            // s and c have closed rational forms; the semisimple limit is an
            // infinite product only known within the tail bound, so only its
            // decimal is reported.
            doc["limits"] = Json{{"s", rat_json(s_inf)},
                                 {"c", rat_json(c_inf)},
                                 {"ss", Json{{"rational", nullptr}, {"decimal", to_double(ss_inf)}}}};
        }
        os << doc.dump(2) << "\n";
    } else {
        os << "n\ts\ts_dec\tc\tc_dec\tss\tss_dec";
        if (affine_like) os << "\tbound_separable\tbound_separable_dec\tbound_cyclic\tbound_cyclic_dec";
        os << "\n";
        for (int n = 0; n <= a.order; ++n) {
            os << n << "\t" << to_string(s.coeff(n)) << "\t" << dec(s.coeff(n)) << "\t"
               << to_string(c.coeff(n)) << "\t" << dec(c.coeff(n)) << "\t" << to_string(ss.coeff(n))
               << "\t" << dec(ss.coeff(n));
            if (affine_like) {
                Rational bs = bound_separable(n, ctx), bc = bound_cyclic(n, ctx);
                os << "\t" << to_string(bs) << "\t" << dec(bs) << "\t" << to_string(bc) << "\t" << dec(bc);
            }
            os << "\n";
        }
        if (a.limits) {
            // the semisimple limit has no closed rational form: decimal only
            os << "inf\t" << to_string(s_inf) << "\t" << dec(s_inf) << "\t" << to_string(c_inf) << "\t"
               << dec(c_inf) << "\t-\t" << dec(ss_inf);
            if (affine_like) os << "\t-\t-\t-\t-";
            os << "\n";
        }
    }
    return 0;
}

struct SampleArgs {
    std::string algorithm = "affine";
    std::string u = "1/2";
    long q = 2;
    int n = -1;
    long count = 1;
    std::uint64_t seed = 0;
    std::string out;
};

int run_sample(const SampleArgs& a) {
    QContext ctx((Rational(a.q)));
    bool conditional = a.algorithm == "conditional";
    Rational u;
    if (!conditional) {
        u = parse_rational(a.u);
        if (u <= 0 || u >= 1) throw std::invalid_argument("--u must lie strictly between 0 and 1");
    }
    if (conditional && a.n < 0) throw std::invalid_argument("--n is required for the conditional sampler");

    SampleParams params;
    params.algorithm = a.algorithm;
    params.u = conditional ? "" : to_string(u);
    params.q = a.q;
    params.n = conditional ? a.n : -1;

    Sink sink(a.out);
    std::ostream& os = sink.out();
    MeasureParams p(conditional ? Rational(1, 2) : u, ctx);
    for (long i = 0; i < a.count; ++i) {
        RandomStream rs(a.seed, static_cast<std::uint64_t>(i));
        Partition lam;
        std::vector<int> cols;
        bool has_path = true;
        if (a.algorithm == "yta") {
            TableauPath t = sample_M_yta(p, rs);
            lam = t.shape;
            cols = t.columns;
        } else if (a.algorithm == "terminating") {
            TableauPath t = sample_M_terminating(p, rs);
            lam = t.shape;
            cols = t.columns;
        } else if (a.algorithm == "affine") {
            TableauPath t = sample_N_affine(p, rs);
            lam = t.shape;
            cols = t.columns;
        } else if (a.algorithm == "markov") {
            lam = sample_N_markov(p, rs);
            has_path = false;
        } else {
            TableauPath t = sample_N_given_size(a.n, ctx, rs);
            lam = t.shape;
            cols = t.columns;
        }
        os << sample_record(lam, has_path ? &cols : nullptr, a.seed, params).dump() << "\n";
    }
    return 0;
}

struct OracleArgs {
    std::string group = "A";
    int n = 1;
    long q = 2;
    int threads = 1;
    long cap = 10'000'000;
    std::string out;
};

int run_oracle(const OracleArgs& a) {
    if (!is_prime(a.q)) throw std::invalid_argument("--q must be prime for the oracle");
    int threads = thread_cap_from_env(a.threads);
    Census c = census(parse_group(a.group), a.n, a.q, threads, a.cap);
    Sink sink(a.out);
    sink.out() << census_to_json(c).dump(2) << "\n";
    return 0;
}

struct VerifyArgs {
    std::vector<std::string> suites;
    long max_order = 10'000'000;
    int threads = 1;
    long samples = 100'000;
    std::uint64_t seed = 20260819;
};

int run_verify(const VerifyArgs& a) {
    verify::Options o;
    o.max_order = a.max_order;
    o.threads = thread_cap_from_env(a.threads);
    o.samples = a.samples;
    o.seed = a.seed;
    std::vector<std::string> suites = a.suites.empty() ? verify::suite_names() : a.suites;
    int failed = 0;
    std::string first_failure;
    for (const std::string& suite : suites) {
        std::cout << "== suite " << suite << "\n";
        for (const verify::CheckResult& r : verify::run_suite(suite, o)) {
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
            if (!r.pass) {
                ++failed;
                if (first_failure.empty()) first_failure = r.name;
            }
        }
    }
    if (failed > 0) {
        std::cout << failed << " check(s) failed; first failure: " << first_failure << "\n";
        return 1;
    }
    std::cout << "all checks passed\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conjugacy-class statistics of finite affine matrix groups"};
    app.require_subcommand(1);

    SeriesArgs se;
    CLI::App* cmd_series = app.add_subcommand("series", "Proportion series, bounds, and limits");
    cmd_series->add_option("--group", se.group)->check(CLI::IsMember({"GL", "A", "P"}));
    cmd_series->add_option("--q", se.q)->check(CLI::Range(2L, 1'000'000L));
    cmd_series->add_option("--order", se.order)->check(CLI::Range(0, 300));
    cmd_series->add_flag("--limits", se.limits);
    cmd_series->add_option("--format", se.format)->check(CLI::IsMember({"tsv", "json"}));
    cmd_series->add_option("--out", se.out);

    SampleArgs sa;
    CLI::App* cmd_sample = app.add_subcommand("sample", "Random partition samplers (ndjson)");
    cmd_sample->add_option("--algorithm", sa.algorithm)
        ->check(CLI::IsMember({"yta", "terminating", "affine", "markov", "conditional"}));
    cmd_sample->add_option("--u", sa.u);
    cmd_sample->add_option("--q", sa.q)->check(CLI::Range(2L, 1'000'000L));
    cmd_sample->add_option("--n", sa.n)->check(CLI::Range(0, 1'000));
    cmd_sample->add_option("--count", sa.count)->check(CLI::Range(1L, 100'000'000L));
    cmd_sample->add_option("--seed", sa.seed);
    cmd_sample->add_option("--out", sa.out);

    OracleArgs oa;
    CLI::App* cmd_oracle = app.add_subcommand("oracle", "Brute-force conjugacy census (JSON)");
    cmd_oracle->add_option("--group", oa.group)->check(CLI::IsMember({"GL", "A", "P"}));
    cmd_oracle->add_option("--n", oa.n)->check(CLI::Range(0, 16));
    cmd_oracle->add_option("--q", oa.q)->check(CLI::Range(2L, 1'000L));
    cmd_oracle->add_option("--threads", oa.threads)->check(CLI::Range(1, 256));
    cmd_oracle->add_option("--cap", oa.cap)->check(CLI::Range(1L, 2'000'000'000L));
    cmd_oracle->add_option("--out", oa.out);

    VerifyArgs va;
    CLI::App* cmd_verify = app.add_subcommand("verify", "Named verification suites");
    cmd_verify->add_option("--suite", va.suites)->check(CLI::IsMember(verify::suite_names()));
    cmd_verify->add_option("--max-order", va.max_order)->check(CLI::Range(1L, 2'000'000'000L));
    cmd_verify->add_option("--threads", va.threads)->check(CLI::Range(1, 256));
    cmd_verify->add_option("--samples", va.samples)->check(CLI::Range(100L, 100'000'000L));
    cmd_verify->add_option("--seed", va.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_series->parsed()) return run_series(se);
        if (cmd_sample->parsed()) return run_sample(sa);
        if (cmd_oracle->parsed()) return run_oracle(oa);
        if (cmd_verify->parsed()) return run_verify(va);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
