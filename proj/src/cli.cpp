#include "pqm/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "pqm/embeddings.hpp"
#include "pqm/finite_qm.hpp"
#include "pqm/poset.hpp"
#include "pqm/state_io.hpp"
#include "pqm/verify.hpp"

namespace pqm {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

// Writes to `path`, or to `out` when the path is empty or "-".
void emit(const std::string& path, std::ostream& out, const std::string& text) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream os(path);
    if (!os) throw std::runtime_error("pqm: cannot write " + path);
    os << text;
    if (!os) throw std::runtime_error("pqm: write failed for " + path);
}

FiniteState load_state(const std::string& path, std::optional<i64> expected_n) {
    FiniteState f = read_state_file(path).state;
    if (expected_n && *expected_n != f.n) {
        throw std::invalid_argument("pqm: --n " + std::to_string(*expected_n) + " does not match the state (n = " +
                                    std::to_string(f.n) + ")");
    }
    return f;
}

std::string join_values(const FinitePoset& P, const std::vector<std::size_t>& idx) {
    std::string s;
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? " " : "") + P.element(idx[i]).str();
    return s;
}

struct FourierArgs {
    std::string in, out, method = "direct";
    std::optional<i64> n;
    int times = 1;
    bool inverse = false;
};

struct WignerArgs {
    std::string in, out, kind = "wigner", grid = "standard";
};

struct DisplaceArgs {
    std::string in, out;
    i64 alpha = 0, beta = 0, gamma = 0;
};

struct EmbedArgs {
    std::string in, out;
    std::optional<i64> from;
    i64 to = 0;
};

struct PosetArgs {
    u64 n = 0;
    std::string query;
};

struct PadicArgs {
    i64 n = 0, mu = 0;
    u64 p = 2;
    i64 value = 0, num = 0, den = 1;
    int precision = 8;
};

struct VerifyArgs {
    std::vector<std::string> suites;
    std::string config, report;
    std::optional<double> tolerance;
};

int cmd_fourier(const FourierArgs& a, std::ostream& out) {
    FiniteState f = load_state(a.in, a.n);
    for (int i = 0; i < a.times; ++i) {
        if (a.inverse) {
            f = inverse_fourier(f);
        } else {
            f = a.method == "good" ? fourier_good(f) : fourier(f);
        }
    }
    emit(a.out, out, state_to_json(f));
    return kExitOk;
}

int cmd_wigner(const WignerArgs& a, std::ostream& out) {
    const FiniteState f = load_state(a.in, std::nullopt);
    const auto grid = a.grid == "quadruple" ? ParityGrid::quadruple : ParityGrid::standard;
    const auto kind = a.kind == "weyl" ? PhaseFunction::weyl : PhaseFunction::wigner;
    const FiniteState x = f.rep == Rep::position ? f : inverse_fourier(f);
    std::ostringstream os;
    os << std::setprecision(17) << "a,b,re,im\n";
    for (const auto& pt : phase_grid(x.n, grid)) {
        const cd v = weyl_wigner(x, pt, kind);
        os << pt.a.str() << ',' << pt.b << ',' << v.real() << ',' << v.imag() << '\n';
    }
    emit(a.out, out, os.str());
    return kExitOk;
}

int cmd_displace(const DisplaceArgs& a, std::ostream& out) {
    const FiniteState f = load_state(a.in, std::nullopt);
    emit(a.out, out, state_to_json(displace(HWElement::canonical(f.n, a.alpha, a.beta, a.gamma), f)));
    return kExitOk;
}

int cmd_embed(const EmbedArgs& a, std::ostream& out) {
    const FiniteState f = load_state(a.in, a.from);
    emit(a.out, out, state_to_json(state_embed(f, a.to)));
    return kExitOk;
}

int cmd_poset(const PosetArgs& a, std::ostream& out) {
    const FinitePoset P = divisor_poset(a.n);
    if (a.query == "t0") {
        out << (check_t0(P) ? "true" : "false") << '\n';
        return kExitOk;
    }
    if (a.query == "t1") {
        const auto t1 = check_t1(P);
        out << (t1.holds ? "true" : "false");
        if (t1.witness) {
            out << " (every open set containing " << P.element(t1.witness->second).str() << " contains "
                << P.element(t1.witness->first).str() << ")";
        }
        out << '\n';
        return kExitOk;
    }
    const auto wl = poset_width_length(P);
    if (a.query == "width") {
        out << wl.width << '\n';
    } else if (a.query == "length") {
        out << wl.length << '\n';
    } else if (a.query == "partition") {
        for (const auto& chain : wl.chain_partition) out << join_values(P, chain) << '\n';
    } else if (a.query == "antichain") {
        out << join_values(P, wl.max_antichain) << '\n';
    } else {
        out << join_values(P, wl.longest_chain) << '\n';
    }
    return kExitOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    VerifyConfig cfg = a.config.empty() ? VerifyConfig{} : load_verify_config(a.config);
    if (a.tolerance) cfg.tolerance = a.tolerance;
    cfg.suites.insert(a.suites.begin(), a.suites.end());
    validate(cfg);
    const auto results = run_verify(cfg);
    for (const auto& r : results) {
        out << (r.informational ? "INFO " : r.passed ? "PASS " : "FAIL ") << r.criterion << ' ' << r.name
            << " residual=" << std::setprecision(3) << r.residual << " tol=" << r.tolerance;
        if (!r.detail.empty()) out << "  [" << r.detail << ']';
        out << '\n';
    }
    const auto graded = std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.informational; });
    const auto passed =
        std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return r.passed && !r.informational; });
    out << passed << '/' << graded << " checks passed\n";
    if (!a.report.empty()) {
        const auto j = report_json(results);
        emit(a.report, out, j.dump(2) + "\n");
    }
    return all_passed(results) ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum mechanics on profinite groups: finite phase-space tools and checks", "pqm"};
    app.require_subcommand(1);
    int status = kExitOk;

    FourierArgs fa;
    auto* fourier_cmd = app.add_subcommand("fourier", "Fourier transform of a state file");
    fourier_cmd->add_option("--in", fa.in, "Input state JSON")->required();
    fourier_cmd->add_option("--out", fa.out, "Output state JSON (stdout if omitted)");
    fourier_cmd->add_option("--n", fa.n, "Expected dimension");
    fourier_cmd->add_option("--method", fa.method, "direct or good")->check(CLI::IsMember({"direct", "good"}));
    fourier_cmd->add_option("--times", fa.times, "Number of applications")->check(CLI::NonNegativeNumber);
    fourier_cmd->add_flag("--inverse", fa.inverse, "Apply the inverse transform");
    fourier_cmd->callback([&] { status = cmd_fourier(fa, out); });

    WignerArgs wa;
    auto* wigner_cmd = app.add_subcommand("wigner", "Weyl or Wigner table over the phase grid (CSV)");
    wigner_cmd->add_option("--in", wa.in, "Input state JSON")->required();
    wigner_cmd->add_option("--out", wa.out, "Output CSV (stdout if omitted)");
    wigner_cmd->add_option("--kind", wa.kind, "weyl or wigner")->check(CLI::IsMember({"weyl", "wigner"}));
    wigner_cmd->add_option("--grid", wa.grid, "standard or quadruple")->check(CLI::IsMember({"standard", "quadruple"}));
    wigner_cmd->callback([&] { status = cmd_wigner(wa, out); });

    DisplaceArgs da;
    auto* displace_cmd = app.add_subcommand("displace", "Apply D(alpha, beta, gamma) to a state file");
    displace_cmd->add_option("--in", da.in, "Input state JSON")->required();
    displace_cmd->add_option("--out", da.out, "Output state JSON (stdout if omitted)");
    displace_cmd->add_option("--alpha", da.alpha, "Clock index");
    displace_cmd->add_option("--beta", da.beta, "Shift");
    displace_cmd->add_option("--gamma", da.gamma, "Phase numerator over n");
    displace_cmd->callback([&] { status = cmd_displace(da, out); });

    EmbedArgs ea;
    auto* embed_cmd = app.add_subcommand("embed", "Embed a state on Z(k) into Z(l), k | l");
    embed_cmd->add_option("--in", ea.in, "Input state JSON")->required();
    embed_cmd->add_option("--out", ea.out, "Output state JSON (stdout if omitted)");
    embed_cmd->add_option("--from", ea.from, "Source dimension k (checked against the file)");
    embed_cmd->add_option("--to", ea.to, "Target dimension l")->required();
    embed_cmd->callback([&] { status = cmd_embed(ea, out); });

    PosetArgs pa;
    auto* poset_cmd = app.add_subcommand("poset", "Queries on the divisor poset N(n)");
    poset_cmd->add_option("--n", pa.n, "n >= 2")->required()->check(CLI::Range(u64{2}, u64{1} << 40));
    poset_cmd->add_option("query", pa.query, "width, length, partition, antichain, chain, t0 or t1")
        ->required()
        ->check(CLI::IsMember({"width", "length", "partition", "antichain", "chain", "t0", "t1"}));
    poset_cmd->callback([&] { status = cmd_poset(pa, out); });

    PadicArgs qa;
    auto* padic_cmd = app.add_subcommand("padic", "p-adic and CRT utilities");
    padic_cmd->require_subcommand(1);
    auto* crt_cmd = padic_cmd->add_subcommand("crt", "Residues of mu modulo the prime powers of n");
    crt_cmd->add_option("--n", qa.n, "Modulus")->required();
    crt_cmd->add_option("--mu", qa.mu, "Residue in Z(n)")->required();
    crt_cmd->callback([&] {
        const auto parts = split_mu(crt_idempotents(qa.n), qa.mu);
        out << '(';
        for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? "," : "") << parts[i];
        out << ")\n";
    });
    auto* digits_cmd = padic_cmd->add_subcommand("digits", "Base-p digits of an integer in Z_p");
    digits_cmd->add_option("--p", qa.p, "Prime")->required();
    digits_cmd->add_option("--value", qa.value, "Integer")->required();
    digits_cmd->add_option("--precision", qa.precision, "Number of digits")->check(CLI::Range(1, 62));
    digits_cmd->callback([&] { out << PadicInt::from_integer(qa.p, qa.value, qa.precision).str() << '\n'; });
    auto* ord_cmd = padic_cmd->add_subcommand("ord", "ord_p and |q|_p of num/den");
    ord_cmd->add_option("--p", qa.p, "Prime")->required();
    ord_cmd->add_option("--num", qa.num, "Numerator")->required();
    ord_cmd->add_option("--den", qa.den, "Denominator");
    ord_cmd->callback([&] {
        const Rational q(qa.num, qa.den);
        out << "ord=" << padic_ord(q, qa.p) << " abs=" << padic_abs(q, qa.p).str() << '\n';
    });
    auto* ostrowski_cmd = padic_cmd->add_subcommand("ostrowski", "|q|_inf times the product of all |q|_p");
    ostrowski_cmd->add_option("--num", qa.num, "Numerator")->required();
    ostrowski_cmd->add_option("--den", qa.den, "Denominator");
    ostrowski_cmd->callback([&] { out << ostrowski_product(Rational(qa.num, qa.den)).str() << '\n'; });
    auto* decompose_cmd = padic_cmd->add_subcommand("decompose", "Partial fractions of num/den in Q/Z");
    decompose_cmd->add_option("--num", qa.num, "Numerator")->required();
    decompose_cmd->add_option("--den", qa.den, "Denominator")->required();
    decompose_cmd->callback([&] {
        for (const auto& [p, frac] : rat_decompose(RatMod1(qa.num, qa.den))) out << p << ": " << frac.str() << '\n';
    });

    VerifyArgs va;
    auto* verify_cmd = app.add_subcommand("verify", "Run the verification suites");
    verify_cmd->add_option("--suite", va.suites, "Suite to run (repeatable)")->check(CLI::IsMember(verify_suites()));
    verify_cmd->add_option("--config", va.config, "key=value config file")->check(CLI::ExistingFile);
    verify_cmd->add_option("--report", va.report, "Write the JSON report here");
    verify_cmd->add_option("--tolerance", va.tolerance, "Override every floating tolerance");
    verify_cmd->callback([&] { status = cmd_verify(va, out); });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }
    return status;
}

}  // namespace pqm
