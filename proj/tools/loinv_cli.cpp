// Command-line interface for the linear-optics invariant toolkit.
//
// Subcommands: basis, apply, norm, avg, molien, phase-gens, invariants, wg,
// reach.  Exit codes: 0 success, 1 the reach verdict is UNREACHABLE, 2
// malformed input or an unusable option combination, 3 a golden comparison
// failed.  All output is deterministic for fixed inputs and seed.

#include <loinv/loinv.hpp>

#include <CLI11.hpp>

#include <complex>
#include <iostream>
#include <set>
#include <string>

using namespace loinv;

namespace {

constexpr int kExitUnreachable = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitGoldenMismatch = 3;

std::string float_str(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::string complex_str(const std::complex<double>& z) {
    return float_str(z.real()) + (z.imag() < 0 ? " - " : " + ") +
           float_str(std::abs(z.imag())) + " i";
}

struct Options {
    bool use_float = false;
    std::uint64_t seed = 20240901;
};

int run_basis(int n, int m) {
    auto occs = enumerate_occupations(n, m);
    std::cout << "dim " << occs.size() << "\n";
    for (const auto& v : occs) {
        for (int k = 0; k < m; ++k) std::cout << (k ? " " : "") << v[k];
        std::cout << "\n";
    }
    return 0;
}

template <class S>
int run_apply(const std::string& state_path, const std::string& unitary_path) {
    auto st = read_state_file<S>(state_path);
    auto u = read_unitary_file<S>(unitary_path);
    if constexpr (scalar_traits<S>::exact) {
        // work and answer in the monomial convention: a rotated state rarely
        // has rational ket amplitudes even when its monomial ones are exact
        write_state(std::cout, apply_unitary(convert(st, Convention::MONOMIAL), u));
    } else {
        write_state(std::cout, apply_unitary(st, u));
    }
    return 0;
}

template <class S>
int run_norm(const std::string& state_path) {
    auto st = read_state_file<S>(state_path);
    auto v = norm_sq(st);
    if constexpr (scalar_traits<S>::exact) {
        std::cout << to_string(v) << "\n";
    } else {
        std::cout << float_str(v) << "\n";
    }
    return 0;
}

int run_avg(const std::string& monomial_text, int n, int m) {
    Monomial mono = parse_monomial(monomial_text);
    std::cout << to_string(average_monomial(mono, n, m)) << "\n";
    return 0;
}

int run_molien(bool phase, int n, int m, int D) {
    MolienSeries s = phase ? phase_molien_truncated(n, m, D) : molien_truncated(n, m, D);
    for (int d = 0; d <= D; ++d) std::cout << (d ? " " : "") << s.coeffs[d];
    std::cout << "\n";
    return 0;
}

int run_phase_gens(int n, int m, int degree_cap, bool golden) {
    if (golden) {
        const auto* want = golden_basis(n, m);
        if (!want) {
            std::cerr << "error: no golden table for n=" << n << ", m=" << m << "\n";
            return kExitBadInput;
        }
        // caps chosen one past the top degree of each table so completion
        // can certify itself
        int cap = 1;
        for (const auto& g : *want) cap = std::max(cap, g.deg_a() + 1);
        auto got = hilbert_basis(n, m, cap);
        std::set<ExponentPair> a(got.generators.begin(), got.generators.end());
        std::set<ExponentPair> b(want->begin(), want->end());
        if (a == b) {
            std::cout << got.generators.size() << " generators, golden match\n";
            return 0;
        }
        std::cout << got.generators.size() << " generators, golden MISMATCH (expected "
                  << want->size() << ")\n";
        return kExitGoldenMismatch;
    }
    auto res = hilbert_basis(n, m, degree_cap);
    std::cout << res.generators.size() << " generators up to degree " << res.degree_cap << "\n";
    for (const auto& g : res.generators) std::cout << to_string(g) << "\n";
    std::cout << (res.complete_certified ? "complete: certified" : "complete: " + res.certification_note)
              << "\n";
    return 0;
}

template <class S>
int run_invariants(const std::string& state_path, int degree_cap) {
    auto st = read_state_file<S>(state_path);
    auto rep = build_generating_set(st.n, st.m, degree_cap,
                                    /*pattern_max_nd=*/9, /*molien_budget=*/64);
    std::cout << "generators " << rep.generators.size() << " (degree cap " << degree_cap << ", "
              << (rep.all_matched ? "series matched" : "series not fully matched") << ")\n";
    for (std::size_t i = 0; i < rep.generators.size(); ++i) {
        S v = evaluate(rep.generators[i], st);
        std::cout << "g" << i + 1 << " degree " << rep.generator_degrees[i] << " = ";
        if constexpr (scalar_traits<S>::exact) {
            std::cout << to_string(v) << "\n";
        } else {
            std::cout << complex_str(v) << "\n";
        }
    }
    return 0;
}

int run_wg(int d, int m) {
    const auto& tbl = weingarten_table(d, m);
    for (const auto& [mu, val] : tbl) {
        std::cout << "[";
        for (std::size_t i = 0; i < mu.size(); ++i) std::cout << (i ? "," : "") << mu[i];
        std::cout << "] " << to_string(val) << "\n";
    }
    return 0;
}

template <class S>
int run_reach(const std::string& src_path, const std::string& dst_path, const ReachOptions& opt) {
    auto src = read_state_file<S>(src_path);
    auto dst = read_state_file<S>(dst_path);
    auto v = decide_reachability(src, dst, opt);
    std::cout << "status: " << to_string(v.status) << "\n";
    std::cout << "method: " << to_string(v.method) << "\n";
    std::cout << "degree_explored: " << v.degree_explored << "\n";
    if (v.witness) {
        std::cout << "witness: " << v.witness->invariant << "\n";
        std::cout << "witness_degree: " << v.witness->degree << "\n";
        std::cout << "src_value: " << v.witness->src_value << "\n";
        std::cout << "dst_value: " << v.witness->dst_value << "\n";
    }
    if (v.unitary) {
        std::cout << "unitary: exhibited\n";
        for (int i = 0; i < v.unitary->m; ++i) {
            for (int j = 0; j < v.unitary->m; ++j)
                std::cout << (j ? "  " : "") << complex_str(v.unitary->at(i, j));
            std::cout << "\n";
        }
    }
    return v.status == ReachStatus::UNREACHABLE ? kExitUnreachable : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariant toolkit for linear-optical state transformations"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--float", opt.use_float, "use the floating-point backend (default: exact)");
    bool exact_flag = false;
    app.add_flag("--exact", exact_flag, "use the exact rational backend (default)");
    app.add_option("--seed", opt.seed, "seed for randomized searches");

    int n = 2, m = 2, D = 4, d = 2, degree_cap = 4;
    std::string state_path, unitary_path, src_path, dst_path, monomial_text;
    bool molien_phase = false, molien_full = false, golden = false;
    double tol = 1e-8;
    int restarts = 40;

    auto* basis = app.add_subcommand("basis", "list the occupation basis of n photons in m modes");
    basis->add_option("-n", n, "photon count")->required();
    basis->add_option("-m", m, "mode count")->required();

    auto* apply = app.add_subcommand("apply", "apply a mode unitary to a state");
    apply->add_option("--state", state_path, "state file")->required();
    apply->add_option("--unitary", unitary_path, "unitary file")->required();

    auto* norm = app.add_subcommand("norm", "squared norm of a state");
    norm->add_option("--state", state_path, "state file")->required();

    auto* avg = app.add_subcommand("avg", "average a monomial over the unitary orbit");
    avg->add_option("--monomial", monomial_text, "monomial, e.g. \"a[2,0] b[2,0]\"")->required();
    avg->add_option("-n", n, "photon count")->required();
    avg->add_option("-m", m, "mode count")->required();

    auto* molien = app.add_subcommand("molien", "invariant-dimension series");
    molien->add_option("-n", n, "photon count")->required();
    molien->add_option("-m", m, "mode count")->required();
    molien->add_option("-D", D, "degree bound")->required();
    molien->add_flag("--full", molien_full, "series for the full unitary action");
    molien->add_flag("--phase", molien_phase, "series for the phase subgroup only");

    auto* pg = app.add_subcommand("phase-gens", "minimal generators of the balanced exponent monoid");
    pg->add_option("-n", n, "photon count")->required();
    pg->add_option("-m", m, "mode count")->required();
    pg->add_option("--degree-cap", degree_cap, "completion degree cap");
    pg->add_flag("--golden", golden, "compare against the built-in reference table");

    auto* inv = app.add_subcommand("invariants", "evaluate a generating set on a state");
    inv->add_option("--state", state_path, "state file")->required();
    inv->add_option("-D", degree_cap, "degree cap for the generating set");

    auto* wg = app.add_subcommand("wg", "Weingarten weights by cycle type");
    wg->add_option("-d", d, "moment order")->required();
    wg->add_option("-m", m, "dimension")->required();

    auto* reach = app.add_subcommand("reach", "decide whether a circuit maps src to dst");
    reach->add_option("--src", src_path, "source state file")->required();
    reach->add_option("--dst", dst_path, "target state file")->required();
    reach->add_option("-D", D, "invariant degree cap (three or more photons)");
    reach->add_option("--tol", tol, "float-backend tolerance");
    reach->add_option("--restarts", restarts, "restarts for the explicit-unitary search (0 disables)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitBadInput;
    }

    if (opt.use_float && exact_flag) {
        std::cerr << "error: --exact and --float are mutually exclusive\n";
        return kExitBadInput;
    }

    try {
        if (*basis) return run_basis(n, m);
        if (*apply)
            return opt.use_float ? run_apply<std::complex<double>>(state_path, unitary_path)
                                 : run_apply<GaussianRational>(state_path, unitary_path);
        if (*norm)
            return opt.use_float ? run_norm<std::complex<double>>(state_path)
                                 : run_norm<GaussianRational>(state_path);
        if (*avg) return run_avg(monomial_text, n, m);
        if (*molien) {
            if (molien_full == molien_phase) {
                std::cerr << "error: choose exactly one of --full or --phase\n";
                return kExitBadInput;
            }
            return run_molien(molien_phase, n, m, D);
        }
        if (*pg) return run_phase_gens(n, m, degree_cap, golden);
        if (*inv)
            return opt.use_float ? run_invariants<std::complex<double>>(state_path, degree_cap)
                                 : run_invariants<GaussianRational>(state_path, degree_cap);
        if (*wg) return run_wg(d, m);
        if (*reach) {
            ReachOptions ro;
            ro.degree_cap = D;
            ro.tol = tol;
            ro.oracle_restarts = restarts;
            ro.seed = opt.seed;
            return opt.use_float ? run_reach<std::complex<double>>(src_path, dst_path, ro)
                                 : run_reach<GaussianRational>(src_path, dst_path, ro);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
