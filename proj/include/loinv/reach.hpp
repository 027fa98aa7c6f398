#pragma once

// End-to-end reachability: can some mode unitary carry one state to another?
//   n = 1  — compare squared norms (complete: the unitary group acts
//            transitively on spheres)
//   n = 2  — compare the characteristic coefficients of A^dag A (complete)
//   n >= 3 — compare a Molien-guided generating set of invariants up to a
//            degree cap: any mismatch proves UNREACHABLE with a witness; full
//            agreement is not conclusive, so the verdict is REACHABLE only if
//            the numerical search exhibits an explicit unitary, and UNDECIDED
//            otherwise.

#include <loinv/tensor_inv.hpp>
#include <loinv/two_photon.hpp>

#include <memory>
#include <mutex>
#include <optional>
#include <string>

namespace loinv {

enum class ReachStatus { REACHABLE, UNREACHABLE, UNDECIDED };
enum class ReachMethod { NORM_N1, SINGULAR_VALUES_N2, INVARIANT_COMPARISON };

inline const char* to_string(ReachStatus s) {
    switch (s) {
        case ReachStatus::REACHABLE: return "REACHABLE";
        case ReachStatus::UNREACHABLE: return "UNREACHABLE";
        default: return "UNDECIDED";
    }
}

inline const char* to_string(ReachMethod m) {
    switch (m) {
        case ReachMethod::NORM_N1: return "NORM_N1";
        case ReachMethod::SINGULAR_VALUES_N2: return "SINGULAR_VALUES_N2";
        default: return "INVARIANT_COMPARISON";
    }
}

struct ReachWitness {
    std::string invariant;  // printable form of the separating invariant
    int degree = 0;
    std::string src_value;
    std::string dst_value;
};

struct ReachVerdict {
    ReachStatus status = ReachStatus::UNDECIDED;
    ReachMethod method = ReachMethod::INVARIANT_COMPARISON;
    int degree_explored = 0;
    std::optional<ReachWitness> witness;  // always present when UNREACHABLE
    std::optional<ModeUnitary<std::complex<double>>> unitary;  // when exhibited
};

struct ReachOptions {
    int degree_cap = 3;        // invariant degree bound for n >= 3
    double tol = 1e-8;         // float-backend tolerance, scaled by degree
    int oracle_restarts = 40;  // 0 disables the explicit-unitary search
    std::uint64_t seed = 20240901;
    int pattern_max_nd = 9;    // slot budget for contraction patterns
    int avg_max_nd = 8;        // slot budget for averaged-monomial fallbacks
};

namespace detail {

template <class S>
FockState<std::complex<double>> as_float(const FockState<S>& st) {
    if constexpr (scalar_traits<S>::exact) {
        return to_float(st);
    } else {
        return st;
    }
}

template <class R>
bool reals_equal(const R& a, const R& b, double tol, int degree) {
    if constexpr (std::is_same_v<R, Rational>) {
        (void)tol;
        (void)degree;
        return a == b;
    } else {
        return std::abs(a - b) <= tol * degree * (1 + std::abs(a));
    }
}

// generating sets are pure functions of their arguments and are expensive to
// rebuild, so memoize them
inline const GeneratingSetReport& cached_generating_set(int n, int m, int D, int pattern_max_nd,
                                                        int avg_max_nd) {
    static std::map<std::tuple<int, int, int, int, int>, std::unique_ptr<GeneratingSetReport>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(n, m, D, pattern_max_nd, avg_max_nd);
    auto it = cache.find(key);
    if (it == cache.end()) {
        auto rep = std::make_unique<GeneratingSetReport>(
            build_generating_set(n, m, D, pattern_max_nd, /*molien_budget=*/64, avg_max_nd));
        it = cache.emplace(key, std::move(rep)).first;
    }
    return *it->second;
}

}  // namespace detail

template <class S>
ReachVerdict decide_reachability(const FockState<S>& src, const FockState<S>& dst,
                                 const ReachOptions& opt = {}) {
    using T = scalar_traits<S>;
    if (src.n != dst.n || src.m != dst.m)
        throw std::invalid_argument("decide_reachability: states must share (n, m)");
    ReachVerdict out;

    if (src.n == 1) {
        out.method = ReachMethod::NORM_N1;
        out.degree_explored = 1;
        auto a = norm_sq(src), b = norm_sq(dst);
        if (detail::reals_equal(a, b, opt.tol, 1)) {
            out.status = ReachStatus::REACHABLE;
        } else {
            out.status = ReachStatus::UNREACHABLE;
            out.witness = ReachWitness{"squared norm", 1, detail::real_str(a), detail::real_str(b)};
        }
        return out;
    }

    if (src.n == 2) {
        out.method = ReachMethod::SINGULAR_VALUES_N2;
        out.degree_explored = src.m;
        auto v = two_photon_reachable(src, dst, opt.tol);
        if (v.reachable) {
            out.status = ReachStatus::REACHABLE;
        } else {
            out.status = ReachStatus::UNREACHABLE;
            out.witness = ReachWitness{
                "characteristic coefficient f_" + std::to_string(v.witness_k) +
                    " of the two-photon matrix",
                v.witness_k, detail::real_str(v.src_value), detail::real_str(v.dst_value)};
        }
        return out;
    }

    out.method = ReachMethod::INVARIANT_COMPARISON;
    out.degree_explored = opt.degree_cap;
    const auto& rep = detail::cached_generating_set(src.n, src.m, opt.degree_cap,
                                                    opt.pattern_max_nd, opt.avg_max_nd);
    for (std::size_t i = 0; i < rep.generators.size(); ++i) {
        int deg = rep.generator_degrees[i];
        S fs = evaluate(rep.generators[i], src);
        S fd = evaluate(rep.generators[i], dst);
        bool equal;
        if constexpr (T::exact) {
            equal = fs == fd;
        } else {
            equal = std::abs(fs - fd) <= opt.tol * deg * (1 + std::abs(fs));
        }
        if (!equal) {
            out.status = ReachStatus::UNREACHABLE;
            out.witness = ReachWitness{to_string(rep.generators[i]), deg, T::str(fs), T::str(fd)};
            return out;
        }
    }
    if (opt.oracle_restarts > 0) {
        auto res = reachability_bruteforce(detail::as_float(src), detail::as_float(dst),
                                           opt.oracle_restarts, 1e-6, opt.seed);
        if (res.found) {
            out.status = ReachStatus::REACHABLE;
            out.unitary = res.unitary;
            return out;
        }
    }
    out.status = ReachStatus::UNDECIDED;
    return out;
}

template <class S>
ReachVerdict decide_reachability(const FockState<S>& src, const FockState<S>& dst, int degree_cap,
                                 double tol) {
    ReachOptions opt;
    opt.degree_cap = degree_cap;
    opt.tol = tol;
    return decide_reachability(src, dst, opt);
}

}  // namespace loinv
