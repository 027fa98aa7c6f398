#pragma once

// Haar averaging (Reynolds) operator on amplitude polynomials:
//   (f)*(s) = integral of f(U.s) over Haar-random U in U(m), exactly.
// A monomial prod_v a_v^{A_v} conj(a_v)^{B_v} is rewritten through the
// symmetric-tensor entries, the matrix-entry moments are evaluated with the
// Weingarten expansion, and the result is re-expanded in the a/b variables.

#include <loinv/fock.hpp>
#include <loinv/lo_action.hpp>
#include <loinv/poly.hpp>
#include <loinv/weingarten.hpp>

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace loinv {

inline InvariantPolynomial average_monomial(const Monomial& mono, int n, int m,
                                            int max_nd = 8) {
    // validate the variable universe
    for (const auto& side : {mono.a, mono.b})
        for (const auto& [v, e] : side) {
            int s = 0;
            for (int x : v) {
                if (x < 0) throw std::invalid_argument("average_monomial: negative occupation");
                s += x;
            }
            if (static_cast<int>(v.size()) != m || s != n)
                throw std::invalid_argument(
                    "average_monomial: monomial variable does not belong to the (n, m) space");
        }
    int d = mono.deg_a();
    if (mono.deg_b() != d) return {};       // unequal U / conj(U) counts average to zero
    if (d == 0) return InvariantPolynomial(GaussianRational(1));
    if (!mono.is_balanced()) return {};     // diagonal phases already average it to zero
    int N = n * d;
    if (N > max_nd)
        throw std::invalid_argument("average_monomial: n*d = " + std::to_string(N) +
                                    " exceeds the configured budget of " +
                                    std::to_string(max_nd));

    // flatten to N tensor slots: group g holds the g-th A (resp. conj A) factor
    std::vector<int> K, Kp;
    Rational prefactor = 1;  // prod_v multinomial(n, v)^(A_v + B_v)
    for (const auto& [v, e] : mono.a) {
        auto t = rep_tuple(v);
        for (int c = 0; c < e; ++c) K.insert(K.end(), t.begin(), t.end());
        for (int c = 0; c < e; ++c) prefactor *= Rational(multinomial(n, v));
    }
    for (const auto& [v, e] : mono.b) {
        auto t = rep_tuple(v);
        for (int c = 0; c < e; ++c) Kp.insert(Kp.end(), t.begin(), t.end());
        for (int c = 0; c < e; ++c) prefactor *= Rational(multinomial(n, v));
    }

    auto row_sigmas = matchings(K, Kp);
    if (row_sigmas.empty()) return {};
    const auto& tbl = weingarten_table(N, m);

    // constant column weight when every row bijection matches (all slots equal)
    Int nfact = factorial(N);
    bool constant_weight = Int(row_sigmas.size()) == nfact;
    Rational const_c = 0;
    if (constant_weight) {
        for (const auto& [mu, w] : tbl) {
            Int cls = factorial(N);
            std::map<int, int> mult;
            for (int x : mu) {
                cls /= x;
                ++mult[x];
            }
            for (auto& [k, c] : mult) cls /= factorial(c);
            const_c += Rational(cls) * w;
        }
    }

    InvariantPolynomial out;
    Perm gamma(N);
    for (int l = 0; l < N; ++l) gamma[l] = l;
    std::vector<int> J(N, 0);
    do {
        Rational c;
        if (constant_weight) {
            c = const_c;
        } else {
            c = 0;
            for (const auto& sigma : row_sigmas) c += tbl.at(cycle_type(compose(sigma, gamma)));
            if (c == 0) continue;
        }
        // f_gamma: sum over all J in [m]^N of the re-expanded a/b monomial
        std::fill(J.begin(), J.end(), 0);
        while (true) {
            Monomial term;
            Rational weight = 1;
            for (int g = 0; g < d; ++g) {
                Occupation va(m, 0), vb(m, 0);
                for (int t = 0; t < n; ++t) {
                    ++va[J[g * n + t]];
                    ++vb[J[gamma[g * n + t]]];
                }
                weight /= Rational(multinomial(n, va) * multinomial(n, vb));
                ++term.a[va];
                ++term.b[vb];
            }
            out.add_term(term, GaussianRational(c * weight));
            int pos = N - 1;
            while (pos >= 0 && J[pos] == m - 1) { J[pos] = 0; --pos; }
            if (pos < 0) break;
            ++J[pos];
        }
    } while (std::next_permutation(gamma.begin(), gamma.end()));

    return GaussianRational(prefactor) * out;
}

inline InvariantPolynomial average_polynomial(const InvariantPolynomial& p, int n, int m,
                                              int max_nd = 8) {
    InvariantPolynomial out;
    for (const auto& [mono, c] : p.terms) {
        auto avg = average_monomial(mono, n, m, max_nd);
        out = out + c * avg;
    }
    return out;
}

// numeric invariance check: max |f(U.s) - f(s)| over sampled Haar unitaries
// and random states
struct InvarianceReport {
    bool invariant = false;
    double max_deviation = 0.0;
};

inline InvarianceReport is_invariant_numeric(const InvariantPolynomial& p, int n, int m,
                                             int trials, std::uint64_t seed, double tol) {
    std::mt19937_64 rng(seed);
    InvarianceReport rep;
    for (int t = 0; t < trials; ++t) {
        FockState<std::complex<double>> st(n, m, Convention::MONOMIAL);
        for (const auto& v : enumerate_occupations(n, m))
            st.set(v, {detail::uniform01(rng) - 0.5, detail::uniform01(rng) - 0.5});
        auto u = random_haar_unitary(m, rng);
        auto moved = apply_unitary(st, u);
        double dev = std::abs(evaluate(p, moved) - evaluate(p, st));
        rep.max_deviation = std::max(rep.max_deviation, dev);
    }
    rep.invariant = rep.max_deviation <= tol;
    return rep;
}

}  // namespace loinv
