#pragma once

// Contraction invariants of the symmetric tensor A of a state: for a
// permutation sigma of N = n*d slots,
//   f_sigma(A) = sum over k in [m]^N of
//                prod_g A_{k | group g} * conj(A)_{(k o sigma) | group g},
// the slots being grouped n at a time.  Two permutations give the same
// functional when they lie in the same double coset of the group H that
// permutes slots within groups and groups among themselves (|H| = n!^d d!).

#include <loinv/averaging.hpp>
#include <loinv/fock.hpp>
#include <loinv/molien.hpp>
#include <loinv/phase_basis.hpp>
#include <loinv/poly.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace loinv {

struct ContractionPattern {
    int n = 0;
    int d = 0;
    Perm sigma;  // canonical (lexicographically minimal) double-coset representative
};

namespace detail {

// generators of H acting on slot positions: adjacent transpositions inside
// each group, plus swaps of adjacent whole groups
inline std::vector<Perm> wreath_generators(int n, int d) {
    int N = n * d;
    std::vector<Perm> gens;
    for (int g = 0; g < d; ++g)
        for (int t = 0; t + 1 < n; ++t) {
            Perm p(N);
            for (int i = 0; i < N; ++i) p[i] = i;
            std::swap(p[g * n + t], p[g * n + t + 1]);
            gens.push_back(std::move(p));
        }
    for (int g = 0; g + 1 < d; ++g) {
        Perm p(N);
        for (int i = 0; i < N; ++i) p[i] = i;
        for (int t = 0; t < n; ++t) std::swap(p[g * n + t], p[(g + 1) * n + t]);
        gens.push_back(std::move(p));
    }
    return gens;
}

}  // namespace detail

// canonical representatives of the double cosets H sigma H, in increasing
// lexicographic order
inline std::vector<ContractionPattern> canonical_patterns(int n, int d, int max_nd = 8) {
    if (n < 1 || d < 1) throw std::invalid_argument("canonical_patterns: need n, d >= 1");
    int N = n * d;
    if (N > max_nd || N > 16)
        throw std::invalid_argument("canonical_patterns: n*d = " + std::to_string(N) +
                                    " exceeds the configured budget of " +
                                    std::to_string(std::min(max_nd, 16)));
    auto gens = detail::wreath_generators(n, d);
    // permutations of up to 16 slots pack into 4 bits per image
    auto encode = [N](const Perm& p) {
        std::uint64_t code = 0;
        for (int i = 0; i < N; ++i) code |= std::uint64_t(p[i]) << (4 * i);
        return code;
    };
    std::unordered_set<std::uint64_t> visited;
    std::vector<ContractionPattern> out;
    Perm sigma(N);
    for (int i = 0; i < N; ++i) sigma[i] = i;
    do {
        if (visited.count(encode(sigma))) continue;
        // BFS the double-coset orbit of sigma under left/right H action
        std::vector<Perm> queue = {sigma};
        visited.insert(encode(sigma));
        Perm best = sigma;
        while (!queue.empty()) {
            Perm cur = queue.back();
            queue.pop_back();
            if (cur < best) best = cur;
            for (const auto& h : gens) {
                for (Perm next : {compose(h, cur), compose(cur, h)}) {
                    if (visited.insert(encode(next)).second) queue.push_back(std::move(next));
                }
            }
        }
        out.push_back({n, d, best});
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    std::sort(out.begin(), out.end(),
              [](const ContractionPattern& x, const ContractionPattern& y) {
                  return x.sigma < y.sigma;
              });
    return out;
}

// direct numeric/exact contraction of the pattern against a tensor
template <class S>
S tensor_invariant(const ContractionPattern& pat, const SymmetricTensor<S>& t) {
    if (pat.n != t.n)
        throw std::invalid_argument("tensor_invariant: photon count mismatch");
    int N = pat.n * pat.d;
    S acc = scalar_traits<S>::zero();
    std::vector<int> k(N, 0);
    std::vector<int> grp(pat.n);
    while (true) {
        S term = scalar_traits<S>::one();
        bool zero = false;
        for (int g = 0; g < pat.d && !zero; ++g) {
            for (int i = 0; i < pat.n; ++i) grp[i] = k[g * pat.n + i];
            term = term * t.get(grp);
            if (scalar_traits<S>::is_zero(term)) zero = true;
        }
        for (int g = 0; g < pat.d && !zero; ++g) {
            for (int i = 0; i < pat.n; ++i) grp[i] = k[pat.sigma[g * pat.n + i]];
            term = term * scalar_traits<S>::conj(t.get(grp));
            if (scalar_traits<S>::is_zero(term)) zero = true;
        }
        if (!zero) acc = acc + term;
        int pos = N - 1;
        while (pos >= 0 && k[pos] == t.m - 1) { k[pos] = 0; --pos; }
        if (pos < 0) break;
        ++k[pos];
    }
    return acc;
}

template <class S>
S tensor_invariant(const ContractionPattern& pat, const FockState<S>& st) {
    return tensor_invariant(pat, state_to_tensor(st));
}

// the same contraction as an exact polynomial in the amplitude variables
// (A_v = a_v / multinomial(n, v))
inline InvariantPolynomial expand_tensor_invariant(const ContractionPattern& pat, int m) {
    int n = pat.n, d = pat.d, N = n * d;
    InvariantPolynomial out;
    std::vector<int> k(N, 0);
    while (true) {
        Monomial mono;
        Rational w = 1;
        for (int g = 0; g < d; ++g) {
            Occupation va(m, 0), vb(m, 0);
            for (int i = 0; i < n; ++i) {
                ++va[k[g * n + i]];
                ++vb[k[pat.sigma[g * n + i]]];
            }
            w /= Rational(multinomial(n, va) * multinomial(n, vb));
            ++mono.a[va];
            ++mono.b[vb];
        }
        out.add_term(mono, GaussianRational(w));
        int pos = N - 1;
        while (pos >= 0 && k[pos] == m - 1) { k[pos] = 0; --pos; }
        if (pos < 0) break;
        ++k[pos];
    }
    return out;
}

// ---------------------------------------------------------------- generating sets

struct GeneratingSetReport {
    int n = 0, m = 0, D = 0;
    std::vector<InvariantPolynomial> generators;
    std::vector<int> generator_degrees;
    std::vector<Int> target;        // Molien coefficients a_0..a_D
    std::vector<Int> achieved;      // span dimensions reached at (d, d)
    std::vector<bool> fallback_used;  // per degree 0..D
    bool all_matched = false;
    std::string caveat =
        "degree-by-degree span match against the Molien series bounds the "
        "invariant ring from below at each bidegree up to D; it does not by "
        "itself certify that the set generates in higher degrees";
};

// greedy per-degree assembly: walk canonical contraction patterns and add
// those that enlarge the span at bidegree (d, d) until the Molien target is
// met; if patterns stall (or exceed the slot budget), fall back to Haar
// averages of balanced monomials while those fit their own slot budget
inline GeneratingSetReport build_generating_set(int n, int m, int D, int pattern_max_nd = 8,
                                                long long molien_budget = 64, int avg_max_nd = 8) {
    GeneratingSetReport rep;
    rep.n = n;
    rep.m = m;
    rep.D = D;
    auto series = molien_truncated(n, m, D, molien_budget);
    rep.target = series.coeffs;
    rep.achieved.assign(D + 1, Int(0));
    rep.fallback_used.assign(D + 1, false);
    rep.achieved[0] = 1;  // constants
    bool ok = true;
    for (int d = 1; d <= D; ++d) {
        Int want = rep.target[d];
        auto dim_now = [&]() { return Int(graded_span_dim(rep.generators, {d, d})); };
        Int have = dim_now();
        if (have < want && n * d <= pattern_max_nd) {
            for (const auto& pat : canonical_patterns(n, d, pattern_max_nd)) {
                if (have == want) break;
                auto cand = expand_tensor_invariant(pat, m);
                rep.generators.push_back(cand);
                Int after = dim_now();
                if (after > have) {
                    rep.generator_degrees.push_back(d);
                    have = after;
                } else {
                    rep.generators.pop_back();
                }
            }
        }
        if (have < want && n * d <= avg_max_nd) {
            rep.fallback_used[d] = true;
            for (const auto& mono : enumerate_balanced(n, m, d)) {
                if (have == want) break;
                auto cand = average_monomial(mono, n, m, avg_max_nd);
                if (cand.is_zero()) continue;
                rep.generators.push_back(cand);
                Int after = dim_now();
                if (after > have) {
                    rep.generator_degrees.push_back(d);
                    have = after;
                } else {
                    rep.generators.pop_back();
                }
            }
        }
        rep.achieved[d] = have;
        if (have != want) ok = false;
    }
    rep.all_matched = ok;
    return rep;
}

}  // namespace loinv
