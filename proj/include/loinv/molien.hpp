#pragma once

// Truncated Molien series of the invariant ring (FULL) and of the ring of
// phase invariants (PHASE): a_d counts linearly independent invariants of
// bidegree (d, d).  Both are computed exactly by expanding the generating
// integrand as a formal power series whose z^d coefficient is a Laurent
// polynomial in the torus variables, then applying Parseval degree by degree:
//   FULL:  a_d = (1/m!) sum_q c_{q,d}^2 with the Vandermonde folded in,
//   PHASE: a_d = sum_q N_d(q)^2,
// where N_d(q) = number of size-d multisets of occupations with total mode
// vector q.

#include <loinv/combinat.hpp>
#include <loinv/fock.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace loinv {

enum class MolienKind { FULL, PHASE };

struct MolienSeries {
    int n = 0;
    int m = 0;
    int D = 0;
    MolienKind kind = MolienKind::FULL;
    std::vector<Int> coeffs;  // coeffs[d], d = 0..D
};

namespace detail {

// N_d(q) for d = 0..D: multiset counts of occupation sums
inline std::vector<std::map<std::vector<int>, Int>> multiset_sum_counts(int n, int m, int D) {
    auto occs = enumerate_occupations(n, m);
    std::vector<std::map<std::vector<int>, Int>> counts(D + 1);
    std::vector<int> sum(m, 0);
    auto rec = [&](auto&& self, size_t start, int used) -> void {
        ++counts[used][sum];
        if (used == D) return;
        for (size_t i = start; i < occs.size(); ++i) {
            for (int k = 0; k < m; ++k) sum[k] += occs[i][k];
            self(self, i, used + 1);
            for (int k = 0; k < m; ++k) sum[k] -= occs[i][k];
        }
    };
    rec(rec, 0, 0);
    return counts;
}

inline void check_budget(int n, int m, int D, long long budget) {
    Int load = fock_dim(n, m) * D;
    if (load > budget)
        throw std::invalid_argument("molien: fock_dim(n,m)*D = " + load.str() +
                                    " exceeds the configured budget of " +
                                    std::to_string(budget));
}

}  // namespace detail

// closed forms: n = 1 gives the all-ones series; n = 2 gives the coefficients
// of prod_{k=1..m} 1/(1 - t^k), i.e. partitions of d with parts <= m
inline MolienSeries molien_closed_form(int n, int m, int D) {
    if (n != 1 && n != 2)
        throw std::invalid_argument("molien_closed_form: only n = 1 and n = 2 are known");
    MolienSeries s{n, m, D, MolienKind::FULL, {}};
    for (int d = 0; d <= D; ++d)
        s.coeffs.push_back(n == 1 ? Int(1) : Int(count_partitions_max_part(d, m)));
    return s;
}

inline MolienSeries molien_truncated(int n, int m, int D, long long budget = 64) {
    detail::check_budget(n, m, D, budget);
    auto counts = detail::multiset_sum_counts(n, m, D);
    // Vandermonde monomials: exponent vector e with e_i = delta[pi(i)],
    // delta = (m-1, ..., 0), signed by the parity of pi
    std::vector<std::pair<std::vector<int>, int>> vandermonde;
    Perm pi(m);
    for (int i = 0; i < m; ++i) pi[i] = i;
    do {
        std::vector<int> e(m);
        for (int i = 0; i < m; ++i) e[i] = m - 1 - pi[i];
        int inv = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (pi[i] > pi[j]) ++inv;
        vandermonde.emplace_back(std::move(e), inv % 2 ? -1 : 1);
    } while (std::next_permutation(pi.begin(), pi.end()));

    MolienSeries s{n, m, D, MolienKind::FULL, {}};
    for (int d = 0; d <= D; ++d) {
        std::map<std::vector<int>, Int> c;
        for (const auto& [w, cnt] : counts[d]) {
            for (const auto& [e, sign] : vandermonde) {
                std::vector<int> q(m);
                for (int k = 0; k < m; ++k) q[k] = w[k] + e[k];
                c[q] += sign > 0 ? cnt : -cnt;
            }
        }
        Int acc = 0;
        for (const auto& [q, v] : c) acc += v * v;
        Int mf = factorial(m);
        if (acc % mf != 0)
            throw std::logic_error("molien_truncated: Parseval sum not divisible by m!");
        s.coeffs.push_back(acc / mf);
    }
    return s;
}

inline MolienSeries phase_molien_truncated(int n, int m, int D, long long budget = 64) {
    detail::check_budget(n, m, D, budget);
    auto counts = detail::multiset_sum_counts(n, m, D);
    MolienSeries s{n, m, D, MolienKind::PHASE, {}};
    for (int d = 0; d <= D; ++d) {
        Int acc = 0;
        for (const auto& [q, v] : counts[d]) acc += v * v;
        s.coeffs.push_back(acc);
    }
    return s;
}

// independent exhaustive oracle: count bidegree-(d,d) monomials whose phase
// weight vanishes, by enumerating the two occupation multisets directly
inline Int phase_monomial_count(int n, int m, int d) {
    auto occs = enumerate_occupations(n, m);
    std::vector<std::vector<int>> sums;
    std::vector<int> sum(m, 0);
    auto rec = [&](auto&& self, size_t start, int used) -> void {
        if (used == d) {
            sums.push_back(sum);
            return;
        }
        for (size_t i = start; i < occs.size(); ++i) {
            for (int k = 0; k < m; ++k) sum[k] += occs[i][k];
            self(self, i, used + 1);
            for (int k = 0; k < m; ++k) sum[k] -= occs[i][k];
        }
    };
    rec(rec, 0, 0);
    Int acc = 0;
    for (const auto& wa : sums)
        for (const auto& wb : sums)
            if (wa == wb) ++acc;
    return acc;
}

}  // namespace loinv
