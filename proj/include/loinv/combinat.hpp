#pragma once
// Shared combinatorics: partitions, symmetric-group characters
// (Murnaghan-Nakayama), hook lengths, Schur values at all-ones arguments,
// multinomials, cycle types.

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "scalar.hpp"

namespace loinv {

using Partition = std::vector<int>;   // weakly decreasing positive parts
using Perm = std::vector<int>;        // one-line images on {0..d-1}

// all partitions of d (parts <= max_part if given), reverse-lexicographic:
// (d) first, (1,...,1) last
inline std::vector<Partition> partitions(int d, int max_part = -1) {
    if (max_part < 0 || max_part > d) max_part = d;
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int left, int mp) -> void {
        if (left == 0) { out.push_back(cur); return; }
        for (int p = std::min(left, mp); p >= 1; --p) {
            cur.push_back(p);
            self(self, left - p, p);
            cur.pop_back();
        }
    };
    rec(rec, d, max_part);
    return out;
}

inline long long count_partitions_max_part(int d, int m) {
    if (d == 0) return 1;
    std::vector<std::vector<long long>> c(m + 1, std::vector<long long>(d + 1, 0));
    for (int k = 0; k <= m; ++k) c[k][0] = 1;
    for (int k = 1; k <= m; ++k)
        for (int s = 1; s <= d; ++s)
            c[k][s] = c[k - 1][s] + (s >= k ? c[k][s - k] : 0);
    return c[m][d];
}

namespace detail {
// Murnaghan-Nakayama: peel a border strip of size k = mu[0] spanning rows
// s..t; the result nu has nu[r] = lam[r+1]-1 for s <= r < t and
// nu[t] = lam[s]-k+(t-s).  Valid iff nu[t] >= 0, nu[t] >= lam[t+1] (when the
// row exists) and, for t > s, nu[t] <= lam[t]-1 (connectivity).
inline long long mn_char(const Partition& lam, const Partition& mu,
                         std::map<std::pair<Partition, Partition>, long long>& memo) {
    if (lam.empty()) return mu.empty() ? 1 : 0;
    if (mu.empty()) return 0;
    auto key = std::make_pair(lam, mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int k = mu.front();
    Partition rest(mu.begin() + 1, mu.end());
    long long total = 0;
    int rows = static_cast<int>(lam.size());
    for (int s = 0; s < rows; ++s) {
        for (int t = s; t < rows; ++t) {
            int tail = lam[s] - k + (t - s);
            if (tail < 0) continue;
            if (t + 1 < rows && tail < lam[t + 1]) continue;
            if (t > s && tail > lam[t] - 1) continue;
            Partition nu = lam;
            for (int r = s; r < t; ++r) nu[r] = lam[r + 1] - 1;
            nu[t] = tail;
            Partition trimmed;
            for (int x : nu) if (x > 0) trimmed.push_back(x);
            total += ((t - s) % 2 ? -1 : 1) * mn_char(trimmed, rest, memo);
        }
    }
    memo[key] = total;
    return total;
}
}  // namespace detail

// irreducible character of S_d: chi^lambda at cycle type mu
inline long long character(const Partition& lam, const Partition& mu) {
    long long wl = std::accumulate(lam.begin(), lam.end(), 0LL);
    long long wm = std::accumulate(mu.begin(), mu.end(), 0LL);
    if (wl != wm) throw std::invalid_argument("character: weight mismatch");
    Partition mu_sorted = mu;
    std::sort(mu_sorted.begin(), mu_sorted.end(), std::greater<int>());
    static std::map<std::pair<Partition, Partition>, long long> memo;
    return detail::mn_char(lam, mu_sorted, memo);
}

inline long long char_dim(const Partition& lam) {
    int d = std::accumulate(lam.begin(), lam.end(), 0);
    return character(lam, Partition(d, 1));
}

// hook lengths of cell (i,j), 0-based
inline int hook_length(const Partition& lam, int i, int j) {
    int arm = lam[i] - j - 1;
    int leg = 0;
    for (size_t r = i + 1; r < lam.size(); ++r)
        if (lam[r] > j) ++leg;
    return arm + leg + 1;
}

// Schur polynomial s_lambda evaluated at m ones (hook-content formula);
// 0 when lambda has more than m rows
inline Rational schur_at_ones(const Partition& lam, int m) {
    if (static_cast<int>(lam.size()) > m) return Rational(0);
    Rational prod(1);
    for (int i = 0; i < static_cast<int>(lam.size()); ++i)
        for (int j = 0; j < lam[i]; ++j)
            prod *= Rational(m + j - i, hook_length(lam, i, j));
    return prod;
}

inline Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// n! / (v_1! ... v_m!)
inline Int multinomial(int n, const std::vector<int>& v) {
    int s = std::accumulate(v.begin(), v.end(), 0);
    if (s != n) throw std::invalid_argument("multinomial: entries must sum to n");
    Int r = factorial(n);
    for (int x : v) r /= factorial(x);
    return r;
}

inline Partition cycle_type(const Perm& p) {
    int d = static_cast<int>(p.size());
    std::vector<char> seen(d, 0);
    Partition type;
    for (int i = 0; i < d; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) { seen[j] = 1; j = p[j]; ++len; }
        type.push_back(len);
    }
    std::sort(type.begin(), type.end(), std::greater<int>());
    return type;
}

inline Perm compose(const Perm& p, const Perm& q) {  // (p.q)(i) = p[q[i]]
    Perm r(q.size());
    for (size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
    return r;
}

inline Perm inverse(const Perm& p) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
    return r;
}

}  // namespace loinv
