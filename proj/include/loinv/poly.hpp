#pragma once

// Exact polynomial ring in the amplitude variables a_v (written a[occ]) and
// their formal conjugates (written b[occ]), graded by bidegree, with
// evaluation on states and exact span-dimension computations.

#include <loinv/fock.hpp>
#include <loinv/scalar.hpp>

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace loinv {

struct Monomial {
    std::map<Occupation, int> a;  // exponents of the plain variables
    std::map<Occupation, int> b;  // exponents of the conjugated variables

    int deg_a() const {
        int s = 0;
        for (const auto& [v, e] : a) s += e;
        return s;
    }
    int deg_b() const {
        int s = 0;
        for (const auto& [v, e] : b) s += e;
        return s;
    }
    std::pair<int, int> bidegree() const { return {deg_a(), deg_b()}; }

    Monomial conj() const { return Monomial{b, a}; }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (const auto& [v, e] : o.a) r.a[v] += e;
        for (const auto& [v, e] : o.b) r.b[v] += e;
        return r;
    }

    // net phase exponent per mode: sum_v (a_v - b_v) * v; the zero vector
    // characterizes phase-invariant monomials
    std::vector<int> phase_weight() const {
        size_t m = 0;
        if (!a.empty()) m = a.begin()->first.size();
        else if (!b.empty()) m = b.begin()->first.size();
        std::vector<int> w(m, 0);
        for (const auto& [v, e] : a)
            for (size_t k = 0; k < m; ++k) w[k] += e * v[k];
        for (const auto& [v, e] : b)
            for (size_t k = 0; k < m; ++k) w[k] -= e * v[k];
        return w;
    }
    bool is_balanced() const {
        for (int x : phase_weight())
            if (x != 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& x, const Monomial& y) {
        return x.a == y.a && x.b == y.b;
    }
    // canonical order: bidegree first, then lexicographic on the exponent maps
    friend bool operator<(const Monomial& x, const Monomial& y) {
        auto bx = x.bidegree(), by = y.bidegree();
        if (bx != by) return bx < by;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    }
};

inline std::string to_string(const Monomial& mono) {
    if (mono.a.empty() && mono.b.empty()) return "1";
    std::string s;
    auto emit = [&](char tag, const std::map<Occupation, int>& exps) {
        for (const auto& [v, e] : exps) {
            if (!s.empty()) s += ' ';
            s += tag;
            s += '[';
            for (size_t k = 0; k < v.size(); ++k) {
                if (k) s += ',';
                s += std::to_string(v[k]);
            }
            s += ']';
            if (e != 1) s += "^" + std::to_string(e);
        }
    };
    emit('a', mono.a);
    emit('b', mono.b);
    return s;
}

// grammar: factors "a[2,0]^2", "b[1,1]" joined by spaces or '*'; "1" is the
// empty monomial
inline Monomial parse_monomial(const std::string& text) {
    Monomial mono;
    std::string norm;
    for (char c : text) norm += (c == '*') ? ' ' : c;
    std::istringstream in(norm);
    std::string tok;
    bool any = false;
    while (in >> tok) {
        any = true;
        if (tok == "1") continue;
        if (tok.size() < 4 || (tok[0] != 'a' && tok[0] != 'b') || tok[1] != '[')
            throw std::invalid_argument("bad monomial factor '" + tok + "'");
        auto close = tok.find(']');
        if (close == std::string::npos)
            throw std::invalid_argument("bad monomial factor '" + tok + "'");
        Occupation v;
        std::string inside = tok.substr(2, close - 2);
        std::istringstream nums(inside);
        std::string piece;
        while (std::getline(nums, piece, ',')) {
            size_t used = 0;
            int x = std::stoi(piece, &used);
            if (used != piece.size() || x < 0)
                throw std::invalid_argument("bad occupation in '" + tok + "'");
            v.push_back(x);
        }
        if (v.empty()) throw std::invalid_argument("empty occupation in '" + tok + "'");
        int e = 1;
        if (close + 1 < tok.size()) {
            if (tok[close + 1] != '^')
                throw std::invalid_argument("bad monomial factor '" + tok + "'");
            std::string es = tok.substr(close + 2);
            size_t used = 0;
            e = std::stoi(es, &used);
            if (used != es.size() || e < 1)
                throw std::invalid_argument("bad exponent in '" + tok + "'");
        }
        auto& side = tok[0] == 'a' ? mono.a : mono.b;
        side[v] += e;
    }
    if (!any) throw std::invalid_argument("empty monomial text");
    return mono;
}

struct InvariantPolynomial {
    std::map<Monomial, GaussianRational> terms;

    InvariantPolynomial() = default;
    explicit InvariantPolynomial(const GaussianRational& c) {
        if (!c.is_zero()) terms[Monomial{}] = c;
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(const Monomial& mono, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms.emplace(mono, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    friend InvariantPolynomial operator+(const InvariantPolynomial& x,
                                         const InvariantPolynomial& y) {
        InvariantPolynomial r = x;
        for (const auto& [mono, c] : y.terms) r.add_term(mono, c);
        return r;
    }
    friend InvariantPolynomial operator-(const InvariantPolynomial& x,
                                         const InvariantPolynomial& y) {
        InvariantPolynomial r = x;
        for (const auto& [mono, c] : y.terms) r.add_term(mono, GaussianRational() - c);
        return r;
    }
    friend InvariantPolynomial operator*(const InvariantPolynomial& x,
                                         const InvariantPolynomial& y) {
        InvariantPolynomial r;
        for (const auto& [mx, cx] : x.terms)
            for (const auto& [my, cy] : y.terms) r.add_term(mx * my, cx * cy);
        return r;
    }
    friend InvariantPolynomial operator*(const GaussianRational& c,
                                         const InvariantPolynomial& x) {
        InvariantPolynomial r;
        for (const auto& [mono, cx] : x.terms) r.add_term(mono, c * cx);
        return r;
    }
    friend bool operator==(const InvariantPolynomial& x, const InvariantPolynomial& y) {
        return x.terms == y.terms;
    }

    InvariantPolynomial conj() const {
        InvariantPolynomial r;
        for (const auto& [mono, c] : terms) r.add_term(mono.conj(), c.conj());
        return r;
    }

    // bidegree when bihomogeneous, nullopt otherwise (zero counts as any)
    std::optional<std::pair<int, int>> bidegree() const {
        std::optional<std::pair<int, int>> bd;
        for (const auto& [mono, c] : terms) {
            auto cur = mono.bidegree();
            if (!bd)
                bd = cur;
            else if (*bd != cur)
                return std::nullopt;
        }
        return bd;
    }

    bool is_balanced() const {
        for (const auto& [mono, c] : terms)
            if (!mono.is_balanced()) return false;
        return true;
    }
};

inline std::string to_string(const InvariantPolynomial& p) {
    if (p.terms.empty()) return "0";
    std::string s;
    for (const auto& [mono, c] : p.terms) {
        if (!s.empty()) s += " + ";
        std::string cs = to_string(c);
        if (c.im != 0) cs = "(" + cs + ")";
        s += cs;
        if (!(mono.a.empty() && mono.b.empty())) s += " " + to_string(mono);
    }
    return s;
}

// sum_v (prod_k v_k!) a_v b_v -- the squared norm as a polynomial
inline InvariantPolynomial norm_sq_polynomial(int n, int m) {
    InvariantPolynomial p;
    for (const auto& v : enumerate_occupations(n, m)) {
        Monomial mono;
        mono.a[v] = 1;
        mono.b[v] = 1;
        p.add_term(mono, GaussianRational(Rational(occ_factorial_product(v))));
    }
    return p;
}

// ---------------------------------------------------------------- evaluation

namespace detail {
template <class S>
S from_exact(const GaussianRational& c) {
    if constexpr (scalar_traits<S>::exact)
        return c;
    else
        return c.to_complex();
}
}  // namespace detail

// substitute the state's monomial-basis amplitudes for a[v], their conjugates
// for b[v]; KET input is converted first
template <class S>
S evaluate(const InvariantPolynomial& p, const FockState<S>& st_in) {
    const FockState<S>* st = &st_in;
    FockState<S> converted;
    if (st_in.conv != Convention::MONOMIAL) {
        converted = convert(st_in, Convention::MONOMIAL);
        st = &converted;
    }
    S acc = scalar_traits<S>::zero();
    for (const auto& [mono, c] : p.terms) {
        S term = detail::from_exact<S>(c);
        for (const auto& [v, e] : mono.a) {
            S amp = st->get(v);  // validates the occupation against (n, m)
            for (int t = 0; t < e; ++t) term = term * amp;
        }
        for (const auto& [v, e] : mono.b) {
            S amp = scalar_traits<S>::conj(st->get(v));
            for (int t = 0; t < e; ++t) term = term * amp;
        }
        acc = acc + term;
    }
    return acc;
}

// ---------------------------------------------------------------- exact rank

// plain Gaussian elimination over the exact field
inline int exact_rank(std::vector<std::vector<GaussianRational>> rows) {
    int rank = 0;
    size_t cols = rows.empty() ? 0 : rows[0].size();
    size_t lead = 0;
    for (size_t r = 0; r < rows.size() && lead < cols; ++lead) {
        size_t piv = r;
        while (piv < rows.size() && rows[piv][lead].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        GaussianRational inv = GaussianRational(1) / rows[r][lead];
        for (size_t c = lead; c < cols; ++c) rows[r][c] = rows[r][c] * inv;
        for (size_t rr = 0; rr < rows.size(); ++rr) {
            if (rr == r || rows[rr][lead].is_zero()) continue;
            GaussianRational f = rows[rr][lead];
            for (size_t c = lead; c < cols; ++c)
                rows[rr][c] = rows[rr][c] - f * rows[r][c];
        }
        ++r;
        ++rank;
    }
    return rank;
}

// dimension of the span of all power products of `polys` with the given
// bidegree; every generator must be bihomogeneous and nonconstant
inline int graded_span_dim(const std::vector<InvariantPolynomial>& polys,
                           std::pair<int, int> bidegree) {
    std::vector<InvariantPolynomial> gens;
    std::vector<std::pair<int, int>> degs;
    for (const auto& p : polys) {
        if (p.is_zero()) continue;
        auto bd = p.bidegree();
        if (!bd)
            throw std::invalid_argument("graded_span_dim: generator is not bihomogeneous");
        if (*bd == std::make_pair(0, 0)) continue;  // constants do not change the span
        gens.push_back(p);
        degs.push_back(*bd);
    }
    if (gens.empty()) return 0;
    // enumerate exponent vectors e with sum_i e_i * degs_i == bidegree
    std::vector<InvariantPolynomial> products;
    std::vector<int> expo(gens.size(), 0);
    auto rec = [&](auto&& self, size_t i, int da, int db, const InvariantPolynomial& acc) -> void {
        if (da == 0 && db == 0) {
            products.push_back(acc);
            return;
        }
        if (i == gens.size()) return;
        self(self, i + 1, da, db, acc);
        if (degs[i].first <= da && degs[i].second <= db)
            self(self, i, da - degs[i].first, db - degs[i].second, acc * gens[i]);
    };
    rec(rec, 0, bidegree.first, bidegree.second, InvariantPolynomial(GaussianRational(1)));
    if (products.empty()) return 0;
    // coefficient matrix over the union of monomials
    std::map<Monomial, size_t> col;
    for (const auto& p : products)
        for (const auto& [mono, c] : p.terms) col.emplace(mono, col.size());
    std::vector<std::vector<GaussianRational>> rows;
    rows.reserve(products.size());
    for (const auto& p : products) {
        std::vector<GaussianRational> row(col.size());
        for (const auto& [mono, c] : p.terms) row[col[mono]] = c;
        rows.push_back(std::move(row));
    }
    return exact_rank(std::move(rows));
}

}  // namespace loinv
