#include <catch2/catch_amalgamated.hpp>

#include <loinv/molien.hpp>

#include <vector>

using namespace loinv;

namespace {

// truncated series of num(t)/den(t) with integer coefficients
std::vector<Rational> series_of_rational(const std::vector<long>& num,
                                         const std::vector<long>& den, int D) {
    std::vector<Rational> c(D + 1, Rational(0));
    for (int d = 0; d <= D; ++d) {
        Rational acc = d < static_cast<int>(num.size()) ? Rational(num[d]) : Rational(0);
        for (int j = 1; j <= d && j < static_cast<int>(den.size()); ++j)
            acc -= Rational(den[j]) * c[d - j];
        c[d] = acc / Rational(den[0]);
    }
    return c;
}

std::vector<long> poly_mul(const std::vector<long>& x, const std::vector<long>& y) {
    std::vector<long> r(x.size() + y.size() - 1, 0);
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
    return r;
}

}  // namespace

TEST_CASE("closed forms for one and two photons", "[molien]") {
    auto s1 = molien_closed_form(1, 3, 5);
    CHECK(s1.coeffs == std::vector<Int>(6, Int(1)));
    auto s2 = molien_closed_form(2, 2, 4);
    CHECK(s2.coeffs == std::vector<Int>({1, 1, 2, 2, 3}));
    auto s23 = molien_closed_form(2, 3, 3);
    CHECK(s23.coeffs[3] == 3);
    CHECK_THROWS_AS(molien_closed_form(3, 2, 2), std::invalid_argument);
}

TEST_CASE("truncated series matches the closed forms", "[molien]") {
    for (int n = 1; n <= 2; ++n)
        for (int m = 2; m <= 3; ++m)
            CHECK(molien_truncated(n, m, 4).coeffs == molien_closed_form(n, m, 4).coeffs);
    CHECK(molien_truncated(1, 2, 5).coeffs == std::vector<Int>(6, Int(1)));
}

TEST_CASE("truncated series for three and four photons", "[molien]") {
    CHECK(molien_truncated(3, 2, 3).coeffs == std::vector<Int>({1, 1, 2, 3}));
    CHECK(molien_truncated(4, 2, 2).coeffs == std::vector<Int>({1, 1, 3}));
    // only one independent invariant of bidegree (1,1): the squared norm
    CHECK(molien_truncated(3, 2, 1).coeffs[1] == 1);
}

TEST_CASE("phase series counts balanced monomials", "[molien]") {
    auto p22 = phase_molien_truncated(2, 2, 4);
    CHECK(p22.coeffs[1] == fock_dim(2, 2));
    CHECK(p22.coeffs[2] == 8);
    CHECK(phase_molien_truncated(2, 3, 3).coeffs == std::vector<Int>({1, 6, 33, 136}));
    CHECK(phase_molien_truncated(3, 2, 3).coeffs == std::vector<Int>({1, 4, 16, 48}));
    CHECK(phase_molien_truncated(4, 2, 3).coeffs == std::vector<Int>({1, 5, 29, 119}));
}

TEST_CASE("phase series of two photons in two modes has a known rational form", "[molien]") {
    // (1 - t^4) / ((1 - t)^3 (1 - t^2)^2)
    std::vector<long> num = {1, 0, 0, 0, -1};
    auto den = poly_mul(poly_mul({1, -1}, poly_mul({1, -1}, {1, -1})),
                        poly_mul({1, 0, -1}, {1, 0, -1}));
    auto want = series_of_rational(num, den, 6);
    auto got = phase_molien_truncated(2, 2, 6);
    for (int d = 0; d <= 6; ++d) CHECK(Rational(got.coeffs[d]) == want[d]);
}

TEST_CASE("exhaustive balanced-monomial counts agree with the phase series", "[molien]") {
    CHECK(phase_monomial_count(2, 2, 1) == 3);
    CHECK(phase_monomial_count(2, 2, 2) == 8);
    // one-photon balance forces the two multisets to coincide
    CHECK(phase_monomial_count(1, 3, 2) == 6);   // multisets of size 2 from 3 modes
    CHECK(phase_monomial_count(1, 2, 3) == 4);
    for (int n = 1; n <= 3; ++n)
        for (int m = 2; m <= (n == 1 ? 4 : 3); ++m)
            if (n + m <= 6)
                for (int d = 0; d <= 3; ++d)
                    CHECK(phase_molien_truncated(n, m, d).coeffs[d] ==
                          phase_monomial_count(n, m, d));
}

TEST_CASE("full series is bounded by the phase series and stays positive", "[molien]") {
    for (int n = 1; n <= 4; ++n) {
        for (int m = 2; m <= 3; ++m) {
            int D = 3;
            auto full = molien_truncated(n, m, D);
            auto phase = phase_molien_truncated(n, m, D);
            for (int d = 0; d <= D; ++d) {
                CHECK(full.coeffs[d] >= 1);
                CHECK(full.coeffs[d] <= phase.coeffs[d]);
            }
            CHECK(full.coeffs[0] == 1);
        }
    }
}

TEST_CASE("the molien budget guard rejects oversized requests", "[molien]") {
    CHECK_THROWS_AS(molien_truncated(10, 4, 10), std::invalid_argument);  // 286*10 >> 64
    CHECK_THROWS_AS(phase_molien_truncated(4, 3, 6), std::invalid_argument);  // 15*6 > 64
    CHECK_NOTHROW(phase_molien_truncated(4, 3, 6, 128));  // raised budget admits it
}
