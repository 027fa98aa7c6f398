#include <catch2/catch_amalgamated.hpp>

#include <loinv/lo_action.hpp>
#include <loinv/weingarten.hpp>

#include <cmath>
#include <complex>
#include <vector>

using namespace loinv;
using C = std::complex<double>;

TEST_CASE("weingarten values in closed form for one and two factors", "[weingarten]") {
    for (int m = 1; m <= 5; ++m) CHECK(weingarten({1}, 1, m) == Rational(1, m));
    for (int m = 2; m <= 5; ++m) {
        CHECK(weingarten({1, 1}, 2, m) == Rational(1, m * m - 1));
        CHECK(weingarten({2}, 2, m) == Rational(-1, m * (static_cast<long>(m) * m - 1)));
    }
    // m = 1: every entry is a phase, all second moments are 1/4 * 4 terms = 1
    CHECK(weingarten({1, 1}, 2, 1) == Rational(1, 4));
    CHECK(weingarten({2}, 2, 1) == Rational(1, 4));
}

TEST_CASE("weingarten table for four factors in two modes", "[weingarten]") {
    CHECK(weingarten({1, 1, 1, 1}, 4, 2) == Rational(43, 1440));
    CHECK(weingarten({2, 1, 1}, 4, 2) == Rational(1, 180));
    CHECK(weingarten({2, 2}, 4, 2) == Rational(13, 1440));
    CHECK(weingarten({3, 1}, 4, 2) == Rational(-19, 2880));
    CHECK(weingarten({4}, 4, 2) == Rational(-7, 1440));
}

TEST_CASE("weingarten sums over the symmetric group telescope", "[weingarten]") {
    // sum over all sigma in S_d of Wg(sigma) = 1 / (m (m+1) ... (m+d-1))
    auto class_size = [](const Partition& mu, int d) {
        Int denom = 1;
        std::map<int, int> mult;
        for (int x : mu) {
            denom *= x;
            ++mult[x];
        }
        for (auto& [k, c] : mult) denom *= factorial(c);
        return factorial(d) / denom;
    };
    for (int d = 1; d <= 4; ++d) {
        for (int m = 2; m <= 4; ++m) {
            Rational acc = 0;
            for (const auto& mu : partitions(d))
                acc += Rational(class_size(mu, d)) * weingarten(mu, d, m);
            Rational want = 1;
            for (int t = 0; t < d; ++t) want /= (m + t);
            CHECK(acc == want);
        }
    }
}

TEST_CASE("entry moments match direct integration over the circle", "[weingarten]") {
    // for m = 2, |U_00|^2 is uniform on [0,1]; powers integrate to 1/(k+1)
    CHECK(haar_integral({0}, {0}, {0}, {0}, 2) == Rational(1, 2));
    CHECK(haar_integral({0, 0}, {0, 0}, {0, 0}, {0, 0}, 2) == Rational(1, 3));
    CHECK(haar_integral({0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}, 2) == Rational(1, 4));
    // |U_00|^2 |U_01|^2 = t(1-t): integral 1/6
    CHECK(haar_integral({0, 0}, {0, 1}, {0, 0}, {0, 1}, 2) == Rational(1, 6));
    // |U_00|^4 |U_01|^2 = t^2(1-t): integral 1/12
    CHECK(haar_integral({0, 0, 0}, {0, 0, 1}, {0, 0, 0}, {0, 0, 1}, 2) == Rational(1, 12));
    // diagonal-vs-antidiagonal covariance
    CHECK(haar_integral({0, 1}, {0, 1}, {0, 1}, {1, 0}, 2) == Rational(-1, 6));
    // first moments for general m
    for (int m = 2; m <= 4; ++m) CHECK(haar_integral({0}, {0}, {0}, {0}, m) == Rational(1, m));
    // mismatched rows integrate to zero
    CHECK(haar_integral({0}, {0}, {1}, {0}, 2) == 0);
    CHECK(haar_integral({0, 1}, {0, 0}, {0, 1}, {0, 1}, 3) == 0);
    // unequal factor counts integrate to zero
    CHECK(haar_integral({0}, {0}, {}, {}, 2) == 0);
}

TEST_CASE("matchings enumerate exactly the value-preserving bijections", "[weingarten]") {
    auto ms = matchings({0, 0, 1}, {0, 1, 0});
    CHECK(ms.size() == 2);
    for (const auto& s : ms) {
        std::vector<int> a = {0, 0, 1}, b = {0, 1, 0};
        for (int t = 0; t < 3; ++t) CHECK(a[t] == b[s[t]]);
    }
    CHECK(matchings({0, 0}, {0, 1}).empty());
    CHECK(matchings({0, 0}, {0, 0}).size() == 2);
    CHECK(matchings({0, 1, 2}, {2, 0, 1}).size() == 1);
}

TEST_CASE("symbolic moments agree with monte carlo sampling", "[weingarten]") {
    struct Profile {
        std::vector<int> i, j, ip, jp;
        int m;
    };
    std::vector<Profile> profiles = {
        {{0}, {0}, {0}, {0}, 2},
        {{0}, {1}, {0}, {1}, 3},
        {{0, 1}, {0, 1}, {0, 1}, {0, 1}, 2},
        {{0, 1}, {0, 1}, {0, 1}, {1, 0}, 2},
        {{0, 0}, {0, 1}, {0, 0}, {0, 1}, 3},
        {{0, 1, 1}, {0, 0, 1}, {1, 1, 0}, {0, 1, 0}, 2},
        {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}, {0, 1, 2}, 3},
    };
    std::mt19937_64 rng(31415);
    const int samples = 100000;
    for (const auto& p : profiles) {
        double acc = 0, acc2 = 0;
        for (int s = 0; s < samples; ++s) {
            auto u = random_haar_unitary(p.m, rng);
            C prod(1, 0);
            for (size_t t = 0; t < p.i.size(); ++t) prod *= u.at(p.i[t], p.j[t]);
            for (size_t t = 0; t < p.ip.size(); ++t) prod *= std::conj(u.at(p.ip[t], p.jp[t]));
            acc += prod.real();
            acc2 += prod.real() * prod.real();
        }
        double mean = acc / samples;
        double var = acc2 / samples - mean * mean;
        double sigma = std::sqrt(std::max(var, 1e-30) / samples);
        double exact = static_cast<double>(haar_integral(p.i, p.j, p.ip, p.jp, p.m));
        INFO("profile with d=" << p.i.size() << " m=" << p.m);
        CHECK(std::abs(mean - exact) < 3 * sigma + 1e-12);
    }
}
