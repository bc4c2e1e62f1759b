#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "debye/grid.hpp"
#include "debye/random_fields.hpp"

using namespace debye;

namespace {
constexpr double pi = std::numbers::pi;

double max_diff(const ScalarField& a, const ScalarField& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.samples.size(); ++i)
        m = std::max(m, std::abs(a.samples[i] - b.samples[i]));
    return m;
}

ScalarField cosine_mode(const Grid& g, int k) {
    ScalarField f(g);
    for (int i = 0; i < g.n_per_axis; ++i)
        f.samples[i] = std::cos(2.0 * pi * k * i * g.dx / g.length);
    return f;
}
}  // namespace

TEST_CASE("make_grid basics") {
    const Grid a = make_grid(1, 256, 64.0);
    CHECK(a.dx == 0.25);
    const Grid b = make_grid(1, 16, 16.0);
    CHECK(b.dx == 1.0);
    CHECK_THROWS(make_grid(1, 100, 10.0));
    CHECK_THROWS(make_grid(1, 8, 10.0));
    CHECK_THROWS(make_grid(3, 64, 10.0));
    CHECK_THROWS(make_grid(1, 64, -1.0));
}

TEST_CASE("to_spectral of elementary fields") {
    const Grid g = make_grid(1, 64, 8.0);

    ScalarField c(g);
    for (auto& v : c.samples) v = 3.25;
    SpectralField ch = to_spectral(c);
    CHECK(std::abs(ch.coeff[0] - 3.25) < 1e-14);
    for (std::size_t i = 1; i < ch.coeff.size(); ++i) CHECK(std::abs(ch.coeff[i]) < 1e-13);

    SpectralField fh = to_spectral(cosine_mode(g, 1));
    CHECK(std::abs(fh.coeff[1] - 0.5) < 1e-12);
    CHECK(std::abs(fh.coeff[63] - 0.5) < 1e-12);
    for (std::size_t i = 0; i < fh.coeff.size(); ++i)
        if (i != 1 && i != 63) CHECK(std::abs(fh.coeff[i]) < 1e-12);

    const SpectralField zh = to_spectral(ScalarField(g));
    for (const auto& v : zh.coeff) CHECK(std::abs(v) == 0.0);
}

TEST_CASE("to_physical inverts to_spectral") {
    std::mt19937_64 rng(11);
    for (int dim : {1, 2}) {
        const Grid g = make_grid(dim, 32, 5.0);
        const ScalarField f = random_band_limited(g, rng, 8);
        const ScalarField back = to_physical(to_spectral(f));
        CHECK(max_diff(f, back) <= 1e-12 * max_norm(f));
    }
}

TEST_CASE("single spectral mode renders as a cosine") {
    const Grid g = make_grid(1, 64, 8.0);
    SpectralField h(g);
    h.coeff[2] = 0.5;
    h.coeff[62] = 0.5;
    const ScalarField f = to_physical(h);
    CHECK(max_diff(f, cosine_mode(g, 2)) < 1e-12);

    SpectralField bad(g);
    bad.coeff[2] = 0.5;  // missing the conjugate partner
    CHECK_THROWS(to_physical(bad));

    const ScalarField z = to_physical(SpectralField(g));
    CHECK(max_norm(z) == 0.0);
}

TEST_CASE("derivative of elementary fields") {
    const Grid g = make_grid(1, 128, 4.0);
    ScalarField s(g), c(g);
    for (int i = 0; i < g.n_per_axis; ++i) {
        const double x = i * g.dx;
        s.samples[i] = std::sin(2.0 * pi * x / g.length);
        c.samples[i] = (2.0 * pi / g.length) * std::cos(2.0 * pi * x / g.length);
    }
    CHECK(max_diff(derivative(s, 0), c) < 1e-10);

    ScalarField one(g);
    for (auto& v : one.samples) v = 1.0;
    CHECK(max_norm(derivative(one, 0)) < 1e-14);

    // two derivatives on a mode = multiplication by -xi^2
    const int k = 5;
    const double xi = 2.0 * pi * k / g.length;
    ScalarField m = cosine_mode(g, k);
    ScalarField dd = derivative(derivative(m, 0), 0);
    for (auto& v : m.samples) v *= -xi * xi;
    CHECK(max_diff(dd, m) < 1e-10 * xi * xi);

    CHECK_THROWS(derivative(s, 1));
}

TEST_CASE("Parseval identity on random fields") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const int dim = 1 + trial % 2;
        const Grid g = make_grid(dim, 32, 3.0 + trial % 5);
        const ScalarField f = random_band_limited(g, rng, 10);
        double phys = 0.0;
        for (double v : f.samples) phys += v * v;
        phys *= std::pow(g.dx, g.dim);
        const SpectralField fh = to_spectral(f);
        double spec = 0.0;
        for (const auto& v : fh.coeff) spec += std::norm(v);
        spec *= std::pow(g.length, g.dim);
        CHECK(std::abs(phys - spec) <= 1e-10 * std::max(phys, 1e-30));
    }
}

TEST_CASE("Leibniz rule for band-limited products") {
    std::mt19937_64 rng(17);
    const Grid g = make_grid(1, 256, 7.0);
    const ScalarField f = random_band_limited(g, rng, 20);
    const ScalarField h = random_band_limited(g, rng, 20);  // combined 40 < 128
    ScalarField prod(g), rhs(g);
    const ScalarField df = derivative(f, 0), dh = derivative(h, 0);
    for (std::size_t i = 0; i < prod.samples.size(); ++i) {
        prod.samples[i] = f.samples[i] * h.samples[i];
        rhs.samples[i] = df.samples[i] * h.samples[i] + f.samples[i] * dh.samples[i];
    }
    const ScalarField lhs = derivative(prod, 0);
    CHECK(max_diff(lhs, rhs) <= 1e-9 * max_norm(rhs));
}

TEST_CASE("summed second derivatives equal the Laplacian multiplier") {
    std::mt19937_64 rng(23);
    const Grid g = make_grid(2, 32, 6.0);
    const ScalarField f = random_band_limited(g, rng, 7);

    ScalarField lap(g);
    for (int axis = 0; axis < 2; ++axis) {
        const ScalarField dd = derivative(derivative(f, axis), axis);
        for (std::size_t i = 0; i < lap.samples.size(); ++i) lap.samples[i] += dd.samples[i];
    }
    SpectralField fh = to_spectral(f);
    const std::vector<double> xi2 = frequency_sq(g);
    for (std::size_t i = 0; i < fh.coeff.size(); ++i) fh.coeff[i] *= -xi2[i];
    const ScalarField lap2 = to_physical(fh);
    CHECK(max_diff(lap, lap2) <= 1e-12 * std::max(1.0, max_norm(lap2)));
}

TEST_CASE("time grid construction") {
    const auto times = make_times(1.0, 0.25);
    REQUIRE(times.size() == 5);
    CHECK(times.front() == 0.0);
    CHECK(times.back() == doctest::Approx(1.0));
    CHECK_THROWS(make_times(1.0, 0.3));  // T/dt not an integer
}
