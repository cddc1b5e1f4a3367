#include <doctest.h>

#include "radial_yamabe/singular_ode.hpp"

#include <cmath>
#include <memory>
#include <numbers>

using namespace radial_yamabe;
using std::numbers::pi;

namespace {

// classic fixed-step RK4, started from the series at t0
State rk4(const OdeParams& P, double alpha, double t0, double t1, int n) {
    auto f = [&](double t, const State& y) {
        return State{y[1], -(P.m - 1) * std::cos(t) / std::sin(t) * y[1] - P.rhs(y[0])};
    };
    State y = taylor_start(P, alpha, t0);
    const double h = (t1 - t0) / n;
    double t = t0;
    for (int i = 0; i < n; ++i) {
        const State k1 = f(t, y);
        const State k2 = f(t + h / 2, {y[0] + h / 2 * k1[0], y[1] + h / 2 * k1[1]});
        const State k3 = f(t + h / 2, {y[0] + h / 2 * k2[0], y[1] + h / 2 * k2[1]});
        const State k4 = f(t + h, {y[0] + h * k3[0], y[1] + h * k3[1]});
        for (int j = 0; j < 2; ++j) y[j] += h / 6 * (k1[j] + 2 * k2[j] + 2 * k3[j] + k4[j]);
        t += h;
    }
    return y;
}

double energy(const OdeParams& P, const State& y) {
    return 0.5 * y[1] * y[1] + P.lambda * (std::pow(y[0], P.p) / P.p - 0.5 * y[0] * y[0]);
}

}  // namespace

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(OdeParams::nonlinear(1, 1.0, 4.0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(OdeParams::nonlinear(2, 0.0, 4.0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(OdeParams::nonlinear(2, 1.0, 2.0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(OdeParams::linear(2, -1.0).validate(), std::invalid_argument);
    CHECK_NOTHROW(OdeParams::nonlinear(2, 1.0, 10.0 / 3.0).validate());
}

TEST_CASE("taylor_start reproduces cos t at A = m") {
    for (int m = 2; m <= 6; ++m) {
        const OdeParams P = OdeParams::linear(m, m);
        for (double t0 : {1e-1, 3e-2, 1e-2}) {
            const State y = taylor_start(P, 1.0, t0);
            CHECK(std::abs(y[0] - std::cos(t0)) < 2.0 * std::pow(t0, 6));
            CHECK(std::abs(y[1] + std::sin(t0)) < 2.0 * std::pow(t0, 5));
        }
    }
}

TEST_CASE("taylor_start for the nonlinear equation") {
    const OdeParams P = OdeParams::nonlinear(2, 1.0, 4.0);
    const State one = taylor_start(P, 1.0, 0.05);
    CHECK(one[0] == 1.0);
    CHECK(one[1] == 0.0);
    // alpha = 2: f(2) = 8 - 2, u''(0) = -6 / m = -3
    const SeriesStart s = series_coefficients(P, 2.0, 0.0);
    CHECK(2 * s.c2 == doctest::Approx(-3.0));
    const double t0 = 1e-2;
    const State y = taylor_start(P, 2.0, t0);
    CHECK(y[0] == doctest::Approx(2.0 - 1.5 * t0 * t0).epsilon(1e-7));
    CHECK_THROWS_AS(taylor_start(P, 2.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(taylor_start(P, 2.0, 0.5), std::invalid_argument);
}

TEST_CASE("integrate agrees with an independent RK4 reference") {
    const OdeParams P = OdeParams::nonlinear(2, 1.0, 4.0);
    const Trajectory tr = integrate(P, 2.0, 0.0, pi / 2, IntegratorOptions::with_tol(1e-12));
    REQUIRE(tr.completed());
    const State ref = rk4(P, 2.0, 1e-3, pi / 2, 40000);
    const State got = tr.eval(pi / 2);
    CHECK(std::abs(got[0] - ref[0]) < 1e-8);
    CHECK(std::abs(got[1] - ref[1]) < 1e-8);
}

TEST_CASE("linear modes at pi/2") {
    const auto o = IntegratorOptions::with_tol(1e-12);
    const Trajectory a2 = integrate(OdeParams::linear(2, 2.0), 1.0, 0.0, pi / 2, o);
    CHECK(std::abs(a2.final_state()[0]) < 1e-10);
    CHECK(std::abs(a2.final_state()[1] + 1.0) < 1e-10);
    const Trajectory a6 = integrate(OdeParams::linear(2, 6.0), 1.0, 0.0, pi / 2, o);
    CHECK(std::abs(a6.final_state()[0] + 0.5) < 1e-10);
    CHECK(std::abs(a6.final_state()[1]) < 1e-10);
}

TEST_CASE("constant solution is exact") {
    for (double p : {3.0, 10.0 / 3.0, 4.0, 6.0}) {
        const OdeParams P = OdeParams::nonlinear(3, 2.5, p);
        const Trajectory tr = integrate(P, 1.0, 0.0, pi, IntegratorOptions::with_tol(1e-10));
        REQUIRE(tr.completed());
        for (const auto& s : tr.samples) {
            CHECK(s.u == 1.0);
            CHECK(s.v == 0.0);
        }
        CHECK(residual(P, tr) == 0.0);
    }
}

TEST_CASE("residual is small on solutions and large on a corrupted trajectory") {
    const OdeParams P = OdeParams::linear(3, 12.0);  // n = 2 for m = 3
    Trajectory tr = integrate(P, 1.0, 0.0, pi / 2, IntegratorOptions::with_tol(1e-12));
    REQUIRE(tr.completed());
    CHECK(residual(P, tr) < 1e-6);
    const OdeParams Q = OdeParams::nonlinear(2, 4.0, 4.0);
    const Trajectory tq = integrate(Q, 1.3, 0.0, pi / 2, IntegratorOptions::with_tol(1e-12));
    REQUIRE(tq.completed());
    CHECK(residual(Q, tq) < 1e-6);
    // the same trajectory checked against a different equation
    CHECK(residual(OdeParams::linear(3, 13.0), tr) > 1e-2);
}

TEST_CASE("error decreases with the tolerance") {
    const OdeParams P = OdeParams::linear(2, 6.0);
    auto err = [&](double tol) {
        const Trajectory tr = integrate(P, 1.0, 0.0, 2.5, IntegratorOptions::with_tol(tol));
        const double c = std::cos(2.5);
        return std::abs(tr.final_state()[0] - 0.5 * (3 * c * c - 1));
    };
    const double e6 = err(1e-6), e9 = err(1e-9), e12 = err(1e-12);
    CHECK(e6 < 1e-4);
    CHECK(e9 < e6);
    CHECK(e12 < e9);
    CHECK(e12 < 1e-9);
}

TEST_CASE("energy derivative is -(m-1) cot(t) u'^2") {
    for (int m : {2, 3, 5}) {
        const OdeParams P = OdeParams::nonlinear(m, 3.0, 4.0);
        const Trajectory tr = integrate(P, 1.4, 0.0, pi / 2, IntegratorOptions::with_tol(1e-12));
        REQUIRE(tr.completed());
        const double h = 1e-4;
        for (double t : {0.3, 0.7, 1.1, 1.4}) {
            const double dE = (energy(P, tr.eval(t + h)) - energy(P, tr.eval(t - h))) / (2 * h);
            const double v = tr.eval(t)[1];
            const double law = -(m - 1) * std::cos(t) / std::sin(t) * v * v;
            const double wrong = -m * std::cos(t) / std::sin(t) * v * v;
            CHECK(std::abs(dE - law) < 1e-6 * std::max(1.0, std::abs(law)));
            if (std::abs(v) > 1e-2) CHECK(std::abs(dE - wrong) > 1e-5);
        }
        // non-increasing on (0, pi/2)
        double prev = energy(P, tr.eval(0.01));
        for (double t = 0.02; t < pi / 2; t += 0.01) {
            const double e = energy(P, tr.eval(t));
            CHECK(e <= prev + 1e-11);
            prev = e;
        }
    }
}

TEST_CASE("starting at pi mirrors starting at 0") {
    const OdeParams P = OdeParams::nonlinear(2, 4.0, 4.0);
    const auto o = IntegratorOptions::with_tol(1e-12);
    const Trajectory fwd = integrate(P, 1.3, 0.0, pi / 2, o);
    const Trajectory bwd = integrate(P, 1.3, pi, pi / 2, o);
    REQUIRE(fwd.completed());
    REQUIRE(bwd.completed());
    CHECK_FALSE(bwd.forward());
    for (double t : {0.05, 0.4, 1.0, pi / 2}) {
        const State a = fwd.eval(t);
        const State b = bwd.eval(pi - t);
        CHECK(std::abs(a[0] - b[0]) < 1e-10);
        CHECK(std::abs(a[1] + b[1]) < 1e-10);
    }
}

TEST_CASE("dense output matches re-integration to the query point") {
    const OdeParams P = OdeParams::nonlinear(3, 2.0, 3.0);
    const auto o = IntegratorOptions::with_tol(1e-11);
    const Trajectory full = integrate(P, 0.6, 0.0, 2.5, o);
    REQUIRE(full.completed());
    for (double t : {0.2, 0.9, 1.7, 2.3}) {
        const Trajectory part = integrate(P, 0.6, 0.0, t, o);
        const State a = full.eval(t);
        const State b = part.final_state();
        CHECK(std::abs(a[0] - b[0]) < 1e-8);
        CHECK(std::abs(a[1] - b[1]) < 1e-8);
    }
    CHECK_THROWS_AS(full.eval(2.6), std::out_of_range);
}

TEST_CASE("integrate_from_state continues a trajectory") {
    const OdeParams P = OdeParams::nonlinear(2, 4.0, 4.0);
    const auto o = IntegratorOptions::with_tol(1e-12);
    const Trajectory first = integrate(P, 1.3, 0.0, pi, o);
    const Trajectory half = integrate(P, 1.3, 0.0, pi / 2, o);
    const Trajectory cont = integrate_from_state(P, pi / 2, half.final_state(), 2.5, o);
    REQUIRE(cont.completed());
    const State a = first.eval(2.5), b = cont.final_state();
    CHECK(std::abs(a[0] - b[0]) < 1e-8);
    CHECK(std::abs(a[1] - b[1]) < 1e-8);
}

TEST_CASE("events") {
    const OdeParams P = OdeParams::nonlinear(2, 4.0, 4.0);
    const Trajectory drop = integrate(P, 3.0, 0.0, pi);
    CHECK(drop.exit.kind == ExitKind::hit_zero);
    CHECK(drop.exit.t > 0.0);
    CHECK(drop.exit.t < pi);
    CHECK(std::abs(drop.eval(drop.exit.t)[0]) < 1e-8);

    IntegratorOptions low = IntegratorOptions::with_tol(1e-10);
    low.stop_at_zero = false;
    low.blowup_v = 1.0;
    const Trajectory big = integrate(P, 3.0, 0.0, pi, low);
    CHECK(big.exit.kind == ExitKind::blew_up);

    IntegratorOptions few = IntegratorOptions::with_tol(1e-10);
    few.max_steps = 3;
    CHECK(integrate(P, 1.3, 0.0, pi, few).exit.kind == ExitKind::step_failure);
    CHECK(to_string(ExitKind::step_failure) == "step_failure");
}

TEST_CASE("non-integer exponent m = 2, k = 3") {
    const OdeParams P = OdeParams::nonlinear(2, 1.5, 10.0 / 3.0);
    const Trajectory tr = integrate(P, 1.2, 0.0, pi / 2, IntegratorOptions::with_tol(1e-11));
    REQUIRE(tr.completed());
    CHECK(residual(P, tr) < 1e-6);
    CHECK(energy(P, tr.final_state()) < energy(P, {1.2, 0.0}));
}

TEST_CASE("profile assembled from a reflected piece") {
    const OdeParams P = OdeParams::linear(2, 6.0);
    auto tr = std::make_shared<const Trajectory>(integrate(P, 1.0, 0.0, pi / 2, IntegratorOptions::with_tol(1e-12)));
    Profile prof;
    prof.add(tr, 0.0, pi / 2);
    prof.add(tr, pi / 2, pi, true);
    CHECK(prof.lo() == 0.0);
    CHECK(prof.hi() == pi);
    for (double t : {0.3, 1.2, 2.0, 2.9}) {
        const double c = std::cos(t);
        CHECK(std::abs(prof.eval(t)[0] - 0.5 * (3 * c * c - 1)) < 1e-9);
        CHECK(std::abs(prof.eval(t)[1] + 3 * c * std::sin(t)) < 1e-8);
    }
    const auto zeros = profile_zeros(prof, 0, 0.0, pi);
    REQUIRE(zeros.size() == 2);
    CHECK(zeros[0] == doctest::Approx(std::acos(1 / std::sqrt(3.0))).epsilon(1e-9));
    CHECK(zeros[1] == doctest::Approx(std::acos(-1 / std::sqrt(3.0))).epsilon(1e-9));
    CHECK(residual(P, prof) < 1e-6);
}
