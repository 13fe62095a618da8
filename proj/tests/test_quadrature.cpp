#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "parisian/quadrature.hpp"

using namespace parisian;

TEST_CASE("polynomials integrate exactly") {
    CHECK(integrate([](double x) { return x * x * x; }, 0.0, 2.0) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(integrate([](double) { return 1.0; }, -3.0, 5.0) == doctest::Approx(8.0).epsilon(1e-14));
}

TEST_CASE("orientation and empty range") {
    CHECK(integrate([](double x) { return x; }, 1.0, 1.0) == 0.0);
    CHECK(integrate([](double x) { return x; }, 2.0, 0.0) ==
          doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("oscillatory integrand meets tolerance") {
    const double v = integrate([](double x) { return std::sin(10.0 * x); }, 0.0, M_PI);
    const double exact = (1.0 - std::cos(10.0 * M_PI)) / 10.0;
    CHECK(std::abs(v - exact) < 1e-9);
}

TEST_CASE("kink handled by breaks") {
    auto f = [](double x) { return std::abs(x - 0.3); };
    const double breaks[] = {0.3};
    const double v = integrate_with_breaks(f, 0.0, 1.0, breaks);
    CHECK(v == doctest::Approx(0.5 * 0.09 + 0.5 * 0.49).epsilon(1e-10));
}

TEST_CASE("subdivision limit is reported, not absorbed") {
    QuadratureSpec tight;
    tight.abs_tol = 1e-300;
    tight.rel_tol = 1e-300;
    tight.max_subdivisions = 3;
    CHECK_THROWS_AS(integrate([](double x) { return std::sin(40.0 * x) / (1e-8 + x * x); }, 0.0,
                              10.0, tight),
                    QuadratureError);
}

TEST_CASE("half line with exponential decay") {
    const double v = integrate_half_line([](double x) { return std::exp(-x); }, 0.0, 1.0);
    CHECK(v == doctest::Approx(1.0).epsilon(1e-9));
    const double g = integrate_half_line([](double x) { return x * std::exp(-0.5 * x * x); }, 0.0, 1.0);
    CHECK(g == doctest::Approx(1.0).epsilon(1e-9));
}
