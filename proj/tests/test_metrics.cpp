#include <doctest.h>

#include <stdexcept>

#include "h2dri/metrics.hpp"

using namespace h2dri;

namespace {

CarbonBlock block(double c_dri, double c_base = 1.6) {
  CarbonBlock b;
  b.c_dri = c_dri;
  b.c_base = c_base;
  b.p_co2 = 120.0;
  b.m_energy = 0.5 / 3.6e6;
  b.theta = 1.2;
  b.nu = 1.5;
  return b;
}

} // namespace

TEST_CASE("energy efficiency ratios") {
  SystemAggregates agg;
  agg.w_vsys_in = 10.0;
  agg.w_vsys_out = 10.0;
  agg.w_sys_in = 4.0;
  agg.w_sys_out = 4.0;
  double ven, ee;
  energy_efficiency(agg, ven, ee);
  CHECK(ven == doctest::Approx(1.0));
  CHECK(ee == doctest::Approx(1.0));

  agg.w_sys_in = 0.0;
  CHECK_THROWS_AS(energy_efficiency(agg, ven, ee), std::domain_error);
}

TEST_CASE("exergy efficiency") {
  SystemAggregates agg;
  agg.ex_sys_in = 8.0;
  agg.ex_sys_out = 0.0;
  CHECK(exergy_efficiency(agg) == doctest::Approx(0.0)); // dead-state outputs
  agg.ex_sys_out = 2.0;
  CHECK(exergy_efficiency(agg) == doctest::Approx(0.25));
  agg.ex_sys_in = 0.0;
  CHECK_THROWS_AS(exergy_efficiency(agg), std::domain_error);
}

TEST_CASE("carbon equivalent") {
  SUBCASE("zero emissions short-circuit") {
    auto ce = carbon_equivalent(block(0.0));
    CHECK(ce.ce == 0.0);
    CHECK(ce.cet == 0.0);
  }
  SUBCASE("linear branch") {
    auto ce = carbon_equivalent(block(0.8 * 1.6));
    CHECK(ce.ce == doctest::Approx(0.8));
  }
  SUBCASE("penalized branches, hand oracle") {
    // x = 1.3 -> above 1.2 -> nu = 1.5 -> CE = 1.95.
    auto ce = carbon_equivalent(block(1.3 * 1.6));
    CHECK(ce.ce == doctest::Approx(1.95).epsilon(1e-12));
  }
  SUBCASE("branch selection at the breakpoints") {
    const struct {
      double x;
      double expect;
    } cases[] = {
        {0.999, 0.999},          // below the allowance
        {1.0, 1.0},              // boundary stays on the lower branch
        {1.001, 1.001 * 1.2},    // theta branch
        {1.2, 1.2 * 1.2},        // boundary stays on the theta branch
        {1.201, 1.201 * 1.5},    // nu branch
    };
    for (const auto& c : cases) {
      auto ce = carbon_equivalent(block(c.x * 1.6));
      CHECK(ce.ce == doctest::Approx(c.expect).epsilon(1e-12));
    }
  }
  SUBCASE("coupling factor units") {
    // phi_CE = C_base * P_CO2 / M_energy: CNY over CNY/J gives joules.
    auto ce = carbon_equivalent(block(1.6));
    CHECK(ce.phi_ce == doctest::Approx(1.6 * 120.0 / (0.5 / 3.6e6)).epsilon(1e-12));
    CHECK(ce.cet == doctest::Approx(ce.phi_ce * ce.ce).epsilon(1e-12));
  }
  SUBCASE("emissions without an allowance rejected") {
    auto b = block(1.0);
    b.c_base = 0.0;
    CHECK_THROWS_AS(carbon_equivalent(b), std::invalid_argument);
  }
  SUBCASE("scaling the trading price scales the cost equivalent") {
    auto b = block(1.0);
    auto ce1 = carbon_equivalent(b);
    b.p_co2 *= 3.0;
    auto ce3 = carbon_equivalent(b);
    CHECK(ce3.cet == doctest::Approx(3.0 * ce1.cet).epsilon(1e-12));
  }
}

TEST_CASE("carbon price scaling strictly lowers EC") {
  SystemAggregates agg;
  agg.w_sys_in = 1.0e10;
  agg.w_sys_out = 4.0e9;
  auto b = block(1.0);
  const double ec1 = energy_carbon_efficiency(agg, carbon_equivalent(b).cet);
  b.p_co2 *= 3.0;
  const double ec3 = energy_carbon_efficiency(agg, carbon_equivalent(b).cet);
  CHECK(ec3 < ec1);
}

TEST_CASE("energy-carbon efficiency") {
  SystemAggregates agg;
  agg.w_sys_in = 10.0;
  agg.w_sys_out = 4.0;

  SUBCASE("no emissions collapses to the energy efficiency") {
    CHECK(energy_carbon_efficiency(agg, 0.0) == doctest::Approx(0.4));
  }
  SUBCASE("may go negative when the carbon cost dominates") {
    CHECK(energy_carbon_efficiency(agg, 6.0) == doctest::Approx(-0.2));
  }
  SUBCASE("zero input rejected") {
    SystemAggregates z;
    CHECK_THROWS_AS(energy_carbon_efficiency(z, 0.0), std::domain_error);
  }
}

TEST_CASE("hydrogen utilization") {
  CHECK(hydrogen_utilization(5.0, 0.0) == doctest::Approx(1.0));
  CHECK(hydrogen_utilization(3.0, 3.0) == doctest::Approx(0.5));
  CHECK_THROWS_AS(hydrogen_utilization(0.0, 0.0), std::domain_error);
}
