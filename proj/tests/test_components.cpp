#include <doctest.h>

#include <cmath>

#include "h2dri/components.hpp"

using namespace h2dri;

namespace {

const PropertyTable& table() {
  static PropertyTable t = PropertyTable::builtin();
  return t;
}

struct Lcg {
  unsigned long long s = 0x9E3779B97F4A7C15ULL;
  double next() {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return double((s >> 11) & ((1ULL << 53) - 1)) / double(1ULL << 53);
  }
  double in(double lo, double hi) { return lo + (hi - lo) * next(); }
};

} // namespace

TEST_CASE("electrolyzer") {
  const auto& pt = table();

  SUBCASE("input power from cell count, voltage, current, time") {
    auto r = electrolyzer(100, 2.0, 1000.0, 3600.0, 371.15, 1.19e6, 1.481, pt);
    CHECK(r.w_in == doctest::Approx(7.2e8)); // 100 * 2 * 1000 * 3600
    CHECK(r.report.energy.in("electricity") == doctest::Approx(7.2e8));
  }
  SUBCASE("exergy input equals electricity exactly") {
    auto r = electrolyzer(40, 1.9, 250.0, 1800.0, 371.15, 1.19e6, 1.481, pt);
    CHECK(r.report.exergy.in("electricity") == r.w_in);
  }
  SUBCASE("dissipation positive above the thermoneutral voltage") {
    auto r = electrolyzer(100, 2.0, 1000.0, 3600.0, 371.15, 1.19e6, 1.481, pt);
    CHECK(r.report.energy.out("hot_hydrogen") < r.w_in);
    CHECK(r.report.loss_total() > 0.0);
  }
  SUBCASE("sub-thermoneutral voltage rejected") {
    CHECK_THROWS_AS(electrolyzer(100, 1.3, 1000.0, 3600.0, 371.15, 1.19e6, 1.481, pt),
                    std::invalid_argument);
  }
  SUBCASE("moles follow Faraday's law") {
    auto r = electrolyzer(100, 2.0, 1000.0, 3600.0, 371.15, 1.19e6, 1.481, pt);
    CHECK(r.hydrogen.n ==
          doctest::Approx(1000.0 * 3600.0 * 100.0 / (2.0 * 96485.0)).epsilon(1e-12));
  }
}

TEST_CASE("compressor train") {
  const auto& pt = table();
  const auto h2 = [&](double n, double T, double P) {
    return GasStream::pure(Species::H2, n, T, P);
  };

  SUBCASE("degenerate ratio rejected") {
    CHECK_THROWS_AS(compressor_train(h2(1.0, 298.0, 1e6), {{1.0, 0.9}}, pt),
                    std::invalid_argument);
  }
  SUBCASE("ratio above 5 rejected") {
    CHECK_THROWS_AS(compressor_train(h2(1.0, 298.0, 1e6), {{5.2, 0.9}}, pt),
                    std::invalid_argument);
  }
  SUBCASE("stage outlet temperature") {
    auto r = compressor_train(h2(1.0, 298.0, 1.0e6), {{2.56, 0.915}}, pt);
    // T_in * (1 + (r^((g-1)/g) - 1)/eta)
    const double oracle =
        298.0 * (1.0 + (std::pow(2.56, 0.41 / 1.41) - 1.0) / 0.915);
    CHECK(r.stage_t_out[0] == doctest::Approx(400.379).epsilon(1e-5));
    CHECK(r.stage_t_out[0] == doctest::Approx(oracle).epsilon(1e-12));
  }
  SUBCASE("table ratios reach the storage pressure") {
    // 2.56^3 from the electrolyzer line, 3.4^3 from the furnace top line.
    auto red = compressor_train(h2(1.0, 298.0, 20.0e6 / std::pow(2.56, 3)),
                                {{2.56, 0.915}, {2.56, 0.915}, {2.56, 0.915}}, pt);
    CHECK(red.outlet.P == doctest::Approx(20.0e6).epsilon(1e-9));
    auto circ = compressor_train(h2(1.0, 298.0, 20.0e6 / std::pow(3.4, 3)),
                                 {{3.4, 0.918}, {3.4, 0.918}, {3.4, 0.918}}, pt);
    CHECK(circ.outlet.P == doctest::Approx(20.0e6).epsilon(1e-9));
    CHECK(20.0e6 / std::pow(3.4, 3) == doctest::Approx(0.509e6).epsilon(0.001));
  }
  SUBCASE("energy ledger closes exactly") {
    auto r = compressor_train(h2(5.0, 298.0, 1e6),
                              {{2.0, 0.9}, {2.0, 0.9}, {2.0, 0.9}}, pt);
    CHECK(r.report.energy.total_in() == r.report.energy.total_out());
    CHECK(r.intercool_heat == doctest::Approx(r.w_in).epsilon(1e-12));
  }
  SUBCASE("outlet temperature monotone in ratio and efficiency") {
    auto lo = compressor_train(h2(1.0, 298.0, 1e6), {{2.0, 0.9}}, pt);
    auto hi = compressor_train(h2(1.0, 298.0, 1e6), {{3.0, 0.9}}, pt);
    CHECK(hi.stage_t_out[0] > lo.stage_t_out[0]);
    auto eff = compressor_train(h2(1.0, 298.0, 1e6), {{2.0, 0.95}}, pt);
    CHECK(eff.stage_t_out[0] < lo.stage_t_out[0]);
  }
  SUBCASE("intercooled multistage beats single stage at equal total ratio") {
    for (int n : {2, 3}) {
      const double total = 4.0;
      const double per = std::pow(total, 1.0 / n);
      std::vector<StageSpec> stages(n, {per, 0.9});
      auto multi = compressor_train(h2(1.0, 298.0, 1e6), stages, pt);
      auto single = compressor_train(h2(1.0, 298.0, 1e6), {{total, 0.9}}, pt);
      CHECK(multi.w_in < single.w_in);
    }
  }
}

TEST_CASE("expander train") {
  const auto& pt = table();
  const auto h2 = [&](double n, double T, double P) {
    return GasStream::pure(Species::H2, n, T, P);
  };

  SUBCASE("unit ratio is a pass-through") {
    auto r = expander_train(h2(1.0, 298.0, 2e6), {{1.0, 0.9}}, 1e5, pt);
    CHECK(r.electricity == doctest::Approx(0.0));
    CHECK(r.outlet.T == doctest::Approx(298.0));
  }
  SUBCASE("single-stage work") {
    auto r = expander_train(h2(1.0, 298.0, 2.85e6), {{2.85, 0.9}}, 1e5, pt);
    const double oracle = 1.41 / 0.41 * 8.314 * 298.0 *
                          (1.0 - std::pow(2.85, -0.41 / 1.41)) * 0.9;
    CHECK(r.electricity == doctest::Approx(2013.2366).epsilon(1e-6));
    CHECK(r.electricity == doctest::Approx(oracle).epsilon(1e-12));
  }
  SUBCASE("exergy output equals the stage work") {
    auto r = expander_train(h2(2.0, 298.0, 20e6), {{2.85, 0.9}, {2.85, 0.9}}, 1e5, pt);
    CHECK(r.report.exergy.out("electricity") == doctest::Approx(r.electricity));
    CHECK(r.report.energy.total_in() == r.report.energy.total_out());
  }
  SUBCASE("work increases with ratio") {
    auto lo = expander_train(h2(1.0, 298.0, 2e6), {{2.0, 0.9}}, 1e5, pt);
    auto hi = expander_train(h2(1.0, 298.0, 2e6), {{3.0, 0.9}}, 1e5, pt);
    CHECK(hi.electricity > lo.electricity);
  }
  SUBCASE("outlet below the configured floor rejected") {
    CHECK_THROWS_AS(expander_train(h2(1.0, 298.0, 4e5), {{2.85, 0.9}, {2.85, 0.9}}, 1e5, pt),
                    std::invalid_argument);
  }
  SUBCASE("cold outlet for the ORC condenser") {
    auto r = expander_train(h2(1.0, 298.0, 20e6),
                            {{2.85, 0.9}, {2.85, 0.9}, {3.0, 0.9}}, 1e5, pt);
    CHECK(r.outlet.T < 150.0);
    CHECK(r.outlet.P == doctest::Approx(20e6 / (2.85 * 2.85 * 3.0)));
  }
}

TEST_CASE("thermal store charge") {
  const auto& pt = table();

  SUBCASE("equal temperatures transfer nothing") {
    auto hot = GasStream::pure(Species::H2, 10.0, 350.0, 1e6);
    auto r = thermal_store_charge(hot, 350.0, 4186.0, 298.0, 330.0, 0.85, pt);
    CHECK(r.heat_in == 0.0);
    CHECK(r.report.energy.inputs.empty());
  }
  SUBCASE("hydrogen cooling duty") {
    auto hot = GasStream::pure(Species::H2, 10.0, 398.0, 1e6);
    auto r = thermal_store_charge(hot, 308.0, 4186.0, 298.0, 378.0, 0.85, pt);
    const double oracle = 1.41 / 0.41 * 10.0 * 8.314 * 90.0;
    CHECK(r.heat_in == doctest::Approx(25732.84).epsilon(1e-6));
    CHECK(r.heat_in == doctest::Approx(oracle).epsilon(1e-12));
    CHECK(r.stored == doctest::Approx(0.85 * oracle).epsilon(1e-12));
  }
  SUBCASE("exergy stored below energy stored") {
    auto hot = GasStream::pure(Species::H2, 10.0, 398.0, 1e6);
    auto r = thermal_store_charge(hot, 308.0, 4186.0, 298.0, 378.0, 0.85, pt);
    CHECK(r.report.exergy.total_out() < r.report.energy.total_out());
  }
  SUBCASE("temperature crossover rejected") {
    auto hot = GasStream::pure(Species::H2, 10.0, 398.0, 1e6);
    CHECK_THROWS_AS(thermal_store_charge(hot, 308.0, 4186.0, 298.0, 410.0, 0.85, pt),
                    std::invalid_argument);
  }
}

TEST_CASE("thermal store discharge") {
  const auto& pt = table();

  SUBCASE("zero duty yields empty ledgers") {
    auto r = thermal_store_discharge(0.0, 1e6, 4186.0, 363.0, 313.0, 298.0, 350.0, 0.0, pt);
    CHECK(r.heat_out == 0.0);
    CHECK(r.report.energy.inputs.empty());
  }
  SUBCASE("store balance closes after a full charge-discharge cycle") {
    auto hot = GasStream::pure(Species::H2, 10.0, 398.0, 1e6);
    auto ch = thermal_store_charge(hot, 308.0, 4186.0, 298.0, 378.0, 0.85, pt);
    CHECK_NOTHROW(thermal_store_discharge(ch.stored, ch.stored, 4186.0, 378.0, 298.0,
                                          298.0, 358.0, 0.0, pt));
  }
  SUBCASE("fluid-side duty") {
    // 100 kg of fluid at 4186 J/(kg K) cooling 363 -> 313 K.
    auto r = thermal_store_discharge(2.093e7, 2.093e7, 4186.0, 363.0, 313.0, 298.0,
                                     343.0, 0.0, pt);
    CHECK(r.report.energy.in("stored_heat") == doctest::Approx(2.093e7));
    CHECK(r.report.energy.out("delivered_heat") == doctest::Approx(2.093e7));
  }
  SUBCASE("overdraw rejected") {
    CHECK_THROWS_AS(
        thermal_store_discharge(2.0, 1.0, 4186.0, 363.0, 313.0, 298.0, 343.0, 0.0, pt),
        std::runtime_error);
  }
}

TEST_CASE("orc cycle") {
  const auto& pt = table();

  SUBCASE("no heat, no electricity") {
    auto r = orc_cycle(0.0, 0.0, 2400.0, 338.0, 302.0, 248.0, 131.0, pt);
    CHECK(r.electricity == 0.0);
  }
  SUBCASE("conversion identity (T1-T2)/(T1-T4)") {
    const double q = 3.0e9;
    auto r = orc_cycle(2.0e9, 1.0e9, 2400.0, 338.0, 302.0, 248.0, 131.0, pt);
    CHECK(r.electricity / q == doctest::Approx((338.0 - 302.0) / (338.0 - 248.0))
                                   .epsilon(1e-12));
    CHECK(r.m_r32 == doctest::Approx(q / (2400.0 * 90.0)).epsilon(1e-12));
  }
  SUBCASE("evaporator duty balances by construction") {
    auto r = orc_cycle(1.0e9, 0.5e9, 2400.0, 338.0, 302.0, 248.0, 131.0, pt);
    CHECK(r.m_r32 * 2400.0 * (338.0 - 248.0) == doctest::Approx(1.5e9).epsilon(1e-12));
    CHECK(r.report.energy.total_in() - r.report.loss_total() ==
          doctest::Approx(r.electricity).epsilon(1e-12));
  }
  SUBCASE("warm sink rejected") {
    CHECK_THROWS_AS(orc_cycle(1e9, 0.0, 2400.0, 338.0, 302.0, 248.0, 260.0, pt),
                    std::runtime_error);
  }
}

TEST_CASE("plasma heater") {
  const auto& pt = table();
  auto gas = GasStream::pure(Species::H2, 1.0, 298.0, 8e5);

  SUBCASE("no rise requested is a no-op") {
    auto r = plasma_heat(gas, 298.0, 0.95, 0.05, 1323.0, pt);
    CHECK(r.w_in == 0.0);
    CHECK(r.report.energy.inputs.empty());
  }
  SUBCASE("duty and input power for a 298 to 1273 K rise") {
    auto r = plasma_heat(gas, 1273.0, 0.95, 0.05, 1323.0, pt);
    const double duty = 1.41 / 0.41 * 8.314 * 975.0;
    CHECK(r.report.energy.out("heated_gas") == doctest::Approx(27877.26).epsilon(1e-6));
    CHECK(r.w_in == doctest::Approx(duty / 0.95).epsilon(1e-12));
    CHECK(r.w_in == doctest::Approx(29344.48).epsilon(1e-6));
  }
  SUBCASE("output over input equals the heat efficiency exactly") {
    auto r = plasma_heat(gas, 1100.0, 0.95, 0.05, 1323.0, pt);
    CHECK(r.report.energy.total_out() / r.report.energy.total_in() ==
          doctest::Approx(0.95).epsilon(1e-12));
  }
  SUBCASE("target above range rejected") {
    CHECK_THROWS_AS(plasma_heat(gas, 1400.0, 0.95, 0.05, 1323.0, pt),
                    std::invalid_argument);
  }
}

TEST_CASE("combustion furnace") {
  const auto& pt = table();
  CokeOvenGas cog; // 58/26/8 default

  SUBCASE("zero duty burns nothing") {
    auto gas = GasStream::pure(Species::H2, 10.0, 298.0, 8e5);
    auto r = combustion_furnace(gas, 298.0, 0.85, cog, pt);
    CHECK(r.fuel_mol == 0.0);
    CHECK(r.co2_kg == 0.0);
  }
  SUBCASE("CO oxidation stoichiometry") {
    CokeOvenGas pure_co{0.0, 0.0, 1.0};
    CHECK(pure_co.co2_per_mol() == doctest::Approx(1.0));
    CHECK(1.0 * pure_co.co2_per_mol() * pt.molar_mass(Species::CO2) ==
          doctest::Approx(0.04401).epsilon(1e-4));
  }
  SUBCASE("fuel demand from duty, efficiency and heating value") {
    auto gas = GasStream::binary(Species::H2, 0.6, Species::CO, 100.0, 298.0, 8e5);
    auto r = combustion_furnace(gas, 1273.0, 0.85, cog, pt);
    const double duty = r.report.energy.out("heated_gas");
    CHECK(r.fuel_mol == doctest::Approx(duty / (0.85 * cog.lhv(pt))).epsilon(1e-12));
    CHECK(cog.lhv(pt) ==
          doctest::Approx(0.58 * 241.8e3 + 0.26 * 802.3e3 + 0.08 * 283.0e3).epsilon(1e-12));
  }
}

TEST_CASE("exergy destruction non-negative across components") {
  const auto& pt = table();
  Lcg rng;
  int checked = 0;
  for (int k = 0; k < 1000; ++k) {
    const int pick = int(rng.in(0.0, 4.0));
    if (pick == 0) {
      auto g = GasStream::pure(Species::H2, rng.in(0.1, 1000.0), 298.0,
                               rng.in(2e5, 5e6));
      auto r = compressor_train(g, {{rng.in(1.2, 5.0), rng.in(0.7, 1.0)}}, pt);
      CHECK(r.report.exergy_destruction() >= -1e-9 * r.report.exergy.total_in());
    } else if (pick == 1) {
      auto g = GasStream::pure(Species::H2, rng.in(0.1, 1000.0), rng.in(250.0, 400.0),
                               2.0e6);
      auto r = expander_train(g, {{rng.in(1.2, 3.5), rng.in(0.7, 1.0)}}, 1e4, pt);
      CHECK(r.report.exergy_destruction() >= -1e-9 * r.report.exergy.total_in());
    } else if (pick == 2) {
      const double t_hot = rng.in(320.0, 700.0);
      auto g = GasStream::pure(Species::H2, rng.in(0.1, 1000.0), t_hot, 8e5);
      auto r = thermal_store_charge(g, 298.0, 4186.0, 298.0, t_hot - 15.0,
                                    rng.in(0.6, 1.0), pt);
      CHECK(r.report.exergy_destruction() >= -1e-9 * r.report.exergy.total_in());
    } else {
      auto g = GasStream::pure(Species::H2, rng.in(0.1, 1000.0), 298.0, 8e5);
      auto r = plasma_heat(g, rng.in(320.0, 1320.0), 0.95, rng.in(0.02, 0.3), 1323.0, pt);
      CHECK(r.report.exergy_destruction() >= -1e-9 * r.report.exergy.total_in());
    }
    ++checked;
  }
  CHECK(checked == 1000);
}
