#include <doctest.h>

#include <cmath>

#include "h2dri/furnace.hpp"

using namespace h2dri;

namespace {

const PropertyTable& table() {
  static PropertyTable t = PropertyTable::builtin();
  return t;
}

ScenarioConfig base_cfg() {
  ScenarioConfig cfg;
  cfg.t_reduction_gas = 1273.0;
  return cfg;
}

} // namespace

TEST_CASE("stoichiometry") {
  const auto& pt = table();

  SUBCASE("empty batch") {
    auto st = stoichiometry(0.0, 0.95, 1.0, 0.94, 0.04, pt);
    CHECK(st.n1 == 0.0);
    CHECK(st.ore_mass == 0.0);
  }
  SUBCASE("pure-iron batch, hand oracle") {
    // 1000 kg of Fe: moles = 1000 / 0.055845; stoichiometric gas = 3/2 per Fe.
    auto st = stoichiometry(1000.0, 1.0, 1.0, 1.0, 0.0, pt);
    CHECK(st.fe_mol == doctest::Approx(1000.0 / 0.055845).epsilon(1e-12));
    CHECK(st.fe_mol == doctest::Approx(1.790e4).epsilon(2e-3));
    CHECK(st.gas_stoich_mol == doctest::Approx(2.686e4).epsilon(2e-3));
    CHECK(st.h2o_mol == doctest::Approx(st.n1).epsilon(1e-12));
  }
  SUBCASE("conversion factor scales the fed gas and the products") {
    auto st = stoichiometry(1000.0, 1.0, 1.0, 0.94, 0.0, pt);
    CHECK(st.n1 == doctest::Approx(0.94 * st.gas_stoich_mol).epsilon(1e-12));
    CHECK(st.h2o_mol == doctest::Approx(st.n1).epsilon(1e-12));
  }
  SUBCASE("hematite oxygen burden floor") {
    auto st = stoichiometry(1000.0, 0.95, 1.0, 0.94, 0.0, pt);
    CHECK(st.fe2o3_mass >= 10.0 / 7.0 * 0.95 * 1000.0);
  }
  SUBCASE("mixed gas splits by share") {
    auto st = stoichiometry(1000.0, 0.95, 0.6, 0.94, 0.04, pt);
    CHECK(st.n1_h2 == doctest::Approx(0.6 * st.n1));
    CHECK(st.n1_co == doctest::Approx(0.4 * st.n1));
    CHECK(st.co2_mol == doctest::Approx(st.n1_co));
  }
  SUBCASE("invalid iron fraction rejected") {
    CHECK_THROWS_AS(stoichiometry(1000.0, 0.0, 1.0, 0.94, 0.04, pt),
                    std::invalid_argument);
    CHECK_THROWS_AS(stoichiometry(1000.0, 1.2, 1.0, 0.94, 0.04, pt),
                    std::invalid_argument);
  }
}

TEST_CASE("heat balance") {
  const auto& pt = table();
  auto cfg = base_cfg();
  const auto st = stoichiometry(cfg.dri_batch_kg, cfg.w_fe, 1.0, cfg.eta_fe_h2,
                                cfg.gangue_fraction, pt);

  SUBCASE("endothermic route needs circulating gas") {
    auto b = heat_balance_solve(1273.0, 723.0, 1150.0, st, cfg, pt);
    CHECK(b.n2 > 0.0);
  }
  SUBCASE("closure residual vanishes at the solution") {
    auto b = heat_balance_solve(1273.0, 723.0, 1150.0, st, cfg, pt);
    CHECK(b.closure_residual() < 1e-12);
  }
  SUBCASE("hotter inlet lowers the circulating gas at fixed outputs") {
    double prev = -1.0;
    for (double t = 1023.0; t <= 1273.0 + 1e-9; t += 25.0) {
      auto b = heat_balance_solve(t, 700.0, 1000.0, st, cfg, pt);
      if (prev > 0.0) CHECK(b.n2 < prev);
      prev = b.n2;
    }
  }
  SUBCASE("CO-bearing mixes need less gas") {
    auto cfg64 = cfg;
    const auto st64 = stoichiometry(cfg.dri_batch_kg, cfg.w_fe, 0.6, cfg.eta_fe_h2,
                                    cfg.gangue_fraction, pt);
    const auto st82 = stoichiometry(cfg.dri_batch_kg, cfg.w_fe, 0.8, cfg.eta_fe_h2,
                                    cfg.gangue_fraction, pt);
    auto b64 = heat_balance_solve(1273.0, 723.0, 1150.0, st64, cfg64, pt);
    auto b82 = heat_balance_solve(1273.0, 723.0, 1150.0, st82, cfg64, pt);
    auto bh2 = heat_balance_solve(1273.0, 723.0, 1150.0, st, cfg, pt);
    CHECK(b64.n1 + b64.n2 < b82.n1 + b82.n2);
    CHECK(b82.n1 + b82.n2 < bh2.n1 + bh2.n2);
  }
  SUBCASE("reaction heat released grows with the CO share") {
    const auto st64 = stoichiometry(cfg.dri_batch_kg, cfg.w_fe, 0.6, cfg.eta_fe_h2,
                                    cfg.gangue_fraction, pt);
    const auto st82 = stoichiometry(cfg.dri_batch_kg, cfg.w_fe, 0.8, cfg.eta_fe_h2,
                                    cfg.gangue_fraction, pt);
    auto b64 = heat_balance_solve(1273.0, 723.0, 1150.0, st64, cfg, pt);
    auto b82 = heat_balance_solve(1273.0, 723.0, 1150.0, st82, cfg, pt);
    CHECK(b64.w_reaction < b82.w_reaction);
  }
  SUBCASE("infeasible balance carries a deficit diagnostic") {
    // Exothermic-dominated mix with a cold inlet cannot need negative gas.
    auto cfg_co = cfg;
    cfg_co.dh_red_co = -200.0e3;
    const auto st_co = stoichiometry(cfg.dri_batch_kg, cfg.w_fe, 0.0, cfg.eta_fe_h2,
                                     cfg.gangue_fraction, pt);
    CHECK_THROWS_WITH_AS(heat_balance_solve(1273.0, 723.0, 400.0, st_co, cfg_co, pt),
                         doctest::Contains("heat surplus"), std::runtime_error);
  }
}

TEST_CASE("furnace ledgers") {
  const auto& pt = table();
  auto cfg = base_cfg();
  const auto st = stoichiometry(cfg.dri_batch_kg, cfg.w_fe, 1.0, cfg.eta_fe_h2,
                                cfg.gangue_fraction, pt);
  const auto bal = heat_balance_solve(1273.0, 723.0, 1150.0, st, cfg, pt);
  const auto fl = furnace_ledgers(bal, st, cfg, pt);

  SUBCASE("gas input term matches the stream primitive") {
    CHECK(fl.report.energy.in("gas_physical") ==
          doctest::Approx(gas_physical_energy(fl.streams.feed, pt)).epsilon(1e-12));
  }
  SUBCASE("ledger difference equals the declared losses") {
    const double in = fl.report.energy.total_in();
    const double out = fl.report.energy.total_out();
    CHECK(in - out == doctest::Approx(fl.report.loss_total()).epsilon(1e-9));
  }
  SUBCASE("water vapor carries the printed gamma form") {
    const double expect = 1.33 / 0.33 * (cfg.water_factor * st.n1_h2) * 8.314 *
                          (723.0 - 298.0);
    CHECK(bal.w_h2o_out == doctest::Approx(expect).epsilon(1e-12));
  }
  SUBCASE("exergy output below exergy input") {
    CHECK(fl.report.exergy.total_out() < fl.report.exergy.total_in());
  }
  SUBCASE("no circulating gas means no top-gas sensible term") {
    auto b0 = bal;
    b0.n2 = 0.0;
    b0.w_ch2_out = 0.0;
    auto fl0 = furnace_ledgers(b0, st, cfg, pt);
    CHECK(fl0.w_ch2_ch == 0.0);
    CHECK(fl0.report.energy.out("circulating_gas_physical") == 0.0);
  }
}
