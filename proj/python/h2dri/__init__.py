"""Flowsheet simulator for hydrogen direct-reduction ironmaking.

The heavy lifting lives in the compiled extension; this package re-exports
the operations most runs need: scenario solving, temperature sweeps and the
stream-level energy/exergy primitives.
"""

from ._core import (
    carbon_equivalent,
    gas_chemical_energy,
    gas_chemical_exergy,
    gas_physical_energy,
    gas_physical_exergy,
    run_sweep,
    solve_scenario,
)

SCENARIOS = ("zero-carbon", "trad-64", "trad-82", "grid")

__all__ = [
    "SCENARIOS",
    "carbon_equivalent",
    "gas_chemical_energy",
    "gas_chemical_exergy",
    "gas_physical_energy",
    "gas_physical_exergy",
    "run_sweep",
    "solve_scenario",
]
