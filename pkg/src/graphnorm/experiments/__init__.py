"""
Experiment commands. Each module exposes a COMMAND_DEFINITION dict and an execute(ctx)
function returning an ExperimentReport.
"""

from .closability import COMMAND_DEFINITION as CLOSABILITY_COMMAND
from .closability import execute as execute_closability
from .common import ExperimentContext, finalize_report
from .density import COMMAND_DEFINITION as DENSITY_COMMAND
from .density import execute as execute_density
from .duality import COMMAND_DEFINITION as DUALITY_COMMAND
from .duality import execute as execute_duality
from .gelfand import COMMAND_DEFINITION as GELFAND_COMMAND
from .gelfand import execute as execute_gelfand
from .kato_gap import COMMAND_DEFINITION as KATO_GAP_COMMAND
from .kato_gap import execute as execute_kato_gap
from .psi_infinity import COMMAND_DEFINITION as PSI_INFINITY_COMMAND
from .psi_infinity import execute as execute_psi_infinity
from .recover import COMMAND_DEFINITION as RECOVER_COMMAND
from .recover import execute as execute_recover
from .reproducing_kernel import COMMAND_DEFINITION as REPRODUCING_KERNEL_COMMAND
from .reproducing_kernel import execute as execute_reproducing_kernel
from .riemann_limit import COMMAND_DEFINITION as RIEMANN_LIMIT_COMMAND
from .riemann_limit import execute as execute_riemann_limit
from .run_all import COMMAND_DEFINITION as ALL_COMMAND
from .run_all import execute as execute_all
from .vonneumann import COMMAND_DEFINITION as VONNEUMANN_COMMAND
from .vonneumann import execute as execute_vonneumann

# name -> (definition, execute), in the order `all` runs them
COMMANDS = {
    definition["name"]: (definition, run)
    for definition, run in (
        (RIEMANN_LIMIT_COMMAND, execute_riemann_limit),
        (PSI_INFINITY_COMMAND, execute_psi_infinity),
        (REPRODUCING_KERNEL_COMMAND, execute_reproducing_kernel),
        (KATO_GAP_COMMAND, execute_kato_gap),
        (CLOSABILITY_COMMAND, execute_closability),
        (DENSITY_COMMAND, execute_density),
        (DUALITY_COMMAND, execute_duality),
        (RECOVER_COMMAND, execute_recover),
        (GELFAND_COMMAND, execute_gelfand),
        (VONNEUMANN_COMMAND, execute_vonneumann),
    )
}

__all__ = [
    "ALL_COMMAND",
    "CLOSABILITY_COMMAND",
    "COMMANDS",
    "DENSITY_COMMAND",
    "DUALITY_COMMAND",
    "ExperimentContext",
    "GELFAND_COMMAND",
    "KATO_GAP_COMMAND",
    "PSI_INFINITY_COMMAND",
    "RECOVER_COMMAND",
    "REPRODUCING_KERNEL_COMMAND",
    "RIEMANN_LIMIT_COMMAND",
    "VONNEUMANN_COMMAND",
    "execute_all",
    "execute_closability",
    "execute_density",
    "execute_duality",
    "execute_gelfand",
    "execute_kato_gap",
    "execute_psi_infinity",
    "execute_recover",
    "execute_reproducing_kernel",
    "execute_riemann_limit",
    "execute_vonneumann",
    "finalize_report",
]
