__version__ = "0.1.0"

from quasifiliform_tp.catalog import Family, FamilyId, make_algebra  # noqa: E402
from quasifiliform_tp.derivations import (  # noqa: E402
    DerivationProblem,
    DerivationSpace,
    solve_derivation_space,
    verify_theorem,
)
from quasifiliform_tp.jsonio import export_json, import_json  # noqa: E402
from quasifiliform_tp.lie import LieAlgebra, jacobi_check, nilindex  # noqa: E402
from quasifiliform_tp.reports import cmd_verify_all  # noqa: E402

__all__ = [
    "Family",
    "FamilyId",
    "make_algebra",
    "DerivationProblem",
    "DerivationSpace",
    "solve_derivation_space",
    "verify_theorem",
    "export_json",
    "import_json",
    "LieAlgebra",
    "jacobi_check",
    "nilindex",
    "cmd_verify_all",
]
