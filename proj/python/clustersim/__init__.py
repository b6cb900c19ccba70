"""Linear cluster-state generation on a charge-qubit chain.

Thin wrapper over the C++ core: exact factorized evolution, Lindblad T1/T2
noise, stabilizer verification, and the scenario runner used by the CLI.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
__doc__ = (__doc__ or "") + "\n\n" + (_core_doc or "")
