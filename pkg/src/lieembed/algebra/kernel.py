"""Kernel backend selection.

The compiled extension is used when it was built and imports cleanly. Set
``LIEEMBED_KERNEL=python`` to force the pure-Python fallback, or
``LIEEMBED_KERNEL=compiled`` to fail loudly when the extension is missing.
"""

import os

from ._kernel_py import Kernel as PythonKernel
from ._kernel_py import TermLimitError

try:
    from ._kernel import Kernel as CompiledKernel
except ImportError:  # extension not built
    CompiledKernel = None


def select_kernel(preference=None):
    """Return the kernel class for ``preference`` in {auto, python, compiled}."""
    pref = (preference or os.environ.get("LIEEMBED_KERNEL", "auto")).lower()
    if pref == "python":
        return PythonKernel
    if pref == "compiled":
        if CompiledKernel is None:
            raise ImportError("compiled kernel requested but the extension is not built")
        return CompiledKernel
    if pref != "auto":
        raise ValueError(f"unknown kernel preference {pref!r}")
    return CompiledKernel if CompiledKernel is not None else PythonKernel


DefaultKernel = select_kernel()
BACKEND = DefaultKernel.backend
_current = [DefaultKernel]


def default_kernel():
    """Kernel class used by presentations built without an explicit one."""
    return _current[0]


def set_default_kernel(preference):
    """Switch the process-wide default backend; returns the chosen class."""
    _current[0] = select_kernel(preference)
    return _current[0]


__all__ = ["BACKEND", "CompiledKernel", "DefaultKernel", "PythonKernel", "TermLimitError",
           "default_kernel", "select_kernel", "set_default_kernel"]
