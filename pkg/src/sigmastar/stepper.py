"""Stepper backend selection.

The compiled kernel (built from _stepper_c.pyx at install time) is preferred;
the pure-Python kernel is the fallback and the semantic reference.  Setting
the environment variable WORKBENCH_PURE_PYTHON=1 forces the fallback, which
is how the benchmark and the differential tests compare the two.
"""

import os

from sigmastar import _stepper_pure


def _load_compiled():
    try:
        from sigmastar import _stepper_c
        return _stepper_c
    except ImportError:
        return None


_compiled = _load_compiled()

if os.environ.get("WORKBENCH_PURE_PYTHON") or _compiled is None:
    advance = _stepper_pure.advance
    BACKEND = "pure"
else:
    advance = _compiled.advance
    BACKEND = "compiled"


def available_backends():
    """Mapping of backend name -> advance function, for benchmarks/tests."""
    backends = {"pure": _stepper_pure.advance}
    if _compiled is not None:
        backends["compiled"] = _compiled.advance
    return backends
