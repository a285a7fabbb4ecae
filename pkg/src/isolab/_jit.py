"""JIT switch for the hot kernels.

Kernels are written once in a numba-compatible subset of Python. With numba
available they are compiled with ``@njit``; setting ``ISOLAB_DISABLE_JIT=1``
(or running without numba) leaves them as plain Python over NumPy arrays.
``ISOLAB_THREADS`` caps the worker count of parallel kernels.
"""

import os

# the bundled TBB is too old for numba; skip it instead of warning on every run
os.environ.setdefault("NUMBA_THREADING_LAYER", "omp")

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None

_disabled = os.environ.get("ISOLAB_DISABLE_JIT", "").strip().lower() not in ("", "0", "false", "no")
JIT_ENABLED = numba is not None and not _disabled


def _identity_range(*args):
    return range(*args)


if JIT_ENABLED:
    prange = numba.prange

    def njit(*args, parallel=False, **kwargs):
        kwargs.setdefault("cache", True)
        if parallel:
            kwargs["parallel"] = True
        if args and callable(args[0]):
            return numba.njit(**kwargs)(args[0])
        return numba.njit(*args, **kwargs)

    _threads = os.environ.get("ISOLAB_THREADS")
    if _threads:
        try:
            numba.set_num_threads(max(1, min(int(_threads), numba.config.NUMBA_NUM_THREADS)))
        except ValueError:
            pass
else:
    prange = _identity_range

    def njit(*args, parallel=False, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


def backend() -> str:
    return "numba" if JIT_ENABLED else "python"
