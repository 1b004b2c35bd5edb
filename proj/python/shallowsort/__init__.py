"""Stack-based natural mergesorts with strictly in-place engines.

The heavy lifting lives in the compiled extension; this package just
re-exports it.  ``sort_in_place`` sorts a 1-d int64 numpy array under a
chosen merge policy / engine / merge kernel and returns the operation
counters; ``trace`` returns the merge trace of a run instead.
"""

try:
    from ._shallowsort import *  # noqa: F401,F403
    from ._shallowsort import __doc__ as _core_doc
except ImportError:  # in-tree builds put the module on sys.path directly
    from _shallowsort import *  # noqa: F401,F403
    from _shallowsort import __doc__ as _core_doc

__all__ = [
    "sort_in_place",
    "trace",
    "detect_runs",
    "run_entropy",
    "node_power",
    "shivers_level",
    "generate",
    "verify_sorted_permutation",
    "POLICIES",
    "ENGINES",
    "KERNELS",
]
