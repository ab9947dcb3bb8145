from ._core import (
    Ideal,
    Module,
    Ring,
    run_session,
    verify_free_summand,
    verify_hw,
    verify_main,
    verify_main2,
    verify_rigidity,
    verify_trace_props,
    __version__,
)

__all__ = [
    "Ideal",
    "Module",
    "Ring",
    "run_session",
    "verify_free_summand",
    "verify_hw",
    "verify_main",
    "verify_main2",
    "verify_rigidity",
    "verify_trace_props",
    "__version__",
]
