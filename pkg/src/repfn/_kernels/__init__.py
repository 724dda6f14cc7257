"""Kernel backend selection.

The compiled module is preferred when it was built; the numpy fallback is
always available.  REPFN_BACKEND=pure|fast forces a choice (forcing "fast"
raises if the extension is missing, rather than silently degrading).
"""

from __future__ import annotations

import os
from types import ModuleType


def load_backend(name: str) -> ModuleType:
    if name == "pure":
        from repfn._kernels import _pure

        return _pure
    if name == "fast":
        from repfn._kernels import _fast  # type: ignore[attr-defined]

        return _fast
    raise ValueError(f"unknown kernel backend {name!r} (expected 'pure' or 'fast')")


def available_backends() -> list[str]:
    names = ["pure"]
    try:
        load_backend("fast")
        names.insert(0, "fast")
    except ImportError:
        pass
    return names


_forced = os.environ.get("REPFN_BACKEND")
if _forced:
    backend = load_backend(_forced)
else:
    try:
        backend = load_backend("fast")
    except ImportError:
        backend = load_backend("pure")

BACKEND_NAME: str = backend.NAME

profile_for_mask = backend.profile_for_mask
profiles_for_range = backend.profiles_for_range
balanced_masks_oracle = backend.balanced_masks_oracle
balanced_masks_predicate = backend.balanced_masks_predicate
balanced_masks_componentwise = backend.balanced_masks_componentwise
theorem_mismatch = backend.theorem_mismatch
theorem_mismatch_componentwise = backend.theorem_mismatch_componentwise
tary_profile_for_mask = backend.tary_profile_for_mask
balanced_masks_tary = backend.balanced_masks_tary
