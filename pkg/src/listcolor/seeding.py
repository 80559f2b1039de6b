"""Deterministic seed derivation.

Child seeds are the first 8 bytes (big-endian) of SHA-256 over the
"|"-joined canonical string forms of the parts: ints/strings via str(),
floats via repr() (shortest round-trip, stable across platforms). All
randomness in the package flows through random.Random (MT19937) seeded
with values produced here, so generated instances are reproducible
bit-for-bit on any platform.
"""

from __future__ import annotations

import hashlib


def _canon(part: object) -> str:
    if isinstance(part, float):
        return repr(part)
    return str(part)


def mix_seed(*parts: object) -> int:
    """Derive a 64-bit child seed from heterogeneous parts."""
    text = "|".join(_canon(p) for p in parts)
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")
