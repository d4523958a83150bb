"""Counter-based RNG key derivation shared by both kernel backends.

All randomness in the simulator is derived by hashing, never by drawing from
a shared sequential stream: a per-run 64-bit key is folded out of the user
seed, and each infection trial hashes (key, step, source, target).  Both
backends implement the same splitmix64 finalizer, so results are
bit-identical regardless of backend, schedule or thread count.
"""

from __future__ import annotations

from collections.abc import Iterable

_MASK64 = 0xFFFFFFFFFFFFFFFF
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def mix64(z: int) -> int:
    """splitmix64 finalizer step on a 64-bit word."""
    z = (z + _GAMMA) & _MASK64
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
    return z ^ (z >> 31)


def fold_key(seed: int, words: Iterable[int]) -> int:
    """Fold a seed and a sequence of integer words into one 64-bit key."""
    h = mix64(seed & _MASK64)
    for w in words:
        h = mix64(h ^ (w & _MASK64))
    return h
