"""Seedable counter-based random number generation (SplitMix64).

All stochastic kernels in this package draw from SplitMix64 streams.  The
generator is deliberately tiny: 64-bit state, one add and three xor-shift
multiplies per draw, trivially portable.  Both the numba and numpy kernel
backends implement the identical update, so a given seed produces the same
graph regardless of backend.

Ensemble realizations get independent streams by hashing (master_seed, index)
through the same mixer; see :func:`derive_stream_seed`.
"""

MASK64 = 0xFFFFFFFFFFFFFFFF
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def splitmix64(state: int) -> tuple[int, int]:
    """Advance one SplitMix64 step: returns (new_state, 64-bit output)."""
    state = (state + GOLDEN_GAMMA) & MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    z = z ^ (z >> 31)
    return state, z


def derive_stream_seed(master_seed: int, stream_index: int) -> int:
    """Seed for an independent stream, e.g. one ensemble realization.

    Mixes the realization index into its own SplitMix64 output and xors it
    with a mix of the master seed, so neighboring indices share no structure.
    """
    _, a = splitmix64(master_seed & MASK64)
    _, b = splitmix64((stream_index + 1) & MASK64)
    return (a ^ b) & MASK64
