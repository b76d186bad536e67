"""Shared constructors for episodes and matrices used across the test suite."""

import random

import numpy as np

from choicetrust import ChoiceEpisode, PreferenceMatrix, ValidatedEpisode, validate_episode


def episode(reviewer, period, attainable, wishlist, cart, final) -> ValidatedEpisode:
    return validate_episode(
        ChoiceEpisode(reviewer, period, tuple(attainable), tuple(wishlist), tuple(cart), tuple(final))
    )


def chain_episode(pref_order, catalog, period=1, reviewer="r") -> ValidatedEpisode:
    """Episode whose stage ranks realize a strict chain (needs len <= 4).

    The most-preferred object gets rank 3, the next 2, and so on; stage sets
    are read off the ranks.
    """
    assert 2 <= len(pref_order) <= 4
    ranks = {oid: 3 - i for i, oid in enumerate(pref_order)}
    return episode(
        reviewer,
        period,
        catalog,
        [o for o in catalog if ranks[o] >= 1],
        [o for o in catalog if ranks[o] >= 2],
        [o for o in catalog if ranks[o] >= 3],
    )


def chain_matrix(pref_order, catalog) -> PreferenceMatrix:
    """Strict-chain preference matrix for any n, in the given catalog order."""
    position = {oid: i for i, oid in enumerate(pref_order)}
    n = len(catalog)
    bits = np.zeros((n, n), dtype=np.uint8)
    for i, a in enumerate(catalog):
        for j, b in enumerate(catalog):
            if i != j and position[a] < position[b]:
                bits[i, j] = 1
    return PreferenceMatrix(order=tuple(catalog), bits=bits)


def random_staged_episode(rng: random.Random, ids, period=1, reviewer="r") -> ValidatedEpisode:
    """Random nested stage sets over the given catalog (final never empty)."""
    ranks = {oid: rng.randint(0, 3) for oid in ids}
    ranks[rng.choice(list(ids))] = 3
    return episode(
        reviewer,
        period,
        ids,
        [o for o in ids if ranks[o] >= 1],
        [o for o in ids if ranks[o] >= 2],
        [o for o in ids if ranks[o] >= 3],
    )


def random_matrix(rng: random.Random, n: int) -> PreferenceMatrix:
    bits = np.array([[rng.randint(0, 1) if i != j else 0 for j in range(n)] for i in range(n)],
                    dtype=np.uint8)
    return PreferenceMatrix(order=tuple(f"o{i}" for i in range(n)), bits=bits)
