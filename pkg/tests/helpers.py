"""Shared test utilities: random structure generation and independent oracles.

The oracles here deliberately avoid the code paths they check: the edit
distance oracle is a memoized textbook recursion, and the paradigm size
oracle counts raw grid combinations with set arithmetic.
"""

from __future__ import annotations

import random
from functools import lru_cache

from morphlayers import DEFAULT_INVENTORY, FeatureStructure
from morphlayers.georgian import GeorgianConfig, ParadigmGrid


def random_structure(
    rng: random.Random,
    inventory=DEFAULT_INVENTORY,
    max_depth: int = 2,
    bundle_chance: float = 0.35,
) -> FeatureStructure:
    """A random structure drawn from the inventory; always non-empty and valid."""
    dims = [name for name, _ in inventory.dimensions]
    chosen = rng.sample(dims, k=rng.randint(1, min(4, len(dims))))
    atoms = [rng.choice(sorted(inventory.labels(d))) for d in chosen]
    bundles = {}
    if max_depth > 0:
        for role in inventory.roles:
            if rng.random() < bundle_chance:
                bundles[role] = random_structure(
                    rng, inventory, max_depth - 1, bundle_chance / 2
                )
    return FeatureStructure(atoms, bundles)


def shuffled_copy(fs: FeatureStructure, rng: random.Random) -> FeatureStructure:
    """Rebuild ``fs`` with atom and bundle insertion order permuted."""
    atoms = list(fs.atoms)
    rng.shuffle(atoms)
    bundles = [(role, shuffled_copy(sub, rng)) for role, sub in fs.bundles]
    rng.shuffle(bundles)
    return FeatureStructure(atoms, bundles)


@lru_cache(maxsize=None)
def edit_distance_oracle(a: str, b: str) -> int:
    """Plain recursive Levenshtein definition, memoized."""
    if not a:
        return len(b)
    if not b:
        return len(a)
    return min(
        edit_distance_oracle(a[1:], b) + 1,
        edit_distance_oracle(a, b[1:]) + 1,
        edit_distance_oracle(a[1:], b[1:]) + (a[0] != b[0]),
    )


def grid_size_oracle(grid: ParadigmGrid, config: GeorgianConfig) -> int:
    """Brute-force count of grid cells as a sum of per-screeve set sizes."""
    total = 0
    for name in grid.screeves:
        persons = grid.restrictions.get(name)
        subjects = {
            s for s in grid.subjects if persons is None or s[0] in persons
        }
        combos = {(s, o) for s in subjects for o in grid.objects}
        total += len(combos - grid.exclusions)
    return total
