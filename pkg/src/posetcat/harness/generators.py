"""Seeded random finite spaces and maps."""
from __future__ import annotations

import random
from dataclasses import dataclass

from ..budget import DEFAULT_BUDGET
from ..errors import PosetcatError
from ..homotopy import map_tuples
from ..maps import ContinuousMap
from ..space import FiniteSpace, build_space, is_normal, subspace


@dataclass(frozen=True)
class GeneratorConfig:
    max_points: int = 5
    edge_density: float = 0.4
    pointed: bool = False
    normal_only: bool = False
    seed: int = 0
    min_points: int = 1
    max_retries: int = 200


class GenerationError(PosetcatError):
    pass


def gen_space(config: GeneratorConfig, rng: random.Random | None = None) -> FiniteSpace:
    """Random DAG on 1..max_points vertices, transitively closed.

    Vertex order is a topological order, so the closure is already T0.
    """
    rng = rng or random.Random(config.seed)
    for _ in range(config.max_retries):
        k = rng.randint(config.min_points, config.max_points)
        pairs = [(i, j) for i in range(k) for j in range(i + 1, k)
                 if rng.random() < config.edge_density]
        X = build_space(list(range(k)), pairs)
        if config.pointed:
            X = X.with_basepoint(rng.randrange(k))
        if config.normal_only and not is_normal(X)[0]:
            continue
        return X
    raise GenerationError("no space satisfying the filters within the retry bound")


def gen_map(X: FiniteSpace, Y: FiniteSpace, config: GeneratorConfig,
            rng: random.Random | None = None, pointed=None) -> ContinuousMap:
    """Uniform sample from all (pointed) continuous maps X -> Y."""
    rng = rng or random.Random(config.seed)
    pointed = config.pointed if pointed is None else pointed
    maps = map_tuples(X, Y, pointed, DEFAULT_BUDGET)
    if not maps:
        raise GenerationError("no continuous map with the requested constraints")
    return ContinuousMap(X, Y, rng.choice(maps), check=False)


def gen_inclusion(Y: FiniteSpace, rng: random.Random, pointed=False) -> ContinuousMap:
    """Inclusion of a random nonempty subspace (containing the basepoint if pointed)."""
    mask = 0
    while not mask:
        mask = rng.getrandbits(Y.n)
    if pointed:
        mask |= 1 << Y.base_index
    return subspace(Y, mask)[1]
