"""Every classified twisting map on a reduced-rank-one shape, assembled component by component."""

import logging
import random
from itertools import product

from tqdm import tqdm

from algebra.structure import AlgebraStructure
from classify.connected import canonical_cycle_labeling, enumerate_connected_cycle_data, rep_from_connected_cycle
from classify.rank_one import RankOneDatum, enumerate_rank1_data, rep_from_rank1_datum
from oracle.compare import GridSet
from quiver.decompose import unique_cycle_decomposition
from quiver.quiver import rank_one_shapes, shape_from_arrows
from twisting.pair import grid_from_pair, pair_from_arrow_maps
from utils.config import DEFAULT_SEED

logger = logging.getLogger(__name__)

__all__ = ['classify_shape', 'classified_grids', 'component_maps', 'rank_one_shapes']


def _component_shape(shape, vertices):
    local = {v: k for k, v in enumerate(vertices)}
    arrows = [(local[s], local[t]) for s, t in shape.non_loop_arrows() if s in local and t in local]
    return shape_from_arrows(len(vertices), arrows)


def component_maps(shape, vertices, cycle_length, m, field, rng, samples):
    """
    Arrow maps of every classified representation of one weak component.

    Args:
        shape: Whole AdmissibleShape
        vertices: Sorted vertices of the component
        cycle_length: Length of its non-loop cycle, 0 for none

    Returns:
        List of dicts (s, t) -> EndoMap in the labels of ``shape``
    """
    sub = _component_shape(shape, vertices)
    found = []
    if cycle_length == 2:
        canonical, permutation = canonical_cycle_labeling(sub)
        inverse = {new: old for old, new in enumerate(permutation)}
        for datum in enumerate_connected_cycle_data(canonical, m, field, rng=rng, samples=samples):
            pair = rep_from_connected_cycle(datum)
            found.append({(vertices[inverse[s]], vertices[inverse[t]]): f for (s, t), f in pair.maps().items()})
    else:
        for datum in enumerate_rank1_data(sub, m, field, roots_identity=True):
            pair = rep_from_rank1_datum(datum)
            found.append({(vertices[s], vertices[t]): f for (s, t), f in pair.maps().items()})
    return found


def classify_shape(shape, m, field, rng=None, samples=1):
    """
    Admissible pairs over K^m classified on a shape of reduced rank at most one.

    Components without a 2-cycle use rank-one data; a component with a
    2-cycle is relabeled canonically and uses connected-cycle data.

    Args:
        shape: AdmissibleShape
        m: Dimension of K^m
        field: FieldSpec
        rng: random.Random drawing free rational parameters
        samples: Draws per free family over the rationals

    Returns:
        List of AdmissiblePair; a pair whose arrow map vanishes lives on the
        smaller support quiver

    Raises:
        RrankTooLarge: some vertex has two non-loop parents
    """
    rng = rng or random.Random(DEFAULT_SEED)
    algebra = AlgebraStructure.diagonal(field, m)
    per_component = [
        component_maps(shape, part.vertices, len(part.cycle), m, field, rng, samples)
        for part in unique_cycle_decomposition(shape)
    ]
    pairs = []
    for choice in product(*per_component):
        merged = {}
        for maps in choice:
            merged.update(maps)
        pairs.append(pair_from_arrow_maps(algebra, shape.n, merged))
    logger.debug(f"{len(pairs)} classified pairs on shape with arrows {[a.label() for a in shape.non_loop_arrows()]}")
    return pairs


def classified_grids(n, m, field, rng=None, samples=1, progress=False):
    """
    Union of the classified grids over every rank-one shape on n vertices.

    Complete whenever min(n, m) <= 2, where every twisting map has reduced rank at most one.
    """
    rng = rng or random.Random(DEFAULT_SEED)
    shapes = list(rank_one_shapes(n))
    grids = GridSet()
    for shape in tqdm(shapes, desc="shapes", disable=not progress):
        grids.update(grid_from_pair(pair) for pair in classify_shape(shape, m, field, rng=rng, samples=samples))
    logger.info(f"Classified {len(grids)} grids over {len(shapes)} shapes (n={n}, m={m}, {field.label})")
    return grids


def loop_data_count(m, field):
    """Number of rank-one data on a single looped vertex."""
    shape = shape_from_arrows(1, [])
    return sum(1 for _ in enumerate_rank1_data(shape, m, field))


def flip_datum(n, m, field):
    shape = shape_from_arrows(n, [])
    return RankOneDatum(field, shape, tuple(tuple(range(m)) for _ in range(n)))
