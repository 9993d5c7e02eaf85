import logging
from dataclasses import dataclass, field

logger = logging.getLogger(__name__)


class GridSet:
    """Duplicate-free collection of EGrids iterated in lexicographic order of their entries."""

    def __init__(self, grids=()):
        self._grids = {}
        for grid in grids:
            self.add(grid)

    def add(self, grid):
        self._grids.setdefault(grid.key(), grid)

    def update(self, grids):
        for grid in grids:
            self.add(grid)

    def keys(self):
        return sorted(self._grids)

    def __contains__(self, grid):
        return grid.key() in self._grids

    def __len__(self):
        return len(self._grids)

    def __iter__(self):
        return iter([self._grids[key] for key in self.keys()])

    def __eq__(self, other):
        if not isinstance(other, GridSet):
            return NotImplemented
        return set(self._grids) == set(other._grids)

    def without(self, grid):
        return GridSet(g for g in self if g.key() != grid.key())

    def __repr__(self):
        return f"GridSet({len(self)} grids)"


@dataclass
class ComparisonReport:
    left_count: int
    right_count: int
    only_left: list = field(default_factory=list)
    only_right: list = field(default_factory=list)

    @property
    def equal(self):
        return not self.only_left and not self.only_right

    def __bool__(self):
        return self.equal

    def summary(self):
        return {
            'left': self.left_count,
            'right': self.right_count,
            'only_left': len(self.only_left),
            'only_right': len(self.only_right),
            'equal': self.equal,
        }


def compare_sets(left, right):
    """
    Symmetric difference of two GridSets with the witnesses on each side.

    Args:
        left: GridSet, typically the brute-force result
        right: GridSet, typically the classification output

    Returns:
        ComparisonReport, truthy when the sets agree
    """
    only_left = [grid for grid in left if grid not in right]
    only_right = [grid for grid in right if grid not in left]
    report = ComparisonReport(len(left), len(right), only_left, only_right)
    if report.equal:
        logger.info(f"Grid sets agree ({len(left)} grids)")
    else:
        logger.info(f"Grid sets differ: {len(only_left)} only left, {len(only_right)} only right")
    return report
