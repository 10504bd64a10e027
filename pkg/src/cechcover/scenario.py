"""Random deployment scenarios: Poisson-many disks on a rectangle.

The cell count is Poisson with mean density * area, centers are uniform
i.i.d. on the rectangle, radii uniform i.i.d. on [radius_min, radius_max].
Disks near the border are not clipped; coverage may overhang the region.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import DiskSet
from .geometry import Disk
from .rng import SplitMix64


@dataclass(frozen=True)
class ScenarioConfig:
    """Deployment parameters; defaults are a 6x6 region with radii 0.5..1."""

    density: float
    width: float = 6.0
    height: float = 6.0
    radius_min: float = 0.5
    radius_max: float = 1.0
    seed: int = 0
    dmax: int | None = 2

    def __post_init__(self):
        if not self.density > 0:
            raise ValueError(f"density must be > 0, got {self.density}")
        if not self.width > 0:
            raise ValueError(f"width must be > 0, got {self.width}")
        if not self.height > 0:
            raise ValueError(f"height must be > 0, got {self.height}")
        if not 0 < self.radius_min <= self.radius_max:
            raise ValueError(
                "radius_min must satisfy 0 < radius_min <= radius_max, got "
                f"radius_min={self.radius_min}, radius_max={self.radius_max}"
            )
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.dmax is not None and self.dmax < 1:
            raise ValueError(f"dmax must be >= 1 or None, got {self.dmax}")


def generate_scenario(cfg: ScenarioConfig) -> DiskSet:
    """Draw a DiskSet from cfg, fully determined by cfg.seed.

    Draw order is part of the format: first the Poisson count, then x, y,
    radius for each disk in id order.
    """
    rng = SplitMix64(cfg.seed)
    count = rng.poisson(cfg.density * cfg.width * cfg.height)
    disks = []
    for i in range(count):
        x = rng.uniform(0.0, cfg.width)
        y = rng.uniform(0.0, cfg.height)
        r = rng.uniform(cfg.radius_min, cfg.radius_max)
        disks.append(Disk.of(i, x, y, r))
    return DiskSet(tuple(disks))
