"""Geodesic distance on the Grassmannian from principal angles.

d(L1, L2) = sqrt(sum of squared principal angles), in radians; the
maximum possible value is sqrt(n) * pi/2, attained by orthogonal
subspaces.  Arguments are put in a canonical order first so that
d(L1, L2) and d(L2, L1) run the identical computation and symmetry
holds to the last bit.
"""

from __future__ import annotations

import math
from typing import Callable, Iterable, Tuple

import numpy as np

from .errors import AmbientMismatch, ShapeMismatch, WrongField
from .grassmann import Subspace
from .matgeom import principal_angles


def distance(l1: Subspace, l2: Subspace) -> float:
    """Square root of the sum of squared principal angles."""
    if l1.field != l2.field:
        raise WrongField(f"field mismatch: {l1.field} vs {l2.field}")
    if l1.ambient != l2.ambient:
        raise AmbientMismatch(f"ambient {l1.ambient} vs {l2.ambient}")
    if l1.dim != l2.dim:
        raise ShapeMismatch(f"dimension {l1.dim} vs {l2.dim}")
    b1 = l1.frame.data.tobytes()
    b2 = l2.frame.data.tobytes()
    if b1 == b2:
        return 0.0
    if b2 < b1:
        l1, l2 = l2, l1
    angles = principal_angles(l1.frame, l2.frame)
    return math.sqrt(float(np.sum(angles * angles)))


def isometry_defect(transform: Callable[[Subspace], Subspace],
                    samples: Iterable[Tuple[Subspace, Subspace]]) -> float:
    """Worst distance distortion of a subspace map over sample pairs."""
    worst = 0.0
    for l1, l2 in samples:
        before = distance(l1, l2)
        after = distance(transform(l1), transform(l2))
        worst = max(worst, abs(after - before))
    return worst
