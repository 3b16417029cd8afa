"""Library-wide numerical tolerances.

Every rank decision, membership test and subspace comparison in the
package routes through the constants below, so a campaign can tighten or
loosen them in one place (see :class:`Tolerances`).
"""

from __future__ import annotations

from dataclasses import dataclass

# Relative singular-value cutoff: a singular value counts as nonzero when
# it exceeds RANK_TOL times the largest singular value.
RANK_TOL = 1e-8

# Relative Frobenius tolerance for group-membership and isotropy defects.
MEMBERSHIP_TOL = 1e-8

# Principal-angle tolerance under which two subspaces count as equal.
ANGLE_TOL = 1e-8

# Absolute tolerance for scalar comparisons.
SCALAR_TOL = 1e-10

# Graph-level identities (extracted matrices, Cayley compatibility) are
# only asserted when the relevant linear systems are better conditioned
# than this; worse-conditioned samples are skipped, never failed.
COND_LIMIT = 1e6


@dataclass(frozen=True)
class Tolerances:
    """The three knobs a verification campaign may override."""

    rank: float = RANK_TOL
    membership: float = MEMBERSHIP_TOL
    angle: float = ANGLE_TOL

    def validated(self) -> "Tolerances":
        for name, value in (("rank", self.rank),
                            ("membership", self.membership),
                            ("angle", self.angle)):
            if not (0.0 < value < 1.0):
                from .errors import InvalidConfig
                raise InvalidConfig(f"tolerance {name!r} must lie in (0, 1), got {value}")
        return self
