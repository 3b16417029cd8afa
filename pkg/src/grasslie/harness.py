"""Seeded verification campaigns and report/table emission.

A campaign runs every applicable property from the inventory below for
each requested group, with per-property sub-seeds derived from the
campaign seed, so runs with identical configuration are byte-identical
and property order never matters.  Reports are JSON (sorted keys, no
timestamps); dimension audits and stratum surveys are CSV.
"""

from __future__ import annotations

import csv
import json
import zlib
from dataclasses import dataclass, field
from typing import Callable, List, Tuple

import numpy as np
import scipy

from . import __version__
from .config import COND_LIMIT, Tolerances
from .errors import InvalidConfig, NoIsotropicVectors
from .grassmann import (admissible_strata, boundary_sample, graph_embed,
                        graph_extract, graph_subspace, intersection_dim,
                        isotropy_defect, random_subspace, sample_stratum,
                        tangent_param, v1_subspace, v2_subspace, witt_index)
from .groups import GroupSpec, parse_group_code, random_element
from .groupstruct import (GraphFrame, compose, group_compose, group_identity,
                          group_invert, phi_map)
from .involutions import (cayley_grass, cayley_matrix, eta_bar, h_gram,
                          is_spacelike, is_w_isotropic, rho_bar, sigma_bar,
                          w_isotropy_defect)
from .matgeom import (FMatrix, condition_number, frob_dist, inverse,
                      matrix_exp, min_eigen_hermitian)
from .metric import distance, isometry_defect
from .symspace import (cartan_split, eta_fixed_component_sample,
                       expected_cartan_dims, frobenius_orthogonality_defect,
                       k_sample, m_sample, table2_audit, unitary_member)

DEFAULT_GROUP_CODES = ("gl_r:2", "gl_c:2", "gl_h:2", "o:1,1", "u:1,1",
                       "sp:1,1", "sp_r:2", "sp_c:2", "o_c:2", "o_star:4")


@dataclass(frozen=True)
class CampaignConfig:
    groups: Tuple[str, ...] = DEFAULT_GROUP_CODES
    trials: int = 20
    seed: int = 0
    tolerances: Tolerances = field(default_factory=Tolerances)

    def validated(self) -> "CampaignConfig":
        if self.trials < 1:
            raise InvalidConfig(f"trials must be >= 1, got {self.trials}")
        if self.seed < 0:
            raise InvalidConfig(f"seed must be >= 0, got {self.seed}")
        if not self.groups:
            raise InvalidConfig("at least one group code is required")
        self.tolerances.validated()
        for code in self.groups:
            parse_group_code(code)
        return self


@dataclass(frozen=True)
class PropertyResult:
    property_id: str
    group: str
    claim: str
    samples: int
    max_defect: float
    tolerance: float
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.max_defect <= self.tolerance

    def to_json(self) -> dict:
        return {
            "id": self.property_id,
            "group": self.group,
            "claim": self.claim,
            "samples": self.samples,
            "max_defect": self.max_defect,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "note": self.note,
        }


@dataclass(frozen=True)
class VerificationReport:
    config: CampaignConfig
    results: Tuple[PropertyResult, ...]

    @property
    def all_pass(self) -> bool:
        return all(r.passed for r in self.results)

    def to_json(self) -> dict:
        tol = self.config.tolerances
        return {
            "config": {
                "groups": list(self.config.groups),
                "trials": self.config.trials,
                "seed": self.config.seed,
                "tolerances": {"rank": tol.rank, "membership": tol.membership,
                               "angle": tol.angle},
            },
            "properties": [r.to_json() for r in self.results],
            "versions": {"grasslie": __version__, "numpy": np.__version__,
                         "scipy": scipy.__version__},
            "all_pass": self.all_pass,
        }

    def to_json_bytes(self) -> bytes:
        return (json.dumps(self.to_json(), sort_keys=True, indent=2)
                + "\n").encode("utf-8")


def sub_seeds(campaign_seed: int, property_id: str, group_code: str,
              count: int) -> List[int]:
    """Deterministic per-(property, group) seed list."""
    entropy = [campaign_seed & 0xFFFFFFFF,
               zlib.crc32(property_id.encode("utf-8")),
               zlib.crc32(group_code.encode("utf-8"))]
    return [int(s) for s in np.random.SeedSequence(entropy).generate_state(count)]


# -- property inventory -------------------------------------------------------
#
# Each check receives (spec, seeds, tolerances) and returns
# (samples, max_defect, note).  Boolean violations bump the defect to 1.0
# so they can never slip under a small tolerance.

_BUMP = 1.0


def _graph_pair(spec: GroupSpec, seed: int):
    g1 = random_element(spec, seed)
    g2 = random_element(spec, seed + 1)
    return g1, g2, graph_embed(g1), graph_embed(g2)


def _check_compose_product(spec, seeds, tol):
    worst = 0.0
    for s in seeds:
        g1, g2, p1, p2 = _graph_pair(spec, s)
        prod = group_compose(spec, p1, p2)
        worst = max(worst, frob_dist(graph_extract(prod.subspace),
                                     g2.mat @ g1.mat))
    return len(seeds), worst, ""


def _check_identity(spec, seeds, tol):
    ident = group_identity(spec)
    worst = 0.0
    for s in seeds:
        _, _, p1, _ = _graph_pair(spec, s)
        left = group_compose(spec, ident, p1)
        right = group_compose(spec, p1, ident)
        worst = max(worst, distance(left.subspace, p1.subspace),
                    distance(right.subspace, p1.subspace))
    return len(seeds), worst, ""


def _check_associativity(spec, seeds, tol):
    worst = 0.0
    for s in seeds:
        g1, g2, p1, p2 = _graph_pair(spec, s)
        p3 = graph_embed(random_element(spec, s + 2))
        left = group_compose(spec, group_compose(spec, p1, p2), p3)
        right = group_compose(spec, p1, group_compose(spec, p2, p3))
        worst = max(worst, distance(left.subspace, right.subspace))
    return len(seeds), worst, ""


def _check_inverse(spec, seeds, tol):
    ident = group_identity(spec)
    worst = 0.0
    for s in seeds:
        _, _, p1, _ = _graph_pair(spec, s)
        inv = group_invert(spec, p1)
        worst = max(worst,
                    distance(group_compose(spec, p1, inv).subspace,
                             ident.subspace),
                    distance(group_invert(spec, inv).subspace, p1.subspace))
    return len(seeds), worst, ""


def _check_isotropy_closure(spec, seeds, tol):
    worst = 0.0
    for s in seeds:
        _, _, p1, p2 = _graph_pair(spec, s)
        worst = max(worst, group_compose(spec, p1, p2).defect(),
                    group_invert(spec, p1).defect())
    return len(seeds), worst, ""


def _check_frame_oracle(spec, seeds, tol):
    """Composition in a random frame matches the projection-map oracle."""
    n = spec.n
    worst = 0.0
    used = 0
    for s in seeds[:3]:
        subs = [random_subspace(spec.field, 2 * n, n, seed=s + i)
                for i in range(5)]
        frame = GraphFrame(subs[0], subs[1], subs[2])
        composed = compose(frame, subs[3], subs[4])
        lhs = phi_map(frame, composed)
        rhs = (phi_map(frame, subs[4])
               @ inverse(phi_map(frame, subs[2]))
               @ phi_map(frame, subs[3]))
        worst = max(worst, frob_dist(lhs, rhs) / max(rhs.norm(), 1.0))
        used += 1
    return used, worst, ""


def _check_involutive(spec, seeds, tol):
    n = spec.n
    worst = 0.0
    for s in seeds:
        l = random_subspace(spec.field, 2 * n, n, seed=s)
        worst = max(worst, distance(rho_bar(rho_bar(l)), l),
                    distance(eta_bar(eta_bar(l)), l),
                    distance(cayley_grass(cayley_grass(l)), l))
        if spec.has_form:
            worst = max(worst, distance(sigma_bar(spec, sigma_bar(spec, l)), l))
    return len(seeds), worst, ""


def _check_commute(spec, seeds, tol):
    worst = 0.0
    for s in seeds:
        l = random_subspace(spec.field, 2 * spec.n, spec.n, seed=s)
        worst = max(worst, distance(rho_bar(sigma_bar(spec, l)),
                                    sigma_bar(spec, rho_bar(l))))
    return len(seeds), worst, ""


def _check_graph_actions(spec, seeds, tol):
    worst = 0.0
    for s in seeds:
        g = random_element(spec, s)
        lg = graph_subspace(g.mat)
        worst = max(worst,
                    distance(rho_bar(lg), graph_subspace(inverse(g.mat.H))),
                    distance(eta_bar(lg), graph_subspace(g.mat.H)))
    return len(seeds), worst, ""


def _check_preserve_isotropy(spec, seeds, tol):
    worst = 0.0
    for s in seeds:
        lg = graph_embed(random_element(spec, s)).subspace
        worst = max(worst, isotropy_defect(spec, rho_bar(lg)),
                    isotropy_defect(spec, eta_bar(lg)),
                    isotropy_defect(spec, sigma_bar(spec, lg)))
    return len(seeds), worst, ""


def _check_rho_fixed_on_unitary(spec, seeds, tol):
    worst = 0.0
    for s in seeds:
        lu = graph_subspace(unitary_member(spec, s))
        worst = max(worst, distance(rho_bar(lu), lu))
    return len(seeds), worst, ""


def _check_rho_moves_noncompact(spec, seeds, tol):
    """exp of a nonzero Hermitian algebra element is never fixed."""
    if cartan_split(spec).dim_m == 0:
        return 0, 0.0, "no noncompact directions"
    margin = 1e-3
    worst = 0.0
    for s in seeds:
        a = m_sample(spec, s)
        nrm = a.norm()
        if nrm < 0.5:
            a = a * (0.5 / max(nrm, 1e-12))
        lg = graph_subspace(matrix_exp(a))
        moved = distance(rho_bar(lg), lg)
        worst = max(worst, max(0.0, margin - moved))
    return len(seeds), worst, ""


def _check_eta_fixed_component(spec, seeds, tol):
    worst = 0.0
    bad = 0
    for s in seeds:
        pt = eta_fixed_component_sample(spec, s)
        worst = max(worst, distance(eta_bar(pt.subspace), pt.subspace),
                    w_isotropy_defect(pt.subspace))
        if min_eigen_hermitian(graph_extract(pt.subspace)) <= 0.0:
            bad += 1
    if bad:
        worst = max(worst, _BUMP)
    return len(seeds), worst, f"nonpositive extractions: {bad}" if bad else ""


def _check_cayley_matrix(spec, seeds, tol):
    worst = 0.0
    used = 0
    skipped = 0
    for s in seeds:
        g = random_element(spec, s)
        shifted = FMatrix.eye(spec.field, spec.n) + g.mat
        if condition_number(shifted) > COND_LIMIT:
            skipped += 1
            continue
        used += 1
        worst = max(worst, distance(cayley_grass(graph_subspace(g.mat)),
                                    graph_subspace(cayley_matrix(g.mat))))
    note = f"skipped {skipped} ill-conditioned samples" if skipped else ""
    return used, worst, note


def _check_cayley_w_equivalence(spec, seeds, tol):
    worst = 0.0
    bad = 0
    for s in seeds:
        pos = eta_fixed_component_sample(spec, s).subspace
        worst = max(worst, w_isotropy_defect(cayley_grass(pos)))
        g = random_element(spec, s)
        skew = g.mat - g.mat.H
        if skew.norm() > 1e-6:
            if is_w_isotropic(cayley_grass(graph_subspace(g.mat))):
                bad += 1
    if bad:
        worst = max(worst, _BUMP)
    note = f"negative controls leaking: {bad}" if bad else ""
    return len(seeds), worst, note


def _check_bounded_realization(spec, seeds, tol):
    worst = 0.0
    bad = 0
    for s in seeds:
        g = random_element(spec, s)
        herm = g.mat @ g.mat.H
        image = cayley_grass(graph_subspace(herm))
        worst = max(worst, w_isotropy_defect(image))
        if not is_spacelike(image):
            bad += 1
        if is_spacelike(cayley_grass(graph_subspace(-herm))):
            bad += 1
    if bad:
        worst = max(worst, _BUMP)
    return len(seeds), worst, f"control failures: {bad}" if bad else ""


def _check_metric_symmetry(spec, seeds, tol):
    worst = 0.0
    for s in seeds:
        x = random_subspace(spec.field, 2 * spec.n, spec.n, seed=s)
        y = random_subspace(spec.field, 2 * spec.n, spec.n, seed=s + 1)
        worst = max(worst, abs(distance(x, y) - distance(y, x)))
    return len(seeds), worst, ""


def _check_metric_triangle(spec, seeds, tol):
    worst = 0.0
    for s in seeds:
        x = random_subspace(spec.field, 2 * spec.n, spec.n, seed=s)
        y = random_subspace(spec.field, 2 * spec.n, spec.n, seed=s + 1)
        z = random_subspace(spec.field, 2 * spec.n, spec.n, seed=s + 2)
        worst = max(worst, distance(x, z) - distance(x, y) - distance(y, z))
    return len(seeds), max(worst, 0.0), ""


def _check_isometries(spec, seeds, tol):
    pairs = [(random_subspace(spec.field, 2 * spec.n, spec.n, seed=s),
              random_subspace(spec.field, 2 * spec.n, spec.n, seed=s + 1))
             for s in seeds]
    worst = max(isometry_defect(rho_bar, pairs),
                isometry_defect(eta_bar, pairs),
                isometry_defect(cayley_grass, pairs))
    if spec.has_form:
        worst = max(worst, isometry_defect(lambda l: sigma_bar(spec, l), pairs))
    return len(pairs), worst, ""


def _check_cartan_dimensions(spec, seeds, tol):
    split = cartan_split(spec)
    exp_g, exp_k, exp_m = expected_cartan_dims(spec)
    defect = float(max(abs(split.dim_g - exp_g), abs(split.dim_k - exp_k),
                       abs(split.dim_m - exp_m),
                       abs(split.dim_g - split.dim_k - split.dim_m)))
    note = f"dims g={split.dim_g} k={split.dim_k} m={split.dim_m}"
    return 1, defect, note


def _check_frobenius_orthogonality(spec, seeds, tol):
    return 1, frobenius_orthogonality_defect(spec), ""


def _check_tangent_charts(spec, seeds, tol):
    """m-directions stay w-isotropic, k-directions stay h-isotropic."""
    split = cartan_split(spec)
    worst = 0.0
    for s in seeds:
        for t in (1e-2, 1e-3):
            if split.dim_m:
                chart = tangent_param(spec, m_sample(spec, s) * t)
                worst = max(worst, w_isotropy_defect(chart))
            if split.dim_k:
                chart = tangent_param(spec, k_sample(spec, s) * t)
                worst = max(worst, h_gram(chart).norm())
    return len(seeds), worst, ""


def _check_equal_intersections(spec, seeds, tol):
    v1 = v1_subspace(spec.field, spec.n)
    v2 = v2_subspace(spec.field, spec.n)
    worst = 0.0
    used = 0
    for s in seeds:
        for k in admissible_strata(spec):
            pt = boundary_sample(spec, k, s)
            d1 = intersection_dim(pt.subspace, v1)
            d2 = intersection_dim(pt.subspace, v2)
            worst = max(worst, float(abs(d1 - k)), float(abs(d2 - k)),
                        pt.defect())
            used += 1
    return used, worst, f"strata 0..{witt_index(spec)}"


def _check_interior_perturbation(spec, seeds, tol):
    cap = witt_index(spec)
    if cap == 0:
        return 0, 0.0, "no boundary strata"
    v1 = v1_subspace(spec.field, spec.n)
    v2 = v2_subspace(spec.field, spec.n)
    worst = 0.0
    for s in seeds:
        sample = sample_stratum(spec, cap, s)
        inner = sample.interior_point(1e-3)
        dims = (intersection_dim(inner.subspace, v1)
                + intersection_dim(inner.subspace, v2))
        worst = max(worst, float(dims), inner.defect())
    return len(seeds), worst, ""


def _check_stratum_cap(spec, seeds, tol):
    cap = witt_index(spec)
    try:
        sample_stratum(spec, cap + 1, seeds[0])
    except NoIsotropicVectors:
        return 1, 0.0, f"k = {cap + 1} correctly refused"
    return 1, _BUMP, f"k = {cap + 1} unexpectedly constructed"


@dataclass(frozen=True)
class PropertyCheck:
    property_id: str
    claim: str
    fn: Callable
    tolerance_of: Callable[[Tolerances], float]
    needs_form: bool = False
    gl_only: bool = False

    def applicable(self, spec: GroupSpec) -> bool:
        if self.needs_form and not spec.has_form:
            return False
        if self.gl_only and not spec.is_gl:
            return False
        return True


PROPERTY_INVENTORY: Tuple[PropertyCheck, ...] = (
    PropertyCheck(
        "group_law.compose_matches_product",
        "extracting the composed graph point gives the matrix product g2 g1",
        _check_compose_product, lambda t: t.membership),
    PropertyCheck(
        "group_law.identity",
        "the diagonal point is a two-sided identity for composition",
        _check_identity, lambda t: 10 * t.membership),
    PropertyCheck(
        "group_law.associativity",
        "composition of graph points is associative",
        _check_associativity, lambda t: 10 * t.membership),
    PropertyCheck(
        "group_law.inverse",
        "inversion is a two-sided inverse and is involutive",
        _check_inverse, lambda t: 10 * t.membership),
    PropertyCheck(
        "group_law.isotropy_closure",
        "composition and inversion keep points isotropic",
        _check_isotropy_closure, lambda t: t.membership, needs_form=True),
    PropertyCheck(
        "group_law.frame_oracle",
        "normal-form composition matches the projection-map oracle in random frames",
        _check_frame_oracle, lambda t: 10 * t.membership, gl_only=True),
    PropertyCheck(
        "involution.involutive",
        "the complement involutions and the Cayley map square to the identity",
        _check_involutive, lambda t: t.angle),
    PropertyCheck(
        "involution.commute_rho_sigma",
        "the Cartan and doubled-form complements commute",
        _check_commute, lambda t: t.angle, needs_form=True),
    PropertyCheck(
        "involution.graph_actions",
        "complements act on graphs by g -> (g*)^{-1} and g -> g*",
        _check_graph_actions, lambda t: t.angle),
    PropertyCheck(
        "involution.preserve_isotropy",
        "involutions map isotropic points to isotropic points",
        _check_preserve_isotropy, lambda t: t.membership, needs_form=True),
    PropertyCheck(
        "involution.rho_fixed_on_unitary",
        "graphs of unitary members are fixed by the Cartan complement",
        _check_rho_fixed_on_unitary, lambda t: t.angle),
    PropertyCheck(
        "involution.rho_moves_noncompact",
        "graphs of nonunitary members are moved by the Cartan complement",
        _check_rho_moves_noncompact, lambda t: 0.0),
    PropertyCheck(
        "involution.eta_fixed_component",
        "graphs of g g* are transpose-fixed, w-isotropic, positive definite",
        _check_eta_fixed_component, lambda t: t.angle),
    PropertyCheck(
        "cayley.matches_matrix",
        "the subspace Cayley map restricts to (I-g)(I+g)^{-1} on graphs",
        _check_cayley_matrix, lambda t: t.angle),
    PropertyCheck(
        "cayley.w_equivalence",
        "w-isotropy is preserved and reflected by the Cayley map",
        _check_cayley_w_equivalence, lambda t: t.membership),
    PropertyCheck(
        "cayley.bounded_realization",
        "Cayley images of positive graphs are w-isotropic and spacelike",
        _check_bounded_realization, lambda t: t.membership),
    PropertyCheck(
        "metric.symmetry",
        "the principal-angle distance is exactly symmetric",
        _check_metric_symmetry, lambda t: 0.0),
    PropertyCheck(
        "metric.triangle",
        "the principal-angle distance satisfies the triangle inequality",
        _check_metric_triangle, lambda t: t.angle / 100),
    PropertyCheck(
        "metric.isometries",
        "complement involutions and the Cayley map preserve distances",
        _check_isometries, lambda t: t.angle),
    PropertyCheck(
        "symspace.cartan_dimensions",
        "numeric Lie algebra splitting dimensions match closed forms",
        _check_cartan_dimensions, lambda t: 0.0),
    PropertyCheck(
        "symspace.frobenius_orthogonality",
        "the compact and noncompact algebra parts are trace-orthogonal",
        _check_frobenius_orthogonality, lambda t: t.angle / 100),
    PropertyCheck(
        "symspace.tangent_charts",
        "tangent charts along the splitting keep the matching form zero",
        _check_tangent_charts, lambda t: t.membership / 10000),
    PropertyCheck(
        "boundary.equal_intersections",
        "sampled boundary points meet both distinguished halves equally",
        _check_equal_intersections, lambda t: t.membership),
    PropertyCheck(
        "boundary.interior_perturbation",
        "small perturbations push boundary points back to trivial intersections",
        _check_interior_perturbation, lambda t: t.membership),
    PropertyCheck(
        "boundary.stratum_cap",
        "strata beyond the isotropy cap are refused",
        _check_stratum_cap, lambda t: 0.0),
)


def run_campaign(config: CampaignConfig) -> VerificationReport:
    config = config.validated()
    results = []
    for code in config.groups:
        spec = parse_group_code(code)
        for check in PROPERTY_INVENTORY:
            if not check.applicable(spec):
                continue
            seeds = sub_seeds(config.seed, check.property_id, code,
                              config.trials)
            samples, defect, note = check.fn(spec, seeds, config.tolerances)
            results.append(PropertyResult(
                property_id=check.property_id,
                group=code,
                claim=check.claim,
                samples=samples,
                max_defect=float(defect),
                tolerance=float(check.tolerance_of(config.tolerances)),
                note=note,
            ))
    results.sort(key=lambda r: (r.property_id, r.group))
    return VerificationReport(config, tuple(results))


def write_report(report: VerificationReport, path: str) -> None:
    with open(path, "wb") as fh:
        fh.write(report.to_json_bytes())


# -- CSV emitters -------------------------------------------------------------

TABLE2_HEADER = ["family", "size", "dim_g", "dim_k", "dim_m",
                 "expected_k", "expected_m", "pass"]

STRATA_HEADER = ["family", "k", "dim_v1", "dim_v2", "isotropy_defect", "note"]


def emit_table2(max_n: int, path: str) -> List[dict]:
    """Write the dimension audit CSV; returns the rows as dicts."""
    rows = []
    for row in table2_audit(max_n):
        rows.append({
            "family": row.spec.code(),
            "size": row.spec.n,
            "dim_g": row.dim_g,
            "dim_k": row.dim_k,
            "dim_m": row.dim_m,
            "expected_k": row.expected_k,
            "expected_m": row.expected_m,
            "pass": str(row.passed).lower(),
        })
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=TABLE2_HEADER)
        writer.writeheader()
        writer.writerows(rows)
    return rows


def emit_strata(spec: GroupSpec, seed: int, path: str) -> List[dict]:
    """Write one row per admissible stratum; returns the rows as dicts."""
    v1 = v1_subspace(spec.field, spec.n)
    v2 = v2_subspace(spec.field, spec.n)
    rows = []
    for k in admissible_strata(spec):
        pt = boundary_sample(spec, k, seed)
        note = ""
        if k == 0 and witt_index(spec) == 0:
            note = "no boundary"
        rows.append({
            "family": spec.code(),
            "k": k,
            "dim_v1": intersection_dim(pt.subspace, v1),
            "dim_v2": intersection_dim(pt.subspace, v2),
            "isotropy_defect": repr(pt.defect()) if spec.has_form else "",
            "note": note,
        })
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=STRATA_HEADER)
        writer.writeheader()
        writer.writerows(rows)
    return rows
