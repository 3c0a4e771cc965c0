"""Multiple point spaces of corank one map germs.

A germ (C^n, 0) -> (C^(n+1), 0) of corank one is taken in the normal form

    f(x_1, .., x_{n-1}, z) = (x_1, .., x_{n-1}, p(x, z), q(x, z))

with p, q vanishing at the origin to second order in z. Its k-th multiple
point space lives in the source coordinates together with k copies
z_1, .., z_k of the distinguished variable, cut out by the divided
differences of p and q over growing node prefixes. Identifying nodes
according to a partition of k gives the spaces that stratify how sheets
collide; the identified generators are confluent divided differences,
which is the same thing as substituting repeated node variables into the
distinct ones.

The headline invariants for n = 3 are collected by invariant_tuple: Milnor
numbers of the double and triple point spaces and of their partition
slices, emptiness indicators, and the quadruple point count.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BadParamsError,
    NotCorankOneError,
    NotNormalFormError,
    QuadrupleOrbitError,
    SingchiError,
)
from .milnor import MilnorResult, icis_milnor, point_count
from .poly import Polynomial, divided_difference, parse_poly
from .standard_basis import (
    DEFAULT_MAX_STEPS,
    IdealPresentation,
    RATIONAL,
    is_unit_ideal,
)


@dataclass(frozen=True)
class MapGerm:
    """A corank one candidate in normal form coordinates.

    source_vars lists the source coordinates with the distinguished
    variable last; components has length len(source_vars) + 1.
    """

    source_vars: tuple
    components: tuple

    @property
    def dim(self) -> int:
        return len(self.source_vars)

    @property
    def hyperplane_part(self) -> Polynomial:
        return self.components[-2]

    @property
    def deep_part(self) -> Polynomial:
        return self.components[-1]


def map_germ(source_vars, component_texts) -> MapGerm:
    source_vars = tuple(source_vars)
    comps = tuple(
        c if isinstance(c, Polynomial) else parse_poly(c, source_vars)
        for c in component_texts
    )
    return MapGerm(source_vars, comps)


def validate_corank1(f: MapGerm) -> None:
    """Check the normal form outlined in the module docstring."""
    n = f.dim
    if n < 2:
        raise NotNormalFormError("need at least two source variables")
    if len(f.components) != n + 1:
        raise NotNormalFormError(
            f"expected {n + 1} components for a map from {n}-space, got {len(f.components)}"
        )
    for i, v in enumerate(f.source_vars[:-1]):
        expected = Polynomial.variable(v, f.source_vars)
        if f.components[i] != expected:
            raise NotNormalFormError(
                f"component {i} must be the coordinate {v!r}, got {f.components[i]}"
            )
    z = f.source_vars[-1]
    for g in (f.hyperplane_part, f.deep_part):
        if g.constant_term():
            raise NotNormalFormError(f"component {g} does not vanish at the origin")
    for g in (f.hyperplane_part, f.deep_part):
        lin = g.partial(z).constant_term()
        if lin:
            raise NotCorankOneError(
                f"component {g} is regular in {z!r} at the origin; the germ has corank 0"
            )


def _node_names(f: MapGerm, k: int) -> tuple:
    z = f.source_vars[-1]
    names = tuple(f"{z}{i}" for i in range(1, k + 1))
    clash = set(names) & set(f.source_vars)
    if clash:
        raise BadParamsError(f"node names {sorted(clash)} collide with source variables")
    return names


def multiple_point_ideal(f: MapGerm, k: int) -> IdealPresentation:
    """The k-th multiple point space ideal, k >= 2.

    Generators are the divided differences of the two nonlinear
    components over the node prefixes (z_1..z_j) for j = 2..k, giving
    2(k-1) generators in the x variables plus k node variables.
    """
    validate_corank1(f)
    if k < 2:
        raise BadParamsError("multiple point spaces need k >= 2")
    nodes = _node_names(f, k)
    ring = f.source_vars[:-1] + nodes
    z = f.source_vars[-1]
    gens = []
    for j in range(2, k + 1):
        for g in (f.hyperplane_part, f.deep_part):
            dd = divided_difference(g, z, nodes[:j])
            gens.append(dd.with_ring(ring))
    return IdealPresentation(ring, tuple(gens))


def _check_partition(partition, k) -> tuple:
    parts = tuple(sorted(int(m) for m in partition))
    if not parts or parts[0] < 1 or sum(parts) != k:
        raise BadParamsError(f"{partition} is not a partition of {k}")
    return parts


def partition_restricted_ideal(f: MapGerm, k: int, partition) -> IdealPresentation:
    """The k-th multiple point space with nodes identified by blocks.

    The parts are sorted ascending and then name consecutive blocks of
    nodes; within a block every node is identified with the block's first
    one. Generators are the same divided difference prefixes as for the
    full space, now confluent in the repeated nodes. Sorting pins down one
    representative; any other block layout differs only by renaming the
    surviving variables.
    """
    validate_corank1(f)
    if k < 2:
        raise BadParamsError("multiple point spaces need k >= 2")
    parts = _check_partition(partition, k)
    nodes = _node_names(f, k)
    identified = []
    survivors = []
    pos = 0
    for size in parts:
        first = nodes[pos]
        survivors.append(first)
        identified.extend([first] * size)
        pos += size
    ring = f.source_vars[:-1] + tuple(survivors)
    z = f.source_vars[-1]
    gens = []
    for j in range(2, k + 1):
        for g in (f.hyperplane_part, f.deep_part):
            dd = divided_difference(g, z, identified[:j])
            gens.append(dd.with_ring(ring))
    return IdealPresentation(ring, tuple(gens))


def multiple_point_indicator(f: MapGerm, k: int) -> bool:
    """Whether the k-th multiple point space passes through the origin."""
    return not is_unit_ideal(multiple_point_ideal(f, k))


@dataclass(frozen=True)
class InvariantTuple:
    """The n = 3 multiple point invariants feeding the Euler formulas."""

    mu_d2: int
    mu_d2h: int
    mu_d3: int
    mu_d3h1: int
    d2_nonempty: bool
    d3_nonempty: bool
    d4_nonempty: bool
    quad_points: int
    routes: tuple = ()  # ((space, route), ...) audit of how each mu was obtained

    def as_dict(self) -> dict:
        return {
            "mu_d2": self.mu_d2,
            "mu_d2h": self.mu_d2h,
            "mu_d3": self.mu_d3,
            "mu_d3h1": self.mu_d3h1,
            "d2_nonempty": self.d2_nonempty,
            "d3_nonempty": self.d3_nonempty,
            "d4_nonempty": self.d4_nonempty,
            "quad_points": self.quad_points,
            "routes": {name: route for name, route in self.routes},
        }


def invariant_tuple(
    f: MapGerm,
    seed: int = 1,
    field=RATIONAL,
    max_steps: int = DEFAULT_MAX_STEPS,
) -> InvariantTuple:
    """All multiple point invariants of a germ (C^3, 0) -> (C^4, 0)."""
    validate_corank1(f)
    if f.dim != 3:
        raise BadParamsError(f"invariant tuple is defined for 3-dimensional sources, got {f.dim}")

    def mu(space: str, I: IdealPresentation) -> MilnorResult:
        try:
            return icis_milnor(I, seed=seed, field=field, max_steps=max_steps)
        except SingchiError as exc:
            raise type(exc)(f"{space}: {exc}") from exc

    d2 = multiple_point_ideal(f, 2)
    d2h = partition_restricted_ideal(f, 2, (2,))
    d3 = multiple_point_ideal(f, 3)
    d3h1 = partition_restricted_ideal(f, 3, (1, 2))
    d4 = multiple_point_ideal(f, 4)

    r_d2 = mu("double points", d2)
    r_d2h = mu("diagonal double points", d2h)
    r_d3 = mu("triple points", d3)
    r_d3h1 = mu("triple points with two nodes identified", d3h1)
    try:
        ordered_quads = point_count(d4, field=field, max_steps=max_steps)
    except SingchiError as exc:
        raise type(exc)(f"quadruple points: {exc}") from exc
    # The quadruple point scheme carries a free action permuting the four
    # node coordinates, so the ordered count is 24 per actual point.
    if ordered_quads % 24 != 0:
        raise QuadrupleOrbitError(
            f"quadruple points: ordered count {ordered_quads} is not a multiple of 24"
        )
    return InvariantTuple(
        mu_d2=r_d2.mu,
        mu_d2h=r_d2h.mu,
        mu_d3=r_d3.mu,
        mu_d3h1=r_d3h1.mu,
        d2_nonempty=not is_unit_ideal(d2),
        d3_nonempty=not is_unit_ideal(d3),
        d4_nonempty=not is_unit_ideal(d4),
        quad_points=ordered_quads // 24,
        routes=(
            ("d2", r_d2.route),
            ("d2h", r_d2h.route),
            ("d3", r_d3.route),
            ("d3h1", r_d3h1.route),
        ),
    )
