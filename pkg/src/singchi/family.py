"""One-parameter families of corank one germs and numerical constancy.

An unfolding deforms the two nonlinear components of a germ with a
parameter while keeping the origin fixed for every parameter value.
Whitney equisingularity of the family's image is controlled by numerical
invariants staying constant along the parameter axis; the computable part
of that hypothesis is the invariant tuple of each specialized germ. This
module samples the parameter at a handful of rational values, compares
the tuples, and reports exactly what varied.

A sampled check is deliberately modest: constancy at finitely many
values, combined with upper semicontinuity of the Milnor numbers
involved, is strong evidence but not a proof for generic parameters, and
a germ-at-origin computation cannot see instabilities that move away
from the origin. The verdict carries fixed caveat strings so reports
never overstate their scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BadParamsError, NotNormalFormError, SingchiError
from .euler import chi_mf_image, image_milnor_number
from .multiple_points import InvariantTuple, MapGerm, invariant_tuple, validate_corank1
from .poly import Polynomial, parse_poly, substitute
from .standard_basis import DEFAULT_MAX_STEPS, RATIONAL

DEFAULT_SAMPLES = (Fraction(0), Fraction(1, 3), Fraction(-1), Fraction(7, 5))

CAVEATS = (
    "constancy is sampled at finitely many parameter values, not proved for generic parameters",
    "all computations are germs at the origin; instabilities away from the origin are not seen",
    "geometric unfolding conditions (good or excellent unfolding, stratification by stable type) are assumed, not verified",
)

SCOPE = "numerical hypotheses (computable part)"

_COMPARED_FIELDS = (
    "mu_d2",
    "mu_d2h",
    "mu_d3",
    "mu_d3h1",
    "d2_nonempty",
    "d3_nonempty",
    "d4_nonempty",
    "quad_points",
)


@dataclass(frozen=True)
class Unfolding:
    """A one-parameter deformation, parameter listed separately and last."""

    source_vars: tuple
    parameter: str
    components: tuple

    @property
    def dim(self) -> int:
        return len(self.source_vars)


def unfolding(source_vars, parameter: str, component_texts) -> Unfolding:
    source_vars = tuple(source_vars)
    if parameter in source_vars:
        raise BadParamsError(f"parameter {parameter!r} collides with a source variable")
    ring = source_vars + (parameter,)
    comps = tuple(
        c.with_ring(ring) if isinstance(c, Polynomial) else parse_poly(c, ring)
        for c in component_texts
    )
    return Unfolding(source_vars, parameter, comps)


def validate_unfolding(F: Unfolding) -> None:
    """Check that F preserves the origin and specializes to a valid germ.

    Origin preserving means every component vanishes identically on the
    parameter axis, so each specialization is again a germ at the origin.
    The parameter-zero member must pass the corank one normal form check.
    """
    zero_at = {v: Fraction(0) for v in F.source_vars}
    for comp in F.components:
        on_axis = substitute(comp, zero_at)
        if not on_axis.is_zero:
            raise NotNormalFormError(
                f"component {comp} does not vanish identically on the parameter axis"
            )
    validate_corank1(specialize(F, Fraction(0)))


def specialize(F: Unfolding, t0) -> MapGerm:
    """The family member at one parameter value, validated as a germ."""
    t0 = Fraction(t0)
    comps = tuple(
        substitute(c, {F.parameter: t0}).with_ring(F.source_vars) for c in F.components
    )
    germ = MapGerm(F.source_vars, comps)
    validate_corank1(germ)
    return germ


@dataclass(frozen=True)
class FamilySample:
    """One parameter value's worth of invariants, or the failure there."""

    t_value: Fraction
    invariants: InvariantTuple | None
    mu_image: int | None
    chi_mf: int | None
    error: str | None

    def as_dict(self) -> dict:
        return {
            "t": str(self.t_value),
            "invariants": None if self.invariants is None else self.invariants.as_dict(),
            "mu_image": self.mu_image,
            "chi_mf": self.chi_mf,
            "error": self.error,
        }


@dataclass(frozen=True)
class FamilyVerdict:
    samples: tuple
    constant: bool
    certificate: tuple
    scope: str = SCOPE
    caveats: tuple = CAVEATS

    def as_dict(self) -> dict:
        return {
            "samples": [s.as_dict() for s in self.samples],
            "constant": self.constant,
            "certificate": list(self.certificate),
            "scope": self.scope,
            "caveats": list(self.caveats),
        }


def family_check(
    F: Unfolding,
    t_values=None,
    seed: int = 1,
    field=RATIONAL,
    max_steps: int = DEFAULT_MAX_STEPS,
) -> FamilyVerdict:
    """Compare invariant tuples across parameter samples.

    The verdict is constant exactly when every sample computed cleanly
    and all tuples agree field by field. The certificate lists which
    fields varied (with their sampled values) or which samples failed;
    it is empty only for a constant verdict. Sample order does not
    influence the verdict or the certificate contents.
    """
    validate_unfolding(F)
    if F.dim != 3:
        raise BadParamsError(
            f"family comparison needs a 3-dimensional source, got {F.dim}"
        )
    values = DEFAULT_SAMPLES if t_values is None else tuple(Fraction(v) for v in t_values)
    if Fraction(0) not in values:
        raise BadParamsError("parameter samples must include 0, the germ being deformed")
    if len({v for v in values if v != 0}) < 2:
        raise BadParamsError("need at least two nonzero parameter samples")

    samples = []
    for t0 in values:
        try:
            germ = specialize(F, t0)
            t = invariant_tuple(germ, seed=seed, field=field, max_steps=max_steps)
            sample = FamilySample(t0, t, image_milnor_number(t), chi_mf_image(t), None)
        except SingchiError as exc:
            sample = FamilySample(t0, None, None, None, f"{type(exc).__name__}: {exc}")
        samples.append(sample)

    certificate = []
    for s in sorted(samples, key=lambda s: s.t_value):
        if s.error is not None:
            certificate.append(f"sample at t={s.t_value} failed: {s.error}")
    good = [s for s in samples if s.error is None]
    if good:
        for field_name in _COMPARED_FIELDS:
            values_seen = {getattr(s.invariants, field_name) for s in good}
            if len(values_seen) > 1:
                by_t = ", ".join(
                    f"t={s.t_value}: {getattr(s.invariants, field_name)}"
                    for s in sorted(good, key=lambda s: s.t_value)
                )
                certificate.append(f"{field_name} varies ({by_t})")
    constant = not certificate and bool(good)
    return FamilyVerdict(tuple(samples), constant, tuple(certificate))
