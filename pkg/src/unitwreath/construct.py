"""Constructive wreath-section pipeline for the normalized unit group.

Given a finite non-abelian 2-group G with cyclic derived subgroup and a
central involution z outside it, this module builds the unit
h = 1 + b(1+z), its conjugate orbit under a, the elementary abelian base
group X the orbit generates, and the quotient of <X, a> by <a^(2^s)>, then
verifies that quotient is the regular wreath product C2 wr C_{2^s}.
Every step is recorded as a named boolean check.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations

from . import oracle
from .grpalg import AlgebraElement, GroupAlgebra, conjugate_unit, unit_order
from .oracle import TableGroup, bfs_closure, isomorphic_small, reference_wreath
from .pcgroup import FiniteGroup

CHECK_NAMES = (
    "orbit-closed-form",
    "orbit-orders",
    "pairwise-commuting",
    "subset-products-nontrivial",
    "kernel-central",
    "quotient-order",
    "base-normal-elem-abelian",
    "top-order",
    "regular-shift-action",
    "complement-trivial-intersection",
    "oracle-isomorphism",
)

REASON_ABELIAN = "abelian"
REASON_NOT_CYCLIC = "derived-not-cyclic"
REASON_NO_Z = "no-central-involution-outside-derived"


class NoWitnessError(Exception):
    """No (b, a) pair satisfies the witness side conditions."""


class ConstructionError(Exception):
    """A verification step falsified the construction for this witness."""


@dataclass(frozen=True)
class HypothesisReport:
    derived_order: int
    derived_cyclic: bool
    nonabelian: bool
    center_order: int
    candidates_z: tuple[int, ...]
    passed: bool
    failure_reason: str | None

    def to_dict(self, group: FiniteGroup) -> dict:
        return {
            "group": group.name,
            "order": group.order,
            "nonabelian": self.nonabelian,
            "derived_order": self.derived_order,
            "derived_cyclic": self.derived_cyclic,
            "center_order": self.center_order,
            "candidates_z": [group.word_str(x) for x in self.candidates_z],
            "pass": self.passed,
            "failure_reason": self.failure_reason,
        }


@dataclass(frozen=True)
class Witness:
    a: int
    b: int
    z: int
    s: int
    k: int

    def to_dict(self, group: FiniteGroup) -> dict:
        return {
            "a": group.word_str(self.a),
            "b": group.word_str(self.b),
            "z": group.word_str(self.z),
            "s": self.s,
            "k": self.k,
        }


@dataclass(frozen=True)
class BaseOrbit:
    units: tuple[AlgebraElement, ...]


@dataclass
class SectionReport:
    witness: Witness
    base_order: int
    ambient_order: int
    kernel_order: int
    quotient_order: int
    checks: dict[str, bool] = field(default_factory=dict)
    detail: str | None = None

    @property
    def verdict(self) -> bool:
        return bool(self.checks) and all(self.checks.values())

    def to_dict(self, group: FiniteGroup) -> dict:
        return {
            "group": group.name,
            "witness": self.witness.to_dict(group),
            "base_order": self.base_order,
            "ambient_order": self.ambient_order,
            "kernel_order": self.kernel_order,
            "quotient_order": self.quotient_order,
            "checks": dict(self.checks),
            "verdict": "pass" if self.verdict else "fail",
            "detail": self.detail,
        }


class QuotientGroup:
    """Quotient of an enumerated unit subgroup by a central subgroup.

    Cosets are frozensets of unit bitsets; the canonical representative of
    a coset minimizes (support size, bitset value).  Multiplication is
    representative product followed by coset lookup.
    """

    def __init__(self, ambient: list[AlgebraElement], kernel: list[AlgebraElement]):
        self.algebra = ambient[0].algebra
        kernel_bits = [u.bits for u in kernel]
        conv = self.algebra._conv
        coset_of: dict[int, int] = {}
        cosets: list[frozenset[int]] = []
        for u in ambient:
            if u.bits in coset_of:
                continue
            members = frozenset(conv.convolve(u.bits, kb) for kb in kernel_bits)
            idx = len(cosets)
            cosets.append(members)
            for m in members:
                coset_of[m] = idx
        # reorder by canonical representative for determinism
        reps = [min(c, key=lambda bits: (bits.bit_count(), bits)) for c in cosets]
        perm = sorted(range(len(cosets)), key=lambda i: (reps[i].bit_count(), reps[i]))
        self.cosets = [cosets[i] for i in perm]
        self.reps = [reps[i] for i in perm]
        self.coset_of = {}
        for idx, members in enumerate(self.cosets):
            for m in members:
                self.coset_of[m] = idx
        self.order = len(self.cosets)

    def coset_index(self, u: AlgebraElement) -> int:
        return self.coset_of[u.bits]

    def mul(self, i: int, j: int) -> int:
        return self.coset_of[self.algebra._conv.convolve(self.reps[i], self.reps[j])]

    def to_table_group(self) -> TableGroup:
        table = [[self.mul(i, j) for j in range(self.order)] for i in range(self.order)]
        return TableGroup(table, labels=self.reps)


def check_hypotheses(group: FiniteGroup) -> HypothesisReport:
    """Test the theorem's hypotheses and list candidate central involutions."""
    nonabelian = not group.is_abelian()
    derived = group.derived_subgroup()
    cyclic, _ = group.is_cyclic(derived)
    center = group.center()
    derived_set = set(derived.elements)
    candidates = tuple(
        x
        for x in center.elements
        if group.element_order(x) == 2 and x not in derived_set
    )
    reason = None
    if not nonabelian:
        reason = REASON_ABELIAN
    elif not cyclic:
        reason = REASON_NOT_CYCLIC
    elif not candidates:
        reason = REASON_NO_Z
    return HypothesisReport(
        derived_order=derived.order,
        derived_cyclic=cyclic,
        nonabelian=nonabelian,
        center_order=center.order,
        candidates_z=candidates,
        passed=reason is None,
        failure_reason=reason,
    )


def _witness_invariants(group: FiniteGroup, b: int, a: int, derived_order: int):
    """Commutator orbit of (b, a^i) when the pair qualifies, else None."""
    c = group.commutator(b, a)
    if group.element_order(c) != derived_order:
        return None
    s = derived_order.bit_length() - 1
    if group.commutator(b, group.power(a, 1 << s)) != 0:
        return None
    comms = [group.commutator(b, group.power(a, i)) for i in range(1 << s)]
    if len(set(comms)) != 1 << s:
        return None
    return comms


def select_witness(
    group: FiniteGroup,
    report: HypothesisReport,
    override: tuple[int, int, int] | None = None,
) -> Witness:
    """First (b, a) pair in canonical order meeting all side conditions.

    The conditions: (b, a) generates the derived subgroup, (b, a^(2^s)) = 1,
    and the 2^s commutators (b, a^i) are pairwise distinct.  z is the first
    candidate central involution.  An override (a, b, z) is validated
    against the same conditions.
    """
    if not report.passed:
        raise ValueError("select_witness requires a hypothesis-passing group")
    s = report.derived_order.bit_length() - 1

    if override is not None:
        a, b, z = override
        if z not in report.candidates_z:
            raise NoWitnessError(
                f"override z = {group.word_str(z)} is not a central involution "
                "outside the derived subgroup"
            )
        if _witness_invariants(group, b, a, report.derived_order) is None:
            raise NoWitnessError(
                f"override pair (b, a) = ({group.word_str(b)}, {group.word_str(a)}) "
                "violates the witness side conditions"
            )
        return Witness(a=a, b=b, z=z, s=s,
                       k=group.element_order(a).bit_length() - 1)

    for b in group.elements():
        for a in group.elements():
            if _witness_invariants(group, b, a, report.derived_order) is not None:
                return Witness(
                    a=a,
                    b=b,
                    z=report.candidates_z[0],
                    s=s,
                    k=group.element_order(a).bit_length() - 1,
                )
    raise NoWitnessError(
        f"{group.name}: no (b, a) pair generates the derived subgroup with "
        f"(b, a^(2^{s})) = 1 and 2^{s} distinct commutators"
    )


def build_orbit(algebra: GroupAlgebra, w: Witness) -> BaseOrbit:
    """The conjugates h^(a^i) of h = 1 + b(1+z), with closed-form checks."""
    m = 1 << w.s
    units = []
    u = _closed_form_unit(algebra, w, 0)
    for i in range(m):
        expected = _closed_form_unit(algebra, w, i)
        if u != expected:
            raise ConstructionError(
                f"orbit closed form fails at i={i}: got {u.words()}, "
                f"expected {expected.words()}"
            )
        units.append(u)
        u = conjugate_unit(u, w.a)
    if u != units[0]:
        raise ConstructionError("orbit does not wrap around under conjugation by a")
    return BaseOrbit(units=tuple(units))


def _closed_form_unit(algebra: GroupAlgebra, w: Witness, i: int) -> AlgebraElement:
    """1 + b * (b, a^i) * (1 + z) as an explicit 3-element support."""
    group = algebra.group
    comm = group.commutator(w.b, group.power(w.a, i))
    bc = group.multiply(w.b, comm)
    return algebra.from_support((0, bc, group.multiply(bc, w.z)))


def verify_base_group(orbit: BaseOrbit, cap: int = oracle.DEFAULT_CAP):
    """Check the orbit generates an elementary abelian direct product X.

    Returns (X, checks): X as a sorted list of units, checks a dict of the
    three orbit-level booleans.  Raises ConstructionError on any failure,
    naming the violating elements.
    """
    units = orbit.units
    checks = {}
    bad = [i for i, u in enumerate(units) if unit_order(u) != 2]
    checks["orbit-orders"] = not bad
    if bad:
        raise ConstructionError(f"orbit members at positions {bad} are not of order 2")
    noncomm = [
        (i, j)
        for i, j in combinations(range(len(units)), 2)
        if units[i] * units[j] != units[j] * units[i]
    ]
    checks["pairwise-commuting"] = not noncomm
    if noncomm:
        raise ConstructionError(f"orbit members at {noncomm} do not commute")
    one = units[0].algebra.one()
    for r in range(1, len(units) + 1):
        for subset in combinations(range(len(units)), r):
            prod = one
            for i in subset:
                prod = prod * units[i]
            if prod.is_one() or prod.support_size() != 1 + 2 * r:
                checks["subset-products-nontrivial"] = False
                raise ConstructionError(
                    f"sub-product over positions {subset} degenerates: {prod.words()}"
                )
    checks["subset-products-nontrivial"] = True
    base = bfs_closure(units, cap=cap)
    if len(base) != 1 << len(units):
        raise ConstructionError(
            f"|X| = {len(base)}, expected {1 << len(units)}"
        )
    return base, checks


def build_section(
    algebra: GroupAlgebra,
    w: Witness,
    base: list[AlgebraElement],
    orbit: BaseOrbit,
    use_oracle: bool = True,
    cap: int = oracle.DEFAULT_CAP,
    base_checks: dict[str, bool] | None = None,
) -> SectionReport:
    """Quotient <X, a> / <a^(2^s)> and its wreath-product verification."""
    group = algebra.group
    m = 1 << w.s
    a_emb = algebra.embed(w.a)
    ambient = bfs_closure(list(base) + [a_emb], cap=cap)
    a_pow = algebra.embed(group.power(w.a, m))
    kernel = bfs_closure([a_pow], cap=cap)

    checks = dict(base_checks or {})
    checks.setdefault("orbit-closed-form", True)  # build_orbit already enforced it
    checks["kernel-central"] = all(
        n * y == y * n for n in kernel for y in ambient
    )

    quotient = QuotientGroup(ambient, kernel)
    report = SectionReport(
        witness=w,
        base_order=len(base),
        ambient_order=len(ambient),
        kernel_order=len(kernel),
        quotient_order=quotient.order,
    )
    checks["quotient-order"] = (
        quotient.order == 1 << ((1 << w.s) + w.s)
        and len(ambient) == (1 << (1 << w.s)) * (1 << w.k)
        and len(kernel) == 1 << (w.k - w.s)
    )

    table = quotient.to_table_group()
    images = [quotient.coset_index(u) for u in orbit.units]
    top = quotient.coset_index(a_emb)
    checks.update(verify_wreath(table, images, top, w.s, use_oracle=use_oracle))
    report.checks = checks
    return report


def verify_wreath(
    group: TableGroup,
    images: list[int],
    top: int,
    s: int,
    use_oracle: bool = True,
) -> dict[str, bool]:
    """Structural characterization of the regular wreath product C2 wr C_{2^s}.

    Works on any multiplication-table group: the quotient built by
    build_section, or the reference coordinate model checked against itself.
    """
    m = 1 << s
    checks = {}
    base = group.closure(images)
    top_cyc = group.closure([top])

    elem_abelian = all(group.mul(x, x) == group.identity for x in base) and all(
        group.mul(x, y) == group.mul(y, x) for x in base for y in base
    )
    normal = all(
        group.conjugate(x, g) in base for x in base for g in images + [top]
    )
    checks["base-normal-elem-abelian"] = (
        len(base) == 1 << m and elem_abelian and normal
    )
    checks["top-order"] = group.order_of(top) == m
    checks["regular-shift-action"] = all(
        group.conjugate(images[i], top) == images[(i + 1) % m] for i in range(m)
    )
    checks["complement-trivial-intersection"] = (
        base & top_cyc == {group.identity} and len(base) * len(top_cyc) == group.order
    )
    if use_oracle and s <= 2:
        checks["oracle-isomorphism"] = isomorphic_small(
            group, reference_wreath(s).to_table_group()
        )
    return checks


@dataclass
class PipelineResult:
    group: FiniteGroup
    hypothesis: HypothesisReport
    witness: Witness | None = None
    orbit: BaseOrbit | None = None
    section: SectionReport | None = None
    error: str | None = None

    @property
    def verdict(self) -> bool:
        return self.section is not None and self.section.verdict

    def to_dict(self) -> dict:
        out = {
            "group": self.group.name,
            "order": self.group.order,
            "hypothesis": self.hypothesis.to_dict(self.group),
        }
        if self.witness is not None:
            out["witness"] = self.witness.to_dict(self.group)
        if self.orbit is not None:
            out["orbit"] = [
                {"words": u.words(), "support": list(u.support())}
                for u in self.orbit.units
            ]
        if self.section is not None:
            out["section"] = self.section.to_dict(self.group)
        out["verdict"] = "pass" if self.verdict else "fail"
        if self.error is not None:
            out["error"] = self.error
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def run_pipeline(
    group: FiniteGroup,
    use_oracle: bool = True,
    override: tuple[int, int, int] | None = None,
    cap: int = oracle.DEFAULT_CAP,
) -> PipelineResult:
    """Hypotheses, witness, orbit, base group, section: the full check."""
    hypothesis = check_hypotheses(group)
    result = PipelineResult(group=group, hypothesis=hypothesis)
    if not hypothesis.passed:
        result.error = f"hypotheses fail: {hypothesis.failure_reason}"
        return result
    try:
        witness = select_witness(group, hypothesis, override=override)
        result.witness = witness
        algebra = GroupAlgebra(group)
        orbit = build_orbit(algebra, witness)
        result.orbit = orbit
        base, base_checks = verify_base_group(orbit, cap=cap)
        result.section = build_section(
            algebra, witness, base, orbit,
            use_oracle=use_oracle, cap=cap, base_checks=base_checks,
        )
    except NoWitnessError as exc:
        if override is not None:
            raise  # a rejected override is the caller's input error
        result.error = str(exc)
    except (ConstructionError, oracle.ClosureCapError) as exc:
        result.error = str(exc)
    return result
