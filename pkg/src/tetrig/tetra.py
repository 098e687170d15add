"""Whole-tetrahedron analysis: the invariant report, identity verification,
skew quadrances of opposite edges, and the tri-rectangular specialization.

A report stores every invariant fully expanded, computed from the defining
formulas; the closed forms are used only as internal cross-checks and as
verification identities.  Quantities whose defining formula divides by a
vanishing quadrance are recorded as Undefined with a machine-readable
reason rather than silently substituted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .affine import Point3, b_project, displacement, translate
from .blinalg import SymmetricForm, Vector3, b_cross, scalar_triple, shared_spec
from .field import FieldElement, MixedFields
from .trig import TriLines, archimedes, dual_solid_spread, quadrance, quadrume, spread_vectors


class NotSkewOrDegenerate(Exception):
    """Opposite edge lines are parallel (or collapse), so no skew quadrance exists."""


class NullCommonPerpendicular(Exception):
    """The common perpendicular direction has quadrance zero."""


class NotTriRectangular(Exception):
    """Corner edge vectors are not mutually B-perpendicular."""


class DegenerateParams(Exception):
    """Corner quadrances violate the nonzero/nonzero-sum requirements."""


class NullPivot(Exception):
    """Orthogonalization hit a direction with quadrance zero."""


VERTICES = (0, 1, 2, 3)
EDGES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
FACES = ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3))
SKEW_PAIRINGS = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))

PASS = "pass"
FAIL = "fail"
INAPPLICABLE = "inapplicable"

REASON_NULL_EDGE = "NullEdge"
REASON_NULL_NORMAL = "NullNormal"
REASON_ZERO_QUADREA = "ZeroQuadrea"
REASON_ZERO_DENOMINATOR = "ZeroDenominator"

IDENTITY_NAMES = (
    "alternating-spreads",
    "dihedral-spread-formula",
    "dihedral-spread-ratio",
    "solid-spread-formula",
    "solid-spread-ratio",
    "solid-spread-pair-ratio",
    "solid-spread-triple-ratio",
    "dual-solid-spread-formula",
    "dual-solid-quadrea-ratio",
    "skew-quadrance-formula",
)


def _others(*fixed: int) -> tuple[int, ...]:
    return tuple(m for m in VERTICES if m not in fixed)


def edge_key(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i < j else (j, i)


def face_key(i: int, j: int, k: int) -> tuple[int, int, int]:
    return tuple(sorted((i, j, k)))


def spread_key(apex: int, j: int, k: int) -> tuple[int, int, int]:
    return (apex, j, k) if j < k else (apex, k, j)


FACE_SPREAD_KEYS = tuple(spread_key(i, j, k)
                         for i in VERTICES
                         for j, k in ((a, b) for ai, a in enumerate(_others(i))
                                      for b in _others(i)[ai + 1:]))


def pairing_name(pairing) -> str:
    (a, b), (c, d) = pairing
    return f"{a}{b};{c}{d}"


@dataclass(frozen=True)
class Tetrahedron:
    """Four affine points measured against one symmetric form."""

    a0: Point3
    a1: Point3
    a2: Point3
    a3: Point3
    form: SymmetricForm

    def __post_init__(self) -> None:
        shared_spec(self.a0.x, self.a1.x, self.a2.x, self.a3.x)
        if self.a0.spec != self.form.spec:
            raise MixedFields("points and form drawn from different fields")

    @property
    def spec(self):
        return self.a0.spec

    @property
    def points(self) -> tuple[Point3, Point3, Point3, Point3]:
        return (self.a0, self.a1, self.a2, self.a3)

    def vertex(self, i: int) -> Point3:
        return self.points[i]

    def edge_vector(self, i: int, j: int) -> Vector3:
        return displacement(self.points[i], self.points[j])


@dataclass(frozen=True)
class Undefined:
    """Placeholder for a quantity whose defining formula divides by zero."""

    reason: str


Entry = Union[FieldElement, Undefined]


def is_defined(entry: Entry) -> bool:
    return isinstance(entry, FieldElement)


@dataclass
class InvariantReport:
    """Every metrical invariant of one tetrahedron, fully expanded."""

    tetrahedron: Tetrahedron
    quadrances: dict  # (i, j) -> FieldElement
    quadreas: dict  # (i, j, k) -> FieldElement
    quadrume: FieldElement
    face_spreads: dict  # (apex, j, k) -> Entry
    dihedral_spreads: dict  # (i, j) -> Entry
    solid_spreads: dict  # i -> Entry
    dual_solid_spreads: dict  # i -> Entry
    ratio_constant: Entry
    skew_quadrances: dict  # pairing -> Entry


@dataclass(frozen=True)
class Verdict:
    identity: str
    instance: str
    status: str


@dataclass
class CheckResults:
    verdicts: list

    def counts(self) -> dict:
        out = {PASS: 0, FAIL: 0, INAPPLICABLE: 0}
        for v in self.verdicts:
            out[v.status] += 1
        return out

    @property
    def failures(self) -> list:
        return [v for v in self.verdicts if v.status == FAIL]

    @property
    def all_applicable_pass(self) -> bool:
        return not self.failures


def _skew_denominator(q: dict, pairing) -> FieldElement:
    (a, b), (c, d) = pairing
    diff = q[edge_key(a, c)] + q[edge_key(b, d)] - q[edge_key(a, d)] - q[edge_key(b, c)]
    return q[edge_key(a, b)] * q[edge_key(c, d)] * 4 - diff * diff


def skew_quadrance(tet: Tetrahedron, pairing, params=None) -> FieldElement:
    """Quadrance of the gap between two opposite edge lines.

    Projects the displacement between one point of each line onto their
    common perpendicular direction.  The result does not depend on the
    chosen points; `params` moves them along the lines to exercise that.
    """
    (a, b), (c, d) = pairing
    form = tet.form
    v1 = tet.edge_vector(a, b)
    v2 = tet.edge_vector(c, d)
    n = b_cross(v1, v2, form)
    qn = form.quadrance(n)
    if qn.is_zero:
        if n.is_zero:
            raise NotSkewOrDegenerate("opposite edge directions are parallel")
        raise NullCommonPerpendicular("common perpendicular direction has quadrance zero")
    p1 = tet.vertex(a)
    p2 = tet.vertex(c)
    if params is not None:
        t1, t2 = params
        p1 = translate(p1, v1 * t1)
        p2 = translate(p2, v2 * t2)
    gap = b_project(displacement(p1, p2), n, form)
    return form.quadrance(gap)


def skew_quadrance_closed_form(tet: Tetrahedron, pairing) -> FieldElement:
    """Same quantity from the six quadrances and the quadrume alone."""
    q = {e: quadrance(tet.vertex(e[0]), tet.vertex(e[1]), tet.form) for e in EDGES}
    den = _skew_denominator(q, pairing)
    if den.is_zero:
        raise NotSkewOrDegenerate("skew quadrance denominator is zero")
    return quadrume(tet) / den


def analyze(tet: Tetrahedron) -> InvariantReport:
    """Compute the full invariant report from the defining formulas."""
    form = tet.form
    q = {e: quadrance(tet.vertex(e[0]), tet.vertex(e[1]), form) for e in EDGES}
    a = {}
    for (i, j, k) in FACES:
        a[(i, j, k)] = archimedes(q[edge_key(j, k)], q[edge_key(i, k)], q[edge_key(i, j)])
    vol = quadrume(tet)

    face_spreads = {}
    for (i, j, k) in FACE_SPREAD_KEYS:
        if q[edge_key(i, j)].is_zero or q[edge_key(i, k)].is_zero:
            face_spreads[(i, j, k)] = Undefined(REASON_NULL_EDGE)
        else:
            face_spreads[(i, j, k)] = spread_vectors(tet.edge_vector(i, j),
                                                     tet.edge_vector(i, k), form)

    # one normal direction per face; dihedral spreads are scale-invariant in these
    normals = {}
    for (i, j, k) in FACES:
        normals[(i, j, k)] = b_cross(tet.edge_vector(i, j), tet.edge_vector(i, k), form)

    dihedral_spreads = {}
    for (i, j) in EDGES:
        k, l = _others(i, j)
        f1, f2 = face_key(i, j, k), face_key(i, j, l)
        if a[f1].is_zero or a[f2].is_zero:
            dihedral_spreads[(i, j)] = Undefined(REASON_NULL_NORMAL)
        else:
            n1, n2 = normals[f1], normals[f2]
            d = form.dot(n1, n2)
            dihedral_spreads[(i, j)] = 1 - d * d / (form.quadrance(n1) * form.quadrance(n2))

    solid_spreads = {}
    for i in VERTICES:
        j, k, l = _others(i)
        if any(q[edge_key(i, m)].is_zero for m in (j, k, l)):
            solid_spreads[i] = Undefined(REASON_NULL_EDGE)
        else:
            t = scalar_triple(tet.edge_vector(i, j), tet.edge_vector(i, k),
                              tet.edge_vector(i, l), form)
            solid_spreads[i] = t * t / (form.det * q[edge_key(i, j)]
                                        * q[edge_key(i, k)] * q[edge_key(i, l)])

    dual_solid_spreads = {}
    for i in VERTICES:
        j, k, l = _others(i)
        faces_at = (face_key(i, j, k), face_key(i, j, l), face_key(i, k, l))
        if any(a[f].is_zero for f in faces_at):
            dual_solid_spreads[i] = Undefined(REASON_NULL_NORMAL)
        else:
            lines = TriLines(tet.vertex(i), tet.edge_vector(i, j),
                             tet.edge_vector(i, k), tet.edge_vector(i, l))
            dual_solid_spreads[i] = dual_solid_spread(lines, form)

    if any(a[f].is_zero for f in FACES):
        ratio_constant: Entry = Undefined(REASON_ZERO_QUADREA)
    else:
        prod_a = a[FACES[0]] * a[FACES[1]] * a[FACES[2]] * a[FACES[3]]
        ratio_constant = vol * vol * 16 / prod_a

    skew_quadrances = {}
    for pairing in SKEW_PAIRINGS:
        den = _skew_denominator(q, pairing)
        if den.is_zero:
            skew_quadrances[pairing] = Undefined(REASON_ZERO_DENOMINATOR)
        else:
            value = skew_quadrance(tet, pairing)
            if value != vol / den:
                raise RuntimeError("internal check failed: skew quadrance routes disagree")
            skew_quadrances[pairing] = value

    report = InvariantReport(tet, q, a, vol, face_spreads, dihedral_spreads,
                             solid_spreads, dual_solid_spreads, ratio_constant,
                             skew_quadrances)
    _cross_check_closed_forms(report)
    return report


def _cross_check_closed_forms(report: InvariantReport) -> None:
    # defined entries must satisfy the closed forms; a mismatch would mean
    # the definitional pipeline itself is broken
    q, a, vol = report.quadrances, report.quadreas, report.quadrume
    for (i, j), entry in report.dihedral_spreads.items():
        if is_defined(entry):
            k, l = _others(i, j)
            if entry * a[face_key(i, j, k)] * a[face_key(i, j, l)] != q[(i, j)] * vol * 4:
                raise RuntimeError("internal check failed: dihedral spread closed form")
    for i, entry in report.solid_spreads.items():
        if is_defined(entry):
            j, k, l = _others(i)
            lhs = entry * q[edge_key(i, j)] * q[edge_key(i, k)] * q[edge_key(i, l)] * 4
            if lhs != vol:
                raise RuntimeError("internal check failed: solid spread closed form")
    for i, entry in report.dual_solid_spreads.items():
        if is_defined(entry):
            j, k, l = _others(i)
            lhs = entry * a[face_key(i, j, k)] * a[face_key(i, j, l)] * a[face_key(i, k, l)]
            if lhs != vol * vol * 4:
                raise RuntimeError("internal check failed: dual solid spread closed form")


def _all_defined(*entries: Entry) -> bool:
    return all(is_defined(e) for e in entries)


def verify_identities(report: InvariantReport) -> CheckResults:
    """One verdict per identity instance, from the report entries alone."""
    q = report.quadrances
    a = report.quadreas
    vol = report.quadrume
    s = report.face_spreads
    e = report.dihedral_spreads
    sol = report.solid_spreads
    dual = report.dual_solid_spreads
    rich = report.ratio_constant
    verdicts = []

    def emit(identity, instance, applicable, holds):
        if not applicable:
            verdicts.append(Verdict(identity, instance, INAPPLICABLE))
        else:
            verdicts.append(Verdict(identity, instance, PASS if holds() else FAIL))

    for anchor in VERTICES:
        x, y, z = _others(anchor)
        lhs_keys = (spread_key(x, anchor, y), spread_key(y, anchor, z), spread_key(z, anchor, x))
        rhs_keys = (spread_key(x, anchor, z), spread_key(y, anchor, x), spread_key(z, anchor, y))
        emit("alternating-spreads", f"vertex-{anchor}",
             _all_defined(*(s[key] for key in lhs_keys + rhs_keys)),
             lambda lk=lhs_keys, rk=rhs_keys: (s[lk[0]] * s[lk[1]] * s[lk[2]]
                                               == s[rk[0]] * s[rk[1]] * s[rk[2]]))

    for (i, j) in EDGES:
        k, l = _others(i, j)
        f1, f2 = face_key(i, j, k), face_key(i, j, l)
        emit("dihedral-spread-formula", f"E{i}{j}", _all_defined(e[(i, j)]),
             lambda ij=(i, j), f1=f1, f2=f2: e[ij] * a[f1] * a[f2] == q[ij] * vol * 4)

    for pair1, pair2 in SKEW_PAIRINGS:
        emit("dihedral-spread-ratio",
             f"{pair1[0]}{pair1[1]}|{pair2[0]}{pair2[1]}",
             _all_defined(e[pair1], e[pair2], rich),
             lambda p1=pair1, p2=pair2: e[p1] * e[p2] == rich * q[p1] * q[p2])

    for i in VERTICES:
        j, k, l = _others(i)
        emit("solid-spread-formula", f"S{i}", _all_defined(sol[i]),
             lambda i=i, j=j, k=k, l=l: sol[i] * q[edge_key(i, j)] * q[edge_key(i, k)]
             * q[edge_key(i, l)] * 4 == vol)

    for i in VERTICES:
        for j in VERTICES[i + 1:]:
            k, l = _others(i, j)
            emit("solid-spread-ratio", f"S{i}|S{j}", _all_defined(sol[i], sol[j]),
                 lambda i=i, j=j, k=k, l=l: sol[i] * q[edge_key(i, k)] * q[edge_key(i, l)]
                 == sol[j] * q[edge_key(j, k)] * q[edge_key(j, l)])

    for (i, j), (k, l) in SKEW_PAIRINGS:
        emit("solid-spread-pair-ratio", f"{i}{j}|{k}{l}",
             _all_defined(sol[i], sol[j], sol[k], sol[l]),
             lambda i=i, j=j, k=k, l=l: sol[i] * sol[j] * q[(i, j)] * q[(i, j)]
             == sol[k] * sol[l] * q[(k, l)] * q[(k, l)])

    prod_q2 = None
    for key in EDGES:
        prod_q2 = q[key] * q[key] if prod_q2 is None else prod_q2 * q[key] * q[key]
    for omitted in VERTICES:
        i, j, k = _others(omitted)
        emit("solid-spread-triple-ratio", f"S{i}S{j}S{k}",
             _all_defined(sol[i], sol[j], sol[k]),
             lambda i=i, j=j, k=k, o=omitted: sol[i] * sol[j] * sol[k] * prod_q2 * 64
             == vol * vol * vol * q[edge_key(i, o)] * q[edge_key(j, o)] * q[edge_key(k, o)])

    for i in VERTICES:
        j, k, l = _others(i)
        emit("dual-solid-spread-formula", f"D{i}", _all_defined(dual[i]),
             lambda i=i, j=j, k=k, l=l: dual[i] * a[face_key(i, j, k)] * a[face_key(i, j, l)]
             * a[face_key(i, k, l)] == vol * vol * 4)

    for i in VERTICES:
        opposite = face_key(*_others(i))
        emit("dual-solid-quadrea-ratio", f"D{i}", _all_defined(dual[i], rich),
             lambda i=i, opp=opposite: dual[i] * 4 == rich * a[opp])

    for pairing in SKEW_PAIRINGS:
        entry = report.skew_quadrances[pairing]
        emit("skew-quadrance-formula", pairing_name(pairing), _all_defined(entry),
             lambda p=pairing, ent=entry: ent * _skew_denominator(q, p) == vol)

    return CheckResults(verdicts)


def tri_rectangular_frame(form: SymmetricForm):
    """Three mutually B-perpendicular directions with nonzero quadrances.

    Successive orthogonalization of the standard basis using exact division
    only; raises NullPivot when a swept direction has quadrance zero, in
    which case a permuted seed basis may still succeed.
    """
    spec = form.spec
    basis = (Vector3.of(spec, 1, 0, 0), Vector3.of(spec, 0, 1, 0), Vector3.of(spec, 0, 0, 1))
    frame = []
    for e in basis:
        u = e
        for prev in frame:
            u = u - b_project(u, prev, form)
        if form.quadrance(u).is_zero:
            raise NullPivot("orthogonalization hit a direction with quadrance zero")
        frame.append(u)
    return tuple(frame)


@dataclass(frozen=True)
class TriRectParams:
    """Corner quadrances of a tetrahedron that is tri-rectangular at vertex 0."""

    k1: FieldElement
    k2: FieldElement
    k3: FieldElement

    def __post_init__(self) -> None:
        shared_spec(self.k1, self.k2, self.k3)
        if self.k1.is_zero or self.k2.is_zero or self.k3.is_zero:
            raise DegenerateParams("a corner quadrance is zero")
        for u, w in ((self.k1, self.k2), (self.k1, self.k3), (self.k2, self.k3)):
            if (u + w).is_zero:
                raise DegenerateParams("an opposite edge quadrance K_i + K_j is zero")
        if self.cross_sum.is_zero:
            raise DegenerateParams("the face quadrea opposite the corner is zero")

    @property
    def cross_sum(self) -> FieldElement:
        return self.k1 * self.k2 + self.k1 * self.k3 + self.k2 * self.k3

    def expected_quadrances(self) -> dict:
        return {(1, 2): self.k1 + self.k2, (1, 3): self.k1 + self.k3,
                (2, 3): self.k2 + self.k3}

    def expected_quadrume(self) -> FieldElement:
        return self.k1 * self.k2 * self.k3 * 4

    def expected_quadreas(self) -> dict:
        return {(0, 1, 2): self.k1 * self.k2 * 4,
                (0, 1, 3): self.k1 * self.k3 * 4,
                (0, 2, 3): self.k2 * self.k3 * 4,
                (1, 2, 3): self.cross_sum * 4}

    def expected_face_spreads(self) -> dict:
        k1, k2, k3 = self.k1, self.k2, self.k3
        cs = self.cross_sum
        return {(1, 0, 2): k2 / (k1 + k2),
                (1, 0, 3): k3 / (k1 + k3),
                (1, 2, 3): cs / ((k1 + k2) * (k1 + k3)),
                (2, 0, 1): k1 / (k1 + k2),
                (2, 0, 3): k3 / (k2 + k3),
                (2, 1, 3): cs / ((k1 + k2) * (k2 + k3)),
                (3, 0, 1): k1 / (k1 + k3),
                (3, 0, 2): k2 / (k2 + k3),
                (3, 1, 2): cs / ((k1 + k3) * (k2 + k3))}

    def expected_dihedral_spreads(self) -> dict:
        k1, k2, k3 = self.k1, self.k2, self.k3
        cs = self.cross_sum
        return {(1, 2): k3 * (k1 + k2) / cs,
                (1, 3): k2 * (k1 + k3) / cs,
                (2, 3): k1 * (k2 + k3) / cs}

    def expected_solid_spreads(self) -> dict:
        k1, k2, k3 = self.k1, self.k2, self.k3
        return {1: k2 * k3 / ((k1 + k2) * (k1 + k3)),
                2: k1 * k3 / ((k1 + k2) * (k2 + k3)),
                3: k1 * k2 / ((k1 + k3) * (k2 + k3))}

    def expected_dual_solid_spreads(self) -> dict:
        cs = self.cross_sum
        return {1: self.k2 * self.k3 / cs,
                2: self.k1 * self.k3 / cs,
                3: self.k1 * self.k2 / cs}


def corner_params(tet: Tetrahedron) -> TriRectParams:
    """Validate tri-rectangularity at vertex 0 and extract the corner quadrances."""
    form = tet.form
    v1, v2, v3 = (tet.edge_vector(0, 1), tet.edge_vector(0, 2), tet.edge_vector(0, 3))
    if not (form.dot(v1, v2).is_zero and form.dot(v1, v3).is_zero
            and form.dot(v2, v3).is_zero):
        raise NotTriRectangular("corner edge vectors are not mutually B-perpendicular")
    return TriRectParams(form.quadrance(v1), form.quadrance(v2), form.quadrance(v3))


def tri_rectangular_checks(tet: Tetrahedron) -> CheckResults:
    """Verdicts for the right-corner closed forms and sum relations."""
    params = corner_params(tet)
    report = analyze(tet)
    one = tet.spec.one()
    verdicts = []

    def compare(identity, instance, entry, expected):
        status = PASS if is_defined(entry) and entry == expected else FAIL
        verdicts.append(Verdict(identity, instance, status))

    for (j, k), expected in params.expected_quadrances().items():
        compare("closed-form-quadrance", f"Q{j}{k}", report.quadrances[(j, k)], expected)
    compare("closed-form-quadrume", "V", report.quadrume, params.expected_quadrume())
    for key, expected in params.expected_quadreas().items():
        compare("closed-form-quadrea", f"A{key[0]}{key[1]}{key[2]}", report.quadreas[key], expected)
    for key, expected in params.expected_face_spreads().items():
        compare("closed-form-face-spread", f"s{key[0]};{key[1]}{key[2]}",
                report.face_spreads[key], expected)
    for key, expected in params.expected_dihedral_spreads().items():
        compare("closed-form-dihedral-spread", f"E{key[0]}{key[1]}",
                report.dihedral_spreads[key], expected)
    for i, expected in params.expected_solid_spreads().items():
        compare("closed-form-solid-spread", f"S{i}", report.solid_spreads[i], expected)
    for i, expected in params.expected_dual_solid_spreads().items():
        compare("closed-form-dual-solid-spread", f"D{i}", report.dual_solid_spreads[i], expected)

    for (j, k) in ((1, 2), (1, 3), (2, 3)):
        compare("right-corner-units", f"s0;{j}{k}", report.face_spreads[(0, j, k)], one)
    for j in (1, 2, 3):
        compare("right-corner-units", f"E0{j}", report.dihedral_spreads[(0, j)], one)
    compare("right-corner-units", "S0", report.solid_spreads[0], one)
    compare("right-corner-units", "D0", report.dual_solid_spreads[0], one)

    a = report.quadreas
    verdicts.append(Verdict("face-quadrea-sum", "A123",
                            PASS if a[(1, 2, 3)] == a[(0, 1, 2)] + a[(0, 1, 3)] + a[(0, 2, 3)]
                            else FAIL))

    e12, e13, e23 = (report.dihedral_spreads[key] for key in ((1, 2), (1, 3), (2, 3)))
    status = (PASS if _all_defined(e12, e13, e23) and e12 + e13 + e23 == one * 2 else FAIL)
    verdicts.append(Verdict("dihedral-spread-sum", "E12+E13+E23", status))

    s1, s2, s3 = (report.solid_spreads[i] for i in (1, 2, 3))
    if _all_defined(s1, s2, s3):
        rest = 1 - s1 - s2 - s3
        status = PASS if rest * rest == s1 * s2 * s3 * 4 else FAIL
    else:
        status = FAIL
    verdicts.append(Verdict("solid-spread-square", "(1-S1-S2-S3)^2", status))

    d1, d2, d3 = (report.dual_solid_spreads[i] for i in (1, 2, 3))
    status = (PASS if _all_defined(d1, d2, d3) and d1 + d2 + d3 == one else FAIL)
    verdicts.append(Verdict("dual-solid-spread-sum", "D1+D2+D3", status))

    return CheckResults(verdicts)
