"""Row vectors, non-degenerate symmetric forms, and the twisted products.

The form B pairs vectors through v . w = v B w^T.  Cross-product style
operations twist the Euclidean cross product by the adjugate of B, which
keeps every result B-perpendicular to its factors and makes the classical
triple/quadruple product identities hold over any field of characteristic
not 2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import FieldElement, FieldSpec, MixedFields


class DegenerateForm(Exception):
    """Symmetric matrix with determinant zero."""


def shared_spec(*elements: FieldElement) -> FieldSpec:
    spec = elements[0].spec
    for e in elements[1:]:
        if e.spec != spec:
            raise MixedFields("components drawn from different fields")
    return spec


@dataclass(frozen=True)
class Vector3:
    """Displacement vector with three exact components."""

    x: FieldElement
    y: FieldElement
    z: FieldElement

    def __post_init__(self) -> None:
        shared_spec(self.x, self.y, self.z)

    @classmethod
    def of(cls, spec: FieldSpec, x, y, z) -> "Vector3":
        return cls(spec.element(x), spec.element(y), spec.element(z))

    @property
    def spec(self) -> FieldSpec:
        return self.x.spec

    @property
    def is_zero(self) -> bool:
        return self.x.is_zero and self.y.is_zero and self.z.is_zero

    def components(self) -> tuple[FieldElement, FieldElement, FieldElement]:
        return (self.x, self.y, self.z)

    def __add__(self, other: "Vector3") -> "Vector3":
        return Vector3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Vector3") -> "Vector3":
        return Vector3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Vector3":
        return Vector3(-self.x, -self.y, -self.z)

    def __mul__(self, k) -> "Vector3":
        return Vector3(self.x * k, self.y * k, self.z * k)

    __rmul__ = __mul__


def cross3(v: Vector3, w: Vector3) -> Vector3:
    """Plain Euclidean cross product of two row vectors."""
    return Vector3(v.y * w.z - v.z * w.y,
                   v.z * w.x - v.x * w.z,
                   v.x * w.y - v.y * w.x)


def det3(v1: Vector3, v2: Vector3, v3: Vector3) -> FieldElement:
    """Determinant of the matrix stacking v1, v2, v3 as rows."""
    c = cross3(v2, v3)
    return v1.x * c.x + v1.y * c.y + v1.z * c.z


def mat3_det(rows) -> FieldElement:
    """Determinant of a 3x3 matrix given as three rows of field elements."""
    (m00, m01, m02), (m10, m11, m12), (m20, m21, m22) = rows
    return (m00 * (m11 * m22 - m12 * m21)
            - m01 * (m10 * m22 - m12 * m20)
            + m02 * (m10 * m21 - m11 * m20))


class SymmetricForm:
    """Symmetric 3x3 matrix with nonzero determinant.

    Entry layout: a1, a2, a3 on the diagonal; b1 in rows/columns 2-3,
    b2 in 1-3, b3 in 1-2.  The determinant and adjugate are computed once,
    at construction, by explicit cofactors; instances are immutable.
    """

    __slots__ = ("a1", "a2", "a3", "b1", "b2", "b3", "det", "_adj")

    def __init__(self, a1: FieldElement, a2: FieldElement, a3: FieldElement,
                 b1: FieldElement, b2: FieldElement, b3: FieldElement):
        shared_spec(a1, a2, a3, b1, b2, b3)
        self.a1, self.a2, self.a3 = a1, a2, a3
        self.b1, self.b2, self.b3 = b1, b2, b3
        adj00 = a2 * a3 - b1 * b1
        adj01 = b1 * b2 - a3 * b3
        adj02 = b1 * b3 - a2 * b2
        adj11 = a1 * a3 - b2 * b2
        adj12 = b2 * b3 - a1 * b1
        adj22 = a1 * a2 - b3 * b3
        det = a1 * adj00 + b3 * adj01 + b2 * adj02
        if det.is_zero:
            raise DegenerateForm("form matrix has determinant zero")
        self.det = det
        self._adj = ((adj00, adj01, adj02),
                     (adj01, adj11, adj12),
                     (adj02, adj12, adj22))

    @classmethod
    def identity(cls, spec: FieldSpec) -> "SymmetricForm":
        one, zero = spec.one(), spec.zero()
        return cls(one, one, one, zero, zero, zero)

    @classmethod
    def diagonal(cls, d1: FieldElement, d2: FieldElement, d3: FieldElement) -> "SymmetricForm":
        zero = d1.spec.zero()
        return cls(d1, d2, d3, zero, zero, zero)

    @property
    def spec(self) -> FieldSpec:
        return self.a1.spec

    def rows(self):
        return ((self.a1, self.b3, self.b2),
                (self.b3, self.a2, self.b1),
                (self.b2, self.b1, self.a3))

    def adjugate_rows(self):
        return self._adj

    def entries(self) -> tuple[FieldElement, ...]:
        return (self.a1, self.a2, self.a3, self.b1, self.b2, self.b3)

    def _check(self, v: Vector3) -> None:
        if v.spec != self.spec:
            raise MixedFields("vector and form drawn from different fields")

    def dot(self, v: Vector3, w: Vector3) -> FieldElement:
        self._check(v)
        self._check(w)
        u0 = v.x * self.a1 + v.y * self.b3 + v.z * self.b2
        u1 = v.x * self.b3 + v.y * self.a2 + v.z * self.b1
        u2 = v.x * self.b2 + v.y * self.b1 + v.z * self.a3
        return u0 * w.x + u1 * w.y + u2 * w.z

    def quadrance(self, v: Vector3) -> FieldElement:
        return self.dot(v, v)

    def apply_adjugate(self, v: Vector3) -> Vector3:
        """Row vector times adj B."""
        self._check(v)
        a = self._adj
        return Vector3(v.x * a[0][0] + v.y * a[1][0] + v.z * a[2][0],
                       v.x * a[0][1] + v.y * a[1][1] + v.z * a[2][1],
                       v.x * a[0][2] + v.y * a[1][2] + v.z * a[2][2])

    def __repr__(self) -> str:
        e = ", ".join(x.literal() for x in self.entries())
        return f"SymmetricForm({e}; {self.spec})"


def b_dot(v: Vector3, w: Vector3, form: SymmetricForm) -> FieldElement:
    return form.dot(v, w)


def quadrance_vec(v: Vector3, form: SymmetricForm) -> FieldElement:
    return form.quadrance(v)


def b_cross(v: Vector3, w: Vector3, form: SymmetricForm) -> Vector3:
    return form.apply_adjugate(cross3(v, w))


def scalar_triple(v1: Vector3, v2: Vector3, v3: Vector3, form: SymmetricForm) -> FieldElement:
    return form.dot(v1, b_cross(v2, v3, form))


def vector_triple(v1: Vector3, v2: Vector3, v3: Vector3, form: SymmetricForm) -> Vector3:
    """First vector crossed with the cross of the other two."""
    direct = b_cross(v1, b_cross(v2, v3, form), form)
    expanded = (v2 * form.dot(v1, v3) - v3 * form.dot(v1, v2)) * form.det
    # the two evaluation routes agree identically; a mismatch means the
    # cached adjugate or determinant is corrupt
    assert direct == expanded
    return direct


def quad_scalar(v1: Vector3, v2: Vector3, v3: Vector3, v4: Vector3,
                form: SymmetricForm) -> FieldElement:
    return form.dot(b_cross(v1, v2, form), b_cross(v3, v4, form))


def quad_vector(v1: Vector3, v2: Vector3, v3: Vector3, v4: Vector3,
                form: SymmetricForm) -> Vector3:
    return b_cross(b_cross(v1, v2, form), b_cross(v3, v4, form), form)


def triple_of_crosses(v1: Vector3, v2: Vector3, v3: Vector3,
                      form: SymmetricForm) -> FieldElement:
    return scalar_triple(b_cross(v2, v3, form),
                         b_cross(v3, v1, form),
                         b_cross(v1, v2, form), form)
