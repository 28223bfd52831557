"""Embedding of the rigid motion group into projective 3-space.

A motion (u, v, s, t) maps to a projective point whose first two coordinates
never satisfy X0^2 + X1^2 = 0; removing that exceptional locus makes the map a
bijection.  The formulas here are square-root free and split into two charts
because the single chart [2(u+1) : 2v : ...] degenerates to the zero vector at
u = -1.  Left and right translation of the group become projective maps, which
is what turns transporter sets into lines and axial rotation sets into planes.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .clifford import EvenCliffordElement, QuadraticFormSpec
from .field import FieldElement, FieldMismatchError, FieldSpec
from .geometry import IsotropicAxisError, Line, Point
from .motions import RigidMotion, iter_r_tau, transporter_set


class NotInImageError(ValueError):
    """The projective point lies on the exceptional locus X0^2 + X1^2 = 0."""


def _canonicalize(coords: Sequence[FieldElement]) -> tuple[FieldElement, ...]:
    for c in coords:
        if c:
            inv = c.inverse()
            return tuple(inv * x for x in coords)
    raise ValueError("homogeneous coordinates cannot all vanish")


class ProjPoint:
    __slots__ = ("coords",)

    def __init__(self, coords: Sequence[FieldElement]):
        if len(coords) != 4:
            raise ValueError("expected 4 homogeneous coordinates")
        self.coords = _canonicalize(coords)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ProjPoint) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        return "[" + ":".join(repr(c) for c in self.coords) + "]"

    @property
    def key(self) -> tuple[int, ...]:
        return tuple(c.index for c in self.coords)

    def to_json(self) -> list:
        return [c.to_json() for c in self.coords]


class ProjPlane:
    """Coefficients (c0..c3) of the incidence form c . X = 0, canonically scaled."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[FieldElement]):
        if len(coeffs) != 4:
            raise ValueError("expected 4 plane coefficients")
        self.coeffs = _canonicalize(coeffs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ProjPlane) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return "Plane(" + ", ".join(repr(c) for c in self.coeffs) + ")"

    def contains(self, p: ProjPoint) -> bool:
        acc = self.coeffs[0].spec.zero()
        for c, x in zip(self.coeffs, p.coords):
            acc = acc + c * x
        return not acc

    @property
    def key(self) -> tuple[int, ...]:
        return tuple(c.index for c in self.coeffs)

    def to_json(self) -> list:
        return [c.to_json() for c in self.coeffs]


def _mat_mul(a, b):
    return tuple(
        tuple(
            sum((a[i][k] * b[k][j] for k in range(1, 4)), a[i][0] * b[0][j])
            for j in range(4)
        )
        for i in range(4)
    )


def _mat_vec(m, v):
    return tuple(
        sum((m[i][k] * v[k] for k in range(1, 4)), m[i][0] * v[0]) for i in range(4)
    )


def _identity_matrix(spec: FieldSpec):
    one, zero = spec.one(), spec.zero()
    return tuple(
        tuple(one if i == j else zero for j in range(4)) for i in range(4)
    )


def _mat_inverse(m, spec: FieldSpec):
    """Gauss-Jordan inverse; returns None when the matrix is singular."""
    n = 4
    aug = [list(row) + list(idrow) for row, idrow in zip(m, _identity_matrix(spec))]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [inv * x for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def matrix_rank(rows, spec: FieldSpec) -> int:
    """Rank of a list of 4-coordinate rows by exact elimination."""
    work = [list(r) for r in rows]
    rank = 0
    for col in range(4):
        pivot = next((r for r in range(rank, len(work)) if work[r][col]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = work[rank][col].inverse()
        work[rank] = [inv * x for x in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][col]:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[rank])]
        rank += 1
    return rank


def _null_vector(rows, spec: FieldSpec):
    """A nonzero solution c of (row . c = 0 for all rows), if the rank is 3."""
    work = [list(r) for r in rows]
    pivots = []
    rank = 0
    for col in range(4):
        pivot = next((r for r in range(rank, len(work)) if work[r][col]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = work[rank][col].inverse()
        work[rank] = [inv * x for x in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][col]:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[rank])]
        pivots.append(col)
        rank += 1
    if rank != 3:
        return None
    free = next(c for c in range(4) if c not in pivots)
    sol = [spec.zero()] * 4
    sol[free] = spec.one()
    for row_idx, col in enumerate(pivots):
        sol[col] = -work[row_idx][free]
    return tuple(sol)


class ProjMap:
    """An invertible 4x4 matrix up to scale, acting on points by X -> MX."""

    __slots__ = ("matrix",)

    def __init__(self, matrix):
        rows = tuple(tuple(row) for row in matrix)
        if len(rows) != 4 or any(len(r) != 4 for r in rows):
            raise ValueError("expected a 4x4 matrix")
        spec = rows[0][0].spec
        if _mat_inverse(rows, spec) is None:
            raise ValueError("projective map must be invertible")
        flat = [x for row in rows for x in row]
        scaled = _canonicalize(flat)
        self.matrix = tuple(tuple(scaled[4 * i + j] for j in range(4)) for i in range(4))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ProjMap) and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        return f"ProjMap({self.matrix!r})"

    @property
    def spec(self) -> FieldSpec:
        return self.matrix[0][0].spec

    def apply(self, p: ProjPoint) -> ProjPoint:
        return ProjPoint(_mat_vec(self.matrix, p.coords))

    def apply_plane(self, plane: ProjPlane) -> ProjPlane:
        """Image plane: coefficients transform by the inverse transpose."""
        inv = _mat_inverse(self.matrix, self.spec)
        transposed = tuple(tuple(inv[j][i] for j in range(4)) for i in range(4))
        return ProjPlane(_mat_vec(transposed, plane.coeffs))

    def compose(self, other: "ProjMap") -> "ProjMap":
        return ProjMap(_mat_mul(self.matrix, other.matrix))

    def inverse(self) -> "ProjMap":
        return ProjMap(_mat_inverse(self.matrix, self.spec))

    def is_identity(self) -> bool:
        return self.matrix == _identity_matrix(self.spec)

    @staticmethod
    def identity(spec: FieldSpec) -> "ProjMap":
        return ProjMap(_identity_matrix(spec))


def _chart_a(g: RigidMotion) -> tuple[FieldElement, ...]:
    """Raw coordinates [2(u+1) : 2v : s(u+1)+tv : sv-t(u+1)]; vanishes at u = -1."""
    spec = g.spec
    one = spec.one()
    two = one + one
    w = g.u + one
    return (two * w, two * g.v, g.s * w + g.t * g.v, g.s * g.v - g.t * w)


def _chart_b(g: RigidMotion) -> tuple[FieldElement, ...]:
    """Raw coordinates [2v : 2(1-u) : sv+t(1-u) : s(1-u)-tv]; vanishes at u = 1."""
    spec = g.spec
    one = spec.one()
    two = one + one
    w = one - g.u
    return (two * g.v, two * w, g.s * g.v + g.t * w, g.s * w - g.t * g.v)


def kappa(g: RigidMotion) -> ProjPoint:
    """The projective point of a motion; total because the charts cover u = +-1."""
    spec = g.spec
    if g.u != -spec.one():
        return ProjPoint(_chart_a(g))
    return ProjPoint(_chart_b(g))


def kappa_even(g: RigidMotion) -> EvenCliffordElement:
    """The even Clifford representative (X0, X1, X2, X3) of kappa(g)."""
    form = QuadraticFormSpec.standard(g.spec)
    x = kappa(g).coords
    return EvenCliffordElement(form, x[0], x[1], x[2], x[3])


def kappa_inv(p: ProjPoint) -> RigidMotion:
    x0, x1, x2, x3 = p.coords
    n = x0 * x0 + x1 * x1
    if not n:
        raise NotInImageError(f"{p!r} lies on the exceptional locus")
    inv = n.inverse()
    two = x0.spec.one() + x0.spec.one()
    return RigidMotion(
        (x0 * x0 - x1 * x1) * inv,
        two * (x0 * x1) * inv,
        two * (x1 * x3 + x0 * x2) * inv,
        two * (x1 * x2 - x0 * x3) * inv,
    )


def all_proj_points(spec: FieldSpec) -> Iterator[ProjPoint]:
    """Canonical representatives of projective 3-space, leading coordinate first."""
    elements = list(spec.elements())
    one, zero = spec.one(), spec.zero()
    for lead in range(4):
        prefix = (zero,) * lead + (one,)
        tail = 3 - lead
        def rest(depth, acc):
            if depth == 0:
                yield ProjPoint(prefix + acc)
                return
            for e in elements:
                yield from rest(depth - 1, acc + (e,))
        yield from rest(tail, ())


def exceptional_set(spec: FieldSpec) -> list[ProjPoint]:
    """All projective points with X0^2 + X1^2 = 0: the complement of the image."""
    out = []
    for p in all_proj_points(spec):
        x0, x1 = p.coords[0], p.coords[1]
        if not (x0 * x0 + x1 * x1):
            out.append(p)
    return out


def phi_left(g: RigidMotion) -> ProjMap:
    """Projective map with kappa(g . x) = phi_left(g)(kappa(x)) for all motions x."""
    h = kappa_even(g)
    lam = h.form.lam
    h0, h1, h2, h3 = h.coeffs
    zero = h0.spec.zero()
    return ProjMap(
        (
            (h0, lam * h1, zero, zero),
            (h1, h0, zero, zero),
            (h2, lam * h3, h0, -(lam * h1)),
            (h3, h2, -h1, h0),
        )
    )


def phi_right(g: RigidMotion) -> ProjMap:
    """Projective map with kappa(x . g) = phi_right(g)(kappa(x)) for all motions x."""
    h = kappa_even(g)
    lam = h.form.lam
    h0, h1, h2, h3 = h.coeffs
    zero = h0.spec.zero()
    return ProjMap(
        (
            (h0, lam * h1, zero, zero),
            (h1, h0, zero, zero),
            (h2, -(lam * h3), h0, lam * h1),
            (h3, -h2, h1, h0),
        )
    )


def transporter_image(x: Point, y: Point) -> list[ProjPoint]:
    """kappa of every motion taking x to y; asserts the points span a line."""
    points = [kappa(m) for m in transporter_set(x, y)]
    spec = x.x.spec
    assert matrix_rank([p.coords for p in points], spec) == 2
    return points


def transporter_line(x: Point, y: Point) -> tuple[ProjPoint, ProjPoint]:
    """Two distinct points spanning the line through the transporter image."""
    points = transporter_image(x, y)
    first = points[0]
    second = next(p for p in points[1:] if p != first)
    return first, second


def r_tau_plane(axis: Line) -> ProjPlane:
    """The plane spanned by the image of the rotations about points of the axis.

    The family has q*(|SO2|-1) + 1 members but rank 3 is reached within the
    first few, so the span is accumulated lazily instead of materializing the
    whole image; a bounded sample of further members double-checks containment.
    """
    if axis.is_isotropic():
        raise IsotropicAxisError(f"{axis!r} is isotropic")
    spec = axis.n1.spec
    members = iter_r_tau(axis)
    basis: list[list] = []
    pivots: list[int] = []
    for m in members:
        row = list(kappa(m).coords)
        for b, piv in zip(basis, pivots):
            if row[piv]:
                f = row[piv]
                row = [x - f * y for x, y in zip(row, b)]
        piv = next((i for i, x in enumerate(row) if x), None)
        if piv is None:
            continue
        inv = row[piv].inverse()
        basis.append([inv * x for x in row])
        pivots.append(piv)
        if len(basis) == 3:
            break
    coeffs = _null_vector(basis, spec)
    if coeffs is None:
        raise AssertionError("axial rotation image must span a plane")
    plane = ProjPlane(coeffs)
    for _, m in zip(range(24), members):
        if not plane.contains(kappa(m)):
            raise AssertionError("axial rotation image left the derived plane")
    return plane
