"""Orientation-preserving rigid motions x -> R x + w with R = [[u,-v],[v,u]], u^2+v^2 = 1.

The rotation matrices form SO_2(F_q), a cyclic group of order q - chi(-1); the full
motion group SF has order q^2 * |SO_2|.  On segments of equal nonzero quadratic length
the group acts simply transitively, which is what the transporter helpers exploit.
"""

from __future__ import annotations

from typing import Iterator, Optional

from .field import FieldElement, FieldSpec
from .geometry import IsotropicAxisError, Line, Point, Segment, origin, reflect


class SpecMismatchError(ValueError):
    """Rotation data does not satisfy u^2 + v^2 = 1."""


class NoTransporterError(ValueError):
    """No rigid motion maps the source segment to the target."""


class Rotation:
    __slots__ = ("u", "v")

    def __init__(self, u: FieldElement, v: FieldElement):
        if u * u + v * v != u.spec.one():
            raise SpecMismatchError(f"u^2+v^2 != 1 for ({u!r}, {v!r})")
        self.u = u
        self.v = v

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Rotation) and self.u == other.u and self.v == other.v

    def __hash__(self) -> int:
        return hash((self.u, self.v))

    def __repr__(self) -> str:
        return f"Rotation({self.u!r}, {self.v!r})"

    def __mul__(self, other: "Rotation") -> "Rotation":
        return Rotation(
            self.u * other.u - self.v * other.v,
            self.u * other.v + self.v * other.u,
        )

    def inverse(self) -> "Rotation":
        return Rotation(self.u, -self.v)

    def apply(self, p: Point) -> Point:
        return Point(self.u * p.x - self.v * p.y, self.v * p.x + self.u * p.y)

    def is_identity(self) -> bool:
        return self.u == self.u.spec.one() and not self.v

    @property
    def key(self) -> tuple[int, int]:
        return (self.u.index, self.v.index)

    @staticmethod
    def identity(spec: FieldSpec) -> "Rotation":
        return Rotation(spec.one(), spec.zero())


def so2_order(spec: FieldSpec) -> int:
    return spec.q - spec.chi_minus_one()


def enumerate_rotations(spec: FieldSpec) -> list[Rotation]:
    """All rotations, sorted by (u, v) canonical index."""
    out = []
    one = spec.one()
    for u in spec.elements():
        for v in (one - u * u).sqrt():
            out.append(Rotation(u, v))
    out.sort(key=lambda r: r.key)
    assert len(out) == so2_order(spec)
    return out


class RigidMotion:
    """x -> (u x1 - v x2 + s, v x1 + u x2 + t)."""

    __slots__ = ("u", "v", "s", "t")

    def __init__(self, u: FieldElement, v: FieldElement, s: FieldElement, t: FieldElement):
        if u * u + v * v != u.spec.one():
            raise SpecMismatchError(f"u^2+v^2 != 1 for ({u!r}, {v!r})")
        self.u = u
        self.v = v
        self.s = s
        self.t = t

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RigidMotion)
            and (self.u, self.v, self.s, self.t) == (other.u, other.v, other.s, other.t)
        )

    def __hash__(self) -> int:
        return hash((self.u, self.v, self.s, self.t))

    def __repr__(self) -> str:
        return f"RigidMotion({self.u!r}, {self.v!r}, {self.s!r}, {self.t!r})"

    @property
    def spec(self) -> FieldSpec:
        return self.u.spec

    @property
    def rotation(self) -> Rotation:
        return Rotation(self.u, self.v)

    def apply(self, p: Point) -> Point:
        return Point(
            self.u * p.x - self.v * p.y + self.s,
            self.v * p.x + self.u * p.y + self.t,
        )

    def apply_segment(self, seg: Segment) -> Segment:
        return Segment(self.apply(seg.head), self.apply(seg.tail))

    def compose(self, other: "RigidMotion") -> "RigidMotion":
        """self after other (function composition)."""
        return RigidMotion(
            self.u * other.u - self.v * other.v,
            self.u * other.v + self.v * other.u,
            self.u * other.s - self.v * other.t + self.s,
            self.v * other.s + self.u * other.t + self.t,
        )

    def inverse(self) -> "RigidMotion":
        return RigidMotion(
            self.u,
            -self.v,
            -(self.u * self.s + self.v * self.t),
            self.v * self.s - self.u * self.t,
        )

    def is_identity(self) -> bool:
        spec = self.spec
        return self.u == spec.one() and not self.v and not self.s and not self.t

    def is_translation(self) -> bool:
        return self.u == self.spec.one() and not self.v

    def fixed_point(self) -> Optional[Point]:
        """The unique fixed point when the rotation part is nontrivial.

        Returns None for fixed-point-free motions (nonzero translations); the
        identity is rejected because every point is fixed.
        """
        if self.is_identity():
            raise ValueError("identity fixes every point")
        if self.is_translation():
            return None
        # solve (I - R) z = (s, t); det(I - R) = 2(1 - u) != 0 when R != I
        one = self.spec.one()
        a, b = one - self.u, self.v
        det = a * a + b * b
        zx = (a * self.s - b * self.t) / det
        zy = (b * self.s + a * self.t) / det
        return Point(zx, zy)

    @property
    def key(self) -> tuple[int, int, int, int]:
        return (self.u.index, self.v.index, self.s.index, self.t.index)

    def to_json(self) -> list:
        return [x.to_json() for x in (self.u, self.v, self.s, self.t)]

    @staticmethod
    def from_json(spec: FieldSpec, obj) -> "RigidMotion":
        u, v, s, t = (spec.element(x) for x in obj)
        return RigidMotion(u, v, s, t)

    @staticmethod
    def identity(spec: FieldSpec) -> "RigidMotion":
        return RigidMotion(spec.one(), spec.zero(), spec.zero(), spec.zero())


def all_motions(spec: FieldSpec) -> Iterator[RigidMotion]:
    for rot in enumerate_rotations(spec):
        for s in spec.elements():
            for t in spec.elements():
                yield RigidMotion(rot.u, rot.v, s, t)


def rotation_about(center: Point, rot: Rotation) -> RigidMotion:
    shift = center - rot.apply(center)
    return RigidMotion(rot.u, rot.v, shift.x, shift.y)


def motion_between_segments(src: Segment, dst: Segment) -> RigidMotion:
    """The unique motion with g(src.head) = dst.head and g(src.tail) = dst.tail."""
    r = src.length_sq()
    if r != dst.length_sq():
        raise NoTransporterError("segments have different quadratic lengths")
    if not r:
        raise NoTransporterError("transporter is only unique for nonzero lengths")
    w1 = src.tail - src.head
    w2 = dst.tail - dst.head
    inv = r.inverse()
    u = (w2.x * w1.x + w2.y * w1.y) * inv
    v = (w2.y * w1.x - w2.x * w1.y) * inv
    rot = Rotation(u, v)
    shift = dst.head - rot.apply(src.head)
    g = RigidMotion(u, v, shift.x, shift.y)
    assert g.apply(src.head) == dst.head and g.apply(src.tail) == dst.tail
    return g


def transporter_set(x: Point, y: Point) -> list[RigidMotion]:
    """All motions sending x to y: one per rotation, in rotation order."""
    spec = x.x.spec
    out = []
    for rot in enumerate_rotations(spec):
        shift = y - rot.apply(x)
        out.append(RigidMotion(rot.u, rot.v, shift.x, shift.y))
    return out


def iter_r_tau(axis: Line) -> Iterator[RigidMotion]:
    """Lazily yield the axial rotation set: identity, then per-point rotations.

    Distinct (center, rotation) pairs give distinct motions, so the only
    shared member is the identity, yielded once up front.
    """
    if axis.is_isotropic():
        raise IsotropicAxisError(f"{axis!r} is isotropic")
    spec = axis.n1.spec
    yield RigidMotion.identity(spec)
    rotations = [rot for rot in enumerate_rotations(spec) if not rot.is_identity()]
    for z in axis.points(spec):
        for rot in rotations:
            yield rotation_about(z, rot)


def r_tau_set(axis: Line) -> list[RigidMotion]:
    """Rotations about the points of a non-isotropic axis, identity included once."""
    spec = axis.n1.spec
    result = sorted(set(iter_r_tau(axis)), key=lambda m: m.key)
    assert len(result) == spec.q * (so2_order(spec) - 1) + 1
    return result


def _reflection_parts(line: Line) -> tuple[Rotation | None, tuple, Point]:
    spec = line.n1.spec
    w = reflect(line, origin(spec))
    e1 = reflect(line, Point(spec.one(), spec.zero())) - w
    e2 = reflect(line, Point(spec.zero(), spec.one())) - w
    # linear part as columns (e1 | e2), plus translation w
    return None, (e1, e2), w


def axial_to_motion(axis: Line, tau: Line) -> RigidMotion:
    """Reflect across tau, then across axis; an orientation-preserving motion.

    When the axes meet, this is a rotation about their intersection point (so it
    lands in r_tau_set(tau)); parallel axes compose to a translation normal to both.
    """
    if axis.is_isotropic() or tau.is_isotropic():
        raise IsotropicAxisError("both axes must be non-isotropic")
    _, (a1, a2), wa = _reflection_parts(axis)
    _, (b1, b2), wb = _reflection_parts(tau)
    # compose x -> A(Bx + wb) + wa
    c1 = Point(a1.x * b1.x + a2.x * b1.y, a1.y * b1.x + a2.y * b1.y)
    c2 = Point(a1.x * b2.x + a2.x * b2.y, a1.y * b2.x + a2.y * b2.y)
    w = Point(a1.x * wb.x + a2.x * wb.y + wa.x, a1.y * wb.x + a2.y * wb.y + wa.y)
    u, v = c1.x, c1.y
    assert c2.x == -v and c2.y == u, "composition of two reflections must rotate"
    return RigidMotion(u, v, w.x, w.y)
