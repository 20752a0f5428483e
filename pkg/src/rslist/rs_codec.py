"""Reed-Solomon code definition, evaluation encoding, and re-encoding."""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field

from .galois import Field
from .polynomials import DuplicateAbscissa, UniPoly, lagrange_interpolate


class DegreeTooHigh(ValueError):
    """Message polynomial degree is k or more."""


class WrongCount(ValueError):
    """Re-encoding needs exactly k points."""


@dataclass
class CodeSpec:
    """RS code of length n and dimension k over `field`, evaluated on `support`.

    Default support is every nonzero element, so n = q - 1.
    """

    field: Field
    n: int
    k: int
    support: list[int] = dataclass_field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.support:
            self.support = self.field.all_elements()[1 : self.n + 1]
        if len(self.support) != self.n:
            raise ValueError(f"support has {len(self.support)} elements, expected n={self.n}")
        if len(set(self.support)) != self.n:
            raise ValueError("support elements must be distinct")
        if not self.k <= self.n <= self.field.q:
            raise ValueError(f"need k <= n <= q, got k={self.k}, n={self.n}, q={self.field.q}")

    def to_json(self) -> dict:
        return {
            "m": self.field.m,
            "prim_poly": self.field.prim_poly,
            "n": self.n,
            "k": self.k,
            "support": list(self.support),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CodeSpec":
        f = Field(int(obj["m"]), int(obj["prim_poly"]))
        support = [f.parse_element(x) for x in obj.get("support", [])]
        return cls(f, int(obj["n"]), int(obj["k"]), support)


def encode(code: CodeSpec, f: UniPoly) -> list[int]:
    """Evaluate the message polynomial on the support."""
    if f.degree != float("-inf") and f.degree >= code.k:
        raise DegreeTooHigh(f"deg f = {f.degree} >= k = {code.k}")
    return [f.eval_at(x) for x in code.support]


def reencode(code: CodeSpec, points) -> UniPoly:
    """The unique degree-< k polynomial through k given (x, y) values."""
    pts = list(points)
    if len(pts) != code.k:
        raise WrongCount(f"need exactly k={code.k} points, got {len(pts)}")
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissa("x-coordinates must be distinct")
    return lagrange_interpolate(code.field, pts)
