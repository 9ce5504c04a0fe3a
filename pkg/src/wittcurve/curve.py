"""Canonical Witt classes of a smooth projective curve over F_q, q odd.

Every class is determined by a parity, a square-class twist u, and an
order-2 line bundle class L: odd (u, L) is the rank-1 class carried by L
with its fixed base form twisted by u, and even (u, L) is the rank-2 class
<1, -(u-twisted form on L)>.  The zero class is exactly even (One, identity),
the hyperbolic plane on the structure sheaf; no separate zero variant is
needed because the arithmetic tables already normalize to it.

The twist lives in the square classes of the base field by the order-2
structure of L (its fixed squaring isomorphism), so only q mod 4 enters the
tables, through sigma, the square class of -1.
"""

from __future__ import annotations

from typing import Iterable, Literal, Sequence

from .fields import SquareClass, minus_one_class
from .pic2 import DEFAULT_ENUMERATION_BOUND, Pic2Group, PicElement

_ONE, _NS = SquareClass.ONE, SquareClass.NONSQUARE

Parity = Literal["odd", "even"]


class WittClass:
    """A canonical Witt class: (parity, u, L) in a fixed context q mod 4."""

    __slots__ = ("parity", "u", "L", "context")

    def __init__(self, parity: Parity, u: SquareClass, L: PicElement, context: int):
        if parity not in ("odd", "even"):
            raise ValueError(f"parity must be 'odd' or 'even', got {parity!r}")
        if not isinstance(u, SquareClass):
            raise TypeError("u must be a SquareClass")
        if not isinstance(L, PicElement):
            raise TypeError("L must be a PicElement")
        if context not in (1, 3):
            raise ValueError(f"context must be 1 or 3, got {context}")
        self.parity = parity
        self.u = u
        self.L = L
        self.context = context

    # constructors

    @staticmethod
    def odd(u: SquareClass, L: PicElement, context: int) -> "WittClass":
        return WittClass("odd", u, L, context)

    @staticmethod
    def even(u: SquareClass, L: PicElement, context: int) -> "WittClass":
        return WittClass("even", u, L, context)

    @staticmethod
    def zero(context: int, group: Pic2Group) -> "WittClass":
        return WittClass("even", _ONE, group.identity, context)

    @staticmethod
    def one(context: int, group: Pic2Group) -> "WittClass":
        return WittClass("odd", _ONE, group.identity, context)

    @property
    def rank(self) -> int:
        return self.L.rank

    def is_zero(self) -> bool:
        return self.parity == "even" and self.u is _ONE and self.L.is_identity()

    @property
    def sigma(self) -> SquareClass:
        return minus_one_class(self.context)

    # ring structure

    def _compatible(self, other: "WittClass") -> None:
        if not isinstance(other, WittClass):
            raise TypeError(f"expected WittClass, got {type(other).__name__}")
        if self.context != other.context:
            raise ValueError(f"mixed contexts: {self.context} vs {other.context}")
        if self.L.rank != other.L.rank:
            raise ValueError(f"mixed group ranks: {self.L.rank} vs {other.L.rank}")

    def __add__(self, other: "WittClass") -> "WittClass":
        self._compatible(other)
        if self.parity == "odd" and other.parity == "odd":
            return WittClass("even", self.sigma * self.u * other.u, self.L * other.L, self.context)
        if self.parity == "odd":
            return WittClass("odd", self.u * other.u, self.L * other.L, self.context)
        if other.parity == "odd":
            return WittClass("odd", other.u * self.u, other.L * self.L, self.context)
        return WittClass("even", self.u * other.u, self.L * other.L, self.context)

    def __neg__(self) -> "WittClass":
        if self.parity == "odd":
            return WittClass("odd", self.sigma * self.u, self.L, self.context)
        return self

    def __sub__(self, other: "WittClass") -> "WittClass":
        return self + (-other)

    def __mul__(self, other: "WittClass") -> "WittClass":
        self._compatible(other)
        if self.parity == "odd" and other.parity == "odd":
            return WittClass("odd", self.u * other.u, self.L * other.L, self.context)
        if self.parity == "odd":
            return other  # odd units act trivially on the even ideal
        if other.parity == "odd":
            return self
        return WittClass("even", _ONE, PicElement(self.L.rank, 0), self.context)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WittClass):
            return NotImplemented
        return (
            self.parity == other.parity
            and self.u is other.u
            and self.L == other.L
            and self.context == other.context
        )

    def __hash__(self) -> int:
        return hash((self.parity, self.u, self.L, self.context))

    def __str__(self) -> str:
        # unit letter, then the bundle bits when nontrivial; bits alone would
        # collide with the unit letter at r = 1
        tag = "1" if self.u is _ONE else "s"
        if not self.L.is_identity():
            tag = f"{tag}.{self.L}"
        if self.parity == "odd":
            return f"<{tag}>"
        if self.is_zero():
            return "0"
        return f"<1,-{tag}>"

    def __repr__(self) -> str:
        return f"{self} (q = {self.context} mod 4, r = {self.L.rank})"

    # serialization

    def to_json(self) -> dict:
        return {"parity": self.parity, "u": str(self.u), "L": str(self.L)}

    @staticmethod
    def from_json(data: dict, context: int, group: Pic2Group) -> "WittClass":
        return WittClass(
            data["parity"],
            SquareClass.from_string(data["u"]),
            group.element(data["L"]),
            context,
        )


def wc_add(a: WittClass, b: WittClass) -> WittClass:
    return a + b


def wc_mul(a: WittClass, b: WittClass) -> WittClass:
    return a * b


def wc_neg(a: WittClass) -> WittClass:
    return -a


def signed_discriminant_class(a: WittClass) -> tuple[SquareClass, PicElement]:
    """The invariant pair (square-class twist, line bundle class) of d±.

    For even (w, N) the defining representative is built from its own signed
    discriminant, so the pair is (w, N) directly; for odd (u, L) the rank-1
    sign flip contributes sigma.
    """
    if a.parity == "even":
        return (a.u, a.L)
    return (a.sigma * a.u, a.L)


def enumerate_classes(
    context: int, group: Pic2Group, bound: int = DEFAULT_ENUMERATION_BOUND
) -> list[WittClass]:
    """All 4·2^r classes: the odd block (u = 1 then u = s), then the even block."""
    out = []
    for parity in ("odd", "even"):
        for u in (_ONE, _NS):
            for L in group.enumerate(bound):
                out.append(WittClass(parity, u, L, context))
    return out


def reduce_word(
    word: Iterable[tuple[SquareClass, PicElement]] | Sequence[tuple[SquareClass, PicElement]],
    context: int,
    group: Pic2Group,
) -> WittClass:
    """Fold a word of rank-1 letters (u, L) into its canonical class.

    The word denotes the orthogonal sum of the twisted rank-1 forms; folding
    left-to-right with the addition table yields a class whose parity is the
    word length mod 2 and whose line bundle part is the product of the
    letters' L components.
    """
    acc = WittClass.zero(context, group)
    for u, L in word:
        if L.rank != group.r:
            raise ValueError(f"letter rank {L.rank} does not match group rank {group.r}")
        acc = acc + WittClass.odd(u, L, context)
    return acc
