"""
Term orders and monomial helpers.

Monomials are exponent tuples over the variable list of their ring (position
i is the exponent of variable i). The lex and grevlex keys come from
``sympy.polys.orderings``; block-elimination orders compare block by block,
each block graded reverse lexicographically, so the first block is
eliminated first.
"""

from dataclasses import dataclass
from typing import Callable, Sequence, Tuple

from sympy.polys.monomials import monomial_deg, monomial_div, monomial_divides, monomial_lcm, monomial_mul
from sympy.polys.orderings import grevlex, lex

Monomial = Tuple[int, ...]

LEX = "lex"
GREVLEX = "grevlex"
BLOCK = "block"


@dataclass(frozen=True)
class TermOrder:
    """
    A monomial order.

    Attributes:
        kind: ``lex``, ``grevlex`` or ``block``
        blocks: Ordered partition of variable positions (block orders only)
    """

    kind: str = GREVLEX
    blocks: Tuple[Tuple[int, ...], ...] = ()

    def __post_init__(self):
        if self.kind not in (LEX, GREVLEX, BLOCK):
            raise ValueError(f"unknown term order {self.kind!r}")
        if self.kind == BLOCK and not self.blocks:
            raise ValueError("block order needs at least one block")
        if self.kind != BLOCK and self.blocks:
            raise ValueError(f"{self.kind} order takes no blocks")

    @classmethod
    def lex(cls) -> "TermOrder":
        return cls(LEX)

    @classmethod
    def grevlex(cls) -> "TermOrder":
        return cls(GREVLEX)

    @classmethod
    def block(cls, blocks: Sequence[Sequence[int]]) -> "TermOrder":
        return cls(BLOCK, tuple(tuple(b) for b in blocks if len(b)))

    @classmethod
    def from_name(cls, name: str) -> "TermOrder":
        if name not in (LEX, GREVLEX):
            raise ValueError(f"unknown term order {name!r} (expected lex or grevlex)")
        return cls(name)

    def validate(self, nvars: int) -> None:
        """
        Check that the order fits a ring with nvars variables.

        Raises:
            ValueError: If the blocks do not partition range(nvars)
        """
        if self.kind != BLOCK:
            return
        flat = sorted(i for b in self.blocks for i in b)
        if flat != list(range(nvars)):
            raise ValueError(f"blocks {self.blocks} do not partition {nvars} variables")

    def key_function(self) -> Callable[[Monomial], tuple]:
        """Sort key: larger key means larger monomial."""
        if self.kind == LEX:
            return lex
        if self.kind == GREVLEX:
            return grevlex
        blocks = self.blocks

        def block_key(m: Monomial) -> tuple:
            return tuple(grevlex(tuple(m[i] for i in b)) for b in blocks)

        return block_key

    def restrict(self, keep: Sequence[int]) -> "TermOrder":
        """The induced order on the variables at positions ``keep`` (renumbered)."""
        if self.kind != BLOCK:
            return self
        position = {old: new for new, old in enumerate(keep)}
        blocks = [tuple(position[i] for i in b if i in position) for b in self.blocks]
        blocks = [b for b in blocks if b]
        return TermOrder.block(blocks) if blocks else TermOrder.grevlex()

    def describe(self, names: Sequence[str]) -> str:
        if self.kind != BLOCK:
            return self.kind
        return "block(" + " | ".join(", ".join(names[i] for i in b) for b in self.blocks) + ")"


def compare(m1: Monomial, m2: Monomial, order: TermOrder) -> int:
    """
    Compare two monomials.

    Returns:
        -1, 0 or 1 as m1 is smaller than, equal to or greater than m2
    """
    key = order.key_function()
    k1, k2 = key(m1), key(m2)
    return (k1 > k2) - (k1 < k2)


__all__ = [
    "Monomial",
    "TermOrder",
    "compare",
    "monomial_deg",
    "monomial_div",
    "monomial_divides",
    "monomial_lcm",
    "monomial_mul",
]
