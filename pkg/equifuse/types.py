from __future__ import annotations

import enum


class Z2(enum.IntEnum):
    """
    The group Z/2 written multiplicatively: E is the identity, A the generator.
    Used both for the grading (sector) of an object and for the twist g of a
    morphism X -> gX.
    """

    E = 0
    A = 1

    def compose(self, other: Z2) -> Z2:
        return Z2(int(self) ^ int(other))

    def inverse(self) -> Z2:
        return self

    @property
    def symbol(self) -> str:
        return "e" if self is Z2.E else "a"


class LabelKind(enum.Enum):
    """Kinds of simple objects of rep A: X_0..X_{2m-1} and the pair X+/X-"""

    PLAIN = "plain"
    PLUS = "plus"
    MINUS = "minus"


class RingKind(enum.Enum):
    D = "d"
    C = "c"


class SBlock(enum.Enum):
    """
    "d" is the s-matrix of V(D), "c-ee" the block on V_{e,e},
    "c-ea" the block pairing V_{e,a} with V_{a,e}
    """

    D = "d"
    C_EE = "c-ee"
    C_EA = "c-ea"


class Formula(enum.Enum):
    VERLINDE = "verlinde"
    EXT_E = "ext-e"
    EXT_A = "ext-a"
    ORACLE = "oracle"


class OutputFormat(enum.Enum):
    TEXT = "text"
    JSON = "json"


class Command(enum.Enum):
    TABLE = "table"
    SMATRIX = "smatrix"
    COEFF = "coeff"
    VERIFY = "verify"
