"""
The extended Verlinde algebra of C = rep A for the type D quantum subgroup.

Basis vectors are morphism classes in Mor(X, ^gX): ``l:i`` is lambda_i
(g = e), ``al:i`` is the generic basis vector of Mor(X_i, ^aX_i) and
``l:+``/``l:-`` are the exceptional pair. Only plain classes are fixed by the
Z/2 action, so only they carry an ``al`` vector.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass

import numpy as np

from .arith import (
    DEFAULT_TOLERANCE,
    Tolerance,
    gauss_sum_reciprocal,
    q_power,
    theta,
)
from .exceptions import CheckFailure, ConstructionFailure, InvalidParameter, UnsupportedCase
from .ring_solver import CLabel, TypeDRing, _check_m, build_ring, c_qdim, class_twist
from .types import LabelKind, Z2
from .utils import frozen, max_abs, prune_zero, symmetry_residual, unitarity_residual
from .verlinde_d import ModularDataD, sl2_relation_residual

log = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class GradedLabel:
    cls: CLabel
    twist: Z2 = Z2.E

    def __post_init__(self):
        if self.twist is Z2.A and self.cls.is_exceptional:
            raise InvalidParameter(
                "a class fixed by the Z/2 action for twist a", self.cls.name
            )

    @classmethod
    def lam(cls, x: CLabel) -> GradedLabel:
        return cls(x, Z2.E)

    @classmethod
    def twisted(cls, x: CLabel) -> GradedLabel:
        return cls(x, Z2.A)

    @classmethod
    def parse(cls, text: str, m: int) -> GradedLabel:
        """Accepts "l:3", "al:2", "l:+", "l:-" """
        head, sep, body = str(text).strip().partition(":")
        if not sep or head not in ("l", "al"):
            raise InvalidParameter("a graded label l:i, al:i, l:+ or l:-", text)
        twist = Z2.A if head == "al" else Z2.E
        return cls(CLabel.parse(body, m), twist)

    @property
    def sector(self) -> Z2:
        return self.cls.sector

    @property
    def name(self) -> str:
        prefix = "al" if self.twist is Z2.A else "l"
        if self.cls.kind is LabelKind.PLUS:
            return prefix + ":+"
        if self.cls.kind is LabelKind.MINUS:
            return prefix + ":-"
        return "{0}:{1}".format(prefix, self.cls.index)

    def __str__(self):
        return self.name


class ExtVector:
    """A finite linear combination of graded basis labels"""

    def __init__(self, terms: dict | None = None, eps: float = DEFAULT_TOLERANCE.eps):
        self.terms: dict[GradedLabel, complex] = prune_zero(
            {label: complex(value) for label, value in (terms or {}).items()}, eps
        )

    @classmethod
    def basis(cls, label: GradedLabel) -> ExtVector:
        return cls({label: 1})

    def coefficient(self, label: GradedLabel) -> complex:
        return self.terms.get(label, 0j)

    @property
    def labels(self) -> list[GradedLabel]:
        return sorted(self.terms)

    def scaled(self, factor: complex) -> ExtVector:
        return ExtVector({label: factor * c for label, c in self.terms.items()})

    def __add__(self, other: ExtVector) -> ExtVector:
        terms = dict(self.terms)
        for label, c in other.terms.items():
            terms[label] = terms.get(label, 0) + c
        return ExtVector(terms)

    def __sub__(self, other: ExtVector) -> ExtVector:
        return self + other.scaled(-1)

    def __neg__(self) -> ExtVector:
        return self.scaled(-1)

    def __mul__(self, factor: complex) -> ExtVector:
        return self.scaled(factor)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ExtVector):
            return NotImplemented
        return self.terms == other.terms

    def is_close(self, other: ExtVector, eps: float = DEFAULT_TOLERANCE.eps) -> bool:
        return self.distance(other) < eps

    def distance(self, other: ExtVector) -> float:
        difference = (self - other).terms
        return max((abs(c) for c in difference.values()), default=0.0)

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def to_dict(self) -> dict[str, complex]:
        return {label.name: c for label, c in sorted(self.terms.items())}

    def __repr__(self):
        if not self.terms:
            return "ExtVector(0)"
        parts = ("{0}*{1}".format(_fmt(c), label) for label, c in self)
        return "ExtVector({0})".format(" + ".join(parts))


def _fmt(c: complex) -> str:
    if abs(c.imag) < DEFAULT_TOLERANCE.eps:
        return "{0:.6g}".format(c.real)
    return "({0:.6g})".format(c)


@dataclass(frozen=True, eq=False)
class ExtModularData:
    ring: TypeDRing
    d_data: ModularDataD
    ee_labels: tuple[GradedLabel, ...]
    ea_rows: tuple[GradedLabel, ...]
    ea_cols: tuple[GradedLabel, ...]
    s_ee: np.ndarray
    s_ea: np.ndarray
    big_d_c: float

    @property
    def m(self) -> int:
        return self.ring.m

    @property
    def kappa(self) -> int:
        return self.ring.kappa

    @property
    def twists_ee(self) -> np.ndarray:
        return np.array([class_twist(x.cls, self.ring, self.d_data) for x in self.ee_labels])

    @property
    def dims_ee(self) -> np.ndarray:
        return np.array([c_qdim(x.cls, self.ring) for x in self.ee_labels])

    @property
    def p_plus(self) -> complex:
        return complex(np.sum(self.twists_ee * self.dims_ee**2))

    @property
    def p_minus(self) -> complex:
        return complex(np.sum(self.twists_ee.conj() * self.dims_ee**2))

    def ee_position(self, x: GradedLabel | CLabel) -> int:
        label = x if isinstance(x, GradedLabel) else GradedLabel.lam(x)
        try:
            return self.ee_labels.index(label)
        except ValueError:
            raise InvalidParameter("a basis label of V_(e,e)", label)

    def ea_row(self, x: GradedLabel | CLabel) -> int:
        label = x if isinstance(x, GradedLabel) else GradedLabel.lam(x)
        try:
            return self.ea_rows.index(label)
        except ValueError:
            raise InvalidParameter("a basis label of V_(e,a)", label)

    def ea_col(self, x: GradedLabel | CLabel) -> int:
        label = x if isinstance(x, GradedLabel) else GradedLabel.twisted(x)
        try:
            return self.ea_cols.index(label)
        except ValueError:
            raise InvalidParameter("a basis label of V_(a,e)", label)

    def block(self, x: GradedLabel) -> tuple[Z2, Z2]:
        return x.twist, x.sector

    def s_pair(self, x: GradedLabel, y: GradedLabel) -> float:
        """(s x, y) for two basis labels"""
        bx, by = self.block(x), self.block(y)
        if bx == (Z2.E, Z2.E) and by == (Z2.E, Z2.E):
            return float(self.s_ee[self.ee_position(x), self.ee_position(y)])
        if bx == (Z2.E, Z2.A) and by == (Z2.A, Z2.E):
            return float(self.s_ea[self.ea_row(x), self.ea_col(y)])
        if bx == (Z2.A, Z2.E) and by == (Z2.E, Z2.A):
            return float(self.s_ea[self.ea_row(y), self.ea_col(x)])
        if bx == (Z2.A, Z2.A) and by == (Z2.A, Z2.A):
            raise UnsupportedCase("the s-block on V_(a,a) is not built")
        return 0.0


def _ee_basis(m: int) -> tuple[GradedLabel, ...]:
    plain = tuple(GradedLabel.lam(CLabel.plain(p)) for p in range(0, 2 * m, 2))
    return plain + (GradedLabel.lam(CLabel.plus(m)), GradedLabel.lam(CLabel.minus(m)))


def excval(m: int) -> float:
    """(s lambda+-, lambda+-) = (sqrt(2/kappa) + (-1)^(m/2)) / 2"""
    _check_m(m)
    kappa = 4 * m + 2
    return float(0.5 * (np.sqrt(2 / kappa) + (-1) ** (m // 2)))


def exc_cross(m: int) -> float:
    """(s lambda+-, lambda-+) = (sqrt(2/kappa) - (-1)^(m/2)) / 2"""
    _check_m(m)
    kappa = 4 * m + 2
    return float(0.5 * (np.sqrt(2 / kappa) - (-1) ** (m // 2)))


def build_s_c(
    ring: TypeDRing, d_data: ModularDataD, tol: Tolerance = DEFAULT_TOLERANCE
) -> ExtModularData:
    if ring.kappa != d_data.kappa:
        raise InvalidParameter("kappa={0}".format(ring.kappa), d_data.kappa)
    m = ring.m
    half = 2 * m
    s_d = d_data.s

    ee_labels = _ee_basis(m)
    n_plain = m
    s_ee = np.zeros((m + 2, m + 2))
    for a, b in itertools.product(range(n_plain), repeat=2):
        s_ee[a, b] = 2 * s_d[2 * a, 2 * b]
    for a in range(n_plain):
        for exc in (n_plain, n_plain + 1):
            s_ee[a, exc] = s_ee[exc, a] = s_d[half, 2 * a]
    s_ee[n_plain, n_plain] = s_ee[n_plain + 1, n_plain + 1] = excval(m)
    s_ee[n_plain, n_plain + 1] = s_ee[n_plain + 1, n_plain] = exc_cross(m)

    residual = max(unitarity_residual(s_ee), symmetry_residual(s_ee))
    if residual >= tol.eps:
        raise ConstructionFailure("the s-matrix of C_e for m={0}".format(m), residual)

    ea_rows = tuple(GradedLabel.lam(CLabel.plain(j)) for j in range(1, half, 2))
    ea_cols = tuple(GradedLabel.twisted(CLabel.plain(p)) for p in range(0, half, 2))
    s_ea = np.array(
        [[2 * s_d[row.cls.index, col.cls.index] for col in ea_cols] for row in ea_rows]
    )
    log.debug("assembled s-blocks for m=%d (unitarity residual %.3e)", m, residual)

    return ExtModularData(
        ring=ring,
        d_data=d_data,
        ee_labels=ee_labels,
        ea_rows=ea_rows,
        ea_cols=ea_cols,
        s_ee=frozen(s_ee),
        s_ea=frozen(s_ea),
        big_d_c=d_data.big_d / 2,
    )


def exc_twist_sum(ext: ExtModularData) -> complex:
    """theta_2m^-2 sum_z L^z_{++} theta_z d_z, before normalization"""
    ring = ext.ring
    plus = ring.plus
    total = 0j
    for z, mult in ring.product(plus, plus).items():
        total += mult * class_twist(z, ring, ext.d_data) * c_qdim(z, ring)
    return complex(total / class_twist(plus, ring, ext.d_data) ** 2)


def _agreement(name: str, m: int, value: complex, tol: Tolerance, check: bool) -> float:
    residual = abs(value - excval(m))
    log.debug("%s for m=%d: %s (residual %.3e)", name, m, value, residual)
    if check and residual >= tol.eps:
        raise CheckFailure(name, {"m": m}, residual)
    return float(value.real)


def exc_via_twists(
    ext: ExtModularData, tol: Tolerance = DEFAULT_TOLERANCE, check: bool = True
) -> float:
    value = exc_twist_sum(ext) / ext.big_d_c
    return _agreement("exc-twists", ext.m, value, tol, check)


def gauss_8_kappa(m: int) -> complex:
    """S(8, kappa) obtained from the directly summed S(kappa, 8)"""
    _check_m(m)
    return gauss_sum_reciprocal(8, 4 * m + 2)


def alternating_gauss_residual(m: int) -> float:
    """sum_{p=0}^{2m+1} (-1)^(p+1) q^(2p^2) against -(1 + S(8, kappa)/2)"""
    kappa = 4 * m + 2
    total = sum((-1) ** (p + 1) * q_power(2 * p * p, kappa) for p in range(2 * m + 2))
    return abs(total + 1 + gauss_8_kappa(m) / 2)


def exc_gauss_unnormalized(m: int) -> complex:
    kappa = 4 * m + 2
    q = q_power(1, kappa)
    prefactor = theta(2 * m, kappa) ** -2 * q_power(-1, kappa) * (-1) / (q - 1 / q)
    return complex(prefactor * 0.5 * (1 + 0.5 * gauss_8_kappa(m)))


def exc_via_gauss(
    m: int,
    d_data: ModularDataD | None = None,
    tol: Tolerance = DEFAULT_TOLERANCE,
    check: bool = True,
) -> float:
    d_data = d_data or ModularDataD.for_m(m)
    value = exc_gauss_unnormalized(m) / (d_data.big_d / 2)
    return _agreement("exc-gauss", m, value, tol, check)


def exc_sum_residual(ext: ExtModularData) -> float:
    middle = 2 * ext.m
    return abs(excval(ext.m) + exc_cross(ext.m) - ext.d_data.s[middle, middle])


def _check_plain_e(x: GradedLabel):
    if x.cls.is_exceptional or x.sector is not Z2.E:
        raise UnsupportedCase(
            "{0} is not an even plain class fixed by the Z/2 action".format(x)
        )


def tensor(x: ExtVector, y: ExtVector, ext: ExtModularData) -> ExtVector:
    ring = ext.ring
    result = ExtVector()
    for (u, cu), (v, cv) in itertools.product(x, y):
        if u.twist is not v.twist:
            continue
        if u.twist is Z2.A:
            raise UnsupportedCase("tensor products of twisted classes {0} (x) {1}".format(u, v))
        product = {
            GradedLabel.lam(z): cu * cv * mult for z, mult in ring.product(u.cls, v.cls).items()
        }
        result = result + ExtVector(product)
    return result


def convolution(x: ExtVector, y: ExtVector, ext: ExtModularData) -> ExtVector:
    for label in itertools.chain(x.terms, y.terms):
        if label.sector is not Z2.E:
            raise UnsupportedCase("convolution outside V_(*,e): {0}".format(label))
    terms: dict[GradedLabel, complex] = {}
    for (u, cu), (v, cv) in itertools.product(x, y):
        if u.cls != v.cls:
            continue
        label = GradedLabel(u.cls, u.twist.compose(v.twist))
        terms[label] = terms.get(label, 0) + cu * cv / c_qdim(u.cls, ext.ring)
    return ExtVector(terms)


def change_of_basis_m(x: ExtVector) -> ExtVector:
    """lambda_i -> (al_i - lambda_i)/2 and al_i -> (al_i + lambda_i)/2 on invariant pairs"""
    result = ExtVector()
    for label, c in x:
        if label.sector is not Z2.E:
            raise UnsupportedCase("change of basis outside V_(*,e): {0}".format(label))
        if label.cls.is_exceptional:
            result = result + ExtVector({label: c})
            continue
        sign = 1 if label.twist is Z2.A else -1
        result = result + ExtVector(
            {GradedLabel.twisted(label.cls): c / 2, GradedLabel.lam(label.cls): sign * c / 2}
        )
    return result


def inverse_change_of_basis_m(x: ExtVector) -> ExtVector:
    result = ExtVector()
    for label, c in x:
        if label.sector is not Z2.E:
            raise UnsupportedCase("change of basis outside V_(*,e): {0}".format(label))
        if label.cls.is_exceptional:
            result = result + ExtVector({label: c})
            continue
        sign = 1 if label.twist is Z2.A else -1
        result = result + ExtVector(
            {GradedLabel.twisted(label.cls): c, GradedLabel.lam(label.cls): sign * c}
        )
    return result


def alpha(i: int, ring: TypeDRing) -> ExtVector:
    x = GradedLabel.lam(CLabel.plain(i))
    ring.position(x.cls)
    _check_plain_e(x)
    return change_of_basis_m(ExtVector.basis(x))


def beta(i: int, ring: TypeDRing) -> ExtVector:
    x = GradedLabel.twisted(CLabel.plain(i))
    ring.position(x.cls)
    _check_plain_e(x)
    return change_of_basis_m(ExtVector.basis(x))


def t_tilde(x: ExtVector, ext: ExtModularData) -> ExtVector:
    terms = {}
    for label, c in x:
        if label.sector is not Z2.E:
            raise UnsupportedCase(
                "no twist scalar is fixed on Mor(X_i, ^gX_i) for {0}".format(label)
            )
        terms[label] = c * class_twist(label.cls, ext.ring, ext.d_data)
    return ExtVector(terms)


def bilinear_form(x: ExtVector, y: ExtVector) -> complex:
    return complex(sum(c * y.coefficient(label) for label, c in x.terms.items()))


def s_apply(x: ExtVector, ext: ExtModularData) -> ExtVector:
    terms: dict[GradedLabel, complex] = {}
    for label, c in x:
        block = ext.block(label)
        if block == (Z2.E, Z2.E):
            targets = ext.ee_labels
        elif block == (Z2.E, Z2.A):
            targets = ext.ea_cols
        elif block == (Z2.A, Z2.E):
            targets = ext.ea_rows
        else:
            raise UnsupportedCase("the s-block on V_(a,a) is not built")
        for target in targets:
            terms[target] = terms.get(target, 0) + c * ext.s_pair(label, target)
    return ExtVector(terms)


def ee_twist_s_matrix(ext: ExtModularData) -> np.ndarray:
    """theta_x^-1 theta_y^-1 sum_z L^z_xy theta_z d_z / D_C over the V_(e,e) basis"""
    ring = ext.ring
    twists = ext.twists_ee
    size = len(ext.ee_labels)
    s = np.zeros((size, size), dtype=complex)
    for a, b in itertools.product(range(size), repeat=2):
        x, y = ext.ee_labels[a].cls, ext.ee_labels[b].cls
        total = sum(
            mult * class_twist(z, ring, ext.d_data) * c_qdim(z, ring)
            for z, mult in ring.product(x, y).items()
        )
        s[a, b] = total / (twists[a] * twists[b] * ext.big_d_c)
    return s


def ee_twist_residual(ext: ExtModularData) -> float:
    return max_abs(ee_twist_s_matrix(ext) - ext.s_ee)


def ce_modular_residual(ext: ExtModularData) -> float:
    return sl2_relation_residual(ext.s_ee, ext.twists_ee, ext.p_plus, ext.big_d_c)


def global_dimension_residual(ext: ExtModularData) -> float:
    """|G| D_C = D for D_C = sqrt(p+ p-) computed on C_e"""
    d_c = float(np.sqrt(abs(ext.p_plus * ext.p_minus)))
    return abs(2 * d_c - ext.d_data.big_d)


def build_extended(m: int, tol: Tolerance = DEFAULT_TOLERANCE) -> ExtModularData:
    return build_s_c(build_ring(m), ModularDataD.for_m(m), tol)
