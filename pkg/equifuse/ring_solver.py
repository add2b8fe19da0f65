"""
Fusion ring of C = rep A for the algebra A = V_0 + V_delta, delta = 4m, 8 | delta.

The ring is derived from the seed table (products with X_0, X_1 and the
exceptional pair) through the recursion X_i = X_1 X_{i-1} - X_{i-2}.
"""

from __future__ import annotations

import functools
import itertools
import logging
from dataclasses import dataclass

import numpy as np

from .arith import DEFAULT_TOLERANCE, Tolerance, quantum_integer
from .exceptions import CheckFailure, InconsistencyError, InvalidParameter, UnsupportedCase
from .report import CheckResult, VerificationReport
from .types import LabelKind, Z2
from .utils import frozen
from .verlinde_d import ModularDataD, fusion_coeff_n

log = logging.getLogger(__name__)


_KIND_ORDER = {LabelKind.PLAIN: 0, LabelKind.PLUS: 1, LabelKind.MINUS: 2}


@functools.total_ordering
@dataclass(frozen=True)
class CLabel:
    """
    A simple object of C. ``index`` is i for X_i and 2m for X+/X-, so that the
    sector and the twist are read off the index for every kind.
    """

    index: int
    kind: LabelKind = LabelKind.PLAIN

    def __post_init__(self):
        if self.index < 0:
            raise InvalidParameter("a non-negative index", self.index)

    @classmethod
    def plain(cls, i: int) -> CLabel:
        return cls(i, LabelKind.PLAIN)

    @classmethod
    def plus(cls, m: int) -> CLabel:
        return cls(2 * m, LabelKind.PLUS)

    @classmethod
    def minus(cls, m: int) -> CLabel:
        return cls(2 * m, LabelKind.MINUS)

    @classmethod
    def parse(cls, text: str, m: int) -> CLabel:
        """Accepts "X3", "3", "X+", "+", "X-", "-" """
        raw = str(text).strip()
        body = raw[1:] if raw[:1] in ("X", "x") else raw
        if body == "+":
            return cls.plus(m)
        if body == "-":
            return cls.minus(m)
        if not body.isdigit() or int(body) > 2 * m - 1:
            raise InvalidParameter(
                "a label X0..X{0}, X+ or X-".format(2 * m - 1), text
            )
        return cls.plain(int(body))

    def __lt__(self, other):
        if not isinstance(other, CLabel):
            return NotImplemented
        return (self.index, _KIND_ORDER[self.kind]) < (other.index, _KIND_ORDER[other.kind])

    @property
    def is_exceptional(self) -> bool:
        return self.kind is not LabelKind.PLAIN

    @property
    def sector(self) -> Z2:
        return Z2(self.index % 2)

    @property
    def name(self) -> str:
        if self.kind is LabelKind.PLUS:
            return "X+"
        if self.kind is LabelKind.MINUS:
            return "X-"
        return "X{0}".format(self.index)

    def __str__(self):
        return self.name


def labels_for(m: int) -> tuple[CLabel, ...]:
    plain = tuple(CLabel.plain(i) for i in range(2 * m))
    return plain + (CLabel.plus(m), CLabel.minus(m))


def _check_m(m: int):
    if int(m) != m or m < 2:
        raise InvalidParameter("m >= 2", m)
    if m % 2:
        raise UnsupportedCase(
            "m={0} is odd; only delta = 4m with 8 | delta is covered".format(m)
        )


@dataclass(frozen=True, eq=False)
class TypeDRing:
    m: int
    labels: tuple[CLabel, ...]
    l_tensor: np.ndarray
    dims: np.ndarray
    sectors: tuple[Z2, ...]
    action_a: tuple[int, ...]

    @property
    def kappa(self) -> int:
        return 4 * self.m + 2

    @property
    def delta(self) -> int:
        return 4 * self.m

    @property
    def plus(self) -> CLabel:
        return CLabel.plus(self.m)

    @property
    def minus(self) -> CLabel:
        return CLabel.minus(self.m)

    def position(self, label: CLabel) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InvalidParameter("a label of the m={0} ring".format(self.m), label)

    def product(self, x: CLabel, y: CLabel) -> dict[CLabel, int]:
        row = self.l_tensor[self.position(x), self.position(y)]
        return {z: int(n) for z, n in zip(self.labels, row) if n}

    def sector_labels(self, sector: Z2) -> tuple[CLabel, ...]:
        return tuple(x for x in self.labels if x.sector is sector)


def seed_table(m: int) -> dict[tuple[CLabel, CLabel], dict[CLabel, int]]:
    """The products stated explicitly for 8 | delta"""
    _check_m(m)
    x = CLabel.plain
    plus, minus = CLabel.plus(m), CLabel.minus(m)
    table: dict[tuple[CLabel, CLabel], dict[CLabel, int]] = {}

    for label in labels_for(m):
        table[(x(0), label)] = {label: 1}
    table[(x(1), x(0))] = {x(1): 1}
    for i in range(1, 2 * m - 1):
        table[(x(1), x(i))] = {x(i - 1): 1, x(i + 1): 1}
    table[(x(1), x(2 * m - 1))] = {x(2 * m - 2): 1, plus: 1, minus: 1}
    for exc in (plus, minus):
        table[(x(1), exc)] = {x(2 * m - 1): 1}

    same = {x(i): 1 for i in range(0, 2 * m - 3, 4)}
    cross = {x(i): 1 for i in range(2, 2 * m - 1, 4)}
    table[(plus, plus)] = {**same, plus: 1}
    table[(minus, minus)] = {**same, minus: 1}
    table[(plus, minus)] = dict(cross)
    table[(minus, plus)] = dict(cross)
    return table


def _row_matrix(products: dict[CLabel, dict[CLabel, int]], labels) -> np.ndarray:
    pos = {label: n for n, label in enumerate(labels)}
    row = np.zeros((len(labels), len(labels)), dtype=np.int64)
    for y, result in products.items():
        for z, mult in result.items():
            row[pos[y], pos[z]] = mult
    return row


def _check_row(name: str, row: np.ndarray, labels):
    negative = np.argwhere(row < 0)
    if negative.size:
        y, z = negative[0]
        raise InconsistencyError(
            "{0} x {1}".format(name, labels[y]), labels[z].name, int(row[y, z])
        )


def build_ring(m: int) -> TypeDRing:
    _check_m(m)
    labels = labels_for(m)
    size = len(labels)
    seeds = seed_table(m)
    plus_pos, minus_pos = size - 2, size - 1

    # rows[i][y, z] = L^z_{X_i, y}
    rows = [
        np.eye(size, dtype=np.int64),
        _row_matrix({y: seeds[(CLabel.plain(1), y)] for y in labels}, labels),
    ]
    for i in range(2, 2 * m):
        row = rows[i - 1] @ rows[1] - rows[i - 2]
        _check_row("X{0}".format(i), row, labels)
        rows.append(row)
        log.debug("derived row X%d of the m=%d ring", i, m)

    l_tensor = np.zeros((size, size, size), dtype=np.int64)
    for i in range(2 * m):
        l_tensor[i] = rows[i]
    for exc_pos in (plus_pos, minus_pos):
        exc = labels[exc_pos]
        for y_pos, y in enumerate(labels):
            if y.is_exceptional:
                result = seeds[(exc, y)]
                for z, mult in result.items():
                    l_tensor[exc_pos, y_pos, labels.index(z)] = mult
            else:
                # X+- (x) X_i is read as X_i (x) X+-
                l_tensor[exc_pos, y_pos] = l_tensor[y_pos, exc_pos]

    asymmetric = np.argwhere(l_tensor != l_tensor.transpose(1, 0, 2))
    if asymmetric.size:
        x, y, z = asymmetric[0]
        raise InconsistencyError(
            "{0} x {1}".format(labels[x], labels[y]),
            labels[z].name,
            int(l_tensor[x, y, z]),
        )

    kappa = 4 * m + 2
    dims = np.array(
        [
            quantum_integer(x.index + 1, kappa) / (2 if x.is_exceptional else 1)
            for x in labels
        ]
    )
    action = tuple(range(size - 2)) + (minus_pos, plus_pos)
    log.debug("built the m=%d ring with %d simples", m, size)
    return TypeDRing(
        m=m,
        labels=labels,
        l_tensor=frozen(l_tensor),
        dims=frozen(dims),
        sectors=tuple(x.sector for x in labels),
        action_a=action,
    )


def ring_coeff_L(x: CLabel, y: CLabel, z: CLabel, ring: TypeDRing) -> int:
    return int(ring.l_tensor[ring.position(x), ring.position(y), ring.position(z)])


def c_qdim(x: CLabel, ring: TypeDRing) -> float:
    return float(ring.dims[ring.position(x)])


def group_action(x: CLabel, ring: TypeDRing) -> CLabel:
    return ring.labels[ring.action_a[ring.position(x)]]


def class_twist(x: CLabel, ring: TypeDRing, d_data: ModularDataD) -> complex:
    """Twist of an e-sector simple: theta_i for X_i, theta_{2m} for X+-"""
    if x.sector is not Z2.E:
        raise UnsupportedCase("{0} is in the a-sector and has no single twist".format(x))
    return complex(d_data.twists[x.index])


def exceptional_pattern(ring: TypeDRing) -> dict[int, CLabel]:
    """For even i < 2m, the exceptional summand of X_i (x) X+"""
    pattern = {}
    for i in range(0, 2 * ring.m, 2):
        product = ring.product(CLabel.plain(i), ring.plus)
        found = [z for z in product if z.is_exceptional]
        if found:
            pattern[i] = found[0]
    log.debug("exceptional pattern for m=%d: %s", ring.m, pattern)
    return pattern


def restrict_to_d(x: CLabel, ring: TypeDRing) -> dict[int, int]:
    """G: the D-decomposition of a simple of C (X_i = V_i + V_{delta-i}, X+- = V_{2m})"""
    if x.is_exceptional:
        return {x.index: 1}
    summands: dict[int, int] = {}
    for k in (x.index, ring.delta - x.index):
        summands[k] = summands.get(k, 0) + 1
    return summands


def induce_from_d(k: int, ring: TypeDRing) -> dict[CLabel, int]:
    """F: A (x) V_k decomposed into simples of C"""
    if not 0 <= k <= ring.delta:
        raise InvalidParameter("an index in 0..{0}".format(ring.delta), k)
    if k == 2 * ring.m:
        return {ring.plus: 1, ring.minus: 1}
    return {CLabel.plain(min(k, ring.delta - k)): 1}


def lambda_circ(i: int, ring: TypeDRing) -> dict[CLabel, int]:
    """lambda_i for i in I° = {0..2m}, lambda_{2m} being X+ + X-"""
    if not 0 <= i <= 2 * ring.m:
        raise InvalidParameter("an index in 0..{0}".format(2 * ring.m), i)
    if i == 2 * ring.m:
        return {ring.plus: 1, ring.minus: 1}
    return {CLabel.plain(i): 1}


def combined_product(i: int, j: int, ring: TypeDRing) -> dict[int, int]:
    """
    Coefficients L^k_ij, k in I°, of lambda_i (x) lambda_j written in the
    basis lambda_0..lambda_{2m-1}, lambda_{2m} = X+ + X-.
    """
    total = np.zeros(len(ring.labels), dtype=np.int64)
    for x, cx in lambda_circ(i, ring).items():
        for y, cy in lambda_circ(j, ring).items():
            total += cx * cy * ring.l_tensor[ring.position(x), ring.position(y)]
    plus_coeff = int(total[ring.position(ring.plus)])
    minus_coeff = int(total[ring.position(ring.minus)])
    if plus_coeff != minus_coeff:
        raise InconsistencyError(
            "lambda_{0} x lambda_{1}".format(i, j), "X+ vs X-", plus_coeff - minus_coeff
        )
    coeffs = {k: int(total[k]) for k in range(2 * ring.m)}
    coeffs[2 * ring.m] = plus_coeff
    return coeffs


def coefrelat_check(
    ring: TypeDRing,
    d_data: ModularDataD,
    tol: Tolerance = DEFAULT_TOLERANCE,
    raise_on_failure: bool = True,
) -> VerificationReport:
    """L^k_ij = N^k_ij + N^{delta-k}_ij for k != 2m and L^{2m}_ij = N^{2m}_ij"""
    if d_data.delta != ring.delta:
        raise InvalidParameter("delta={0}".format(ring.delta), d_data.delta)
    report = VerificationReport(tolerance=tol.eps)
    half = 2 * ring.m
    for i, j in itertools.product(range(half + 1), repeat=2):
        coeffs = combined_product(i, j, ring)
        for k in range(half + 1):
            if k == half:
                expected = fusion_coeff_n(i, j, k, d_data)
            else:
                expected = fusion_coeff_n(i, j, k, d_data) + fusion_coeff_n(
                    i, j, ring.delta - k, d_data
                )
            residual = float(abs(coeffs[k] - expected))
            params = {"i": i, "j": j, "k": k, "m": ring.m}
            if residual >= tol.eps and raise_on_failure:
                raise CheckFailure("coefrelat", params, residual)
            report.add(CheckResult.of("coefrelat", params, residual, tol.eps))
    return report


def associativity_residual(ring: TypeDRing) -> float:
    L = ring.l_tensor
    left = np.einsum("xyr,rzw->xyzw", L, L)
    right = np.einsum("yzr,xrw->xyzw", L, L)
    return float(np.max(np.abs(left - right)))


def dimension_residual(ring: TypeDRing) -> float:
    d = ring.dims
    return float(np.max(np.abs(np.outer(d, d) - ring.l_tensor @ d)))


def automorphism_residual(ring: TypeDRing) -> float:
    perm = np.array(ring.action_a)
    L = ring.l_tensor
    permuted = L[np.ix_(perm, perm, perm)]
    return float(np.max(np.abs(permuted - L)))


def unit_duality_residual(ring: TypeDRing) -> float:
    L = ring.l_tensor
    identity = np.eye(len(ring.labels), dtype=np.int64)
    unit = np.max(np.abs(L[0] - identity))
    duality = np.max(np.abs(L[:, :, 0] - identity))
    return float(max(unit, duality))


def seed_residual(ring: TypeDRing) -> float:
    worst = 0
    for (x, y), expected in seed_table(ring.m).items():
        got = ring.product(x, y)
        for z in set(got) | set(expected):
            worst = max(worst, abs(got.get(z, 0) - expected.get(z, 0)))
    return float(worst)


def dimension_relation_residual(ring: TypeDRing, d_data: ModularDataD) -> float:
    """dim_C(X) = dim_D(G(X)) / dim_D(A) for every simple X"""
    dim_a = d_data.dims[0] + d_data.dims[ring.delta]
    worst = 0.0
    for x in ring.labels:
        dim_d = sum(n * d_data.dims[k] for k, n in restrict_to_d(x, ring).items())
        expected = dim_d / dim_a
        worst = max(worst, abs(c_qdim(x, ring) - expected))
    return float(worst)


def induction_residual(ring: TypeDRing) -> float:
    """F(G(lambda_i)) = 2 lambda_i for i in I°"""
    worst = 0
    for i in range(2 * ring.m + 1):
        lam = lambda_circ(i, ring)
        image: dict[CLabel, int] = {}
        for x, cx in lam.items():
            for k, nk in restrict_to_d(x, ring).items():
                for z, nz in induce_from_d(k, ring).items():
                    image[z] = image.get(z, 0) + cx * nk * nz
        for z in set(image) | set(lam):
            worst = max(worst, abs(image.get(z, 0) - 2 * lam.get(z, 0)))
    return float(worst)


def grading_residual(ring: TypeDRing) -> int:
    """Largest multiplicity L^z_xy with sector(z) != sector(x) sector(y)"""
    worst = 0
    for (a, x), (b, y), (c, z) in itertools.product(enumerate(ring.labels), repeat=3):
        if z.sector is not x.sector.compose(y.sector):
            worst = max(worst, int(ring.l_tensor[a, b, c]))
    return worst
