"""
Evaluators for the classical and the extended Verlinde formulas, and the
verifiers that hold them against the fusion tensor of the ring solver.
"""

from __future__ import annotations

import itertools
import logging

import numpy as np

from .arith import DEFAULT_TOLERANCE, Tolerance, reciprocity_residual
from .exceptions import CheckFailure, ConstructionFailure, InvalidParameter, ResidualError
from .extended_algebra import (
    ExtModularData,
    ExtVector,
    GradedLabel,
    alpha,
    alternating_gauss_residual,
    beta,
    bilinear_form,
    build_s_c,
    change_of_basis_m,
    ce_modular_residual,
    convolution,
    ee_twist_residual,
    exc_sum_residual,
    exc_via_gauss,
    exc_via_twists,
    excval,
    global_dimension_residual,
    s_apply,
    tensor,
)
from .report import CheckResult, VerificationReport
from .ring_solver import (
    CLabel,
    associativity_residual,
    automorphism_residual,
    build_ring,
    c_qdim,
    coefrelat_check,
    dimension_relation_residual,
    dimension_residual,
    grading_residual,
    induction_residual,
    ring_coeff_L,
    seed_residual,
    unit_duality_residual,
)
from .types import Z2
from .utils import symmetry_residual, unitarity_residual
from .verlinde_d import (
    ModularDataD,
    dimension_s_residual,
    n_associativity_residual,
    recover_integer,
    sl2_relation_residual,
    verlinde_coeff,
    verlinde_residual,
)

log = logging.getLogger(__name__)

SUPPORTED_M = (2, 4, 6)

# integer recovery inside the scans only needs the nearest integer
_HALF = Tolerance(0.5)


def _as_label(x: CLabel | int | str, m: int) -> CLabel:
    if isinstance(x, CLabel):
        return x
    return CLabel.parse(str(x), m)


def _oracle_check(
    name: str,
    value: float,
    expected: int,
    params: dict,
    tol: Tolerance,
):
    residual = abs(value - expected)
    if residual >= tol.eps:
        raise CheckFailure(name, params, residual)


def verlinde_ee(x: CLabel, y: CLabel, z: CLabel, ext: ExtModularData) -> float:
    """sum_p s_xp s_yp s_{z*}p / s_0p over the V_(e,e) basis, lambda+- included"""
    s = ext.s_ee
    a, b, c = (ext.ee_position(label) for label in (x, y, z))
    return float(np.sum(s[a] * s[b] * s[c] / s[0]))


def ext_coeff_e(
    i,
    j,
    k,
    ext: ExtModularData,
    tol: Tolerance = DEFAULT_TOLERANCE,
    check: bool = True,
) -> float:
    """
    Fusion coefficient L^k_ij for i an even class (plain or exceptional) and
    j, k in the same sector g. For g = e this is the Verlinde formula of
    C_e; for g = a the sum runs over the invariant classes with the s_ea block.
    """
    m = ext.m
    x, y, z = (_as_label(label, m) for label in (i, j, k))
    if x.sector is not Z2.E:
        raise InvalidParameter("an even class for i", x.name)
    if y.sector is not z.sector:
        raise InvalidParameter("j and k in the same sector", (y.name, z.name))

    if y.sector is Z2.E:
        value = verlinde_ee(x, y, z, ext)
    else:
        s_i = ext.s_ee[ext.ee_position(x), :m]
        s_0 = ext.s_ee[0, :m]
        value = float(np.sum(s_i * ext.s_ea[ext.ea_row(y)] * ext.s_ea[ext.ea_row(z)] / s_0))

    if check:
        params = {"i": x.name, "j": y.name, "k": z.name, "m": m}
        _oracle_check("ext-coeff-e", value, ring_coeff_L(x, y, z, ext.ring), params, tol)
    return value


def ext_coeff_a(
    i,
    j,
    k,
    ext: ExtModularData,
    tol: Tolerance = DEFAULT_TOLERANCE,
    check: bool = True,
) -> float:
    """Fusion coefficient L^k_ij for i, j odd classes and k in the e-sector"""
    m = ext.m
    x, y, z = (_as_label(label, m) for label in (i, j, k))
    if x.sector is not Z2.A or y.sector is not Z2.A:
        raise InvalidParameter("odd classes for i and j", (x.name, y.name))
    if z.sector is not Z2.E:
        raise InvalidParameter("an e-sector class for k", z.name)

    s_k = ext.s_ee[ext.ee_position(z), :m]
    s_0 = ext.s_ee[0, :m]
    value = float(np.sum(ext.s_ea[ext.ea_row(x)] * ext.s_ea[ext.ea_row(y)] * s_k / s_0))

    if check:
        params = {"i": x.name, "j": y.name, "k": z.name, "m": m}
        _oracle_check("ext-coeff-a", value, ring_coeff_L(x, y, z, ext.ring), params, tol)
    return value


def _v_star_e_basis(ext: ExtModularData) -> tuple[GradedLabel, ...]:
    pairs = []
    for col in ext.ea_cols:
        pairs.extend((GradedLabel.lam(col.cls), col))
    return tuple(pairs) + ext.ee_labels[ext.m :]


def _coordinates(vector: ExtVector, basis: tuple[GradedLabel, ...]) -> np.ndarray:
    return np.array([vector.coefficient(label) for label in basis])


def z2diag_matrices(i, ext: ExtModularData) -> tuple[np.ndarray, np.ndarray]:
    """
    Both sides of M s L_i = D_i M s on V_(e,a), as matrices whose columns are
    indexed by the odd classes and whose rows are the coordinates on
    lambda_0, al_0, lambda_2, al_2, ..., lambda+, lambda-.
    """
    m = ext.m
    x = _as_label(i, m)
    if x.is_exceptional or x.sector is not Z2.A:
        raise InvalidParameter("an odd plain class for i", x.name)
    basis = _v_star_e_basis(ext)
    lam_i = ExtVector.basis(GradedLabel.lam(x))

    lhs_cols, rhs_cols = [], []
    for row in ext.ea_rows:
        lam_j = ExtVector.basis(row)
        # s L_i lambda_j sits in V_(e,e); its lambda+- coordinates must vanish
        lhs = change_of_basis_m(s_apply(tensor(lam_i, lam_j, ext), ext))
        rhs = change_of_basis_m(s_apply(lam_j, ext))
        lhs_cols.append(_coordinates(lhs, basis))
        rhs_cols.append(_coordinates(rhs, basis))

    eigen = []
    for col in ext.ea_cols:
        e_k = ext.s_pair(GradedLabel.lam(x), col) / ext.s_ee[0, ext.ee_position(col.cls)]
        eigen.extend((-e_k, e_k))
    eigen.extend((0.0, 0.0))
    diagonal = np.diag(eigen)
    return np.array(lhs_cols).T, diagonal @ np.array(rhs_cols).T


def z2diag_check(
    i,
    ext: ExtModularData,
    tol: Tolerance = DEFAULT_TOLERANCE,
    raise_on_failure: bool = True,
) -> VerificationReport:
    lhs, rhs = z2diag_matrices(i, ext)
    residual = float(np.max(np.abs(lhs - rhs)))
    params = {"i": _as_label(i, ext.m).name, "m": ext.m}
    if raise_on_failure and residual >= tol.eps:
        raise CheckFailure("z2diag", params, residual)
    report = VerificationReport(tolerance=tol.eps)
    report.add(CheckResult.of("z2diag", params, residual, tol.eps))
    return report


def _lambda_circ_vector(r: int, ext: ExtModularData) -> ExtVector:
    if r == 2 * ext.m:
        return ExtVector.basis(GradedLabel.lam(ext.ring.plus)) + ExtVector.basis(
            GradedLabel.lam(ext.ring.minus)
        )
    return ExtVector.basis(GradedLabel.lam(CLabel.plain(r)))


def twosums_sides(i: int, j: int, k: int, ext: ExtModularData) -> tuple[float, float]:
    """
    Left side over the C_e basis (or the invariant classes paired through s_ea
    when j is odd), right side over all of I(D) with the delta - k fold.
    """
    m = ext.m
    half = 2 * m
    for name, value in (("i", i), ("j", j), ("k", k)):
        if not 0 <= value <= half:
            raise InvalidParameter("{0} in 0..{1}".format(name, half), value)
    if i % 2:
        raise InvalidParameter("an even i", i)
    if (j - k) % 2:
        raise InvalidParameter("j and k of the same parity", (j, k))

    s_0 = ext.s_ee[0]
    row_i = s_apply(_lambda_circ_vector(i, ext), ext)
    if j % 2 == 0:
        rows = [
            _coordinates(s_apply(_lambda_circ_vector(r, ext), ext), ext.ee_labels)
            for r in (j, k)
        ]
        s_i = _coordinates(row_i, ext.ee_labels)
        lhs = np.sum(s_i * rows[0] * rows[1] / s_0)
    else:
        s_i = _coordinates(row_i, ext.ee_labels)[:m]
        s_j = ext.s_ea[ext.ea_row(CLabel.plain(j))]
        s_k = ext.s_ea[ext.ea_row(CLabel.plain(k))]
        lhs = np.sum(s_i * s_j * s_k / s_0[:m])

    s = ext.d_data.s
    if k == half:
        fold = s[k]
    else:
        fold = s[k] + s[ext.ring.delta - k]
    rhs = np.sum(s[i] * s[j] * fold / s[0])
    return float(np.real(lhs)), float(rhs)


def twosums_check(
    i: int,
    j: int,
    k: int,
    ext: ExtModularData,
    tol: Tolerance = DEFAULT_TOLERANCE,
    raise_on_failure: bool = True,
) -> VerificationReport:
    lhs, rhs = twosums_sides(i, j, k, ext)
    params = {"i": i, "j": j, "k": k, "m": ext.m}
    detail = None
    if k == 2 * ext.m:
        # lambda_2m = lambda+ + lambda- pairs with itself to this constant
        lam = _lambda_circ_vector(k, ext)
        constant = bilinear_form(lam, lam).real
        rhs = constant * rhs
        detail = "k=2m branch scaled by {0:g}".format(constant)
    residual = abs(lhs - rhs)
    if raise_on_failure and residual >= tol.eps:
        raise CheckFailure("twosums", params, residual)
    report = VerificationReport(tolerance=tol.eps)
    report.add(CheckResult.of("twosums", params, residual, tol.eps, detail=detail))
    return report


def fold_lemma_checks(
    d_data: ModularDataD,
    tol: Tolerance = DEFAULT_TOLERANCE,
    raise_on_failure: bool = True,
) -> VerificationReport:
    """Reflection k -> delta - k of the s-matrix against the parity of p"""
    delta = d_data.delta
    if delta % 4:
        raise InvalidParameter("delta = 4m", delta)
    s = d_data.s
    labels = range(delta + 1)
    odd = [p for p in labels if p % 2]
    even = [p for p in labels if p % 2 == 0]
    reflected = s[::-1]

    residuals = {
        "fold-odd": float(np.max(np.abs(s[:, odd] + reflected[:, odd]))),
        "fold-even": float(np.max(np.abs(s[:, even] - reflected[:, even]))),
        "fold-middle": float(np.max(np.abs(s[delta // 2, odd]))),
    }
    report = VerificationReport(tolerance=tol.eps)
    for name, residual in residuals.items():
        params = {"delta": delta}
        if raise_on_failure and residual >= tol.eps:
            raise CheckFailure(name, params, residual)
        report.add(CheckResult.of(name, params, residual, tol.eps))
    return report


def convolution_residual(ext: ExtModularData) -> float:
    """alpha*alpha = -alpha/d, beta*beta = beta/d and alpha*beta = beta*alpha = 0"""
    worst = 0.0
    for col in ext.ea_cols:
        i = col.cls.index
        a, b = alpha(i, ext.ring), beta(i, ext.ring)
        d_inv = 1 / c_qdim(col.cls, ext.ring)
        zero = ExtVector()
        worst = max(
            worst,
            convolution(a, a, ext).distance(a.scaled(-d_inv)),
            convolution(b, b, ext).distance(b.scaled(d_inv)),
            convolution(a, b, ext).distance(zero),
            convolution(b, a, ext).distance(zero),
        )
    return worst


def _ce_verlinde(ext: ExtModularData) -> tuple[float, bool]:
    labels = [x.cls for x in ext.ee_labels]
    worst, exact = 0.0, True
    for x, y, z in itertools.product(labels, repeat=3):
        value = verlinde_ee(x, y, z, ext)
        expected = ring_coeff_L(x, y, z, ext.ring)
        worst = max(worst, abs(value - expected))
        exact = exact and _recovers(value, expected)
    return worst, exact


def _recovers(value: float, expected: int) -> bool:
    return expected >= 0 and recover_integer(value, _HALF) == expected


def _ext_scan(ext: ExtModularData, tol: Tolerance) -> dict[str, tuple[float, bool]]:
    ring = ext.ring
    odd = [x for x in ring.labels if x.sector is Z2.A]
    even = [x for x in ring.labels if x.sector is Z2.E]
    scans: dict[str, tuple[float, bool]] = {}

    worst, exact = 0.0, True
    for x, y, z in itertools.product(even, odd, odd):
        value = ext_coeff_e(x, y, z, ext, tol, check=False)
        expected = ring_coeff_L(x, y, z, ring)
        worst = max(worst, abs(value - expected))
        exact = exact and _recovers(value, expected)
    scans["ext-coeff-e"] = (worst, exact)

    worst, exact = 0.0, True
    for x, y, z in itertools.product(odd, odd, even):
        value = ext_coeff_a(x, y, z, ext, tol, check=False)
        expected = ring_coeff_L(x, y, z, ring)
        worst = max(worst, abs(value - expected))
        exact = exact and _recovers(value, expected)
    scans["ext-coeff-a"] = (worst, exact)
    return scans


def _d_verlinde_exact(d_data: ModularDataD, tol: Tolerance) -> bool:
    labels = range(d_data.rank)
    for i, j, k in itertools.product(labels, repeat=3):
        try:
            verlinde_coeff(i, j, k, d_data, tol)
        except ResidualError:
            return False
    return True


def verify_all(m: int, tol: Tolerance = DEFAULT_TOLERANCE) -> VerificationReport:
    """
    Run every check for the level delta = 4m and condense each into one
    result. The returned report is sorted by check name then parameters.
    """
    if m not in SUPPORTED_M:
        raise InvalidParameter("m in {0}".format(SUPPORTED_M), m)
    eps = tol.eps
    params = {"m": m}
    report = VerificationReport(tolerance=eps)

    def record(name: str, residual: float, **extra):
        result = report.add(CheckResult.of(name, params, residual, eps, **extra))
        if result.passed:
            log.debug("check %s passed (residual %.3e)", name, residual)
        else:
            log.warning("check %s failed for m=%d (residual %.3e)", name, m, residual)

    d_data = ModularDataD.for_m(m)
    record("d-unitarity", max(unitarity_residual(d_data.s), symmetry_residual(d_data.s)))
    record(
        "d-verlinde",
        verlinde_residual(d_data),
        integer_match=_d_verlinde_exact(d_data, tol),
    )
    record("d-associativity", n_associativity_residual(d_data))
    record("d-dimensions", dimension_s_residual(d_data))
    record(
        "d-modular-relation",
        sl2_relation_residual(d_data.s, d_data.twists, d_data.p_plus, d_data.big_d),
    )
    for result in fold_lemma_checks(d_data, tol, raise_on_failure=False):
        record(result.name, result.max_residual)
    record("gauss-reciprocity", reciprocity_residual(8, d_data.kappa))

    ring = build_ring(m)
    record("ring-seeds", seed_residual(ring))
    coefrelat = coefrelat_check(ring, d_data, tol, raise_on_failure=False)
    record("coefrelat", coefrelat.max_residual)
    record("ring-associativity", associativity_residual(ring))
    record("ring-dimensions", dimension_residual(ring))
    record("ring-automorphism", automorphism_residual(ring))
    record("ring-unit-duality", unit_duality_residual(ring))
    record("ring-grading", grading_residual(ring))
    record("dimension-relation", dimension_relation_residual(ring, d_data))
    record("induction", induction_residual(ring))

    try:
        ext = build_s_c(ring, d_data, tol)
    except ConstructionFailure as exc:
        record("ce-unitarity", exc.residual)
        return report.sorted()
    record("ce-unitarity", max(unitarity_residual(ext.s_ee), symmetry_residual(ext.s_ee)))
    record("exc-sum", exc_sum_residual(ext))
    record("exc-twists", abs(exc_via_twists(ext, tol, check=False) - excval(m)))
    record("exc-gauss", abs(exc_via_gauss(m, d_data, tol, check=False) - excval(m)))
    record("gauss-alternating", alternating_gauss_residual(m))
    record("ce-twist-s", ee_twist_residual(ext))
    record("ce-modular-relation", ce_modular_residual(ext))
    record("global-dimension", global_dimension_residual(ext))
    worst, exact = _ce_verlinde(ext)
    record("ce-verlinde", worst, integer_match=exact)
    for name, (worst, exact) in _ext_scan(ext, tol).items():
        record(name, worst, integer_match=exact)

    z2diag = VerificationReport(tolerance=eps)
    for row in ext.ea_rows:
        z2diag.extend(z2diag_check(row.cls, ext, tol, raise_on_failure=False))
    record("z2diag", z2diag.max_residual)
    record("convolution-diagonal", convolution_residual(ext))

    twosums = VerificationReport(tolerance=eps)
    half = 2 * m
    for i in range(0, half + 1, 2):
        for j, k in itertools.product(range(half + 1), repeat=2):
            if (j - k) % 2:
                continue
            twosums.extend(twosums_check(i, j, k, ext, tol, raise_on_failure=False))
    report.add(twosums.merged("twosums", params))

    report = report.sorted()
    log.info(
        "verified m=%d: %d checks, %d failed",
        m,
        len(report),
        len(report.failures()),
    )
    return report
