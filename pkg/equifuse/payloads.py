from __future__ import annotations

import json

import numpy as np

from .report import VerificationReport
from .ring_solver import TypeDRing
from .types import Formula, SBlock
from .utils import is_close, round_floats
from .verlinde_d import ModularDataD


class Payload:

    def __init__(self, data, round_values=True):
        if round_values:
            data = round_floats(data)
        self.data = data

    def __str__(self):
        return json.dumps(self.data, indent=2, sort_keys=True)

    @classmethod
    def document(cls, m: int, kappa: int, tolerance: float, results) -> Payload:
        return cls(
            {
                "m": m,
                "kappa": kappa,
                "tolerance": tolerance,
                "results": results,
            }
        )

    @classmethod
    def ring_table(cls, ring: TypeDRing, tolerance: float) -> Payload:
        results = []
        for x in ring.labels:
            for y in ring.labels:
                for z, mult in sorted(ring.product(x, y).items()):
                    results.append({"x": x.name, "y": y.name, "z": z.name, "mult": mult})
        return cls.document(ring.m, ring.kappa, tolerance, results)

    @classmethod
    def d_table(cls, m: int, data: ModularDataD, tolerance: float) -> Payload:
        results = [
            {"x": int(i), "y": int(j), "z": int(k), "mult": int(data.n_tensor[i, j, k])}
            for i, j, k in np.argwhere(data.n_tensor)
        ]
        return cls.document(m, data.kappa, tolerance, results)

    @classmethod
    def smatrix(
        cls,
        m: int,
        kappa: int,
        tolerance: float,
        which: SBlock,
        rows: list[str],
        cols: list[str],
        matrix: np.ndarray,
    ) -> Payload:
        results = [
            {"block": which.value, "row": row, "col": col, "value": matrix[a, b]}
            for a, row in enumerate(rows)
            for b, col in enumerate(cols)
        ]
        return cls.document(m, kappa, tolerance, results)

    @classmethod
    def coeff(
        cls,
        m: int,
        kappa: int,
        tolerance: float,
        formula: Formula,
        i: str,
        j: str,
        k: str,
        value: float,
        oracle: int,
    ) -> Payload:
        result = {
            "formula": formula.value,
            "i": i,
            "j": j,
            "k": k,
            "value": value,
            "oracle": oracle,
            "residual": abs(value - oracle),
            "passed": is_close(value, oracle, tolerance),
        }
        return cls.document(m, kappa, tolerance, [result])

    @classmethod
    def verify(cls, m: int, kappa: int, report: VerificationReport) -> Payload:
        results = [check.to_dict() for check in report]
        return cls.document(m, kappa, report.tolerance, results)
