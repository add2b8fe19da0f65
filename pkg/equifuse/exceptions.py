from __future__ import annotations


class EquifuseException(Exception):
    def __init__(self, message: str | None = None):
        if message is None:
            message = "An error has occurred within equifuse"
        super().__init__(message)


class InvalidParameter(EquifuseException):
    def __init__(self, expected, received, description: str | None = None):
        self.expected = expected
        self.received = received
        description = "\n{0}".format(description) if description else ""
        super().__init__(
            "Bad parameter. Expected {0} but got {1} instead{2}".format(
                expected, received, description
            )
        )


class UnsupportedCase(EquifuseException):
    def __init__(self, description: str):
        super().__init__("Unsupported case: {0}".format(description))


class ResidualError(EquifuseException):
    def __init__(self, value: complex | float, residual: float, tolerance: float):
        self.value = value
        self.residual = residual
        self.tolerance = tolerance
        super().__init__(
            "Value {0} is not an integer within {1:g} (residual {2:.3e})".format(
                value, tolerance, residual
            )
        )


class InconsistencyError(EquifuseException):
    def __init__(self, product: str, label: str, multiplicity: float):
        self.product = product
        self.label = label
        self.multiplicity = multiplicity
        super().__init__(
            "Inconsistent fusion table: {0} has multiplicity {1} at {2}".format(
                product, multiplicity, label
            )
        )


class CheckFailure(EquifuseException):
    def __init__(self, check: str, parameters: dict | None, residual: float):
        self.check = check
        self.parameters = dict(parameters or {})
        self.residual = residual
        params = ", ".join(
            "{0}={1}".format(key, value) for key, value in sorted(self.parameters.items())
        )
        super().__init__(
            "Check {0}({1}) failed with residual {2:.3e}".format(check, params, residual)
        )


class ConstructionFailure(EquifuseException):
    def __init__(self, what: str, residual: float):
        self.residual = residual
        super().__init__(
            "Could not construct {0}: residual {1:.3e}".format(what, residual)
        )
