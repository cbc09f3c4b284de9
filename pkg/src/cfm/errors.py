"""Exception hierarchy shared by all modules."""


class CfmError(Exception):
    pass


class FieldMismatchError(CfmError, TypeError):
    """Operands carry different scalar fields."""


class DegenerateInputError(CfmError, ValueError):
    """Zero scalar, zero vector or rank-deficient matrix where full rank is required."""


class NumericError(CfmError, ArithmeticError):
    """A result would depend on a quantity sitting at the tolerance threshold."""


class CfSyntaxError(CfmError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class CfStructureError(CfmError, ValueError):
    """Raised when an expression violates a structural invariant.

    ``issue`` is the :class:`cfm.expr.ValidationIssue` describing it.
    """

    def __init__(self, issue):
        super().__init__(f"{issue.code}: {issue.detail}" if issue.detail else issue.code)
        self.issue = issue


class MembershipError(CfmError, ValueError):
    def __init__(self, report):
        codes = ", ".join(sorted({i.code for i in report.issues}))
        super().__init__(f"matrix is not in the canonical form ({codes})")
        self.report = report
