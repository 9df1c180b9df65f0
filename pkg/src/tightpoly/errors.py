"""Exception types shared across the package.

The CLI maps these onto exit codes: domain errors (NotNormal,
BadParameters, NotAdmissible) exit 1, resource errors (Overflow,
BudgetExceeded) exit 2, input errors (ParseError, PresentationError)
exit 3.
"""


class TightpolyError(Exception):
    """Base class for all package errors."""


class ParseError(TightpolyError):
    """Syntax error in the presentation text format."""

    def __init__(self, msg, line=None, col=None):
        self.line = line
        self.col = col
        loc = ""
        if line is not None:
            loc = f"line {line}" + (f", col {col}" if col is not None else "")
            loc = f" ({loc})"
        super().__init__(f"{msg}{loc}")


class PresentationError(TightpolyError):
    """Structurally invalid presentation (missing required relators, etc.)."""


class Overflow(TightpolyError):
    """Coset enumeration exceeded its live-coset budget.

    Either raise the bound or the group is larger than expected; the
    enumeration never silently truncates.
    """

    def __init__(self, max_cosets):
        self.max_cosets = max_cosets
        super().__init__(f"coset enumeration exceeded {max_cosets} live cosets")


class NotNormal(TightpolyError):
    """Requested quotient by a cyclic subgroup that is not normal."""


class BadParameters(TightpolyError):
    """Family parameters outside the range its construction requires."""


class NotAdmissible(TightpolyError):
    """No tight chiral polyhedron exists for the requested type."""


class BudgetExceeded(TightpolyError):
    """Exhaustive search asked to sweep beyond its configured budget."""

    def __init__(self, p, q, budget):
        self.budget = budget
        super().__init__(f"type ({p}, {q}) exceeds the search budget p*q <= {budget}")


class RepresentationError(TightpolyError):
    """Internal failure: an explicit permutation model broke a defining
    relation.  Indicates an implementation bug, never user error."""
