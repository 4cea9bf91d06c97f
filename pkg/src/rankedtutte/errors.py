"""Exception types shared by the package."""


class TutteError(Exception):
    """Base class for all package errors."""


class AxiomViolation(TutteError):
    def __init__(self, axiom, witness, detail=""):
        self.axiom = axiom
        self.witness = witness
        msg = f"{axiom} fails at {witness}"
        super().__init__(f"{msg}: {detail}" if detail else msg)


class UnknownElement(TutteError, KeyError):
    pass


class DuplicateElement(TutteError, ValueError):
    pass


class ZeroRank(TutteError, ValueError):
    pass


class BadParams(TutteError, ValueError):
    pass


class BadGraph(TutteError, ValueError):
    pass


class NotAMatroid(TutteError, ValueError):
    pass


class NotAntimatroid(TutteError, ValueError):
    pass


class NotConvex(TutteError, ValueError):
    pass


class NotATree(TutteError, ValueError):
    pass


class NotAPoset(TutteError, ValueError):
    pass


class NotChordal(TutteError, ValueError):
    pass


class DuplicatePoint(TutteError, ValueError):
    pass


class DimensionMismatch(TutteError, ValueError):
    pass


class Exhausted(TutteError, RuntimeError):
    """A search hit its node budget before finishing."""


class ParseError(TutteError, ValueError):
    pass
