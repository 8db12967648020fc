"""Exception hierarchy shared across the package."""


class GrpnError(ValueError):
    """Base class for all validation and verification errors."""


class NotAPermutation(GrpnError):
    pass


class ColorOutOfRange(GrpnError):
    pass


class LengthMismatch(GrpnError):
    pass


class ParamsMismatch(GrpnError):
    pass


class IndexOutOfRange(GrpnError):
    pass


class InvalidP(GrpnError):
    pass


class CapExceeded(GrpnError):
    pass


class OverlappingLabels(GrpnError):
    pass


class DuplicateLabel(GrpnError):
    pass


class ShapeMismatch(GrpnError):
    pass


class InvalidTableau(GrpnError):
    pass


class NotAdmissible(GrpnError):
    pass


class NotAscending(GrpnError):
    pass


class ParseError(GrpnError):
    pass
