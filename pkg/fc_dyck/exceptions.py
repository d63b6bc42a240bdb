"""
Domain errors. All of them are ValueErrors, so callers that only care about
"bad input" can keep catching ValueError.
"""
from typing import Any, Dict


class FCDyckError(ValueError):
    """Base error carrying a machine-readable code."""

    code = "error"

    def to_dict(self) -> Dict[str, Any]:
        return {"error": str(self), "code": self.code}


class InvalidWord(FCDyckError):
    code = "invalid_word"


class InvalidPath(FCDyckError):
    code = "invalid_path"


class NotReduced(FCDyckError):
    code = "not_reduced"


class NotFullyCommutative(FCDyckError):
    code = "not_fully_commutative"


class NotHomogeneous(FCDyckError):
    code = "not_homogeneous"


class TooLarge(FCDyckError):
    code = "too_large"


class CoordinateParity(FCDyckError):
    code = "coordinate_parity"


class BlockNotOnAscent(FCDyckError):
    code = "block_not_on_ascent"


class IndexOutOfRange(FCDyckError):
    code = "index_out_of_range"


class InvalidOrientation(FCDyckError):
    code = "invalid_orientation"
