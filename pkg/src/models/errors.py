"""Error hierarchy for Tor-o-matic.

Input problems are ValueErrors, like the validation errors of the other
models. HypothesesNotMet is separate: the fan is fine, the theorem just does
not apply to it.
"""

from typing import Optional, Sequence, Tuple


def _vectors(vectors: Sequence[Sequence[int]]) -> str:
    """Render ray vectors as [[1,0],[0,1]]."""
    return '[' + ','.join('[' + ','.join(str(c) for c in v) + ']' for v in vectors) + ']'


class FanValidationError(ValueError):
    """Base class for fans rejected by validate_fan."""


class NonPrimitiveRay(FanValidationError):
    def __init__(self, index: int, vector: Sequence[int]):
        self.index = index
        self.vector = tuple(vector)
        super().__init__(f"ray {index} {_vectors([vector])[1:-1]} is zero or not primitive")


class DuplicateRay(FanValidationError):
    def __init__(self, vector: Sequence[int]):
        self.vector = tuple(vector)
        super().__init__(f"ray {_vectors([vector])[1:-1]} is listed more than once")


class DependentGenerators(FanValidationError):
    def __init__(self, cone: Sequence[Sequence[int]]):
        self.cone = tuple(tuple(v) for v in cone)
        super().__init__(f"cone {_vectors(cone)} has linearly dependent generators")


class NotRegular(FanValidationError):
    def __init__(self, cone: Sequence[Sequence[int]], diagonal: Sequence[int]):
        self.cone = tuple(tuple(v) for v in cone)
        self.diagonal = tuple(diagonal)
        super().__init__(
            f"cone {_vectors(cone)} is not regular "
            f"(Smith diagonal {', '.join(str(d) for d in diagonal)})"
        )


class BadIntersection(FanValidationError):
    def __init__(self, sigma: Sequence[Sequence[int]], tau: Sequence[Sequence[int]]):
        self.sigma = tuple(tuple(v) for v in sigma)
        self.tau = tuple(tuple(v) for v in tau)
        super().__init__(
            f"cones {_vectors(sigma)} and {_vectors(tau)} do not meet in a common face"
        )


class ConeNotInFan(ValueError):
    def __init__(self, cone: Sequence[Sequence[int]]):
        self.cone = tuple(tuple(v) for v in cone)
        super().__init__(f"cone {_vectors(cone)} is not a cone of the fan")


class DimensionTooSmall(ValueError):
    def __init__(self, cone: Sequence[Sequence[int]], minimum: int):
        self.cone = tuple(tuple(v) for v in cone)
        self.minimum = minimum
        super().__init__(f"cone {_vectors(cone)} must have dimension at least {minimum}")


class ParseError(ValueError):
    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class IndexOutOfRange(ValueError):
    def __init__(self, cone_position: int, index: int, ray_count: int):
        self.cone_position = cone_position
        self.index = index
        self.ray_count = ray_count
        super().__init__(
            f"cone {cone_position} uses ray index {index}, but there are {ray_count} rays"
        )


class FaceNotInComplex(ValueError):
    def __init__(self, face: Tuple[int, ...]):
        self.face = tuple(face)
        super().__init__(f"face {list(face)} is not in the complex")


class NotOpen(ValueError):
    def __init__(self, missing: Optional[Tuple[int, ...]] = None):
        self.missing = missing
        super().__init__(f"set of cones is not a subfan (missing face {list(missing or ())})")


class RankMismatch(ValueError):
    def __init__(self, ranks: Sequence[int]):
        self.ranks = tuple(ranks)
        super().__init__(f"cones live in different ambient ranks: {sorted(set(ranks))}")


class DimensionMismatch(ValueError):
    def __init__(self, left: Tuple[int, int], right: Tuple[int, int]):
        self.left = left
        self.right = right
        super().__init__(f"cannot compose a {left[0]}x{left[1]} map after a {right[0]}x{right[1]} map")


class CompositionNonzero(ValueError):
    """The two maps handed to homology_at do not compose to zero."""

    def __init__(self):
        super().__init__("d_out composed with d_in is not the zero map")


class HypothesesNotMet(Exception):
    """A valid fan outside the hypotheses of the Tor formula."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(reason)


class SearchBudgetExceeded(RuntimeError):
    def __init__(self, nodes: int):
        self.nodes = nodes
        super().__init__(f"enough-limits search gave up after {nodes} nodes")
