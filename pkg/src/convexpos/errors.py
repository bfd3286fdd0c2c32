"""Exception types raised across the package."""


class ConvexPosError(Exception):
    """Base class for every error raised by convexpos."""


class UnknownLabel(ConvexPosError, KeyError):
    def __init__(self, label):
        super().__init__(label)
        self.label = label

    def __str__(self):
        return f"unknown label {self.label!r}"


class NonAdjacentSwitch(ConvexPosError):
    def __init__(self, index, pair, reason="not adjacent"):
        super().__init__(f"switch {index} {tuple(pair)!r}: {reason}")
        self.index = index
        self.pair = tuple(pair)
        self.reason = reason


class InvalidDiagram(ConvexPosError):
    def __init__(self, problems):
        super().__init__("; ".join(problems))
        self.problems = list(problems)


class InvalidSystem(ConvexPosError):
    def __init__(self, problems):
        super().__init__("; ".join(problems))
        self.problems = list(problems)


class SubsetTooSmall(ConvexPosError):
    pass


class NonOrientableTriple(ConvexPosError):
    def __init__(self, triple):
        super().__init__(f"triple {tuple(triple)!r} is not orientable")
        self.triple = tuple(triple)


class TripleNotIndependent(ConvexPosError):
    def __init__(self, triple):
        super().__init__(f"triple {tuple(triple)!r} is not convexly independent")
        self.triple = tuple(triple)


class TripleNotNonOrientable(ConvexPosError):
    def __init__(self, triple):
        super().__init__(f"triple {tuple(triple)!r} bounds no zones (orientable)")
        self.triple = tuple(triple)


class StaleZone(ConvexPosError):
    pass


class ZoneNotEmpty(ConvexPosError):
    def __init__(self, zone, intruders):
        super().__init__(f"zone {zone} is intersected by {sorted(intruders)!r}")
        self.zone = zone
        self.intruders = tuple(sorted(intruders))


class LabelMismatch(ConvexPosError):
    pass


class AxiomViolation(ConvexPosError):
    def __init__(self, report):
        super().__init__(f"chirotope violates CC axioms: {report.violations[:3]!r}")
        self.report = report


class DegeneratePair(ConvexPosError):
    def __init__(self, pair, reason):
        super().__init__(f"pair {tuple(pair)!r}: {reason}")
        self.pair = tuple(pair)


class NotGeneric(ConvexPosError):
    pass


class CrossingPair(ConvexPosError):
    def __init__(self, pair, count):
        super().__init__(f"pair {tuple(pair)!r} has {count} common tangents")
        self.pair = tuple(pair)
        self.count = count


class ToleranceError(ConvexPosError):
    pass


class PerturbationFailed(ConvexPosError):
    pass


class GridTooCoarse(ConvexPosError):
    pass


class SizeLimit(ConvexPosError):
    pass


class ClusterOverlap(ConvexPosError):
    pass


class UnequalSizes(ConvexPosError):
    pass


class GenerationFailed(ConvexPosError):
    pass
