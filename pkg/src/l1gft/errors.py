"""Exception hierarchy with stable error codes for the CLI."""


class L1GFTError(Exception):
    """Base class; ``code`` is the stable machine-parsable identifier."""

    code = "Error"

    def __init__(self, message=""):
        super().__init__(message)
        self.message = message


class ParseError(L1GFTError):
    code = "ParseError"


class AsymmetricWeights(L1GFTError):
    code = "AsymmetricWeights"


class NegativeWeight(L1GFTError):
    code = "NegativeWeight"


class SelfLoop(L1GFTError):
    code = "SelfLoop"


class DisconnectedGraph(L1GFTError):
    code = "DisconnectedGraph"


class IndexOutOfRange(L1GFTError):
    code = "IndexOutOfRange"


class InvalidParameter(L1GFTError):
    code = "InvalidParameter"


class DimensionMismatch(L1GFTError):
    code = "DimensionMismatch"


class ZeroReferenceVariation(L1GFTError):
    code = "ZeroReferenceVariation"


class SingleBlock(L1GFTError):
    code = "SingleBlock"


class RankDeficientU(L1GFTError):
    code = "RankDeficientU"


class GraphTooLarge(L1GFTError):
    code = "GraphTooLarge"


class InfeasibleStep(L1GFTError):
    code = "InfeasibleStep"


class NonOrthonormalBasis(L1GFTError):
    code = "NonOrthonormalBasis"


class ZeroSignal(L1GFTError):
    code = "ZeroSignal"


class LengthMismatch(L1GFTError):
    code = "LengthMismatch"
