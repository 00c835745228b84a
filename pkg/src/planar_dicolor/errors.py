"""Exception hierarchy shared by every module."""


class DicolorError(Exception):
    """Base class for all errors raised by planar_dicolor."""


class EmbeddingError(DicolorError, ValueError):
    """Rotation data does not describe a connected simple plane graph."""


class FormatError(DicolorError, ValueError):
    """A ``.pdg``, ``.cfg``, list or ledger text could not be parsed."""


class ColoringError(DicolorError, ValueError):
    """A coloring does not meet the precondition of an operation."""


class CapExceeded(DicolorError):
    """An exhaustive routine was asked to run beyond its size cap."""


class GenerationError(DicolorError):
    """The generator could not satisfy a spec within its repair budget."""
