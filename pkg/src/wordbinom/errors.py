"""Exception types shared across the package."""


class AlphabetMismatchError(ValueError):
    """Two words that must share an alphabet do not."""


class EnumerationCapExceeded(ValueError):
    """A brute-force enumeration would exceed its configured cap."""

    def __init__(self, required: int, cap: int):
        super().__init__(
            f"enumeration of {required} candidate words exceeds the cap of {cap}"
        )
        self.required = required
        self.cap = cap


class InconsistentProjectionsError(ValueError):
    """Pairwise projections disagree on a letter count."""


class ReconstructionError(ValueError):
    """A reconstruction step cannot complete; the message names the culprit."""


class InternalConsistencyError(RuntimeError):
    """An identity that must hold by construction failed; signals a bug."""
