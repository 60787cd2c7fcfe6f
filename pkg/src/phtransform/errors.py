from __future__ import annotations


class InputError(ValueError):
    """Malformed complex, embedding, file, or argument."""


class NonEssentialError(ValueError):
    """The pair arrangement does not span the ambient space."""

    def __init__(self, defect: int):
        self.defect = defect
        super().__init__(
            f"arrangement is not essential: the common intersection of all great "
            f"spheres has dimension {defect}; add {defect + 1} great sphere(s) "
            f"(rerun with --augment)"
        )


class IntegrityError(RuntimeError):
    """An internal invariant was violated; always a bug."""
