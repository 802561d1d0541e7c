"""Exception hierarchy shared across the library.

Every exception carries a stable snake_case ``code`` and an ``exit_code``
used by the command-line front end: 1 for well-formed negative verdicts
(infeasible, not a root, not converged, ...), 2 for malformed input.
"""

from __future__ import annotations


class OrthoscalarError(Exception):
    """Base class; ``payload()`` gives the JSON error object."""

    code = "error"
    exit_code = 1

    def __init__(self, detail: str, **info):
        super().__init__(detail)
        self.info = info

    def payload(self) -> dict:
        out = {"error": self.code, "detail": str(self)}
        out.update(self.info)
        return out


# --- input / format errors (exit code 2) ------------------------------------

class InputError(OrthoscalarError):
    code = "input"
    exit_code = 2


class NotATree(InputError):
    code = "not_a_tree"


class SelfLoop(InputError):
    code = "self_loop"


class DuplicateId(InputError):
    code = "duplicate_id"


class UnknownVertex(InputError):
    code = "unknown_vertex"


class ZeroVector(InputError):
    code = "zero_vector"


class ShapeMismatch(InputError):
    code = "shape_mismatch"


class QuiverMismatch(InputError):
    code = "quiver_mismatch"


class DimsMismatch(InputError):
    code = "dims_mismatch"


# --- negative verdicts (exit code 1) -----------------------------------------

class NotDynkin(OrthoscalarError):
    code = "not_dynkin"


class NotExtendedDynkin(OrthoscalarError):
    code = "not_extended_dynkin"


class NotRoot(OrthoscalarError):
    code = "not_root"


class TraceInfeasible(OrthoscalarError):
    """The per-vertex trace equations admit no nonnegative solution."""

    code = "trace_infeasible"

    def __init__(self, detail: str, kind: str, arrow: str | None = None):
        info = {"kind": kind}
        if arrow is not None:
            info["arrow"] = arrow
        super().__init__(detail, **info)
        self.kind = kind
        self.arrow = arrow


class NotOrthoscalar(OrthoscalarError):
    code = "not_orthoscalar"


class NotNormalized(OrthoscalarError):
    code = "not_normalized"


class NegativeReflectedDim(OrthoscalarError):
    code = "negative_reflected_dim"


class ZeroCharacterAtReflectedVertex(OrthoscalarError):
    code = "zero_character_at_reflected_vertex"


class NegativeOutputCharacter(OrthoscalarError):
    code = "negative_output_character"


class NoChainFound(OrthoscalarError):
    code = "no_chain_found"


class CharacterObstruction(OrthoscalarError):
    code = "character_obstruction"

    def __init__(self, detail: str, step: int, vertex: str):
        super().__init__(detail, step=step, vertex=vertex)
        self.step = step
        self.vertex = vertex


class NotASolution(OrthoscalarError):
    code = "not_a_solution"


class Decomposable(OrthoscalarError):
    code = "decomposable"
