"""Matrix representations of tree quivers and the orthoscalar condition.

A representation attaches a complex dims(head) x dims(tail) matrix to each
arrow.  At a vertex a the orthoscalar equation asks that the sum of
S*(alpha) S(alpha) over arrows leaving a plus S(beta) S*(beta) over arrows
entering a equals chi(a) times the identity; the per-vertex Hermitian
residual of that equation is the defect.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._linalg import hermitian_basis, numerical_rank, polar_unitary, realify
from .errors import (
    DimsMismatch,
    QuiverMismatch,
    ShapeMismatch,
    TraceInfeasible,
    ZeroVector,
)
from .quiver import Quiver, bipartition


@dataclass
class Representation:
    """Complex matrices indexed by arrow id, shapes fixed by dims."""

    quiver: Quiver
    dims: np.ndarray
    matrices: dict[str, np.ndarray]

    def __post_init__(self):
        self.dims = self.quiver.dims_vector(self.dims)
        mats = {}
        for a in self.quiver.arrows:
            if a.id not in self.matrices:
                raise ShapeMismatch(f"missing matrix for arrow {a.id!r}", element=a.id)
            m = np.asarray(self.matrices[a.id], dtype=np.complex128)
            want = (self.dim(a.head), self.dim(a.tail))
            if m.shape != want:
                raise ShapeMismatch(
                    f"arrow {a.id!r} expects shape {want}, got {m.shape}", element=a.id
                )
            if m.size and not np.all(np.isfinite(m)):
                raise ShapeMismatch(f"arrow {a.id!r} has non-finite entries", element=a.id)
            mats[a.id] = m
        extra = set(self.matrices) - {a.id for a in self.quiver.arrows}
        if extra:
            raise ShapeMismatch(f"matrix for unknown arrow {sorted(extra)[0]!r}")
        self.matrices = mats

    def dim(self, v: str) -> int:
        return int(self.dims[self.quiver.index[v]])

    def matrix(self, aid: str) -> np.ndarray:
        return self.matrices[aid]

    def arrow_list(self) -> list[np.ndarray]:
        return [self.matrices[a.id] for a in self.quiver.arrows]

    def with_matrices(self, mats: list[np.ndarray]) -> "Representation":
        return Representation(
            self.quiver,
            self.dims,
            {a.id: m for a, m in zip(self.quiver.arrows, mats)},
        )


def zero_representation(quiver: Quiver, dims) -> Representation:
    d = quiver.dims_vector(dims)
    mats = {
        a.id: np.zeros((int(d[quiver.index[a.head]]), int(d[quiver.index[a.tail]])), dtype=np.complex128)
        for a in quiver.arrows
    }
    return Representation(quiver, d, mats)


def simple_representation(quiver: Quiver, vertex: str) -> Representation:
    """One-dimensional space at `vertex`, zero elsewhere."""
    d = np.zeros(len(quiver.vertices), dtype=np.int64)
    d[quiver.index[vertex]] = 1
    return zero_representation(quiver, d)


def vertex_sums(rep: Representation) -> dict[str, np.ndarray]:
    """Left-hand side of the orthoscalar equation per vertex with dim > 0."""
    out = {}
    for v in rep.quiver.vertices:
        n = rep.dim(v)
        if n == 0:
            continue
        m = np.zeros((n, n), dtype=np.complex128)
        for a in rep.quiver.tail_arrows(v):
            s = rep.matrices[a.id]
            m += s.conj().T @ s
        for a in rep.quiver.head_arrows(v):
            s = rep.matrices[a.id]
            m += s @ s.conj().T
        out[v] = m
    return out


def defect_matrices(rep: Representation, chi) -> dict[str, np.ndarray]:
    x = rep.quiver.char_vector(chi, require_valid=False)
    out = {}
    for v, m in vertex_sums(rep).items():
        n = rep.dim(v)
        out[v] = m - x[rep.quiver.index[v]] * np.eye(n, dtype=np.complex128)
    return out


@dataclass
class OrthoscalarReport:
    defects: dict[str, float]
    max_defect: float
    inferred_chi: dict[str, float | None]
    residuals: dict[str, float]
    tol: float
    verdict: bool

    def as_dict(self) -> dict:
        return {
            "defects": self.defects,
            "max_defect": self.max_defect,
            "inferred_chi": self.inferred_chi,
            "residuals": self.residuals,
            "tol": self.tol,
            "verdict": "pass" if self.verdict else "fail",
        }


def infer_character(rep: Representation) -> tuple[dict[str, float | None], dict[str, float]]:
    """Best scalar per vertex (trace over dimension) and how far the
    orthoscalar left-hand side is from that multiple of the identity."""
    if not np.any(rep.dims):
        raise ZeroVector("cannot infer a character on the zero representation")
    sums = vertex_sums(rep)
    chi_hat: dict[str, float | None] = {}
    residuals: dict[str, float] = {}
    for v in rep.quiver.vertices:
        n = rep.dim(v)
        if n == 0:
            chi_hat[v] = None
            residuals[v] = 0.0
            continue
        m = sums[v]
        val = float(np.real(np.trace(m)) / n)
        chi_hat[v] = val
        residuals[v] = float(np.linalg.norm(m - val * np.eye(n)))
    return chi_hat, residuals


def check_orthoscalar(rep: Representation, chi, tol: float = 1e-8) -> OrthoscalarReport:
    """Per-vertex defect norms against a given character; vertices of
    dimension zero are vacuous."""
    if tol <= 0:
        raise ZeroVector("tolerance must be positive")
    defects = defect_matrices(rep, chi)
    norms = {}
    for v in rep.quiver.vertices:
        norms[v] = float(np.linalg.norm(defects[v])) if v in defects else 0.0
    max_defect = max(norms.values()) if norms else 0.0
    if np.any(rep.dims):
        chi_hat, residuals = infer_character(rep)
    else:
        chi_hat = {v: None for v in rep.quiver.vertices}
        residuals = {v: 0.0 for v in rep.quiver.vertices}
    return OrthoscalarReport(
        defects=norms,
        max_defect=max_defect,
        inferred_chi=chi_hat,
        residuals=residuals,
        tol=tol,
        verdict=max_defect <= tol,
    )


def balance_sums(quiver: Quiver, dims, chi) -> tuple[float, float]:
    """Sum of chi(a) * d_a over the even and the odd class."""
    d = quiver.dims_vector(dims)
    x = quiver.char_vector(chi, require_valid=False)
    even, _ = bipartition(quiver)
    even_sum = float(sum(x[i] * d[i] for i, v in enumerate(quiver.vertices) if v in even))
    odd_sum = float(sum(x[i] * d[i] for i, v in enumerate(quiver.vertices) if v not in even))
    return even_sum, odd_sum


def edge_trace_system(quiver: Quiver, dims, chi) -> dict[str, float]:
    """Solve sum of t_alpha over arrows at a = chi(a) d_a by leaf peeling.

    The tree has one more vertex than arrows, so the system is consistent
    exactly when the even/odd balance holds; negative trace targets mean
    no representation can realize the data (t_alpha is a squared norm).
    """
    d = quiver.dims_vector(dims)
    x = quiver.char_vector(chi, require_valid=False)
    even_sum, odd_sum = balance_sums(quiver, d, x)
    scale = abs(even_sum) + abs(odd_sum)
    if abs(even_sum - odd_sum) > 1e-12 * scale:
        raise TraceInfeasible(
            f"balance: even side {even_sum!r} != odd side {odd_sum!r}",
            kind="balance",
        )
    need = {v: float(x[i] * d[i]) for i, v in enumerate(quiver.vertices)}
    remaining = {v: quiver.degree(v) for v in quiver.vertices}
    unused = {v: list(quiver.tail_arrows(v)) + list(quiver.head_arrows(v)) for v in quiver.vertices}
    assigned: dict[str, float] = {}
    leaves = sorted(v for v in quiver.vertices if remaining[v] == 1)
    while leaves:
        v = leaves.pop(0)
        if remaining[v] != 1:
            continue
        arrow = next(a for a in unused[v] if a.id not in assigned)
        t = need[v]
        if t < -1e-12:
            raise TraceInfeasible(
                f"negative trace target {t!r} at arrow {arrow.id!r}",
                kind="negative",
                arrow=arrow.id,
            )
        t = max(t, 0.0)
        assigned[arrow.id] = t
        other = arrow.head if arrow.head != v else arrow.tail
        need[v] = 0.0
        need[other] -= t
        remaining[v] = 0
        remaining[other] -= 1
        if remaining[other] == 1:
            leaves.append(other)
            leaves.sort()
    return {a.id: assigned[a.id] for a in quiver.arrows}


def direct_sum(a: Representation, b: Representation) -> Representation:
    if a.quiver != b.quiver:
        raise QuiverMismatch("direct sum requires the same quiver")
    dims = a.dims + b.dims
    mats = {}
    for arrow in a.quiver.arrows:
        ma, mb = a.matrices[arrow.id], b.matrices[arrow.id]
        m = np.zeros((ma.shape[0] + mb.shape[0], ma.shape[1] + mb.shape[1]), dtype=np.complex128)
        m[: ma.shape[0], : ma.shape[1]] = ma
        m[ma.shape[0] :, ma.shape[1] :] = mb
        mats[arrow.id] = m
    return Representation(a.quiver, dims, mats)


def _hermitian_commutant_matrix(rep: Representation) -> np.ndarray:
    """Real matrix of the intertwining constraints on Hermitian tuples."""
    quiver = rep.quiver
    n_cols = int(np.sum(rep.dims.astype(np.int64) ** 2))
    n_rows = int(sum(2 * m.size for m in rep.arrow_list()))
    out = np.zeros((n_rows, n_cols), dtype=np.float64)
    col = 0
    for v in quiver.vertices:
        dv = rep.dim(v)
        for h in hermitian_basis(dv):
            rows = []
            for a in quiver.arrows:
                s = rep.matrices[a.id]
                r = np.zeros_like(s)
                if a.head == v:
                    r = r + h @ s
                if a.tail == v:
                    r = r - s @ h
                rows.append(realify(r))
            if rows:
                out[:, col] = np.concatenate(rows)
            col += 1
    return out


def commutant_dimension(rep: Representation, rank_tol: float = 1e-8) -> int:
    """Real dimension of Hermitian tuples commuting with the representation."""
    if not np.any(rep.dims):
        raise ZeroVector("commutant of the zero-dimensional representation")
    mat = _hermitian_commutant_matrix(rep)
    n_cols = mat.shape[1]
    if mat.shape[0] == 0:
        return n_cols
    rank, _, _ = numerical_rank(mat, rank_tol)
    return n_cols - rank


def is_indecomposable(rep: Representation, rank_tol: float = 1e-8) -> bool:
    return commutant_dimension(rep, rank_tol) == 1


def is_faithful(rep: Representation, tol: float = 1e-8) -> bool:
    """Every arrow matrix has Frobenius norm above tol (empty shapes fail)."""
    return all(np.linalg.norm(m) > tol for m in rep.arrow_list())


def _intertwiner_matrix(a: Representation, b: Representation) -> np.ndarray:
    """Complex matrix of X_head A(alpha) - B(alpha) X_tail over all arrows.

    Unknowns are the stacked row-major vec(X_v); vec(M X N) = (M kron N^T) vec(X).
    """
    quiver = a.quiver
    dims = a.dims
    offsets = np.concatenate([[0], np.cumsum(dims.astype(np.int64) ** 2)])
    n_cols = int(offsets[-1])
    blocks = []
    for arrow in quiver.arrows:
        ma, mb = a.matrices[arrow.id], b.matrices[arrow.id]
        dh, dt = ma.shape
        block = np.zeros((dh * dt, n_cols), dtype=np.complex128)
        ih, it = quiver.index[arrow.head], quiver.index[arrow.tail]
        if dh * dt:
            block[:, offsets[ih] : offsets[ih + 1]] = np.kron(
                np.eye(dh, dtype=np.complex128), ma.T
            )
            block[:, offsets[it] : offsets[it + 1]] -= np.kron(
                mb, np.eye(dt, dtype=np.complex128)
            )
        blocks.append(block)
    if not blocks:
        return np.zeros((0, n_cols), dtype=np.complex128)
    return np.vstack(blocks)


def unitary_equivalent(
    a: Representation,
    b: Representation,
    tol: float = 1e-8,
    rank_tol: float = 1e-8,
) -> tuple[bool, dict[str, np.ndarray] | None]:
    """Search the intertwiner space for an element whose polar unitary part
    conjugates a into b.  Decisive for indecomposable inputs, where the
    intertwiner space is at most one line."""
    if a.quiver != b.quiver:
        raise QuiverMismatch("representations live on different quivers")
    if not np.array_equal(a.dims, b.dims):
        raise DimsMismatch("dimension vectors differ")
    quiver = a.quiver
    dims = a.dims
    mat = _intertwiner_matrix(a, b)
    n_cols = mat.shape[1]
    if n_cols == 0:
        return True, {}
    if mat.shape[0] == 0 or not np.any(mat):
        null_basis = np.eye(n_cols, dtype=np.complex128)
    else:
        _, sigma, vh = np.linalg.svd(mat)
        rank = int(np.sum(sigma > rank_tol * sigma[0])) if sigma.size else 0
        if rank == n_cols:
            return False, None
        null_basis = vh[rank:].conj().T
    candidates = [null_basis[:, k] for k in range(null_basis.shape[1])]
    if null_basis.shape[1] > 1:
        rng = np.random.default_rng(0)
        for _ in range(8):
            coef = rng.standard_normal(null_basis.shape[1]) + 1j * rng.standard_normal(
                null_basis.shape[1]
            )
            candidates.append(null_basis @ coef)
    offsets = np.concatenate([[0], np.cumsum(dims.astype(np.int64) ** 2)])
    for vec in candidates:
        witness = {}
        for i, v in enumerate(quiver.vertices):
            dv = int(dims[i])
            x = vec[offsets[i] : offsets[i + 1]].reshape(dv, dv)
            witness[v] = polar_unitary(x)
        err = 0.0
        for arrow in quiver.arrows:
            uh, ut = witness[arrow.head], witness[arrow.tail]
            err = max(
                err,
                float(np.linalg.norm(uh @ a.matrices[arrow.id] - b.matrices[arrow.id] @ ut)),
            )
        if err <= tol:
            return True, witness
    return False, None


def random_representation(
    quiver: Quiver,
    dims,
    seed,
    scale: float = 1.0,
    chi=None,
) -> Representation:
    """Independent complex Gaussian entries, deterministic for a seed.

    When a character is supplied and its trace system is feasible, each
    arrow is rescaled so its squared Frobenius norm matches the edge trace
    target; otherwise matrices keep the raw scale.
    """
    if scale <= 0:
        raise ZeroVector("scale must be positive")
    d = quiver.dims_vector(dims)
    rng = np.random.default_rng(seed)
    mats = {}
    for a in quiver.arrows:
        shape = (int(d[quiver.index[a.head]]), int(d[quiver.index[a.tail]]))
        m = (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) * (
            scale / np.sqrt(2.0)
        )
        mats[a.id] = m
    if chi is not None:
        try:
            traces = edge_trace_system(quiver, d, chi)
        except TraceInfeasible:
            traces = None
        if traces is not None:
            for a in quiver.arrows:
                m = mats[a.id]
                target = traces[a.id]
                if target == 0.0:
                    mats[a.id] = np.zeros_like(m)
                    continue
                nrm = np.linalg.norm(m)
                if nrm > 0:
                    mats[a.id] = m * (np.sqrt(target) / nrm)
    return Representation(quiver, d, mats)
