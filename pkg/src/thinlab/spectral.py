"""Spectra of normalized graph Laplacians and the spectral-gap scan.

The Laplacian of a k-regular graph is D = I - (1/k)A; its spectrum lives in
[0, 2] and the multiplicity of 0 is the number of connected components.  The
gap lambda_1 (second-smallest eigenvalue) is computed two ways:

* dense: full symmetric eigendecomposition, for graphs up to 5000 vertices;
* iterative: ARPACK Lanczos on the adjacency operator with the constant
  vector deflated by a rank-one shift, so the relevant eigenvalue sits at the
  top edge of the spectrum where Lanczos converges fast.
"""
from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse.linalg as spla

from .cayley import CayleyGraph, build_cayley
from .finite_image import DEFAULT_ELEMENT_CAP, enumerate_image, is_surjective
from .words import GeneratorSet

DENSE_VERTEX_LIMIT = 5000
SCAN_DENSE_CUTOFF = 600  # scan only needs lambda_1; go iterative early


class EigensolverError(RuntimeError):
    """Raised when an iterative eigensolve fails to converge to tolerance."""


@dataclass
class SpectralReport:
    num_vertices: int
    k: int
    lambda1: float | None
    method: str  # "dense" | "lanczos"
    residual: float | None
    seconds: float
    prime: int | None = None
    psl: bool | None = None
    eigenvalues: np.ndarray | None = None
    lambda_max: float | None = None
    zero_multiplicity: int | None = None
    surjective: str | None = None
    complete: bool = True
    error: str | None = None

    def to_json(self) -> dict:
        out = {
            "prime": self.prime,
            "V": self.num_vertices,
            "k": self.k,
            "psl": self.psl,
            "lambda1": self.lambda1,
            "lambda_max": self.lambda_max,
            "zero_multiplicity": self.zero_multiplicity,
            "method": self.method,
            "residual": self.residual,
            "surjective": self.surjective,
            "complete": self.complete,
            "error": self.error,
        }
        if self.eigenvalues is not None and len(self.eigenvalues) <= 64:
            out["eigenvalues"] = [float(x) for x in self.eigenvalues]
        return out


def laplacian_spectrum_dense(graph: CayleyGraph, zero_tol: float = 1e-9) -> SpectralReport:
    """Full spectrum of D = I - (1/k)A via a dense symmetric eigensolver."""
    if graph.num_vertices > DENSE_VERTEX_LIMIT:
        raise ValueError(
            f"{graph.num_vertices} vertices exceeds the dense limit "
            f"{DENSE_VERTEX_LIMIT}; use lambda1_iterative"
        )
    start = time.perf_counter()
    a = graph.adjacency_dense()
    lap = np.eye(graph.num_vertices) - a / graph.k
    eigvals, eigvecs = np.linalg.eigh(lap)
    # explicit residuals for the two bottom pairs; eigh is backward stable so
    # these land far below zero_tol on anything desk-scale
    resid = 0.0
    for idx in range(min(2, graph.num_vertices)):
        v = eigvecs[:, idx]
        resid = max(resid, float(np.max(np.abs(lap @ v - eigvals[idx] * v))))
    zero_mult = int(np.sum(np.abs(eigvals) <= zero_tol))
    return SpectralReport(
        num_vertices=graph.num_vertices,
        k=graph.k,
        lambda1=float(eigvals[1]) if graph.num_vertices > 1 else None,
        method="dense",
        residual=resid,
        seconds=time.perf_counter() - start,
        psl=graph.psl,
        eigenvalues=eigvals,
        lambda_max=float(eigvals[-1]),
        zero_multiplicity=zero_mult,
    )


def lambda1_iterative(
    graph: CayleyGraph, tol: float = 1e-8, maxiter: int | None = None
) -> SpectralReport:
    """lambda_1 of a connected regular graph via deflated Lanczos.

    The constant eigenvector is shifted to the bottom of the adjacency
    spectrum (A - 2k/V * ones), so the second adjacency eigenvalue mu_2
    becomes the top extreme; lambda_1 = 1 - mu_2/k.  The returned residual is
    the explicitly computed ||D v - lambda_1 v||_2; failure to reach ``tol``
    raises EigensolverError rather than returning a doubtful number.
    """
    if graph.component_count() != 1:
        raise ValueError("lambda1_iterative requires a connected graph")
    start = time.perf_counter()
    V, k = graph.num_vertices, graph.k
    a = graph.adjacency()
    shift = 2.0 * k / V

    def matvec(x):
        return a @ x - shift * x.sum()

    op = spla.LinearOperator((V, V), matvec=matvec, dtype=float)
    ncv = min(V, 48)
    arpack_tol = tol / (4 * k)
    last_error = None
    for attempt in range(2):
        try:
            vals, vecs = spla.eigsh(
                op, k=1, which="LA", tol=arpack_tol,
                maxiter=maxiter or 100 * V, ncv=ncv,
            )
        except spla.ArpackNoConvergence as exc:
            raise EigensolverError(
                f"Lanczos failed to converge on {V} vertices: {exc}"
            ) from exc
        mu2 = float(vals[0])
        v = vecs[:, 0]
        lam1 = 1.0 - mu2 / k
        lap_v = v - (a @ v) / k
        residual = float(np.linalg.norm(lap_v - lam1 * v))
        if residual <= tol:
            return SpectralReport(
                num_vertices=V,
                k=k,
                lambda1=lam1,
                method="lanczos",
                residual=residual,
                seconds=time.perf_counter() - start,
                psl=graph.psl,
                eigenvalues=np.array([0.0, lam1]),
            )
        last_error = f"residual {residual:.3e} above tolerance {tol:.3e}"
        arpack_tol /= 100.0
        ncv = min(V, ncv * 2)
    raise EigensolverError(f"Lanczos residual check failed: {last_error}")


def lambda1(graph: CayleyGraph, tol: float = 1e-8) -> SpectralReport:
    """Dispatch on size: dense below the scan cutoff, Lanczos otherwise."""
    if graph.num_vertices <= SCAN_DENSE_CUTOFF:
        return laplacian_spectrum_dense(graph)
    return lambda1_iterative(graph, tol=tol)


def _thread_count() -> int:
    env = os.environ.get("THINLAB_THREADS")
    if env:
        return max(1, int(env))
    return min(4, os.cpu_count() or 1)


def spectral_scan(
    gens: GeneratorSet,
    primes: list[int],
    psl: bool = False,
    tol: float = 1e-8,
    cap: int = DEFAULT_ELEMENT_CAP,
    threads: int | None = None,
) -> list[SpectralReport]:
    """Per-prime lambda_1 rows for the family of congruence Cayley graphs.

    Individual failures (cap hits, eigensolver trouble) are recorded on their
    rows; the scan itself never aborts.
    """

    def one(p: int) -> SpectralReport:
        try:
            verdict = is_surjective(gens, p, cap)
            if verdict.surjective == "capped":
                return SpectralReport(
                    num_vertices=verdict.image_order, k=2 * len(gens),
                    lambda1=None, method="none", residual=None, seconds=0.0,
                    prime=p, psl=psl, surjective="capped", complete=False,
                    error="element cap exceeded",
                )
            image = enumerate_image(gens, p, cap)
            graph = build_cayley(image, psl=psl)
            report = lambda1(graph, tol=tol)
            report.prime = p
            report.surjective = verdict.surjective
            return report
        except (EigensolverError, ValueError) as exc:
            return SpectralReport(
                num_vertices=0, k=2 * len(gens), lambda1=None, method="none",
                residual=None, seconds=0.0, prime=p, psl=psl,
                complete=False, error=str(exc),
            )

    if not primes:
        return []
    workers = threads if threads is not None else _thread_count()
    if workers <= 1 or len(primes) == 1:
        return [one(p) for p in primes]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(one, primes))
