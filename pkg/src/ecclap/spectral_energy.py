"""Graph matrices and energies: E(G), LE(G) and the eccentricity Laplacian energy.

The eccentricity Laplacian ``L_ecc(G) = diag(ecc) - A(G)``. Its eigenvalues
``mu'`` shifted by the average eccentricity ``zeta / n`` give ``nu'``; the
energy ``LE_ecc(G)`` is the sum of ``|nu'_i|``. ``nu'`` is stored signed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .graph_core import MAX_GRAPH6_N, Graph, write_graph6
from .linalg import DEFAULT_TOL, SymmetricMatrix, eigenvalues, eigenvalues_batch
from .metrics import EccentricityProfile, eccentricity_profile

__all__ = [
    "EnergyReport",
    "ENERGY_CSV_FIELDS",
    "adjacency_energy",
    "adjacency_matrix",
    "ecc_laplacian_energy",
    "ecc_laplacian_matrix",
    "energy_reports",
    "laplacian_energy",
    "laplacian_matrix",
]

ENERGY_CSV_FIELDS = (
    "n", "m", "zeta", "e1", "E", "LE", "LE_ecc",
    "mu_prime", "nu_prime", "adjacency_spectrum", "laplacian_spectrum",
)


def _adjacency_array(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1.0
    return a


def adjacency_matrix(g: Graph) -> SymmetricMatrix:
    return SymmetricMatrix(_adjacency_array(g))


def laplacian_matrix(g: Graph) -> SymmetricMatrix:
    a = _adjacency_array(g)
    return SymmetricMatrix(np.diag(a.sum(axis=1)) - a)


def _ecc_laplacian_array(g: Graph, profile: EccentricityProfile) -> np.ndarray:
    return np.diag(np.array(profile.ecc, dtype=float)) - _adjacency_array(g)


def ecc_laplacian_matrix(g: Graph) -> SymmetricMatrix:
    """``diag(ecc) - A``; raises ``DisconnectedGraphError`` for disconnected input."""
    return SymmetricMatrix(_ecc_laplacian_array(g, eccentricity_profile(g)))


def adjacency_energy(g: Graph, tol: float = DEFAULT_TOL) -> float:
    return float(sum(abs(x) for x in eigenvalues(adjacency_matrix(g), tol)))


def laplacian_energy(g: Graph, tol: float = DEFAULT_TOL) -> float:
    shift = 2 * g.m / g.n
    return float(sum(abs(x - shift) for x in eigenvalues(laplacian_matrix(g), tol)))


@dataclass(frozen=True)
class EnergyReport:
    """Per-graph energies and spectra. All spectra are sorted descending."""

    graph6: str
    n: int
    m: int
    zeta: int
    e1: int
    adjacency_energy: float
    laplacian_energy: float
    ecc_laplacian_energy: float
    mu_prime: tuple[float, ...]
    nu_prime: tuple[float, ...]
    adjacency_spectrum: tuple[float, ...]
    laplacian_spectrum: tuple[float, ...]
    degree_sq_sum: int
    solver_residual: float

    @property
    def average_ecc(self) -> float:
        return self.zeta / self.n

    @property
    def nu_sq_sum(self) -> float:
        """Closed form of the sum of squared shifts: ``E1 - zeta^2/n + 2m``."""
        return self.e1 - self.zeta ** 2 / self.n + 2 * self.m

    def to_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "zeta": self.zeta,
            "e1": self.e1,
            "E": self.adjacency_energy,
            "LE": self.laplacian_energy,
            "LE_ecc": self.ecc_laplacian_energy,
            "mu_prime": list(self.mu_prime),
            "nu_prime": list(self.nu_prime),
            "adjacency_spectrum": list(self.adjacency_spectrum),
            "laplacian_spectrum": list(self.laplacian_spectrum),
        }

    def csv_values(self, fmt) -> list[str]:
        """Row in ``ENERGY_CSV_FIELDS`` order; ``fmt`` renders one float."""
        joined = lambda xs: ";".join(fmt(x) for x in xs)  # noqa: E731
        return [
            str(self.n), str(self.m), str(self.zeta), str(self.e1),
            fmt(self.adjacency_energy), fmt(self.laplacian_energy),
            fmt(self.ecc_laplacian_energy),
            joined(self.mu_prime), joined(self.nu_prime),
            joined(self.adjacency_spectrum), joined(self.laplacian_spectrum),
        ]


def _build_report(g: Graph, profile: EccentricityProfile, adj_vals, lap_vals, ecc_vals,
                  residual: float) -> EnergyReport:
    n, m = g.n, g.m
    shift = profile.zeta / n
    nu = tuple(float(x - shift) for x in ecc_vals)
    lap_shift = 2 * m / n
    return EnergyReport(
        graph6=write_graph6(g) if n <= MAX_GRAPH6_N else "",
        n=n,
        m=m,
        zeta=profile.zeta,
        e1=profile.e1,
        adjacency_energy=float(np.sum(np.abs(adj_vals))),
        laplacian_energy=float(np.sum(np.abs(np.asarray(lap_vals) - lap_shift))),
        ecc_laplacian_energy=float(sum(abs(x) for x in nu)),
        mu_prime=tuple(float(x) for x in ecc_vals),
        nu_prime=nu,
        adjacency_spectrum=tuple(float(x) for x in adj_vals),
        laplacian_spectrum=tuple(float(x) for x in lap_vals),
        degree_sq_sum=sum(d * d for d in g.degrees()),
        solver_residual=float(residual),
    )


def ecc_laplacian_energy(g: Graph, tol: float = DEFAULT_TOL) -> EnergyReport:
    """Full :class:`EnergyReport` for a connected graph."""
    return energy_reports([g], tol)[0]


def energy_reports(graphs: Iterable[Graph], tol: float = DEFAULT_TOL) -> list[EnergyReport]:
    """Reports for many connected graphs, solved in same-order stacks per ``n``."""
    graphs = list(graphs)
    profiles = [eccentricity_profile(g) for g in graphs]
    by_n: dict[int, list[int]] = {}
    for i, g in enumerate(graphs):
        by_n.setdefault(g.n, []).append(i)
    out: list[EnergyReport | None] = [None] * len(graphs)
    for n, idx in by_n.items():
        adj = np.stack([_adjacency_array(graphs[i]) for i in idx])
        lap = np.einsum("kij->ki", adj)[:, :, None] * np.eye(n) - adj
        ecc = np.stack([np.diag(np.array(profiles[i].ecc, dtype=float)) for i in idx]) - adj
        adj_vals, adj_res, _ = eigenvalues_batch(adj, tol)
        lap_vals, lap_res, _ = eigenvalues_batch(lap, tol)
        ecc_vals, ecc_res, _ = eigenvalues_batch(ecc, tol)
        residual = np.maximum(np.maximum(adj_res, lap_res), ecc_res)
        for row, i in enumerate(idx):
            out[i] = _build_report(graphs[i], profiles[i], adj_vals[row], lap_vals[row],
                                   ecc_vals[row], residual[row])
    return out  # type: ignore[return-value]

