"""Exact, desk-scale ground truth for the asymptotic formulas.

Builds parity-check matrices from Tanner graphs, computes syndromes and
finds minimum distances and weight distributions by exhaustive enumeration
of the code.
"""

import math
import re
from dataclasses import dataclass, field

import numpy as np

from . import kernels, linalg
from .bounds import RowDegreeDistribution, gv_delta, invert_to_delta
from .enumerators import ENUMERATION_GUARD
from .errors import DomainError, GuardExceededError, NoSolutionError
from .gf import get_field

#: returned by min_distance_exhaustive for the zero code
INFINITE_DISTANCE = math.inf

_MAX_GRAPH_ATTEMPTS = 1000


@dataclass(frozen=True)
class TannerGraph:
    """Bipartite graph of ``N`` variable and ``M`` check nodes.

    ``edges`` are ``(variable, check)`` pairs; their order fixes the order
    of each check's neighbourhood (and so the column order of a generalized
    constituent code).
    """

    N: int
    M: int
    edges: tuple

    def __post_init__(self):
        edges = tuple((int(v), int(c)) for v, c in self.edges)
        object.__setattr__(self, "edges", edges)
        if len(set(edges)) != len(edges):
            raise DomainError("duplicate edge in Tanner graph")
        for v, c in edges:
            if not (0 <= v < self.N and 0 <= c < self.M):
                raise DomainError(f"edge ({v}, {c}) out of range for N={self.N}, M={self.M}")
        if any(d < 2 for d in self.check_degrees):
            raise DomainError("every check node needs degree >= 2")

    @property
    def check_degrees(self):
        deg = [0] * self.M
        for _, c in self.edges:
            deg[c] += 1
        return deg

    @property
    def variable_degrees(self):
        deg = [0] * self.N
        for v, _ in self.edges:
            deg[v] += 1
        return deg

    @property
    def right_regular(self):
        return len(set(self.check_degrees)) == 1

    def neighbors(self, check):
        return [v for v, c in self.edges if c == check]

    def edge_indices(self, check):
        return [e for e, (_, c) in enumerate(self.edges) if c == check]


@dataclass(frozen=True, eq=False)
class ParityCheckMatrix:
    rows: np.ndarray
    q: int

    def __post_init__(self):
        object.__setattr__(self, "rows", linalg.as_matrix(self.rows, self.q))

    @property
    def shape(self):
        return self.rows.shape

    def __eq__(self, other):
        return isinstance(other, ParityCheckMatrix) and self.q == other.q and np.array_equal(self.rows, other.rows)

    def dumps(self):
        m, n = self.rows.shape
        lines = [f"{n} {m} {self.q}"] + [" ".join(str(int(x)) for x in row) for row in self.rows]
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text):
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise DomainError("empty parity-check file")
        try:
            n, m, q = (int(v) for v in lines[0].split())
            rows = [[int(v) for v in ln.split()] for ln in lines[1:]]
        except ValueError as exc:
            raise DomainError(f"malformed parity-check file: {exc}") from None
        if len(rows) != m or any(len(r) != n for r in rows):
            raise DomainError(f"expected {m} rows of {n} entries")
        return cls(np.array(rows, dtype=np.int64).reshape(m, n), q)


def _rows(H, q=None):
    if isinstance(H, ParityCheckMatrix):
        if q is not None and q != H.q:
            raise DomainError(f"matrix is over GF({H.q}), not GF({q})")
        return H.rows, H.q
    return linalg.as_matrix(H, q), q


def _edge_labels(labels, count, q):
    if labels is None or (isinstance(labels, str) and labels == "ones"):
        return np.ones(count, dtype=np.int64)
    if isinstance(labels, str):
        m = re.fullmatch(r"random\((\d+)\)", labels.strip())
        if not m:
            raise DomainError(f"edge labels must be a list, 'ones' or 'random(<seed>)', got {labels!r}")
        rng = np.random.default_rng(int(m.group(1)))
        return rng.integers(1, q, size=count)
    out = np.array([int(x) for x in labels], dtype=np.int64)
    if out.size != count:
        raise DomainError(f"expected {count} edge labels, got {out.size}")
    if np.any(out == 0):
        raise DomainError("edge label 0 would delete an edge")
    if np.any(out < 0) or np.any(out >= q):
        raise DomainError(f"edge labels must be nonzero elements of GF({q})")
    return out


def build_parity_check(graph, q, edge_labels=None, H0=None):
    """Parity-check matrix of the code defined by ``graph`` over GF(q).

    Without ``H0`` every check is a single parity equation whose
    coefficients are the edge labels. With an ``m0 x n0`` constituent
    parity-check matrix ``H0`` each check contributes ``m0`` rows; column
    ``j`` of ``H0``, scaled by the label of the check's ``j``-th edge, lands
    on the ``j``-th neighbour.
    """
    F = get_field(q)
    labels = _edge_labels(edge_labels, len(graph.edges), q)
    if H0 is None:
        H = np.zeros((graph.M, graph.N), dtype=np.uint8)
        for e, (v, c) in enumerate(graph.edges):
            H[c, v] = labels[e]
        return ParityCheckMatrix(H, q)
    H0 = linalg.as_matrix(H0, q)
    m0, n0 = H0.shape
    H = np.zeros((graph.M * m0, graph.N), dtype=np.uint8)
    for c in range(graph.M):
        idx = graph.edge_indices(c)
        if len(idx) != n0:
            raise DomainError(f"check {c} has degree {len(idx)} but the constituent code has length {n0}")
        for j, e in enumerate(idx):
            v = graph.edges[e][0]
            H[c * m0 : (c + 1) * m0, v] = F.mul[labels[e], H0[:, j]]
    return ParityCheckMatrix(H, q)


def syndrome(H, r, q=None):
    """``H r^T`` over GF(q)."""
    rows, q = _rows(H, q)
    r = np.asarray(r, dtype=np.int64)
    if r.ndim != 1 or r.size != rows.shape[1]:
        raise DomainError(f"word length {r.size} does not match N={rows.shape[1]}")
    if r.size and (r.min() < 0 or r.max() >= q):
        raise DomainError(f"word entries must lie in [0, {q})")
    F = get_field(q)
    prod = F.mul[rows, r.astype(np.uint8)[None, :]]
    out = np.zeros(rows.shape[0], dtype=np.uint8)
    for col in prod.T:
        out = F.add[out, col]
    return out


def code_basis(H, q=None, guard=ENUMERATION_GUARD):
    rows, q = _rows(H, q)
    basis = linalg.null_space(rows, q)
    k = basis.shape[0]
    if q**k > guard:
        raise GuardExceededError(f"q^k = {q}^{k} codewords exceeds the exhaustive-search guard of 10^7")
    return basis, q


def min_distance_exhaustive(H, q=None, guard=ENUMERATION_GUARD):
    """Minimum Hamming weight of a nonzero codeword of ``{x : H x^T = 0}``.

    Returns :data:`INFINITE_DISTANCE` for the zero code.
    """
    basis, q = code_basis(H, q, guard)
    if basis.shape[0] == 0:
        return INFINITE_DISTANCE
    F = get_field(q)
    hist, stopped = kernels.weight_histogram(basis, F.add, F.sub, F.mul, stop_weight=1)
    if stopped:
        return 1
    return int(np.flatnonzero(hist[1:])[0]) + 1


def sample_regular_graph(rng, N, ell, n0):
    """Random ``(ell, n0)``-regular Tanner graph by the configuration model.

    Variable stubs ``[0]*ell + [1]*ell + ...`` are shuffled with
    ``rng.permutation``; check ``c`` takes stubs ``c*n0 .. c*n0+n0-1``.
    Shuffles that put two stubs of one variable on the same check are
    rejected and redrawn.
    """
    if ell < 1 or n0 < 2 or N < 1:
        raise DomainError("need ell >= 1, n0 >= 2, N >= 1")
    if (ell * N) % n0:
        raise DomainError(f"ell*N = {ell * N} is not divisible by n0 = {n0}")
    M = ell * N // n0
    if ell > M:
        raise DomainError(f"ell={ell} exceeds the number of checks M={M}")
    stubs = np.repeat(np.arange(N), ell)
    for _ in range(_MAX_GRAPH_ATTEMPTS):
        perm = rng.permutation(stubs).reshape(M, n0)
        if all(len(set(row.tolist())) == n0 for row in perm):
            edges = [(int(v), c) for c in range(M) for v in perm[c]]
            return TannerGraph(N, M, tuple(edges))
    raise DomainError(f"no simple ({ell}, {n0}) graph found in {_MAX_GRAPH_ATTEMPTS} attempts")


@dataclass
class EnsembleReport:
    q: int
    ell: int
    n0: int
    N: int
    seed: int
    distances: list
    design_rate: float
    gv: float
    upper_composite: float = None
    upper_zero_floor: float = None
    ratios: list = field(init=False)

    def __post_init__(self):
        self.ratios = [d / self.N for d in self.distances]

    @property
    def mean(self):
        # from the integer distances, so mean never exceeds max by rounding
        return sum(self.distances) / (self.N * len(self.distances))

    @property
    def max(self):
        return max(self.ratios)

    @property
    def min(self):
        return min(self.ratios)


def ensemble_smoke(q, ell, n0, N, trials, seed, guard=ENUMERATION_GUARD):
    """Exact ``d/N`` of random right-regular LDPC codes over GF(q).

    Reports the sampled values next to the asymptotic upper bound for the
    same ``(ell, n0)`` degree pair; finite-length codes are not required to
    respect the asymptotic value.
    """
    if trials < 1:
        raise DomainError("trials must be >= 1")
    if ell >= n0:
        raise DomainError(f"design rate 1 - ell/n0 must be positive (ell={ell}, n0={n0})")
    M = ell * N // n0
    if q ** (N - M) > guard:
        raise GuardExceededError(f"q^(N-M) = {q}^{N - M} codewords exceeds the exhaustive-search guard of 10^7")
    get_field(q)
    rng = np.random.default_rng(seed)
    distances = []
    for _ in range(trials):
        graph = sample_regular_graph(rng, N, ell, n0)
        labels = rng.integers(1, q, size=len(graph.edges))
        H = build_parity_check(graph, q, labels)
        distances.append(min_distance_exhaustive(H, guard=guard))
    rate = 1 - ell / n0
    rho = RowDegreeDistribution.regular(n0)
    report = EnsembleReport(q, ell, n0, N, seed, distances, rate, gv_delta(q, rate))
    for attr, cw in (("upper_composite", "composite"), ("upper_zero_floor", "zero-floor")):
        try:
            setattr(report, attr, invert_to_delta(q, rho, rate, cw))
        except NoSolutionError:
            pass
    return report
