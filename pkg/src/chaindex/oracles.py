"""Definition-level oracles for every invariant, in exact arithmetic.

These functions are the ground truth of the package: resistance sums,
matrix-tree determinants, and breadth-first distance sums computed
straight from the definitions, with no use of the closed forms they are
later compared against.  The two resistance-based indices are each
computed along two independent routes (pairwise sums and a trailing
characteristic-coefficient ratio) and the routes must agree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import ChainGraph, Graph, Vertex
from .linalg import (
    LUDecomposition,
    SingularMatrixError,
    char_poly,
    det_bareiss,
    laplacian,
    random_walk_laplacian,
    solve,
)


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise ValueError("graph is not connected")


def _band_order(g: Graph) -> tuple:
    """Vertex order used for internal matrices.

    Interleaving the two rails of a chain makes every derived matrix
    banded, which the exact elimination kernels exploit; the spectra and
    determinants being computed are invariant under any reordering.
    """
    if isinstance(g, ChainGraph):
        return tuple(sorted(g.vertices, key=lambda v: (v.index, v.primed)))
    return g.vertices


# ---------------------------------------------------------------------------
# resistance distances


def resistance(g: Graph, u, v) -> Fraction:
    """Effective resistance between u and v with unit resistors on edges.

    Grounds one other vertex, solves the reduced Laplacian for the
    potentials of a unit current injected at u and extracted at v, and
    returns the potential difference.
    """
    if u == v:
        raise ValueError("resistance requires two distinct vertices")
    order = [w for w in _band_order(g) if w != u and w != v]
    if len(order) + 2 != g.vertex_count:
        raise ValueError("both endpoints must belong to the graph")
    _require_connected(g)
    ground = order[-1] if order else v
    kept = [w for w in _band_order(g) if w != ground]
    lap = laplacian(g, kept + [ground])
    reduced = [row[:-1] for row in lap[:-1]]
    rhs = [Fraction(0)] * len(kept)
    pos = {w: i for i, w in enumerate(kept)}
    if u != ground:
        rhs[pos[u]] += 1
    if v != ground:
        rhs[pos[v]] -= 1
    potentials = solve(reduced, rhs)
    phi_u = potentials[pos[u]] if u != ground else Fraction(0)
    phi_v = potentials[pos[v]] if v != ground else Fraction(0)
    return phi_u - phi_v


def _grounded_inverse(g: Graph) -> tuple[list, list[list[Fraction]]]:
    """Inverse of the Laplacian with the last band-ordered vertex grounded.

    One factorization serves every column, so all-pairs resistances cost
    one LU plus one triangular solve per vertex.
    """
    order = list(_band_order(g))
    lap = laplacian(g, order)
    m = len(order) - 1
    reduced = [row[:m] for row in lap[:m]]
    try:
        lu = LUDecomposition(reduced)
    except SingularMatrixError:
        raise ValueError("graph is not connected") from None
    unit = [Fraction(0)] * m
    columns = []
    for k in range(m):
        unit[k] = Fraction(1)
        columns.append(lu.solve(unit))
        unit[k] = Fraction(0)
    return order, columns


def _pairwise_resistance_sums(g: Graph) -> tuple[Fraction, Fraction]:
    """(plain sum, degree-weighted sum) of resistances over all vertex pairs."""
    order, inv = _grounded_inverse(g)
    m = len(order) - 1
    degs = [g.degree(v) for v in order]
    plain = Fraction(0)
    weighted = Fraction(0)
    for a in range(m):
        g_aa = inv[a][a]
        # pairs (a, ground)
        plain += g_aa
        weighted += degs[a] * degs[m] * g_aa
        for b in range(a + 1, m):
            r = g_aa + inv[b][b] - 2 * inv[a][b]
            plain += r
            weighted += degs[a] * degs[b] * r
    return plain, weighted


def kirchhoff_from_resistances(g: Graph) -> Fraction:
    """Kirchhoff index as the plain sum of all pairwise resistances."""
    _require_connected(g)
    return _pairwise_resistance_sums(g)[0]


def kirchhoff_from_spectrum(g: Graph) -> Fraction:
    """Kirchhoff index as |V| times the reciprocal-eigenvalue sum.

    The sum of reciprocals of the nonzero Laplacian eigenvalues equals the
    ratio of the degree-2 to degree-1 characteristic coefficients, which
    the exact characteristic polynomial provides without ever computing an
    eigenvalue.
    """
    poly = char_poly(laplacian(g, _band_order(g)))
    if poly[0] != 0 or poly[1] == 0:
        raise ValueError("graph is not connected")
    return g.vertex_count * abs(poly[2] / poly[1])


def kirchhoff_index(g: Graph) -> Fraction:
    """Kirchhoff index; both computation routes must agree exactly."""
    pairwise = kirchhoff_from_resistances(g)
    spectral = kirchhoff_from_spectrum(g)
    if pairwise != spectral:
        raise ArithmeticError(
            f"kirchhoff routes disagree: pairwise {pairwise} vs spectral {spectral}"
        )
    return pairwise


def degree_kirchhoff_from_resistances(g: Graph) -> Fraction:
    """Degree-Kirchhoff index as the degree-weighted pairwise resistance sum."""
    _require_connected(g)
    return _pairwise_resistance_sums(g)[1]


def degree_kirchhoff_from_spectrum(g: Graph) -> Fraction:
    """Degree-Kirchhoff index as 2|E| times the normalized reciprocal sum."""
    poly = char_poly(random_walk_laplacian(g, _band_order(g)))
    if poly[0] != 0 or poly[1] == 0:
        raise ValueError("graph is not connected")
    return 2 * g.edge_count * abs(poly[2] / poly[1])


def degree_kirchhoff_index(g: Graph) -> Fraction:
    """Degree-Kirchhoff index; both computation routes must agree exactly."""
    pairwise = degree_kirchhoff_from_resistances(g)
    spectral = degree_kirchhoff_from_spectrum(g)
    if pairwise != spectral:
        raise ArithmeticError(
            f"degree-kirchhoff routes disagree: {pairwise} vs {spectral}"
        )
    return pairwise


# ---------------------------------------------------------------------------
# spanning trees


def spanning_tree_count(g: Graph, drop=None) -> int:
    """Number of spanning trees via a reduced-Laplacian determinant.

    The count is independent of which vertex is deleted; ``drop`` selects
    one explicitly (mainly so tests can confirm the independence).
    """
    _require_connected(g)
    band = list(_band_order(g))
    if drop is None:
        drop = band[-1]
    elif drop not in band:
        raise ValueError("drop vertex not in graph")
    order = [v for v in band if v != drop] + [drop]
    lap = laplacian(g, order)
    m = len(order) - 1
    count = det_bareiss([row[:m] for row in lap[:m]])
    if count <= 0:
        raise ArithmeticError("matrix-tree determinant must be positive here")
    return count


# ---------------------------------------------------------------------------
# distance-based indices


def wiener_index(g: Graph) -> int:
    """Sum of shortest-path distances over all unordered vertex pairs."""
    _require_connected(g)
    total = 0
    for v in g.vertices:
        total += sum(g.distances_from(v).values())
    return total // 2


def gutman_index(g: Graph) -> int:
    """Distances weighted by endpoint degree products, over unordered pairs."""
    _require_connected(g)
    total = 0
    for v in g.vertices:
        dv = g.degree(v)
        dist = g.distances_from(v)
        total += dv * sum(g.degree(w) * d for w, d in dist.items())
    return total // 2


def _check_chain(g: ChainGraph) -> None:
    if not isinstance(g, ChainGraph) or g.kind != "crossed":
        raise ValueError("class sums are defined for crossed chains")


def _class_distance_sum(g: ChainGraph, members: list[Vertex], weighted: bool) -> int:
    total = 0
    for u in members:
        dist = g.distances_from(u)
        if weighted:
            total += g.degree(u) * sum(g.degree(w) * d for w, d in dist.items())
        else:
            total += sum(dist.values())
    return total


def _both_rails(indices) -> list[Vertex]:
    return [Vertex(i, primed) for i in indices for primed in (False, True)]


def wiener_class_sums(g: ChainGraph) -> list[int]:
    """Distance sums from five vertex classes to the whole graph.

    Classes (both rails each): the four end vertices; indices 2 (mod 4);
    indices 3 (mod 4); indices 0 (mod 4); interior indices 1 (mod 4).
    Together the classes partition the vertex set, so half the total of
    these sums is the Wiener index.
    """
    _check_chain(g)
    n = g.n
    classes = [
        _both_rails([1, 4 * n + 1]),
        _both_rails(range(2, 4 * n + 2, 4)),
        _both_rails(range(3, 4 * n + 2, 4)),
        _both_rails(range(4, 4 * n + 2, 4)),
        _both_rails(range(5, 4 * n + 1, 4)),
    ]
    return [_class_distance_sum(g, members, weighted=False) for members in classes]


def gutman_class_sums(g: ChainGraph) -> list[int]:
    """Degree-weighted distance sums from six vertex classes (see above);
    the ends split into the left pair and the right pair."""
    _check_chain(g)
    n = g.n
    classes = [
        _both_rails([1]),
        _both_rails([4 * n + 1]),
        _both_rails(range(2, 4 * n + 2, 4)),
        _both_rails(range(3, 4 * n + 2, 4)),
        _both_rails(range(4, 4 * n + 2, 4)),
        _both_rails(range(5, 4 * n + 1, 4)),
    ]
    return [_class_distance_sum(g, members, weighted=True) for members in classes]


# ---------------------------------------------------------------------------
# bundles


@dataclass(frozen=True)
class IndexBundle:
    """Every invariant of one graph, exactly."""

    n: int
    kf: Fraction
    kf_star: Fraction
    tau: int
    wiener: int
    gutman: int

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "kf": str(self.kf),
            "kf_star": str(self.kf_star),
            "tau": str(self.tau),
            "wiener": str(self.wiener),
            "gutman": str(self.gutman),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "IndexBundle":
        return cls(
            n=int(data["n"]),
            kf=Fraction(data["kf"]),
            kf_star=Fraction(data["kf_star"]),
            tau=int(data["tau"]),
            wiener=int(data["wiener"]),
            gutman=int(data["gutman"]),
        )


def index_bundle(g: ChainGraph) -> IndexBundle:
    """Compute the full exact bundle for a chain graph via the oracles."""
    return IndexBundle(
        n=g.n,
        kf=kirchhoff_index(g),
        kf_star=degree_kirchhoff_index(g),
        tau=spanning_tree_count(g),
        wiener=wiener_index(g),
        gutman=gutman_index(g),
    )
