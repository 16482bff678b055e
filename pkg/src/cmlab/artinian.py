"""Finite-dimensional oracle: graded modules as degree blocks plus action matrices.

Nothing here touches the Groebner engine. A module is flattened degree by
degree from Macaulay matrices, and resolutions are built with dense mod-p
elimination. The graded engine is cross-checked against these numbers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .errors import NotFiniteLengthError, ResourceLimitError

Exp = Tuple[int, ...]

MAX_TOTAL_DIM = 20_000
MAX_DEGREE_SPAN = 200


# -- dense linear algebra over F_p ------------------------------------------------------
def rref(a: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form (nonzero rows only) and pivot columns."""
    a = np.array(a, dtype=np.int64) % p
    rows, cols = a.shape
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = a[r] * pow(int(a[r, c]), p - 2, p) % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            a[hit] = (a[hit] - np.outer(col[hit], a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def nullspace(a: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """Columns spanning ker(a), normalized to the identity on the returned free columns."""
    n = a.shape[1]
    if a.shape[0] == 0:
        return np.eye(n, dtype=np.int64), list(range(n))
    red, piv = rref(a, p)
    free = [c for c in range(n) if c not in set(piv)]
    basis = np.zeros((n, len(free)), dtype=np.int64)
    for j, f in enumerate(free):
        basis[f, j] = 1
        for i, c in enumerate(piv):
            basis[c, j] = (-red[i, f]) % p
    return basis, free


def rank(a: np.ndarray, p: int) -> int:
    if a.size == 0:
        return 0
    return len(rref(a, p)[1])


# -- graded finite-dimensional modules ------------------------------------------------------
@dataclass
class FiniteModule:
    """dims[d] = dim_k M_d; actions[v][d] is the dims[d+1] x dims[d] matrix of x_v."""

    nvars: int
    p: int
    dims: Dict[int, int]
    actions: List[Dict[int, np.ndarray]]
    labels: Dict[int, List[Tuple[int, Exp]]] = field(default_factory=dict)

    @property
    def length(self) -> int:
        return sum(self.dims.values())

    def degrees(self) -> List[int]:
        return sorted(d for d, n in self.dims.items() if n)

    def dim_at(self, d: int) -> int:
        return self.dims.get(d, 0)

    def act(self, v: int, d: int) -> np.ndarray:
        """Matrix of x_v from degree d to d+1 (possibly empty)."""
        m = self.actions[v].get(d)
        if m is None:
            return np.zeros((self.dim_at(d + 1), self.dim_at(d)), dtype=np.int64)
        return m


FiniteAlgebra = FiniteModule


def _monomials(nvars: int, d: int) -> List[Exp]:
    """Exponent vectors of degree d, in descending lex order."""
    if d < 0:
        return []
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    out.sort(reverse=True)
    return out


def _mul_exp(a: Exp, b: Exp) -> Exp:
    return tuple(x + y for x, y in zip(a, b))


def flatten_data(nvars: int, p: int, twists: Sequence[int],
                 relations: Sequence[Sequence[Dict[Exp, int]]], ideal: Sequence[Dict[Exp, int]],
                 truncate: Optional[int] = None) -> FiniteModule:
    """Degree-by-degree quotient F/U with U spanned by relations and ideal*F.

    Relations are lists of polynomials (one per generator) in exponent form.
    Columns in each degree are ordered by component, then descending lex,
    so the non-pivot columns are standard monomials and form an order ideal.
    ``truncate=t`` adds m^t F to U.
    """
    gens: List[Tuple[int, List[Tuple[int, Exp, int]]]] = []
    for row in relations:
        terms = [(i, e, c % p) for i, f in enumerate(row) for e, c in f.items() if c % p]
        if terms:
            degs = {twists[i] + sum(e) for i, e, _ in terms}
            if len(degs) != 1:
                raise ValueError("inhomogeneous relation")
            gens.append((degs.pop(), terms))
    for g in ideal:
        terms = [(e, c % p) for e, c in g.items() if c % p]
        if not terms:
            continue
        dg = sum(terms[0][0])
        for i in range(len(twists)):
            gens.append((dg + twists[i], [(i, e, c) for e, c in terms]))
    if not twists:
        return FiniteModule(nvars, p, {}, [dict() for _ in range(nvars)])
    lo = min(twists)
    top = max([max(twists)] + [d for d, _ in gens])

    cols: Dict[int, List[Tuple[int, Exp]]] = {}
    index: Dict[int, Dict[Tuple[int, Exp], int]] = {}
    ureduced: Dict[int, Tuple[np.ndarray, List[int]]] = {}
    standard: Dict[int, List[int]] = {}
    d = lo
    while True:
        if d - lo > MAX_DEGREE_SPAN:
            raise NotFiniteLengthError("module does not vanish in high degree")
        cols[d] = [(i, e) for i in range(len(twists)) for e in _monomials(nvars, d - twists[i])]
        index[d] = {c: j for j, c in enumerate(cols[d])}
        rows = []
        if d - 1 in ureduced:
            prev_red, _ = ureduced[d - 1]
            for r in prev_red:
                for v in range(nvars):
                    unit = tuple(int(k == v) for k in range(nvars))
                    vec = np.zeros(len(cols[d]), dtype=np.int64)
                    for j in np.flatnonzero(r):
                        i, e = cols[d - 1][j]
                        vec[index[d][(i, _mul_exp(e, unit))]] = r[j]
                    rows.append(vec)
        for gd, terms in gens:
            if gd == d:
                vec = np.zeros(len(cols[d]), dtype=np.int64)
                for i, e, c in terms:
                    vec[index[d][(i, e)]] = (vec[index[d][(i, e)]] + c) % p
                rows.append(vec)
        if truncate is not None:
            for j, (i, e) in enumerate(cols[d]):
                if sum(e) >= truncate:
                    vec = np.zeros(len(cols[d]), dtype=np.int64)
                    vec[j] = 1
                    rows.append(vec)
        mat = np.array(rows, dtype=np.int64).reshape(len(rows), len(cols[d]))
        red, piv = rref(mat, p) if len(rows) else (mat, [])
        ureduced[d] = (red, piv)
        pivset = set(piv)
        standard[d] = [j for j in range(len(cols[d])) if j not in pivset]
        if sum(len(s) for s in standard.values()) > MAX_TOTAL_DIM:
            raise ResourceLimitError("flattened module exceeds %d dimensions" % MAX_TOTAL_DIM)
        if d >= top and not standard[d]:
            break
        d += 1
    last = d

    dims = {dd: len(standard[dd]) for dd in range(lo, last + 1) if standard[dd]}
    labels = {dd: [cols[dd][j] for j in standard[dd]] for dd in dims}
    actions: List[Dict[int, np.ndarray]] = [dict() for _ in range(nvars)]
    for dd in dims:
        if dd + 1 > last:
            continue
        red, piv = ureduced[dd + 1]
        target_std = standard[dd + 1]
        for v in range(nvars):
            unit = tuple(int(k == v) for k in range(nvars))
            m = np.zeros((len(target_std), dims[dd]), dtype=np.int64)
            for s, j in enumerate(standard[dd]):
                i, e = cols[dd][j]
                u = index[dd + 1][(i, _mul_exp(e, unit))]
                vec = np.zeros(len(cols[dd + 1]), dtype=np.int64)
                vec[u] = 1
                # Reduce by the RREF rows whose pivot is hit, then read standard coordinates.
                for r, c in enumerate(piv):
                    if vec[c]:
                        vec = (vec - vec[c] * red[r]) % p
                for k, jj in enumerate(target_std):
                    m[k, s] = vec[jj]
            if m.size:
                actions[v][dd] = m
    return FiniteModule(nvars, p, dims, actions, labels)


def flatten(M, truncate: Optional[int] = None) -> FiniteModule:
    """Flatten a graded-engine module; only its presentation data is read."""
    S = M.ring.S
    codec = S.codec
    to_exp = lambda f: {codec.decode(m): c for m, c in f.items()}
    rels = [[to_exp(f) for f in M.free.entry_list(v)] for v in M.relations]
    ideal = [to_exp(g) for g in M.ring.ideal]
    return flatten_data(S.nvars, S.p, list(M.twists), rels, ideal, truncate)


def flatten_ring(R, truncate: Optional[int] = None) -> FiniteAlgebra:
    S = R.S
    ideal = [{S.codec.decode(m): c for m, c in g.items()} for g in R.ideal]
    return flatten_data(S.nvars, S.p, [0], [], ideal, truncate)


# -- resolutions by rank computations ------------------------------------------------------
def minimal_generators(M: FiniteModule) -> List[Tuple[int, np.ndarray]]:
    """(degree, coordinate vector) for a homogeneous basis of M / mM."""
    gens = []
    for d in M.degrees():
        n = M.dim_at(d)
        blocks = [M.act(v, d - 1) for v in range(M.nvars) if M.dim_at(d - 1)]
        if blocks:
            rad = np.concatenate(blocks, axis=1)
            _, piv = rref(rad.T, M.p)
        else:
            piv = []
        pivset = set(piv)
        for j in range(n):
            if j not in pivset:
                vec = np.zeros(n, dtype=np.int64)
                vec[j] = 1
                gens.append((d, vec))
    return gens


def _predecessors(A: FiniteAlgebra) -> Dict[int, List[Tuple[int, int]]]:
    """For each basis monomial a of A (by degree), (v, index of a / x_v) or (-1, -1) for 1."""
    out: Dict[int, List[Tuple[int, int]]] = {}
    for d in A.degrees():
        pos_prev = {e: k for k, (_, e) in enumerate(A.labels.get(d - 1, []))}
        row = []
        for _, e in A.labels[d]:
            if sum(e) == 0:
                row.append((-1, -1))
                continue
            v = next(i for i, x in enumerate(e) if x)
            prev = tuple(x - (i == v) for i, x in enumerate(e))
            row.append((v, pos_prev[prev]))
        out[d] = row
    return out


def syzygy(A: FiniteAlgebra, M: FiniteModule) -> Tuple[int, FiniteModule]:
    """(mu(M), first syzygy module of M) from a minimal cover A^mu -> M."""
    p = M.p
    gens = minimal_generators(M)
    pred = _predecessors(A)
    a_degs = A.degrees()
    # F_d = sum over generators g of A_{d - deg g}; track (generator, A-index) per slot.
    fdeg_slots: Dict[int, List[Tuple[int, int]]] = {}
    for g, (s, _) in enumerate(gens):
        for ad in a_degs:
            for k in range(A.dim_at(ad)):
                fdeg_slots.setdefault(s + ad, []).append((g, k))
    # phi on each slot: image of a * g in M, built from a' * g via a = x_v a'.
    images: Dict[Tuple[int, int, int], np.ndarray] = {}
    phi: Dict[int, np.ndarray] = {}
    for d in sorted(fdeg_slots):
        cols = []
        for g, k in fdeg_slots[d]:
            s, vec = gens[g]
            ad = d - s
            v, prev = pred[ad][k]
            img = vec if v < 0 else M.act(v, d - 1) @ images[(g, ad - 1, prev)] % p
            images[(g, ad, k)] = img
            cols.append(img)
        phi[d] = np.stack(cols, axis=1) if M.dim_at(d) else np.zeros((0, len(cols)), dtype=np.int64)

    kernels: Dict[int, Tuple[np.ndarray, List[int]]] = {}
    for d, m in phi.items():
        basis, free = nullspace(m, p)
        if basis.shape[1]:
            kernels[d] = (basis, free)
    dims = {d: b.shape[1] for d, (b, _) in kernels.items()}
    if sum(dims.values()) > MAX_TOTAL_DIM:
        raise ResourceLimitError("syzygy exceeds %d dimensions" % MAX_TOTAL_DIM)
    actions: List[Dict[int, np.ndarray]] = [dict() for _ in range(A.nvars)]
    for d, (basis, _) in kernels.items():
        if d + 1 not in kernels:
            continue
        _, free_next = kernels[d + 1]
        slots_next = {sl: j for j, sl in enumerate(fdeg_slots[d + 1])}
        for v in range(A.nvars):
            # x_v on F: slot (g, k) in degree d goes to x_v * a_k in A, re-expanded in slots.
            out = np.zeros((len(fdeg_slots[d + 1]), basis.shape[1]), dtype=np.int64)
            for j, (g, k) in enumerate(fdeg_slots[d]):
                s = gens[g][0]
                col = A.act(v, d - s)[:, k]
                for kk in np.flatnonzero(col):
                    out[slots_next[(g, int(kk))]] += col[kk] * basis[j] % p
            out %= p
            actions[v][d] = out[free_next, :]
    return len(gens), FiniteModule(A.nvars, p, dims, actions)


def fd_betti(A: FiniteAlgebra, M: FiniteModule, n_max: int) -> List[int]:
    """beta_0..beta_{n_max} of M over A."""
    out = []
    cur = M
    for _ in range(n_max + 1):
        if cur.length == 0:
            out.append(0)
            continue
        b, cur = syzygy(A, cur)
        out.append(b)
    return out


def fd_dual(M: FiniteModule) -> FiniteModule:
    """Graded k-dual: degree -d holds M_d^*, x_v acts by the transpose."""
    dims = {-d: n for d, n in M.dims.items()}
    actions: List[Dict[int, np.ndarray]] = [dict() for _ in range(M.nvars)]
    for v in range(M.nvars):
        for d, m in M.actions[v].items():
            actions[v][-d - 1] = m.T.copy()
    return FiniteModule(M.nvars, M.p, dims, actions)


def fd_bass(A: FiniteAlgebra, M: FiniteModule, n_max: int) -> List[int]:
    return fd_betti(A, fd_dual(M), n_max)


def socle_dimension(M: FiniteModule) -> int:
    """dim_k of {m : x_v m = 0 for all v}."""
    total = 0
    for d in M.degrees():
        stacked = [M.act(v, d) for v in range(M.nvars) if M.dim_at(d + 1)]
        if not stacked:
            total += M.dim_at(d)
        else:
            total += M.dim_at(d) - rank(np.concatenate(stacked, axis=0), M.p)
    return total


@dataclass(frozen=True)
class AgreeReport:
    agree: bool
    length: Tuple[Optional[int], int]
    betti: Tuple[List[int], List[int]]
    bass: Tuple[List[int], List[int]]
    discrepancy: Optional[str] = None


def agree_check(M, n_max: int) -> AgreeReport:
    """Compare lambda, beta_n and mu^n between the graded engine and the oracle."""
    from .graded.homology import bass_number
    from .graded.resolution import resolution

    if M.is_zero():
        return AgreeReport(True, (0, 0), ([], []), ([], []))
    if M.length is None:
        raise NotFiniteLengthError("agreement check needs a finite-length module")
    if M.ring.dim > 0:
        raise NotFiniteLengthError("the oracle needs an Artinian ring")
    A = flatten_ring(M.ring)
    F = flatten(M)
    g_betti = resolution(M).betti_numbers(n_max)
    g_bass = [bass_number(M, n) for n in range(n_max + 1)]
    o_betti = fd_betti(A, F, n_max)
    o_bass = fd_bass(A, F, n_max)
    problem = None
    if M.length != F.length:
        problem = "length: graded %s, oracle %d" % (M.length, F.length)
    else:
        for name, g, o in (("beta", g_betti, o_betti), ("mu", g_bass, o_bass)):
            bad = [n for n in range(n_max + 1) if g[n] != o[n]]
            if bad:
                n = bad[0]
                problem = "%s_%d: graded %d, oracle %d" % (name, n, g[n], o[n])
                break
    return AgreeReport(problem is None, (M.length, F.length), (g_betti, o_betti), (g_bass, o_bass), problem)

