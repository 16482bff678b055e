"""Matlis duality for finite-length modules, the canonical module and M^dagger."""

from __future__ import annotations

from typing import Dict, List, Tuple

from ..errors import NotCohenMacaulayError, NotFiniteLengthError
from ..algebra.polyring import FreeModule
from .homology import depth, ext
from .module import Module


def k_basis(M: Module) -> List[int]:
    """Standard terms of a finite-length M, ordered by degree then component."""
    if M.length is None:
        raise NotFiniteLengthError("module does not have finite length")
    eng = M.engine()
    codec = M.ring.S.codec
    free = M.free
    basis = []
    for comp in range(M.rank):
        off = codec.offset(comp)
        start = off + codec.one
        if eng._reducer(start) is not None:
            continue
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for t in frontier:
                for v in range(M.ring.nvars):
                    u = t + codec.var(v) - codec.one
                    if u not in seen and eng._reducer(u) is None:
                        seen.add(u)
                        nxt.append(u)
            frontier = nxt
        basis.extend(seen)
    basis.sort(key=lambda t: (free.term_degree(t), codec.comp(t), -t))
    return basis


def action_matrices(M: Module) -> Tuple[List[int], List[Dict[Tuple[int, int], int]]]:
    """k-basis and, per variable, the sparse matrix  {(row, col): coeff}  of multiplication."""
    basis = k_basis(M)
    index = {t: i for i, t in enumerate(basis)}
    codec = M.ring.S.codec
    eng = M.engine()
    mats = []
    for v in range(M.ring.nvars):
        shift = codec.var(v) - codec.one
        mat = {}
        for j, t in enumerate(basis):
            for u, c in eng.reduce({t + shift: 1}).items():
                mat[(index[u], j)] = c
        mats.append(mat)
    return basis, mats


def matlis_dual(M: Module) -> Module:
    """Graded k-dual Hom_k(M, k) with the contragredient action, minimally presented."""
    key = "matlis_dual"
    if key in M.cache:
        return M.cache[key]
    basis, mats = action_matrices(M)
    S = M.ring.S
    p = S.p
    codec = S.codec
    twists = [-M.free.term_degree(t) for t in basis]
    rels = []
    # x * b_i^* = sum_j A[i, j] b_j^*  where A[i, j] = coefficient of b_i in x * b_j.
    for v, mat in enumerate(mats):
        rows: Dict[int, Dict[int, int]] = {}
        for (i, j), c in mat.items():
            rows.setdefault(i, {})[j] = c
        for i in range(len(basis)):
            vec = {codec.offset(i) + codec.var(v): 1}
            for j, c in rows.get(i, {}).items():
                key_j = codec.offset(j) + codec.one
                vec[key_j] = (vec.get(key_j, 0) - c) % p
            rels.append({k: c for k, c in vec.items() if c})
    dual = Module(M.ring, twists, rels, name=(M.name + "^v") if M.name else None).minimal()
    M.cache[key] = dual
    return dual


def is_cohen_macaulay(M: Module) -> bool:
    return depth(M) == M.dim


def canonical_module(ring) -> Module:
    """omega_R = Ext^{n-d}_S(R, S(-n)), requires R Cohen-Macaulay."""
    if ring._canonical is not None:
        return ring._canonical
    R_mod = ring.as_module()
    if not is_cohen_macaulay(R_mod):
        raise NotCohenMacaulayError("the ring is not Cohen-Macaulay")
    P = ring.polynomial_ring()
    n = ring.nvars
    F = FreeModule(P.S, [0])
    over_S = Module(P, [0], [F.vector([f]) for f in ring.ideal])
    target = Module(P, [n], [])
    E = ext(over_S, target, n - ring.dim).presentation()
    omega = Module(ring, E.twists, E.relations, name="omega").minimal()
    ring._canonical = omega
    return omega


def dagger(M: Module) -> Module:
    """M^dagger = Ext^{d-r}_R(M, omega) with d = dim R and r = dim M."""
    key = "dagger"
    if key not in M.cache:
        ring = M.ring
        omega = canonical_module(ring)
        shift = ring.dim - M.dim
        E = ext(M, omega, shift).presentation(name=(M.name + "+") if M.name else None)
        M.cache[key] = E.minimal()
    return M.cache[key]
