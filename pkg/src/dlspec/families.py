"""Named graph families, built from the disjoint-union structure of their complements.

Every theorem family is stored as the list of components of its complement;
``instantiate`` returns the complement of their disjoint union. Vertices are
numbered component by component in the listed order.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .canonical import MAX_CANONICAL_ORDER, canonical_form
from .graph import (
    Graph,
    complement,
    complete_bipartite,
    complete_graph,
    complete_minus_edge,
    cycle_graph,
    disjoint_union,
    kite_graph,
    path_graph,
    star_graph,
)


class FamilyConstraintError(ValueError):
    """A family was requested at parameters where it does not exist."""


@dataclass(frozen=True)
class FamilySpec:
    family_id: str
    order: Optional[int] = None
    parts: Optional[tuple[int, ...]] = None
    alpha: Optional[int] = None
    omega: Optional[int] = None

    @property
    def n(self) -> int:
        if self.order is not None:
            return self.order
        if self.parts is not None:
            return sum(self.parts)
        raise FamilyConstraintError(f"{self.family_id}: order not given")

    def label(self) -> str:
        extra = []
        if self.parts is not None:
            extra.append("parts=" + ",".join(map(str, self.parts)))
        if self.alpha is not None:
            extra.append(f"alpha={self.alpha}")
        if self.omega is not None:
            extra.append(f"omega={self.omega}")
        return f"{self.family_id}(n={self.n}{'; ' + '; '.join(extra) if extra else ''})"


def _require(cond: bool, fid: str, message: str):
    if not cond:
        raise FamilyConstraintError(f"{fid} requires {message}")


# Each builder returns the complement components of the family at order n.

def _multipartite(spec):
    parts = spec.parts
    _require(parts is not None, "F1", "part sizes")
    _require(len(parts) >= 2, "F1", "at least 2 parts")
    _require(all(t >= 1 for t in parts), "F1", "positive part sizes")
    if spec.order is not None:
        _require(sum(parts) == spec.order, "F1", "part sizes summing to n")
    return [complete_graph(t) for t in parts]


def _split(spec):
    n, a = spec.n, spec.alpha
    _require(a is not None, "F2", "alpha")
    _require(1 <= a <= n - 1, "F2", "1 <= alpha <= n - 1")
    return [complete_graph(a)] + [complete_graph(1)] * (n - a)


def _f3(spec):
    n = spec.n
    _require(n >= 4, "F3", "n >= 4")
    return [complete_graph(n - 3)] + [complete_graph(1)] * 3


def _f4(spec):
    n = spec.n
    _require(n >= 5, "F4", "n >= 5")
    return [complete_minus_edge(n - 2), complete_graph(1), complete_graph(1)]


def _f5(spec):
    n = spec.n
    _require(n >= 4, "F5", "n >= 4")
    return [complete_graph(n - 3), complete_graph(2), complete_graph(1)]


def _f6(spec):
    n = spec.n
    _require(n % 2 == 1, "F6", "n odd")
    p = (n - 1) // 2
    _require(p >= 3, "F6", "p = (n - 1)/2 >= 3")
    return [complete_graph(p), complete_minus_edge(p), complete_graph(1)]


def _f7(spec):
    n = spec.n
    _require(n % 2 == 0, "F7", "n even")
    p = (n - 2) // 2
    _require(p >= 3, "F7", "p = (n - 2)/2 >= 3")
    return [complete_graph(p), complete_graph(p), complete_graph(2)]


def _f8(spec):
    n = spec.n
    _require(n % 3 == 0, "F8", "3 | n")
    p = n // 3
    _require(p >= 3, "F8", "p = n/3 >= 3")
    return [complete_graph(p), complete_graph(p), complete_minus_edge(p)]


def _f9(spec):
    n = spec.n
    _require(n >= 5, "F9", "n >= 5")
    return [star_graph(n - 2), complete_graph(1), complete_graph(1)]


def _f10(spec):
    n = spec.n
    _require(n % 2 == 0, "F10", "n even")
    m = (n - 2) // 2
    _require(m >= 1, "F10", "n >= 4")
    return [complete_bipartite(m, m), complete_graph(1), complete_graph(1)]


def _f11(spec):
    n = spec.n
    _require(n % 4 == 0, "F11", "4 | n")
    q = n // 4
    _require(q >= 1, "F11", "n >= 4")
    return [complete_bipartite(q, q), complete_graph(q), complete_graph(q)]


def _f12(spec):
    _require(spec.n == 7, "F12", "n = 7")
    # complement of S_3 v (K_2 u K_2) = C_4 u K_2 u K_1
    return [cycle_graph(4), complete_graph(2), complete_graph(1)]


def _f13(spec):
    n = spec.n
    _require(n >= 5, "F13", "n >= 5")
    return [complete_minus_edge(4)] + [complete_graph(1)] * (n - 4)


def _f14(spec):
    n = spec.n
    _require(n >= 5, "F14", "n >= 5")
    return [complete_graph(3), complete_graph(2)] + [complete_graph(1)] * (n - 5)


def _co_four(fid, core):
    def build(spec):
        n = spec.n
        _require(n >= 5, fid, "n >= 5")
        return [core()] + [complete_graph(1)] * (n - 4)
    return build


def _f19(spec):
    n = spec.n
    _require(n >= 5, "F19", "n >= 5")
    return [star_graph(3), complete_graph(2)] + [complete_graph(1)] * (n - 5)


def _f20(spec):
    n = spec.n
    _require(n >= 5, "F20", "n >= 5")
    return [complete_graph(4)] + [complete_graph(1)] * (n - 4)


def _f21(spec):
    n = spec.n
    _require(n >= 6, "F21", "n >= 6")
    return [complete_graph(2)] * 3 + [complete_graph(1)] * (n - 6)


@dataclass(frozen=True)
class Family:
    family_id: str
    description: str
    complement_structure: Optional[Callable] = None
    direct: Optional[Callable] = None


def _prim(fid, fn, minimum, message):
    def build(spec):
        _require(spec.n >= minimum, fid, message)
        return fn(spec)
    return build


FAMILIES: dict[str, Family] = {}


def _register(fam: Family):
    FAMILIES[fam.family_id] = fam


_register(Family("F1:K_multipartite", "complete multipartite K_{t1,...,tk}", _multipartite))
_register(Family("F2:SK_split", "complete split graph SK_{n,alpha}", _split))
_register(Family("F3:SK_n_n-3", "SK_{n,n-3}", _f3))
_register(Family("F4:SK_n_n-2_plus_e", "SK_{n,n-2}+e", _f4))
_register(Family("F5:K_n-3_2_1", "K_{n-3,2,1}", _f5))
_register(Family("F6:K_pp1_plus_e", "K_{p,p,1}+e, p=(n-1)/2", _f6))
_register(Family("F7:K_pp2", "K_{p,p,2}, p=(n-2)/2", _f7))
_register(Family("F8:K_ppp_plus_e", "K_{p,p,p}+e, p=n/3", _f8))
_register(Family("F9:K_n-1_K1_plus_2e", "(K_{n-1} u K_1)+2e", _f9))
_register(Family("F10:K2_join_2K_half", "K_2 v (K_{(n-2)/2} u K_{(n-2)/2})", _f10))
_register(Family("F11:K_qq_join_2K_q", "K_{n/4,n/4} v (K_{n/4} u K_{n/4})", _f11))
_register(Family("F12:S3_join_2K2", "S_3 v (K_2 u K_2), n=7", _f12))
_register(Family("F13:SK_n4_plus_e", "SK_{n,4}+e", _f13))
_register(Family("F14:K_3_2_1s", "K_{3,2,1,...,1}", _f14))
_register(Family("F15:co_S4", "complement of S_4 u (n-4)K_1", _co_four("F15", lambda: star_graph(4))))
_register(Family("F16:co_C4", "complement of C_4 u (n-4)K_1", _co_four("F16", lambda: cycle_graph(4))))
_register(Family("F17:co_P4", "complement of P_4 u (n-4)K_1", _co_four("F17", lambda: path_graph(4))))
_register(Family("F18:co_Ki43", "complement of Ki_{4,3} u (n-4)K_1", _co_four("F18", lambda: kite_graph(4, 3))))
_register(Family("F19:co_S3_K2", "complement of S_3 u K_2 u (n-5)K_1", _f19))
_register(Family("F20:SK_n4", "K_{4,1,...,1} = SK_{n,4}", _f20))
_register(Family("F21:K_2_2_2_1s", "K_{2,2,2,1,...,1}", _f21))
_register(Family("K_n", "complete graph", direct=_prim("K_n", lambda s: complete_graph(s.n), 1, "n >= 1")))
_register(Family("P_n", "path", direct=_prim("P_n", lambda s: path_graph(s.n), 1, "n >= 1")))
_register(Family("C_n", "cycle", direct=_prim("C_n", lambda s: cycle_graph(s.n), 3, "n >= 3")))
_register(Family("S_n", "star", direct=_prim("S_n", lambda s: star_graph(s.n), 2, "n >= 2")))
_register(Family("K_n-e", "complete graph minus an edge",
                 direct=_prim("K_n-e", lambda s: complete_minus_edge(s.n), 3, "n >= 3")))


def _kite(spec):
    _require(spec.omega is not None, "Ki", "omega")
    _require(2 <= spec.omega <= spec.n, "Ki", "2 <= omega <= n")
    return kite_graph(spec.n, spec.omega)


_register(Family("Ki", "kite Ki_{n,omega}", direct=_kite))


def lookup(family_id: str) -> Family:
    if family_id in FAMILIES:
        return FAMILIES[family_id]
    short = family_id.split(":")[0]
    for key, fam in FAMILIES.items():
        if key.split(":")[0] == short:
            return fam
    raise KeyError(f"unknown family id {family_id!r}")


def complement_structure(spec: FamilySpec) -> list[Graph]:
    fam = lookup(spec.family_id)
    if fam.complement_structure is None:
        raise ValueError(f"{fam.family_id} has no defining complement structure")
    return fam.complement_structure(spec)


def instantiate(spec: FamilySpec) -> Graph:
    fam = lookup(spec.family_id)
    if fam.direct is not None:
        return fam.direct(spec)
    return complement(disjoint_union(complement_structure(spec)))


def make_spec(family_id: str, n: Optional[int] = None, **params) -> FamilySpec:
    fam = lookup(family_id)
    if "parts" in params and params["parts"] is not None:
        params["parts"] = tuple(params["parts"])
    return FamilySpec(fam.family_id, n, **params)


# -- isomorphism ---------------------------------------------------------

def _laplacian_eigenvalues(g: Graph) -> np.ndarray:
    from .spectra import jacobi_eigenvalues, laplacian

    return jacobi_eigenvalues(laplacian(g))


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.order != g2.order or g1.size != g2.size:
        return False
    if sorted(g1.degrees) != sorted(g2.degrees):
        return False
    if g1.order > MAX_CANONICAL_ORDER or g2.order > MAX_CANONICAL_ORDER:
        raise ValueError(f"isomorphism testing supports order <= {MAX_CANONICAL_ORDER}")
    if np.max(np.abs(_laplacian_eigenvalues(g1) - _laplacian_eigenvalues(g2))) > 1e-6:
        return False
    return canonical_form(g1) == canonical_form(g2)
