"""Exhaustive enumeration of small multiplicative lattices.

Two stages: generate all bounded lattice orders on ``n`` unlabeled
elements (one per isomorphism class), then for each order generate all
multiplication tables satisfying the axioms, up to order-automorphism.
Isomorphism classes are identified by a canonical byte form minimized
over relabelings that fix the bottom and the top (an order isomorphism
always maps bounds to bounds, so nothing is lost).

The multiplication search only branches on products of proper
join-irreducible elements: the remaining entries are forced by join
distributivity and propagated, and every completed table is checked
against the full axiom set before being emitted.  Hence every emitted
lattice validates cleanly.

The per-order searches are independent, so the work may be partitioned
across worker processes; results are merged in a fixed sorted order and
are byte-identical for any worker count.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional

from .core import (
    Elt,
    FiniteMultLattice,
    LatticeError,
    default_labels,
    multiplication_violations,
    order_tables,
)
from .factorize import ClassificationReport, classify_lattice

__all__ = [
    "DEFAULT_SIZE_CAP",
    "HARD_SIZE_CAP",
    "SizeCapExceeded",
    "UnknownPredicate",
    "OrderTable",
    "SearchQuery",
    "enumerate_bounded_lattices",
    "enumerate_multiplications",
    "enumerated_universe",
    "canonical_form",
    "search",
    "PREDICATES",
    "quotient_hypothesis_holds",
]

DEFAULT_SIZE_CAP = 6
HARD_SIZE_CAP = 7


class SizeCapExceeded(LatticeError):
    """Requested size is above the configured cap."""


class UnknownPredicate(LatticeError):
    """The search predicate name or expression is not recognized."""


@dataclass(frozen=True)
class OrderTable:
    """A bounded lattice order in canonical labeling (bottom 0, top n-1)."""

    name: str
    n: int
    up: tuple[int, ...]
    join: tuple[tuple[int, ...], ...]
    meet: tuple[tuple[int, ...], ...]
    bottom: int
    top: int

    def leq(self, x: Elt, y: Elt) -> bool:
        return bool(self.up[x] >> y & 1)


def _check_cap(n: int, size_cap: int) -> None:
    if n < 1:
        raise ValueError("size must be at least 1")
    if n > min(size_cap, HARD_SIZE_CAP):
        raise SizeCapExceeded(
            f"size {n} exceeds the cap {min(size_cap, HARD_SIZE_CAP)}"
        )


def _encode_leq(up: tuple[int, ...], n: int) -> bytes:
    return bytes(up[i] >> j & 1 for i in range(n) for j in range(n))


def _encode_mul(mul: tuple[tuple[int, ...], ...], n: int) -> bytes:
    return bytes(mul[i][j] for i in range(n) for j in range(n))


def _middle_perms(n: int) -> list[tuple[int, ...]]:
    """All relabelings of 1..n-2 (as full permutations fixing 0 and n-1)."""
    if n <= 2:
        return [tuple(range(n))]
    return [
        (0,) + mid + (n - 1,) for mid in itertools.permutations(range(1, n - 1))
    ]


def _permute_up(up: tuple[int, ...], perm: tuple[int, ...], n: int) -> tuple[int, ...]:
    out = [0] * n
    for i in range(n):
        m = 0
        row = up[i]
        for j in range(n):
            if row >> j & 1:
                m |= 1 << perm[j]
        out[perm[i]] = m
    return tuple(out)


def _permute_mul(
    mul: tuple[tuple[int, ...], ...], perm: tuple[int, ...], n: int
) -> tuple[tuple[int, ...], ...]:
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            out[perm[i]][perm[j]] = perm[mul[i][j]]
    return tuple(map(tuple, out))


def canonical_form(L: FiniteMultLattice) -> bytes:
    """Canonical byte encoding of a multiplicative lattice.

    Two lattices get the same form exactly when some bijection preserves
    both the order and the product.  The form is the minimum, over all
    relabelings sending the bottom to 0 and the top to n-1, of the
    concatenated order and product tables.
    """
    n = L.n
    mids = [i for i in range(n) if i not in (L.bottom, L.top)]
    best: Optional[bytes] = None
    for target in itertools.permutations(range(1, n - 1)) if n > 2 else [()]:
        perm = [0] * n
        perm[L.bottom] = 0
        perm[L.top] = n - 1
        for src, dst in zip(mids, target):
            perm[src] = dst
        pt = tuple(perm)
        up = _permute_up(L._up, pt, n)
        mul = _permute_mul(L._mul, pt, n)
        cand = bytes([n]) + _encode_leq(up, n) + _encode_mul(mul, n)
        if best is None or cand < best:
            best = cand
    assert best is not None
    return best


# -- stage one: bounded lattice orders --------------------------------------


def enumerate_bounded_lattices(
    n: int, *, size_cap: int = DEFAULT_SIZE_CAP
) -> list[OrderTable]:
    """All bounded lattice orders on ``n`` elements, one per isomorphism class.

    Elements are produced in a canonical labeling with bottom 0 and top
    n-1, in a deterministic order.  Raises :class:`SizeCapExceeded`
    above the cap.
    """
    _check_cap(n, size_cap)
    if n == 1:
        return [
            OrderTable(
                name="U1_0", n=1, up=(1,), join=((0,),), meet=((0,),), bottom=0, top=0
            )
        ]

    found: dict[bytes, tuple[int, ...]] = {}
    dmask = [1]  # dmask[i]: elements <= i, including i

    def place(k: int) -> None:
        if k == n:
            up = tuple(
                sum(1 << j for j in range(n) if dmask[j] >> i & 1) for i in range(n)
            )
            join, meet, missing = order_tables(up, n)
            if missing is not None:
                return
            canon = min(
                _encode_leq(_permute_up(up, p, n), n) for p in _middle_perms(n)
            )
            if canon not in found:
                # store the relabeled representative achieving the minimum
                rep = min(
                    (_permute_up(up, p, n) for p in _middle_perms(n)),
                    key=lambda u: _encode_leq(u, n),
                )
                found[canon] = rep
            return
        if k == n - 1:
            choices = [(1 << k) - 1]  # top lies above everything
        else:
            base = (1 << k) - 2  # bits 1..k-1 are optional, bit 0 mandatory
            choices = []
            sub = base
            while True:
                d = sub | 1
                if all(not d >> i & 1 or dmask[i] | d == d for i in range(1, k)):
                    choices.append(d)
                if sub == 0:
                    break
                sub = (sub - 1) & base
        for d in choices:
            dmask.append(d | 1 << k)
            place(k + 1)
            dmask.pop()

    place(1)
    orders = []
    for idx, canon in enumerate(sorted(found)):
        up = found[canon]
        join, meet, missing = order_tables(up, n)
        assert missing is None
        orders.append(
            OrderTable(
                name=f"U{n}_{idx}",
                n=n,
                up=up,
                join=join,
                meet=meet,
                bottom=0,
                top=n - 1,
            )
        )
    return orders


def order_automorphisms(order: OrderTable) -> list[tuple[int, ...]]:
    """All relabelings of the order onto itself (they fix bottom and top)."""
    return [
        p
        for p in _middle_perms(order.n)
        if _permute_up(order.up, p, order.n) == order.up
    ]


# -- stage two: multiplication tables ---------------------------------------


def _lower_covers(order: OrderTable, x: int) -> list[int]:
    down_x = [i for i in range(order.n) if order.leq(i, x) and i != x]
    return [
        i
        for i in down_x
        if not any(j != i and order.leq(i, j) for j in down_x)
    ]


def _mult_tables(order: OrderTable) -> list[tuple[tuple[int, ...], ...]]:
    """All axiom-satisfying multiplication tables on the order (raw search).

    Branches only on products of proper join-irreducible pairs; the
    rest is forced by distributivity and propagated.  Completed tables
    are checked against the full axiom set.  Returns tables before
    automorphism dedup, in deterministic order.
    """
    n, B, T = order.n, order.bottom, order.top
    if n == 1 or B == T:
        return []  # a one-element structure collapses bottom and top
    join, meet = order.join, order.meet
    up = order.up
    mids = [i for i in range(n) if i not in (B, T)]

    jirr = [x for x in mids if len(_lower_covers(order, x)) == 1]
    dec: dict[int, tuple[int, int]] = {}
    for x in mids:
        if x not in jirr:
            covers = _lower_covers(order, x)
            dec[x] = (covers[0], covers[1])  # any two distinct covers join to x

    table: list[list[Optional[int]]] = [[None] * n for _ in range(n)]
    for x in range(n):
        table[x][B] = table[B][x] = B
        table[x][T] = table[T][x] = x

    free = [(p, q) for p, q in itertools.combinations_with_replacement(jirr, 2)]
    free.sort(key=lambda pq: (bin(_down_mask(up, meet[pq[0]][pq[1]], n)).count("1"), pq))
    domains = {
        (p, q): [v for v in range(n) if order.leq(v, meet[p][q])] for p, q in free
    }

    assigned: list[tuple[int, int]] = []  # trail for undo, (x, y) with x <= y

    def set_cell(x: int, y: int, v: int) -> bool:
        if x > y:
            x, y = y, x
        cur = table[x][y]
        if cur is not None:
            return cur == v
        if not order.leq(v, meet[x][y]):
            return False
        # monotonicity against already-known cells
        for a, b in assigned:
            w = table[a][b]
            if (
                (order.leq(a, x) and order.leq(b, y))
                or (order.leq(b, x) and order.leq(a, y))
            ) and not order.leq(w, v):
                return False
            if (
                (order.leq(x, a) and order.leq(y, b))
                or (order.leq(y, a) and order.leq(x, b))
            ) and not order.leq(v, w):
                return False
        table[x][y] = table[y][x] = v
        assigned.append((x, y))
        return True

    def propagate() -> bool:
        changed = True
        while changed:
            changed = False
            for x in mids:
                if x in dec:
                    u, v = dec[x]
                    for y in mids:
                        a, b = table[u][y], table[v][y]
                        if a is None or b is None:
                            continue
                        val = join[a][b]
                        cur = table[min(x, y)][max(x, y)]
                        if cur is None:
                            if not set_cell(x, y, val):
                                return False
                            changed = True
                        elif cur != val:
                            return False
        return True

    results: list[tuple[tuple[int, ...], ...]] = []

    def complete_ok() -> bool:
        rows = [list(r) for r in table]
        assert all(v is not None for r in rows for v in r)
        return not multiplication_violations(
            tuple(map(str, range(n))), join, rows, B, T
        )

    def dfs(i: int) -> None:
        if i == len(free):
            if propagate() and complete_ok():
                results.append(tuple(tuple(r) for r in table))
            return
        p, q = free[i]
        if table[p][q] is not None:  # filled by propagation
            dfs(i + 1)
            return
        mark = len(assigned)
        for v in domains[(p, q)]:
            if set_cell(p, q, v) and propagate():
                dfs(i + 1)
            while len(assigned) > mark:
                a, b = assigned.pop()
                table[a][b] = table[b][a] = None
        return

    dfs(0)
    return results


def _down_mask(up: tuple[int, ...], x: int, n: int) -> int:
    return sum(1 << i for i in range(n) if up[i] >> x & 1)


def enumerate_multiplications(order: OrderTable) -> list[FiniteMultLattice]:
    """All multiplicative lattices on the given order, up to isomorphism.

    Tables related by an automorphism of the order are the same lattice;
    one representative per orbit is returned, in deterministic order,
    each re-validated through the standard construction path.
    """
    n = order.n
    autos = order_automorphisms(order)
    reps: dict[bytes, tuple[tuple[int, ...], ...]] = {}
    for tab in _mult_tables(order):
        images = [_permute_mul(tab, p, n) for p in autos]
        canon_tab = min(images, key=lambda m: _encode_mul(m, n))
        reps.setdefault(_encode_mul(canon_tab, n), canon_tab)
    out = []
    for idx, key in enumerate(sorted(reps)):
        out.append(
            FiniteMultLattice.from_tables(
                order.up,
                reps[key],
                order.bottom,
                order.top,
                labels=default_labels(n, order.bottom, order.top),
                name=f"{order.name}_{idx}",
            )
        )
    return out


# -- the universe and searches ----------------------------------------------

_UNIVERSE_CACHE: dict[int, tuple[FiniteMultLattice, ...]] = {}


def _mult_worker(
    args: tuple[str, int, tuple[int, ...]]
) -> list[tuple[tuple[int, ...], ...]]:
    name, n, up = args
    join, meet, missing = order_tables(up, n)
    assert missing is None
    order = OrderTable(
        name=name, n=n, up=up, join=join, meet=meet, bottom=0, top=n - 1
    )
    autos = order_automorphisms(order)
    reps: dict[bytes, tuple[tuple[int, ...], ...]] = {}
    for tab in _mult_tables(order):
        canon_tab = min(
            (_permute_mul(tab, p, n) for p in autos),
            key=lambda m: _encode_mul(m, n),
        )
        reps.setdefault(_encode_mul(canon_tab, n), canon_tab)
    return [reps[k] for k in sorted(reps)]


def _lattices_of_size(n: int, workers: int = 1) -> tuple[FiniteMultLattice, ...]:
    if n in _UNIVERSE_CACHE:
        return _UNIVERSE_CACHE[n]
    orders = enumerate_bounded_lattices(n, size_cap=HARD_SIZE_CAP)
    jobs = [(o.name, o.n, o.up) for o in orders]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            per_order = list(pool.map(_mult_worker, jobs))
    else:
        per_order = [_mult_worker(j) for j in jobs]
    out = []
    for order, tabs in zip(orders, per_order):
        for idx, tab in enumerate(tabs):
            out.append(
                FiniteMultLattice.from_tables(
                    order.up,
                    tab,
                    order.bottom,
                    order.top,
                    labels=default_labels(order.n, order.bottom, order.top),
                    name=f"{order.name}_{idx}",
                )
            )
    _UNIVERSE_CACHE[n] = tuple(out)
    return _UNIVERSE_CACHE[n]


def enumerated_universe(
    size_max: int, *, size_cap: int = DEFAULT_SIZE_CAP, workers: int = 1
) -> tuple[FiniteMultLattice, ...]:
    """Every multiplicative lattice with at most ``size_max`` elements.

    One lattice per isomorphism class, ordered by size then canonical
    form.  Results are cached per size and identical for any worker
    count.
    """
    _check_cap(size_max, size_cap)
    out: list[FiniteMultLattice] = []
    for n in range(1, size_max + 1):
        out.extend(_lattices_of_size(n, workers=workers))
    return tuple(out)


def quotient_hypothesis_holds(
    L: FiniteMultLattice, gens: tuple[Elt, ...]
) -> bool:
    """(a*b : a) below the radical of b, for all nonzero a, b among ``gens``."""
    return all(
        L.leq(L.quotient(L.mul2(a, b), a), L.radical(b))
        for a in gens
        for b in gens
        if a != L.bottom and b != L.bottom
    )


def _thm15_nontrivial(L: FiniteMultLattice, rep: ClassificationReport) -> bool:
    # a domain of size >= 3 admitting a generating set that satisfies the
    # quotient condition; the join-irreducibles are the smallest generating
    # set, so checking them decides existence.
    return (
        rep.is_domain
        and L.n >= 3
        and quotient_hypothesis_holds(L, L.join_irreducibles())
    )


PREDICATES: dict[str, Callable[[FiniteMultLattice, ClassificationReport], bool]] = {
    "cpr_not_cq": lambda L, r: r.is_cpr_lattice and not r.is_cq_lattice,
    "cpr_not_cpp": lambda L, r: r.is_cpr_lattice and not r.is_cpp_lattice,
    "cq_not_cpp": lambda L, r: r.is_cq_lattice and not r.is_cpp_lattice,
    "cpp_not_cq": lambda L, r: r.is_cpp_lattice and not r.is_cq_lattice,
    "not_cpr": lambda L, r: not r.is_cpr_lattice,
    "treed_not_cpr": lambda L, r: r.is_treed and not r.is_cpr_lattice,
    "cq_dim_ge_2": lambda L, r: r.is_cq_lattice and r.dimension >= 2,
    "dedekind": lambda L, r: r.is_dedekind,
    "thm15_hypothesis_nontrivial": _thm15_nontrivial,
}

_FLAG_ATOMS: dict[str, Callable[[FiniteMultLattice, ClassificationReport], bool]] = {
    "cpr": lambda L, r: r.is_cpr_lattice,
    "cq": lambda L, r: r.is_cq_lattice,
    "cpp": lambda L, r: r.is_cpp_lattice,
    "treed": lambda L, r: r.is_treed,
    "domain": lambda L, r: r.is_domain,
    "dedekind": lambda L, r: r.is_dedekind,
    "thm15": _thm15_nontrivial,
}


def _compile_predicate(
    name: str,
) -> Callable[[FiniteMultLattice, ClassificationReport], bool]:
    """Look up a named predicate or compile a conjunction expression.

    ``<flag>_not_<flag>`` separations work for any pair of flags.
    General expressions join atoms with ``&``; an atom is a flag name
    (optionally negated with ``!``), ``dim=K`` or ``dim>=K``, e.g.
    ``cpr&!cq&!cpp``.
    """
    if name in PREDICATES:
        return PREDICATES[name]
    if "_not_" in name:
        has, lacks = name.split("_not_", 1)
        if has in _FLAG_ATOMS and lacks in _FLAG_ATOMS:
            f, g = _FLAG_ATOMS[has], _FLAG_ATOMS[lacks]
            return lambda L, r: f(L, r) and not g(L, r)
    conj: list[Callable[[FiniteMultLattice, ClassificationReport], bool]] = []
    for raw in name.split("&"):
        atom = raw.strip()
        negate = atom.startswith("!")
        if negate:
            atom = atom[1:]
        if atom.startswith("dim>="):
            k = int(atom[5:])
            fn: Callable = lambda L, r, k=k: r.dimension >= k
        elif atom.startswith("dim="):
            k = int(atom[4:])
            fn = lambda L, r, k=k: r.dimension == k
        elif atom in _FLAG_ATOMS:
            fn = _FLAG_ATOMS[atom]
        else:
            raise UnknownPredicate(f"unknown predicate {name!r} (atom {atom!r})")
        conj.append((lambda f: (lambda L, r: not f(L, r)))(fn) if negate else fn)
    return lambda L, r: all(f(L, r) for f in conj)


@dataclass(frozen=True)
class SearchQuery:
    """A scan of the enumerated universe for lattices matching a predicate."""

    size_max: int
    predicate: str
    limit: Optional[int] = None
    allow_size_7: bool = False


def search(
    query: SearchQuery, *, workers: int = 1
) -> list[tuple[FiniteMultLattice, ClassificationReport]]:
    """Matching lattices with their classification reports, deterministic order."""
    cap = HARD_SIZE_CAP if query.allow_size_7 else DEFAULT_SIZE_CAP
    pred = _compile_predicate(query.predicate)
    out = []
    for L in enumerated_universe(query.size_max, size_cap=cap, workers=workers):
        rep = classify_lattice(L)
        if pred(L, rep):
            out.append((L, rep))
            if query.limit is not None and len(out) >= query.limit:
                break
    return out
