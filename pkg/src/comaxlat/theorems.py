"""Executable checkers for the structure theory of comaximal factorization.

Each entry evaluates one statement on a concrete finite lattice: the
hypotheses are tested literally, and only when they hold is the
conclusion evaluated (entries with failed hypotheses report
not-applicable, never failure).  On a validated lattice every entry
must pass; a failing entry indicates an implementation bug, not new
mathematics, and the offending tuple is reported as a witness.

Several statements are parameterized by a generating set ``G``; the
suite accepts ``"all"`` (the whole lattice), ``"principal"`` (the
principal elements) or an explicit element tuple.  Biconditional
conclusions are evaluated with independent code paths on the two sides
(e.g. constructive factorization on one side, brute-force subset scans
on the other).

Entries are independent and read immutable state only, so they can be
evaluated concurrently; the report lists them in the fixed order of
``THEOREM_IDS``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence, Union

from .core import Elt, FiniteMultLattice, LatticeError
from .factorize import (
    FactorKind,
    NoFactorization,
    classify_lattice,
    factor,
    oracle_factorizations,
    refine_by_radical,
)

__all__ = [
    "THEOREM_IDS",
    "Generators",
    "TheoremEntry",
    "TheoremReport",
    "UnknownTheoremId",
    "run_theorem_suite",
    "check_entry",
]

THEOREM_IDS = (
    "lemma_comaximal",
    "lemma_formulas",
    "thm_unique_lift",
    "thm_cpr_criterion",
    "cor_closure",
    "thm_treed_from_generators",
    "cor_compact_equivalences",
    "thm_cpr_sufficiency",
    "thm_cq_characterization",
    "cor_cq_dimension",
    "lemma_cq_sufficient",
    "thm_cq_generators",
    "lemma_prime_principal",
    "thm_dedekind",
    "dedekind_dim1",
)

Generators = Union[str, Sequence[Elt]]


class UnknownTheoremId(LatticeError):
    """The requested theorem id is not in THEOREM_IDS."""


@dataclass(frozen=True)
class TheoremEntry:
    """Outcome of one checker.

    ``conclusion_holds`` is None exactly when the hypotheses fail
    (not-applicable).  ``witness`` carries element labels: the tuple
    that breaks a failing conclusion, or the item that breaks a failing
    hypothesis.
    """

    theorem_id: str
    hypotheses_hold: bool
    conclusion_holds: Optional[bool]
    witness: Optional[tuple[str, ...]] = None

    def __post_init__(self) -> None:
        if not self.hypotheses_hold:
            assert self.conclusion_holds is None


@dataclass(frozen=True)
class TheoremReport:
    """All entries for one lattice; passes when no conclusion failed."""

    lattice_name: str
    entries: tuple[TheoremEntry, ...]

    @property
    def overall_pass(self) -> bool:
        return all(e.conclusion_holds is not False for e in self.entries)

    def entry(self, theorem_id: str) -> TheoremEntry:
        for e in self.entries:
            if e.theorem_id == theorem_id:
                return e
        raise UnknownTheoremId(theorem_id)


class _Ctx:
    """Shared per-lattice computations for the checkers."""

    def __init__(self, L: FiniteMultLattice, gens: tuple[Elt, ...]):
        self.L = L
        self.gens = gens

    @cached_property
    def classification(self):
        return classify_lattice(self.L)

    @cached_property
    def profile(self):
        return self.L.lattice_profile()

    @cached_property
    def has_kind(self) -> dict[tuple[Elt, FactorKind], bool]:
        out = {}
        for a in self.L.proper_elements():
            for kind in FactorKind:
                try:
                    factor(self.L, a, kind)
                    out[a, kind] = True
                except NoFactorization:
                    out[a, kind] = False
        return out

    def generates(self, gens: tuple[Elt, ...]) -> bool:
        L = self.L
        return all(
            L.join(g for g in gens if L.leq(g, x)) == x for x in L.elements()
        )

    @cached_property
    def gens_generate(self) -> bool:
        return self.generates(self.gens)


def _resolve_generators(L: FiniteMultLattice, G: Generators) -> tuple[Elt, ...]:
    if isinstance(G, str):
        key = G.lower()
        if key == "all":
            return tuple(L.elements())
        if key == "principal":
            return L.principal_elements()
        raise ValueError(f"unknown generator selector {G!r}")
    gens = tuple(sorted(set(G)))
    for g in gens:
        if not 0 <= g < L.n:
            raise ValueError(f"generator index {g} out of range")
    return gens


# -- individual checkers ------------------------------------------------------
# Each returns (hypotheses_hold, conclusion_holds_or_None, witness_indices).

_Result = tuple[bool, Optional[bool], Optional[tuple[Elt, ...]]]


def _lemma_comaximal(ctx: _Ctx) -> _Result:
    """Comaximality facts.

    (i) comaximal elements satisfy a/\\b = ab and (a:b) = a; (ii) being
    comaximal is invariant under radicals and under powers (some pair of
    powers works iff all do); (iii) an element comaximal to each of
    c1..ck is comaximal to their product (k = 2, 3 exhaustively; larger
    k follows by induction from k = 2).
    """
    L = ctx.L
    for a in L.elements():
        for b in L.elements():
            c1 = L.comaximal(a, b)
            if c1 and (
                L.meet2(a, b) != L.mul2(a, b) or L.quotient(a, b) != a
            ):
                return True, False, (a, b)
            c2 = L.comaximal(L.radical(a), L.radical(b))
            powers = [
                L.comaximal(ai, bj)
                for ai in L.power_chain(a)
                for bj in L.power_chain(b)
            ]
            if not (c1 == c2 == all(powers) == any(powers)):
                return True, False, (a, b)
    for k in (2, 3):
        for a in L.elements():
            for cs in itertools.product(L.elements(), repeat=k):
                if all(L.comaximal(a, c) for c in cs) and not L.comaximal(
                    a, L.mul(cs)
                ):
                    return True, False, (a, *cs)
    return True, True, None


def _lemma_formulas(ctx: _Ctx) -> _Result:
    """Two join formulas.

    (i) meets of increasing sequences commute with the joins, on the
    increasing sequences (b : c^k); (ii) (radical(b) : c) equals the
    radical of the join of the (b : c^k).
    """
    L = ctx.L
    els = range(L.n)
    for b, c in itertools.product(els, repeat=2):
        seq = [L.quotient(b, ck) for ck in L.power_chain(c)]
        rhs = L.radical(L.join(seq))
        if L.quotient(L.radical(b), c) != rhs:
            return True, False, (b, c)
    for b1, c1, b2, c2 in itertools.product(els, repeat=4):
        k1 = [L.quotient(b1, ck) for ck in L.power_chain(c1)]
        k2 = [L.quotient(b2, ck) for ck in L.power_chain(c2)]
        kk = max(len(k1), len(k2))
        s1 = [k1[min(i, len(k1) - 1)] for i in range(kk)]
        s2 = [k2[min(i, len(k2) - 1)] for i in range(kk)]
        lhs = L.meet2(L.join(s1), L.join(s2))
        rhs = L.join(L.meet2(x, y) for x, y in zip(s1, s2))
        if lhs != rhs:
            return True, False, (b1, c1, b2, c2)
    return True, True, None


def _comaximal_subsets(L: FiniteMultLattice) -> list[tuple[Elt, ...]]:
    proper = L.proper_elements()
    out = []
    for size in range(1, len(proper) + 1):
        for sub in itertools.combinations(proper, size):
            if all(L.comaximal(p, q) for p, q in itertools.combinations(sub, 2)):
                out.append(sub)
    return out


def _thm_unique_lift(ctx: _Ctx) -> _Result:
    """Lifting a comaximal decomposition through the radical.

    For pairwise comaximal proper parts with product a, every b with
    the same radical as a is uniquely a product of pairwise comaximal
    parts matching the parts' radicals; uniqueness is confirmed by a
    brute-force scan.  When the product is a radical element, the parts
    are radical too.
    """
    L = ctx.L
    for parts in _comaximal_subsets(L):
        a = L.mul(parts)
        ra = L.radical(a)
        rads = [L.radical(p) for p in parts]
        if a == ra and any(p != r for p, r in zip(parts, rads)):
            return True, False, parts
        for b in L.elements():
            if L.radical(b) != ra:
                continue
            lifted = refine_by_radical(L, b, parts)
            if L.mul(lifted) != b:
                return True, False, (b, *parts)
            if [L.radical(x) for x in lifted] != rads:
                return True, False, (b, *parts)
            if any(
                not L.comaximal(x, y)
                for x, y in itertools.combinations(lifted, 2)
            ):
                return True, False, (b, *parts)
            candidates = [
                [d for d in L.elements() if L.radical(d) == r] for r in rads
            ]
            matches = [
                tup
                for tup in itertools.product(*candidates)
                if L.mul(tup) == b
                and all(
                    L.comaximal(x, y)
                    for x, y in itertools.combinations(tup, 2)
                )
            ]
            if matches != [tuple(lifted)]:
                return True, False, (b, *parts)
    return True, True, None


def _thm_cpr_criterion(ctx: _Ctx) -> _Result:
    """Prime-radical factorization criterion.

    (i) an element has a prime-radical factorization iff its minimal
    primes are pairwise comaximal, and the factorization is unique;
    (ii) all elements factor iff the lattice is treed.  The left-hand
    sides use the brute-force scan, the right-hand sides the spectrum.
    """
    L = ctx.L
    for a in L.proper_elements():
        found = oracle_factorizations(L, a, FactorKind.CPR)
        mins = L.min_primes(a)
        comax = all(
            L.comaximal(p, q) for p, q in itertools.combinations(mins, 2)
        )
        if len(found) > 1 or (len(found) == 1) != comax:
            return True, False, (a,)
        if ctx.has_kind[a, FactorKind.CPR] != comax:
            return True, False, (a,)
    all_factor = all(
        ctx.has_kind[a, FactorKind.CPR] for a in L.proper_elements()
    )
    if all_factor != ctx.profile.is_treed:
        return True, False, None
    return True, True, None


def _cor_closure(ctx: _Ctx) -> _Result:
    """In a treed lattice the factorable elements are closed under
    products, binary meets and binary joins; the minimal primes of the
    combination stay inside the union of the minimal primes."""
    L = ctx.L
    if not ctx.profile.is_treed:
        return False, None, None
    for x, y in itertools.combinations_with_replacement(L.proper_elements(), 2):
        if not (
            ctx.has_kind[x, FactorKind.CPR] and ctx.has_kind[y, FactorKind.CPR]
        ):
            continue
        allowed = set(L.min_primes(x)) | set(L.min_primes(y))
        for combo in (L.mul2(x, y), L.meet2(x, y), L.join2(x, y)):
            if not set(L.min_primes(combo)) <= allowed:
                return True, False, (x, y, combo)
            if combo != L.top and not ctx.has_kind[combo, FactorKind.CPR]:
                return True, False, (x, y, combo)
    return True, True, None


def _thm_treed_from_generators(ctx: _Ctx) -> _Result:
    """If all pairwise products of generators factor with prime radicals,
    the lattice is treed."""
    L = ctx.L
    hyp = ctx.gens_generate and all(
        ctx.has_kind[L.mul2(g1, g2), FactorKind.CPR]
        for g1 in ctx.gens
        for g2 in ctx.gens
        if g1 != L.top and g2 != L.top
    )
    if not hyp:
        return False, None, None
    return True, ctx.profile.is_treed, None


def _cor_compact_equivalences(ctx: _Ctx) -> _Result:
    """Four equivalent ways to say every (compact) element factors.

    In a finite lattice every element is compact and all minimal-prime
    sets are finite, so the four conditions are computed literally and
    compared pairwise.
    """
    L = ctx.L
    if not ctx.gens_generate:
        return False, None, None
    c1 = all(ctx.has_kind[k, FactorKind.CPR] for k in L.proper_elements())
    c2 = all(
        ctx.has_kind[L.mul2(g1, g2), FactorKind.CPR]
        for g1 in ctx.gens
        for g2 in ctx.gens
        if g1 != L.top and g2 != L.top
    )
    c3 = ctx.profile.is_treed and all(
        len(L.min_primes(k)) < L.n + 1 for k in L.elements()
    )
    c4 = ctx.profile.is_treed and all(
        len(L.min_primes(g)) < L.n + 1 for g in ctx.gens
    )
    if c1 == c2 == c3 == c4:
        return True, True, None
    return True, False, None


def _thm_cpr_sufficiency(ctx: _Ctx) -> _Result:
    """A selector-style sufficiency test for being a CPR lattice.

    Hypotheses: (1) every non-minimal prime lies below finitely many
    maximal elements (automatic here, still evaluated); (2) whenever a
    is outside finitely many primes some generator below a is outside
    them too; (3) pairwise products of generators factor.
    """
    L = ctx.L
    if not ctx.gens_generate:
        return False, None, None
    minimal = set(L.min_primes(L.bottom))
    hyp1 = all(
        sum(1 for m in L.max_elements() if L.leq(p, m)) < L.n + 1
        for p in L.spectrum()
        if p not in minimal
    )
    hyp2 = True
    spectrum = L.spectrum()
    for a in L.elements():
        if not hyp2:
            break
        for size in range(1, len(spectrum) + 1):
            if not hyp2:
                break
            for ps in itertools.combinations(spectrum, size):
                if all(not L.leq(a, p) for p in ps):
                    if not any(
                        L.leq(g, a) and all(not L.leq(g, p) for p in ps)
                        for g in ctx.gens
                    ):
                        hyp2 = False
                        break
    hyp3 = all(
        ctx.has_kind[L.mul2(g, h), FactorKind.CPR]
        for g in ctx.gens
        for h in ctx.gens
        if g != L.top and h != L.top
    )
    if not (hyp1 and hyp2 and hyp3):
        return False, None, None
    return True, ctx.classification.is_cpr_lattice, None


def _thm_cq_characterization(ctx: _Ctx) -> _Result:
    """Primary factorizations exist for everything iff prime-radical
    factorizations do and every element with prime radical is primary.
    The left side is a brute-force scan, the right side constructive."""
    L = ctx.L
    lhs = all(
        len(oracle_factorizations(L, a, FactorKind.CQ)) == 1
        for a in L.proper_elements()
    )
    rhs = all(
        ctx.has_kind[a, FactorKind.CPR] for a in L.proper_elements()
    ) and all(
        L.is_primary(a)
        for a in L.proper_elements()
        if L.is_prime(L.radical(a))
    )
    return True, lhs == rhs, None


def _cor_cq_dimension(ctx: _Ctx) -> _Result:
    """For a nondegenerate domain generated by join-principal elements,
    primary factorizations exist for everything iff the dimension is one."""
    L = ctx.L
    jp = L.join_principal_elements()
    hyp = (
        ctx.profile.is_domain
        and L.n > 2
        and ctx.generates(jp)
    )
    if not hyp:
        return False, None, None
    return True, ctx.classification.is_cq_lattice == (L.dimension() == 1), None


def _lemma_cq_sufficient(ctx: _Ctx) -> _Result:
    """A one-dimensional domain has primary factorizations for everything."""
    if not (ctx.profile.is_domain and ctx.L.dimension() == 1):
        return False, None, None
    return True, ctx.classification.is_cq_lattice, None


def _thm_cq_generators(ctx: _Ctx) -> _Result:
    """For a nondegenerate domain whose generators satisfy the quotient
    condition (ab : a) <= radical(b), three statements agree: products of
    generators admit primary factorizations, the dimension is one, and
    everything admits a primary factorization."""
    L = ctx.L
    hyp = (
        ctx.profile.is_domain
        and L.n > 2
        and ctx.gens_generate
        and all(
            L.leq(L.quotient(L.mul2(a, b), a), L.radical(b))
            for a in ctx.gens
            for b in ctx.gens
            if a != L.bottom and b != L.bottom
        )
    )
    if not hyp:
        return False, None, None
    c1 = all(
        ctx.has_kind[L.mul2(a, b), FactorKind.CQ]
        for a in ctx.gens
        for b in ctx.gens
        if a != L.top and b != L.top
    )
    c2 = L.dimension() == 1
    c3 = ctx.classification.is_cq_lattice
    return True, c1 == c2 == c3, None


def _lemma_prime_principal(ctx: _Ctx) -> _Result:
    """A domain generated by principal elements whose primes are all
    principal has every element a finite product of primes."""
    L = ctx.L
    principal = set(L.principal_elements())
    hyp = (
        ctx.profile.is_domain
        and ctx.profile.generated_by_principal
        and all(p in principal for p in L.spectrum())
    )
    if not hyp:
        return False, None, None
    return True, ctx.classification.is_dedekind, None


def _thm_dedekind(ctx: _Ctx) -> _Result:
    """For a domain generated by principal elements: every element is a
    finite product of primes iff every nonzero proper principal element
    has a prime-power factorization.  The two sides use independent
    code paths (spectrum closure vs constructive factorization)."""
    L = ctx.L
    if not (ctx.profile.is_domain and ctx.profile.generated_by_principal):
        return False, None, None
    lhs = ctx.classification.is_dedekind
    rhs = all(
        ctx.has_kind[x, FactorKind.CPP]
        for x in L.principal_elements()
        if x not in (L.bottom, L.top)
    )
    return True, lhs == rhs, None


def _dedekind_dim1(ctx: _Ctx) -> _Result:
    """Everything a product of primes (with the standing hypotheses)
    forces dimension at most one.  A classical fact checked empirically
    rather than assumed."""
    if not ctx.classification.is_dedekind:
        return False, None, None
    return True, ctx.L.dimension() <= 1, None


_CHECKERS = {
    "lemma_comaximal": _lemma_comaximal,
    "lemma_formulas": _lemma_formulas,
    "thm_unique_lift": _thm_unique_lift,
    "thm_cpr_criterion": _thm_cpr_criterion,
    "cor_closure": _cor_closure,
    "thm_treed_from_generators": _thm_treed_from_generators,
    "cor_compact_equivalences": _cor_compact_equivalences,
    "thm_cpr_sufficiency": _thm_cpr_sufficiency,
    "thm_cq_characterization": _thm_cq_characterization,
    "cor_cq_dimension": _cor_cq_dimension,
    "lemma_cq_sufficient": _lemma_cq_sufficient,
    "thm_cq_generators": _thm_cq_generators,
    "lemma_prime_principal": _lemma_prime_principal,
    "thm_dedekind": _thm_dedekind,
    "dedekind_dim1": _dedekind_dim1,
}
assert tuple(_CHECKERS) == THEOREM_IDS


def _run_one(ctx: _Ctx, theorem_id: str) -> TheoremEntry:
    hyp, concl, witness = _CHECKERS[theorem_id](ctx)
    labels = (
        tuple(ctx.L.label(w) for w in witness) if witness is not None else None
    )
    return TheoremEntry(
        theorem_id=theorem_id,
        hypotheses_hold=hyp,
        conclusion_holds=concl,
        witness=labels,
    )


def run_theorem_suite(L: FiniteMultLattice, G: Generators = "all") -> TheoremReport:
    """Evaluate every checker on the lattice with generating set ``G``."""
    ctx = _Ctx(L, _resolve_generators(L, G))
    return TheoremReport(
        lattice_name=L.name,
        entries=tuple(_run_one(ctx, tid) for tid in THEOREM_IDS),
    )


def check_entry(
    L: FiniteMultLattice, theorem_id: str, G: Generators = "all"
) -> TheoremEntry:
    """Evaluate a single checker; raises :class:`UnknownTheoremId`."""
    if theorem_id not in _CHECKERS:
        raise UnknownTheoremId(theorem_id)
    return _run_one(_Ctx(L, _resolve_generators(L, G)), theorem_id)
