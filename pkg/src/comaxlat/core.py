"""Finite multiplicative lattice model.

A multiplicative lattice is a complete lattice carrying a commutative
monoid product that distributes over joins and has the top element as
identity.  This module implements the finite case: validation of the
axioms from tabular input, the order and monoid operations, residual
quotients, radicals, the prime spectrum, and the element-level
predicates (prime, primary, prime power, the four principality
notions).

Every element of a finite lattice is compact, so the compactness
conditions that only matter for infinite lattices hold automatically
here; ``ElementProfile.is_compact`` is the constant ``True``.

A validated :class:`FiniteMultLattice` is immutable and safe to share
across concurrent workers; all operations are pure table lookups.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

Elt = int  # index of an element within its parent lattice

__all__ = [
    "Elt",
    "LatticeError",
    "InvalidSpec",
    "Violation",
    "ValidationError",
    "LatticeSpec",
    "ElementProfile",
    "LatticeProfile",
    "FiniteMultLattice",
    "validate_lattice",
    "mul_key",
]


class LatticeError(Exception):
    """Base class for all errors raised by this package."""


class InvalidSpec(LatticeError):
    """The input description is malformed (bad labels, duplicates, ...)."""


@dataclass(frozen=True)
class Violation:
    """One axiom or structure failure found during validation.

    ``code`` is a stable machine-readable identifier (``NotAPartialOrder``,
    ``NotALattice``, ``MissingProduct``, ``NotCommutative``,
    ``NotAssociative``, ``NotDistributive``, ``BottomNotAbsorbing``,
    ``TopNotIdentity``, ``BottomEqualsTop``).  ``witness`` holds the
    labels of a witnessing tuple.
    """

    code: str
    witness: tuple[str, ...] = ()
    detail: str = ""

    def __str__(self) -> str:
        return " ".join((self.code,) + self.witness)


class ValidationError(LatticeError):
    """Raised when a lattice description violates the axioms."""

    def __init__(self, violations: Iterable[Violation]):
        self.violations = tuple(violations)
        super().__init__("; ".join(str(v) for v in self.violations))

    def codes(self) -> set[str]:
        return {v.code for v in self.violations}


def mul_key(x: str, y: str) -> tuple[str, str]:
    """Normalized (unordered) key for a product entry."""
    return (x, y) if x <= y else (y, x)


@dataclass(frozen=True)
class LatticeSpec:
    """Tabular description of a finite multiplicative lattice.

    ``order_pairs`` lists pairs ``(x, y)`` meaning ``x <= y``; the
    reflexive-transitive closure is taken, so covering pairs suffice
    but any relation is accepted.  ``mul_entries`` maps unordered label
    pairs (normalized with :func:`mul_key`) to product labels; entries
    involving the bottom or top may be omitted (they are forced by the
    axioms), every other pair is mandatory.
    """

    name: str
    elements: tuple[str, ...]
    order_pairs: tuple[tuple[str, str], ...]
    mul_entries: Mapping[tuple[str, str], str]
    bottom: str = "0"
    top: str = "1"


@dataclass(frozen=True)
class ElementProfile:
    """All element-level predicate flags for one lattice element.

    ``is_compact`` is constant ``True`` in a finite lattice.  When
    ``is_prime_power`` holds, ``prime_power_witness`` is the pair
    ``(p, k)`` with ``p`` prime and ``p**k`` equal to the element,
    minimal first in ``p`` then in ``k``.
    """

    is_proper: bool
    is_prime: bool
    is_maximal: bool
    is_primary: bool
    is_radical: bool
    is_prime_power: bool
    prime_power_witness: Optional[tuple[Elt, int]]
    is_compact: bool
    is_meet_principal: bool
    is_weak_meet_principal: bool
    is_join_principal: bool
    is_weak_join_principal: bool
    is_principal: bool

    def __post_init__(self) -> None:
        assert self.is_principal == (self.is_meet_principal and self.is_join_principal)
        if self.is_prime:
            assert self.is_primary and self.is_radical
        if self.is_maximal:
            assert self.is_prime


@dataclass(frozen=True)
class LatticeProfile:
    """Whole-lattice flags derived from the spectrum and the principal elements."""

    is_domain: bool
    is_treed: bool
    generated_by_principal: bool


def _closure(up: list[int], n: int) -> None:
    """Reflexive-transitive closure of up-set masks, in place."""
    for i in range(n):
        up[i] |= 1 << i
    for k in range(n):
        bit = 1 << k
        for i in range(n):
            if up[i] & bit:
                up[i] |= up[k]


def _least_of(mask: int, up: tuple[int, ...], n: int) -> Optional[int]:
    """Least element of the subset ``mask``, or None if there is none."""
    rest = mask
    while rest:
        u = (rest & -rest).bit_length() - 1
        if mask & ~up[u] == 0:
            return u
        rest &= rest - 1
    return None


def _greatest_of(mask: int, down: tuple[int, ...], n: int) -> Optional[int]:
    rest = mask
    while rest:
        u = (rest & -rest).bit_length() - 1
        if mask & ~down[u] == 0:
            return u
        rest &= rest - 1
    return None


def order_tables(
    up: tuple[int, ...], n: int
) -> tuple[Optional[tuple], Optional[tuple], Optional[tuple[str, str]]]:
    """Compute join and meet tables for a partial order given by up-set masks.

    Returns ``(join, meet, None)`` on success, or ``(None, None, (i, j))``
    with a witness pair (as indices) when some bound is missing.
    """
    down = tuple(
        sum(1 << i for i in range(n) if up[i] >> j & 1) for j in range(n)
    )
    join = [[0] * n for _ in range(n)]
    meet = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            ub = up[i] & up[j]
            lb = down[i] & down[j]
            lu = _least_of(ub, up, n)
            gl = _greatest_of(lb, down, n)
            if lu is None or gl is None:
                return None, None, (i, j)
            join[i][j] = join[j][i] = lu
            meet[i][j] = meet[j][i] = gl
    return tuple(map(tuple, join)), tuple(map(tuple, meet)), None


def multiplication_violations(
    labels: tuple[str, ...],
    join: tuple[tuple[int, ...], ...],
    mul: list[list[int]],
    bottom: int,
    top: int,
) -> list[Violation]:
    """Scan a full multiplication table against the monoid axioms.

    Reports at most one violation per axiom, with the first witness in
    index order.  The order axioms (closure, bounds, joins/meets) must
    already hold.
    """
    n = len(labels)
    out: list[Violation] = []
    for x, y in itertools.combinations(range(n), 2):
        if mul[x][y] != mul[y][x]:
            out.append(Violation("NotCommutative", (labels[x], labels[y])))
            break
    for x in range(n):
        if mul[x][top] != x:
            out.append(Violation("TopNotIdentity", (labels[x],)))
            break
    for x in range(n):
        if mul[x][bottom] != bottom:
            out.append(Violation("BottomNotAbsorbing", (labels[x],)))
            break
    done = False
    for x in range(n):
        if done:
            break
        for y in range(n):
            if done:
                break
            for z in range(n):
                if mul[mul[x][y]][z] != mul[x][mul[y][z]]:
                    out.append(
                        Violation("NotAssociative", (labels[x], labels[y], labels[z]))
                    )
                    done = True
                    break
    done = False
    for x in range(n):
        if done:
            break
        for a in range(n):
            if done:
                break
            for b in range(a, n):
                if mul[x][join[a][b]] != join[mul[x][a]][mul[x][b]]:
                    out.append(
                        Violation("NotDistributive", (labels[x], labels[a], labels[b]))
                    )
                    done = True
                    break
    return out


class FiniteMultLattice:
    """A validated finite multiplicative lattice.

    Elements are the indices ``0 .. n-1`` into ``labels``; all derived
    data (join/meet/product/quotient tables, the spectrum, radicals,
    power chains, element predicates) is precomputed at construction.
    Set-valued results are returned as tuples sorted by element index.

    Construct through :func:`validate_lattice` or :meth:`from_tables`,
    both of which check every axiom first.
    """

    def __init__(
        self,
        name: str,
        labels: tuple[str, ...],
        up: tuple[int, ...],
        join: tuple[tuple[int, ...], ...],
        meet: tuple[tuple[int, ...], ...],
        mul: tuple[tuple[int, ...], ...],
        bottom: int,
        top: int,
    ):
        # Internal constructor: inputs must already be validated.
        self.name = name
        self.labels = labels
        self.n = len(labels)
        self.bottom = bottom
        self.top = top
        self._up = up
        self._down = tuple(
            sum(1 << i for i in range(self.n) if up[i] >> j & 1)
            for j in range(self.n)
        )
        self._join = join
        self._meet = meet
        self._mul = mul
        self._index = {lab: i for i, lab in enumerate(labels)}
        self._build_caches()

    # -- construction -------------------------------------------------

    @classmethod
    def from_tables(
        cls,
        up: tuple[int, ...],
        mul: tuple[tuple[int, ...], ...],
        bottom: int,
        top: int,
        labels: Optional[tuple[str, ...]] = None,
        name: str = "",
    ) -> "FiniteMultLattice":
        """Build and fully validate a lattice from raw order/product tables."""
        n = len(up)
        if labels is None:
            labels = default_labels(n, bottom, top)
        if bottom == top:
            raise ValidationError([Violation("BottomEqualsTop", (labels[bottom],))])
        closed = list(up)
        _closure(closed, n)
        viols = _order_violations(tuple(closed), n, bottom, top, labels)
        if viols:
            raise ValidationError(viols)
        join, meet, missing = order_tables(tuple(closed), n)
        if missing is not None:
            i, j = missing
            raise ValidationError(
                [Violation("NotALattice", (labels[i], labels[j]), "missing bound")]
            )
        viols = multiplication_violations(labels, join, [list(r) for r in mul], bottom, top)
        if viols:
            raise ValidationError(viols)
        return cls(name, labels, tuple(closed), join, meet, mul, bottom, top)

    def _build_caches(self) -> None:
        n = self.n
        mul = self._mul
        join = self._join
        meet = self._meet
        up = self._up
        down = self._down
        top = self.top
        bottom = self.bottom

        # Derived facts from the axioms, kept as hard assertions.
        for x in range(n):
            for y in range(n):
                assert self.leq(mul[x][y], meet[x][y]), "product must lie below the meet"
                for z in range(n):
                    if self.leq(y, z):
                        assert self.leq(mul[x][y], mul[x][z]), "product must be monotone"

        # quotient table: quot[y][x] = largest a with a*x <= y
        quot = [[bottom] * n for _ in range(n)]
        for y in range(n):
            uy = down[y]
            for x in range(n):
                best = bottom
                for a in range(n):
                    if uy >> mul[a][x] & 1:
                        best = join[best][a]
                quot[y][x] = best
        self._quot = tuple(map(tuple, quot))

        # power chains: x, x^2, ... are decreasing in a finite lattice,
        # so the chain stabilizes; keep the distinct prefix.
        chains = []
        for x in range(n):
            chain = [x]
            while True:
                nxt = mul[chain[-1]][x]
                if nxt == chain[-1]:
                    break
                assert self.leq(nxt, chain[-1]), "powers must decrease"
                chain.append(nxt)
            chains.append(tuple(chain))
        self._powers = tuple(chains)

        self._primes = tuple(p for p in range(n) if p != top and self._prime_scan(p))
        self._maximal = tuple(
            i
            for i in range(n)
            if i != top and up[i] & ~(1 << i) == 1 << top
        )
        # Every proper element lies below some maximal element.
        for x in range(n):
            if x != top:
                assert any(self.leq(x, m) for m in self._maximal)
        assert self._primes, "the spectrum of a finite lattice is nonempty"

        prime_mask = sum(1 << p for p in self._primes)
        rad = []
        for a in range(n):
            m = self.top
            ps = prime_mask & up[a]
            while ps:
                p = (ps & -ps).bit_length() - 1
                m = meet[m][p]
                ps &= ps - 1
            rad.append(m)
        self._radical = tuple(rad)

        self._min_primes = tuple(
            tuple(
                p
                for p in self._primes
                if self.leq(a, p)
                and not any(
                    q != p and self.leq(a, q) and self.leq(q, p) for q in self._primes
                )
            )
            for a in range(n)
        )

        self._primary = tuple(q for q in range(n) if q != top and self._primary_scan(q))

        pp: list[Optional[tuple[int, int]]] = [None] * n
        for p in self._primes:
            for k, v in enumerate(self._powers[p], start=1):
                if pp[v] is None:
                    pp[v] = (p, k)
        self._prime_power = tuple(pp)

        self._meet_principal = tuple(m for m in range(n) if self._mp_scan(m))
        self._weak_meet_principal = tuple(m for m in range(n) if self._wmp_scan(m))
        self._join_principal = tuple(j for j in range(n) if self._jp_scan(j))
        self._weak_join_principal = tuple(j for j in range(n) if self._wjp_scan(j))
        mp = set(self._meet_principal)
        jp = set(self._join_principal)
        self._principal = tuple(x for x in range(n) if x in mp and x in jp)

        # dimension: longest strict chain (edge count) in the prime poset
        height: dict[int, int] = {}
        for p in sorted(self._primes, key=lambda q: bin(down[q]).count("1")):
            height[p] = max(
                (height[q] + 1 for q in self._primes if q != p and self.leq(q, p)),
                default=0,
            )
        self._dimension = max(height.values())

        gbp = all(
            self.join(p for p in self._principal if self.leq(p, x)) == x
            for x in range(n)
        )
        self._profile = LatticeProfile(
            is_domain=bottom in set(self._primes),
            is_treed=all(
                self.comaximal(p, q)
                for p, q in itertools.combinations(self._primes, 2)
                if not self.leq(p, q) and not self.leq(q, p)
            ),
            generated_by_principal=gbp,
        )

    # -- predicate scans ----------------------------------------------

    def _prime_scan(self, p: int) -> bool:
        dp = self._down[p]
        mul = self._mul
        for x in range(self.n):
            if dp >> x & 1:
                continue
            row = mul[x]
            for y in range(x, self.n):
                if dp >> row[y] & 1 and not dp >> y & 1:
                    return False
        return True

    def _primary_scan(self, q: int) -> bool:
        dq = self._down[q]
        dr = self._down[self._radical[q]]
        mul = self._mul
        for x in range(self.n):
            row = mul[x]
            for y in range(self.n):
                if dq >> row[y] & 1 and not (dq >> x & 1 or dr >> y & 1):
                    return False
        return True

    def _mp_scan(self, m: int) -> bool:
        # a /\ b*m == ((a:m) /\ b) * m for all a, b
        meet, mul, quot = self._meet, self._mul, self._quot
        return all(
            meet[a][mul[b][m]] == mul[meet[quot[a][m]][b]][m]
            for a in range(self.n)
            for b in range(self.n)
        )

    def _wmp_scan(self, m: int) -> bool:
        meet, mul, quot = self._meet, self._mul, self._quot
        return all(meet[m][a] == mul[quot[a][m]][m] for a in range(self.n))

    def _jp_scan(self, j: int) -> bool:
        # ((a*j \/ b) : j) == a \/ (b:j) for all a, b
        join, mul, quot = self._join, self._mul, self._quot
        return all(
            quot[join[mul[a][j]][b]][j] == join[a][quot[b][j]]
            for a in range(self.n)
            for b in range(self.n)
        )

    def _wjp_scan(self, j: int) -> bool:
        join, mul, quot = self._join, self._mul, self._quot
        z = quot[self.bottom][j]
        return all(quot[mul[a][j]][j] == join[a][z] for a in range(self.n))

    # -- basic order and monoid operations -----------------------------

    def leq(self, x: Elt, y: Elt) -> bool:
        return bool(self._up[x] >> y & 1)

    def join2(self, x: Elt, y: Elt) -> Elt:
        return self._join[x][y]

    def meet2(self, x: Elt, y: Elt) -> Elt:
        return self._meet[x][y]

    def mul2(self, x: Elt, y: Elt) -> Elt:
        return self._mul[x][y]

    def join(self, xs: Iterable[Elt]) -> Elt:
        """Least upper bound; the empty join is the bottom element."""
        r = self.bottom
        for x in xs:
            r = self._join[r][x]
        return r

    def meet(self, xs: Iterable[Elt]) -> Elt:
        """Greatest lower bound; the empty meet is the top element."""
        r = self.top
        for x in xs:
            r = self._meet[r][x]
        return r

    def mul(self, xs: Iterable[Elt]) -> Elt:
        """Product of a sequence of elements.

        The fold is order-independent (the product is commutative and
        associative); the empty product is the top element, which is
        the monoid identity.
        """
        r = self.top
        for x in xs:
            r = self._mul[r][x]
        return r

    def quotient(self, y: Elt, x: Elt) -> Elt:
        """The residual (y : x), i.e. the largest a with a*x <= y."""
        return self._quot[y][x]

    def radical(self, a: Elt) -> Elt:
        """The meet of all primes above ``a``.

        Coincides with the join of all x some power of which lies below
        ``a``; the agreement of the two forms is exercised by the test
        suite with an independent computation.
        """
        return self._radical[a]

    def comaximal(self, x: Elt, y: Elt) -> bool:
        return self._join[x][y] == self.top

    def power_chain(self, x: Elt) -> tuple[Elt, ...]:
        """Distinct powers ``x, x^2, ...`` (a strictly decreasing chain).

        The chain stabilizes after at most ``n`` steps; any statement
        quantified over all exponents only needs exponents up to
        ``len(power_chain(x))``.
        """
        return self._powers[x]

    def power(self, x: Elt, k: int) -> Elt:
        """``x`` raised to the ``k``-th power, ``k >= 1``."""
        chain = self._powers[x]
        return chain[k - 1] if k <= len(chain) else chain[-1]

    # -- spectrum -------------------------------------------------------

    def spectrum(self) -> tuple[Elt, ...]:
        """All prime elements, sorted by index."""
        return self._primes

    def max_elements(self) -> tuple[Elt, ...]:
        """All maximal proper elements, sorted by index."""
        return self._maximal

    def min_primes(self, a: Elt) -> tuple[Elt, ...]:
        """Minimal primes above ``a``; empty for the top element."""
        return self._min_primes[a]

    def dimension(self) -> int:
        """Longest strict chain (edge count) in the prime poset."""
        return self._dimension

    def is_prime(self, x: Elt) -> bool:
        return x in set(self._primes)

    def is_primary(self, x: Elt) -> bool:
        return x in set(self._primary)

    def is_radical_element(self, x: Elt) -> bool:
        return self._radical[x] == x

    def prime_power_witness(self, x: Elt) -> Optional[tuple[Elt, int]]:
        return self._prime_power[x]

    def principal_elements(self) -> tuple[Elt, ...]:
        return self._principal

    def join_principal_elements(self) -> tuple[Elt, ...]:
        return self._join_principal

    def join_irreducibles(self) -> tuple[Elt, ...]:
        """Elements with exactly one lower cover.

        Every element is the join of the join-irreducibles below it,
        and every generating set contains all of them, so they form the
        smallest generating set of the lattice.
        """
        return tuple(x for x in range(self.n) if len(self.lower_covers(x)) == 1)

    def lower_covers(self, x: Elt) -> tuple[Elt, ...]:
        below = self._down[x] & ~(1 << x)
        covers = []
        for i in range(self.n):
            if below >> i & 1:
                between = self._up[i] & below & ~(1 << i)
                if between == 0:
                    covers.append(i)
        return tuple(covers)

    # -- profiles -------------------------------------------------------

    def element_profile(self, x: Elt) -> ElementProfile:
        witness = self._prime_power[x]
        return ElementProfile(
            is_proper=x != self.top,
            is_prime=x in set(self._primes),
            is_maximal=x in set(self._maximal),
            is_primary=x in set(self._primary),
            is_radical=self._radical[x] == x,
            is_prime_power=witness is not None,
            prime_power_witness=witness,
            is_compact=True,
            is_meet_principal=x in set(self._meet_principal),
            is_weak_meet_principal=x in set(self._weak_meet_principal),
            is_join_principal=x in set(self._join_principal),
            is_weak_join_principal=x in set(self._weak_join_principal),
            is_principal=x in set(self._principal),
        )

    def lattice_profile(self) -> LatticeProfile:
        return self._profile

    # -- labels and serialization ----------------------------------------

    def label(self, x: Elt) -> str:
        return self.labels[x]

    def label_set(self, xs: Iterable[Elt]) -> tuple[str, ...]:
        return tuple(self.labels[x] for x in sorted(xs))

    def index(self, label: str) -> Elt:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"no element labelled {label!r}") from None

    def elements(self) -> range:
        return range(self.n)

    def proper_elements(self) -> tuple[Elt, ...]:
        return tuple(x for x in range(self.n) if x != self.top)

    def to_spec(self) -> LatticeSpec:
        """Serialize back to a spec: covering pairs plus the non-forced products."""
        pairs = []
        for i in range(self.n):
            for j in range(self.n):
                if i != j and self.leq(i, j):
                    between = self._up[i] & self._down[j] & ~(1 << i) & ~(1 << j)
                    if between == 0:
                        pairs.append((self.labels[i], self.labels[j]))
        entries: dict[tuple[str, str], str] = {}
        for i in range(self.n):
            for j in range(i, self.n):
                if i in (self.bottom, self.top) or j in (self.bottom, self.top):
                    continue
                entries[mul_key(self.labels[i], self.labels[j])] = self.labels[
                    self._mul[i][j]
                ]
        return LatticeSpec(
            name=self.name,
            elements=self.labels,
            order_pairs=tuple(pairs),
            mul_entries=entries,
            bottom=self.labels[self.bottom],
            top=self.labels[self.top],
        )

    def __repr__(self) -> str:
        return f"<FiniteMultLattice {self.name or '?'} n={self.n}>"


def default_labels(n: int, bottom: int, top: int) -> tuple[str, ...]:
    """Standard labels: '0' for bottom, '1' for top, letters in between."""
    letters = iter("abcdefghijklmnopqrstuvwxyz")
    out = []
    for i in range(n):
        if i == bottom:
            out.append("0")
        elif i == top:
            out.append("1")
        else:
            out.append(next(letters))
    return tuple(out)


def _order_violations(
    up: tuple[int, ...], n: int, bottom: int, top: int, labels: tuple[str, ...]
) -> list[Violation]:
    full = (1 << n) - 1
    for i in range(n):
        for j in range(i + 1, n):
            if up[i] >> j & 1 and up[j] >> i & 1:
                return [
                    Violation(
                        "NotAPartialOrder",
                        (labels[i], labels[j]),
                        "order cycle",
                    )
                ]
    out = []
    if up[bottom] != full:
        bad = next(j for j in range(n) if not up[bottom] >> j & 1)
        out.append(
            Violation(
                "NotALattice",
                (labels[bottom], labels[bad]),
                "designated bottom is not the least element",
            )
        )
    if any(not up[i] >> top & 1 for i in range(n)):
        bad = next(i for i in range(n) if not up[i] >> top & 1)
        out.append(
            Violation(
                "NotALattice",
                (labels[bad], labels[top]),
                "designated top is not the greatest element",
            )
        )
    return out


def validate_lattice(spec: LatticeSpec) -> FiniteMultLattice:
    """Check every axiom on a :class:`LatticeSpec` and build the lattice.

    Raises :class:`InvalidSpec` for malformed input (unknown or repeated
    labels) and :class:`ValidationError` carrying one
    :class:`Violation` per failed check otherwise.  Products with the
    bottom or top element may be omitted from the spec and are inferred
    from the axioms; all other products are mandatory and reported as
    ``MissingProduct`` when absent.
    """
    labels = tuple(spec.elements)
    n = len(labels)
    index: dict[str, int] = {}
    for i, lab in enumerate(labels):
        if lab in index:
            raise InvalidSpec(f"repeated element label {lab!r}")
        index[lab] = i
    for lab in (spec.bottom, spec.top):
        if lab not in index:
            raise InvalidSpec(f"designated bound {lab!r} is not an element")
    for x, y in spec.order_pairs:
        if x not in index or y not in index:
            raise InvalidSpec(f"order pair ({x!r}, {y!r}) uses unknown labels")
    for (x, y), v in spec.mul_entries.items():
        if x not in index or y not in index or v not in index:
            raise InvalidSpec(f"product entry {x!r}*{y!r}={v!r} uses unknown labels")
        if mul_key(x, y) != (x, y):
            raise InvalidSpec(f"product key ({x!r}, {y!r}) is not normalized")

    bottom, top = index[spec.bottom], index[spec.top]
    if bottom == top:
        raise ValidationError([Violation("BottomEqualsTop", (spec.bottom,))])

    up = [0] * n
    for x, y in spec.order_pairs:
        up[index[x]] |= 1 << index[y]
    _closure(up, n)
    up_t = tuple(up)

    viols = _order_violations(up_t, n, bottom, top, labels)
    if viols:
        raise ValidationError(viols)

    join, meet, missing = order_tables(up_t, n)
    if missing is not None:
        i, j = missing
        raise ValidationError(
            [Violation("NotALattice", (labels[i], labels[j]), "missing bound")]
        )

    mul = [[-1] * n for _ in range(n)]
    missing_products: list[Violation] = []
    for i in range(n):
        for j in range(i, n):
            key = mul_key(labels[i], labels[j])
            if key in spec.mul_entries:
                v = index[spec.mul_entries[key]]
            elif bottom in (i, j):
                v = bottom
            elif top in (i, j):
                v = i if j == top else j
            else:
                missing_products.append(Violation("MissingProduct", key))
                continue
            mul[i][j] = mul[j][i] = v
    if missing_products:
        raise ValidationError(missing_products)

    viols = multiplication_violations(labels, join, mul, bottom, top)
    if viols:
        raise ValidationError(viols)

    return FiniteMultLattice(
        spec.name, labels, up_t, join, meet, tuple(map(tuple, mul)), bottom, top
    )
