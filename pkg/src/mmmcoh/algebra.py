"""The graded polynomial algebra on the stable characteristic classes.

The stable cohomology ring of the mapping class groups (boundary case) is a
polynomial ring over Q on generators e_1, e_2, e_3, ... — the
Mumford-Morita-Miller classes — with e_i placed in degree 2i.  This module
realises that ring with exact coefficients: monomials, homogeneous elements,
per-degree bases and the Hilbert function.

Degrees are always *internal* (cohomological) degrees, so everything lives
in even degree; the basis of the degree-d slice corresponds to the
partitions of d/2 (the part i contributing one factor e_i).

A degree bound caps all per-degree *enumeration*; ring arithmetic itself is
exact at every degree, since elements are stored sparsely and nothing is
ever truncated.

>>> A = PolynomialAlgebra(24)
>>> [str(m) for m in A.monomial_basis(4)]
['e1^2', 'e2']
>>> A.hilbert_function(10)
7
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from .linalg import VectorQ

Q = Fraction
_ZERO = Fraction(0)
_ONE = Fraction(1)


class DegreeBoundError(ValueError):
    """A per-degree enumeration was requested beyond the configured bound."""


class Monomial:
    """A monomial in the e_i, kept as a sorted tuple of (index, exponent).

    >>> m = Monomial.from_exponents({1: 2, 3: 1})
    >>> str(m), m.degree, m.total_exponent
    ('e1^2*e3', 10, 3)
    >>> str(m * Monomial.generator(3))
    'e1^2*e3^2'
    """

    __slots__ = ("_pairs",)

    def __init__(self, pairs: Tuple[Tuple[int, int], ...]):
        self._pairs = pairs

    @classmethod
    def from_exponents(cls, exps: Mapping[int, int]) -> "Monomial":
        pairs = []
        for i in sorted(exps):
            e = exps[i]
            if e < 0 or i < 1:
                raise ValueError("generator indices are >= 1, exponents >= 0")
            if e:
                pairs.append((i, e))
        return cls(tuple(pairs))

    @classmethod
    def one(cls) -> "Monomial":
        return cls(())

    @classmethod
    def generator(cls, i: int) -> "Monomial":
        if i < 1:
            raise ValueError("generator indices start at 1")
        return cls(((i, 1),))

    @property
    def pairs(self) -> Tuple[Tuple[int, int], ...]:
        return self._pairs

    @property
    def degree(self) -> int:
        # deg e_i = 2i
        return sum(2 * i * e for i, e in self._pairs)

    @property
    def total_exponent(self) -> int:
        """Number of generator factors counted with multiplicity."""
        return sum(e for _, e in self._pairs)

    def exponent(self, i: int) -> int:
        for j, e in self._pairs:
            if j == i:
                return e
        return 0

    def __mul__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented  # let module elements handle it via __rmul__
        exps: Dict[int, int] = dict(self._pairs)
        for i, e in other._pairs:
            exps[i] = exps.get(i, 0) + e
        return Monomial(tuple(sorted(exps.items())))

    def decrement(self, i: int) -> Tuple[int, "Monomial"]:
        """(old exponent of e_i, monomial with that exponent lowered by one).

        Used by the exterior derivative; raises if e_i does not occur.
        """
        exps = dict(self._pairs)
        e = exps.get(i)
        if not e:
            raise ValueError(f"e{i} does not divide {self}")
        if e == 1:
            del exps[i]
        else:
            exps[i] = e - 1
        return e, Monomial(tuple(sorted(exps.items())))

    def sort_key(self) -> Tuple[Tuple[int, int], ...]:
        """Key for the canonical order: descending lex on the exponent
        vector read from e_1 upward (so e1^2 precedes e2 in degree 4)."""
        return tuple((i, -e) for i, e in self._pairs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self._pairs == other._pairs

    def __hash__(self):
        return hash(self._pairs)

    def __repr__(self):
        return f"Monomial({self._pairs!r})"

    def __str__(self):
        if not self._pairs:
            return "1"
        bits = []
        for i, e in self._pairs:
            bits.append(f"e{i}" if e == 1 else f"e{i}^{e}")
        return "*".join(bits)


def _monomial_key(m: Monomial):
    # descending lex on exponent vectors (e_1 first): a monomial with a
    # higher power of the earliest differing generator comes first
    return m.sort_key()


class AlgebraElement:
    """A Q-linear combination of monomials, stored sparsely.

    Supports +, -, scalar and ring multiplication; multiplication is exact
    in any degree.

    >>> a = AlgebraElement.generator(1)
    >>> str(a * a - 2 * AlgebraElement.generator(2))
    'e1^2 - 2*e2'
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Monomial, Fraction]] = None):
        clean: Dict[Monomial, Fraction] = {}
        if terms:
            for m, c in terms.items():
                c = c if type(c) is Fraction else Fraction(c)
                if c:
                    clean[m] = c
        self.terms = clean

    @classmethod
    def zero(cls) -> "AlgebraElement":
        return cls()

    @classmethod
    def one(cls) -> "AlgebraElement":
        return cls({Monomial.one(): _ONE})

    @classmethod
    def generator(cls, i: int) -> "AlgebraElement":
        return cls({Monomial.generator(i): _ONE})

    @classmethod
    def from_monomial(cls, m: Monomial, coeff=_ONE) -> "AlgebraElement":
        return cls({m: coeff})

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, _ZERO) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        r = AlgebraElement.__new__(AlgebraElement)
        r.terms = out
        return r

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __neg__(self) -> "AlgebraElement":
        r = AlgebraElement.__new__(AlgebraElement)
        r.terms = {m: -c for m, c in self.terms.items()}
        return r

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            out: Dict[Monomial, Fraction] = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    m = m1 * m2
                    s = out.get(m, _ZERO) + c1 * c2
                    if s:
                        out[m] = s
                    else:
                        out.pop(m, None)
            r = AlgebraElement.__new__(AlgebraElement)
            r.terms = out
            return r
        if isinstance(other, Monomial):
            r = AlgebraElement.__new__(AlgebraElement)
            r.terms = {m * other: c for m, c in self.terms.items()}
            return r
        if not isinstance(other, (int, Fraction)):
            return NotImplemented  # module elements pick this up via __rmul__
        c = other if type(other) is Fraction else Fraction(other)
        r = AlgebraElement.__new__(AlgebraElement)
        r.terms = {m: c * x for m, x in self.terms.items()} if c else {}
        return r

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self) -> bool:
        degs = {m.degree for m in self.terms}
        return len(degs) <= 1

    def degree(self) -> Optional[int]:
        """Degree of a homogeneous element (None for 0, error if mixed)."""
        degs = {m.degree for m in self.terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError("element is not homogeneous")
        return degs.pop()

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(m, _ZERO)

    def __eq__(self, other) -> bool:
        return isinstance(other, AlgebraElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"AlgebraElement({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for m in sorted(self.terms, key=_monomial_key):
            c = self.terms[m]
            if m.pairs == ():
                term = str(c)
            elif c == 1:
                term = str(m)
            elif c == -1:
                term = f"-{m}"
            else:
                term = f"{c}*{m}"
            bits.append(term)
        out = bits[0]
        for term in bits[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out


def _partitions(k: int) -> Iterator[Tuple[int, ...]]:
    """Partitions of k as weakly decreasing tuples (largest part first)."""
    if k == 0:
        yield ()
        return

    def rec(remaining: int, cap: int):
        if remaining == 0:
            yield ()
            return
        for part in range(min(cap, remaining), 0, -1):
            for rest in rec(remaining - part, part):
                yield (part,) + rest

    yield from rec(k, k)


class PolynomialAlgebra:
    """The ring Q[e_1, e_2, ...] with deg e_i = 2i, enumerated up to a bound.

    The bound must be an even nonnegative integer; per-degree queries above
    it raise :class:`DegreeBoundError` (no silent truncation anywhere).
    """

    def __init__(self, degree_bound: int = 24):
        if degree_bound < 0 or degree_bound % 2:
            raise ValueError("degree bound must be even and >= 0")
        self.degree_bound = degree_bound
        self._basis_cache: Dict[int, Tuple[Monomial, ...]] = {}
        self._index_cache: Dict[int, Dict[Monomial, int]] = {}

    def generator_indices(self) -> range:
        """Indices i of the generators e_i living inside the bound."""
        return range(1, self.degree_bound // 2 + 1)

    def _check_degree(self, d: int) -> None:
        if d < 0:
            raise ValueError("degrees are nonnegative")
        if d > self.degree_bound:
            raise DegreeBoundError(
                f"degree {d} exceeds the configured bound {self.degree_bound}"
            )

    def monomial_basis(self, d: int) -> Tuple[Monomial, ...]:
        """All monomials of internal degree d, canonically ordered."""
        self._check_degree(d)
        if d % 2:
            return ()
        cached = self._basis_cache.get(d)
        if cached is None:
            monos = []
            for parts in _partitions(d // 2):
                exps: Dict[int, int] = {}
                for p in parts:
                    exps[p] = exps.get(p, 0) + 1
                monos.append(Monomial.from_exponents(exps))
            monos.sort(key=_monomial_key)
            cached = tuple(monos)
            self._basis_cache[d] = cached
        return cached

    def hilbert_function(self, d: int) -> int:
        """dim_Q of the degree-d slice: the partition count p(d/2)."""
        self._check_degree(d)
        if d % 2:
            return 0
        return len(self.monomial_basis(d))

    def basis_index(self, d: int) -> Dict[Monomial, int]:
        idx = self._index_cache.get(d)
        if idx is None:
            idx = {m: k for k, m in enumerate(self.monomial_basis(d))}
            self._index_cache[d] = idx
        return idx

    def as_vector(self, a: AlgebraElement, d: int) -> VectorQ:
        """Coordinates of a degree-d homogeneous element in the canonical
        basis; raises if a term lives in a different degree."""
        idx = self.basis_index(d)
        entries: Dict[int, Fraction] = {}
        for m, c in a.terms.items():
            if m.degree != d:
                raise ValueError(f"term {m} has degree {m.degree}, not {d}")
            entries[idx[m]] = c
        return VectorQ(len(idx), entries)

    def from_vector(self, v: VectorQ, d: int) -> AlgebraElement:
        basis = self.monomial_basis(d)
        if v.dim != len(basis):
            raise ValueError("vector length does not match the basis")
        return AlgebraElement({basis[i]: c for i, c in v.entries.items()})


# ---------------------------------------------------------------------------
# exterior combinatorics (shared by the forms complex and Koszul homology)


def exterior_basis(n: int, d: int) -> Tuple[Tuple[int, ...], ...]:
    """Strictly increasing n-tuples (i_1 < ... < i_n) of generator indices
    with internal degree 2(i_1 + ... + i_n) = d, in ascending lex order.

    This is the degree-d slice of the n-th exterior power of the generator
    space (basis e_{i_1} ^ ... ^ e_{i_n}).

    >>> exterior_basis(2, 10)
    ((1, 4), (2, 3))
    """
    if n < 0 or d < 0:
        return ()
    if d % 2:
        return ()
    out: List[Tuple[int, ...]] = []

    def rec(prefix: Tuple[int, ...], start: int, remaining: int, slots: int):
        if slots == 0:
            if remaining == 0:
                out.append(prefix)
            return
        # smallest possible completion: start, start+1, ..., start+slots-1
        i = start
        while i * slots + slots * (slots - 1) // 2 <= remaining:
            rec(prefix + (i,), i + 1, remaining - i, slots - 1)
            i += 1

    rec((), 1, d // 2, n)
    return tuple(out)


def exterior_dim(n: int, d: int) -> int:
    """dim of the degree-d slice of the n-th exterior power."""
    return len(exterior_basis(n, d))
