"""The de Rham-style complex of forms on the characteristic-class ring.

Write A = Q[e_1, e_2, ...] for the stable class ring.  The space of
n-forms is Omega^n = A tensor Lambda^n(E) with basis elements

    (monomial) * de_{i_1} ^ ... ^ de_{i_n},   i_1 < ... < i_n,

graded by internal degree deg(monomial) + 2(i_1 + ... + i_n).  Three odd
operators act per degree:

* the exterior derivative d       (d e_i = de_i, d(de_i) = 0),
* the Euler contraction p         (A-linear, p(de_i) = e_i, Koszul signs),
* the Lie-type operator L = d p + p d, which is diagonal: a basis form with
  m generator factors in its coefficient and n wedge factors is an
  eigenvector of eigenvalue m + n.

The chain of contractions ... -> Omega^2 -> Omega^1 -> Omega^0 -> Q -> 0
is exact in every positive internal degree; `verify_exactness` certifies
this per degree by exact rank bookkeeping (d^2 = 0 and p^2 = 0 are checked
separately, so dimension counts suffice).

Everything here is a finite matrix per (form degree, internal degree), and
all matrices are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .algebra import (
    AlgebraElement,
    DegreeBoundError,
    Monomial,
    PolynomialAlgebra,
    _monomial_key,
    exterior_basis,
)
from .linalg import SparseMatrix, VectorQ

_ONE = Fraction(1)


class FormBasisElement:
    """monomial * de_{i_1} ^ ... ^ de_{i_n} with a strictly increasing wedge."""

    __slots__ = ("monomial", "wedge")

    def __init__(self, monomial: Monomial, wedge: Tuple[int, ...]):
        if any(a >= b for a, b in zip(wedge, wedge[1:])):
            raise ValueError("wedge indices must be strictly increasing")
        if wedge and wedge[0] < 1:
            raise ValueError("generator indices start at 1")
        self.monomial = monomial
        self.wedge = tuple(wedge)

    @property
    def form_degree(self) -> int:
        return len(self.wedge)

    @property
    def internal_degree(self) -> int:
        return self.monomial.degree + sum(2 * i for i in self.wedge)

    @property
    def cohomological_degree(self) -> int:
        # each de_i sits one below e_i
        return self.internal_degree - self.form_degree

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FormBasisElement)
            and self.monomial == other.monomial
            and self.wedge == other.wedge
        )

    def __hash__(self):
        return hash((self.monomial, self.wedge))

    def __str__(self):
        w = "^".join(f"de{i}" for i in self.wedge)
        if not w:
            return str(self.monomial)
        if self.monomial.pairs == ():
            return w
        return f"{self.monomial}*{w}"

    def __repr__(self):
        return f"FormBasisElement({self})"


class FormElement:
    """Sparse Q-combination of form basis elements."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[FormBasisElement, Fraction]] = None):
        clean: Dict[FormBasisElement, Fraction] = {}
        if terms:
            for b, c in terms.items():
                c = c if type(c) is Fraction else Fraction(c)
                if c:
                    clean[b] = c
        self.terms = clean

    @classmethod
    def of(cls, monomial: Monomial, wedge: Tuple[int, ...], coeff=_ONE) -> "FormElement":
        return cls({FormBasisElement(monomial, wedge): coeff})

    def __add__(self, other: "FormElement") -> "FormElement":
        out = dict(self.terms)
        for b, c in other.terms.items():
            s = out.get(b, Fraction(0)) + c
            if s:
                out[b] = s
            else:
                out.pop(b, None)
        r = FormElement.__new__(FormElement)
        r.terms = out
        return r

    def __sub__(self, other: "FormElement") -> "FormElement":
        return self + (-other)

    def __neg__(self) -> "FormElement":
        r = FormElement.__new__(FormElement)
        r.terms = {b: -c for b, c in self.terms.items()}
        return r

    def scale(self, c) -> "FormElement":
        c = c if type(c) is Fraction else Fraction(c)
        r = FormElement.__new__(FormElement)
        r.terms = {b: c * x for b, x in self.terms.items()} if c else {}
        return r

    __rmul__ = scale

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, FormElement) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "FormElement(0)"
        bits = sorted(f"{c}*{b}" for b, c in self.terms.items())
        return "FormElement(" + " + ".join(bits) + ")"


def wedge_insert(i: int, wedge: Tuple[int, ...]):
    """de_i ^ (wedge): None if i repeats, else (sign, sorted wedge)."""
    if i in wedge:
        return None
    pos = sum(1 for j in wedge if j < i)
    sign = -1 if pos % 2 else 1
    return sign, wedge[:pos] + (i,) + wedge[pos:]


def wedge_remove(k: int, wedge: Tuple[int, ...]):
    """Contract the k-th slot (0-based): (sign, index removed, rest)."""
    sign = -1 if k % 2 else 1
    return sign, wedge[k], wedge[:k] + wedge[k + 1 :]


class DifferentialForms:
    """Per-degree bases and operator matrices for the forms complex."""

    def __init__(self, algebra: PolynomialAlgebra):
        self.algebra = algebra
        self._basis: Dict[Tuple[int, int], Tuple[FormBasisElement, ...]] = {}
        self._index: Dict[Tuple[int, int], Dict[FormBasisElement, int]] = {}
        self._d_cache: Dict[Tuple[int, int], SparseMatrix] = {}
        self._p_cache: Dict[Tuple[int, int], SparseMatrix] = {}

    @property
    def degree_bound(self) -> int:
        return self.algebra.degree_bound

    def max_form_degree(self) -> int:
        """Largest n with a nonzero Omega^n inside the bound: the minimal
        internal degree of Omega^n is 2(1+...+n) = n(n+1)."""
        n = 0
        while (n + 1) * (n + 2) <= self.degree_bound:
            n += 1
        return n

    def form_basis(self, n: int, d: int) -> Tuple[FormBasisElement, ...]:
        """Canonical basis of Omega^n in internal degree d: wedges in
        ascending lex order, coefficient monomials in canonical order."""
        if n < 0:
            raise ValueError("form degree must be >= 0")
        self.algebra._check_degree(d)
        key = (n, d)
        cached = self._basis.get(key)
        if cached is None:
            out: List[FormBasisElement] = []
            if d % 2 == 0:
                for wedge in self._wedges(n, d):
                    w = sum(2 * i for i in wedge)
                    for m in self.algebra.monomial_basis(d - w):
                        out.append(FormBasisElement(m, wedge))
            cached = tuple(out)
            self._basis[key] = cached
        return cached

    def _wedges(self, n: int, max_weight: int) -> List[Tuple[int, ...]]:
        # ascending lex across all admissible weights
        found = []
        for w in range(0, max_weight + 1, 2):
            found.extend(exterior_basis(n, w))
        found.sort()
        return found

    def basis_index(self, n: int, d: int) -> Dict[FormBasisElement, int]:
        key = (n, d)
        idx = self._index.get(key)
        if idx is None:
            idx = {b: k for k, b in enumerate(self.form_basis(n, d))}
            self._index[key] = idx
        return idx

    def dim(self, n: int, d: int) -> int:
        return len(self.form_basis(n, d))

    def as_vector(self, form: FormElement, n: int, d: int) -> VectorQ:
        idx = self.basis_index(n, d)
        entries = {}
        for b, c in form.terms.items():
            if b.form_degree != n or b.internal_degree != d:
                raise ValueError(f"{b} is not in Omega^{n} degree {d}")
            entries[idx[b]] = c
        return VectorQ(len(idx), entries)

    def from_vector(self, v: VectorQ, n: int, d: int) -> FormElement:
        basis = self.form_basis(n, d)
        if v.dim != len(basis):
            raise ValueError("vector length does not match the basis")
        return FormElement({basis[i]: c for i, c in v.entries.items()})

    # -- operators ---------------------------------------------------------

    def exterior_derivative(self, n: int, d: int) -> SparseMatrix:
        """Matrix of d: Omega^n_d -> Omega^{n+1}_d (internal degree fixed)."""
        key = (n, d)
        cached = self._d_cache.get(key)
        if cached is not None:
            return cached
        src = self.form_basis(n, d)
        tgt_index = self.basis_index(n + 1, d)
        entries: Dict[Tuple[int, int], Fraction] = {}
        for col, b in enumerate(src):
            for i, e in b.monomial.pairs:
                _, reduced = b.monomial.decrement(i)
                ins = wedge_insert(i, b.wedge)
                if ins is None:
                    continue
                sign, wedge = ins
                row = tgt_index[FormBasisElement(reduced, wedge)]
                entries[(row, col)] = Fraction(sign * e)
        m = SparseMatrix(len(tgt_index), len(src), entries)
        self._d_cache[key] = m
        return m

    def interior_product(self, n: int, d: int) -> SparseMatrix:
        """Matrix of the Euler contraction p: Omega^n_d -> Omega^{n-1}_d,

            p(m * de_{i_1}^...^de_{i_n})
                = sum_k (-1)^{k-1} e_{i_k} m * de_{i_1}^...(drop k)...^de_{i_n}.
        """
        if n < 1:
            # Omega^{-1} = 0; keep the shape so rank bookkeeping stays total
            return SparseMatrix(0, self.dim(0, d) if n == 0 else 0)
        key = (n, d)
        cached = self._p_cache.get(key)
        if cached is not None:
            return cached
        src = self.form_basis(n, d)
        tgt_index = self.basis_index(n - 1, d)
        entries: Dict[Tuple[int, int], Fraction] = {}
        for col, b in enumerate(src):
            for k in range(len(b.wedge)):
                sign, i, rest = wedge_remove(k, b.wedge)
                target = FormBasisElement(b.monomial * Monomial.generator(i), rest)
                row = tgt_index[target]
                prev = entries.get((row, col), Fraction(0))
                val = prev + sign
                if val:
                    entries[(row, col)] = Fraction(val)
                else:
                    entries.pop((row, col), None)
        m = SparseMatrix(len(tgt_index), len(src), entries)
        self._p_cache[key] = m
        return m

    def lie_derivative(self, n: int, d: int) -> SparseMatrix:
        """L = d p + p d on Omega^n_d, assembled from the two operators."""
        p_then_d = self.exterior_derivative(n - 1, d) @ self.interior_product(n, d) \
            if n >= 1 else SparseMatrix.zero(self.dim(0, d), self.dim(0, d))
        d_then_p = self.interior_product(n + 1, d) @ self.exterior_derivative(n, d)
        return p_then_d + d_then_p

    def euler_weights(self, n: int, d: int) -> List[int]:
        """Predicted eigenvalue (generator factors + form degree) per basis
        element of Omega^n_d."""
        return [b.monomial.total_exponent + n for b in self.form_basis(n, d)]

    def verify_cartan(self, n: int, d: int) -> bool:
        """d p + p d equals the predicted diagonal, entry for entry."""
        expected = SparseMatrix(
            self.dim(n, d),
            self.dim(n, d),
            {
                (i, i): Fraction(w)
                for i, w in enumerate(self.euler_weights(n, d))
                if w
            },
        )
        return self.lie_derivative(n, d) == expected

    # -- exactness ---------------------------------------------------------

    def verify_exactness(self, d: int) -> "ExactnessReport":
        """Exactness of ... -> Omega^1_d -> Omega^0_d -> (Q)_d -> 0.

        In positive internal degree the augmentation slot (Q)_d vanishes, so
        the contraction out of Omega^1 must be onto, and at each higher spot
        kernel and incoming image must have the same dimension.  p^2 = 0
        gives image <= kernel for free, so equality of dimensions certifies
        exactness.
        """
        if d <= 0:
            raise ValueError("exactness is claimed in positive degrees only")
        self.algebra._check_degree(d)
        from .linalg import rank as _rank

        top = self.max_form_degree()
        dims = {n: self.dim(n, d) for n in range(top + 2)}
        ranks = {n: _rank(self.interior_product(n, d)) for n in range(1, top + 2)}
        spots: List[SpotCheck] = []
        # spot 0: the augmentation to Q vanishes in positive degree, so the
        # image of Omega^1 must fill the whole degree-d slice of A
        spots.append(
            SpotCheck(
                form_degree=0,
                dim=dims[0],
                rank_out=0,
                rank_in=ranks.get(1, 0),
                exact=ranks.get(1, 0) == dims[0],
            )
        )
        for n in range(1, top + 1):
            kernel = dims[n] - ranks[n]
            spots.append(
                SpotCheck(
                    form_degree=n,
                    dim=dims[n],
                    rank_out=ranks[n],
                    rank_in=ranks[n + 1],
                    exact=kernel == ranks[n + 1],
                )
            )
        return ExactnessReport(degree=d, spots=tuple(spots))


@dataclass(frozen=True)
class SpotCheck:
    """Rank bookkeeping at one slot of the contraction sequence."""

    form_degree: int
    dim: int
    rank_out: int
    rank_in: int
    exact: bool

    def to_dict(self) -> Dict[str, int]:
        return {
            "form_degree": self.form_degree,
            "dim": self.dim,
            "rank_out": self.rank_out,
            "rank_in": self.rank_in,
            "exact": self.exact,
        }


@dataclass(frozen=True)
class ExactnessReport:
    degree: int
    spots: Tuple[SpotCheck, ...]

    @property
    def all_exact(self) -> bool:
        return all(s.exact for s in self.spots)

    def to_dict(self):
        return {
            "degree": self.degree,
            "all_exact": self.all_exact,
            "spots": [s.to_dict() for s in self.spots],
        }
