"""Exact and floating arithmetic in the real division algebras R, C, H, O.

Elements are coordinate vectors over the basis 1 = e0, e1, ..., e_{d-1}
(d = 1, 2, 4, 8).  Every element carries one of two scalar backends:

* ``exact``  -- coefficients are :class:`fractions.Fraction`
* ``float``  -- coefficients are 64-bit binary floats

Mixed-backend binary operations raise :class:`BackendMismatchError`; there
is never a silent coercion.  All values are immutable and all operations
are pure, so elements may be shared freely between threads.

The octonion multiplication table is generated by Cayley-Dickson doubling
of the quaternions with e4 as the doubling unit, which fixes the signs
e1*e4 = e5, e2*e4 = e6, e3*e4 = e7.  The full sign table is written out in
``docs/octonion_table.txt`` and regenerated by :func:`octonion_table_text`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[Fraction, float]

EXACT = "exact"
FLOAT = "float"


class AlgebraError(Exception):
    """Base class for algebra-level usage errors."""


class AlgebraMismatchError(AlgebraError):
    """Binary operation on elements of different algebras."""


class BackendMismatchError(AlgebraError):
    """Binary operation on elements with different scalar backends."""


class UnsupportedBackendError(AlgebraError):
    """Operation requires the other scalar backend."""


def _quaternion_table() -> list[list[tuple[int, int]]]:
    t = [[(0, 0)] * 4 for _ in range(4)]
    for i in range(4):
        t[0][i] = (1, i)
        t[i][0] = (1, i)
    for i in (1, 2, 3):
        t[i][i] = (-1, 0)
    # i*j = k and cyclic permutations
    for a, b, c in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        t[a][b] = (1, c)
        t[b][a] = (-1, c)
    return t


def _double_table(base: list[list[tuple[int, int]]]) -> list[list[tuple[int, int]]]:
    """Cayley-Dickson doubling: (a,b)(c,d) = (ac - conj(d)b, da + b conj(c))."""
    n = len(base)
    dim = 2 * n

    def mul_basis(i: int, j: int) -> tuple[int, int]:
        # Work out e_i * e_j by splitting into (a, b) halves.
        ia, ib = (i, None) if i < n else (None, i - n)
        ja, jb = (j, None) if j < n else (None, j - n)
        # conj flips the sign of every imaginary basis unit
        def conj_sign(k: int) -> int:
            return 1 if k == 0 else -1

        if ia is not None and ja is not None:
            s, k = base[ia][ja]
            return s, k
        if ia is not None and jb is not None:
            # (a,0)(0,d) = (0, d a)
            s, k = base[jb][ia]
            return s, k + n
        if ib is not None and ja is not None:
            # (0,b)(c,0) = (0, b conj(c))
            s, k = base[ib][ja]
            return s * conj_sign(ja), k + n
        # (0,b)(0,d) = (-conj(d) b, 0)
        s, k = base[jb][ib]
        return -s * conj_sign(jb), k

    return [[mul_basis(i, j) for j in range(dim)] for i in range(dim)]


_TABLES = {
    "R": [[(1, 0)]],
    "C": [[(1, 0), (1, 1)], [(1, 1), (-1, 0)]],
    "H": _quaternion_table(),
}
_TABLES["O"] = _double_table(_TABLES["H"])


class Algebra:
    """One of the four real division algebras, identified by name."""

    __slots__ = ("name", "dim", "table")

    def __init__(self, name: str, table: list[list[tuple[int, int]]]):
        self.name = name
        self.dim = len(table)
        self.table = table

    def __repr__(self) -> str:
        return self.name


R = Algebra("R", _TABLES["R"])
C = Algebra("C", _TABLES["C"])
H = Algebra("H", _TABLES["H"])
O = Algebra("O", _TABLES["O"])

ALGEBRAS = {a.name: a for a in (R, C, H, O)}


def algebra_by_name(name: str) -> Algebra:
    try:
        return ALGEBRAS[name]
    except KeyError:
        raise AlgebraError(f"unknown algebra {name!r}; expected one of R, C, H, O") from None


def mul_coeffs(table, xs, ys):
    """Bilinear product of coefficient vectors under a structure table.

    Scalar-agnostic: works for Fraction, float, or any commutative ring
    element supporting + and *.  Used both by :class:`AlgebraElement` and
    by the lattice module for exact closure checks over surd scalars.
    """
    out = [None] * len(xs)
    for i, xi in enumerate(xs):
        if not xi:
            continue
        row = table[i]
        for j, yj in enumerate(ys):
            if not yj:
                continue
            s, k = row[j]
            term = xi * yj if s > 0 else -(xi * yj)
            out[k] = term if out[k] is None else out[k] + term
    zero = (xs[0] - xs[0]) if xs else 0
    return [zero if c is None else c for c in out]


class AlgebraElement:
    """A point of R, C, H, or O over a single scalar backend."""

    __slots__ = ("algebra", "coeffs", "backend")

    def __init__(self, algebra: Algebra, coeffs: Iterable[Scalar]):
        coeffs = tuple(coeffs)
        if len(coeffs) != algebra.dim:
            raise AlgebraError(
                f"{algebra.name} needs {algebra.dim} coefficients, got {len(coeffs)}"
            )
        if all(isinstance(c, Fraction) for c in coeffs):
            backend = EXACT
        elif all(isinstance(c, float) for c in coeffs):
            backend = FLOAT
        else:
            raise BackendMismatchError(
                "coefficients must be all Fraction or all float, not a mix"
            )
        object.__setattr__ if False else None
        self.algebra = algebra
        self.coeffs = coeffs
        self.backend = backend

    # -- constructors ------------------------------------------------------

    @classmethod
    def exact(cls, algebra: Algebra, *coeffs) -> "AlgebraElement":
        """Build an exact element; ints and strings are accepted."""
        cs = [Fraction(c) for c in coeffs]
        cs += [Fraction(0)] * (algebra.dim - len(cs))
        return cls(algebra, cs)

    @classmethod
    def approx(cls, algebra: Algebra, *coeffs) -> "AlgebraElement":
        cs = [float(c) for c in coeffs]
        cs += [0.0] * (algebra.dim - len(cs))
        return cls(algebra, cs)

    @classmethod
    def zero(cls, algebra: Algebra, backend: str = EXACT) -> "AlgebraElement":
        z = Fraction(0) if backend == EXACT else 0.0
        return cls(algebra, [z] * algebra.dim)

    @classmethod
    def one(cls, algebra: Algebra, backend: str = EXACT) -> "AlgebraElement":
        return cls.unit(algebra, 0, backend)

    @classmethod
    def unit(cls, algebra: Algebra, i: int, backend: str = EXACT) -> "AlgebraElement":
        z, u = (Fraction(0), Fraction(1)) if backend == EXACT else (0.0, 1.0)
        cs = [z] * algebra.dim
        cs[i] = u
        return cls(algebra, cs)

    # -- checks ------------------------------------------------------------

    def _check(self, other: "AlgebraElement") -> None:
        if not isinstance(other, AlgebraElement):
            raise TypeError(f"expected AlgebraElement, got {type(other).__name__}")
        if other.algebra is not self.algebra:
            raise AlgebraMismatchError(
                f"mixed algebras {self.algebra.name} and {other.algebra.name}"
            )
        if other.backend != self.backend:
            raise BackendMismatchError(
                f"mixed backends {self.backend} and {other.backend}"
            )

    def require_exact(self) -> None:
        if self.backend != EXACT:
            raise UnsupportedBackendError("operation requires the exact backend")

    # -- ring structure ----------------------------------------------------

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        return AlgebraElement(self.algebra, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        return AlgebraElement(self.algebra, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.algebra, [-a for a in self.coeffs])

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        return AlgebraElement(
            self.algebra, mul_coeffs(self.algebra.table, self.coeffs, other.coeffs)
        )

    def scale(self, s: Scalar) -> "AlgebraElement":
        return AlgebraElement(self.algebra, [c * s for c in self.coeffs])

    def __truediv__(self, other: "AlgebraElement") -> "AlgebraElement":
        """Right quotient p/q = p * q^{-1}."""
        return self * other.inv()

    # -- involution, norm, inverse ------------------------------------------

    def conj(self) -> "AlgebraElement":
        return AlgebraElement(self.algebra, (self.coeffs[0],) + tuple(-c for c in self.coeffs[1:]))

    def re(self) -> Scalar:
        return self.coeffs[0]

    def im(self) -> "AlgebraElement":
        zero = self.coeffs[0] - self.coeffs[0]
        return AlgebraElement(self.algebra, (zero,) + self.coeffs[1:])

    def norm_sq(self) -> Scalar:
        return sum(c * c for c in self.coeffs)

    def norm(self) -> float:
        return float(self.norm_sq()) ** 0.5

    def inv(self) -> "AlgebraElement":
        """Multiplicative inverse conj(x) / |x|^2; x * inv(x) = 1 exactly."""
        n = self.norm_sq()
        if not n:
            raise ZeroDivisionError("inverse of zero")
        return self.conj().scale(1 / n if isinstance(n, float) else Fraction(1) / n)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    # -- conversions ---------------------------------------------------------

    def as_float(self) -> "AlgebraElement":
        return AlgebraElement(self.algebra, [float(c) for c in self.coeffs])

    def as_exact(self) -> "AlgebraElement":
        """Exact binary value of a float element (floats are dyadic rationals)."""
        return AlgebraElement(self.algebra, [Fraction(c) for c in self.coeffs])

    # -- housekeeping --------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgebraElement)
            and other.algebra is self.algebra
            and other.backend == self.backend
            and other.coeffs == self.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.algebra.name, self.backend, self.coeffs))

    def __repr__(self) -> str:
        return f"<{format_element(self)}>"


def quotient(p: AlgebraElement, q: AlgebraElement) -> AlgebraElement:
    """The fraction p/q = p * q^{-1}; raises ZeroDivisionError for q = 0."""
    return p / q


def format_element(x: AlgebraElement) -> str:
    """Serialize as ``algebra:c0,c1,...`` with rationals printed num/den.

    Exact round-trips are bit-exact; float coefficients use repr(), which
    round-trips under Python's float parsing.
    """
    parts = []
    for c in x.coeffs:
        if isinstance(c, Fraction):
            parts.append(str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}")
        else:
            parts.append(repr(c))
    return f"{x.algebra.name}:{','.join(parts)}"


def parse_element(text: str) -> AlgebraElement:
    """Inverse of :func:`format_element`. Backend is inferred per token:
    tokens with '.', 'e', 'inf' or 'nan' parse as floats, else as Fractions;
    a mixed line is rejected."""
    name, _, rest = text.strip().partition(":")
    algebra = algebra_by_name(name)
    coeffs: list[Scalar] = []
    for tok in rest.split(","):
        tok = tok.strip()
        if any(ch in tok for ch in ".eE") and "/" not in tok or tok in ("inf", "-inf", "nan"):
            coeffs.append(float(tok))
        else:
            coeffs.append(Fraction(tok))
    return AlgebraElement(algebra, coeffs)


def inversion_identity_gap(x: AlgebraElement, y: AlgebraElement) -> float:
    """Relative error of |x-y| = |1/x - 1/y| |x| |y| (float evaluation)."""
    lhs = (x - y).norm()
    rhs = (x.inv() - y.inv()).norm() * x.norm() * y.norm()
    scale = max(abs(lhs), abs(rhs), 1e-300)
    return abs(lhs - rhs) / scale


def inversion_identity_exact(x: AlgebraElement, y: AlgebraElement) -> bool:
    """Exact squared form |x-y|^2 = |1/x - 1/y|^2 |x|^2 |y|^2 over rationals."""
    x.require_exact()
    y.require_exact()
    lhs = (x - y).norm_sq()
    rhs = (x.inv() - y.inv()).norm_sq() * x.norm_sq() * y.norm_sq()
    return lhs == rhs


def octonion_table_text() -> str:
    """Human/machine readable 8x8 sign table e_i * e_j = +-e_k."""
    lines = ["# Octonion multiplication table: entry (i,j) is e_i * e_j.",
             "# Generated by Cayley-Dickson doubling of H with e4 the doubling unit.",
             ""]
    header = "      " + "".join(f"e{j:<6}" for j in range(8))
    lines.append(header)
    for i in range(8):
        row = [f"e{i}   "]
        for j in range(8):
            s, k = O.table[i][j]
            row.append(f"{'+' if s > 0 else '-'}e{k}".ljust(7))
        lines.append("".join(row))
    lines.append("")
    return "\n".join(lines)
