"""Formal Asai / Rankin-Selberg factor products and their unramified values.

Two layers. ``FactorProduct`` is a multiset of L-atoms with a pole calculus
driven by the duality data of the registry. The unramified layer produces
exact ``RationalFunction`` values in Y_v = q_F^{-v} (one per s-variable),
formal character values and ``sqrt_q`` = q_F^{1/2}.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .cuspidal_lines import Registry, TwistedCuspidal, chi_distinguished
from .errors import ParseError, PreconditionError
from .laurent import RationalFunction

SQRT_Q = "sqrt_q"
_RESERVED = re.compile(r"(sqrt_q|Y\d*|Y_\w+)\Z")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


# linear forms

@dataclass(frozen=True, order=True)
class LinearForm:
    """sum c_v * v with rational coefficients, kept sorted and without zeros."""

    terms: tuple[tuple[str, Fraction], ...] = ()

    @classmethod
    def of(cls, coeffs: dict | None = None, **kw) -> "LinearForm":
        d = dict(coeffs or {}, **kw)
        return cls(tuple(sorted((v, Fraction(c)) for v, c in d.items() if Fraction(c) != 0)))

    @classmethod
    def var(cls, name: str = "s") -> "LinearForm":
        return cls.of({name: 1})

    def as_dict(self) -> dict[str, Fraction]:
        return dict(self.terms)

    def __add__(self, other: "LinearForm") -> "LinearForm":
        d = Counter()
        for v, c in self.terms + other.terms:
            d[v] += c
        return LinearForm.of(dict(d))

    def __neg__(self) -> "LinearForm":
        return self.scale(-1)

    def __sub__(self, other: "LinearForm") -> "LinearForm":
        return self + (-other)

    def scale(self, k) -> "LinearForm":
        return LinearForm.of({v: c * Fraction(k) for v, c in self.terms})

    def variables(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self.terms)

    def evaluate(self, point: dict) -> Fraction:
        total = Fraction(0)
        for v, c in self.terms:
            if v not in point:
                raise KeyError(f"no value for variable {v!r}")
            total += c * Fraction(point[v])
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for v, c in self.terms:
            a = abs(c)
            body = v if a == 1 else f"{a}{v}" if a.denominator == 1 else f"({a}){v}"
            sign = "-" if c < 0 else ("+" if parts else "")
            parts.append(sign + body)
        return "".join(parts)


_TERM = re.compile(r"\s*([+-]?)\s*(\d+(?:/\d+)?)?\s*\*?\s*([A-Za-z_][A-Za-z0-9_]*)?\s*")


def parse_affine(text: str) -> tuple[LinearForm, Fraction]:
    """Parse '2s+1', 's1-s2', '-s' into (linear part, constant)."""
    pos, coeffs, const = 0, Counter(), Fraction(0)
    text = text.strip()
    if not text:
        raise ValueError("empty linear form")
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or not (m.group(2) or m.group(3)):
            raise ValueError(f"cannot parse linear form {text!r} at position {pos}")
        if pos and not m.group(1):
            raise ValueError(f"missing operator in {text!r} at position {pos}")
        sign = -1 if m.group(1) == "-" else 1
        c = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(3):
            coeffs[m.group(3)] += sign * c
        else:
            const += sign * c
        pos = m.end()
    return LinearForm.of(dict(coeffs)), const


def affine_str(form: LinearForm, shift) -> str:
    shift = Fraction(shift)
    if not form.terms:
        return str(shift)
    if shift == 0:
        return str(form)
    return f"{form}{'+' if shift > 0 else '-'}{abs(shift)}"


# formal factor algebra

class AtomKind(str, Enum):
    ASAI_PLUS = "AsaiPlus"
    ASAI_MINUS = "AsaiMinus"
    RS = "RS"


@dataclass(frozen=True, order=True)
class CuspSym:
    """A cuspidal symbol eta^eta_pow * base, optionally its contragredient."""

    base: str
    eta_pow: int = 0
    dual: bool = False

    def __post_init__(self):
        object.__setattr__(self, "eta_pow", self.eta_pow % 2)

    def eta_twist(self, m: int = 1) -> "CuspSym":
        return CuspSym(self.base, self.eta_pow + m, self.dual)

    def twisted(self) -> TwistedCuspidal:
        return TwistedCuspidal(self.base, 0, self.eta_pow)

    def __str__(self):
        s = self.base + ("^v" if self.dual else "")
        return ("eta*" + s) if self.eta_pow else s


def _sym(x) -> CuspSym:
    if isinstance(x, CuspSym):
        return x
    if isinstance(x, TwistedCuspidal):
        return CuspSym(x.base, x.eta_pow)
    return CuspSym(str(x))


@dataclass(frozen=True, order=True)
class FactorAtom:
    kind: AtomKind
    arg: tuple[CuspSym, ...]
    form: LinearForm
    shift: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "kind", AtomKind(self.kind))
        object.__setattr__(self, "shift", Fraction(self.shift))
        want = 2 if self.kind is AtomKind.RS else 1
        if len(self.arg) != want:
            raise ValueError(f"{self.kind.value} atoms take {want} symbol(s)")

    @classmethod
    def asai(cls, sign: str, rho, form: LinearForm, shift=0) -> "FactorAtom":
        kind = AtomKind.ASAI_PLUS if sign == "+" else AtomKind.ASAI_MINUS
        return cls(kind, (_sym(rho),), form, Fraction(shift))

    @classmethod
    def rs(cls, left, right, form: LinearForm, shift=0) -> "FactorAtom":
        return cls(AtomKind.RS, (_sym(left), _sym(right)), form, Fraction(shift))

    def value(self, point: dict) -> Fraction:
        return self.form.evaluate(point) + self.shift

    def to_plus(self) -> "FactorAtom":
        """L^-(s, eta^m rho) = L^+(s, eta^{m+1} rho)."""
        if self.kind is AtomKind.ASAI_MINUS:
            return FactorAtom(AtomKind.ASAI_PLUS, (self.arg[0].eta_twist(),), self.form, self.shift)
        return self

    def __str__(self):
        where = affine_str(self.form, self.shift)
        if self.kind is AtomKind.RS:
            return f"L({where}, {self.arg[0]} x {self.arg[1]})"
        sign = "+" if self.kind is AtomKind.ASAI_PLUS else "-"
        return f"L{sign}({where}, {self.arg[0]})"

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "arg": [str(a) for a in self.arg],
                "sForm": str(self.form), "shift": _q(self.shift)}


def _q(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class FactorProduct:
    """A formal product of atoms with integer exponents (canonical: no zero exponents)."""

    __slots__ = ("_atoms",)

    def __init__(self, atoms: Union[dict, Iterable[FactorAtom], None] = None):
        c = Counter()
        if isinstance(atoms, dict):
            for a, e in atoms.items():
                c[a] += int(e)
        elif atoms is not None:
            for a in atoms:
                c[a] += 1
        self._atoms = {a: e for a, e in sorted(c.items()) if e}

    @property
    def atoms(self) -> dict[FactorAtom, int]:
        return dict(self._atoms)

    def __len__(self):
        return len(self._atoms)

    def __iter__(self):
        return iter(self._atoms.items())

    def __mul__(self, other: "FactorProduct") -> "FactorProduct":
        c = Counter(self._atoms)
        for a, e in other._atoms.items():
            c[a] += e
        return FactorProduct(dict(c))

    def inverse(self) -> "FactorProduct":
        return FactorProduct({a: -e for a, e in self._atoms.items()})

    def __truediv__(self, other: "FactorProduct") -> "FactorProduct":
        return self * other.inverse()

    def __pow__(self, k: int) -> "FactorProduct":
        return FactorProduct({a: e * k for a, e in self._atoms.items()})

    def __eq__(self, other):
        return isinstance(other, FactorProduct) and self._atoms == other._atoms

    def __hash__(self):
        return hash(tuple(self._atoms.items()))

    def to_plus(self) -> "FactorProduct":
        c = Counter()
        for a, e in self._atoms.items():
            c[a.to_plus()] += e
        return FactorProduct(dict(c))

    def substitute(self, var: str, form: LinearForm) -> "FactorProduct":
        """Replace the variable ``var`` by ``form`` in every atom."""
        c = Counter()
        for a, e in self._atoms.items():
            d = a.form.as_dict()
            k = d.pop(var, Fraction(0))
            c[FactorAtom(a.kind, a.arg, LinearForm.of(d) + form.scale(k), a.shift)] += e
        return FactorProduct(dict(c))

    def __str__(self):
        if not self._atoms:
            return "1"
        return " * ".join(str(a) if e == 1 else f"{a}^{e}" for a, e in self._atoms.items())

    def __repr__(self):
        return f"FactorProduct({self})"

    def to_json(self) -> list[dict]:
        return [dict(a.to_json(), exp=e) for a, e in self._atoms.items()]


def asai_steinberg_product(rho, k: int, kind: str = "+", form: LinearForm | None = None,
                           shift=0) -> FactorProduct:
    """L^kind(form + shift, St_k(rho)) = prod_i L^kind(form + shift + i, eta^{k-1-i} rho)."""
    if k < 1:
        raise PreconditionError("k must be positive")
    form = form if form is not None else LinearForm.var()
    rho = _sym(rho)
    return FactorProduct([FactorAtom.asai(kind, rho.eta_twist(k - 1 - i), form, Fraction(shift) + i)
                          for i in range(k)])


def asai_gamma(kind: str, rho, k: int, form: LinearForm, shift=0) -> FactorProduct:
    """gamma^kind(form+shift, St_k(rho)) ~ L^kind(1-form-shift, dual) / L^kind(form+shift, St).

    The dual is replaced by St_k(rho) itself: for a conjugate self-dual rho
    the contragredient equals the Galois conjugate, whose Asai factors agree.
    """
    num = asai_steinberg_product(rho, k, kind, -form, 1 - Fraction(shift))
    den = asai_steinberg_product(rho, k, kind, form, shift)
    return num / den


def telescope_gamma_identity(rho, k: int, form: LinearForm | None = None) -> FactorProduct:
    """gamma^+(-s, St_k(rho))^{-1} gamma^-(s, St_k(rho))^{-1}, reduced."""
    form = form if form is not None else LinearForm.var()
    left = asai_gamma("+", rho, k, -form).inverse() * asai_gamma("-", rho, k, form).inverse()
    return left.to_plus()


def telescope_expected(rho, k: int, form: LinearForm | None = None) -> FactorProduct:
    """The four-atom right-hand side of the telescoping identity."""
    form = form if form is not None else LinearForm.var()
    rho = _sym(rho)
    return FactorProduct({
        FactorAtom.asai("+", rho.eta_twist(k), form): 1,
        FactorAtom.asai("+", rho, form, k): -1,
        FactorAtom.asai("+", rho.eta_twist(k + 1), -form): 1,
        FactorAtom.asai("+", rho.eta_twist(), -form, k): -1,
    })


def atom_pole(a: FactorAtom, point: dict, reg: Registry) -> bool:
    if a.value(point) != 0:
        return False
    if a.kind is AtomKind.RS:
        x, y = a.arg
        for sym in a.arg:
            reg[sym.base]  # unknown ids raise
        return x.base == y.base and x.eta_pow == y.eta_pow and x.dual != y.dual
    m = 0 if a.kind is AtomKind.ASAI_PLUS else 1
    return chi_distinguished(a.arg[0].twisted(), m, reg)


def pole_order(p: FactorProduct, point: dict, reg: Registry) -> int:
    """Pole order (negative: zero order) of the product at ``point``."""
    point = {k: Fraction(v) for k, v in point.items()}
    return sum(e for a, e in p if atom_pole(a, point, reg))


# unramified layer

@dataclass(frozen=True)
class Normalization:
    """Residue degree f of E/F and eta(uniformizer of F)."""

    f: int = 2
    eta_uniformizer: int = -1


INERT = Normalization(2, -1)
SPLIT = Normalization(1, 1)


def y_name(var: str) -> str:
    if var == "s":
        return "Y"
    if re.fullmatch(r"s\d+", var):
        return "Y" + var[1:]
    return "Y_" + var


def q_power(e) -> RationalFunction:
    """q_F^e as a power of sqrt_q."""
    e2 = 2 * Fraction(e)
    if e2.denominator != 1:
        raise ValueError(f"q_F^{e} is not a power of sqrt_q")
    return RationalFunction.monomial({SQRT_Q: int(e2)})


def q_minus(form: LinearForm, shift=0) -> RationalFunction:
    """q_F^{-(form + shift)} as a Laurent monomial in the Y variables."""
    powers = {}
    for v, c in form.terms:
        if c.denominator != 1:
            raise ValueError(f"coefficient {c} of {v} is not integral")
        powers[y_name(v)] = int(c)
    return RationalFunction.monomial(powers) * q_power(-Fraction(shift))


def char_value(x) -> RationalFunction:
    """A character value at the uniformizer: a symbol, a rational, or a RationalFunction."""
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, Fraction)):
        if x == 0:
            raise PreconditionError("character values are nonzero")
        return RationalFunction.constant(x)
    text = str(x).strip()
    try:
        q = Fraction(text)
    except ValueError:
        if not _IDENT.match(text) or _RESERVED.match(text):
            raise ParseError(f"bad character symbol {text!r}", 0, ("identifier", "rational")) from None
        return RationalFunction.symbol(text)
    return char_value(q)


def _tate(z: RationalFunction) -> RationalFunction:
    return 1 / (1 - z)


def unramified_asai(chars: Sequence, kind: str = "+", form: LinearForm | None = None,
                    shift=0, norm: Normalization = INERT) -> RationalFunction:
    form = form if form is not None else LinearForm.var()
    vals = [char_value(c) for c in chars]
    y = q_minus(form, shift)
    yf = y ** norm.f
    eps = 1 if kind == "+" else norm.eta_uniformizer
    out = RationalFunction.constant(1)
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            out = out * _tate(vals[i] * vals[j] * yf)
    for v in vals:
        out = out * _tate(eps * v * y)
    return out


def unramified_rs(chars: Sequence, chars2: Sequence, form: LinearForm | None = None,
                  shift=0, norm: Normalization = INERT) -> RationalFunction:
    form = form if form is not None else LinearForm.var()
    x = q_minus(form, shift) ** norm.f
    out = RationalFunction.constant(1)
    for a in chars:
        for b in chars2:
            out = out * _tate(char_value(a) * char_value(b) * x)
    return out
