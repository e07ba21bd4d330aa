"""Abstract cuspidal data, their twists and the distinction predicates.

A cuspidal is only known through its degree, the odd invariant ``l`` and a
duality class. Exponents are kept in un-scaled segment coordinates.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Iterable

from .errors import RegistryError


class Duality(str, Enum):
    DISTINGUISHED = "Distinguished"
    ETA_DISTINGUISHED = "EtaDistinguished"
    NOT_CONJ_SELF_DUAL = "NotConjSelfDual"


@dataclass(frozen=True)
class CuspidalDatum:
    id: str
    degree: int = 1
    l: int = 1
    duality: Duality = Duality.DISTINGUISHED
    dual_partner: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "duality", Duality(self.duality))
        if self.degree < 1:
            raise RegistryError(f"{self.id}: degree must be positive")
        if self.l < 1 or self.l % 2 == 0:
            raise RegistryError(f"{self.id}: l must be a positive odd integer")
        if self.duality is Duality.NOT_CONJ_SELF_DUAL:
            if not self.dual_partner:
                raise RegistryError(f"{self.id}: NotConjSelfDual needs a dualPartner")
        elif self.dual_partner not in (None, self.id):
            raise RegistryError(f"{self.id}: a conjugate self-dual datum has no partner")

    @property
    def self_dual(self) -> bool:
        return self.duality is not Duality.NOT_CONJ_SELF_DUAL


@dataclass(frozen=True, order=True)
class TwistedCuspidal:
    """eta^eta_pow * nu^exponent * base."""

    base: str
    exponent: Fraction = Fraction(0)
    eta_pow: int = 0

    def __post_init__(self):
        object.__setattr__(self, "exponent", Fraction(self.exponent))
        object.__setattr__(self, "eta_pow", self.eta_pow % 2)

    def eta_twist(self, m: int = 1) -> "TwistedCuspidal":
        return TwistedCuspidal(self.base, self.exponent, self.eta_pow + m)

    def nu_twist(self, e) -> "TwistedCuspidal":
        return TwistedCuspidal(self.base, self.exponent + Fraction(e), self.eta_pow)


class Registry:
    """Immutable table of cuspidal data keyed by id."""

    def __init__(self, data: Iterable[CuspidalDatum]):
        table = {}
        for d in data:
            if d.id in table:
                raise RegistryError(f"duplicate cuspidal id {d.id!r}")
            table[d.id] = d
        for d in table.values():
            if d.duality is Duality.NOT_CONJ_SELF_DUAL:
                p = table.get(d.dual_partner)
                if p is None:
                    raise RegistryError(f"{d.id}: unknown dualPartner {d.dual_partner!r}")
                if p.dual_partner != d.id:
                    raise RegistryError(f"{d.id}: dualPartner pairing is not involutive")
                if (p.degree, p.l) != (d.degree, d.l):
                    raise RegistryError(f"{d.id}: partner {p.id} has different degree or l")
        self._table = table

    def __getitem__(self, key: str) -> CuspidalDatum:
        try:
            return self._table[key]
        except KeyError:
            raise RegistryError(f"unknown cuspidal id {key!r}") from None

    def __contains__(self, key) -> bool:
        return key in self._table

    def __iter__(self):
        return iter(sorted(self._table))

    def __len__(self):
        return len(self._table)

    def data(self) -> list[CuspidalDatum]:
        return [self._table[k] for k in sorted(self._table)]

    @classmethod
    def from_records(cls, records: list[dict]) -> "Registry":
        out = []
        for rec in records:
            try:
                out.append(CuspidalDatum(
                    id=str(rec["id"]),
                    degree=int(rec.get("degree", 1)),
                    l=int(rec.get("l", 1)),
                    duality=Duality(rec["duality"]),
                    dual_partner=rec.get("dualPartner"),
                ))
            except (KeyError, ValueError, TypeError) as exc:
                raise RegistryError(f"bad registry record {rec!r}: {exc}") from None
        return cls(out)

    @classmethod
    def from_json(cls, text: str) -> "Registry":
        try:
            records = json.loads(text)
        except json.JSONDecodeError as exc:
            raise RegistryError(f"registry is not valid JSON: {exc}") from None
        if not isinstance(records, list):
            raise RegistryError("registry JSON must be an array of records")
        return cls.from_records(records)

    @classmethod
    def load(cls, path) -> "Registry":
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise RegistryError(f"cannot read registry {path}: {exc}") from None
        return cls.from_json(text)

    def to_records(self) -> list[dict]:
        out = []
        for d in self.data():
            rec = {"id": d.id, "degree": d.degree, "l": d.l, "duality": d.duality.value}
            if d.dual_partner:
                rec["dualPartner"] = d.dual_partner
            out.append(rec)
        return out


def default_registry() -> Registry:
    """Small registry used by the CLI when no --registry is given."""
    return Registry([
        CuspidalDatum("rho", 1, 1, Duality.DISTINGUISHED),
        CuspidalDatum("rhoe", 1, 1, Duality.ETA_DISTINGUISHED),
        CuspidalDatum("rho3", 1, 3, Duality.DISTINGUISHED),
        CuspidalDatum("rhoe3", 1, 3, Duality.ETA_DISTINGUISHED),
        CuspidalDatum("rho1", 1, 1, Duality.NOT_CONJ_SELF_DUAL, "rho2"),
        CuspidalDatum("rho2", 1, 1, Duality.NOT_CONJ_SELF_DUAL, "rho1"),
    ])


def chi_distinguished(c: TwistedCuspidal, m: int, reg: Registry) -> bool:
    """Is eta^m * c distinguished?"""
    datum = reg[c.base]
    if c.exponent != 0 or datum.duality is Duality.NOT_CONJ_SELF_DUAL:
        return False
    parity = (m + c.eta_pow) % 2
    if datum.duality is Duality.DISTINGUISHED:
        return parity == 0
    return parity == 1


def conjugate_dual(c: TwistedCuspidal, reg: Registry) -> TwistedCuspidal:
    datum = reg[c.base]
    base = c.base if datum.self_dual else datum.dual_partner
    return TwistedCuspidal(base, -c.exponent, c.eta_pow)
