"""Provenance-tagged non-effectivity facts and the combined exclusion test.

Some candidate classes are ruled out not by the specialization engine but by
results imported from the literature.  Those rulings are plain data: each
entry names its source, and disabling a source removes every ruling it
contributed.  Nothing here ever claims a class *is* effective; the test is
one-sided.

Shipped defaults:

* CCMO: for n >= 10 there is no abnormal curve with k = 0 and m <= 20
  (Ciliberto-Cioffi-Miranda-Orecchia).
* Dumnicki: the same with m <= 42; shipped disabled because it postdates the
  reference tables this package reproduces.  Read as k = 0 only.
* unique-cubic: for n = 10, C(3,1,0) and C(6,2,-1) are impossible because
  the curve of degree 3m with nine general m-fold points is the unique
  (multiple of the) cubic through the nine points, and it misses the tenth.
* Miranda: C(79,25,0) is not the class of an effective divisor for n = 10
  (R. Miranda, personal communication, by a degeneration method this
  package deliberately does not implement).
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Optional, Union

from .candidates import CandidateTriple
from .effectivity import SpecializationConfig, alpha_lower_bound, semiuniformize
from .lattice import InvalidInput


@dataclass(frozen=True)
class UniformBound:
    """For n >= n_min, no abnormal class with k = 0 and m <= m_max exists."""

    n_min: int
    m_max: int
    source: str

    kind = "uniform_bound"

    def applies(self, c: CandidateTriple) -> bool:
        return c.k == 0 and c.n >= self.n_min and c.m <= self.m_max


@dataclass(frozen=True)
class ExplicitClass:
    """The specific class C(t, m, k) for n points is not effective."""

    n: int
    t: int
    m: int
    k: int
    source: str

    kind = "explicit_class"

    def applies(self, c: CandidateTriple) -> bool:
        return (c.n, c.t, c.m, c.k) == (self.n, self.t, self.m, self.k)


Entry = Union[UniformBound, ExplicitClass]


@dataclass(frozen=True)
class ExclusionDb:
    """Immutable collection of exclusion entries with a source on/off switch."""

    entries: tuple[Entry, ...]
    enabled_sources: frozenset[str]

    def __post_init__(self) -> None:
        for e in self.entries:
            if not e.source:
                raise InvalidInput("every exclusion entry needs a nonempty source")

    def with_sources(self, enable: tuple[str, ...] = (), disable: tuple[str, ...] = ()) -> "ExclusionDb":
        sources = (self.enabled_sources | set(enable)) - set(disable)
        return ExclusionDb(self.entries, frozenset(sources))

    def active_entries(self) -> tuple[Entry, ...]:
        return tuple(e for e in self.entries if e.source in self.enabled_sources)

    def ruling(self, c: CandidateTriple) -> Optional[str]:
        """Source of the first enabled entry declaring c non-effective."""
        for e in self.active_entries():
            if e.applies(c):
                return e.source
        return None

    def to_json_dict(self) -> dict:
        entries = []
        for e in self.entries:
            if isinstance(e, UniformBound):
                entries.append(
                    {"kind": e.kind, "n_min": e.n_min, "m_max": e.m_max, "source": e.source}
                )
            else:
                entries.append(
                    {"kind": e.kind, "n": e.n, "t": e.t, "m": e.m, "k": e.k, "source": e.source}
                )
        return {"entries": entries, "enabled_sources": sorted(self.enabled_sources)}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_json_dict(cls, data: dict) -> "ExclusionDb":
        entries: list[Entry] = []
        for raw in data["entries"]:
            kind = raw.get("kind")
            if kind == "uniform_bound":
                entries.append(
                    UniformBound(n_min=int(raw["n_min"]), m_max=int(raw["m_max"]), source=str(raw["source"]))
                )
            elif kind == "explicit_class":
                entries.append(
                    ExplicitClass(
                        n=int(raw["n"]), t=int(raw["t"]), m=int(raw["m"]), k=int(raw["k"]),
                        source=str(raw["source"]),
                    )
                )
            else:
                raise InvalidInput(f"unknown exclusion entry kind {kind!r}")
        return cls(entries=tuple(entries), enabled_sources=frozenset(data["enabled_sources"]))

    @classmethod
    def from_json(cls, text: str) -> "ExclusionDb":
        return cls.from_json_dict(json.loads(text))

    @classmethod
    def load(cls, path: str) -> "ExclusionDb":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_json(fh.read())

    def save(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_json() + "\n")

    def digest(self) -> str:
        """Stable hash of the database contents, for cache keys."""
        canon = json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canon.encode("utf-8")).hexdigest()[:16]


def default_db() -> ExclusionDb:
    entries: tuple[Entry, ...] = (
        UniformBound(n_min=10, m_max=20, source="CCMO"),
        UniformBound(n_min=10, m_max=42, source="Dumnicki"),
        ExplicitClass(n=10, t=3, m=1, k=0, source="unique-cubic"),
        ExplicitClass(n=10, t=6, m=2, k=-1, source="unique-cubic"),
        ExplicitClass(n=10, t=79, m=25, k=0, source="Miranda"),
    )
    return ExclusionDb(entries=entries, enabled_sources=frozenset({"CCMO", "unique-cubic", "Miranda"}))


@dataclass(frozen=True)
class ExclusionResult:
    excluded: bool
    reason: Optional[str] = None


def is_excluded(
    c: CandidateTriple,
    cfg: SpecializationConfig,
    db: ExclusionDb,
) -> ExclusionResult:
    """One-sided non-effectivity decision for a candidate class.

    Excluded when a database entry applies, or when the candidate's degree
    falls below the certified lower bound for the degree of any curve with
    its multiplicities.  Never claims effectiveness.
    """
    source = db.ruling(c)
    if source is not None:
        return ExclusionResult(True, source)
    bound = alpha_lower_bound(semiuniformize(c.n, c.m, c.k), cfg)
    if c.t < bound:
        return ExclusionResult(True, f"specialization-criterion(d={cfg.d},r={cfg.r})")
    return ExclusionResult(False, None)
