"""The table of matched objects between the spectral and automorphic sides."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

SPECTRAL_KINDS = ("structure_sheaf", "line_bundle_on_Loc", "O_Delta", "O_component", "O_P1cubed")
AUTOMORPHIC_KINDS = ("Wh", "Eis", "IC", "F", "J_translate")


@dataclass(frozen=True)
class SpectralDescriptor:
    kind: str
    twist: Tuple[int, ...] = ()
    component: Optional[str] = None

    def __post_init__(self):
        if self.kind not in SPECTRAL_KINDS:
            raise ValueError(f"unknown spectral kind {self.kind!r}")
        if not all(isinstance(t, int) for t in self.twist):
            raise ValueError("twists are integers")

    def total_twist(self) -> int:
        return sum(self.twist)

    def __str__(self):
        if self.kind == "structure_sheaf":
            return "O_Loc"
        if self.kind == "line_bundle_on_Loc":
            return "O_Loc({},{},{})".format(*self.twist)
        if self.kind == "O_Delta":
            n = self.twist[0]
            return "O_Δ" if n == 0 else f"O_Δ({n})"
        if self.kind == "O_P1cubed":
            return "O_(P1)^3({},{},{})".format(*self.twist)
        return "O_{}({},{},{})".format(self.component, *self.twist)


@dataclass(frozen=True)
class AutomorphicDescriptor:
    kind: str
    n: Optional[int] = None
    label: Optional[str] = None
    point: Optional[str] = None
    base: Optional["AutomorphicDescriptor"] = None

    def __post_init__(self):
        if self.kind not in AUTOMORPHIC_KINDS:
            raise ValueError(f"unknown automorphic kind {self.kind!r}")

    def __str__(self):
        if self.kind == "Wh":
            return "Wh"
        if self.kind == "Eis":
            return f"Eis_{self.n}"
        if self.kind == "IC":
            return f"IC({self.label})"
        if self.kind == "F":
            return f"F({self.label})"
        return f"J_{self.n}*_{self.point}{self.base}"


@dataclass(frozen=True)
class MatchEntry:
    spectral: SpectralDescriptor
    automorphic: AutomorphicDescriptor
    anchors: Tuple[str, ...]
    checks: Tuple[str, ...] = ()
    declarative: bool = False

    def __post_init__(self):
        if not self.checks and not self.declarative:
            raise ValueError("a row needs an executable check or the declarative flag")

    @property
    def key(self) -> str:
        return f"{self.automorphic} <-> {self.spectral}"


WH = AutomorphicDescriptor("Wh")


def _delta(n: int) -> SpectralDescriptor:
    return SpectralDescriptor("O_Delta", (n,))


def dictionary_table() -> Tuple[MatchEntry, ...]:
    rows = [
        MatchEntry(SpectralDescriptor("structure_sheaf", (0, 0, 0)), WH,
                   ("Whittaker normalisation",), ("aspherical", "parity", "support_labels")),
        MatchEntry(_delta(0), AutomorphicDescriptor("Eis", n=-1),
                   ("Eisenstein matching",), ("eis_rule", "parity", "support_labels", "hom")),
        MatchEntry(_delta(2), AutomorphicDescriptor("Eis", n=1),
                   ("Eisenstein matching",), ("eis_rule", "parity", "support_labels", "hom")),
        MatchEntry(_delta(1), AutomorphicDescriptor("Eis", n=0),
                   ("Eisenstein matching",), ("eis_rule", "parity", "support_labels", "hom")),
        MatchEntry(SpectralDescriptor("O_P1cubed", (-1, -1, -1)),
                   AutomorphicDescriptor("IC", label="c_0(∅)"),
                   ("open point",), ("parity", "sections", "support_labels")),
        MatchEntry(SpectralDescriptor("O_component", (0, 0, -1), "Λ_{0,1}"),
                   AutomorphicDescriptor("IC", label="c_0(0,1)"),
                   ("conormal components",), ("parity", "component_base", "support_labels")),
        MatchEntry(SpectralDescriptor("O_component", (0, -1, 0), "Λ_{0,∞}"),
                   AutomorphicDescriptor("IC", label="c_0(0,∞)"),
                   ("conormal components",), ("parity", "component_base", "support_labels")),
        MatchEntry(SpectralDescriptor("O_component", (-1, 0, 0), "Λ_{1,∞}"),
                   AutomorphicDescriptor("IC", label="c_0(1,∞)"),
                   ("conormal components",), ("parity", "component_base", "support_labels")),
        MatchEntry(SpectralDescriptor("line_bundle_on_Loc", (0, 1, 0)),
                   AutomorphicDescriptor("J_translate", n=1, point="1", base=WH),
                   ("Wakimoto twist",), ("parity", "wakimoto_twist")),
    ]
    return tuple(rows)


def lookup(automorphic: str) -> MatchEntry:
    for row in dictionary_table():
        if str(row.automorphic) == automorphic:
            return row
    raise KeyError(automorphic)


def lookup_spectral(spectral: str) -> MatchEntry:
    for row in dictionary_table():
        if str(row.spectral) == spectral:
            return row
    raise KeyError(spectral)
