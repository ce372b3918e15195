"""Embedded catalog of formally self-dual code enumerators with printed gains."""
from __future__ import annotations

import csv
import enum
import io
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from ..gf2code import WeightEnumerator, macwilliams, min_distance
from ._data import ENTRIES


class Kind(enum.Enum):
    SD = "sd"
    EFSD = "efsd"
    OFSD = "ofsd"


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    n: int
    k: int
    d: int
    kind: Kind
    source: str
    we: WeightEnumerator
    printed_gain: str
    tb: bool
    erratum: str = ""

    @property
    def expected_gain(self) -> float:
        return float(self.printed_gain)

    @property
    def decimals(self) -> int:
        _, _, frac = self.printed_gain.partition(".")
        return len(frac)


@dataclass(frozen=True)
class TableCell:
    """One gain cell of the comparison table."""

    n: int
    column: Kind
    printed: str
    entry: str | None
    note: str = ""


# Cells whose code has no listed enumerator carry entry=None.
TABLE_I: tuple[TableCell, ...] = (
    TableCell(6, Kind.EFSD, "1", "n6_efsd_d2"),
    TableCell(6, Kind.OFSD, "1.172", "n6_ofsd_d3"),
    TableCell(8, Kind.SD, "1.333", "n8_sd_d4"),
    TableCell(8, Kind.OFSD, "1.282", "n8_ofsd_d3"),
    TableCell(10, Kind.EFSD, "1.455", "n10_efsd_d4"),
    TableCell(10, Kind.OFSD, "1.478", "n10_ofsd_d4"),
    TableCell(12, Kind.SD, "1.6", "n12_sd_d4"),
    TableCell(12, Kind.EFSD, "1.6", "n12_efsd_d4"),
    TableCell(12, Kind.OFSD, "1.657", "n12_ofsd_d4"),
    TableCell(14, Kind.SD, "1.778", "n14_sd_d4"),
    TableCell(14, Kind.EFSD, "1.825", None, "d=4 even fsd enumerator is forced to the sd one (1.778)"),
    TableCell(14, Kind.OFSD, "1.875", "n14_ofsd_d4"),
    TableCell(16, Kind.SD, "2", "n16_sd_d4"),
    TableCell(16, Kind.EFSD, "2.133", "n16_efsd_d4"),
    TableCell(16, Kind.OFSD, "2.141", "n16_ofsd_d5"),
    TableCell(18, Kind.SD, "2.286", "n18_sd_d4"),
    TableCell(18, Kind.EFSD, "2.485", "n18_efsd_d6"),
    TableCell(18, Kind.OFSD, "2.427", "n18_ofsd_d5", "enumerator listing prints 2.424"),
    TableCell(20, Kind.SD, "2.523", "n20_sd_d4"),
    TableCell(20, Kind.EFSD, "2.813", "n20_efsd_d6"),
    TableCell(20, Kind.OFSD, "2.868", "n20_ofsd_d6"),
    TableCell(22, Kind.SD, "3.2", "n22_sd_d6"),
    TableCell(22, Kind.EFSD, "3.2", None, "d=6 even fsd enumerator is forced to the sd one"),
    TableCell(22, Kind.OFSD, "3.335", "n22_ofsd_d7"),
    TableCell(30, Kind.SD, "5.697", "n30_sd_d6"),
    TableCell(30, Kind.EFSD, "5.843", "n30_efsd_d8"),
    TableCell(30, Kind.OFSD, "5.785", "n30_ofsd_d7"),
    TableCell(32, Kind.SD, "6.737", "n32_sd_d8_b"),
    TableCell(32, Kind.EFSD, "6.748", "n32_efsd_d8"),
    TableCell(32, Kind.OFSD, "6.628", "n32_ofsd_d7"),
    TableCell(40, Kind.SD, "12.191", "n40_sd_d8_b"),
    TableCell(40, Kind.EFSD, "12.134", "n40_efsd_d8"),
    TableCell(40, Kind.OFSD, "12.364", "n40_ofsd_d9"),
    TableCell(70, Kind.SD, "127.712", "n70_sd_d12"),
    TableCell(70, Kind.EFSD, "128.073", "n70_efsd_d12"),
    TableCell(70, Kind.OFSD, "128.368", "n70_ofsd_d13"),
)


@lru_cache(maxsize=1)
def _entries() -> tuple[CatalogEntry, ...]:
    out = []
    for name, n, k, d, kind, source, tb, gain, terms, erratum in ENTRIES:
        out.append(
            CatalogEntry(
                name=name,
                n=n,
                k=k,
                d=d,
                kind=Kind(kind),
                source=source,
                we=WeightEnumerator.from_dict(n, dict(terms)),
                printed_gain=gain,
                tb=tb,
                erratum=erratum,
            )
        )
    return tuple(out)


def load_catalog() -> list[CatalogEntry]:
    return list(_entries())


def get_entry(name: str) -> CatalogEntry:
    for e in _entries():
        if e.name == name:
            return e
    raise KeyError(f"no catalog entry named {name!r}")


def names() -> list[str]:
    return [e.name for e in _entries()]


@dataclass(frozen=True)
class EntryCheck:
    name: str
    size_ok: bool
    fsd_ok: bool
    distance_ok: bool
    parity_ok: bool

    @property
    def passed(self) -> bool:
        return self.size_ok and self.fsd_ok and self.distance_ok and self.parity_ok


def check_entry(e: CatalogEntry) -> EntryCheck:
    size_ok = e.we.size == 1 << e.k
    try:
        fsd_ok = size_ok and macwilliams(e.we, e.k) == e.we
    except ValueError:
        fsd_ok = False
    parity_ok = e.we.is_even == (e.kind is not Kind.OFSD)
    return EntryCheck(e.name, size_ok, fsd_ok, min_distance(e.we) == e.d, parity_ok)


def validate_catalog() -> list[EntryCheck]:
    return [check_entry(e) for e in _entries()]


def gain_matches(value: float, printed: str) -> bool:
    """True when value rounds to the printed figure at its printed precision."""
    _, _, frac = printed.partition(".")
    return f"{value:.{len(frac)}f}" == printed


# Text mirror: one enumerator file per entry plus a manifest.

MANIFEST_FIELDS = ("name", "n", "k", "d", "kind", "source", "tb", "printed_gain", "erratum")


def mirror_files() -> dict[str, str]:
    files = {}
    manifest = io.StringIO()
    writer = csv.writer(manifest, lineterminator="\n")
    writer.writerow(MANIFEST_FIELDS)
    for e in _entries():
        files[f"{e.name}.txt"] = f"# n={e.n}\n" + e.we.to_text()
        writer.writerow(
            [e.name, e.n, e.k, e.d, e.kind.value, e.source, int(e.tb), e.printed_gain, e.erratum]
        )
    files["manifest.csv"] = manifest.getvalue()
    return files


def write_mirror(directory: Path) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    for fname, text in mirror_files().items():
        (directory / fname).write_text(text)


def load_mirror(directory: Path | None = None) -> list[CatalogEntry]:
    """Read entries back from a text mirror (the packaged one by default)."""
    root = resources.files(__package__) / "mirror" if directory is None else directory
    manifest = (root / "manifest.csv").read_text()
    out = []
    for row in csv.DictReader(io.StringIO(manifest)):
        n = int(row["n"])
        we = WeightEnumerator.from_text((root / f"{row['name']}.txt").read_text(), n=n)
        out.append(
            CatalogEntry(
                name=row["name"],
                n=n,
                k=int(row["k"]),
                d=int(row["d"]),
                kind=Kind(row["kind"]),
                source=row["source"],
                we=we,
                printed_gain=row["printed_gain"],
                tb=bool(int(row["tb"])),
                erratum=row["erratum"],
            )
        )
    return out
