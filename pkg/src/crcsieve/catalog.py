"""Built-in catalog of noteworthy CRC generator polynomials.

Each entry records the expected order and cumulative-distance scores for
one polynomial at a fixed set of block lengths.  The
``tables`` CLI command re-derives every value from scratch and flags any
disagreement, which makes the catalog double as a regression suite for
the whole distance pipeline.  A score of None marks lengths beyond the
polynomial's order (rendered as a dash).
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CatalogEntry:
    poly: str  # hex mask
    order: int
    scores: dict[int, int | None]
    note: str = ""


@dataclass(frozen=True)
class CatalogSection:
    name: str
    targets: tuple[int, ...]
    entries: tuple[CatalogEntry, ...]


SHORT_TARGETS = (512,)
FULL_TARGETS = (512, 1024, 2048, 4096, 8192)
MID_TARGETS = (512, 1024, 2048, 4096)

SECTIONS: tuple[CatalogSection, ...] = (
    CatalogSection(
        "11-15",
        SHORT_TARGETS,
        (
            CatalogEntry("93f", 762, {512: 2044}, "best degree 11"),
            CatalogEntry("a0f", 146, {512: None}, "comparison"),
            CatalogEntry("e21", 2047, {512: 1565}, "5G CRC-11"),
            CatalogEntry("1957", 1778, {512: 2056}, "best degree 12"),
            CatalogEntry("1637", 1905, {512: 2054}, "best degree 12, runner-up"),
            CatalogEntry("1421", 2047, {512: 2000}, "comparison"),
            CatalogEntry("299d", 3556, {512: 2078}, "best degree 13"),
            CatalogEntry("3c1f", 8191, {512: 1612}, "comparison"),
            CatalogEntry("6e57", 8190, {512: 2116}, "best degree 14"),
            CatalogEntry("629d", 1016, {512: 2034}, "comparison"),
            CatalogEntry("86ef", 15748, {512: 2138}, "best degree 15"),
            CatalogEntry("9be5", 16383, {512: 2134}, "best degree 15, runner-up"),
            CatalogEntry("c099", 5355, {512: 2044}, "comparison"),
        ),
    ),
    CatalogSection(
        "16",
        FULL_TARGETS,
        (
            CatalogEntry(
                "158ff", 7161,
                {512: 2196, 1024: 4244, 2048: 8340, 4096: 16532, 8192: None},
                "best degree 16 up to M=4096",
            ),
            CatalogEntry(
                "1a2eb", 32767,
                {512: 2196, 1024: 4244, 2048: 8340, 4096: 16532, 8192: 32916},
                "best degree 16",
            ),
            CatalogEntry(
                "11cc3", 1905,
                {512: 2080, 1024: 4128, 2048: None, 4096: None, 8192: None},
                "comparison",
            ),
            CatalogEntry(
                "18005", 32767,
                {512: 1984, 1024: 4032, 2048: 8128, 4096: 16320, 8192: 32704},
                "CRC-16/IBM",
            ),
            CatalogEntry(
                "11021", 32767,
                {512: 1984, 1024: 4032, 2048: 8128, 4096: 16320, 8192: 32704},
                "CRC-16/CCITT",
            ),
        ),
    ),
    CatalogSection(
        "17-19",
        MID_TARGETS,
        (
            CatalogEntry("2ca6d", 57316,
                         {512: 2264, 1024: 4312, 2048: 8408, 4096: 16600}, "best degree 17"),
            CatalogEntry("658d3", 514,
                         {512: 2502, 1024: None, 2048: None, 4096: None},
                         "best degree 18 at M=512"),
            CatalogEntry("446b7", 42966,
                         {512: 2358, 1024: 4406, 2048: 8502, 4096: 16694}, "best degree 18"),
            CatalogEntry("ad0b5", 513,
                         {512: 2994, 1024: None, 2048: None, 4096: None},
                         "best degree 19 at M=512"),
            CatalogEntry("ae975", 1028,
                         {512: 2514, 1024: 4562, 2048: None, 4096: None},
                         "best degree 19 at M=1024"),
            CatalogEntry("c492f", 81915,
                         {512: 2472, 1024: 4520, 2048: 8616, 4096: 16808}, "best degree 19"),
        ),
    ),
    CatalogSection(
        "24",
        FULL_TARGETS,
        (
            CatalogEntry(
                "11175b7", 1195740,
                {512: 3134, 1024: 5330, 2048: 9426, 4096: 17618, 8192: 34002},
                "best degree 24 at M=512",
            ),
            CatalogEntry(
                "15d6dcb", 4094,
                {512: 3116, 1024: 6188, 2048: 12332, 4096: None, 8192: None},
                "FlexRay CRC-24",
            ),
            CatalogEntry(
                "1eb83af", 4098,
                {512: 3014, 1024: 6086, 2048: 12230, 4096: 20426, 8192: None},
                "best degree 24 at M=4096",
            ),
            CatalogEntry(
                "1ce467f", 8355585,
                {512: 3042, 1024: 5708, 2048: 9804, 4096: 17996, 8192: 34380},
                "best degree 24 at M=8192",
            ),
            CatalogEntry(
                "1864cfb", 8388607,
                {512: 3014, 1024: 5120, 2048: 9216, 4096: 17408, 8192: 33792},
                "5G CRC-24A",
            ),
            CatalogEntry(
                "1800063", 8388607,
                {512: 1960, 1024: 4008, 2048: 8104, 4096: 16296, 8192: 32680},
                "5G CRC-24B",
            ),
            CatalogEntry(
                "1b2b017", 1168146,
                {512: 2366, 1024: 4414, 2048: 8510, 4096: 16702, 8192: 33086},
                "5G CRC-24C",
            ),
        ),
    ),
)


@dataclass(frozen=True)
class DistancePointEntry:
    """Spot distances at a handful of short lengths; expected=None means derive only."""

    poly: str
    expected: tuple[int, ...] | None
    note: str = ""


DISTANCE_POINT_LENGTHS = (24, 32, 64, 96, 128)

DISTANCE_POINTS: tuple[DistancePointEntry, ...] = (
    DistancePointEntry("1a2eb", (8, 6, 6, 6, 4), "best degree 16"),
    DistancePointEntry("11cc3", None, "comparison; derived only"),
    DistancePointEntry("18005", (4, 4, 4, 4, 4), "CRC-16/IBM"),
    DistancePointEntry("11021", (4, 4, 4, 4, 4), "CRC-16/CCITT"),
)

SECTION_NAMES = tuple(s.name for s in SECTIONS) + ("distances",)
