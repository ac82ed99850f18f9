"""Delimited-text and binary pixmap output for emanation tables."""

from __future__ import annotations

import colorsys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .assessors import StrutContext
from .atlas import EmanationTable

RGB = tuple[int, int, int]


@dataclass(frozen=True)
class Palette:
    """Colours keyed by signed emanation value.

    Unless overridden, hue runs with magnitude around the colour wheel at
    saturation 0.8; "+" cells get value 1.0 and "-" cells 0.6.  Empty cells
    take ``background``.  ``diagonal``, when set, paints the two long
    diagonals instead of the background.
    """

    background: RGB = (255, 255, 255)
    diagonal: RGB | None = None
    saturation: float = 0.8
    plus_value: float = 1.0
    minus_value: float = 0.6
    overrides: dict[int, RGB] = field(default_factory=dict)

    def color(self, value: int, n: int) -> RGB:
        if value in self.overrides:
            return self.overrides[value]
        magnitude = abs(value)
        if magnitude in self.overrides:
            r, g, b = self.overrides[magnitude]
            if value > 0:
                return (r, g, b)
            k = self.minus_value / self.plus_value
            return (round(r * k), round(g * k), round(b * k))
        hue = (magnitude % (1 << n)) / (1 << n)
        v = self.plus_value if value > 0 else self.minus_value
        return tuple(int(round(c * 255)) for c in colorsys.hsv_to_rgb(hue, self.saturation, v))


def _rgb(text: str) -> RGB:
    parts = [int(p) for p in text.replace(" ", "").split(",")]
    if len(parts) != 3 or not all(0 <= p <= 255 for p in parts):
        raise ValueError(f"expected R,G,B with components in 0..255, got {text!r}")
    return tuple(parts)


def load_palette(path: str | Path) -> Palette:
    """Read ``key=R,G,B`` lines.

    Keys are ``background``, ``diagonal`` or a signed/unsigned emanation
    value (``7``, ``+7``, ``-7``).  Blank lines and ``#`` comments are skipped.
    """
    background, diagonal, overrides = (255, 255, 255), None, {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected key=R,G,B")
        key, value = (s.strip() for s in line.split("=", 1))
        if key == "background":
            background = _rgb(value)
        elif key == "diagonal":
            diagonal = _rgb(value)
        else:
            try:
                number = int(key)
            except ValueError:
                raise ValueError(f"{path}:{lineno}: unknown palette key {key!r}") from None
            # "7" and "+7" both key the magnitude; only "-7" is sign-specific.
            overrides[-abs(number) if key.startswith("-") else abs(number)] = _rgb(value)
    return Palette(background=background, diagonal=diagonal, overrides=overrides)


def to_delimited(table: EmanationTable) -> str:
    lines = ["," + ",".join(str(low) for low in table.lows)]
    for low, row in zip(table.lows, table.cells):
        lines.append(str(low) + "," + ",".join("" if v is None else str(v) for v in row))
    return "\n".join(lines) + "\n"


def parse_delimited(text: str) -> EmanationTable:
    """Inverse of :func:`to_delimited`; N and S are recovered from the headings."""
    rows = text.rstrip("\n").split("\n")
    header = rows[0].split(",")
    if header[0] != "":
        raise ValueError("header must start with an empty corner cell")
    lows = [int(v) for v in header[1:]]
    k = len(lows)
    n = (k + 2).bit_length()
    if k < 6 or (1 << (n - 1)) != k + 2:
        raise ValueError(f"{k} columns is not 2^(N-1) - 2 for any N")
    ctx = StrutContext(n, lows[0] ^ lows[-1])
    row_order = tuple(ctx.assessor(low) for low in lows)
    if len(rows) != k + 1:
        raise ValueError(f"expected {k} data rows, got {len(rows) - 1}")
    cells = []
    for low, line in zip(lows, rows[1:]):
        fields = line.split(",")
        if len(fields) != k + 1 or int(fields[0]) != low:
            raise ValueError(f"malformed row for low index {low}: {line!r}")
        cells.append(tuple(None if f == "" else int(f) for f in fields[1:]))
    return EmanationTable(ctx, row_order, tuple(cells))


def to_pixmap(table: EmanationTable, palette: Palette | None = None, cell_px: int = 1) -> bytes:
    """Binary PPM (P6) image, ``cell_px`` pixels per table cell."""
    if cell_px < 1:
        raise ValueError("cell_px must be at least 1")
    palette = palette or Palette()
    k, n = table.k, table.context.n
    grid = np.empty((k, k, 3), dtype=np.uint8)
    grid[:, :] = palette.background
    for r, row in enumerate(table.cells):
        for c, v in enumerate(row):
            if v is not None:
                grid[r, c] = palette.color(v, n)
            elif palette.diagonal is not None and c in (r, k - 1 - r):
                grid[r, c] = palette.diagonal
    image = np.repeat(np.repeat(grid, cell_px, axis=0), cell_px, axis=1)
    side = k * cell_px
    return f"P6\n{side} {side}\n255\n".encode("ascii") + image.tobytes()


def read_pixmap(data: bytes) -> np.ndarray:
    """Decode a P6 image as written by :func:`to_pixmap` into an (h, w, 3) array."""
    magic, dims, maxval, body = data.split(b"\n", 3)
    if magic != b"P6" or maxval != b"255":
        raise ValueError("not an 8-bit binary PPM")
    w, h = (int(v) for v in dims.split())
    return np.frombuffer(body, dtype=np.uint8).reshape(h, w, 3)


def default_filename(ctx: StrutContext, ext: str = "csv") -> str:
    return f"N{ctx.n:03d}S{ctx.s:03d}.{ext.lstrip('.')}"
