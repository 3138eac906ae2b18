"""Published reference values shipped as CSV under ``paper_data/``."""

from __future__ import annotations

import csv
from importlib import resources

TABLES = {
    "friendship-real": "table1_friendship_real.csv",
    "modulus": "table2_modulus.csv",
    "book-real": "table3_book_real.csv",
}


def load_table(name: str) -> dict[int, dict[str, str]]:
    """Rows keyed by n; comment lines starting with '#' are skipped."""
    text = resources.files(__package__).joinpath("paper_data").joinpath(TABLES[name]).read_text()
    lines = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
    return {int(row["n"]): row for row in csv.DictReader(lines)}


def load_floats(name: str) -> dict[int, dict[str, float]]:
    out = {}
    for n, row in load_table(name).items():
        out[n] = {k: float(v) for k, v in row.items() if k not in ("n", "parity")}
    return out
