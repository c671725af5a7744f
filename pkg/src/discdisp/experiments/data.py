"""Swimbladder-nematode larva counts in European eels (two sample pairs).

Each table maps a larva count ``k`` to the number of eels with ``k`` larvae.
"""

from ..dist import DiscreteDist, from_samples

# River Sauer (n=28) vs IJsselmeer (n=50)
TABLE1_VALUES = (0, 1, 2, 3, 4, 5, 6, 7, 9, 10, 11, 12, 19, 20, 48)
TABLE1_H1 = (15, 5, 4, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0)
TABLE1_H2 = (17, 7, 7, 3, 3, 1, 4, 1, 1, 1, 1, 1, 1, 1, 1)

# Rhine near Arnhem (n=43) vs Rhine near Sulzbach (n=100)
TABLE2_VALUES = (0, 1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 12)
TABLE2_H1 = (32, 8, 1, 2, 0, 0, 0, 0, 0, 0, 0, 0)
TABLE2_H2 = (61, 16, 10, 1, 2, 1, 1, 1, 2, 2, 2, 1)


def table1() -> tuple:
    """Empirical laws ``(p, q)`` of the first sample pair."""
    return (from_samples(zip(TABLE1_VALUES, TABLE1_H1), label="table1 sample 1"),
            from_samples(zip(TABLE1_VALUES, TABLE1_H2), label="table1 sample 2"))


def table2() -> tuple:
    return (from_samples(zip(TABLE2_VALUES, TABLE2_H1), label="table2 sample 1"),
            from_samples(zip(TABLE2_VALUES, TABLE2_H2), label="table2 sample 2"))


def counts_csv(values, counts) -> str:
    rows = ["value,count"] + [f"{v},{c}" for v, c in zip(values, counts)]
    return "\n".join(rows) + "\n"


__all__ = [
    "TABLE1_VALUES", "TABLE1_H1", "TABLE1_H2",
    "TABLE2_VALUES", "TABLE2_H1", "TABLE2_H2",
    "table1", "table2", "counts_csv", "DiscreteDist",
]
