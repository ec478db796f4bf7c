"""Reference l=2 generator matrices, stored entry for entry.

``rN`` stands for sqrt(N).  Rows and columns follow the basis
order: (0,0) states by descending R eigenvalue, then (0,1), (1,0), (1,1).
"""
from __future__ import annotations

from .matrix import Matrix, parse_matrix

TEN = {
    "L+": """
0 -r2 0 0 0 0 0 0 0 0
0 0 -r2 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0
0 0 0 0 -1 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 -1 0 0 0
0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 -r2 0
0 0 0 0 0 0 0 0 0 -r2
0 0 0 0 0 0 0 0 0 0
""",
    "L-": """
0 0 0 0 0 0 0 0 0 0
r2 0 0 0 0 0 0 0 0 0
0 r2 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0
0 0 0 1 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 1 0 0 0 0
0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 r2 0 0
0 0 0 0 0 0 0 0 r2 0
""",
    "a+": """
0 0 0 2 0 0 0 0 0 0
0 0 0 0 r2 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0
0 -r2 0 0 0 0 0 0 0 0
0 0 -2 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 -r2 0
0 0 0 0 0 0 0 0 0 -2
0 0 0 0 0 2 0 0 0 0
0 0 0 0 0 0 r2 0 0 0
0 0 0 0 0 0 0 0 0 0
""",
    "a-": """
0 0 0 0 0 0 0 0 0 0
0 0 0 r2 0 0 0 0 0 0
0 0 0 0 2 0 0 0 0 0
2 0 0 0 0 0 0 0 0 0
0 r2 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 2 0 0
0 0 0 0 0 0 0 0 r2 0
0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 r2 0 0 0 0
0 0 0 0 0 0 2 0 0 0
""",
    "ã+": """
0 0 0 0 0 2 0 0 0 0
0 0 0 0 0 0 r2 0 0 0
0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 r2 0
0 0 0 0 0 0 0 0 0 2
0 r2 0 0 0 0 0 0 0 0
0 0 2 0 0 0 0 0 0 0
0 0 0 2 0 0 0 0 0 0
0 0 0 0 r2 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0
""",
    "ã-": """
0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 -r2 0 0 0 0
0 0 0 0 0 0 -2 0 0 0
0 0 0 0 0 0 0 2 0 0
0 0 0 0 0 0 0 0 r2 0
2 0 0 0 0 0 0 0 0 0
0 r2 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0
0 0 0 -r2 0 0 0 0 0 0
0 0 0 0 -2 0 0 0 0 0
""",
    "R": """
2 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0
0 0 -2 0 0 0 0 0 0 0
0 0 0 1 0 0 0 0 0 0
0 0 0 0 -1 0 0 0 0 0
0 0 0 0 0 1 0 0 0 0
0 0 0 0 0 0 -1 0 0 0
0 0 0 0 0 0 0 2 0 0
0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 -2
""",
    "R̃": """
0 0 0 0 0 0 0 2 0 0
0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 -2
0 0 0 0 0 -1 0 0 0 0
0 0 0 0 0 0 1 0 0 0
0 0 0 -1 0 0 0 0 0 0
0 0 0 0 1 0 0 0 0 0
2 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0
0 0 -2 0 0 0 0 0 0 0
""",
    "L̃+": """
0 0 0 0 0 0 0 0 -r2 0
0 0 0 0 0 0 0 0 0 -r2
0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 1 0 0 0
0 0 0 0 0 0 0 0 0 0
0 0 0 0 1 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0
0 -r2 0 0 0 0 0 0 0 0
0 0 -r2 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0
""",
    "L̃-": """
0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 r2 0 0
0 0 0 0 0 0 0 0 r2 0
0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 -1 0 0 0 0
0 0 0 0 0 0 0 0 0 0
0 0 0 -1 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0
r2 0 0 0 0 0 0 0 0 0
0 r2 0 0 0 0 0 0 0 0
""",
}

EIGHT = {
    "L+": """
0 -r2 0 0 0 0 0 0
0 0 -r2 0 0 0 0 0
0 0 0 0 0 0 0 0
0 0 0 0 -1 0 0 0
0 0 0 0 0 0 0 0
0 0 0 0 0 0 -1 0
0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0
""",
    "L-": """
0 0 0 0 0 0 0 0
r2 0 0 0 0 0 0 0
0 r2 0 0 0 0 0 0
0 0 0 0 0 0 0 0
0 0 0 1 0 0 0 0
0 0 0 0 0 0 0 0
0 0 0 0 0 1 0 0
0 0 0 0 0 0 0 0
""",
    "a+": """
0 0 0 2 0 0 0 0
0 0 0 0 r2 0 0 0
0 0 0 0 0 0 0 0
0 -r2 0 0 0 0 0 0
0 0 -2 0 0 0 0 0
0 0 0 0 0 0 0 r2
0 0 0 0 0 0 0 0
0 0 0 0 0 0 -r2 0
""",
    "a-": """
0 0 0 0 0 0 0 0
0 0 0 r2 0 0 0 0
0 0 0 0 2 0 0 0
2 0 0 0 0 0 0 0
0 r2 0 0 0 0 0 0
0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 r2
0 0 0 0 0 r2 0 0
""",
    "ã+": """
0 0 0 0 0 2 0 0
0 0 0 0 0 0 r2 0
0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 r2
0 0 0 0 0 0 0 0
0 r2 0 0 0 0 0 0
0 0 2 0 0 0 0 0
0 0 0 0 r2 0 0 0
""",
    "ã-": """
0 0 0 0 0 0 0 0
0 0 0 0 0 -r2 0 0
0 0 0 0 0 0 -2 0
0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 -r2
2 0 0 0 0 0 0 0
0 r2 0 0 0 0 0 0
0 0 0 r2 0 0 0 0
""",
    "R": """
2 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0
0 0 -2 0 0 0 0 0
0 0 0 1 0 0 0 0
0 0 0 0 -1 0 0 0
0 0 0 0 0 1 0 0
0 0 0 0 0 0 -1 0
0 0 0 0 0 0 0 0
""",
    "R̃": """
0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0
0 0 0 0 0 1 0 0
0 0 0 0 0 0 1 0
0 0 0 -1 0 0 0 0
0 0 0 0 -1 0 0 0
0 0 0 0 0 0 0 0
""",
}


def embedded_matrices(version: str) -> dict[str, Matrix]:
    table = {"ten": TEN, "eight": EIGHT}.get(version)
    if table is None:
        raise ValueError(f"no embedded data for {version!r}")
    return {name: parse_matrix(block) for name, block in table.items()}
