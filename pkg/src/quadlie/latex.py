"""LaTeX emission of multiplication tables in three-column alignat layout.

Cells look like "[e_1,e_2] & = e^*_3" and are chained with ",\\qquad & ";
rows close with ", \\\\" and the final cell with ".". With a split at n,
labels above n render as starred duals, matching the hyperbolic basis
e_1..e_n, e_1*..e_n*.
"""
from __future__ import annotations

from fractions import Fraction

from .algebra import LieAlgebra


def _label(k: int, split: int | None) -> str:
    if split is not None and k > split:
        s = k - split
        return f"e^*_{s}" if s < 10 else f"e^*_{{{s}}}"
    return f"e_{k}" if k < 10 else f"e_{{{k}}}"


def _coef(c: Fraction) -> str:
    """Multiplier text without sign: '' for 1, '\\tfrac{p}{q}' otherwise."""
    c = abs(c)
    if c == 1:
        return ""
    if c.denominator == 1:
        return str(c.numerator)
    return f"\\tfrac{{{c.numerator}}}{{{c.denominator}}}"


def _value(v, split: int | None) -> str:
    parts = []
    for k, c in enumerate(v, start=1):
        if not c:
            continue
        text = _coef(c) + _label(k, split)
        if not parts:
            parts.append(("-" if c < 0 else "") + text)
        else:
            parts.append((" - " if c < 0 else " + ") + text)
    return "".join(parts) if parts else "0"


def latex_table(alg: LieAlgebra, split: int | None = None,
                columns: int = 3) -> str:
    """The alignat* multiplication table of all nonzero basis brackets."""
    cells = [f"[{_label(i, split)},{_label(j, split)}] & = "
             f"{_value(v, split)}"
             for (i, j), v in sorted(alg.brackets.items())]
    if not cells:
        return "% empty multiplication table\n"
    lines = [f"\\begin{{alignat*}}{{{columns}}}"]
    for start in range(0, len(cells), columns):
        row = cells[start:start + columns]
        last_row = start + columns >= len(cells)
        line = ",\\qquad & ".join(row)
        lines.append(line + ("." if last_row else ", \\\\"))
    lines.append("\\end{alignat*}")
    return "\n".join(lines) + "\n"
