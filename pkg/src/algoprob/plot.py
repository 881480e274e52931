"""Rank-pairing diagram: two ranked word columns joined by one line per word."""
from __future__ import annotations

from xml.sax.saxutils import escape

from .comparison import ComparisonReport

ROW = 18
TOP = 50
LEFT_X = 110
RIGHT_X = 390
WIDTH = 500


def pairing_svg(report: ComparisonReport, left_title: str = "left", right_title: str = "right") -> str:
    n = len(report.pairing)
    height = TOP + ROW * n + 30
    y = lambda r: TOP + ROW * (r - 1)  # noqa: E731
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{height}" '
        f'viewBox="0 0 {WIDTH} {height}" font-family="monospace" font-size="12">',
        f'<text x="{LEFT_X}" y="20" text-anchor="end">{escape(left_title)}</text>',
        f'<text x="{RIGHT_X}" y="20">{escape(right_title)}</text>',
    ]
    for p in report.pairing:
        y1, y2 = y(p.rank_left), y(p.rank_right)
        w = escape(p.word)
        out.append(f'<text x="{LEFT_X - 6}" y="{y1 + 4}" text-anchor="end">{w}</text>')
        out.append(f'<text x="{RIGHT_X + 6}" y="{y2 + 4}">{w}</text>')
        out.append(
            f'<polyline fill="none" stroke="black" stroke-width="1" '
            f'points="{LEFT_X},{y1} {RIGHT_X},{y2}"><title>{w}</title></polyline>'
        )
    rho = "nan" if report.spearman_rho != report.spearman_rho else f"{report.spearman_rho:.4f}"
    out.append(
        f'<text x="{WIDTH // 2}" y="{height - 10}" text-anchor="middle">'
        f"rho={rho} crossings={report.crossings}</text>"
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"
