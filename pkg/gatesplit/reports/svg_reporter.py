"""SVG scatter plot of per-sample fidelities."""

import html
from pathlib import Path
from typing import List, Optional, Sequence

from ..utils.logging import get_logger

WIDTH = 800
HEIGHT = 600
MARGIN_LEFT = 70
MARGIN_RIGHT = 30
MARGIN_TOP = 50
MARGIN_BOTTOM = 60


class SVGReporter:
    """
    Standalone SVG scatter: x = sample index, y = fidelity in [0, 1], with a
    dashed horizontal rule at the gate-level lower bound.

    The file references no external resources (no fonts, scripts or links).
    """

    @staticmethod
    def render(
        fidelities: Sequence[float],
        bound: float,
        title: str = "State fidelity per sample"
    ) -> str:
        """Return the SVG document as a string."""
        plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
        plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
        n = len(fidelities)
        span = max(n - 1, 1)

        def sx(i: int) -> float:
            return MARGIN_LEFT + plot_w * i / span

        def sy(value: float) -> float:
            return MARGIN_TOP + plot_h * (1.0 - min(max(value, 0.0), 1.0))

        points = '\n'.join(
            f'    <circle cx="{sx(i):.2f}" cy="{sy(v):.2f}" r="2" />'
            for i, v in enumerate(fidelities)
        )
        ticks = SVGReporter._y_ticks(sy)
        bound_y = sy(bound)
        x_axis_y = MARGIN_TOP + plot_h

        return f'''<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">
  <rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white" />
  <text x="{WIDTH / 2:.0f}" y="28" text-anchor="middle" font-family="sans-serif" font-size="18">{html.escape(title)}</text>
  <g stroke="black" stroke-width="1">
    <line x1="{MARGIN_LEFT}" y1="{MARGIN_TOP}" x2="{MARGIN_LEFT}" y2="{x_axis_y}" />
    <line x1="{MARGIN_LEFT}" y1="{x_axis_y}" x2="{WIDTH - MARGIN_RIGHT}" y2="{x_axis_y}" />
  </g>
{ticks}
  <text x="{WIDTH / 2:.0f}" y="{HEIGHT - 15}" text-anchor="middle" font-family="sans-serif" font-size="14">sample index (n = {n})</text>
  <text x="20" y="{HEIGHT / 2:.0f}" text-anchor="middle" font-family="sans-serif" font-size="14" transform="rotate(-90 20 {HEIGHT / 2:.0f})">fidelity</text>
  <g id="samples" fill="steelblue">
{points}
  </g>
  <line id="bound" x1="{MARGIN_LEFT}" y1="{bound_y:.2f}" x2="{WIDTH - MARGIN_RIGHT}" y2="{bound_y:.2f}" stroke="crimson" stroke-width="1.5" stroke-dasharray="6 4" />
  <text x="{WIDTH - MARGIN_RIGHT}" y="{bound_y - 6:.2f}" text-anchor="end" font-family="sans-serif" font-size="12" fill="crimson">F_min = {bound:.4f}</text>
</svg>
'''

    @staticmethod
    def _y_ticks(sy) -> str:
        lines: List[str] = []
        for k in range(6):
            value = k / 5
            y = sy(value)
            lines.append(
                f'  <line x1="{MARGIN_LEFT - 5}" y1="{y:.2f}" x2="{MARGIN_LEFT}" y2="{y:.2f}" stroke="black" />'
            )
            lines.append(
                f'  <text x="{MARGIN_LEFT - 8}" y="{y + 4:.2f}" text-anchor="end" '
                f'font-family="sans-serif" font-size="12">{value:.1f}</text>'
            )
        return '\n'.join(lines)

    @staticmethod
    def generate(
        fidelities: Sequence[float],
        bound: float,
        output_path: Optional[Path] = None,
        title: str = "State fidelity per sample"
    ) -> Path:
        """
        Write the scatter plot.

        Returns:
            Path to generated SVG
        """
        if output_path is None:
            output_path = Path.cwd() / 'fidelity_samples.svg'
        output_path = Path(output_path)

        output_path.parent.mkdir(parents=True, exist_ok=True)
        with open(output_path, 'w', encoding='utf-8') as f:
            f.write(SVGReporter.render(fidelities, bound, title))

        get_logger().success(f"SVG report: {output_path}")
        return output_path
