"""SVG histogram of splitting-pair counts with Poisson markers."""

from typing import List, Mapping, Optional

from landscape.core.theory import poisson_pmf

WIDTH = 480
HEIGHT = 320
MARGIN_LEFT = 56
MARGIN_RIGHT = 16
MARGIN_TOP = 32
MARGIN_BOTTOM = 48
BAR_COLOR = "#4C72B0"
MARKER_COLOR = "#DD8452"


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def render_histogram_svg(histogram: Mapping[int, int], lam: Optional[float], title: str = "") -> str:
    """
    Draw the empirical distribution of Y as bars and Poisson(lam) as dots.

    Args:
        histogram: Count per observed value
        lam: Poisson mean for the markers, or None to omit them
        title: Caption drawn above the plot

    Returns:
        The SVG document as text
    """
    total = sum(histogram.values())
    largest_value = max(list(histogram.keys()) + [4])
    values = list(range(largest_value + 1))

    observed = [histogram.get(value, 0) / total if total else 0.0 for value in values]
    expected = [poisson_pmf(value, lam) for value in values] if lam is not None else []
    top = max(observed + expected + [1e-9])

    plot_width = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_height = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
    slot = plot_width / len(values)
    baseline = MARGIN_TOP + plot_height

    def y_position(probability: float) -> float:
        return baseline - plot_height * probability / top

    parts: List[str] = [
        '<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" viewBox="0 0 %d %d">'
        % (WIDTH, HEIGHT, WIDTH, HEIGHT),
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    if title:
        parts.append(
            '<text x="%d" y="20" font-family="sans-serif" font-size="14" text-anchor="middle">%s</text>'
            % (WIDTH // 2, _escape(title))
        )

    parts.append(
        '<line x1="%d" y1="%.2f" x2="%d" y2="%.2f" stroke="black"/>'
        % (MARGIN_LEFT, baseline, WIDTH - MARGIN_RIGHT, baseline)
    )
    parts.append(
        '<line x1="%d" y1="%d" x2="%d" y2="%.2f" stroke="black"/>' % (MARGIN_LEFT, MARGIN_TOP, MARGIN_LEFT, baseline)
    )
    for tick in range(5):
        probability = top * tick / 4
        tick_y = y_position(probability)
        parts.append(
            '<text x="%d" y="%.2f" font-family="sans-serif" font-size="10" text-anchor="end">%.3f</text>'
            % (MARGIN_LEFT - 4, tick_y + 3, probability)
        )

    for index, value in enumerate(values):
        left = MARGIN_LEFT + index * slot
        bar_top = y_position(observed[index])
        parts.append(
            '<rect x="%.2f" y="%.2f" width="%.2f" height="%.2f" fill="%s"/>'
            % (left + slot * 0.15, bar_top, slot * 0.7, baseline - bar_top, BAR_COLOR)
        )
        parts.append(
            '<text x="%.2f" y="%.2f" font-family="sans-serif" font-size="10" text-anchor="middle">%d</text>'
            % (left + slot / 2, baseline + 14, value)
        )
        if expected:
            parts.append(
                '<circle cx="%.2f" cy="%.2f" r="4" fill="%s"/>'
                % (left + slot / 2, y_position(expected[index]), MARKER_COLOR)
            )

    parts.append(
        '<text x="%.2f" y="%d" font-family="sans-serif" font-size="12" text-anchor="middle">splitting pairs Y</text>'
        % (MARGIN_LEFT + plot_width / 2, HEIGHT - 12)
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
