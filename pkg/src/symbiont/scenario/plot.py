"""Renders the core and Shapley allocations of an ISR game as SVG.

The provider's share runs along the horizontal axis and the receiver's up
the vertical axis. The diagram shows the efficiency line, on which every
allocation of the operational cost lies, the core segment from α to β, the
Shapley point γ, and dashed guides at each firm's traditional cost and U
bound.
"""

##############################################################################
# Backward compatibility.
from __future__ import annotations

##############################################################################
# Python imports.
from dataclasses import dataclass
from fractions import Fraction
from typing import Final, TypeAlias

##############################################################################
# drawsvg imports.
import drawsvg as draw

##############################################################################
# Local imports.
from ..game import (
    Allocation,
    CoreSegment,
    FirmKind,
    IsrGame,
    MismatchedInputs,
    core_segment,
    u_bound,
)

##############################################################################
QUANTUM: Final[Fraction] = Fraction(1, 1000)
"""The step all drawn coordinates are rounded to, in viewbox units."""

DEFAULT_SIZE: Final[int] = 480
"""The default edge length of the square canvas."""

AXIS: Final[str] = "#000000"
"""The colour of the axes and the efficiency line."""

GUIDE: Final[str] = "#888888"
"""The colour of the dashed guides."""

CORE: Final[str] = "#1f6feb"
"""The colour of the core segment and its ends."""

SHAPLEY: Final[str] = "#d1242f"
"""The colour of the Shapley point."""

Point: TypeAlias = tuple[Fraction, Fraction]
"""A point on the canvas, in viewbox units."""


##############################################################################
def quantize(value: Fraction) -> Fraction:
    """Round a coordinate to the drawing quantum.

    Args:
        value: The exact coordinate.

    Returns:
        The nearest multiple of the quantum, ties going to even.
    """
    return round(value / QUANTUM) * QUANTUM


##############################################################################
@dataclass(frozen=True)
class Canvas:
    """Maps utils onto a square canvas."""

    size: int
    """The edge length of the canvas."""
    margin: Fraction
    """The space between the plot area and the canvas edge."""
    scale: Fraction
    """Viewbox units per util."""

    @classmethod
    def for_game(cls, game: IsrGame, size: int) -> Canvas:
        """Create a canvas that fits every cost of a game.

        Args:
            game: The game to fit.
            size: The edge length of the canvas.

        Returns:
            A fresh `Canvas`.
        """
        margin = Fraction(size, 8)
        extent = max(game.t_sigma, game.t_bar_provider, game.t_bar_receiver)
        return cls(size, margin, (size - 2 * margin) / (extent or 1))

    def x(self, value: Fraction) -> Fraction:
        """Map a provider share to a horizontal coordinate."""
        return quantize(self.margin + value * self.scale)

    def y(self, value: Fraction) -> Fraction:
        """Map a receiver share to a vertical coordinate."""
        return quantize(self.size - self.margin - value * self.scale)

    def point(self, allocation: Allocation) -> Point:
        """Map an allocation to a point on the canvas."""
        return self.x(allocation.provider_share), self.y(allocation.receiver_share)


##############################################################################
@dataclass(frozen=True)
class Guide:
    """A dashed guide line at a cost value."""

    label: str
    """The label for the guide."""
    value: Fraction
    """The cost value the guide marks."""
    vertical: bool
    """Does the guide mark a provider share (vertical) or a receiver share?"""


##############################################################################
@dataclass(frozen=True)
class CorePlotGeometry:
    """The canvas geometry of a core plot, quantized but still exact."""

    canvas: Canvas
    """The canvas everything is drawn on."""
    alpha: Point
    """Where α is drawn."""
    beta: Point
    """Where β is drawn."""
    gamma: Point
    """Where γ is drawn."""
    efficiency_start: Point
    """Where the efficiency line meets the vertical axis."""
    efficiency_end: Point
    """Where the efficiency line meets the horizontal axis."""
    guides: tuple[Guide, ...]
    """The guides to draw."""

    @property
    def origin(self) -> Point:
        """Where the axes meet."""
        return self.canvas.x(Fraction(0)), self.canvas.y(Fraction(0))


##############################################################################
def plot_geometry(
    segment: CoreSegment,
    shapley_point: Allocation,
    game: IsrGame,
    size: int = DEFAULT_SIZE,
) -> CorePlotGeometry:
    """Work out the geometry of a core plot.

    Args:
        segment: The core of the game.
        shapley_point: The Shapley allocation of the game.
        game: The game.
        size: The edge length of the square canvas.

    Returns:
        The geometry to draw.

    Raises:
        MismatchedInputs: If the segment isn't the core of the game, or the
            point isn't on the game's efficiency line.
    """
    if segment != core_segment(game):
        raise MismatchedInputs("The core segment is not the core of the game")
    if shapley_point.total != game.t_sigma:
        raise MismatchedInputs(
            f"The point {shapley_point} is not on the efficiency line "
            f"T_A + T_B = {game.t_sigma}"
        )
    canvas = Canvas.for_game(game, size)
    u_provider = u_bound(game, FirmKind.PROVIDER)
    u_receiver = u_bound(game, FirmKind.RECEIVER)
    guides = [
        Guide("T_A(σ̄)", game.t_bar_provider, vertical=True),
        Guide("T_B(σ̄)", game.t_bar_receiver, vertical=False),
    ]
    # Negative bounds fall outside the plot area.
    if u_provider >= 0:
        guides.append(Guide("U_A(σ)", u_provider, vertical=True))
    if u_receiver >= 0:
        guides.append(Guide("U_B(σ)", u_receiver, vertical=False))
    return CorePlotGeometry(
        canvas=canvas,
        alpha=canvas.point(segment.alpha),
        beta=canvas.point(segment.beta),
        gamma=canvas.point(shapley_point),
        efficiency_start=canvas.point(Allocation(Fraction(0), game.t_sigma)),
        efficiency_end=canvas.point(Allocation(game.t_sigma, Fraction(0))),
        guides=tuple(guides),
    )


##############################################################################
def _xy(point: Point) -> tuple[float, float]:
    """Get the drawing coordinates of an already quantized point."""
    return float(point[0]), float(point[1])


##############################################################################
def _line(start: Point, end: Point, colour: str, **style: object) -> draw.Line:
    """Create a line between two canvas points."""
    return draw.Line(*_xy(start), *_xy(end), stroke=colour, **style)


##############################################################################
def _marker(drawing: draw.Drawing, at: Point, label: str, colour: str) -> None:
    """Draw a labelled marker."""
    x, y = _xy(at)
    drawing.append(draw.Circle(x, y, 4, fill=colour))
    drawing.append(
        draw.Text(label, 14, x + 7, y - 7, fill=colour, font_family="serif")
    )


##############################################################################
def render_core_plot(
    segment: CoreSegment,
    shapley_point: Allocation,
    game: IsrGame,
    size: int = DEFAULT_SIZE,
) -> bytes:
    """Render the core and Shapley allocations of a game as SVG.

    Args:
        segment: The core of the game.
        shapley_point: The Shapley allocation of the game.
        game: The game.
        size: The edge length of the square canvas.

    Returns:
        The SVG document as UTF-8 bytes; the same inputs always give the
        same bytes.

    Raises:
        MismatchedInputs: If the inputs don't all belong to the same game.
    """
    geometry = plot_geometry(segment, shapley_point, game, size)
    canvas = geometry.canvas
    origin = geometry.origin
    far = quantize(size - canvas.margin / 2)
    near = quantize(canvas.margin / 2)
    origin_x, origin_y = _xy(origin)

    drawing = draw.Drawing(size, size)
    drawing.append(draw.Rectangle(0, 0, size, size, fill="#ffffff"))

    # Axes.
    drawing.append(_line(origin, (far, origin[1]), AXIS, stroke_width=1.5))
    drawing.append(_line(origin, (origin[0], near), AXIS, stroke_width=1.5))
    drawing.append(
        draw.Text(
            f"A: {game.provider.label}",
            12,
            float(far),
            origin_y + 40,
            text_anchor="end",
        )
    )
    drawing.append(
        draw.Text(f"B: {game.receiver.label}", 12, origin_x + 6, float(near))
    )

    for guide in geometry.guides:
        if guide.vertical:
            x = canvas.x(guide.value)
            drawing.append(
                _line((x, origin[1]), (x, near), GUIDE, stroke_dasharray="4,3")
            )
            drawing.append(
                draw.Text(
                    guide.label, 11, float(x), origin_y + 26, text_anchor="middle"
                )
            )
        else:
            y = canvas.y(guide.value)
            drawing.append(
                _line((origin[0], y), (far, y), GUIDE, stroke_dasharray="4,3")
            )
            drawing.append(
                draw.Text(guide.label, 11, origin_x - 6, float(y) + 4, text_anchor="end")
            )

    # The efficiency line, then the core segment on top of it.
    drawing.append(
        _line(geometry.efficiency_start, geometry.efficiency_end, AXIS, stroke_width=1.5)
    )
    drawing.append(
        draw.Text(
            "T(σ)",
            11,
            origin_x - 6,
            float(geometry.efficiency_start[1]) - 8,
            text_anchor="end",
        )
    )
    drawing.append(
        draw.Text(
            "T(σ)",
            11,
            float(geometry.efficiency_end[0]) + 8,
            origin_y + 14,
            text_anchor="start",
        )
    )
    drawing.append(_line(geometry.alpha, geometry.beta, CORE, stroke_width=5))

    if segment.is_degenerate and shapley_point == segment.alpha:
        _marker(drawing, geometry.gamma, "α = β = γ", SHAPLEY)
    else:
        _marker(drawing, geometry.alpha, "α", CORE)
        _marker(drawing, geometry.beta, "β", CORE)
        _marker(drawing, geometry.gamma, "γ", SHAPLEY)
    return drawing.as_svg().encode("utf-8")


### plot.py ends here
