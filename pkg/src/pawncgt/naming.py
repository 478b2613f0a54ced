"""Names for canonical values and their text rendering.

Rendering follows the value-expression grammar accepted by
:mod:`pawncgt.expr`, so ``parse_value(format_value(g))`` is equal to ``g``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import kernel as k
from .kernel import Game


def _num(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Integer:
    n: int

    def __str__(self):
        return str(self.n)


@dataclass(frozen=True)
class Dyadic:
    q: Fraction

    def __str__(self):
        return _num(self.q)


@dataclass(frozen=True)
class Nimber:
    k: int

    def __str__(self):
        return "*" if self.k == 1 else f"*{self.k}"


@dataclass(frozen=True)
class UpMultiple:
    n: int
    star: bool = False

    def __str__(self):
        arrow = "^" if self.n > 0 else "v"
        count = abs(self.n)
        s = arrow if count == 1 else f"{count}.{arrow}"
        return s + ("*" if self.star else "")


@dataclass(frozen=True)
class Switch:
    left: Fraction
    right: Fraction

    def __str__(self):
        return "{" + _num(self.left) + "|" + _num(self.right) + "}"


@dataclass(frozen=True)
class Tiny:
    q: Fraction

    def __str__(self):
        return f"Tiny({_num(self.q)})"


@dataclass(frozen=True)
class Miny:
    q: Fraction

    def __str__(self):
        return f"Miny({_num(self.q)})"


@dataclass(frozen=True)
class Unnamed:
    text: str

    def __str__(self):
        return self.text


ValueName = Integer | Dyadic | Nimber | UpMultiple | Switch | Tiny | Miny | Unnamed


@dataclass
class Catalog:
    """Bounds for the families :func:`recognize` knows by name."""

    max_integer: int = 64
    max_exponent: int = 10
    max_nimber: int = 4
    max_ups: int = 8
    max_tiny: Fraction = Fraction(4)

    def __post_init__(self):
        self._named: dict[int, ValueName] | None = None

    def named(self) -> dict[int, ValueName]:
        if self._named is None:
            table: dict[int, ValueName] = {}
            for n in range(2, self.max_nimber + 1):
                table[k.nimber(n).uid] = Nimber(n)
            table[k.STAR.uid] = Nimber(1)
            for n in range(1, self.max_ups + 1):
                for sign in (1, -1):
                    for star in (False, True):
                        table[k.ups(sign * n, star).uid] = UpMultiple(sign * n, star)
            self._named = table
        return self._named

    def number_in_range(self, q: Fraction) -> bool:
        exp = q.denominator.bit_length() - 1
        return abs(q) <= self.max_integer and exp <= self.max_exponent


DEFAULT_CATALOG = Catalog()


def recognize(g: Game, catalog: Catalog = DEFAULT_CATALOG) -> ValueName:
    g = k.canonicalize(g)
    q = g.number
    if q is not None and catalog.number_in_range(q):
        return Integer(int(q)) if q.denominator == 1 else Dyadic(q)
    hit = catalog.named().get(g.uid)
    if hit is not None:
        return hit
    t = _tiny_parameter(g)
    if t is not None and t <= catalog.max_tiny and catalog.number_in_range(t):
        return Tiny(t)
    t = _tiny_parameter(k.neg(g))
    if t is not None and t <= catalog.max_tiny and catalog.number_in_range(t):
        return Miny(t)
    if k.switch_temperature(g) is not None:
        a, b = g.left[0].number, g.right[0].number
        if catalog.number_in_range(a) and catalog.number_in_range(b):
            return Switch(a, b)
    return Unnamed(bracket_string(g, catalog))


def _tiny_parameter(g: Game) -> Fraction | None:
    # canonical tiny-x is {0 || 0 | -x} for a positive number x
    if len(g.left) != 1 or len(g.right) != 1 or g.left[0] is not k.ZERO:
        return None
    r = g.right[0]
    if len(r.left) != 1 or len(r.right) != 1 or r.left[0] is not k.ZERO:
        return None
    x = r.right[0].number
    if x is None or x >= 0:
        return None
    return -x


def bracket_string(g: Game, catalog: Catalog = DEFAULT_CATALOG) -> str:
    """``{L1,L2|R1}`` with every option rendered by :func:`format_value`."""
    g = k.canonicalize(g)
    if g.number is not None:
        return _num(g.number)
    left = sorted(format_value(x, catalog) for x in g.left)
    right = sorted(format_value(x, catalog) for x in g.right)
    return "{" + ",".join(left) + "|" + ",".join(right) + "}"


def format_value(g: Game, catalog: Catalog = DEFAULT_CATALOG) -> str:
    g = k.canonicalize(g)
    if g.number is not None:
        return _num(g.number)
    return str(recognize(g, catalog))


def describe(g: Game) -> str:
    """Short English gloss used by the CLI: "^ (up)", "* (star)" ..."""
    name = recognize(g)
    gloss = {
        Nimber: lambda n: "star" if n.k == 1 else f"nimber {n.k}",
        UpMultiple: lambda n: (
            ("up" if n.n > 0 else "down") if abs(n.n) == 1 else f"{abs(n.n)} {'ups' if n.n > 0 else 'downs'}"
        )
        + (" star" if n.star else ""),
        Tiny: lambda n: f"tiny-{_num(n.q)}",
        Miny: lambda n: f"miny-{_num(n.q)}",
        Switch: lambda n: f"switch, temperature {_num((n.left - n.right) / 2)}",
    }.get(type(name))
    text = str(name)
    return f"{text} ({gloss(name)})" if gloss else text
