"""Exact arithmetic on finite (loop-free) combinatorial games.

Every game is an interned node holding tuples of Left and Right options.
Two calls to :func:`make` with the same option sets return the same
object, so structural equality is identity and all memo tables can be
keyed by ``uid``.

Numbers stay inside the same universe of games; each canonical node
carries a derived ``number`` attribute (a dyadic :class:`Fraction`, or
``None``) which the order and sum routines use as a shortcut.
"""

from __future__ import annotations

import enum
import math
import sys
from fractions import Fraction
from typing import Iterable

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


class Game:
    __slots__ = ("left", "right", "uid", "canonical", "number", "_canon")

    def __init__(self, left: tuple, right: tuple, uid: int):
        self.left = left
        self.right = right
        self.uid = uid
        self.canonical = False
        self.number: Fraction | None = None
        self._canon: Game | None = None

    def __hash__(self):
        return self.uid

    def __repr__(self):
        from .naming import format_value

        return f"Game({format_value(self)})"

    # Operators give a compact algebra for tests and scripts.
    def __add__(self, other):
        return add(self, coerce(other))

    def __radd__(self, other):
        return add(coerce(other), self)

    def __neg__(self):
        return neg(self)

    def __sub__(self, other):
        return add(self, neg(coerce(other)))

    def __rsub__(self, other):
        return add(coerce(other), neg(self))

    def __le__(self, other):
        return leq(self, coerce(other))

    def __ge__(self, other):
        return leq(coerce(other), self)

    def __lt__(self, other):
        other = coerce(other)
        return leq(self, other) and not leq(other, self)

    def __gt__(self, other):
        other = coerce(other)
        return leq(other, self) and not leq(self, other)

    @property
    def birthday(self) -> int:
        return _birthday(self)


_table: dict[tuple[tuple[int, ...], tuple[int, ...]], Game] = {}
_leq_memo: dict[tuple[int, int], bool] = {}
_add_memo: dict[tuple[int, int], Game] = {}
_neg_memo: dict[int, Game] = {}
_number_cache: dict[Fraction, Game] = {}
_birthday_memo: dict[int, int] = {}


def _sorted_unique(options: Iterable[Game]) -> tuple[Game, ...]:
    seen = {g.uid: g for g in options}
    return tuple(seen[k] for k in sorted(seen))


def make(left: Iterable[Game] = (), right: Iterable[Game] = ()) -> Game:
    """Return the interned game ``{left | right}`` (no simplification)."""
    lt = _sorted_unique(left)
    rt = _sorted_unique(right)
    key = (tuple(g.uid for g in lt), tuple(g.uid for g in rt))
    g = _table.get(key)
    if g is None:
        g = Game(lt, rt, len(_table))
        _table[key] = g
    return g


def table_size() -> int:
    return len(_table)


# ---------------------------------------------------------------- numbers


def is_dyadic(q: Fraction) -> bool:
    d = q.denominator
    return d & (d - 1) == 0


def _mark(g: Game, number: Fraction | None) -> Game:
    g.canonical = True
    g.number = number
    g._canon = g
    return g


def number(q) -> Game:
    """Canonical game for the dyadic rational ``q``."""
    q = Fraction(q)
    if not is_dyadic(q):
        raise ValueError(f"{q} is not a dyadic rational")
    g = _number_cache.get(q)
    if g is not None:
        return g
    if q.denominator == 1:
        n = int(q)
        step = 1 if n > 0 else -1
        # walk up from the nearest cached integer; long integer chains
        # (the promotion sentinel) must not recurse
        k = 0
        while Fraction(n - step * k) not in _number_cache and n - step * k != 0:
            k += 1
        for m in range(n - step * k, n + step, step):
            if Fraction(m) in _number_cache:
                continue
            prev = _number_cache[Fraction(m - step)]
            g = make([prev], []) if m > 0 else make([], [prev])
            _number_cache[Fraction(m)] = _mark(g, Fraction(m))
        return _number_cache[q]
    half = Fraction(1, q.denominator)
    g = _mark(make([number(q - half)], [number(q + half)]), q)
    _number_cache[q] = g
    return g


_number_cache[Fraction(0)] = _mark(make(), Fraction(0))

ZERO = number(0)
ONE = number(1)


def coerce(x) -> Game:
    if isinstance(x, Game):
        return x
    if isinstance(x, (int, Fraction)):
        return number(x)
    raise TypeError(f"cannot interpret {x!r} as a game")


def simplest_between(lo: Fraction | None, hi: Fraction | None) -> Fraction:
    """Simplest dyadic strictly between ``lo`` and ``hi`` (None = unbounded)."""
    if lo is not None and hi is not None and not lo < hi:
        raise ValueError("empty interval")
    if (lo is None or lo < 0) and (hi is None or hi > 0):
        return Fraction(0)
    if lo is None:
        return Fraction(math.ceil(hi) - 1)
    if hi is None:
        return Fraction(math.floor(lo) + 1)
    if hi <= 0:
        return -simplest_between(-hi, -lo)
    # 0 <= lo < hi
    n = math.floor(lo) + 1
    if n < hi:
        return Fraction(n)
    d = 2
    while True:
        m = math.floor(lo * d) + 1
        if Fraction(m, d) < hi:
            return Fraction(m, d)
        d *= 2


# ---------------------------------------------------------------- order


def leq(g: Game, h: Game) -> bool:
    """G <= H: no Left option of G is >= H and no Right option of H is <= G."""
    if g is h:
        return True
    key = (g.uid, h.uid)
    r = _leq_memo.get(key)
    if r is not None:
        return r
    if g.canonical and h.canonical:
        gn, hn = g.number, h.number
        if gn is not None and hn is not None:
            r = gn <= hn
        elif gn is not None:
            # number translation: x <= H iff no H^R <= x
            r = not any(leq(hr, g) for hr in h.right)
        elif hn is not None:
            r = not any(leq(h, gl) for gl in g.left)
        else:
            r = _leq_generic(g, h)
    else:
        r = _leq_generic(g, h)
    _leq_memo[key] = r
    return r


def _leq_generic(g: Game, h: Game) -> bool:
    for gl in g.left:
        if leq(h, gl):
            return False
    for hr in h.right:
        if leq(hr, g):
            return False
    return True


def eq(g: Game, h: Game) -> bool:
    return g is h or (leq(g, h) and leq(h, g))


def fuzzy(g: Game, h: Game) -> bool:
    return not leq(g, h) and not leq(h, g)


def lt(g: Game, h: Game) -> bool:
    return leq(g, h) and not leq(h, g)


class Outcome(enum.Enum):
    LEFT = "LeftWinsAlways"  # G > 0
    RIGHT = "RightWinsAlways"  # G < 0
    SECOND = "SecondPlayerWins"  # G = 0
    FIRST = "FirstPlayerWins"  # G || 0

    def winner(self, mover: str) -> str:
        """Winner ('Left' or 'Right') when ``mover`` ('Left'/'Right') starts."""
        other = "Right" if mover == "Left" else "Left"
        return {
            Outcome.LEFT: "Left",
            Outcome.RIGHT: "Right",
            Outcome.SECOND: other,
            Outcome.FIRST: mover,
        }[self]


def outcome(g: Game) -> Outcome:
    ge = leq(ZERO, g)
    le = leq(g, ZERO)
    if ge and le:
        return Outcome.SECOND
    if ge:
        return Outcome.LEFT
    if le:
        return Outcome.RIGHT
    return Outcome.FIRST


# ---------------------------------------------------------------- canonical form


def canonicalize(g: Game) -> Game:
    """Remove dominated options and bypass reversible ones until stable."""
    if g._canon is not None:
        return g._canon
    left = [canonicalize(x) for x in g.left]
    right = [canonicalize(x) for x in g.right]
    c = _simplify(left, right)
    g._canon = c
    return c


def _undominated(options: list[Game], better) -> list[Game]:
    opts = _sorted_unique(options)
    keep = []
    for i, x in enumerate(opts):
        if not any(j != i and better(x, y) for j, y in enumerate(opts)):
            keep.append(x)
    return keep


def _simplify(left: list[Game], right: list[Game]) -> Game:
    """Canonical form of ``{left | right}`` whose options are canonical."""
    while True:
        left = _undominated(left, leq)
        right = _undominated(right, lambda x, y: leq(y, x))
        current = make(left, right)
        changed = False
        new_left: list[Game] = []
        for gl in left:
            rev = next((glr for glr in gl.right if leq(glr, current)), None)
            if rev is None:
                new_left.append(gl)
            else:
                new_left.extend(rev.left)
                changed = True
        new_right: list[Game] = []
        for gr in right:
            rev = next((grl for grl in gr.left if leq(current, grl)), None)
            if rev is None:
                new_right.append(gr)
            else:
                new_right.extend(rev.right)
                changed = True
        left, right = new_left, new_right
        if not changed:
            break
    result = make(left, right)
    if not result.canonical:
        _mark(result, _number_view(result))
    return result


def _number_view(g: Game) -> Fraction | None:
    """Dyadic value of a canonical node, if it is a number form."""
    if len(g.left) > 1 or len(g.right) > 1:
        return None
    lo = hi = None
    if g.left:
        lo = g.left[0].number
        if lo is None:
            return None
    if g.right:
        hi = g.right[0].number
        if hi is None:
            return None
    if lo is not None and hi is not None and not lo < hi:
        return None
    return simplest_between(lo, hi)


def canonical_make(left: Iterable[Game], right: Iterable[Game]) -> Game:
    return _simplify([canonicalize(x) for x in left], [canonicalize(x) for x in right])


def number_value(g: Game) -> Fraction | None:
    return canonicalize(g).number


def is_number(g: Game) -> bool:
    return number_value(g) is not None


# ---------------------------------------------------------------- arithmetic


def neg(g: Game) -> Game:
    r = _neg_memo.get(g.uid)
    if r is not None:
        return r
    if g.canonical and g.number is not None:
        r = number(-g.number)
    else:
        r = make([neg(x) for x in g.right], [neg(x) for x in g.left])
        if g.canonical:
            _mark(r, None)
    _neg_memo[g.uid] = r
    _neg_memo[r.uid] = g
    return r


def add(g: Game, h: Game) -> Game:
    """Disjunctive sum, returned in canonical form."""
    g = canonicalize(g)
    h = canonicalize(h)
    if g is ZERO:
        return h
    if h is ZERO:
        return g
    key = (g.uid, h.uid) if g.uid <= h.uid else (h.uid, g.uid)
    r = _add_memo.get(key)
    if r is not None:
        return r
    gn, hn = g.number, h.number
    if gn is not None and hn is not None:
        r = number(gn + hn)
    elif gn is not None:
        # number translation: H + x = {H^L + x | H^R + x}
        r = _simplify([add(x, g) for x in h.left], [add(x, g) for x in h.right])
    elif hn is not None:
        r = _simplify([add(x, h) for x in g.left], [add(x, h) for x in g.right])
    else:
        r = _simplify(
            [add(x, h) for x in g.left] + [add(g, x) for x in h.left],
            [add(x, h) for x in g.right] + [add(g, x) for x in h.right],
        )
    _add_memo[key] = r
    return r


def add_all(games: Iterable[Game]) -> Game:
    total = ZERO
    for x in games:
        total = add(total, x)
    return total


def sub(g: Game, h: Game) -> Game:
    return add(g, neg(h))


def raw_add(g: Game, h: Game) -> Game:
    """Uncanonicalized sum; every option is a componentwise move."""
    return make(
        [raw_add(x, h) for x in g.left] + [raw_add(g, x) for x in h.left],
        [raw_add(x, h) for x in g.right] + [raw_add(g, x) for x in h.right],
    )


def multiply(g: Game, n: int) -> Game:
    """n copies of G (negative n means copies of -G)."""
    base = g if n >= 0 else neg(g)
    total = ZERO
    for _ in range(abs(n)):
        total = add(total, base)
    return total


# ---------------------------------------------------------------- stops, temperature


def stops(g: Game) -> tuple[Fraction, Fraction]:
    g = canonicalize(g)
    return _left_stop(g), _right_stop(g)


def _left_stop(g: Game) -> Fraction:
    if g.number is not None:
        return g.number
    return max(_right_stop(x) for x in g.left)


def _right_stop(g: Game) -> Fraction:
    if g.number is not None:
        return g.number
    return min(_left_stop(x) for x in g.right)


def switch_temperature(g: Game) -> Fraction | None:
    """(a - b)/2 when G equals the switch {a|b} with numbers a > b."""
    g = canonicalize(g)
    if g.number is not None or len(g.left) != 1 or len(g.right) != 1:
        return None
    a, b = g.left[0].number, g.right[0].number
    if a is None or b is None or not a > b:
        return None
    return (a - b) / 2


# ---------------------------------------------------------------- named families


def nimber(k: int) -> Game:
    opts = [ZERO]
    g = ZERO
    for _ in range(k):
        g = canonical_make(opts, opts)
        opts = opts + [g]
    return g


STAR = nimber(1)
UP = canonical_make([ZERO], [STAR])
DOWN = neg(UP)


def ups(n: int, star: bool = False) -> Game:
    g = multiply(UP, n)
    return add(g, STAR) if star else g


def switch(a, b) -> Game:
    return canonical_make([coerce(a)], [coerce(b)])


def tiny(x) -> Game:
    """tiny-x = {0 || 0 | -x}."""
    x = coerce(x)
    return canonical_make([ZERO], [canonical_make([ZERO], [neg(x)])])


def miny(x) -> Game:
    return neg(tiny(x))


def _birthday(g: Game) -> int:
    r = _birthday_memo.get(g.uid)
    if r is None:
        r = 1 + max((_birthday(x) for x in g.left + g.right), default=-1)
        _birthday_memo[g.uid] = r
    return r


def subgames(g: Game) -> list[Game]:
    """All nodes reachable from G (including G), each once."""
    seen: dict[int, Game] = {}
    stack = [g]
    while stack:
        x = stack.pop()
        if x.uid in seen:
            continue
        seen[x.uid] = x
        stack.extend(x.left)
        stack.extend(x.right)
    return list(seen.values())
