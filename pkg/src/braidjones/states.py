"""State enumeration for the two sign conventions of the state models.

A potential assigns a jump j(c) to every crossing and a base color to
every component; together they determine all part-arc colors by walking
each component from its base.  In the (+) convention a strand gains its
jump when passing over and loses it when passing under; the (-)
convention swaps the two.  Cycle relations are exactly the condition
that the colors close up around each component.

A state is n-contributing when every jump, base, and part-arc color
lies in [0, n].  The enumerators anchor the first component: the
closure arc of strand position 0 carries the fixed anchor color.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .diagram import Diagram, UNDER

PLUS = 1
MINUS = -1


@dataclass(frozen=True)
class Potential:
    """Jumps per crossing and one base color per component.

    bases[0] is the color of the first component's closure arc at strand
    position 0; bases[l] for l >= 1 sits on the component's start arc
    (the underpass exit of its base vertex, or its lowest closure arc
    when the component never passes under).
    """

    jumps: tuple[int, ...]
    bases: tuple[int, ...]
    convention: int

    def __post_init__(self) -> None:
        if self.convention not in (PLUS, MINUS):
            raise ValueError("convention must be +1 or -1")


@dataclass(frozen=True)
class StateColors:
    """All derived colors of a potential."""

    arc_colors: dict[int, int]
    i: tuple[int, ...]
    tilde: tuple[int, ...]
    closure: tuple[int, ...]

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self.arc_colors.items()))


def _step_sign(role: str, convention: int) -> int:
    # (+): over gains the jump, under loses it; (-) swaps the roles.
    if role == UNDER:
        return -convention
    return convention


def derive_colors(d: Diagram, p: Potential) -> StateColors:
    """Walk every component from its base and color all part arcs.

    Raises ValueError when the jumps violate a cycle relation, i.e. a
    component's colors fail to close up.
    """
    if len(p.jumps) != d.crossing_count:
        raise ValueError("jump count does not match crossing count")
    if len(p.bases) != d.component_count:
        raise ValueError("base count does not match component count")
    arc_colors: dict[int, int] = {}
    for l, steps in enumerate(d.steps):
        color = p.bases[l]
        arc_colors[d.start_arcs[l]] = color
        for c, role in steps:
            color += _step_sign(role, p.convention) * p.jumps[c]
        if steps and color != p.bases[l]:
            raise ValueError(f"cycle relation violated on component {l}")
        color = p.bases[l]
        for (c, role), arc in zip(d.steps[l], d.arcs[l]):
            arc_colors[arc] = color
            color += _step_sign(role, p.convention) * p.jumps[c]
    i = tuple(arc_colors[cr.under_out] for cr in d.crossings)
    tilde = tuple(arc_colors[cr.over_in] for cr in d.crossings)
    closure = tuple(arc_colors[d.closure_arc(pos)] for pos in range(d.strands))
    return StateColors(arc_colors, i, tilde, closure)


def _checkpoints(
    d: Diagram, base_order: dict[int, int], jump_order: dict[int, int]
) -> dict[int, list[tuple[int, list[tuple[int, int]]]]]:
    """Group arc-color checks by the DFS level that completes them.

    A checkpoint is (component, prefix) where prefix lists the signed
    jumps accumulated before the arc; it fires once its base and every
    prefix jump are assigned.
    """
    ready: dict[int, list[tuple[int, list[tuple[int, int]]]]] = {}
    for l, steps in enumerate(d.steps):
        prefix: list[tuple[int, int]] = []
        for k in range(1, len(steps)):
            c, role = steps[k - 1]
            prefix = prefix + [(c, _step_sign(role, PLUS))]
            level = max(base_order[l], max(jump_order[cc] for cc, _ in prefix))
            ready.setdefault(level, []).append((l, list(prefix)))
    return ready


def enumerate_states(
    d: Diagram,
    n: int,
    convention: int,
    anchor: int = 0,
    fold_free: bool = False,
) -> list[tuple[Potential, StateColors]]:
    """All n-contributing states with the first component anchored.

    Depth-first search assigns base colors in component order and then
    jumps in braid order; a dependent jump (pivot of a cycle relation)
    is computed from earlier jumps when its index comes up.  Every part
    arc's color is checked as soon as the variables it depends on are
    set, pruning the subtree on a color outside [0, n].

    With fold_free the crossing-free non-anchor components keep base 0
    instead of being enumerated; the evaluators account for them in
    closed form.
    """
    if convention not in (PLUS, MINUS):
        raise ValueError("convention must be +1 or -1")
    if not 0 <= anchor <= n:
        return []
    mu = d.component_count
    folded = (
        frozenset(
            l
            for l, cyc in enumerate(d.components)
            if l > 0 and not d.steps[l] and cyc[0] in d.free_positions
        )
        if fold_free
        else frozenset()
    )
    base_order = {0: 0}
    levels: list[tuple[str, int]] = []
    for l in range(1, mu):
        if l in folded:
            base_order[l] = 0
        else:
            base_order[l] = len(levels) + 1
            levels.append(("base", l))
    base_levels = len(levels)
    dependent = dict(d.eliminated_jumps())
    jump_order: dict[int, int] = {}
    for c in range(d.crossing_count):
        jump_order[c] = base_levels + 1 + c
        levels.append(("jump", c))

    # Convention only flips every checkpoint sign uniformly per role,
    # so store (+)-signs and apply the flip at evaluation time.
    flip = 1 if convention == PLUS else -1
    ready = _checkpoints(d, base_order, jump_order)

    bases = [0] * mu
    bases[0] = anchor
    jumps = [0] * d.crossing_count
    out: list[tuple[Potential, StateColors]] = []

    def color_ok(level: int) -> bool:
        for l, prefix in ready.get(level, ()):
            color = bases[l] + flip * sum(s * jumps[c] for c, s in prefix)
            if not 0 <= color <= n:
                return False
        return True

    def dfs(depth: int) -> None:
        if depth == len(levels):
            p = Potential(tuple(jumps), tuple(bases), convention)
            out.append((p, derive_colors(d, p)))
            return
        kind, which = levels[depth]
        if kind == "base":
            for v in range(n + 1):
                bases[which] = v
                if color_ok(depth + 1):
                    dfs(depth + 1)
            bases[which] = 0
            return
        expr = dependent.get(which)
        if expr is not None:
            v = sum(k * jumps[c] for c, k in expr.items())
            if not 0 <= v <= n:
                return
            jumps[which] = v
            if color_ok(depth + 1):
                dfs(depth + 1)
            jumps[which] = 0
            return
        for v in range(n + 1):
            jumps[which] = v
            if color_ok(depth + 1):
                dfs(depth + 1)
        jumps[which] = 0

    if color_ok(0):
        dfs(0)
    return out


def flow_bijection(
    d: Diagram, p: Potential, n: int
) -> tuple[Potential, StateColors]:
    """The matching state of the opposite convention.

    Complementing every color c -> n - c turns a (+)-state into a
    (-)-state with the same jumps and complemented bases, and vice
    versa; contribution values agree state by state.  Note the anchor
    moves: anchor-0 states map onto anchor-n states.
    """
    q = Potential(
        p.jumps,
        tuple(n - b for b in p.bases),
        -p.convention,
    )
    return q, derive_colors(d, q)


def enumerate_z_potentials(d: Diagram, bound: int) -> list[Potential]:
    """All integer potentials within [-bound, bound] satisfying the
    cycle relations, with the first component's base fixed to 0.

    Dependent jumps falling outside the box are dropped.  Used by the
    randomized identity checks, which need arbitrary-sign jumps.
    """
    if bound < 0:
        raise ValueError("bound must be >= 0")
    dependent = dict(d.eliminated_jumps())
    free = [c for c in range(d.crossing_count) if c not in dependent]
    mu = d.component_count
    out: list[Potential] = []
    box = range(-bound, bound + 1)

    def fill_jumps(assigned: dict[int, int]) -> tuple[int, ...] | None:
        jumps = [0] * d.crossing_count
        for c, v in assigned.items():
            jumps[c] = v
        for c in range(d.crossing_count):
            expr = dependent.get(c)
            if expr is None:
                continue
            v = sum(k * jumps[cc] for cc, k in expr.items())
            if abs(v) > bound:
                return None
            jumps[c] = v
        return tuple(jumps)

    def rec_bases(l: int, bases: list[int]) -> Iterator[tuple[int, ...]]:
        if l == mu:
            yield tuple(bases)
            return
        for v in box:
            bases[l] = v
            yield from rec_bases(l + 1, bases)
        bases[l] = 0

    def rec_jumps(k: int, assigned: dict[int, int]) -> Iterator[tuple[int, ...]]:
        if k == len(free):
            jumps = fill_jumps(assigned)
            if jumps is not None:
                yield jumps
            return
        for v in box:
            assigned[free[k]] = v
            yield from rec_jumps(k + 1, assigned)
        assigned.pop(free[k], None)

    for jumps in rec_jumps(0, {}):
        for bases in rec_bases(1, [0] * mu):
            out.append(Potential(jumps, bases, PLUS))
    return out
