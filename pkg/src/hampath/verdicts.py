"""Shared result types: verdicts, obstacle certificates, class gates."""

from __future__ import annotations

from dataclasses import dataclass

from .connectivity import is_connected
from .graph import Graph
from .independence import classify

__all__ = ["Obstacle", "Verdict", "WrongClassError", "require_instance"]


class WrongClassError(ValueError):
    """Input outside the theorem's class (independence too large, or disconnected)."""


@dataclass(frozen=True)
class Obstacle:
    """A named violated condition plus the vertices and cut facts behind it.

    ``vertices`` carries the witnesses in the order the kind documents;
    ``cut``/``components`` record the disconnection that certifies the claim.
    Obstacles re-validate from scratch via the connectivity primitives.
    """

    kind: str
    vertices: tuple[int, ...] = ()
    cut: tuple[int, ...] | None = None
    components: tuple[tuple[int, ...], ...] | None = None


@dataclass(frozen=True)
class Verdict:
    """Yes with a witness (path or cover), or No with an obstacle."""

    yes: bool
    path: tuple[int, ...] | None = None
    cover: tuple[tuple[int, ...], ...] | None = None
    obstacle: Obstacle | None = None

    def __bool__(self) -> bool:
        return self.yes


def yes_path(path) -> Verdict:
    return Verdict(yes=True, path=tuple(path))


def yes_cover(cover) -> Verdict:
    return Verdict(yes=True, cover=tuple(tuple(p) for p in cover))


def no(obstacle: Obstacle, cover=None) -> Verdict:
    return Verdict(
        yes=False,
        obstacle=obstacle,
        cover=None if cover is None else tuple(tuple(p) for p in cover),
    )


def require_instance(g: Graph, k: int, connected: bool = True) -> None:
    """Gate: reject empty, disconnected (unless allowed) or out-of-class input."""
    if g.n < 1:
        raise WrongClassError("decision operations require a nonempty graph")
    if connected and not g.cached("connected", lambda: is_connected(g)):
        raise WrongClassError("decision operations require a connected graph")
    label = g.cached("classlabel", lambda: classify(g))
    if not label.admits(k):
        raise WrongClassError(
            f"graph is not {k}K1-free (found independent set of size {label.alpha})"
        )
