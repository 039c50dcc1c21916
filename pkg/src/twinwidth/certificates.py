"""Replayable proof objects for twin-width upper bounds.

A certificate is a graph plus an ordered list of merges claiming
"this graph has twin-width <= width".  The verifier replays the merges
through the contraction semantics and recomputes every edge color itself;
colors or widths claimed by the certificate text are never trusted.

Text format ("tww-cert v1", one item per line, ``#`` comments allowed)::

    tww-cert v1
    # optional comment lines
    graph <graph6>
    width <d>
    step <left> <right>

where step labels are original vertex indices joined by ``+`` in ascending
order, e.g. ``step 0+3 5``.
"""
from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .graphio import GraphFormatError, emit_graph6, parse_graph6
from .trigraph import Label, Trigraph

Step = tuple[Label, Label]

_VERSION_LINE = "tww-cert v1"

FIXTURE_NAMES = ("ex7", "case15", "case24")


@dataclass
class ContractionCertificate:
    """A graph, a claimed width, and the merge sequence witnessing it."""

    graph6: str
    width: int
    steps: tuple[Step, ...]
    comment: str = ""


@dataclass
class VerificationResult:
    ok: bool
    observed_width: int
    failing_step: int | None = None  # 1-based index of the first bad step
    error: str | None = None  # structural failure, distinct from a width violation


def verify_certificate(cert: ContractionCertificate) -> VerificationResult:
    """Replay the certificate and check every invariant.

    The replay continues past a width violation so ``observed_width`` is
    always the true maximum red degree of the whole sequence; a structural
    failure (a step naming a dead or unknown vertex) stops the replay.
    """
    state = parse_graph6(cert.graph6)
    if cert.width < 0:
        return VerificationResult(False, 0, None, "width must be nonnegative")
    observed = state.max_red_degree()
    failing = None
    for k, (u, v) in enumerate(cert.steps, 1):
        try:
            state = state.contract(u, v)
        except ValueError as exc:
            return VerificationResult(False, observed, k, f"step {k}: {exc}")
        red = state.max_red_degree()
        if red > observed:
            observed = red
        if failing is None and red > cert.width:
            failing = k
    if state.n != 1:
        return VerificationResult(
            False, observed, failing, f"sequence ends with {state.n} vertices, expected 1"
        )
    return VerificationResult(failing is None, observed, failing, None)


def record_certificate(g: Trigraph, steps: tuple[Step, ...], comment: str = "") -> ContractionCertificate:
    """Build a certificate from a solved sequence; width is the replayed maximum."""
    if any(len(label) != 1 for label in g.labels):
        raise ValueError("certificates require an uncontracted source graph")
    g6 = emit_graph6(g)
    state = g
    observed = state.max_red_degree()
    for u, v in steps:
        state = state.contract(u, v)
        observed = max(observed, state.max_red_degree())
    if state.n != 1:
        raise ValueError(f"sequence ends with {state.n} vertices, expected 1")
    norm = tuple((tuple(sorted(u)), tuple(sorted(v))) for u, v in steps)
    return ContractionCertificate(g6, observed, norm, comment)


# -- text serialization ------------------------------------------------------


def _parse_label(token: str, lineno: int) -> Label:
    parts = token.split("+")
    try:
        members = tuple(int(p) for p in parts)
    except ValueError:
        raise GraphFormatError(f"line {lineno}: bad vertex label {token!r}") from None
    if any(m < 0 for m in members):
        raise GraphFormatError(f"line {lineno}: negative vertex index in {token!r}")
    if any(a >= b for a, b in zip(members, members[1:])):
        raise GraphFormatError(f"line {lineno}: label {token!r} must be strictly ascending")
    return members


def read_certificate(text: str) -> ContractionCertificate:
    """Parse tww-cert v1 text; raises GraphFormatError with a line number."""
    graph6: str | None = None
    width: int | None = None
    steps: list[Step] = []
    comments: list[str] = []
    saw_version = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comments.append(line[1:].strip())
            continue
        if not saw_version:
            if line != _VERSION_LINE:
                raise GraphFormatError(f"line {lineno}: expected '{_VERSION_LINE}' header")
            saw_version = True
            continue
        fields = line.split()
        keyword = fields[0]
        if keyword == "graph":
            if graph6 is not None:
                raise GraphFormatError(f"line {lineno}: duplicate graph line")
            if len(fields) != 2:
                raise GraphFormatError(f"line {lineno}: expected 'graph <graph6>'")
            graph6 = fields[1]
        elif keyword == "width":
            if width is not None:
                raise GraphFormatError(f"line {lineno}: duplicate width line")
            if len(fields) != 2:
                raise GraphFormatError(f"line {lineno}: expected 'width <d>'")
            try:
                width = int(fields[1])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: width {fields[1]!r} is not an integer") from None
            if width < 0:
                raise GraphFormatError(f"line {lineno}: width must be nonnegative")
        elif keyword == "step":
            if graph6 is None or width is None:
                raise GraphFormatError(f"line {lineno}: step before graph/width lines")
            if len(fields) != 3:
                raise GraphFormatError(f"line {lineno}: expected 'step <left> <right>'")
            steps.append((_parse_label(fields[1], lineno), _parse_label(fields[2], lineno)))
        else:
            raise GraphFormatError(f"line {lineno}: unknown keyword {keyword!r}")
    if not saw_version:
        raise GraphFormatError("missing 'tww-cert v1' header line")
    if graph6 is None:
        raise GraphFormatError("missing 'graph' line")
    if width is None:
        raise GraphFormatError("missing 'width' line")
    return ContractionCertificate(graph6, width, tuple(steps), "\n".join(comments))


def write_certificate(cert: ContractionCertificate) -> str:
    lines = [_VERSION_LINE]
    if cert.comment:
        lines.extend(f"# {c}".rstrip() for c in cert.comment.splitlines())
    lines.append(f"graph {cert.graph6}")
    lines.append(f"width {cert.width}")
    for u, v in cert.steps:
        lines.append(f"step {'+'.join(map(str, u))} {'+'.join(map(str, v))}")
    return "\n".join(lines) + "\n"


# -- bundled fixtures ---------------------------------------------------------


def fixture_text(name: str) -> str:
    """Raw text of a bundled certificate fixture (see FIXTURE_NAMES)."""
    if name not in FIXTURE_NAMES:
        raise ValueError(f"unknown fixture {name!r} (known: {', '.join(FIXTURE_NAMES)})")
    return resources.files("twinwidth").joinpath(f"fixtures/{name}.cert").read_text()


def load_fixture(name: str) -> ContractionCertificate:
    return read_certificate(fixture_text(name))
