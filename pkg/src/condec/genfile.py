"""Line-oriented textual generator format and DOT export.

Grammar (one directive per line, ``#`` starts a comment, blank lines are
ignored; sections appear in this order)::

    generator NAME
    alphabet e1 e2 ...
    states s1 s2 ...
    initial s
    marked [s1 ...]
    trans SRC EVENT DST

Parsing is strict: every name must be declared before use, a duplicated
``(src, event)`` pair is an error, and tilde-tagged events (rendered
``~e``) are accepted only when explicitly enabled, since user input must
be tilde-free.  Serialization is canonical, so parse-serialize round
trips are byte-stable.
"""

from __future__ import annotations

from typing import Optional, Union

from .events import Alphabet, Event
from .generator import Generator


class ParseError(ValueError):
    """Syntax or consistency error in a generator file, with its line."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _tokens(text: str) -> list[tuple[int, list[str]]]:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            rows.append((lineno, body.split()))
    return rows


def parse_gen(data: Union[bytes, str], allow_tilde: bool = False) -> Generator:
    """Parse the textual format into a generator."""
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    rows = _tokens(text)
    pos = 0

    def expect(keyword: str, exactly: Optional[int] = None) -> tuple[int, list[str]]:
        nonlocal pos
        if pos >= len(rows):
            raise ParseError(f"missing '{keyword}' section", rows[-1][0] if rows else 1)
        lineno, toks = rows[pos]
        if toks[0] != keyword:
            raise ParseError(f"expected '{keyword}', found '{toks[0]}'", lineno)
        if exactly is not None and len(toks) - 1 != exactly:
            raise ParseError(
                f"'{keyword}' takes exactly {exactly} argument(s), found {len(toks) - 1}",
                lineno,
            )
        pos += 1
        return lineno, toks[1:]

    def parse_event(tok: str, lineno: int) -> Event:
        try:
            e = Event.of(tok)
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
        if e.tilde and not allow_tilde:
            raise ParseError(
                f"tilde event '{tok}' is not allowed in user input", lineno
            )
        return e

    _, name_toks = expect("generator", exactly=1)
    name = name_toks[0]

    lineno, alpha_toks = expect("alphabet")
    events = []
    for tok in alpha_toks:
        e = parse_event(tok, lineno)
        if e in events:
            raise ParseError(f"duplicate alphabet event '{tok}'", lineno)
        events.append(e)
    alphabet = Alphabet(events)

    lineno, state_toks = expect("states")
    if not state_toks:
        raise ParseError("at least one state is required", lineno)
    if len(set(state_toks)) != len(state_toks):
        raise ParseError("duplicate state name", lineno)
    index = {s: i for i, s in enumerate(state_toks)}

    lineno, init_toks = expect("initial", exactly=1)
    if init_toks[0] not in index:
        raise ParseError(f"undeclared initial state '{init_toks[0]}'", lineno)
    initial = index[init_toks[0]]

    lineno, marked_toks = expect("marked")
    marked = set()
    for tok in marked_toks:
        if tok not in index:
            raise ParseError(f"undeclared marked state '{tok}'", lineno)
        marked.add(index[tok])

    delta: dict[tuple[int, Event], int] = {}
    while pos < len(rows):
        lineno, toks = rows[pos]
        pos += 1
        if toks[0] != "trans":
            raise ParseError(f"expected 'trans', found '{toks[0]}'", lineno)
        if len(toks) != 4:
            raise ParseError("'trans' takes SRC EVENT DST", lineno)
        src, ev_tok, dst = toks[1], toks[2], toks[3]
        if src not in index:
            raise ParseError(f"undeclared state '{src}'", lineno)
        if dst not in index:
            raise ParseError(f"undeclared state '{dst}'", lineno)
        e = parse_event(ev_tok, lineno)
        if e not in alphabet:
            raise ParseError(f"event '{ev_tok}' is not in the alphabet", lineno)
        key = (index[src], e)
        if key in delta:
            raise ParseError(f"duplicate transition on ({src}, {ev_tok})", lineno)
        delta[key] = index[dst]

    return Generator(
        alphabet=alphabet,
        state_names=tuple(state_toks),
        delta=delta,
        initial=initial,
        marked=frozenset(marked),
        name=name,
    )


def serialize_gen(g: Generator) -> bytes:
    """Canonical textual form: alphabet in canonical order, transitions
    sorted by source state and event."""
    lines = [
        f"generator {g.name}",
        "alphabet " + g.alphabet.render() if g.alphabet else "alphabet",
        "states " + " ".join(g.state_names),
        f"initial {g.state_names[g.initial]}",
        "marked" + "".join(f" {g.state_names[q]}" for q in sorted(g.marked)),
    ]
    for (q, e), t in sorted(g.delta.items(), key=lambda kv: (kv[0][0], kv[0][1].key)):
        lines.append(f"trans {g.state_names[q]} {e.render()} {g.state_names[t]}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g: Generator) -> bytes:
    """GraphViz rendering: double circles for marked states, an entry arrow
    into the initial state."""
    lines = [
        f"digraph {_dot_quote(g.name)} {{",
        "  rankdir=LR;",
        '  __init__ [shape=point, label=""];',
    ]
    for i, s in enumerate(g.state_names):
        shape = "doublecircle" if i in g.marked else "circle"
        lines.append(f"  {_dot_quote(s)} [shape={shape}];")
    lines.append(f"  __init__ -> {_dot_quote(g.state_names[g.initial])};")
    for (q, e), t in sorted(g.delta.items(), key=lambda kv: (kv[0][0], kv[0][1].key)):
        lines.append(
            f"  {_dot_quote(g.state_names[q])} -> {_dot_quote(g.state_names[t])}"
            f" [label={_dot_quote(e.render())}];"
        )
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("utf-8")
