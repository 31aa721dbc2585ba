"""Reading and writing complexes.

Text format::

    m=6
    # names: A B C D E F      (optional display names)
    1 3 5
    1 2 5

JSON format: ``{"m": 6, "facets": [[1, 3, 5], ...]}`` with an optional
``"names"`` list.
"""

from __future__ import annotations

import json
from pathlib import Path

from .complex import ComplexError, SimplicialComplex, build_from_facets


class ParseError(ValueError):
    def __init__(self, msg: str, line: int | None = None, source: str | None = None):
        self.line = line
        self.source = source
        where = ""
        if source:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {msg}" if where else msg)


def parse_text(text: str, source: str | None = None) -> SimplicialComplex:
    m = None
    names = None
    facets = []
    lines = []
    for no, raw in enumerate(text.splitlines(), 1):
        body, _, comment = raw.partition("#")
        comment = comment.strip()
        if comment.lower().startswith("names:"):
            if names is not None:
                raise ParseError("duplicate names line", no, source)
            names = (no, comment[6:].split())
        body = body.strip()
        if not body:
            continue
        if m is None:
            key, eq, val = body.partition("=")
            if not eq or key.strip() != "m":
                raise ParseError(f"expected 'm=<int>' header, got {body!r}", no, source)
            try:
                m = int(val.strip())
            except ValueError:
                raise ParseError(f"vertex count {val.strip()!r} is not an integer", no, source) from None
            if m < 0:
                raise ParseError(f"negative vertex count {m}", no, source)
            continue
        try:
            f = [int(tok) for tok in body.split()]
        except ValueError:
            raise ParseError(f"facet {body!r} has a non-integer label", no, source) from None
        for v in f:
            if v < 1 or v > m:
                raise ParseError(f"vertex {v} not in [1, {m}]", no, source)
        if len(set(f)) != len(f):
            raise ParseError(f"repeated vertex in facet {body!r}", no, source)
        facets.append(f)
        lines.append(no)
    if m is None:
        raise ParseError("missing 'm=<int>' header", None, source)
    try:
        return build_from_facets(m, facets, names=names[1] if names else None)
    except ComplexError as e:
        raise ParseError(str(e), names[0] if names and "names" in str(e) else None, source) from None


def parse_json(text: str, source: str | None = None) -> SimplicialComplex:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, source) from None
    if not isinstance(d, dict) or "m" not in d or "facets" not in d:
        raise ParseError("JSON input needs keys 'm' and 'facets'", None, source)
    m, facets = d["m"], d["facets"]
    if not isinstance(m, int) or isinstance(m, bool):
        raise ParseError("'m' must be an integer", None, source)
    if not isinstance(facets, list) or not all(
            isinstance(f, list) and all(isinstance(v, int) and not isinstance(v, bool) for v in f)
            for f in facets):
        raise ParseError("'facets' must be a list of integer lists", None, source)
    for f in facets:
        if len(set(f)) != len(f):
            raise ParseError(f"repeated vertex in facet {f}", None, source)
    try:
        return build_from_facets(m, facets, names=d.get("names"))
    except ComplexError as e:
        raise ParseError(str(e), None, source) from None


def loads(text: str, source: str | None = None) -> SimplicialComplex:
    """Parse either format; JSON is recognised by a leading ``{``."""
    if text.lstrip().startswith("{"):
        return parse_json(text, source)
    return parse_text(text, source)


def load(path) -> SimplicialComplex:
    p = Path(path)
    return loads(p.read_text(), str(p))


def dumps(K: SimplicialComplex, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"m={K.m}")
    if K.names:
        out.append("# names: " + " ".join(K.names))
    out.extend(" ".join(map(str, f)) for f in K.facets)
    return "\n".join(out) + "\n"


def dumps_json(K: SimplicialComplex) -> str:
    d = {"m": K.m, "facets": [list(f) for f in K.facets]}
    if K.names:
        d["names"] = list(K.names)
    return json.dumps(d)
