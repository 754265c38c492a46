"""Line-oriented text format for scenario declarations.

A ``.gma`` file holds exactly one scenario: a header, one ring, then any
number of free-module, map, complex, and claim statements.  ``#`` starts a
comment; a statement may run across physical lines until its brackets
balance.  The grammar:

    scenario <id> @ "<reference>"
    ring <name> = <coeff>[v1, v2, ... | weights w1, w2, ...] / (p1; p2; ...)
    free <name> = <ring>(m1) ++ <ring>(m2) ++ ...
    map <name> : <free> -> <free> = [[e11, e12, ...], ...]
    map <name> : <free> -> <free> = transpose-of <other>
    complex <name> = <map> ; <map> ; ...
    claim <kind> {<json>} @ "<reference>"

``<coeff>`` is ``zz``, ``qq``, or ``fp:<odd prime>``.  The weights clause
and the relation ideal are optional.  A free module lists one twist per
generator; the generator of ``S(m)`` sits in degree ``-m``.  Map grids are
row-major, so column ``j`` is the image of the ``j``-th source generator;
every entry is weight-checked at parse time and an inhomogeneous entry is
reported with its position and the expected weight.  The claim JSON object
carries ``id`` and ``args``, plus optional ``domains`` and ``pin`` with the
same meaning as in :class:`gmacheck.scenarios.Claim`.

``serialize_gma`` writes a canonical form (stable field order, sorted JSON
keys, one grid row per line for wide matrices) and ``parse_gma`` inverts it
exactly, so shipped files can be regenerated and diffed.
"""

import json

from .coeffs import parse_domain
from .modules import FreeModule, ModuleError, ModuleMap
from .rings import RingError, WeightedRing
from .scenarios import CLAIM_KINDS, Claim, Scenario

__all__ = ["GmaError", "parse_gma", "serialize_gma"]

_DEFAULT_DOMAINS = ("zz", "qq", "fp")


class GmaError(ValueError):
    """Malformed ``.gma`` input, located by line and column."""

    def __init__(self, message, line, col):
        super().__init__("line %d, col %d: %s" % (line, col, message))
        self.line = line
        self.col = col


def _strip_comment(text):
    """Drop a ``#`` comment, but not inside a double-quoted string."""
    quoted = False
    for i, ch in enumerate(text):
        if ch == '"' and (i == 0 or text[i - 1] != "\\"):
            quoted = not quoted
        elif ch == "#" and not quoted:
            return text[:i]
    return text


def _depth_delta(text):
    depth = 0
    quoted = False
    for i, ch in enumerate(text):
        if ch == '"' and (i == 0 or text[i - 1] != "\\"):
            quoted = not quoted
        elif not quoted:
            if ch in "([{":
                depth += 1
            elif ch in ")]}":
                depth -= 1
    return depth


def _statements(text):
    """Yield (first line number, joined statement text)."""
    pending = []
    start = None
    depth = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = _strip_comment(raw).rstrip()
        if not body.strip() and not pending:
            continue
        if not pending:
            start = lineno
        pending.append(body.strip())
        depth += _depth_delta(body)
        if depth < 0:
            raise GmaError("unbalanced closing bracket", lineno, raw.find(body.strip()) + 1)
        if depth == 0:
            yield start, " ".join(p for p in pending if p)
            pending = []
    if pending:
        raise GmaError("unclosed bracket at end of file", start, 1)


def _split_top(text, sep):
    """Split on a separator character at bracket depth zero."""
    parts = []
    buf = []
    depth = 0
    quoted = False
    for i, ch in enumerate(text):
        if ch == '"' and (i == 0 or text[i - 1] != "\\"):
            quoted = not quoted
        if not quoted:
            if ch in "([{":
                depth += 1
            elif ch in ")]}":
                depth -= 1
            elif ch == sep and depth == 0:
                parts.append("".join(buf))
                buf = []
                continue
        buf.append(ch)
    parts.append("".join(buf))
    return parts


def _split_ref(stmt, line):
    """Split ``<head> @ "<ref>"`` and decode the reference string."""
    pieces = _split_top(stmt, "@")
    if len(pieces) != 2:
        raise GmaError('expected one @ "<reference>" tail', line, len(stmt))
    head, tail = pieces[0].strip(), pieces[1].strip()
    try:
        ref = json.loads(tail)
    except ValueError:
        raise GmaError("reference must be a double-quoted string", line, stmt.rfind("@") + 1)
    if not isinstance(ref, str):
        raise GmaError("reference must be a double-quoted string", line, stmt.rfind("@") + 1)
    return head, ref


def _name(token, line, what):
    token = token.strip()
    if not token.isidentifier():
        raise GmaError("bad %s name %r" % (what, token), line, 1)
    return token


def _parse_ring(body, line):
    if "=" not in body:
        raise GmaError("ring statement needs '='", line, 1)
    name, rhs = body.split("=", 1)
    name = _name(name, line, "ring")
    rhs = rhs.strip()
    lb = rhs.find("[")
    rb = _matching(rhs, lb, line)
    if lb < 0:
        raise GmaError("ring statement needs <coeff>[vars]", line, 1)
    coeff = rhs[:lb].strip()
    try:
        parse_domain(coeff)
    except Exception as exc:
        raise GmaError(str(exc), line, 1)
    inner = rhs[lb + 1 : rb]
    if "|" in inner:
        var_part, wt_part = inner.split("|", 1)
        wt_part = wt_part.strip()
        if not wt_part.startswith("weights"):
            raise GmaError("expected 'weights' after '|'", line, 1)
        weights = [w.strip() for w in wt_part[len("weights") :].split(",")]
        try:
            weights = [int(w) for w in weights]
        except ValueError:
            raise GmaError("weights must be integers", line, 1)
    else:
        var_part, weights = inner, None
    names = [v.strip() for v in var_part.split(",") if v.strip()]
    rest = rhs[rb + 1 :].strip()
    relations = []
    if rest:
        if not (rest.startswith("/") and rest[1:].strip().startswith("(")):
            raise GmaError("expected '/ (relations)' after variable block", line, 1)
        par = rest[1:].strip()
        if not par.endswith(")"):
            raise GmaError("unterminated relation list", line, len(body))
        relations = [r.strip() for r in _split_top(par[1:-1], ";") if r.strip()]
    if weights is None:
        weights = [0] * len(names)
    return name, coeff, names, weights, relations


def _matching(text, open_at, line):
    if open_at < 0:
        return -1
    depth = 0
    for i in range(open_at, len(text)):
        if text[i] in "([{":
            depth += 1
        elif text[i] in ")]}":
            depth -= 1
            if depth == 0:
                return i
    raise GmaError("unbalanced %r" % text[open_at], line, open_at + 1)


def _parse_free(body, line, ring_name):
    if "=" not in body:
        raise GmaError("free statement needs '='", line, 1)
    name, rhs = body.split("=", 1)
    name = _name(name, line, "free module")
    twists = []
    for piece in rhs.split("++"):
        piece = piece.strip()
        lb = piece.find("(")
        if lb < 0 or not piece.endswith(")"):
            raise GmaError("expected <ring>(m) summand, got %r" % piece, line, 1)
        base = piece[:lb].strip()
        if base != ring_name:
            raise GmaError("summand over unknown ring %r" % base, line, 1)
        try:
            twists.append(int(piece[lb + 1 : -1]))
        except ValueError:
            raise GmaError("twist must be an integer in %r" % piece, line, 1)
    return name, twists


def _parse_grid(text, line):
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise GmaError("matrix must be [[...], ...]", line, 1)
    rows = []
    for row_text in _split_top(text[1:-1], ","):
        row_text = row_text.strip()
        if not row_text:
            continue
        if not (row_text.startswith("[") and row_text.endswith("]")):
            raise GmaError("matrix row must be [...], got %r" % row_text[:30], line, 1)
        rows.append([e.strip() for e in _split_top(row_text[1:-1], ",")])
    if not rows:
        raise GmaError("empty matrix", line, 1)
    return rows


def _parse_map(body, line):
    if ":" not in body or "=" not in body:
        raise GmaError("map statement needs '<name> : <src> -> <tgt> = ...'", line, 1)
    name, rest = body.split(":", 1)
    name = _name(name, line, "map")
    sig, rhs = _split_top(rest, "=")[0], rest[rest.index("=") + 1 :]
    if "->" not in sig:
        raise GmaError("map signature needs '->'", line, 1)
    src, tgt = (s.strip() for s in sig.split("->", 1))
    rhs = rhs.strip()
    if rhs.startswith("transpose-of"):
        other = _name(rhs[len("transpose-of") :], line, "map")
        return name, src, tgt, ("transpose-of", other)
    return name, src, tgt, _parse_grid(rhs, line)


def _parse_complex(body, line):
    if "=" not in body:
        raise GmaError("complex statement needs '='", line, 1)
    name, rhs = body.split("=", 1)
    name = _name(name, line, "complex")
    maps = [m.strip() for m in rhs.split(";") if m.strip()]
    if not maps:
        raise GmaError("complex needs at least one differential", line, 1)
    return name, maps


def _parse_claim(body, line):
    lb = body.find("{")
    if lb < 0:
        raise GmaError("claim needs a JSON argument object", line, 1)
    kind = body[:lb].strip()
    if kind not in CLAIM_KINDS:
        raise GmaError("unknown claim kind %r" % kind, line, 1)
    rb = _matching(body, lb, line)
    try:
        payload = json.loads(body[lb : rb + 1])
    except ValueError as exc:
        raise GmaError("bad claim JSON: %s" % exc, line, lb + 1)
    tail = body[rb + 1 :].strip()
    _, ref = _split_ref("x " + tail, line)
    for key in payload:
        if key not in {"id", "args", "domains", "pin"}:
            raise GmaError("unexpected claim field %r" % key, line, lb + 1)
    if "id" not in payload or "args" not in payload:
        raise GmaError("claim JSON needs 'id' and 'args'", line, lb + 1)
    return Claim(
        payload["id"],
        kind,
        payload["args"],
        ref,
        domains=tuple(payload.get("domains", _DEFAULT_DOMAINS)),
        pin=payload.get("pin"),
    )


def parse_gma(text):
    """Parse one scenario from ``.gma`` text, validating as it goes.

    The ring, free modules, and maps are realized immediately over the
    declared coefficient domain so that weight errors surface here, carrying
    the line of the offending statement.
    """
    sid = None
    ref = None
    decl = {"ring": None, "frees": [], "maps": [], "complexes": []}
    claims = []
    env = {}
    ring = None
    for line, stmt in _statements(text):
        word, _, body = stmt.partition(" ")
        body = body.strip()
        if sid is None:
            if word != "scenario":
                raise GmaError("file must start with a scenario header", line, 1)
            head, ref = _split_ref(body, line)
            sid = _name(head.replace("-", "_"), line, "scenario") and head
            continue
        if word == "ring":
            if ring is not None:
                raise GmaError("only one ring per file", line, 1)
            decl["ring"] = _parse_ring(body, line)
            rname, coeff, names, weights, relations = decl["ring"]
            try:
                ring = WeightedRing(names, weights, parse_domain(coeff), relations=relations)
            except (RingError, ValueError) as exc:
                raise GmaError(str(exc), line, 1)
            env[rname] = ring
        elif word in ("free", "map", "complex", "claim"):
            if ring is None:
                raise GmaError("ring must be declared before %r" % word, line, 1)
            if word == "free":
                name, twists = _parse_free(body, line, decl["ring"][0])
                decl["frees"].append((name, twists))
                env[name] = FreeModule.twists(ring, twists)
            elif word == "map":
                name, src, tgt, grid = _parse_map(body, line)
                decl["maps"].append((name, src, tgt, grid))
                try:
                    if isinstance(grid, tuple):
                        if grid[1] not in env:
                            raise GmaError("transpose of unknown map %r" % grid[1], line, 1)
                        env[name] = env[grid[1]].transpose()
                    else:
                        if src not in env or tgt not in env:
                            raise GmaError("map endpoints must be declared frees", line, 1)
                        env[name] = ModuleMap(env[src], env[tgt], grid)
                except (ModuleError, RingError) as exc:
                    raise GmaError("map %s: %s" % (name, exc), line, 1)
            elif word == "complex":
                name, maps = _parse_complex(body, line)
                for m in maps:
                    if m not in env:
                        raise GmaError("complex uses unknown map %r" % m, line, 1)
                decl["complexes"].append((name, maps))
            else:
                claims.append(_parse_claim(body, line))
        else:
            raise GmaError("unknown statement %r" % word, line, 1)
    if sid is None:
        raise GmaError("empty file", 1, 1)
    if ring is None:
        raise GmaError("file declares no ring", 1, 1)
    try:
        return Scenario(sid, ref, decl, claims)
    except ValueError as exc:
        raise GmaError(str(exc), 1, 1)


def _claim_payload(claim):
    payload = {"id": claim.id, "args": claim.args}
    if tuple(claim.domains) != _DEFAULT_DOMAINS:
        payload["domains"] = list(claim.domains)
    if claim.pin is not None:
        payload["pin"] = claim.pin
    return json.dumps(payload, sort_keys=True)


def serialize_gma(scenario):
    """Render a scenario to canonical ``.gma`` text; inverse of parse_gma."""
    out = ["scenario %s @ %s" % (scenario.id, json.dumps(scenario.paper_ref)), ""]
    rname, coeff, names, weights, relations = scenario.decl["ring"]
    ring_line = "ring %s = %s[%s | weights %s]" % (
        rname,
        coeff,
        ", ".join(names),
        ", ".join(str(w) for w in weights),
    )
    if relations:
        ring_line += " / (%s)" % "; ".join(relations)
    out.append(ring_line)
    frees = scenario.decl.get("frees", [])
    maps = scenario.decl.get("maps", [])
    complexes = scenario.decl.get("complexes", [])
    if frees:
        out.append("")
    for name, twists in frees:
        out.append(
            "free %s = %s" % (name, " ++ ".join("%s(%d)" % (rname, m) for m in twists))
        )
    if maps:
        out.append("")
    for name, src, tgt, grid in maps:
        head = "map %s : %s -> %s = " % (name, src, tgt)
        if isinstance(grid, tuple) and grid and grid[0] == "transpose-of":
            out.append(head + "transpose-of %s" % grid[1])
            continue
        rows = ["[%s]" % ", ".join(row) for row in grid]
        one_line = head + "[%s]" % ", ".join(rows)
        if len(one_line) <= 100:
            out.append(one_line)
        else:
            out.append(head + "[")
            for i, row in enumerate(rows):
                out.append("  %s%s" % (row, "," if i + 1 < len(rows) else ""))
            out.append("]")
    if complexes:
        out.append("")
    for name, map_names in complexes:
        out.append("complex %s = %s" % (name, " ; ".join(map_names)))
    if scenario.claims:
        out.append("")
    for claim in scenario.claims:
        out.append(
            "claim %s %s @ %s"
            % (claim.kind, _claim_payload(claim), json.dumps(claim.paper_ref))
        )
    return "\n".join(out) + "\n"
