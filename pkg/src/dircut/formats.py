"""Line-oriented text formats for instances and witnesses.

One record per line, whitespace-delimited, ``#`` starts a comment.  The
first record names the kind::

    psi <host-vertices> <ell> <k>     hclass <i> <host ids...>
                                      hedge <i> <j>     (pattern edge)
                                      gedge <u> <v>     (host edge)
    dirmc <vertices> <pairs> <budget> w <v> <weight>    term <s> <t>
                                      arc <u> <v>       label <v> <role>
    stor <vertices> <pairs>           term, arc, label as above
                                      edge <u> <v>      (index = file order)
    digraph <vertices>                arc, label
    family <sets>                     set <elements...>

Witnesses are single records (``hom 1:2 2:1``, ``cut 4 9``,
``orient 0:F 1:B``) or ``dpw`` followed by ``bag <v...>`` lines.

Serializers emit a canonical order (sorted wherever order carries no
meaning), so ``serialize(parse(text)) == text`` for canonical files.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .dirmc import DirMcInstance, DirectedPathDecomposition
from .errors import InputError
from .graph import Arc, Digraph, MixedGraph
from .psi import Homomorphism, PsiInstance
from .stor import StorInstance

Instance = Union[PsiInstance, DirMcInstance, StorInstance, Digraph]


class FormatError(InputError):
    def __init__(self, lineno: Optional[int], message: str) -> None:
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno is not None else message)


@dataclass(frozen=True)
class _Line:
    no: int
    tag: str
    args: tuple[str, ...]

    def ints(self, count: Optional[int] = None) -> list[int]:
        if count is not None and len(self.args) != count:
            raise FormatError(self.no, f"'{self.tag}' takes {count} fields, got {len(self.args)}")
        try:
            return [int(a) for a in self.args]
        except ValueError:
            raise FormatError(self.no, f"non-integer field in '{self.tag}' record") from None


def _records(text: str) -> list[_Line]:
    out = []
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].split()
        if body:
            out.append(_Line(no, body[0], tuple(body[1:])))
    return out


def _header(lines: list[_Line]) -> _Line:
    if not lines:
        raise FormatError(None, "empty input")
    return lines[0]


def _wrap(lineno: int, fn, *args):
    """Run a constructor, attributing its validation error to ``lineno``."""
    try:
        return fn(*args)
    except FormatError:
        raise
    except InputError as exc:
        raise FormatError(lineno, str(exc)) from None


def _labels(n: int, found: dict[int, tuple[int, str]], header: _Line) -> Optional[tuple[str, ...]]:
    if not found:
        return None
    missing = [v for v in range(n) if v not in found]
    if missing:
        raise FormatError(header.no, f"vertex {missing[0]} has no label while others do")
    return tuple(found[v][1] for v in range(n))


def _vertex(line: _Line, v: int, n: int) -> int:
    if not 0 <= v < n:
        raise FormatError(line.no, f"vertex {v} outside 0..{n - 1}")
    return v


def _label_record(line: _Line, n: int, found: dict[int, tuple[int, str]]) -> None:
    if len(line.args) != 2:
        raise FormatError(line.no, "'label' takes a vertex and one role string")
    try:
        v = int(line.args[0])
    except ValueError:
        raise FormatError(line.no, "non-integer vertex in 'label' record") from None
    _vertex(line, v, n)
    if v in found:
        raise FormatError(line.no, f"vertex {v} already labelled on line {found[v][0]}")
    found[v] = (line.no, line.args[1])


def _pair(line: _Line, n: int) -> Arc:
    u, v = line.ints(2)
    return _vertex(line, u, n), _vertex(line, v, n)


def _unexpected(line: _Line, kind: str):
    raise FormatError(line.no, f"unexpected record '{line.tag}' in a {kind} file")


# -- parsing ---------------------------------------------------------------


def parse_instance(text: str) -> Instance:
    """Parse a ``psi``, ``dirmc``, ``stor`` or ``digraph`` file."""
    lines = _records(text)
    head = _header(lines)
    parser = {"psi": _parse_psi, "dirmc": _parse_dirmc, "stor": _parse_stor, "digraph": _parse_digraph}
    if head.tag not in parser:
        raise FormatError(head.no, f"unknown instance kind '{head.tag}'")
    return parser[head.tag](head, lines[1:])


def _parse_psi(head: _Line, body: list[_Line]) -> PsiInstance:
    n, ell, k = head.ints(3)
    classes: dict[int, tuple[int, ...]] = {}
    pattern: list[Arc] = []
    host: list[Arc] = []
    for line in body:
        if line.tag == "hclass":
            if not line.args:
                raise FormatError(line.no, "'hclass' needs a pattern vertex")
            i, *members = line.ints()
            if not 1 <= i <= ell:
                raise FormatError(line.no, f"pattern vertex {i} outside 1..{ell}")
            if i in classes:
                raise FormatError(line.no, f"second class for pattern vertex {i}")
            classes[i] = tuple(_vertex(line, u, n) for u in members)
        elif line.tag == "hedge":
            i, j = line.ints(2)
            if not (1 <= i <= ell and 1 <= j <= ell):
                raise FormatError(line.no, f"pattern edge ({i}, {j}) outside 1..{ell}")
            pattern.append((i, j))
        elif line.tag == "gedge":
            host.append(_pair(line, n))
        else:
            _unexpected(line, "psi")
    missing = [i for i in range(1, ell + 1) if i not in classes]
    if missing:
        raise FormatError(head.no, f"no 'hclass' record for pattern vertex {missing[0]}")
    inst = _wrap(
        head.no,
        PsiInstance,
        tuple(classes[i] for i in range(1, ell + 1)),
        frozenset(pattern),
        frozenset(host),
    )
    if inst.k != k:
        raise FormatError(head.no, f"header announces {k} pattern edges, file has {inst.k}")
    return inst


def _parse_dirmc(head: _Line, body: list[_Line]) -> DirMcInstance:
    n, npairs, budget = head.ints(3)
    weights: dict[int, tuple[int, int]] = {}
    pairs: list[Arc] = []
    arcs: list[Arc] = []
    found: dict[int, tuple[int, str]] = {}
    for line in body:
        if line.tag == "w":
            v, w = line.ints(2)
            _vertex(line, v, n)
            if v in weights:
                raise FormatError(line.no, f"second weight for vertex {v}")
            if w < 1:
                raise FormatError(line.no, f"weight {w} is not positive")
            weights[v] = (line.no, w)
        elif line.tag == "term":
            pairs.append(_pair(line, n))
        elif line.tag == "arc":
            arcs.append(_pair(line, n))
        elif line.tag == "label":
            _label_record(line, n, found)
        else:
            _unexpected(line, "dirmc")
    if len(pairs) != npairs:
        raise FormatError(head.no, f"header announces {npairs} terminal pairs, file has {len(pairs)}")
    terminals = {v for p in pairs for v in p}
    for v, (no, _) in weights.items():
        if v in terminals:
            raise FormatError(no, f"terminal {v} must not carry a weight")
    missing = [v for v in range(n) if v not in terminals and v not in weights]
    if missing:
        raise FormatError(head.no, f"no 'w' record for non-terminal vertex {missing[0]}")
    labels = _labels(n, found, head)
    graph = _wrap(head.no, Digraph, n, tuple(arcs), labels)
    wl = tuple(weights[v][1] if v in weights else None for v in range(n))
    return _wrap(head.no, DirMcInstance, graph, tuple(pairs), wl, budget)


def _parse_stor(head: _Line, body: list[_Line]) -> StorInstance:
    n, npairs = head.ints(2)
    pairs: list[Arc] = []
    arcs: list[Arc] = []
    edges: list[Arc] = []
    found: dict[int, tuple[int, str]] = {}
    for line in body:
        if line.tag == "term":
            pairs.append(_pair(line, n))
        elif line.tag == "arc":
            arcs.append(_pair(line, n))
        elif line.tag == "edge":
            edges.append(_pair(line, n))
        elif line.tag == "label":
            _label_record(line, n, found)
        else:
            _unexpected(line, "stor")
    if len(pairs) != npairs:
        raise FormatError(head.no, f"header announces {npairs} terminal pairs, file has {len(pairs)}")
    labels = _labels(n, found, head)
    graph = _wrap(head.no, MixedGraph, n, tuple(arcs), tuple(edges), labels)
    return _wrap(head.no, StorInstance, graph, tuple(pairs))


def _parse_digraph(head: _Line, body: list[_Line]) -> Digraph:
    (n,) = head.ints(1)
    arcs: list[Arc] = []
    found: dict[int, tuple[int, str]] = {}
    for line in body:
        if line.tag == "arc":
            arcs.append(_pair(line, n))
        elif line.tag == "label":
            _label_record(line, n, found)
        else:
            _unexpected(line, "digraph")
    return _wrap(head.no, Digraph, n, tuple(arcs), _labels(n, found, head))


def _single(text: str, tag: str) -> _Line:
    lines = _records(text)
    head = _header(lines)
    if head.tag != tag:
        raise FormatError(head.no, f"expected a '{tag}' record, got '{head.tag}'")
    if len(lines) > 1:
        raise FormatError(lines[1].no, f"trailing record after '{tag}'")
    return head


def parse_hom(text: str) -> Homomorphism:
    """``hom i:a ...`` with every pattern vertex ``1..ell`` exactly once."""
    line = _single(text, "hom")
    phi: dict[int, int] = {}
    for tok in line.args:
        try:
            i, a = (int(x) for x in tok.split(":"))
        except ValueError:
            raise FormatError(line.no, f"bad hom entry '{tok}', expected <i>:<a>") from None
        if i in phi:
            raise FormatError(line.no, f"pattern vertex {i} mapped twice")
        phi[i] = a
    if sorted(phi) != list(range(1, len(phi) + 1)):
        raise FormatError(line.no, "hom must map exactly the pattern vertices 1..ell")
    return tuple(phi[i] for i in range(1, len(phi) + 1))


def parse_cut(text: str) -> tuple[int, ...]:
    vs = _single(text, "cut").ints()
    if len(set(vs)) != len(vs):
        raise FormatError(_records(text)[0].no, "repeated vertex in cut")
    return tuple(sorted(vs))


def parse_orientation(text: str) -> tuple[bool, ...]:
    """``orient idx:F|B ...`` covering indices ``0..m-1`` exactly once."""
    line = _single(text, "orient")
    dirs: dict[int, bool] = {}
    for tok in line.args:
        idx, _, d = tok.partition(":")
        if d not in ("F", "B") or not idx.isdigit():
            raise FormatError(line.no, f"bad orient entry '{tok}', expected <index>:<F|B>")
        if int(idx) in dirs:
            raise FormatError(line.no, f"edge {idx} oriented twice")
        dirs[int(idx)] = d == "F"
    if sorted(dirs) != list(range(len(dirs))):
        raise FormatError(line.no, "orient must cover edge indices 0..m-1 exactly once")
    return tuple(dirs[i] for i in range(len(dirs)))


def parse_dpw(text: str) -> DirectedPathDecomposition:
    lines = _records(text)
    head = _header(lines)
    if head.tag != "dpw" or head.args:
        raise FormatError(head.no, "expected a bare 'dpw' record")
    bags = []
    for line in lines[1:]:
        if line.tag != "bag":
            _unexpected(line, "dpw")
        bags.append(line.ints())
    return DirectedPathDecomposition.of(bags)


def parse_family(text: str) -> list[frozenset[int]]:
    lines = _records(text)
    head = _header(lines)
    if head.tag != "family":
        raise FormatError(head.no, f"expected 'family', got '{head.tag}'")
    (count,) = head.ints(1)
    sets = []
    for line in lines[1:]:
        if line.tag != "set":
            _unexpected(line, "family")
        members = line.ints()
        if len(set(members)) != len(members):
            raise FormatError(line.no, "repeated element in set")
        sets.append(frozenset(members))
    if len(sets) != count:
        raise FormatError(head.no, f"header announces {count} sets, file has {len(sets)}")
    return sets


# -- serialization -----------------------------------------------------------


def _label_lines(labels: Optional[Sequence[str]]) -> list[str]:
    if labels is None:
        return []
    for lab in labels:
        if not lab or any(c.isspace() for c in lab) or "#" in lab:
            raise InputError(f"label {lab!r} cannot be written in the line format")
    return [f"label {v} {lab}" for v, lab in enumerate(labels)]


def _arc_lines(tag: str, arcs: Iterable[Arc]) -> list[str]:
    return [f"{tag} {u} {v}" for u, v in arcs]


def serialize_instance(inst: Instance) -> str:
    if isinstance(inst, PsiInstance):
        n = max((u for c in inst.classes for u in c), default=-1) + 1
        out = [f"psi {n} {inst.ell} {inst.k}"]
        out += [
            " ".join(["hclass", str(i)] + [str(u) for u in c])
            for i, c in enumerate(inst.classes, start=1)
        ]
        out += _arc_lines("hedge", sorted(inst.pattern_edges))
        out += _arc_lines("gedge", sorted(inst.host_edges))
    elif isinstance(inst, DirMcInstance):
        g = inst.graph
        out = [f"dirmc {g.n} {len(inst.terminal_pairs)} {inst.budget}"]
        out += [f"w {v} {w}" for v, w in enumerate(inst.weights) if w is not None]
        out += _arc_lines("term", inst.terminal_pairs)
        out += _arc_lines("arc", sorted(g.arcs))
        out += _label_lines(g.labels)
    elif isinstance(inst, StorInstance):
        g = inst.graph
        out = [f"stor {g.n} {len(inst.terminal_pairs)}"]
        out += _arc_lines("term", inst.terminal_pairs)
        out += _arc_lines("arc", sorted(g.arcs))
        out += _arc_lines("edge", g.edges)
        out += _label_lines(g.labels)
    elif isinstance(inst, Digraph):
        out = [f"digraph {inst.n}"]
        out += _arc_lines("arc", sorted(inst.arcs))
        out += _label_lines(inst.labels)
    else:
        raise InputError(f"cannot serialize {type(inst).__name__}")
    return "\n".join(out) + "\n"


def serialize_hom(h: Sequence[int]) -> str:
    return " ".join(["hom"] + [f"{i}:{a}" for i, a in enumerate(h, start=1)]) + "\n"


def serialize_cut(vertices: Iterable[int]) -> str:
    return " ".join(["cut"] + [str(v) for v in sorted(vertices)]) + "\n"


def serialize_orientation(o: Sequence[bool]) -> str:
    return " ".join(["orient"] + [f"{i}:{'F' if d else 'B'}" for i, d in enumerate(o)]) + "\n"


def serialize_dpw(d: DirectedPathDecomposition) -> str:
    return "\n".join(["dpw"] + [" ".join(["bag"] + [str(v) for v in sorted(b)]) for b in d.bags]) + "\n"


def serialize_family(sets: Sequence[Iterable[int]]) -> str:
    lines = [f"family {len(sets)}"]
    lines += [" ".join(["set"] + [str(x) for x in sorted(s)]) for s in sets]
    return "\n".join(lines) + "\n"
