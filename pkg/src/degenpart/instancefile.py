"""Line-oriented text format for instances and results.

Instance grammar (one record per line, '#' starts a comment):

    hg <p>                     header; p >= 0 coordinates
    v <name> <f_1> ... <f_p>   vertex with its vector values (p >= 1)
    v <name>                   bare vertex (p = 0)
    l <name> <color> ...       color list for a vertex (p = 0 only)
    e <name> <v_1> ... <v_k>   edge, k >= 2 distinct vertices

Emission is canonical: header first, vertices sorted by name, list lines
in the same order, edges sorted by name, single spaces, '\\n' endings.
Results (partitions, colorings, certificates) use the same token style so
every command's stdout can be parsed back.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hardpair import CTag, HardPairCertificate, KTag, MTag, VectorFunction
from .hypergraph import Hypergraph


class ParseError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True, eq=False)
class Instance:
    H: Hypergraph
    p: int
    f: VectorFunction | None  # when p >= 1
    lists: dict[str, set[str]] | None  # when list lines are present


def _tokens(text: str):
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line_no, line.split()


def parse_instance(text: str) -> Instance:
    p: int | None = None
    vertices: dict[str, tuple[int, ...] | None] = {}
    lists: dict[str, set[str]] = {}
    edges: dict[str, tuple[str, ...]] = {}
    for line_no, tok in _tokens(text):
        kind = tok[0]
        if kind == "hg":
            if p is not None:
                raise ParseError(line_no, "duplicate header")
            if len(tok) != 2 or not tok[1].isdigit():
                raise ParseError(line_no, "header must be 'hg <p>'")
            p = int(tok[1])
            continue
        if p is None:
            raise ParseError(line_no, "missing 'hg <p>' header")
        if kind == "v":
            if len(tok) < 2:
                raise ParseError(line_no, "vertex line needs a name")
            name = tok[1]
            if name in vertices:
                raise ParseError(line_no, f"duplicate vertex {name!r}")
            vals = tok[2:]
            if len(vals) != p:
                raise ParseError(line_no, f"expected {p} values for vertex {name!r}, got {len(vals)}")
            try:
                vec = tuple(int(x) for x in vals)
            except ValueError:
                raise ParseError(line_no, f"non-integer value for vertex {name!r}")
            if any(x < 0 for x in vec):
                raise ParseError(line_no, f"negative value for vertex {name!r}")
            vertices[name] = vec if p else None
        elif kind == "l":
            if p != 0:
                raise ParseError(line_no, "list lines require a 'hg 0' header")
            if len(tok) < 3:
                raise ParseError(line_no, "list line needs a vertex and at least one color")
            name = tok[1]
            if name not in vertices:
                raise ParseError(line_no, f"list for unknown vertex {name!r}")
            if name in lists:
                raise ParseError(line_no, f"duplicate list for {name!r}")
            lists[name] = set(tok[2:])
        elif kind == "e":
            if len(tok) < 4:
                raise ParseError(line_no, "edge line needs a name and at least two vertices")
            name = tok[1]
            if name in edges:
                raise ParseError(line_no, f"duplicate edge {name!r}")
            members = tok[2:]
            if len(set(members)) != len(members):
                raise ParseError(line_no, f"edge {name!r} repeats a vertex (loop)")
            unknown = [v for v in members if v not in vertices]
            if unknown:
                raise ParseError(line_no, f"edge {name!r} mentions unknown vertices {unknown}")
            edges[name] = tuple(members)
        else:
            raise ParseError(line_no, f"unknown record {kind!r}")
    if p is None:
        raise ParseError(0, "empty instance: missing 'hg <p>' header")
    if lists and set(lists) != set(vertices):
        missing = sorted(set(vertices) - set(lists))
        raise ParseError(0, f"vertices without lists: {missing}")
    H = Hypergraph(vertices, edges)
    f = VectorFunction(p, {v: vec for v, vec in vertices.items()}) if p else None
    return Instance(H, p, f, lists or None)


def emit_instance(
    H: Hypergraph,
    f: VectorFunction | None = None,
    lists: dict[str, set[str]] | None = None,
) -> str:
    if f is not None and lists is not None:
        raise ValueError("an instance carries either f-values or lists, not both")
    p = f.p if f is not None else 0
    out = [f"hg {p}"]
    for v in sorted(H.vertices):
        if f is not None:
            out.append("v " + v + " " + " ".join(str(x) for x in f[v]))
        else:
            out.append("v " + v)
    if lists is not None:
        for v in sorted(lists):
            out.append("l " + v + " " + " ".join(sorted(lists[v])))
    for e in sorted(H.edge_ids):
        out.append("e " + e + " " + " ".join(sorted(H.incidence(e))))
    return "\n".join(out) + "\n"


# -- results ------------------------------------------------------------


def emit_partition(P: dict[str, int], p: int) -> str:
    out = [f"partition {p}"]
    out += [f"a {v} {P[v]}" for v in sorted(P)]
    return "\n".join(out) + "\n"


def parse_partition(text: str) -> tuple[dict[str, int], int]:
    p = None
    P: dict[str, int] = {}
    for line_no, tok in _tokens(text):
        if tok[0] == "partition":
            p = int(tok[1])
        elif tok[0] == "a":
            if p is None:
                raise ParseError(line_no, "missing 'partition <p>' header")
            P[tok[1]] = int(tok[2])
        else:
            raise ParseError(line_no, f"unknown record {tok[0]!r}")
    if p is None:
        raise ParseError(0, "not a partition block")
    return P, p


def emit_coloring(coloring: dict[str, object]) -> str:
    out = ["coloring"]
    out += [f"c {v} {coloring[v]}" for v in sorted(coloring)]
    return "\n".join(out) + "\n"


def parse_coloring(text: str) -> dict[str, str]:
    seen_header = False
    out: dict[str, str] = {}
    for line_no, tok in _tokens(text):
        if tok == ["coloring"]:
            seen_header = True
        elif tok[0] == "c" and len(tok) == 3:
            out[tok[1]] = tok[2]
        else:
            raise ParseError(line_no, f"unknown record {tok[0]!r}")
    if not seen_header:
        raise ParseError(0, "not a coloring block")
    return out


def _emit_tag(tag) -> str:
    if isinstance(tag, MTag):
        return f"M {tag.j}"
    if isinstance(tag, KTag):
        return f"K {tag.t} " + " ".join(str(c) for c in tag.counts)
    if isinstance(tag, CTag):
        return f"C {tag.t} {tag.k} {tag.l}"
    raise ValueError(f"unknown tag {tag!r}")


def emit_certificate(cert: HardPairCertificate) -> str:
    out = [f"certificate {len(cert.blocks)}"]
    for i, (bset, tag, fB) in enumerate(zip(cert.blocks, cert.tags, cert.block_functions), 1):
        out.append(f"b {i} " + " ".join(sorted(bset)))
        out.append(f"t {i} " + _emit_tag(tag))
        for v in sorted(bset):
            out.append(f"f {i} {v} " + " ".join(str(x) for x in fB[v]))
    return "\n".join(out) + "\n"


def emit_certificates(certs: dict[frozenset[str], HardPairCertificate]) -> str:
    return "".join(emit_certificate(certs[c]) for c in sorted(certs, key=min))


def parse_certificates(text: str) -> list[HardPairCertificate]:
    certs: list[HardPairCertificate] = []
    nblocks = 0
    bsets: list[frozenset[str]] = []
    tags: list = []
    fns: list[dict[str, tuple[int, ...]]] = []

    def flush(line_no: int):
        if not bsets and not certs and nblocks == 0:
            return
        if len(bsets) != nblocks or len(tags) != nblocks:
            raise ParseError(line_no, "certificate block counts do not match header")
        certs.append(HardPairCertificate(tuple(bsets), tuple(tags), tuple(fns)))

    for line_no, tok in _tokens(text):
        if tok[0] == "certificate":
            flush(line_no)
            nblocks = int(tok[1])
            bsets, tags, fns = [], [], []
        elif tok[0] == "b":
            bsets.append(frozenset(tok[2:]))
            fns.append({})
        elif tok[0] == "t":
            kind = tok[2]
            if kind == "M":
                tags.append(MTag(int(tok[3])))
            elif kind == "K":
                tags.append(KTag(int(tok[3]), tuple(int(x) for x in tok[4:])))
            elif kind == "C":
                tags.append(CTag(int(tok[3]), int(tok[4]), int(tok[5])))
            else:
                raise ParseError(line_no, f"unknown block type {kind!r}")
        elif tok[0] == "f":
            i = int(tok[1]) - 1
            fns[i][tok[2]] = tuple(int(x) for x in tok[3:])
        else:
            raise ParseError(line_no, f"unknown record {tok[0]!r}")
    flush(0)
    if not certs:
        raise ParseError(0, "not a certificate block")
    return certs
