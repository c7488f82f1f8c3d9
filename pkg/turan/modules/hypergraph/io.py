"""
超图文件格式

文本格式：第一行 "n r"；其后每个非注释行为 r 个严格递增的整数；'#' 开头为注释行；UTF-8, LF。
JSON 镜像：{"n": n, "r": r, "edges": [[...], ...]}，边按字典序排列。
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Tuple, Union

from ...core.errors import HypergraphFormatError, HypergraphMemberError
from .structures import Hypergraph


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _parse_ints(lineno: int, line: str) -> List[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise HypergraphFormatError(lineno, f"non-integer token in {line!r}") from None


def parse(text: str) -> Hypergraph:
    """解析超图文本，错误信息带行号"""
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise HypergraphFormatError(1, "missing header 'n r'") from None

    values = _parse_ints(lineno, header)
    if len(values) != 2:
        raise HypergraphFormatError(lineno, f"malformed header {header!r}, expected 'n r'")
    n, r = values
    if n < 0 or r < 1:
        raise HypergraphFormatError(lineno, f"malformed header {header!r}: need n ≥ 0 and r ≥ 1")

    edges: List[Tuple[int, ...]] = []
    seen: Dict[Tuple[int, ...], int] = {}
    for lineno, line in lines:
        edge = _parse_ints(lineno, line)
        if len(edge) != r:
            raise HypergraphFormatError(lineno, f"wrong edge arity {len(edge)}, expected {r}")
        for v in edge:
            if v < 1 or v > n:
                raise HypergraphFormatError(lineno, f"vertex {v} out of range 1..{n}")
        if any(a >= b for a, b in zip(edge, edge[1:])):
            raise HypergraphFormatError(lineno, f"vertices not strictly increasing: {line!r}")
        key = tuple(edge)
        if key in seen:
            raise HypergraphFormatError(lineno, f"duplicate edge {list(key)} (first on line {seen[key]})")
        seen[key] = lineno
        edges.append(key)

    return Hypergraph(n, r, tuple(edges))


def serialize(graph: Hypergraph, comment: str = "") -> str:
    """序列化为文本格式 (与 parse 互逆)"""
    out: List[str] = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"{graph.n} {graph.r}")
    out.extend(" ".join(str(v) for v in e) for e in graph.edges)
    return "\n".join(out) + "\n"


def to_json(graph: Hypergraph) -> Dict[str, Any]:
    return {"n": graph.n, "r": graph.r, "edges": [list(e) for e in graph.edges]}


def parse_json(payload: Union[str, Dict[str, Any]]) -> Hypergraph:
    """解析 JSON 镜像；边的错误信息带下标 edges[i] (从 0 开始)"""
    try:
        data = json.loads(payload) if isinstance(payload, str) else payload
    except json.JSONDecodeError as e:
        raise HypergraphFormatError(e.lineno, f"invalid JSON: {e.msg}") from None
    try:
        n, r, members = int(data["n"]), int(data["r"]), data["edges"]
    except KeyError as e:
        raise HypergraphFormatError(1, f"missing JSON field {e}") from None
    except (TypeError, ValueError):
        raise HypergraphFormatError(1, "'n' and 'r' must be integers") from None
    if n < 0 or r < 1:
        raise HypergraphFormatError(1, f"need n ≥ 0 and r ≥ 1, got n={n} r={r}")

    edges: List[Tuple[int, ...]] = []
    seen: Dict[Tuple[int, ...], int] = {}
    for index, member in enumerate(members):
        try:
            edge = tuple(sorted(int(v) for v in member))
        except (TypeError, ValueError):
            raise HypergraphMemberError(index, f"non-integer entry in {member!r}") from None
        if len(edge) != r:
            raise HypergraphMemberError(index, f"wrong edge arity {len(edge)}, expected {r}")
        for v in edge:
            if v < 1 or v > n:
                raise HypergraphMemberError(index, f"vertex {v} out of range 1..{n}")
        if len(set(edge)) != r:
            raise HypergraphMemberError(index, f"repeated vertex in {list(member)}")
        if edge in seen:
            raise HypergraphMemberError(index, f"duplicate edge {list(edge)} (first at edges[{seen[edge]}])")
        seen[edge] = index
        edges.append(edge)
    return Hypergraph(n, r, tuple(edges))


def read_hypergraph(path: Union[str, Path]) -> Hypergraph:
    """按扩展名读取 (.json 或文本格式)"""
    p = Path(path)
    text = p.read_text(encoding="utf-8")
    if p.suffix.lower() == ".json":
        return parse_json(text)
    return parse(text)


def write_hypergraph(path: Union[str, Path], graph: Hypergraph, comment: str = "") -> None:
    p = Path(path)
    if p.suffix.lower() == ".json":
        p.write_text(json.dumps(to_json(graph)) + "\n", encoding="utf-8")
    else:
        p.write_text(serialize(graph, comment), encoding="utf-8", newline="\n")
