"""graph6 and edge-list serialisation."""

from __future__ import annotations

from typing import Iterator, TextIO

from .graph import Graph


class FormatError(ValueError):
    """Malformed graph input."""


_SHORT_MAX = 62
_MEDIUM_MAX = 258047


def _as_bytes(text: bytes | str) -> bytes:
    if isinstance(text, str):
        text = text.encode("ascii", errors="replace")
    return text.strip()


def parse_graph6(text: bytes | str) -> Graph:
    data = _as_bytes(text)
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data:
        raise FormatError("empty graph6 string")
    for pos, b in enumerate(data):
        if not 63 <= b <= 126:
            raise FormatError(f"byte {b!r} at offset {pos} outside 63..126")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise FormatError("8-byte graph6 header not supported")
        if len(data) < 4:
            raise FormatError("truncated graph6 length header")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    pairs = n * (n - 1) // 2
    need = (pairs + 5) // 6
    if len(body) != need:
        raise FormatError(f"graph6 payload for n={n} needs {need} bytes, got {len(body)}")
    bits = 0
    for b in body:
        bits = (bits << 6) | (b - 63)
    # bit k of the upper triangle is the (k+1)-th most significant payload bit
    bits >>= need * 6 - pairs
    adj = [0] * n
    k = pairs - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return Graph._trusted(n, tuple(adj))


def write_graph6(g: Graph) -> bytes:
    n = g.n
    if n <= _SHORT_MAX:
        head = bytes([63 + n])
    elif n <= _MEDIUM_MAX:
        head = bytes([126, 63 + (n >> 12), 63 + ((n >> 6) & 63), 63 + (n & 63)])
    else:
        raise FormatError(f"n={n} exceeds the supported graph6 header range")
    pairs = n * (n - 1) // 2
    need = (pairs + 5) // 6
    bits = 0
    for j in range(1, n):
        nb = g.adj[j]
        for i in range(j):
            bits = (bits << 1) | (nb >> i & 1)
    bits <<= need * 6 - pairs
    body = bytes(63 + ((bits >> (6 * (need - 1 - t))) & 63) for t in range(need))
    return head + body


def parse_edge_list(text: str) -> Graph:
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty edge list")
    n, m = _header(lines[0], 1)
    if len(lines) - 1 != m:
        raise FormatError(f"header announces {m} edges, found {len(lines) - 1}")
    return _edges(n, lines[1:], 2)


def _header(line: str, lineno: int) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise FormatError(f"line {lineno}: expected header 'n m', got {line!r}")
    return int(parts[0]), int(parts[1])


def _edges(n: int, lines: list[str], first_lineno: int) -> Graph:
    adj = [0] * n
    for off, line in enumerate(lines):
        lineno = first_lineno + off
        parts = line.split()
        if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
            raise FormatError(f"line {lineno}: expected 'u v', got {line!r}")
        u, v = int(parts[0]), int(parts[1])
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"line {lineno}: edge {u}-{v} out of range for n={n}")
        if u == v:
            raise FormatError(f"line {lineno}: self-loop at {u}")
        if adj[u] >> v & 1:
            raise FormatError(f"line {lineno}: duplicate edge {u}-{v}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph._trusted(n, tuple(adj))


def write_edge_list(g: Graph) -> str:
    edges = list(g.edges())
    out = [f"{g.n} {len(edges)}"]
    out.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(out) + "\n"


def read_graphs(stream: TextIO, fmt: str = "graph6") -> Iterator[tuple[int, Graph | FormatError]]:
    """Yield ``(line_number, graph_or_error)`` for each record in ``stream``.

    Errors are yielded, not raised, so a bad record never stops the stream.
    Edge-list records are a header line followed by its edge lines; blank
    lines between records are ignored.
    """
    if fmt == "graph6":
        for lineno, line in enumerate(stream, 1):
            if not line.strip():
                continue
            try:
                yield lineno, parse_graph6(line)
            except FormatError as exc:
                yield lineno, FormatError(f"line {lineno}: {exc}")
        return
    if fmt != "edgelist":
        raise ValueError(f"unknown format {fmt!r}")
    lines = enumerate(stream, 1)
    for lineno, line in lines:
        if not line.strip():
            continue
        try:
            n, m = _header(line, lineno)
        except FormatError as exc:
            yield lineno, exc
            continue
        body = []
        for _ in range(m):
            nxt = next(lines, None)
            if nxt is None:
                break
            body.append(nxt)
        if len(body) < m:
            yield lineno, FormatError(f"line {lineno}: header announces {m} edges, stream ended after {len(body)}")
            return
        try:
            yield lineno, _edges(n, [b[1] for b in body], lineno + 1)
        except FormatError as exc:
            yield lineno, exc
