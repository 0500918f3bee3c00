"""Reading and writing the planar_code interchange format.

Layout (one-byte variant only): an optional ``>>planar_code<<`` header, then
per graph one byte ``n`` followed, for each vertex in turn, by its neighbours
as 1-based bytes in rotation order, each list closed by a 0 byte.
"""

from typing import BinaryIO, Iterable, Iterator

from .errors import BadHeader, NeighborOutOfRange, PlanarCodeError, TruncatedStream
from .surface import Triangulation

HEADER = b">>planar_code<<"


def iter_planar_code(data: bytes) -> Iterator[tuple[int, list[list[int]]]]:
    """Yield ``(offset, rotation_system)`` for each graph in ``data``."""
    i = 0
    if data.startswith(b">>"):
        if not data.startswith(HEADER):
            raise BadHeader("stream starts with '>>' but not with '>>planar_code<<'", 0)
        i = len(HEADER)
    size = len(data)
    while i < size:
        start = i
        n = data[i]
        i += 1
        if n == 0:
            raise PlanarCodeError("two-byte planar_code (n > 255) is not supported", start)
        rot = []
        for v in range(n):
            nbrs = []
            while True:
                if i >= size:
                    raise TruncatedStream(f"stream ended inside the list of vertex {v + 1}", i)
                b = data[i]
                i += 1
                if b == 0:
                    break
                if b > n:
                    raise NeighborOutOfRange(f"neighbour {b} of vertex {v + 1} exceeds n={n}", i - 1)
                nbrs.append(b - 1)
            rot.append(nbrs)
        yield start, rot


def read_planar_code(source) -> list[Triangulation]:
    """Parse bytes or a binary file object into validated triangulations."""
    data = source if isinstance(source, (bytes, bytearray)) else source.read()
    graphs = []
    for offset, rot in iter_planar_code(bytes(data)):
        try:
            graphs.append(Triangulation(rot))
        except ValueError as exc:
            raise type(exc)(f"{exc} (graph starting at byte offset {offset})") from exc
    return graphs


def encode(T: Triangulation) -> bytes:
    if T.n > 255:
        raise PlanarCodeError(f"n={T.n} does not fit the one-byte planar_code variant")
    out = bytearray([T.n])
    for r in T.rot:
        out.extend(u + 1 for u in r)
        out.append(0)
    return bytes(out)


def write_planar_code(graphs: Iterable[Triangulation], stream: BinaryIO | None = None,
                      header: bool = True) -> bytes:
    chunks = [HEADER] if header else []
    chunks.extend(encode(T) for T in graphs)
    data = b"".join(chunks)
    if stream is not None:
        stream.write(data)
    return data
