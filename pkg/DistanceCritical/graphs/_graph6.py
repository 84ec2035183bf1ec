"""
graph6 codec.

Size header N(n) then the upper triangle in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...)
packed six bits per printable character (value + 63), last character zero padded.
"""
import numpy as np

from ._graph import Graph, GraphError, MAX_ORDER

GRAPH6_HEADER = ">>graph6<<"

_SMALL_LIMIT = 62
_MEDIUM_LIMIT = 258047
_WEIGHTS = np.array([32, 16, 8, 4, 2, 1], dtype=np.uint8)


class Graph6Error(GraphError):
    """
    Malformed graph6 input.

    Attributes
    ----------
    reason : str
        One of "header", "character", "truncated", "trailing", "padding".
    position : int
        Index of the offending character in the stripped input, or -1.
    """

    REASONS = ("header", "character", "truncated", "trailing", "padding")

    def __init__(self, reason, message, position=-1):
        super().__init__("graph6 {} error: {}".format(reason, message))
        self.reason = reason
        self.position = position


def strip_graph6_header(text):
    """
    Remove surrounding whitespace and an optional '>>graph6<<' prefix.
    """
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("ascii")
        except UnicodeDecodeError:
            raise Graph6Error("character", "input is not ASCII")
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :].strip()
    return s


def _group_value(s, start, count):
    value = 0
    for ch in s[start : start + count]:
        value = (value << 6) | (ord(ch) - 63)
    return value


def _decode_size(s):
    """
    Return (n, offset of the first data character).
    """
    if not s:
        raise Graph6Error("header", "empty input", 0)
    if s[0] != "~":
        return ord(s[0]) - 63, 1
    if len(s) >= 2 and s[1] == "~":
        if len(s) < 8:
            raise Graph6Error("header", "incomplete 8-byte size header", len(s))
        return _group_value(s, 2, 6), 8
    if len(s) < 4:
        raise Graph6Error("header", "incomplete 4-byte size header", len(s))
    return _group_value(s, 1, 3), 4


def _column_order(n):
    # (row, col) of the lower triangle in row-major order is x(col, row) in column order
    return np.tril_indices(n, -1)


def decode_graph6(text):
    """
    Parse one graph6 line.

    Parameters
    ----------
    text : str or bytes
        The graph6 string, optionally prefixed with '>>graph6<<' and surrounded by whitespace.

    Returns
    -------
    Graph

    Raises
    ------
    Graph6Error
        With a reason telling which part of the input is malformed.
    """
    s = strip_graph6_header(text)
    try:
        raw = np.frombuffer(s.encode("ascii"), dtype=np.uint8)
    except UnicodeEncodeError as e:
        raise Graph6Error("character", "character {!r} outside [63, 126]".format(s[e.start]), e.start)
    bad = np.flatnonzero((raw < 63) | (raw > 126))
    if bad.size:
        pos = int(bad[0])
        raise Graph6Error("character", "character {!r} outside [63, 126]".format(s[pos]), pos)
    n, offset = _decode_size(s)
    if n > MAX_ORDER:
        raise Graph6Error("header", "graph order {} above the supported maximum {}".format(n, MAX_ORDER), 0)

    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    ndata = len(s) - offset
    if ndata < nchars:
        raise Graph6Error("truncated", "expected {} data characters, got {}".format(nchars, ndata), len(s))
    if ndata > nchars:
        raise Graph6Error("trailing", "{} unexpected characters after the data".format(ndata - nchars), offset + nchars)

    values = raw[offset:] - 63
    bits = np.unpackbits(values[:, None], axis=1)[:, 2:].ravel()
    if bits[nbits:].any():
        raise Graph6Error("padding", "nonzero padding bits", len(s) - 1)
    mat = np.zeros((n, n), dtype=bool)
    mat[_column_order(n)] = bits[:nbits]
    return Graph.from_numpy(mat | mat.T)


def _encode_size(n):
    if n <= _SMALL_LIMIT:
        return chr(63 + n)
    if n <= _MEDIUM_LIMIT:
        return "~" + "".join(chr(63 + ((n >> shift) & 63)) for shift in (12, 6, 0))
    return "~~" + "".join(chr(63 + ((n >> shift) & 63)) for shift in (30, 24, 18, 12, 6, 0))


def encode_graph6(g):
    """
    graph6 string of g, minimal size header, zero padding, no trailing newline.
    """
    bits = g.to_numpy()[_column_order(g.n)].astype(np.uint8)
    bits = np.concatenate((bits, np.zeros(-len(bits) % 6, dtype=np.uint8)))
    data = (bits.reshape(-1, 6) @ _WEIGHTS + 63).astype(np.uint8).tobytes().decode("ascii")
    return _encode_size(g.n) + data


def iter_graph6(lines):
    """
    Decode an iterable of graph6 lines, skipping blank lines.
    """
    for line in lines:
        s = strip_graph6_header(line)
        if s:
            yield decode_graph6(s)
