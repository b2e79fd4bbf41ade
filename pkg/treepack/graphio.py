"""
Plain-text artifacts: graph files, key/value records and solution files.

Graph file: first line "n m", then m lines "u v". Anything after '#' is a
comment. Records are blocks of "key: value" lines separated by blank lines;
a key may repeat inside one record.
"""
import logging
import warnings

from .exceptions import GraphError, GraphFormatError
from .graph import from_edge_list
from .oracle import CoverSolution, PackingSolution
from .patterns import TreeEmbedding

logger = logging.getLogger(__name__)


#######################################
## graphs
#######################################
def load_graph(path):
    return parse_graph(_read_ascii(path))


def _read_ascii(path):
    with open(path, "rb") as f:
        data = f.read()
    try:
        return data.decode("ascii")
    except UnicodeDecodeError as e:
        lineno = data.count(b"\n", 0, e.start) + 1
        raise GraphFormatError(f"non-ASCII byte {data[e.start]:#04x}", lineno) from e


def parse_graph(text):
    header = None
    pairs = []
    seen = set()

    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue

        fields = line.split()
        if len(fields) != 2 or not all(f.isascii() and f.isdigit() for f in fields):
            raise GraphFormatError(f"expected two non-negative integers, got {line!r}", lineno)
        a, b = int(fields[0]), int(fields[1])

        if header is None:
            header = (a, b, lineno)
            continue

        n = header[0]
        if a >= n or b >= n:
            raise GraphFormatError(f"edge ({a}, {b}) out of range for n={n}", lineno)
        if a == b:
            raise GraphFormatError(f"self-loop at vertex {a}", lineno)

        edge = (min(a, b), max(a, b))
        if edge in seen:
            warnings.warn(f"line {lineno}: duplicate edge {edge} ignored.", UserWarning)
        seen.add(edge)
        pairs.append(edge)

    if header is None:
        raise GraphFormatError("missing 'n m' header")

    n, m, header_line = header
    if len(pairs) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(pairs)}", header_line)

    try:
        return from_edge_list(n, pairs)
    except GraphError as e:
        raise GraphFormatError(str(e)) from e


def format_graph(g):
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def save_graph(g, path):
    with open(path, "w", encoding="ascii") as f:
        f.write(format_graph(g))


#######################################
## key/value records
#######################################
def format_records(records):
    """`records` is a list of [(key, value), ...]; None values are written empty."""
    blocks = []
    for record in records:
        blocks.append("\n".join(f"{key}: {_text(value)}".rstrip() for key, value in record))
    return "\n\n".join(blocks) + "\n"


def parse_records(text):
    records, current = [], []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            if current:
                records.append(current)
                current = []
            continue
        if ":" not in line:
            raise GraphFormatError(f"expected 'key: value', got {line!r}", lineno)
        key, value = line.split(":", 1)
        current.append((key.strip(), value.strip()))

    if current:
        records.append(current)
    return records


def _text(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple, frozenset, set)):
        return " ".join(str(v) for v in value)
    return str(value)


#######################################
## solutions
#######################################
def solution_record(solution, valid=None):
    if isinstance(solution, PackingSolution):
        record = [("kind", "packing"), ("k", solution.k), ("size", solution.size)]
        if valid is not None:
            record.append(("valid", valid))
        record.extend(("embedding", e.image_vertices) for e in solution.embeddings)
        return record

    if isinstance(solution, CoverSolution):
        record = [("kind", "cover"), ("k", solution.k), ("size", solution.size)]
        if valid is not None:
            record.append(("valid", valid))
        record.append(("vertices", sorted(solution.vertices)))
        return record

    raise TypeError(f"Unsupported solution type: {type(solution).__name__}.")


def dump_solution(solution, path, valid=None):
    with open(path, "w", encoding="ascii") as f:
        f.write(format_records([solution_record(solution, valid)]))


def load_solution(path):
    records = parse_records(_read_ascii(path))

    for record in records:
        fields = dict(record)
        if fields.get("kind") == "packing":
            k = int(fields["k"])
            embeddings = tuple(
                TreeEmbedding(k, tuple(int(v) for v in value.split()))
                for key, value in record
                if key == "embedding"
            )
            return PackingSolution(k, embeddings)
        if fields.get("kind") == "cover":
            return CoverSolution(
                int(fields["k"]),
                frozenset(int(v) for v in fields.get("vertices", "").split()),
            )

    raise GraphFormatError(f"No packing or cover record in {path}.")
