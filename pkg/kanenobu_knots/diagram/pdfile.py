# pdfile.py
"""
Reader and writer for the `pdcode v1` text format.

    pdcode v1
    # free-form comment; "# key: value" comments are kept as metadata
    X 4 2 5 1 +
    O

`X a b c d s` is one crossing (labels counterclockwise from the incoming
under-strand, s in {+,-}); `O` is one crossingless circle.
"""
import logging
import os
from typing import Dict, Iterable, Tuple

from ..errors import DiagramError, PdParseError
from .planar import PlanarDiagram

logger = logging.getLogger(__name__)

HEADER = "pdcode v1"
FIXTURES_DIR = os.path.join(os.path.dirname(os.path.dirname(__file__)), "fixtures")
FIXTURES = ("unknot", "curl", "4_1", "8_8", "8_9", "hopf", "unlink2")


def parse_pd(text: str) -> Tuple[PlanarDiagram, Dict[str, str]]:
    """Parse file contents into a validated diagram plus its `# key: value` metadata."""
    meta: Dict[str, str] = {}
    crossings = []
    signs = []
    loops = 0
    seen_header = False
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if ":" in body:
                key, value = body.split(":", 1)
                meta[key.strip()] = value.strip()
            continue
        if not seen_header:
            if line != HEADER:
                raise PdParseError(f"expected header {HEADER!r}, got {line!r}", line_no)
            seen_header = True
            continue
        fields = line.split()
        if fields[0] == "O" and len(fields) == 1:
            loops += 1
        elif fields[0] == "X" and len(fields) == 6:
            try:
                labels = tuple(int(f) for f in fields[1:5])
            except ValueError:
                raise PdParseError(f"arc labels must be integers: {line!r}", line_no)
            if any(a < 1 for a in labels):
                raise PdParseError(f"arc labels must be positive: {line!r}", line_no)
            if fields[5] not in ("+", "-"):
                raise PdParseError(f"sign must be + or -, got {fields[5]!r}", line_no)
            crossings.append(labels)
            signs.append(1 if fields[5] == "+" else -1)
        else:
            raise PdParseError(f"unrecognised line {line!r}", line_no)
    if not seen_header:
        raise PdParseError(f"missing header {HEADER!r}")
    return PlanarDiagram.from_pd(crossings, signs, loops), meta


def format_pd(d: PlanarDiagram, comments: Iterable[str] = ()) -> str:
    lines = [HEADER]
    lines += [f"# {c}" for c in comments]
    for crossing, s in zip(d.crossings, d.signs):
        lines.append("X " + " ".join(str(a) for a in crossing) + (" +" if s > 0 else " -"))
    lines += ["O"] * d.loops
    return "\n".join(lines) + "\n"


def read_pd(path: str) -> PlanarDiagram:
    return read_pd_with_meta(path)[0]


def read_pd_with_meta(path: str) -> Tuple[PlanarDiagram, Dict[str, str]]:
    with open(path, "r", encoding="utf-8") as f:
        text = f.read()
    try:
        d, meta = parse_pd(text)
    except DiagramError:
        logger.info("diagram in %s failed validation", path)
        raise
    logger.debug("read %s: %d crossings, %d loops", path, d.n, d.loops)
    return d, meta


def write_pd(d: PlanarDiagram, path: str, comments: Iterable[str] = ()) -> str:
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(format_pd(d, comments))
    return path


def fixture_path(name: str) -> str:
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; shipped: {', '.join(FIXTURES)}")
    return os.path.join(FIXTURES_DIR, f"{name}.pd")


def load_fixture(name: str) -> PlanarDiagram:
    return read_pd(fixture_path(name))


def fixture_meta(name: str) -> Dict[str, str]:
    return read_pd_with_meta(fixture_path(name))[1]
