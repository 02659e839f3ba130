"""Golden cases tying the engine to checked-in expected outputs.

Each case regenerates its expected document from the current engine; the
test suite compares bytes. Goldens are only ever rewritten explicitly
(scripts/regen_goldens.py), never silently.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .controller import action_to_doc, parse_event, replay_events
from .geometry import WindowState
from .jsonio import dumps_doc, dumps_line
from .resolve import layout_to_doc, resolve
from .spec import LayoutSpec, parse_spec
from .svg import render_svg

FIXTURE_SPEC = "teachlcge.regui.json"


@dataclass(frozen=True, slots=True)
class GoldenCase:
    name: str
    spec_path: Path
    expected_path: Path
    window: tuple[float, float] | None = None  # resolve / svg cases
    anchor: str = "none"
    trace_path: Path | None = None  # trace cases
    format: str = "json"  # json | jsonl | svg


def repo_root() -> Path:
    """The checkout root holding fixtures/ and goldens/."""
    return Path(__file__).resolve().parents[2]


def enumerate_goldens(root: Path | None = None) -> list[GoldenCase]:
    root = root if root is not None else repo_root()
    fixtures = root / "fixtures"
    goldens = root / "goldens"
    spec = fixtures / FIXTURE_SPEC

    def resolve_case(name: str, w: float, h: float, anchor: str = "none") -> GoldenCase:
        return GoldenCase(name, spec, goldens / f"{name}.json", window=(w, h), anchor=anchor)

    return [
        resolve_case("resolve_classic_1024x768", 1024, 768),
        resolve_case("resolve_portrait_600x1000", 600, 1000),
        resolve_case("resolve_landscape_1600x800", 1600, 800),
        # Both breakpoints belong to the middle class.
        resolve_case("resolve_boundary_r0.75_600x800", 600, 800),
        resolve_case("resolve_boundary_r1.5_1200x800", 1200, 800),
        resolve_case("resolve_anchor_right_1024x768", 1024, 768, anchor="right"),
        GoldenCase("trace_crossing", spec, goldens / "trace_crossing.jsonl",
                   trace_path=fixtures / "traces" / "crossing.jsonl", format="jsonl"),
        GoldenCase("trace_anchor", spec, goldens / "trace_anchor.jsonl",
                   trace_path=fixtures / "traces" / "anchor.jsonl", format="jsonl"),
        GoldenCase("layout_classic_1024x768", spec, goldens / "layout_classic_1024x768.svg",
                   window=(1024, 768), format="svg"),
        GoldenCase("layout_portrait_600x1000", spec, goldens / "layout_portrait_600x1000.svg",
                   window=(600, 1000), format="svg"),
    ]


def _load_spec(path: Path) -> LayoutSpec:
    return parse_spec(path.read_text(encoding="utf-8"))


def generate_output(case: GoldenCase) -> str:
    """Produce the document this case pins, byte-for-byte."""
    spec = _load_spec(case.spec_path)
    if case.format == "jsonl":
        assert case.trace_path is not None
        events = [
            parse_event(json.loads(line))
            for line in case.trace_path.read_text(encoding="utf-8").splitlines()
            if line.strip()
        ]
        return "".join(
            dumps_line(action_to_doc(a)) for a in replay_events(spec, events)
        )
    assert case.window is not None
    layout = resolve(spec, WindowState(*case.window), case.anchor)
    if case.format == "svg":
        return render_svg(layout)
    return dumps_doc(layout_to_doc(layout))


def write_goldens(root: Path | None = None) -> list[Path]:
    """Rewrite every golden file; returns the paths written."""
    written = []
    for case in enumerate_goldens(root):
        case.expected_path.parent.mkdir(parents=True, exist_ok=True)
        case.expected_path.write_text(generate_output(case), encoding="utf-8")
        written.append(case.expected_path)
    return written
