from __future__ import annotations

import itertools
import math
import random

from helpers import random_spec, rects_interiors_overlap
from regui.classify import classify
from regui.errors import ReguiError
from regui.geometry import NormRect, WindowState
from regui.resolve import resolve
from regui.spec import Block, ClassRule, LayoutSpec, Placement, parse_spec, serialize_spec, three_class_rules
from regui.validate import has_errors, validate_spec


def codes(diags):
    return [d.code for d in diags]


ONE_CLASS = (ClassRule("all", 0.0, False, math.inf, False),)


def one_class_spec(blocks):
    return LayoutSpec(name="t", classes=ONE_CLASS, blocks=tuple(blocks))


class TestFixtureDiagnostics:
    def test_no_errors(self, fixture_spec):
        assert not has_errors(validate_spec(fixture_spec))

    def test_white_hidden_in_classic_is_the_only_info(self, fixture_spec):
        infos = [d for d in validate_spec(fixture_spec) if d.severity == "info"]
        assert [(d.code, d.subject) for d in infos] == [("HIDDEN_IN_CLASS", "white@classic")]

    def test_mandated_top_bar_overlaps_are_warnings(self, fixture_spec):
        # title/grsurf/white genuinely overlap in portrait and landscape;
        # layered elements lint as warnings, never errors.
        warnings = [d for d in validate_spec(fixture_spec) if d.severity == "warning"]
        assert warnings and all(d.code == "BLOCK_OVERLAP" for d in warnings)
        assert {d.subject for d in warnings} == {
            "grsurf+title@portrait", "grsurf+white@portrait", "title+white@portrait",
            "grsurf+title@landscape", "grsurf+white@landscape", "title+white@landscape",
        }


class TestIndividualChecks:
    def test_rect_out_of_bounds(self):
        diags = validate_spec(one_class_spec([
            Block("b", {"all": Placement(NormRect(0.9, 0.9, 0.38, 0.175))}),
        ]))
        assert codes(diags) == ["RECT_OUT_OF_BOUNDS"]
        assert diags[0].subject == "b@all"

    def test_negative_field_is_out_of_bounds(self):
        diags = validate_spec(one_class_spec([
            Block("b", {"all": Placement(NormRect(-0.1, 0, 0.5, 0.5))}),
        ]))
        assert codes(diags) == ["RECT_OUT_OF_BOUNDS"]

    def test_full_overlap_is_a_warning(self):
        diags = validate_spec(one_class_spec([
            Block("a", {"all": Placement(NormRect(0, 0, 1, 1))}),
            Block("b", {"all": Placement(NormRect(0, 0, 1, 1))}),
        ]))
        assert codes(diags) == ["BLOCK_OVERLAP"]
        assert diags[0].severity == "warning"
        assert diags[0].subject == "a+b@all"

    def test_invisible_blocks_do_not_lint_overlap(self):
        diags = validate_spec(one_class_spec([
            Block("a", {"all": Placement(NormRect(0, 0, 1, 1), visible=False)}),
            Block("b", {"all": Placement(NormRect(0, 0, 1, 1))}),
        ]))
        assert codes(diags) == []

    def test_dangling_class(self):
        diags = validate_spec(one_class_spec([
            Block("b", {"all": Placement(NormRect(0, 0, 1, 1)),
                        "ghost": Placement(NormRect(0, 0, 0.5, 0.5))}),
        ]))
        assert "DANGLING_CLASS" in codes(diags)
        assert any(d.subject == "b@ghost" for d in diags)

    def test_partition_gap_and_overlap(self):
        spec = LayoutSpec("t", (
            ClassRule("a", 0, False, 1, False),
            ClassRule("b", 1, False, 2, True),
            ClassRule("c", 2, True, math.inf, False),
        ), ())
        got = codes(validate_spec(spec))
        assert "PARTITION_GAP" in got and "PARTITION_OVERLAP" in got

    def test_duplicates(self):
        spec = LayoutSpec("t", (
            ClassRule("all", 0, False, math.inf, False),
            ClassRule("all", 0, False, math.inf, False),
        ), (
            Block("b", {"all": Placement(NormRect(0, 0, 0.4, 0.4))}),
            Block("b", {"all": Placement(NormRect(0.5, 0.5, 0.4, 0.4))}),
        ))
        got = codes(validate_spec(spec))
        assert "DUPLICATE_CLASS" in got and "DUPLICATE_BLOCK" in got

    def test_invalid_font(self):
        diags = validate_spec(one_class_spec([
            Block("b", {"all": Placement(NormRect(0, 0, 1, 1), font=1.5)}),
        ]))
        assert codes(diags) == ["INVALID_FONT"]

    def test_hidden_in_class_is_info_not_error(self):
        spec = LayoutSpec("t", three_class_rules(0.75, 1.5), (
            Block("b", {"classic": Placement(NormRect(0, 0, 1, 1))}),
        ))
        diags = validate_spec(spec)
        assert not has_errors(diags)
        hidden = [d for d in diags if d.code == "HIDDEN_IN_CLASS"]
        assert {d.subject for d in hidden} == {"b@portrait", "b@landscape"}


class TestProperties:
    def test_overlap_pairs_match_brute_force(self):
        rng = random.Random(60221023)
        for _ in range(60):
            spec = random_spec(rng, max_blocks=10)
            lint = {
                d.subject
                for d in validate_spec(spec)
                if d.code == "BLOCK_OVERLAP"
            }
            brute = set()
            for rule in spec.classes:
                visible = [
                    (b.id, b.placements[rule.name].rect)
                    for b in spec.blocks
                    if rule.name in b.placements and b.placements[rule.name].visible
                ]
                for (ida, ra), (idb, rb) in itertools.combinations(visible, 2):
                    if rects_interiors_overlap(ra, rb):
                        first, second = sorted((ida, idb))
                        brute.add(f"{first}+{second}@{rule.name}")
            assert lint == brute

    def test_diagnostics_are_order_stable(self, fixture_spec):
        first = validate_spec(fixture_spec)
        second = validate_spec(fixture_spec)
        assert first == second
        ranks = {"error": 0, "warning": 1, "info": 2}
        assert [ranks[d.severity] for d in first] == sorted(ranks[d.severity] for d in first)

    def test_error_free_specs_resolve_for_any_ratio(self):
        rng = random.Random(8080)
        for _ in range(40):
            spec = random_spec(rng)
            if has_errors(validate_spec(spec)):
                continue
            for _ in range(10):
                w, h = rng.uniform(1, 3000), rng.uniform(1, 3000)
                try:
                    classify(w / h, spec.classes)
                    resolve(spec, WindowState(w, h))
                except ReguiError as exc:  # pragma: no cover
                    raise AssertionError(f"valid spec failed to resolve: {exc}")

    def test_validation_pure_on_serialized_copy(self, fixture_spec):
        copy = parse_spec(serialize_spec(fixture_spec))
        assert validate_spec(copy) == validate_spec(fixture_spec)
