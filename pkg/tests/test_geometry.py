from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from regui.errors import DegenerateWindow
from regui.geometry import (
    NormRect,
    PixelRect,
    WindowState,
    aspect_ratio,
    intersects,
    mirror_x,
    scale_to_window,
)

coord = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)


def rects():
    return st.builds(
        lambda x, y, w, h: NormRect(x, y, min(w, 1.0 - x), min(h, 1.0 - y)),
        coord, coord, coord, coord,
    )


class TestAspectRatio:
    def test_landscape_window(self):
        w = aspect_ratio(800, 600)
        assert w.aspect_ratio == pytest.approx(800 / 600)
        assert (w.width, w.height) == (800.0, 600.0)

    def test_portrait_window(self):
        assert aspect_ratio(600, 800).aspect_ratio == 0.75

    @pytest.mark.parametrize("w,h", [(800, 0), (0, 600), (-1, 100), (100, -5)])
    def test_degenerate_dimensions_rejected(self, w, h):
        with pytest.raises(DegenerateWindow):
            aspect_ratio(w, h)

    def test_ratio_is_exact_division(self):
        w = aspect_ratio(1024, 768)
        assert w.aspect_ratio == w.width / w.height


class TestScaleToWindow:
    def test_panel_rect_in_1000x800(self):
        # Oracle: componentwise products, 0.01*1000, 0.75*800, 0.38*1000, 0.175*800.
        r = scale_to_window(NormRect(0.01, 0.75, 0.38, 0.175), WindowState(1000, 800))
        assert r.as_list() == pytest.approx([10.0, 600.0, 380.0, 140.0], rel=1e-9)

    @given(rects())
    def test_unit_window_is_identity(self, r):
        scaled = scale_to_window(r, WindowState(1, 1))
        assert scaled.as_list() == r.as_list()

    def test_zero_rect_stays_zero(self):
        assert scale_to_window(NormRect(0, 0, 0, 0), WindowState(1920, 1080)).as_list() == [0, 0, 0, 0]

    @given(rects(), st.floats(min_value=1.0, max_value=4000.0),
           st.floats(min_value=1.0, max_value=4000.0),
           st.floats(min_value=0.01, max_value=100.0))
    def test_scale_linearity(self, r, width, height, k):
        base = scale_to_window(r, WindowState(width, height))
        zoomed = scale_to_window(r, WindowState(k * width, k * height))
        for got, expect in zip(zoomed.as_list(), [k * v for v in base.as_list()]):
            assert got == pytest.approx(expect, rel=1e-9, abs=1e-12)

    @given(rects(), st.floats(min_value=1.0, max_value=4000.0),
           st.floats(min_value=1.0, max_value=4000.0))
    def test_repeated_calls_are_deterministic(self, r, width, height):
        w = WindowState(width, height)
        assert scale_to_window(r, w) == scale_to_window(r, w)


class TestMirrorX:
    def test_left_rect_flips_right(self):
        m = mirror_x(NormRect(0.1, 0.2, 0.3, 0.4))
        assert m.x == pytest.approx(0.6)
        assert (m.y, m.w, m.h) == (0.2, 0.3, 0.4)

    def test_centered_rect_is_fixed_point(self):
        m = mirror_x(NormRect(0.4, 0.0, 0.2, 1.0))
        assert m.x == pytest.approx(0.4)
        assert (m.y, m.w, m.h) == (0.0, 0.2, 1.0)

    @given(rects())
    def test_involution(self, r):
        back = mirror_x(mirror_x(r))
        assert back.x == pytest.approx(r.x, abs=1e-12)
        assert (back.y, back.w, back.h) == (r.y, r.w, r.h)

    @given(rects())
    def test_preserves_size_and_vertical_position(self, r):
        m = mirror_x(r)
        assert (m.y, m.w, m.h) == (r.y, r.w, r.h)


class TestIntersects:
    def test_corner_touch_is_not_overlap(self):
        assert not intersects(NormRect(0, 0, 0.5, 0.5), NormRect(0.5, 0.5, 0.5, 0.5))

    def test_visible_overlap(self):
        assert intersects(NormRect(0, 0, 0.6, 0.6), NormRect(0.5, 0.5, 0.5, 0.5))

    def test_shared_edge_is_not_overlap(self):
        assert not intersects(NormRect(0, 0, 0.5, 1), NormRect(0.5, 0, 0.5, 1))

    def test_zero_area_rect_never_overlaps(self):
        assert not intersects(NormRect(0.5, 0.5, 0, 0), NormRect(0, 0, 1, 1))

    @given(rects(), rects())
    def test_symmetry(self, a, b):
        assert intersects(a, b) == intersects(b, a)

    @given(rects())
    def test_rect_overlaps_itself_iff_interior_nonempty(self, r):
        # In float arithmetic a tiny w can vanish under x + w; the interior
        # is non-empty exactly when both sums strictly move.
        assert intersects(r, r) == (r.x + r.w > r.x and r.y + r.h > r.y)


def test_rect_values_are_floats():
    r = NormRect(0, 0, 1, 1)
    assert all(isinstance(v, float) for v in r.as_list())
    p = PixelRect(0, 0, 10, 10)
    assert all(isinstance(v, float) for v in p.as_list())
