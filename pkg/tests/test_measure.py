import math
import pytest
from utils.measure import DEFAULT_SAMPLES, SampleCounts, measure
from utils.misc import CONFIG_FILE, load_config
from utils.regions import Cap
from utils.width import DIAMETER_ARC_SAMPLES


def test_measure_reuleaux_triangle(reuleaux_triangle):
    report = measure(reuleaux_triangle)
    assert report.kind == "disk_polygon"
    assert report.thickness == pytest.approx(1.0, abs=1e-6)
    assert report.diameter == pytest.approx(1.0, abs=1e-6)
    assert report.enclosing_cap.radius == pytest.approx(math.asin(2 * math.sqrt(3) / 3 * math.sin(0.5)), abs=1e-6)
    assert report.constant_width.ok and report.constant_diameter.ok
    assert report.polar_thickness == pytest.approx(math.pi - 1.0, abs=1e-6)
    assert report.strictly_convex and not report.smooth

def test_measure_cap(north):
    report = measure(Cap(north, 0.5))
    assert report.thickness == pytest.approx(1.0, abs=1e-7)
    assert report.diameter == pytest.approx(1.0, abs=1e-12)
    assert report.constant_width.ok
    assert report.smooth

def test_measure_quarter_disk(quarter_disk):
    report = measure(quarter_disk)
    assert report.diameter == pytest.approx(math.acos(0.25), abs=1e-6)
    assert not report.constant_width.ok
    assert not report.constant_diameter.ok

def test_report_fields(reduced_triangle):
    data = measure(reduced_triangle).toJson()
    assert list(data) == [
        "kind",
        "thickness",
        "co_support",
        "diameter",
        "diameter_endpoints",
        "min_enclosing_cap",
        "boundary_centered_cover",
        "constant_width",
        "constant_diameter",
        "polar_thickness",
        "smooth",
        "strictly_convex",
    ]
    assert data["boundary_centered_cover"]["radius"] <= 0.8 + 1e-6

def test_sample_counts_from_config():
    samples = SampleCounts.fromDict({"polar_scan": "256", "unknown": 3})
    assert samples.polar_scan == 256
    assert samples.brute_force == DEFAULT_SAMPLES.brute_force
    assert SampleCounts.fromDict(None) == DEFAULT_SAMPLES
    assert samples.toJson()["polar_scan"] == 256

def test_shipped_sample_counts_are_the_defaults():
    samples = SampleCounts.fromDict(load_config(CONFIG_FILE)["samples"])
    assert samples == DEFAULT_SAMPLES
    assert samples.diameter_arc == DIAMETER_ARC_SAMPLES

def test_diameter_arc_samples(quarter_disk):
    coarse = measure(quarter_disk, samples=SampleCounts.fromDict({"diameter_arc": 8}))
    assert coarse.diameter == pytest.approx(math.acos(math.cos(math.pi / 3) ** 2), abs=1e-6)
