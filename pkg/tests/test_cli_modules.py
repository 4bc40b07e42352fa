import io
import json
import os
import tempfile
import unittest
import xml.etree.ElementTree as ET
from pathlib import Path

import mock
from postulatum._cli_modules import Classify, ExploreFinite, SDenied, Verify, Zones
from postulatum._kinds import ParallelKind
from postulatum._verify import ClaimResult
from postulatum.exceptions import (
    ParseError,
    PointOnLine,
    PointOutsideSpace,
    UnknownModel,
    VerificationFailed,
)

CLEAN_ENV = {k: v for k, v in os.environ.items() if not k.startswith("POSTULATUM_")}


def emitted(m_emit):
    return m_emit.call_args[0][0]


@mock.patch.dict(os.environ, CLEAN_ENV, clear=True)
class TestClassify(unittest.TestCase):
    @mock.patch("postulatum._cli_modules.classify.emit_json")
    def test_square(self, m_emit):
        Classify(line="1,1:0,1/2", point="1/2,0")
        result = emitted(m_emit)
        self.assertEqual("Euclidean", result["kind"])
        self.assertEqual([["0", "0"], ["1", "0"]], result["witnesses"]["unique_parallel"])

    @mock.patch("postulatum._cli_modules.classify.emit_json")
    def test_default_line_is_ce(self, m_emit):
        Classify(point="0,1")
        self.assertEqual("Elliptic", emitted(m_emit)["kind"])
        self.assertEqual(8, len(emitted(m_emit)["witnesses"]["blocking_samples"]))

    @mock.patch("postulatum._cli_modules.classify.emit_json")
    def test_sphere(self, m_emit):
        Classify(model="sphere", point="0,0,1")
        result = emitted(m_emit)
        self.assertEqual("Elliptic", result["kind"])
        self.assertEqual(8, len(result["witnesses"]["blocking_circles"]))

    @mock.patch("postulatum._cli_modules.classify.emit_json")
    def test_sphere_ray_in_the_xy_plane(self, m_emit):
        Classify(model="sphere", line="1,0,0", point="1,1,0")
        circles = [b["circle"] for b in emitted(m_emit)["witnesses"]["blocking_circles"]]
        self.assertEqual(8, len(circles))
        self.assertEqual(8, len({tuple(c) for c in circles}))

    @mock.patch("postulatum._cli_modules.classify.emit_json")
    @mock.patch("postulatum._cli_modules.classify.classify_sphere")
    def test_sphere_kind_comes_from_the_classifier(self, m_classify, m_emit):
        m_classify.return_value = ParallelKind.HYPERBOLIC
        Classify(model="sphere", point="0,0,1")
        self.assertEqual("Hyperbolic", emitted(m_emit)["kind"])

    @mock.patch("postulatum._cli_modules.classify.emit_json")
    def test_plane(self, m_emit):
        Classify(model="euclidean-plane", line="1,0,-1", point="0,0")
        result = emitted(m_emit)
        self.assertEqual("Euclidean", result["kind"])
        self.assertEqual(["1", "0", "0"], result["witnesses"]["unique_parallel"])

    @mock.patch("postulatum._cli_modules.classify.emit_json")
    def test_hyperbolic_disk(self, m_emit):
        Classify(model="hyperbolic-disk", point="0,1/2")
        result = emitted(m_emit)
        self.assertEqual("Hyperbolic", result["kind"])
        self.assertEqual([["1", "0"], ["-1", "0"]], result["line"])
        self.assertEqual(
            [[["1", "0"], ["-3/5", "4/5"]], [["-1", "0"], ["3/5", "4/5"]]],
            result["witnesses"]["limiting_parallels"],
        )

    @mock.patch("postulatum._cli_modules.classify.emit_json")
    def test_sphere_plane_dispatches_on_arity(self, m_emit):
        Classify(model="sphere-plane", line="1,1,1", point="0,0,1")
        self.assertEqual("sphere", emitted(m_emit)["model"])
        Classify(model="sphere-plane", line="1,1,1", point="0,1")
        self.assertEqual("euclidean-plane", emitted(m_emit)["model"])

    def test_errors(self):
        with self.assertRaises(PointOnLine) as ctx:
            Classify(point="1/5,3/5")
        self.assertEqual(3, ctx.exception.exit_code)
        with self.assertRaises(PointOnLine):
            Classify(model="sphere", line="1,0,0", point="0,1,0")
        with self.assertRaises(ParseError) as ctx:
            Classify(point="0.5,0")
        self.assertEqual(2, ctx.exception.exit_code)
        with self.assertRaises(ParseError):
            Classify()
        with self.assertRaises(UnknownModel):
            Classify(model="torus", point="0,0")
        with self.assertRaises(PointOutsideSpace):
            Classify(point="2,0")

    @mock.patch("sys.stdout", new_callable=io.StringIO)
    def test_output_file_matches_stdout(self, m_stdout):
        with tempfile.TemporaryDirectory() as tmp:
            output = Path(tmp) / "result.json"
            Classify(point="1/2,1/4", output=str(output))
            self.assertEqual(m_stdout.getvalue(), output.read_text())
            self.assertEqual("Hyperbolic", json.loads(output.read_text())["kind"])


@mock.patch.dict(os.environ, CLEAN_ENV, clear=True)
class TestZones(unittest.TestCase):
    @mock.patch("postulatum._cli_modules.zones.emit_json")
    def test_exact(self, m_emit):
        Zones()
        result = emitted(m_emit)
        self.assertEqual("exact", result["mode"])
        self.assertEqual("1/4", result["degree_of_negation"]["area"]["Elliptic"])
        self.assertEqual("3/4", result["degree_of_negation"]["negation_degree_boundary"])
        self.assertEqual([["1", "1"], ["0", "1/2"]], result["line"])

    @mock.patch("postulatum._cli_modules.zones.emit_json")
    def test_grid(self, m_emit):
        Zones(mode="grid", samples=64)
        result = emitted(m_emit)
        self.assertEqual(8, result["resolution"])
        self.assertEqual({"Hyperbolic": "3/4", "Elliptic": "1/4"}, result["fractions"])
        self.assertEqual("1/4", result["exact_area"]["Elliptic"])

    @mock.patch("postulatum._cli_modules.zones.emit_json")
    def test_mc_is_deterministic(self, m_emit):
        Zones(mode="mc", samples=200, seed=5)
        first = emitted(m_emit)
        Zones(mode="mc", samples=200, seed=5, threads=3)
        self.assertEqual(first, emitted(m_emit))
        self.assertEqual(5, first["seed"])

    @mock.patch("postulatum._cli_modules.zones.emit_json")
    def test_svg(self, m_emit):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "zones.svg"
            Zones(svg=str(path))
            root = ET.fromstring(path.read_text())
            polygons = list(root.iter("{http://www.w3.org/2000/svg}polygon"))
            self.assertEqual(len(emitted(m_emit)["zone_map"]["cells"]), len(polygons))

    def test_bad_mode(self):
        with self.assertRaises(ParseError):
            Zones(mode="fast")


@mock.patch.dict(os.environ, CLEAN_ENV, clear=True)
class TestSDenied(unittest.TestCase):
    @mock.patch("postulatum._cli_modules.sdenied.emit_json")
    def test_models(self, m_emit):
        expected = {
            "square": True,
            "sphere": False,
            "euclidean-plane": False,
            "sphere-plane": True,
            "hyperbolic-disk": False,
        }
        for model, denied in expected.items():
            SDenied(model=model, budget=40)
            self.assertEqual(denied, emitted(m_emit)["denied"], model)

    @mock.patch("postulatum._cli_modules.sdenied.emit_json")
    def test_custom_chord(self, m_emit):
        SDenied(line="1/2,0:1/2,1", budget=40)
        self.assertEqual([["1/2", "0"], ["1/2", "1"]], emitted(m_emit)["witnesses"]["Hyperbolic"]["line"])

    def test_unknown_model(self):
        with self.assertRaises(UnknownModel):
            SDenied(model="torus")


@mock.patch.dict(os.environ, CLEAN_ENV, clear=True)
class TestVerify(unittest.TestCase):
    @mock.patch("postulatum._cli_modules.verify.emit_json")
    def test_json(self, m_emit):
        Verify(json_=True)
        result = emitted(m_emit)
        self.assertTrue(result["passed"])
        self.assertEqual(6, len(result["claims"]))
        self.assertEqual("1/2", result["e_position"])

    @mock.patch("postulatum._cli_modules.verify.log_results")
    def test_table(self, m_log_results):
        Verify(e_position="1/3")
        m_log_results.assert_called_once()

    def test_e_outside_side(self):
        with self.assertRaises(PointOutsideSpace):
            Verify(e_position="1")

    @mock.patch("postulatum._cli_modules.verify.log_results")
    @mock.patch("postulatum._cli_modules.verify.run_claims")
    def test_failure(self, m_run, m_log_results):
        m_run.return_value = [ClaimResult("D is elliptic", False, "D is Hyperbolic")]
        with self.assertRaises(VerificationFailed) as ctx:
            Verify()
        self.assertEqual(["D is elliptic"], ctx.exception.failed)
        self.assertEqual(1, ctx.exception.exit_code)


@mock.patch.dict(os.environ, CLEAN_ENV, clear=True)
class TestExploreFinite(unittest.TestCase):
    @mock.patch("postulatum._cli_modules.explore_finite.emit_json")
    def test_report(self, m_emit):
        ExploreFinite(samples=50, seed=2)
        result = emitted(m_emit)
        self.assertEqual(50, result["samples"])
        self.assertEqual(50, sum(result["counts"].values()))
