import io
import json
import tempfile
import unittest
from pathlib import Path

import mock
from postulatum._common_utils import (
    dump_json,
    emit_json,
    exit_with_code,
    merge_nested_dict,
    write_text,
)
from postulatum.exceptions import OutputError


class TestCommonUtils(unittest.TestCase):
    def test_exit_with_code(self):
        with self.assertRaises(SystemExit) as ctx:
            exit_with_code(3)
        self.assertEqual(3, ctx.exception.code)
        with mock.patch("postulatum._common_utils.LOG") as m_log:
            with self.assertRaises(SystemExit):
                exit_with_code(2, "bad flags")
            m_log.error.assert_called_once_with("bad flags")

    def test_merge_nested_dict(self):
        old = {"a": 1, "nested": {"x": 1, "y": 2}}
        merge_nested_dict(old, {"b": 2, "nested": {"y": 3}})
        self.assertEqual({"a": 1, "b": 2, "nested": {"x": 1, "y": 3}}, old)

    def test_dump_json_is_canonical(self):
        self.assertEqual(dump_json({"b": 1, "a": [1, 2]}), dump_json({"a": [1, 2], "b": 1}))
        self.assertTrue(dump_json({}).endswith("\n"))

    @mock.patch("sys.stdout", new_callable=io.StringIO)
    def test_emit_json(self, m_stdout):
        with tempfile.TemporaryDirectory() as tmp:
            output = Path(tmp) / "nested" / "result.json"
            text = emit_json({"kind": "Elliptic"}, str(output))
            self.assertEqual(text, m_stdout.getvalue())
            self.assertEqual({"kind": "Elliptic"}, json.loads(output.read_text()))

    def test_write_text_failure(self):
        with tempfile.TemporaryDirectory() as tmp:
            blocker = Path(tmp) / "file"
            blocker.write_text("")
            with self.assertRaises(OutputError) as ctx:
                write_text(blocker / "result.json", "{}")
            self.assertEqual(4, ctx.exception.exit_code)
