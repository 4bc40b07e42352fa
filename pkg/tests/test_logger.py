import io
import logging
import unittest

import mock
from postulatum._logger import AppFilter, PrintMsg, init_postulatum_cli_logger


def record(level=logging.INFO, **extra):
    rec = logging.LogRecord("postulatum", level, __file__, 1, "msg", None, None)
    for key, value in extra.items():
        setattr(rec, key, value)
    return rec


class TestAppFilter(unittest.TestCase):
    def test_level_tag(self):
        rec = record(logging.WARNING)
        AppFilter(colour=False).filter(rec)
        self.assertEqual("[WARN   ] : ", rec.color_loglevel)

    def test_coloured_tag(self):
        rec = record(logging.ERROR)
        AppFilter().filter(rec)
        self.assertTrue(rec.color_loglevel.startswith(PrintMsg.red))
        self.assertIn("[ERROR  ]", rec.color_loglevel)

    def test_nametag(self):
        rec = record(nametag="")
        AppFilter().filter(rec)
        self.assertEqual("", rec.color_loglevel)
        rec = record(nametag=PrintMsg.PASS)
        AppFilter(colour=False).filter(rec)
        self.assertEqual("[PASS   ] : ", rec.color_loglevel)


class TestCliLogger(unittest.TestCase):
    def setUp(self):
        self.log = logging.getLogger("postulatum")
        self.handlers = list(self.log.handlers)
        self.level = self.log.level

    def tearDown(self):
        self.log.handlers = self.handlers
        self.log.setLevel(self.level)

    def test_writes_plain_tags_to_a_pipe(self):
        stream = io.StringIO()
        log = init_postulatum_cli_logger("info", stream=stream)
        self.assertEqual(logging.INFO, log.level)
        log.info("hello")
        self.assertIn("[INFO   ] : hello", stream.getvalue())
        self.assertNotIn("\x1b", stream.getvalue())

    @mock.patch.dict("os.environ", {"NO_COLOR": "1"})
    def test_no_color(self):
        stream = mock.Mock()
        stream.isatty.return_value = True
        init_postulatum_cli_logger(stream=stream)
        self.assertFalse(self.log.handlers[-1].filters[0].colour)
