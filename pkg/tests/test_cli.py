import unittest

import mock
from postulatum._cli import _setup_logging, _welcome, get_installed_version, main
from postulatum.exceptions import DomainError, ParseError, PostulatumException


class TestCli(unittest.TestCase):
    @mock.patch("postulatum._cli.LOG.error")
    @mock.patch("postulatum._cli._welcome", autospec=True)
    @mock.patch("postulatum._cli.get_installed_version", autospec=True)
    @mock.patch("postulatum._cli_core.CliCore")
    @mock.patch("postulatum._cli._setup_logging", autospec=True)
    @mock.patch("postulatum._common_utils.exit_with_code", autospec=True)
    @mock.patch("sys.argv", autospec=True)
    @mock.patch("signal.signal", autospec=True)
    def test_main(
        self, m_signal, m_argv, m_exit, m_log_setup, m_cli, m_ver, m_welcome, m_error
    ):
        mock_clicore_instantiation = mock.MagicMock()
        mock_clicore_instantiation.parsed_args = mock.MagicMock()
        m_cli.return_value = mock_clicore_instantiation
        main(cli_core_class=m_cli, exit_func=m_exit)
        self.assertEqual(True, m_signal.called)
        self.assertEqual(True, m_log_setup.called)
        self.assertEqual(True, m_welcome.called)
        self.assertEqual(True, m_ver.called)
        self.assertEqual(False, m_exit.called)
        m_cli.assert_called_once()
        m_error.assert_not_called()

        m_welcome.side_effect = PostulatumException("an error")
        main(cli_core_class=m_cli, exit_func=m_exit)
        m_error.assert_called_once_with("an error", exc_info=False)
        m_exit.assert_called_once_with(1)

        m_welcome.side_effect = None
        m_error.reset_mock()
        m_exit.reset_mock()
        m_cli.side_effect = TypeError("another error")
        main(cli_core_class=m_cli, exit_func=m_exit)
        m_error.assert_called_once_with(
            "%s %s", "TypeError", "another error", exc_info=False
        )
        m_exit.assert_called_once_with(1)

    @mock.patch("postulatum._cli.LOG.error")
    @mock.patch("postulatum._cli._welcome", autospec=True)
    @mock.patch("postulatum._cli._setup_logging", autospec=True)
    @mock.patch("sys.argv", autospec=True)
    @mock.patch("signal.signal", autospec=True)
    def test_exit_codes(self, m_signal, m_argv, m_log_setup, m_welcome, m_error):
        for error, code in [
            (ParseError("0.5"), 2),
            (DomainError("point on line"), 3),
            (PostulatumException("failed"), 1),
        ]:
            m_exit = mock.Mock()
            m_cli = mock.MagicMock()
            m_cli.return_value.run.side_effect = error
            main(cli_core_class=m_cli, exit_func=m_exit)
            m_exit.assert_called_once_with(code)

    @mock.patch("postulatum._cli.LOG.setLevel")
    @mock.patch("postulatum._common_utils.exit_with_code", autospec=True)
    def test_setup_logging(self, m_exit, m_setLevel):
        _setup_logging([], exit_func=m_exit)
        m_setLevel.assert_called_once_with("INFO")
        self.assertEqual(False, m_exit.called)
        for debug_flag in ["-d", "--debug"]:
            m_setLevel.reset_mock()
            _setup_logging([debug_flag], exit_func=m_exit)
            m_setLevel.assert_called_once_with("DEBUG")
            self.assertEqual(False, m_exit.called)
        for quiet_flag in ["-q", "--quiet"]:
            m_setLevel.reset_mock()
            _setup_logging([quiet_flag], exit_func=m_exit)
            m_setLevel.assert_called_once_with("ERROR")
            self.assertEqual(False, m_exit.called)
        m_setLevel.reset_mock()
        _setup_logging(["-d", "-q"], exit_func=m_exit)
        self.assertEqual(True, m_exit.called)

    @mock.patch("postulatum._cli.get_distribution", autospec=True)
    def test_get_installed_version(self, mock_get_distribution):
        mock_get_distribution.return_value.version = "0.1.0"
        self.assertEqual("0.1.0", get_installed_version())
        mock_get_distribution.side_effect = TypeError("test")
        self.assertIn("local source", get_installed_version())

    @mock.patch("postulatum._cli.get_installed_version", autospec=True)
    @mock.patch("postulatum._cli.LOG", autospec=True)
    def test__welcome(self, mock_log, mock_version):
        mock_version.return_value = "0.1.0"
        _welcome()
        self.assertEqual(2, mock_log.info.call_count)
        mock_log.warning.assert_not_called()
