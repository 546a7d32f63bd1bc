import logging
import sys

import pytest

import utils.logger as logger_module
from utils.logger import APP_NAME, logger


@pytest.fixture
def fresh_logging(monkeypatch):
    root_logger = logging.getLogger()
    saved = root_logger.handlers[:]
    monkeypatch.setattr(logger_module, "_configured", False)
    yield root_logger
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)
    for handler in saved:
        root_logger.addHandler(handler)


def test_console_handler_writes_to_stderr(fresh_logging):
    logger_module.setup_logging(log_file=False)
    console = [h for h in fresh_logging.handlers if type(h) is logging.StreamHandler]
    assert len(console) == 1
    assert console[0].stream is sys.stderr
    assert console[0].level == logging.INFO
    assert not any(isinstance(h, logging.FileHandler) for h in fresh_logging.handlers)


def test_setup_runs_once(fresh_logging):
    logger_module.setup_logging(log_file=False)
    handlers = fresh_logging.handlers[:]
    logger_module.setup_logging(log_file=False)
    assert fresh_logging.handlers == handlers


def test_check_id_prefixes_the_message(caplog):
    with caplog.at_level(logging.INFO, logger=APP_NAME):
        logger.info("Verified", check="TR2")
    assert "[TR2] Verified" in caplog.messages
