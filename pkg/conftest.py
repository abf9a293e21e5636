import logging

import pytest


@pytest.fixture(autouse=True)
def _reset_qcolour_log_handlers():
    """Drop CLI log handlers so none outlives the captured stream it wraps"""
    yield
    root = logging.getLogger()
    for handler in list(root.handlers):
        if getattr(handler, 'qcolour', False):
            root.removeHandler(handler)
