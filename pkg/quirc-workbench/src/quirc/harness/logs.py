# Copyright The QuIRC Workbench Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Span-aware log records.

:func:`enable_log_correlation` registers a log-record factory that stamps
``quircTraceID``, ``quircSpanID`` and ``quircExperiment`` on every record.
With :envvar:`QUIRC_LOG_CORRELATION` set to ``true`` (or
``set_logging_format=True``) it also calls ``logging.basicConfig`` with
:data:`DEFAULT_LOGGING_FORMAT`, or :envvar:`QUIRC_LOG_FORMAT` when given.
"""

import logging
from contextlib import contextmanager
from contextvars import ContextVar
from os import environ
from typing import Optional

from opentelemetry.trace import (
    INVALID_SPAN,
    INVALID_SPAN_CONTEXT,
    get_current_span,
)

from quirc.harness.environment_variables import (
    QUIRC_LOG_CORRELATION,
    QUIRC_LOG_FORMAT,
    QUIRC_LOG_LEVEL,
)

DEFAULT_LOGGING_FORMAT = (
    "%(asctime)s %(levelname)s [%(name)s] "
    "[experiment=%(quircExperiment)s trace_id=%(quircTraceID)s "
    "span_id=%(quircSpanID)s] - %(message)s"
)

LEVELS = {
    "debug": logging.DEBUG,
    "info": logging.INFO,
    "warning": logging.WARNING,
    "error": logging.ERROR,
}

_experiment: ContextVar[str] = ContextVar("quirc_experiment", default="")
_old_factory = None


@contextmanager
def experiment_scope(kind: str):
    token = _experiment.set(kind)
    try:
        yield
    finally:
        _experiment.reset(token)


def enable_log_correlation(
    set_logging_format: Optional[bool] = None,
    logging_format: Optional[str] = None,
    log_level: Optional[int] = None,
):
    global _old_factory  # pylint: disable=global-statement
    if _old_factory is None:
        old_factory = logging.getLogRecordFactory()
        _old_factory = old_factory

        def record_factory(*args, **kwargs):
            record = old_factory(*args, **kwargs)
            record.quircSpanID = "0"
            record.quircTraceID = "0"
            record.quircExperiment = _experiment.get()
            span = get_current_span()
            if span != INVALID_SPAN:
                ctx = span.get_span_context()
                if ctx != INVALID_SPAN_CONTEXT:
                    record.quircSpanID = format(ctx.span_id, "016x")
                    record.quircTraceID = format(ctx.trace_id, "032x")
            return record

        logging.setLogRecordFactory(record_factory)

    if set_logging_format is None:
        set_logging_format = (
            environ.get(QUIRC_LOG_CORRELATION, "false").lower() == "true"
        )
    if log_level is None:
        log_level = LEVELS.get(environ.get(QUIRC_LOG_LEVEL, "").lower())
    log_level = log_level or logging.INFO
    if set_logging_format:
        log_format = logging_format or environ.get(QUIRC_LOG_FORMAT)
        logging.basicConfig(
            format=log_format or DEFAULT_LOGGING_FORMAT, level=log_level
        )
    logging.getLogger("quirc").setLevel(log_level)


def disable_log_correlation():
    global _old_factory  # pylint: disable=global-statement
    if _old_factory is not None:
        logging.setLogRecordFactory(_old_factory)
        _old_factory = None
