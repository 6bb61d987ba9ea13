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

from logging import getLogger
from os import environ
from typing import Optional

import wrapt
from opentelemetry import trace
from opentelemetry.sdk.resources import Resource
from opentelemetry.sdk.trace import TracerProvider
from opentelemetry.sdk.trace.export import (
    ConsoleSpanExporter,
    SimpleSpanProcessor,
    SpanExporter,
)

from quirc.harness.environment_variables import QUIRC_TRACES_EXPORTER
from quirc.version import __version__

logger = getLogger(__name__)

SERVICE_NAME = "quirc-workbench"
TRACER_NAME = "quirc.harness"

_provider: Optional[TracerProvider] = None


def configure_tracing(
    exporter: Optional[SpanExporter] = None,
) -> TracerProvider:
    """Builds the workbench tracer provider.

    An explicit ``exporter`` wins; otherwise :envvar:`QUIRC_TRACES_EXPORTER`
    selects ``console`` or nothing.
    """
    global _provider  # pylint: disable=global-statement
    provider = TracerProvider(
        resource=Resource.create(
            {"service.name": SERVICE_NAME, "service.version": __version__}
        )
    )
    if exporter is None:
        name = environ.get(QUIRC_TRACES_EXPORTER, "none").strip().lower()
        if name == "console":
            exporter = ConsoleSpanExporter()
        elif name not in ("", "none"):
            logger.warning("Unknown traces exporter %r; spans dropped", name)
    if exporter is not None:
        provider.add_span_processor(SimpleSpanProcessor(exporter))
    _provider = provider
    return provider


def get_tracer() -> trace.Tracer:
    if _provider is None:
        return trace.get_tracer(TRACER_NAME, __version__)
    return _provider.get_tracer(TRACER_NAME, __version__)


def traced(name: str):
    """Decorator factory: runs the wrapped call inside span ``name`` and
    records any exception on it."""

    @wrapt.decorator
    def wrapper(wrapped, instance, args, kwargs):
        # pylint: disable=unused-argument
        with get_tracer().start_as_current_span(
            name, record_exception=True, set_status_on_exception=True
        ):
            return wrapped(*args, **kwargs)

    return wrapper
